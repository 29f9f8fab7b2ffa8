import init, { analyze, census, figures } from "./pkg/idealgraph_web.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

function el(name, attrs = {}, text) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

// Vertices on a circle in ascending order; isolated ones on an inner ring.
function draw(svg, graph, witness, radius = 220) {
  svg.replaceChildren();
  const isolated = new Set(graph.isolated);
  const outer = graph.vertices.filter((v) => !isolated.has(v.label));
  const inner = graph.vertices.filter((v) => isolated.has(v.label));
  const pos = new Map();
  const place = (list, r) =>
    list.forEach((v, i) => {
      const a = (2 * Math.PI * i) / Math.max(list.length, 1) - Math.PI / 2;
      pos.set(v.label, [r * Math.cos(a), r * Math.sin(a)]);
    });
  place(outer, radius);
  place(inner, outer.length ? radius * 0.45 : radius);

  const witnessEdges = new Set();
  const branch = new Set(witness ? witness.branch_vertices : []);
  if (witness) {
    for (const path of witness.paths) {
      for (let i = 0; i + 1 < path.length; i++) {
        const [a, b] = [path[i], path[i + 1]].sort((x, y) => x - y);
        witnessEdges.add(`${a}-${b}`);
      }
    }
  }
  for (const [a, b] of graph.edges) {
    const [x1, y1] = pos.get(a);
    const [x2, y2] = pos.get(b);
    const cls = witnessEdges.has(`${a}-${b}`) ? "edge witness" : "edge";
    svg.append(el("line", { x1, y1, x2, y2, class: cls }));
  }
  const r = graph.vertices.length > 30 ? 11 : 16;
  for (const v of graph.vertices) {
    const [x, y] = pos.get(v.label);
    const g = el("g", { class: branch.has(v.label) ? "vertex branch" : "vertex" });
    g.append(el("title", {}, v.ideal));
    g.append(el("circle", { cx: x, cy: y, r }));
    g.append(el("text", { x, y }, String(v.label)));
    svg.append(g);
  }
}

const mark = (b) => `<span class="${b ? "yes" : "no"}">${b}</span>`;

function decisionTable(a) {
  const rows = ["planar", "outerplanar", "ring"].map((p) => {
    const cases = a.closed_form.matched_cases[p];
    return `<tr><td>${p}</td><td>${mark(a.structural[p])}</td><td>${mark(a.closed_form[p])}</td>
      <td>${cases.length ? cases.join(", ") : "none"}</td></tr>`;
  });
  return `<table><tr><th>property</th><th>structural</th><th>closed form</th><th>cases</th></tr>${rows.join("")}</table>`;
}

function showAnalysis(a) {
  const witness = a.planarity_witness || a.outerplanarity_witness;
  draw($("graph"), a.graph, witness);
  let html = `<p><b>G<sub>${a.graph.n}</sub>(ℤ<sub>${a.graph.m}</sub>)</b>: ${a.graph.vertices.length} vertices,
    ${a.graph.edges.length} edges, ${a.graph.isolated.length} isolated</p>`;
  html += decisionTable(a);
  html += `<p>agreement: ${mark(a.agreement)}</p>`;
  if (witness) {
    const paths = witness.paths.map((p) => p.join("-")).join(", ");
    html += `<p>${a.planarity_witness ? "not planar" : "not outerplanar"}: ${witness.kind} subdivision on
      {${witness.branch_vertices.join(", ")}} (highlighted); paths ${paths}</p>`;
  }
  if (a.primitive_cycles) {
    html += `<p>cycle rank ${a.cycle_rank}, primitive cycles ${a.primitive_cycles.length}:
      ${a.primitive_cycles.map((c) => "(" + c.join(" ") + ")").join(" ") || "none"}</p>`;
  }
  $("analyze-result").innerHTML = html;
}

function guarded(errorBox, fn) {
  return (event) => {
    event.preventDefault();
    $(errorBox).textContent = "";
    try {
      fn();
    } catch (e) {
      $(errorBox).textContent = e.message || String(e);
    }
  };
}

async function main() {
  await init();

  $("analyze-form").addEventListener(
    "submit",
    guarded("analyze-error", () => showAnalysis(JSON.parse(analyze(+$("m").value, +$("n").value)))),
  );

  $("census-form").addEventListener(
    "submit",
    guarded("census-result", () => {
      const started = performance.now();
      const c = JSON.parse(census(+$("max-m").value));
      const ms = (performance.now() - started).toFixed(0);
      const list = c.mismatches.map(([m, n, p]) => `(${m}, ${n}, ${p})`).join(" ");
      $("census-result").innerHTML = `<table>
        <tr><th>pairs</th><th>planar</th><th>outerplanar</th><th>ring</th><th>mismatches</th></tr>
        <tr><td>${c.pairs}</td><td>${c.planar}</td><td>${c.outerplanar}</td><td>${c.ring}</td>
        <td>${c.mismatches.length}${list ? ": " + list : ""}</td></tr></table><p>${ms} ms</p>`;
    }),
  );

  $("figures-form").addEventListener(
    "submit",
    guarded("figures-result", () => {
      const docs = JSON.parse(figures(+$("p1").value, +$("p2").value, +$("p3").value));
      const box = document.createElement("div");
      box.className = "figures";
      for (const d of docs) {
        const fig = document.createElement("div");
        fig.className = "figure";
        const svg = el("svg", { viewBox: "-130 -130 260 260", width: 260, height: 260 });
        draw(svg, d.graph, null, 105);
        const s = d.structural;
        const caption = document.createElement("p");
        caption.textContent = `Figure ${d.figure}: m=${d.graph.m}, n=${d.graph.n}; planar ${s.planar}, outerplanar ${s.outerplanar}, ring ${s.ring}`;
        fig.append(svg, caption);
        box.append(fig);
      }
      $("figures-result").replaceChildren(box);
    }),
  );

  $("analyze-form").requestSubmit();
}

main();
