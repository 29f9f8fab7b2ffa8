use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use idealgraph::closed_form::Property;
use idealgraph::deciders::{
    is_planar, outerplanarity, ring_report, PlanarityCertificate, Subdivision, DEFAULT_CYCLE_CAP,
};
use idealgraph::export::{ExportFormat, ExportedGraph};
use idealgraph::harness::{
    cyclic_subgroup, figure_fixtures, verify_adjacency_criterion, Decisions, FigureDocument, HarnessError, SweepOptions,
};
use idealgraph::{predict, ArithError, IdealGraph, ModulePair, Prediction};
use serde::Serialize;

use crate::{Mode, OutputFormat};

pub enum Status {
    Ok,
    Disagreement,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(io::Error),
    Fixture(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Fixture(_) => 1,
            Self::Input(_) | Self::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Input(msg) | Self::Fixture(msg) => f.write_str(msg),
            Self::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        Self::Input(e.to_string())
    }
}

impl From<HarnessError> for CliError {
    fn from(e: HarnessError) -> Self {
        Self::Input(e.to_string())
    }
}

fn write_output(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct Classification {
    m: u64,
    n: u64,
    vertices: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    structural: Option<Decisions>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<Prediction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    planarity_witness: Option<Subdivision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outerplanarity_witness: Option<Subdivision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitive_cycles: Option<Vec<Vec<u64>>>,
}

fn set(labels: &[u64]) -> String {
    let inner: Vec<String> = labels.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn describe_witness(sub: &Subdivision) -> String {
    let mut s = format!("{} witness {}", sub.kind, set(&sub.branch_vertices));
    if !sub.is_direct() {
        let paths: Vec<String> = sub
            .paths
            .iter()
            .map(|p| p.iter().map(u64::to_string).collect::<Vec<_>>().join("-"))
            .collect();
        s.push_str(&format!(" via paths {}", paths.join(" ")));
    }
    s
}

pub fn classify(m: u64, n: u64, mode: Mode, format: OutputFormat) -> Result<Status, CliError> {
    let pair = ModulePair::new(m, n)?;
    let g = IdealGraph::build(&pair);
    let mut c = Classification {
        m,
        n,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        structural: None,
        closed_form: None,
        agreement: None,
        planarity_witness: None,
        outerplanarity_witness: None,
        primitive_cycles: None,
    };
    if mode != Mode::ClosedForm {
        let planarity = is_planar(&g);
        let (outerplanar, outer_cert) = outerplanarity(&g);
        let ring = ring_report(&g, DEFAULT_CYCLE_CAP);
        c.structural = Some(Decisions {
            planar: planarity.planar,
            outerplanar,
            ring: ring.decision,
        });
        if let PlanarityCertificate::ForbiddenSubdivision(sub) = planarity.certificate {
            c.planarity_witness = Some(sub);
        }
        if let idealgraph::deciders::OuterplanarCertificate::ForbiddenSubdivision(sub) = outer_cert {
            c.outerplanarity_witness = Some(sub);
        }
        c.primitive_cycles = ring.primitive_cycles;
    }
    if mode != Mode::Structural {
        c.closed_form = Some(predict(&pair));
    }
    if let (Some(s), Some(p)) = (&c.structural, &c.closed_form) {
        c.agreement = Some(Property::ALL.iter().all(|&q| s.get(q) == p.get(q)));
    }

    let mut out = io::stdout().lock();
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &c).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            writeln!(out, "{pair}: {} vertices, {} edges", c.vertices, c.edges)?;
            let answers: Vec<String> = Property::ALL
                .iter()
                .map(|&q| {
                    let value = c
                        .structural
                        .map_or_else(|| c.closed_form.as_ref().unwrap().get(q), |s| s.get(q));
                    let mut s = format!("{q}={value}");
                    if let Some(p) = &c.closed_form {
                        let cases: Vec<String> = p.cases(q).iter().map(u8::to_string).collect();
                        if !cases.is_empty() {
                            s.push_str(&format!("(case {})", cases.join(",")));
                        }
                        if c.structural.is_some_and(|st| st.get(q) != p.get(q)) {
                            s.push_str(&format!("[closed form says {}]", p.get(q)));
                        }
                    }
                    s
                })
                .collect();
            writeln!(out, "{}", answers.join(", "))?;
            if let Some(sub) = &c.planarity_witness {
                writeln!(out, "nonplanar: {}", describe_witness(sub))?;
            } else if let Some(sub) = &c.outerplanarity_witness {
                writeln!(out, "not outerplanar: {}", describe_witness(sub))?;
            }
            if let Some(ok) = c.agreement {
                writeln!(out, "agreement={}", if ok { "ok" } else { "MISMATCH" })?;
            }
        }
    }
    Ok(if c.agreement == Some(false) {
        Status::Disagreement
    } else {
        Status::Ok
    })
}

pub fn graph(m: u64, n: u64, format: ExportFormat, out: Option<&Path>) -> Result<Status, CliError> {
    let pair = ModulePair::new(m, n)?;
    let exported = ExportedGraph::from_ideal_graph(&IdealGraph::build(&pair));
    write_output(&exported.render(format), out)?;
    Ok(Status::Ok)
}

pub fn sweep(max_m: u64, oracle_bound: u64, jobs: Option<usize>, out: Option<&Path>) -> Result<Status, CliError> {
    let mut options = SweepOptions::new(max_m);
    options.oracle_bound = oracle_bound;
    options.jobs = jobs;
    let report = idealgraph::harness::sweep(&options)?;
    if let Some(path) = out {
        let file = BufWriter::new(fs::File::create(path)?);
        report.write_jsonl(file)?;
    }
    let mut stdout = io::stdout().lock();
    writeln!(
        stdout,
        "pairs_checked={} max_m={} oracle_bound={}",
        report.pairs_checked, max_m, oracle_bound
    )?;
    for (name, count) in [
        ("mismatches", report.mismatches.len()),
        ("certificate_failures", report.certificate_failures.len()),
        ("oracle_failures", report.oracle_failures.len()),
        ("rank_equivalence_failures", report.rank_equivalence_failures.len()),
        ("implication_failures", report.implication_failures.len()),
        ("two_chain_failures", report.two_chain_failures.len()),
    ] {
        writeln!(stdout, "{name}={count}")?;
    }
    for x in &report.mismatches {
        writeln!(
            stdout,
            "mismatch m={} n={} {}: structural={} closed_form={}",
            x.m, x.n, x.property, x.structural, x.closed_form
        )?;
    }
    writeln!(stdout, "result={}", if report.passed() { "pass" } else { "FAIL" })?;
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::Disagreement
    })
}

pub fn figures(p1: u64, p2: u64, p3: u64, out_dir: &Path) -> Result<Status, CliError> {
    let fixtures = figure_fixtures(p1, p2, p3)?;
    // every figure is checked before anything is written
    let docs = fixtures
        .iter()
        .map(|f| {
            FigureDocument::build(f)
                .map_err(|d| CliError::Fixture(format!("figure {} does not match: {d:?}", f.figure)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    fs::create_dir_all(out_dir)?;
    let mut stdout = io::stdout().lock();
    for doc in &docs {
        let path = out_dir.join(doc.file_name());
        fs::write(&path, doc.to_json())?;
        writeln!(
            stdout,
            "figure {}: m={} n={} edges={} isolated={} -> {}",
            doc.figure,
            doc.graph.m,
            doc.graph.n,
            doc.graph.edges.len(),
            doc.graph.isolated.len(),
            path.display()
        )?;
    }
    Ok(Status::Ok)
}

pub fn oracle(m: u64, n: u64) -> Result<Status, CliError> {
    let pair = ModulePair::new(m, n)?;
    let g = IdealGraph::build(&pair);
    let audit = verify_adjacency_criterion(&pair);
    let mut out = io::stdout().lock();
    writeln!(out, "d1\td2\tsubgroups_meet\tlcm_rule\tagree")?;
    let vs = g.vertices();
    let images: Vec<_> = vs.iter().map(|&d| cyclic_subgroup(d, &pair)).collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let meet = images[i].intersection(&images[j]).any(|&x| x != 0);
            let rule = g.has_labeled_edge(vs[i], vs[j]);
            writeln!(
                out,
                "{}\t{}\t{meet}\t{rule}\t{}",
                vs[i],
                vs[j],
                if meet == rule { "yes" } else { "NO" }
            )?;
        }
    }
    writeln!(
        out,
        "pairs={} adjacent={} disagreements={}",
        audit.pairs_checked,
        audit.adjacent_pairs,
        audit.disagreements.len()
    )?;
    Ok(if audit.holds() {
        Status::Ok
    } else {
        Status::Disagreement
    })
}
