//! Exhaustive cross-check of the structural deciders against the closed-form
//! tables over every valid pair up to a bound.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::oracle::verify_adjacency_criterion;
use super::{two_chain_check, HarnessError};
use crate::arith::ModulePair;
use crate::closed_form::{classify_intersection_graph, ClosedFormTables, IntersectionPrediction, Prediction, Property};
use crate::deciders::{
    is_outerplanar, is_planar, is_ring_graph, outerplanarity, ring_report, test_planar, verify_certificate,
    verify_outerplanar_certificate, PlanarityCertificate, SubdivisionKind, DEFAULT_CYCLE_CAP,
};
use crate::graph::{Graph, IdealGraph};

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_m: u64,
    /// Pairs with `m` up to this bound also go through the subgroup oracle.
    pub oracle_bound: u64,
    /// Worker threads; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
    pub cycle_cap: usize,
    pub tables: ClosedFormTables,
}

impl SweepOptions {
    pub fn new(max_m: u64) -> Self {
        Self {
            max_m,
            oracle_bound: 500,
            jobs: None,
            cycle_cap: DEFAULT_CYCLE_CAP,
            tables: ClosedFormTables::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decisions {
    pub planar: bool,
    pub outerplanar: bool,
    pub ring: bool,
}

impl Decisions {
    /// Runs the three structural deciders without certificates.
    pub fn structural(g: &Graph) -> Self {
        Self {
            planar: test_planar(g),
            outerplanar: is_outerplanar(g),
            ring: is_ring_graph(g).0,
        }
    }

    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::Planar => self.planar,
            Property::Outerplanar => self.outerplanar,
            Property::Ring => self.ring,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionSource {
    /// The general case tables.
    CaseTable,
    /// The `n = m` exponent-pattern lists.
    IntersectionPattern,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub m: u64,
    pub n: u64,
    pub property: Property,
    pub source: PredictionSource,
    pub structural: bool,
    pub closed_form: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFailure {
    pub m: u64,
    pub n: u64,
    pub property: Property,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub m: u64,
    pub n: u64,
    pub detail: String,
}

/// Everything computed for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub m: u64,
    pub n: u64,
    pub vertices: usize,
    pub edges: usize,
    pub isolated: usize,
    pub structural: Decisions,
    pub closed_form: Prediction,
    /// Present when `n = m`.
    pub intersection: Option<IntersectionPrediction>,
    pub planarity_certificate_ok: bool,
    pub outerplanarity_certificate_ok: bool,
    /// Kind of forbidden subdivision found when not planar.
    pub planarity_witness: Option<SubdivisionKind>,
    pub cycle_rank: usize,
    pub free_rank: Option<usize>,
    pub pcp_holds: Option<bool>,
    pub k4_subdivision_free: bool,
    /// Rank/free-rank equivalence check; `None` when enumeration was skipped.
    pub rank_equivalence_ok: Option<bool>,
    /// Subgroup oracle agreement, when within the oracle bound.
    pub oracle_ok: Option<bool>,
    /// Two-chain clique structure, when `m` has two primes and `n` is their product.
    pub two_chain_ok: Option<bool>,
}

impl PairRecord {
    pub fn compute(pair: &ModulePair, options: &SweepOptions) -> Self {
        let g = IdealGraph::build(pair);
        let planarity = is_planar(&g);
        let planarity_certificate_ok = verify_certificate(&g, &planarity.certificate);
        let planarity_witness = match &planarity.certificate {
            PlanarityCertificate::ForbiddenSubdivision(sub) => Some(sub.kind),
            PlanarityCertificate::Embedding(_) => None,
        };
        let (outerplanar, outer_cert) = outerplanarity(&g);
        let outerplanarity_certificate_ok = verify_outerplanar_certificate(&g, &outer_cert);
        let ring = ring_report(&g, options.cycle_cap);
        let rank_equivalence_ok = ring
            .free_rank
            .map(|_| ring.is_consistent() && ring.planar == planarity.planar);
        let (m, n) = (pair.m().value(), pair.n().value());
        let two_chain_ok = two_chain_check(pair).ok();
        let summary = g.summary();
        Self {
            m,
            n,
            vertices: summary.vertices,
            edges: summary.edges,
            isolated: summary.isolated,
            structural: Decisions {
                planar: planarity.planar,
                outerplanar,
                ring: ring.decision,
            },
            closed_form: options.tables.predict(pair),
            intersection: (m == n).then(|| classify_intersection_graph(pair.m())),
            planarity_certificate_ok,
            outerplanarity_certificate_ok,
            planarity_witness,
            cycle_rank: ring.cycle_rank,
            free_rank: ring.free_rank,
            pcp_holds: ring.pcp_holds,
            k4_subdivision_free: ring.k4_subdivision_free,
            rank_equivalence_ok,
            oracle_ok: (m <= options.oracle_bound).then(|| verify_adjacency_criterion(pair).holds()),
            two_chain_ok,
        }
    }

    fn mismatches_against(&self, prediction: &Prediction) -> Vec<Mismatch> {
        let mut out = Vec::new();
        for property in Property::ALL {
            let structural = self.structural.get(property);
            let mut push = |source, closed_form| {
                if structural != closed_form {
                    out.push(Mismatch {
                        m: self.m,
                        n: self.n,
                        property,
                        source,
                        structural,
                        closed_form,
                    });
                }
            };
            push(PredictionSource::CaseTable, prediction.get(property));
            if let Some(ip) = &self.intersection {
                push(PredictionSource::IntersectionPattern, ip.get(property));
            }
        }
        out
    }

    pub fn mismatches(&self) -> Vec<Mismatch> {
        self.mismatches_against(&self.closed_form)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_m: u64,
    pub oracle_bound: u64,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub certificate_failures: Vec<CertificateFailure>,
    pub oracle_failures: Vec<PairFailure>,
    pub rank_equivalence_failures: Vec<PairFailure>,
    pub implication_failures: Vec<PairFailure>,
    pub two_chain_failures: Vec<PairFailure>,
    /// Pairs whose planar graph exhausted the chordless-cycle cap.
    pub capped_pairs: usize,
    pub elapsed: Duration,
    #[serde(skip)]
    pub records: Vec<PairRecord>,
}

/// One line of the streamed report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SweepLine {
    Pair(PairRecord),
    Summary(SweepReport),
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.certificate_failures.is_empty()
            && self.oracle_failures.is_empty()
            && self.rank_equivalence_failures.is_empty()
            && self.implication_failures.is_empty()
            && self.two_chain_failures.is_empty()
    }

    /// Mismatches the stored structural answers would produce against other
    /// tables. Structural work does not depend on the tables, so this equals
    /// the mismatch list of a fresh sweep with `tables`.
    pub fn replay(&self, tables: &ClosedFormTables) -> Vec<Mismatch> {
        self.records
            .iter()
            .flat_map(|r| {
                let pair = ModulePair::new(r.m, r.n).expect("recorded pairs are valid");
                r.mismatches_against(&tables.predict(&pair))
            })
            .collect()
    }

    /// Writes one JSON object per pair, then a summary line.
    pub fn write_jsonl(&self, mut out: impl Write) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, &SweepLine::Pair(r.clone()))?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &SweepLine::Summary(self.clone()))?;
        out.write_all(b"\n")
    }

    fn from_records(options: &SweepOptions, records: Vec<PairRecord>, elapsed: Duration) -> Self {
        let mut report = Self {
            max_m: options.max_m,
            oracle_bound: options.oracle_bound,
            pairs_checked: records.len(),
            mismatches: Vec::new(),
            certificate_failures: Vec::new(),
            oracle_failures: Vec::new(),
            rank_equivalence_failures: Vec::new(),
            implication_failures: Vec::new(),
            two_chain_failures: Vec::new(),
            capped_pairs: 0,
            elapsed,
            records: Vec::new(),
        };
        for r in &records {
            let (m, n) = (r.m, r.n);
            let fail = |detail: &str| PairFailure {
                m,
                n,
                detail: detail.to_owned(),
            };
            report.mismatches.extend(r.mismatches());
            for (ok, property) in [
                (r.planarity_certificate_ok, Property::Planar),
                (r.outerplanarity_certificate_ok, Property::Outerplanar),
            ] {
                if !ok {
                    report.certificate_failures.push(CertificateFailure { m, n, property });
                }
            }
            if r.oracle_ok == Some(false) {
                report
                    .oracle_failures
                    .push(fail("subgroup intersection disagrees with the lcm rule"));
            }
            match r.rank_equivalence_ok {
                Some(false) => report
                    .rank_equivalence_failures
                    .push(fail("rank/free-rank disagrees with PCP and K4-freeness")),
                None if r.structural.planar => report.capped_pairs += 1,
                _ => {}
            }
            let s = r.structural;
            if (s.outerplanar && !s.ring) || (s.ring && !s.planar) {
                report
                    .implication_failures
                    .push(fail("structural outerplanar => ring => planar broken"));
            }
            if r.closed_form.ring != r.closed_form.outerplanar {
                report
                    .implication_failures
                    .push(fail("closed-form ring and outerplanar differ"));
            }
            if r.two_chain_ok == Some(false) {
                report
                    .two_chain_failures
                    .push(fail("two-chain clique structure broken"));
            }
        }
        report.records = records;
        report
    }
}

/// All valid pairs `(m, n)` with `2 <= m <= max_m`, sorted.
pub fn valid_pairs(max_m: u64) -> Vec<(u64, u64)> {
    (2..=max_m)
        .flat_map(|m| (2..=m).filter(move |n| m % n == 0).map(move |n| (m, n)))
        .collect()
}

pub fn sweep(options: &SweepOptions) -> Result<SweepReport, HarnessError> {
    if options.max_m < 2 {
        return Err(HarnessError::Precondition(format!(
            "max m must be at least 2, got {}",
            options.max_m
        )));
    }
    let start = Instant::now();
    let pairs = valid_pairs(options.max_m);
    let run = || -> Vec<PairRecord> {
        pairs
            .par_iter()
            .map(|&(m, n)| PairRecord::compute(&ModulePair::new(m, n).expect("valid pair"), options))
            .collect()
    };
    let records = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| HarnessError::Precondition(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(SweepReport::from_records(options, records, start.elapsed()))
}
