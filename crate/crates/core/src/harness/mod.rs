//! Checks of the library against independent ground truth. The sweep is the
//! main entry point; the other submodules hold fixtures and oracles it and
//! the tests draw on.

mod figures;
mod oracle;
mod sweep;
mod witnesses;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith::{ArithError, ModulePair};
use crate::graph::IdealGraph;

pub use figures::{figure_fixtures, FigureDocument, FigureFixture, FixtureDiff};
pub use oracle::{cyclic_subgroup, oracle_adjacent, verify_adjacency_criterion, AdjacencyAudit};
pub use sweep::{
    sweep, valid_pairs, CertificateFailure, Decisions, Mismatch, PairFailure, PairRecord, PredictionSource, SweepLine,
    SweepOptions, SweepReport,
};
pub use witnesses::{ProofWitness, WitnessCheck, PROOF_WITNESSES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("primes {0}, {1}, {2} are not distinct")]
    PrimesNotDistinct(u64, u64, u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// For `m = p^a q^b` and `n = pq`: removing the vertices divisible by `n`
/// leaves exactly two components, the pure `p`-powers and the pure
/// `q`-powers, and each is a clique.
pub fn two_chain_check(pair: &ModulePair) -> Result<bool, HarnessError> {
    if pair.support_size() != 2 || pair.alpha().len() != 2 || pair.beta() != [1, 1] {
        return Err(HarnessError::Precondition(format!(
            "{pair} needs m with two primes and n their product"
        )));
    }
    let g = IdealGraph::build(pair);
    let n = pair.n().value();
    let keep: BTreeSet<u64> = g.vertices().iter().copied().filter(|d| d % n != 0).collect();
    let rest = g.induced_subgraph(&keep).expect("kept vertices exist");
    let primes: Vec<u64> = pair.m().primes().collect();
    let chain = |p: u64| -> BTreeSet<u64> {
        keep.iter()
            .copied()
            .filter(|&d| {
                let mut x = d;
                while x % p == 0 {
                    x /= p;
                }
                x == 1
            })
            .collect()
    };
    let expected: BTreeSet<BTreeSet<u64>> = primes.iter().map(|&p| chain(p)).collect();
    let components: BTreeSet<BTreeSet<u64>> = rest
        .connected_components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| rest.label(v)).collect())
        .collect();
    let cliques = components.iter().all(|c| {
        c.iter()
            .all(|&a| c.iter().all(|&b| a == b || rest.has_labeled_edge(a, b)))
    });
    Ok(components == expected && cliques)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn components(m: u64) -> Vec<BTreeSet<u64>> {
        let pair = ModulePair::new(m, 6).unwrap();
        let g = IdealGraph::build(&pair);
        let keep = g.vertices().iter().copied().filter(|d| d % 6 != 0).collect();
        let h = g.induced_subgraph(&keep).unwrap();
        h.connected_components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| h.label(v)).collect())
            .collect()
    }

    #[test]
    fn two_chain_examples() {
        let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<u64>>();
        assert!(two_chain_check(&ModulePair::new(36, 6).unwrap()).unwrap());
        assert_eq!(components(36), vec![set(&[2, 4]), set(&[3, 9])]);
        assert!(two_chain_check(&ModulePair::new(72, 6).unwrap()).unwrap());
        assert_eq!(components(72), vec![set(&[2, 4, 8]), set(&[3, 9])]);
        assert!(two_chain_check(&ModulePair::new(18, 6).unwrap()).unwrap());
        assert_eq!(components(18), vec![set(&[2]), set(&[3, 9])]);
    }

    #[test]
    fn two_chain_rejects_other_shapes() {
        for (m, n) in [(30, 6), (36, 36), (36, 12), (8, 2)] {
            let err = two_chain_check(&ModulePair::new(m, n).unwrap()).unwrap_err();
            assert!(matches!(err, HarnessError::Precondition(_)), "({m}, {n})");
        }
    }

    #[test]
    fn two_chain_holds_on_every_shape_up_to_2000() {
        let mut checked = 0;
        for m in 2..=2000u64 {
            let f = crate::arith::factorize(m).unwrap();
            if f.prime_count() != 2 {
                continue;
            }
            let n: u64 = f.primes().product();
            assert!(two_chain_check(&ModulePair::new(m, n).unwrap()).unwrap(), "m = {m}");
            checked += 1;
        }
        assert!(checked > 100);
    }
}
