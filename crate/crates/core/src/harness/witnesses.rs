//! Cliques named in the planarity and ring-graph arguments, stored as
//! exponent patterns and instantiated over concrete primes.

use serde::Serialize;

use crate::arith::ModulePair;
use crate::closed_form::Property;
use crate::graph::IdealGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProofWitness {
    pub name: &'static str,
    /// Property the clique rules out: a K5 kills planarity, a K4 the ring property.
    pub refutes: Property,
    pub argument: &'static str,
    pub alpha: &'static [u32],
    pub beta: &'static [u32],
    pub clique: &'static [&'static [u32]],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub name: &'static str,
    pub m: u64,
    pub n: u64,
    pub vertices: Vec<u64>,
    pub is_clique: bool,
}

impl ProofWitness {
    fn value(primes: &[u64], exps: &[u32]) -> u64 {
        primes.iter().zip(exps).map(|(&p, &e)| p.pow(e)).product()
    }

    pub fn pair(&self, primes: &[u64]) -> ModulePair {
        ModulePair::from_exponents(primes, self.alpha, self.beta).expect("witness pattern is a module pair")
    }

    pub fn vertices(&self, primes: &[u64]) -> Vec<u64> {
        self.clique.iter().map(|e| Self::value(primes, e)).collect()
    }

    /// Builds the graph and checks that every two witness vertices are adjacent.
    pub fn check(&self, primes: &[u64]) -> WitnessCheck {
        let pair = self.pair(primes);
        let g = IdealGraph::build(&pair);
        let vertices = self.vertices(primes);
        let present = vertices.iter().all(|&d| g.index_of(d).is_ok());
        let distinct = {
            let mut v = vertices.clone();
            v.sort_unstable();
            v.dedup();
            v.len() == vertices.len()
        };
        let adjacent = vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| g.has_labeled_edge(a, b)));
        WitnessCheck {
            name: self.name,
            m: pair.m().value(),
            n: pair.n().value(),
            is_clique: present && distinct && adjacent,
            vertices,
        }
    }

    pub fn clique_size(&self) -> usize {
        self.clique.len()
    }
}

const P: Property = Property::Planar;
const RING: Property = Property::Ring;

/// Each entry instantiates the smallest exponents for which the argument
/// applies.
#[rustfmt::skip]
pub const PROOF_WITNESSES: &[ProofWitness] = &[
    ProofWitness { name: "four-primes-in-n", refutes: P, argument: "s' >= 4", alpha: &[1, 1, 1, 1], beta: &[1, 1, 1, 1], clique: &[&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[1, 1]] },
    ProofWitness { name: "prime-power-beta-6", refutes: P, argument: "s' = 1, beta1 >= 6", alpha: &[6], beta: &[6], clique: &[&[1], &[2], &[3], &[4], &[5]] },
    ProofWitness { name: "one-prime-n-four-primes-m", refutes: P, argument: "s' = 1, s >= 4", alpha: &[1, 1, 1, 1], beta: &[1], clique: &[&[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[0, 1, 1], &[0, 1, 0, 1]] },
    ProofWitness { name: "cofactor-alpha2-5", refutes: P, argument: "s' = 1, s = 2, alpha2 >= 5", alpha: &[1, 5], beta: &[1], clique: &[&[0, 1], &[0, 2], &[0, 3], &[0, 4], &[0, 5]] },
    ProofWitness { name: "two-primes-beta1-3", refutes: P, argument: "s' = 1, s = 2, beta1 >= 3", alpha: &[3, 1], beta: &[3], clique: &[&[1], &[2], &[0, 1], &[1, 1], &[2, 1]] },
    ProofWitness { name: "beta1-2-alpha2-2", refutes: P, argument: "s' = 1, s = 2, beta1 = 2, alpha2 >= 2", alpha: &[2, 2], beta: &[2], clique: &[&[1], &[0, 1], &[1, 1], &[0, 2], &[1, 2]] },
    ProofWitness { name: "three-primes-alpha2-2", refutes: P, argument: "s' = 1, s = 3, alpha2 >= 2", alpha: &[1, 2, 1], beta: &[1], clique: &[&[0, 1], &[0, 0, 1], &[0, 2], &[0, 1, 1], &[0, 2, 1]] },
    ProofWitness { name: "three-primes-beta1-2", refutes: P, argument: "s' = 1, s = 3, beta1 >= 2", alpha: &[2, 1, 1], beta: &[2], clique: &[&[1], &[0, 1], &[0, 0, 1], &[1, 1], &[0, 1, 1]] },
    ProofWitness { name: "both-betas-2", refutes: P, argument: "s' = 2, beta1, beta2 >= 2", alpha: &[2, 2], beta: &[2, 2], clique: &[&[1], &[2], &[0, 1], &[1, 1], &[2, 1]] },
    ProofWitness { name: "beta2-2-alpha1-2", refutes: P, argument: "s' = 2, beta2 >= 2, alpha1 >= 2", alpha: &[2, 2], beta: &[1, 2], clique: &[&[1], &[2], &[0, 1], &[1, 1], &[2, 1]] },
    ProofWitness { name: "beta2-2-third-prime", refutes: P, argument: "s' = 2, beta2 >= 2, s >= 3", alpha: &[1, 2, 1], beta: &[1, 2], clique: &[&[1], &[0, 1], &[1, 1], &[0, 0, 1], &[1, 0, 1]] },
    ProofWitness { name: "beta2-3", refutes: P, argument: "s' = 2, beta2 >= 3", alpha: &[1, 3], beta: &[1, 3], clique: &[&[1], &[0, 1], &[0, 2], &[1, 1], &[1, 2]] },
    ProofWitness { name: "beta2-2-alpha2-5", refutes: P, argument: "s' = 2, beta2 = 2, alpha2 >= 5", alpha: &[1, 5], beta: &[1, 2], clique: &[&[0, 1], &[0, 2], &[0, 3], &[0, 4], &[0, 5]] },
    ProofWitness { name: "squarefree-n-alpha3-2", refutes: P, argument: "s' = 2, beta = (1, 1), alpha3 >= 2", alpha: &[1, 1, 2], beta: &[1, 1], clique: &[&[1], &[0, 0, 1], &[0, 0, 2], &[1, 0, 1], &[1, 0, 2]] },
    ProofWitness { name: "squarefree-n-alpha1-2", refutes: P, argument: "s' = 2, beta = (1, 1), s >= 3, alpha1 >= 2", alpha: &[2, 1, 1], beta: &[1, 1], clique: &[&[1], &[2], &[0, 0, 1], &[1, 0, 1], &[2, 0, 1]] },
    ProofWitness { name: "three-primes-n-four-m", refutes: P, argument: "s' = 3, s >= 4", alpha: &[1, 1, 1, 1], beta: &[1, 1, 1], clique: &[&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[1, 0, 0, 1]] },
    ProofWitness { name: "three-primes-alpha1-3", refutes: P, argument: "s' = 3, alpha1 >= 3", alpha: &[3, 1, 1], beta: &[1, 1, 1], clique: &[&[1], &[2], &[3], &[0, 1], &[0, 0, 1]] },
    ProofWitness { name: "three-primes-beta1-2-full", refutes: P, argument: "s' = 3, beta1 >= 2", alpha: &[2, 1, 1], beta: &[2, 1, 1], clique: &[&[1], &[0, 1], &[0, 0, 1], &[1, 1], &[1, 0, 1]] },
    ProofWitness { name: "three-primes-alpha-2-2", refutes: P, argument: "s' = 3, alpha1 = alpha2 = 2", alpha: &[2, 2, 1], beta: &[1, 1, 1], clique: &[&[1], &[2], &[0, 1], &[0, 2], &[1, 1]] },
    ProofWitness { name: "three-primes-alpha3-2", refutes: P, argument: "s' = 3, alpha = (1, 1, 2)", alpha: &[1, 1, 2], beta: &[1, 1, 1], clique: &[&[0, 0, 1], &[0, 0, 2], &[0, 1, 1], &[0, 1, 2], &[0, 1]] },
    ProofWitness { name: "ring-prime-power-beta-5", refutes: RING, argument: "ring case 1, beta1 = 5", alpha: &[5], beta: &[5], clique: &[&[1], &[2], &[3], &[4]] },
    ProofWitness { name: "ring-cofactor-alpha2-4", refutes: RING, argument: "ring case 2, alpha2 = 4", alpha: &[1, 4], beta: &[1], clique: &[&[0, 1], &[0, 2], &[0, 3], &[0, 4]] },
    ProofWitness { name: "ring-square-second-alpha2-4", refutes: RING, argument: "ring case 5, alpha2 = 4", alpha: &[1, 4], beta: &[1, 2], clique: &[&[0, 1], &[0, 2], &[0, 3], &[0, 4]] },
    ProofWitness { name: "ring-two-chains-alpha1-4", refutes: RING, argument: "ring case 7, alpha1 = 4", alpha: &[4, 1], beta: &[1, 1], clique: &[&[1], &[2], &[3], &[4]] },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deciders::{is_planar, is_ring_graph};

    #[test]
    fn every_witness_is_a_clique() {
        assert!(PROOF_WITNESSES.len() >= 10);
        for primes in [[2u64, 3, 5, 7], [11, 13, 17, 19], [7, 5, 3, 2]] {
            for w in PROOF_WITNESSES {
                let c = w.check(&primes);
                assert!(c.is_clique, "{} with {primes:?}: {c:?}", w.name);
                let expected = match w.refutes {
                    Property::Planar => 5,
                    _ => 4,
                };
                assert_eq!(w.clique_size(), expected);
            }
        }
    }

    #[test]
    fn witnessed_graphs_fail_the_property() {
        for w in PROOF_WITNESSES {
            let g = IdealGraph::build(&w.pair(&[2, 3, 5, 7]));
            match w.refutes {
                Property::Planar => assert!(!is_planar(&g).planar, "{}", w.name),
                _ => assert!(!is_ring_graph(&g).0, "{}", w.name),
            }
        }
    }

    #[test]
    fn named_instances() {
        let w = PROOF_WITNESSES.iter().find(|w| w.name == "prime-power-beta-6").unwrap();
        assert_eq!(w.vertices(&[2]), vec![2, 4, 8, 16, 32]);
        assert_eq!((w.check(&[2]).m, w.check(&[2]).n), (64, 64));
    }
}
