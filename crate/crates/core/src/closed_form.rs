//! Closed-form classification of `G_n(Z_m)` from the exponent patterns of
//! `m` and `n`.
//!
//! Each property is characterized by eight factorization patterns. A pattern
//! fixes the number of primes of `m` and, per symbolic prime, a range for its
//! exponent in `m` (`alpha`) and in `n` (`beta`). A pair matches when some
//! assignment of its primes to the symbolic primes satisfies every range.

use serde::{Deserialize, Serialize};

use crate::arith::{Factorization, ModulePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Planar,
    Outerplanar,
    Ring,
}

impl Property {
    pub const ALL: [Property; 3] = [Property::Planar, Property::Outerplanar, Property::Ring];

    pub fn name(self) -> &'static str {
        match self {
            Property::Planar => "planar",
            Property::Outerplanar => "outerplanar",
            Property::Ring => "ring",
        }
    }
}

impl std::fmt::Display for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Inclusive exponent range; `hi = None` is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentRange {
    pub lo: u32,
    pub hi: Option<u32>,
}

impl ExponentRange {
    pub const fn exactly(e: u32) -> Self {
        Self { lo: e, hi: Some(e) }
    }

    pub const fn between(lo: u32, hi: u32) -> Self {
        Self { lo, hi: Some(hi) }
    }

    pub const fn at_least(lo: u32) -> Self {
        Self { lo, hi: None }
    }

    pub fn contains(&self, e: u32) -> bool {
        e >= self.lo && self.hi.is_none_or(|hi| e <= hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSlot {
    pub alpha: ExponentRange,
    pub beta: ExponentRange,
}

const fn slot(alpha: ExponentRange, beta: ExponentRange) -> PrimeSlot {
    PrimeSlot { alpha, beta }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasePattern {
    pub id: u8,
    pub slots: Vec<PrimeSlot>,
}

impl CasePattern {
    /// Whether some ordering of the pair's primes fits the slots.
    pub fn matches(&self, alpha: &[u32], beta: &[u32]) -> bool {
        if alpha.len() != self.slots.len() {
            return false;
        }
        let mut used = vec![false; alpha.len()];
        self.assign(0, alpha, beta, &mut used)
    }

    fn assign(&self, slot: usize, alpha: &[u32], beta: &[u32], used: &mut [bool]) -> bool {
        if slot == self.slots.len() {
            return true;
        }
        let s = &self.slots[slot];
        for i in 0..alpha.len() {
            if used[i] || !s.alpha.contains(alpha[i]) || !s.beta.contains(beta[i]) {
                continue;
            }
            used[i] = true;
            let ok = self.assign(slot + 1, alpha, beta, used);
            used[i] = false;
            if ok {
                return true;
            }
        }
        false
    }

    /// Human-readable shape, e.g. `m = p1^a1·p2, n = p1^2`.
    pub fn describe(&self) -> String {
        let fmt_exp = |p: usize, r: &ExponentRange, sym: &str| -> Option<String> {
            match (r.lo, r.hi) {
                (0, Some(0)) => None,
                (1, Some(1)) => Some(format!("p{p}")),
                (lo, Some(hi)) if lo == hi => Some(format!("p{p}^{lo}")),
                _ => Some(format!("p{p}^{sym}{p}")),
            }
        };
        let join = |parts: Vec<String>| {
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("·")
            }
        };
        let m = join(
            self.slots
                .iter()
                .enumerate()
                .filter_map(|(i, s)| fmt_exp(i + 1, &s.alpha, "a"))
                .collect(),
        );
        let n = join(
            self.slots
                .iter()
                .enumerate()
                .filter_map(|(i, s)| fmt_exp(i + 1, &s.beta, "b"))
                .collect(),
        );
        let mut bounds = Vec::new();
        for (i, s) in self.slots.iter().enumerate() {
            for (sym, r) in [("a", &s.alpha), ("b", &s.beta)] {
                if r.hi != Some(r.lo) {
                    match r.hi {
                        Some(hi) if r.lo > 1 => bounds.push(format!("{}<={sym}{}<={hi}", r.lo, i + 1)),
                        Some(hi) => bounds.push(format!("{sym}{}<={hi}", i + 1)),
                        None if r.lo > 1 => bounds.push(format!("{sym}{}>={}", i + 1, r.lo)),
                        None => {}
                    }
                }
            }
        }
        if bounds.is_empty() {
            format!("m = {m}, n = {n}")
        } else {
            format!("m = {m}, n = {n}, {}", bounds.join(", "))
        }
    }
}

/// The eight patterns characterizing one property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTable {
    pub property: Property,
    pub cases: Vec<CasePattern>,
}

use ExponentRange as R;

fn case(id: u8, slots: &[PrimeSlot]) -> CasePattern {
    CasePattern {
        id,
        slots: slots.to_vec(),
    }
}

impl CaseTable {
    /// Planarity: eight cases, the bounds 5 and 4 being where a K5 appears.
    pub fn planar() -> Self {
        Self {
            property: Property::Planar,
            cases: vec![
                case(1, &[slot(R::at_least(1), R::between(1, 5))]),
                case(
                    2,
                    &[
                        slot(R::at_least(1), R::exactly(1)),
                        slot(R::between(1, 4), R::exactly(0)),
                    ],
                ),
                case(
                    3,
                    &[slot(R::at_least(2), R::exactly(2)), slot(R::exactly(1), R::exactly(0))],
                ),
                case(
                    4,
                    &[
                        slot(R::at_least(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(0)),
                        slot(R::exactly(1), R::exactly(0)),
                    ],
                ),
                case(
                    5,
                    &[
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::between(2, 4), R::exactly(2)),
                    ],
                ),
                case(
                    6,
                    &[
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(0)),
                    ],
                ),
                case(
                    7,
                    &[
                        slot(R::between(1, 4), R::exactly(1)),
                        slot(R::between(1, 4), R::exactly(1)),
                    ],
                ),
                case(
                    8,
                    &[
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(1)),
                    ],
                ),
            ],
        }
    }

    /// Ring graphs: the planar table with every K5 bound tightened by one to
    /// exclude a K4.
    pub fn ring() -> Self {
        Self {
            property: Property::Ring,
            cases: vec![
                case(1, &[slot(R::at_least(1), R::between(1, 4))]),
                case(
                    2,
                    &[
                        slot(R::at_least(1), R::exactly(1)),
                        slot(R::between(1, 3), R::exactly(0)),
                    ],
                ),
                case(
                    3,
                    &[slot(R::at_least(2), R::exactly(2)), slot(R::exactly(1), R::exactly(0))],
                ),
                case(
                    4,
                    &[
                        slot(R::at_least(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(0)),
                        slot(R::exactly(1), R::exactly(0)),
                    ],
                ),
                case(
                    5,
                    &[
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::between(2, 3), R::exactly(2)),
                    ],
                ),
                case(
                    6,
                    &[
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(0)),
                    ],
                ),
                case(
                    7,
                    &[
                        slot(R::between(1, 3), R::exactly(1)),
                        slot(R::between(1, 3), R::exactly(1)),
                    ],
                ),
                case(
                    8,
                    &[
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(1)),
                        slot(R::exactly(1), R::exactly(1)),
                    ],
                ),
            ],
        }
    }

    /// Outerplanarity, written out on its own so that its agreement with the
    /// ring table is checked rather than shared.
    pub fn outerplanar() -> Self {
        let prime_power = case(1, &[slot(R::at_least(1), R::between(1, 4))]);
        let cofactor = case(
            2,
            &[
                slot(R::at_least(1), R::exactly(1)),
                slot(R::between(1, 3), R::exactly(0)),
            ],
        );
        let square_module = case(
            3,
            &[slot(R::at_least(2), R::exactly(2)), slot(R::exactly(1), R::exactly(0))],
        );
        let two_cofactors = case(
            4,
            &[
                slot(R::at_least(1), R::exactly(1)),
                slot(R::exactly(1), R::exactly(0)),
                slot(R::exactly(1), R::exactly(0)),
            ],
        );
        let square_second = case(
            5,
            &[
                slot(R::exactly(1), R::exactly(1)),
                slot(R::between(2, 3), R::exactly(2)),
            ],
        );
        let squarefree_pair = case(
            6,
            &[
                slot(R::exactly(1), R::exactly(1)),
                slot(R::exactly(1), R::exactly(1)),
                slot(R::exactly(1), R::exactly(0)),
            ],
        );
        let two_chains = case(
            7,
            &[
                slot(R::between(1, 3), R::exactly(1)),
                slot(R::between(1, 3), R::exactly(1)),
            ],
        );
        let squarefree_full = case(8, &[slot(R::exactly(1), R::exactly(1)); 3]);
        Self {
            property: Property::Outerplanar,
            cases: vec![
                prime_power,
                cofactor,
                square_module,
                two_cofactors,
                square_second,
                squarefree_pair,
                two_chains,
                squarefree_full,
            ],
        }
    }

    pub fn for_property(property: Property) -> Self {
        match property {
            Property::Planar => Self::planar(),
            Property::Outerplanar => Self::outerplanar(),
            Property::Ring => Self::ring(),
        }
    }

    /// Ids of all matching cases.
    pub fn matching_cases(&self, pair: &ModulePair) -> Vec<u8> {
        let alpha = pair.alpha();
        self.cases
            .iter()
            .filter(|c| c.matches(&alpha, pair.beta()))
            .map(|c| c.id)
            .collect()
    }

    pub fn classify(&self, pair: &ModulePair) -> (bool, Vec<u8>) {
        let cases = self.matching_cases(pair);
        (!cases.is_empty(), cases)
    }

    /// Every table obtained by moving one finite bound by one, as
    /// `(description, table)`.
    pub fn perturbations(&self) -> Vec<(String, CaseTable)> {
        let mut out = Vec::new();
        for (ci, c) in self.cases.iter().enumerate() {
            for (si, s) in c.slots.iter().enumerate() {
                for (which, range) in [("alpha", s.alpha), ("beta", s.beta)] {
                    let mut variants: Vec<(&str, i64, ExponentRange)> = Vec::new();
                    for delta in [-1i64, 1] {
                        let lo = i64::from(range.lo) + delta;
                        if lo >= 0 {
                            variants.push((
                                "lo",
                                delta,
                                ExponentRange {
                                    lo: lo as u32,
                                    hi: range.hi,
                                },
                            ));
                        }
                        if let Some(hi) = range.hi {
                            let hi = i64::from(hi) + delta;
                            if hi >= 0 {
                                variants.push((
                                    "hi",
                                    delta,
                                    ExponentRange {
                                        lo: range.lo,
                                        hi: Some(hi as u32),
                                    },
                                ));
                            }
                        }
                    }
                    for (end, delta, new_range) in variants {
                        if new_range.hi.is_some_and(|hi| hi < new_range.lo) {
                            continue;
                        }
                        let mut table = self.clone();
                        let target = &mut table.cases[ci].slots[si];
                        if which == "alpha" {
                            target.alpha = new_range;
                        } else {
                            target.beta = new_range;
                        }
                        out.push((
                            format!(
                                "{} case ({}) prime {} {which}.{end} {:+}",
                                self.property,
                                c.id,
                                si + 1,
                                delta
                            ),
                            table,
                        ));
                    }
                }
            }
        }
        out
    }
}

/// The three case tables used together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormTables {
    pub planar: CaseTable,
    pub outerplanar: CaseTable,
    pub ring: CaseTable,
}

impl Default for ClosedFormTables {
    fn default() -> Self {
        Self {
            planar: CaseTable::planar(),
            outerplanar: CaseTable::outerplanar(),
            ring: CaseTable::ring(),
        }
    }
}

impl ClosedFormTables {
    pub fn table(&self, property: Property) -> &CaseTable {
        match property {
            Property::Planar => &self.planar,
            Property::Outerplanar => &self.outerplanar,
            Property::Ring => &self.ring,
        }
    }

    pub fn with_table(mut self, table: CaseTable) -> Self {
        match table.property {
            Property::Planar => self.planar = table,
            Property::Outerplanar => self.outerplanar = table,
            Property::Ring => self.ring = table,
        }
        self
    }

    pub fn predict(&self, pair: &ModulePair) -> Prediction {
        let planar = self.planar.matching_cases(pair);
        let outerplanar = self.outerplanar.matching_cases(pair);
        let ring = self.ring.matching_cases(pair);
        Prediction {
            planar: !planar.is_empty(),
            outerplanar: !outerplanar.is_empty(),
            ring: !ring.is_empty(),
            matched_cases: MatchedCases {
                planar,
                outerplanar,
                ring,
            },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedCases {
    pub planar: Vec<u8>,
    pub outerplanar: Vec<u8>,
    pub ring: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub planar: bool,
    pub outerplanar: bool,
    pub ring: bool,
    pub matched_cases: MatchedCases,
}

impl Prediction {
    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::Planar => self.planar,
            Property::Outerplanar => self.outerplanar,
            Property::Ring => self.ring,
        }
    }

    pub fn cases(&self, property: Property) -> &[u8] {
        match property {
            Property::Planar => &self.matched_cases.planar,
            Property::Outerplanar => &self.matched_cases.outerplanar,
            Property::Ring => &self.matched_cases.ring,
        }
    }
}

pub fn classify_planar(pair: &ModulePair) -> (bool, Vec<u8>) {
    CaseTable::planar().classify(pair)
}

pub fn classify_ring(pair: &ModulePair) -> (bool, Vec<u8>) {
    CaseTable::ring().classify(pair)
}

pub fn classify_outerplanar(pair: &ModulePair) -> (bool, Vec<u8>) {
    CaseTable::outerplanar().classify(pair)
}

pub fn predict(pair: &ModulePair) -> Prediction {
    ClosedFormTables::default().predict(pair)
}

/// Sorted exponent multisets `m` may have for `G(Z_m)` to be planar.
pub const PLANAR_INTERSECTION_PATTERNS: &[&[u32]] = &[&[1], &[2], &[3], &[4], &[5], &[1, 1], &[1, 2], &[1, 1, 1]];
/// Same for ring graphs.
pub const RING_INTERSECTION_PATTERNS: &[&[u32]] = &[&[1], &[2], &[3], &[4], &[1, 1], &[1, 2], &[1, 1, 1]];
/// Same for outerplanarity.
pub const OUTERPLANAR_INTERSECTION_PATTERNS: &[&[u32]] = &[&[1], &[2], &[3], &[4], &[1, 1], &[1, 2], &[1, 1, 1]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionPrediction {
    pub planar: bool,
    pub outerplanar: bool,
    pub ring: bool,
    /// Sorted exponents of `m`.
    pub pattern: Vec<u32>,
}

impl IntersectionPrediction {
    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::Planar => self.planar,
            Property::Outerplanar => self.outerplanar,
            Property::Ring => self.ring,
        }
    }
}

/// The `n = m` specialization: membership of `m`'s exponent multiset in the
/// lists above.
pub fn classify_intersection_graph(m: &Factorization) -> IntersectionPrediction {
    let mut pattern = m.exponents();
    pattern.sort_unstable();
    let member = |list: &[&[u32]]| list.contains(&pattern.as_slice());
    IntersectionPrediction {
        planar: member(PLANAR_INTERSECTION_PATTERNS),
        outerplanar: member(OUTERPLANAR_INTERSECTION_PATTERNS),
        ring: member(RING_INTERSECTION_PATTERNS),
        pattern,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    fn pair(m: u64, n: u64) -> ModulePair {
        ModulePair::new(m, n).unwrap()
    }

    #[test]
    fn planar_examples() {
        assert_eq!(classify_planar(&pair(64, 32)), (true, vec![1]));
        assert_eq!(classify_planar(&pair(2 * 243, 2)), (false, vec![]));
        assert_eq!(classify_planar(&pair(210, 6)), (false, vec![]));
        assert_eq!(classify_planar(&pair(128, 64)), (false, vec![]));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(classify_ring(&pair(64, 32)), (false, vec![]));
        assert_eq!(classify_ring(&pair(2 * 81, 18)), (false, vec![]));
        assert_eq!(classify_ring(&pair(36, 6)), (true, vec![7]));
    }

    #[test]
    fn outerplanar_examples() {
        assert_eq!(classify_outerplanar(&pair(18, 18)), (true, vec![5]));
        assert_eq!(classify_outerplanar(&pair(32, 32)), (false, vec![]));
        assert_eq!(classify_outerplanar(&pair(30, 30)), (true, vec![8]));
    }

    #[test]
    fn case_matching_undoes_prime_order() {
        // n = p1 may be either prime of m
        assert_eq!(classify_planar(&pair(2 * 81, 3)).1, vec![2]);
        assert_eq!(classify_planar(&pair(2 * 81, 2)).1, vec![2]);
        assert_eq!(classify_planar(&pair(4 * 3, 4)).1, vec![3]);
        assert_eq!(classify_planar(&pair(2 * 9, 2 * 9)).1, vec![5]);
        assert_eq!(classify_planar(&pair(9 * 2, 9 * 2)).1, vec![5]);
        assert_eq!(classify_planar(&pair(30, 10)).1, vec![6]);
        assert_eq!(classify_planar(&pair(30, 15)).1, vec![6]);
        assert_eq!(classify_planar(&pair(2 * 3 * 5, 5)).1, vec![4]);
        assert!(classify_planar(&pair(8 * 3 * 5, 5)).1.is_empty());
    }

    #[test]
    fn smallest_two_prime_pairs() {
        assert_eq!(classify_planar(&pair(6, 2)).1, vec![2]);
        assert_eq!(classify_planar(&pair(6, 6)).1, vec![7]);
    }

    #[test]
    fn intersection_graph_patterns() {
        let p = classify_intersection_graph(&factorize(32).unwrap());
        assert!(p.planar && !p.ring && !p.outerplanar);
        let p = classify_intersection_graph(&factorize(18).unwrap());
        assert!(p.planar && p.ring && p.outerplanar);
        let p = classify_intersection_graph(&factorize(36).unwrap());
        assert!(!p.planar && !p.ring && !p.outerplanar);
        assert!(classify_intersection_graph(&factorize(7).unwrap()).ring);
    }

    #[test]
    fn patterns_agree_with_general_tables() {
        for m in 2..=5000u64 {
            let f = factorize(m).unwrap();
            let c = classify_intersection_graph(&f);
            let p = predict(&pair(m, m));
            for prop in Property::ALL {
                assert_eq!(c.get(prop), p.get(prop), "m = {m}, {prop}");
            }
        }
    }

    #[test]
    fn prime_values_do_not_matter() {
        let patterns: &[(&[u32], &[u32])] = &[
            (&[3], &[3]),
            (&[2, 4], &[1, 0]),
            (&[1, 3], &[1, 2]),
            (&[1, 1, 1], &[1, 1, 0]),
            (&[2, 1, 1], &[1, 0, 0]),
            (&[3, 3], &[1, 1]),
            (&[1, 1, 2], &[1, 1, 1]),
        ];
        for (alpha, beta) in patterns {
            let a = predict(&ModulePair::from_exponents(&[2, 3, 5], alpha, beta).unwrap());
            let b = predict(&ModulePair::from_exponents(&[11, 13, 17], alpha, beta).unwrap());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn tables_relate_as_stated() {
        assert_eq!(CaseTable::outerplanar().cases, CaseTable::ring().cases);
        for m in 2..=3000u64 {
            for n in (2..=m).filter(|n| m % n == 0) {
                let p = predict(&pair(m, n));
                assert_eq!(p.ring, p.outerplanar);
                assert!(!p.ring || p.planar);
            }
        }
    }

    #[test]
    fn prime_power_family_threshold() {
        for a in 1..=12u32 {
            for b in 1..=a {
                let p = predict(&pair(2u64.pow(a), 2u64.pow(b)));
                assert_eq!(p.planar, b <= 5);
                assert_eq!(p.ring, b <= 4);
            }
        }
    }

    #[test]
    fn descriptions() {
        let t = CaseTable::planar();
        assert_eq!(t.cases[0].describe(), "m = p1^a1, n = p1^b1, b1<=5");
        assert_eq!(t.cases[2].describe(), "m = p1^a1·p2, n = p1^2, a1>=2");
        assert_eq!(t.cases[4].describe(), "m = p1·p2^a2, n = p1·p2^2, 2<=a2<=4");
        assert_eq!(t.cases[7].describe(), "m = p1·p2·p3, n = p1·p2·p3");
    }

    #[test]
    fn perturbations_touch_one_bound() {
        let t = CaseTable::planar();
        let perturbed = t.perturbations();
        assert!(perturbed.len() > 30);
        for (_, p) in &perturbed {
            let diffs = t
                .cases
                .iter()
                .zip(&p.cases)
                .flat_map(|(a, b)| a.slots.iter().zip(&b.slots))
                .filter(|(a, b)| a != b)
                .count();
            assert_eq!(diffs, 1);
        }
        assert!(perturbed.iter().any(|(d, _)| d == "planar case (1) prime 1 beta.hi +1"));
    }
}
