//! Prime factorizations, divisor enumeration and the `(m, n)` module pair.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{value} is out of range: both m and n must be at least 2")]
    OutOfRange { value: u64 },
    #[error("Z_{n} is not a Z_{m}-module: {n} does not divide {m}")]
    NotAModule { m: u64, n: u64 },
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Unique prime factorization `p_1^a_1 ... p_s^a_s` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
    value: u64,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs in any order.
    ///
    /// Primality is not re-checked here; callers pass primes.
    pub fn from_factors(mut factors: Vec<(u64, u32)>) -> Result<Self, ArithError> {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_unstable();
        let value = factors
            .iter()
            .try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
            .unwrap_or(0);
        if value < 2 {
            return Err(ArithError::OutOfRange { value });
        }
        Ok(Self { factors, value })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|&(_, e)| e).collect()
    }

    /// Number of distinct primes (`s`).
    pub fn prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    /// Exponent of `prime` in this factorization, zero when absent.
    pub fn exponent_of(&self, prime: u64) -> u32 {
        self.factors.iter().find(|&&(p, _)| p == prime).map_or(0, |&(_, e)| e)
    }

    /// Exponent vector of a divisor `d` aligned to this factorization's primes.
    pub fn exponent_vector(&self, mut d: u64) -> Vec<u32> {
        self.factors
            .iter()
            .map(|&(p, _)| {
                let mut e = 0;
                while d.is_multiple_of(p) {
                    d /= p;
                    e += 1;
                }
                e
            })
            .collect()
    }

    /// All divisors `d` with `1 < d < value`, ascending.
    pub fn proper_nontrivial_divisors(&self) -> Vec<u64> {
        let mut divisors = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divisors.len();
            let mut power = 1u64;
            for _ in 0..e {
                power *= p;
                for i in 0..len {
                    divisors.push(divisors[i] * power);
                }
            }
        }
        divisors.sort_unstable();
        divisors.retain(|&d| d != 1 && d != self.value);
        divisors
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `k` by trial division.
pub fn factorize(k: u64) -> Result<Factorization, ArithError> {
    if k < 2 {
        return Err(ArithError::OutOfRange { value: k });
    }
    let mut rest = k;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut p = 3;
    while p * p <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors, value: k })
}

pub fn is_prime(k: u64) -> bool {
    k >= 2 && factorize(k).is_ok_and(|f| f.factors == [(k, 1)])
}

/// A validated pair `(m, n)` with `n | m`, so that `Z_n` is a `Z_m`-module.
///
/// `beta` holds the exponents of `n` aligned to the primes of `m` (zeros
/// allowed) and `support` the indices where `beta` is non-zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ModulePair {
    m: Factorization,
    n: Factorization,
    beta: Vec<u32>,
    support: Vec<usize>,
}

impl ModulePair {
    pub fn new(m: u64, n: u64) -> Result<Self, ArithError> {
        for value in [m, n] {
            if value < 2 {
                return Err(ArithError::OutOfRange { value });
            }
        }
        if !m.is_multiple_of(n) {
            return Err(ArithError::NotAModule { m, n });
        }
        let m = factorize(m)?;
        let n = factorize(n)?;
        let beta = m.exponent_vector(n.value());
        let support = beta
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(i, _)| i)
            .collect();
        Ok(Self { m, n, beta, support })
    }

    /// Builds the pair from exponent patterns over explicit primes.
    pub fn from_exponents(primes: &[u64], alpha: &[u32], beta: &[u32]) -> Result<Self, ArithError> {
        let pow = |exps: &[u32]| primes.iter().zip(exps).map(|(&p, &e)| p.pow(e)).product::<u64>();
        Self::new(pow(alpha), pow(beta))
    }

    pub fn m(&self) -> &Factorization {
        &self.m
    }

    pub fn n(&self) -> &Factorization {
        &self.n
    }

    pub fn alpha(&self) -> Vec<u32> {
        self.m.exponents()
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `s'`, the number of primes dividing `n`.
    pub fn support_size(&self) -> usize {
        self.support.len()
    }
}

impl std::fmt::Display for ModulePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G_{}(Z_{})", self.n.value(), self.m.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_divisors(k: u64) -> Vec<u64> {
        (2..k).filter(|d| k.is_multiple_of(*d)).collect()
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(36).unwrap().factors(), &[(2, 2), (3, 2)]);
        assert_eq!(factorize(128).unwrap().factors(), &[(2, 7)]);
        assert_eq!(factorize(30).unwrap().factors(), &[(2, 1), (3, 1), (5, 1)]);
        assert_eq!(factorize(1), Err(ArithError::OutOfRange { value: 1 }));
        assert_eq!(factorize(0), Err(ArithError::OutOfRange { value: 0 }));
    }

    #[test]
    fn divisor_examples() {
        let d = |k| factorize(k).unwrap().proper_nontrivial_divisors();
        assert_eq!(d(12), vec![2, 3, 4, 6]);
        assert!(d(7).is_empty());
        assert_eq!(d(36), naive_divisors(36));
        assert_eq!(d(36), vec![2, 3, 4, 6, 9, 12, 18]);
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(17, 17), 17);
        assert_eq!(gcd(9, 30), 3);
    }

    #[test]
    fn module_pair_examples() {
        let p = ModulePair::new(36, 6).unwrap();
        assert_eq!(p.beta(), &[1, 1]);
        assert_eq!(p.support(), &[0, 1]);
        assert_eq!(ModulePair::new(12, 5), Err(ArithError::NotAModule { m: 12, n: 5 }));
        let p = ModulePair::new(18, 18).unwrap();
        assert_eq!(p.beta(), &[1, 2]);
        assert_eq!(p.alpha(), vec![1, 2]);
        assert_eq!(ModulePair::new(1, 1), Err(ArithError::OutOfRange { value: 1 }));
        assert_eq!(ModulePair::new(12, 1), Err(ArithError::OutOfRange { value: 1 }));
        // zero entries are kept so beta stays aligned to m's primes
        let p = ModulePair::new(24, 8).unwrap();
        assert_eq!(p.beta(), &[3, 0]);
        assert_eq!(p.support_size(), 1);
    }

    #[test]
    fn divisor_count_formula_up_to_10k() {
        for m in 2..=10_000u64 {
            let f = factorize(m).unwrap();
            assert_eq!(
                f.proper_nontrivial_divisors().len() as u64,
                f.divisor_count() - 2,
                "m = {m}"
            );
        }
    }

    #[test]
    fn module_pair_validation_is_divisibility() {
        for m in 2..=300u64 {
            for n in 2..=m {
                assert_eq!(ModulePair::new(m, n).is_ok(), m % n == 0, "({m}, {n})");
            }
        }
    }

    fn trial_prime(p: u64) -> bool {
        p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
    }

    proptest! {
        #[test]
        fn factorization_multiplies_back(k in 2u64..=1_000_000) {
            let f = factorize(k).unwrap();
            let product: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(product, k);
            prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            for &(p, e) in f.factors() {
                prop_assert!(trial_prime(p));
                prop_assert!(e >= 1);
            }
        }

        #[test]
        fn gcd_times_lcm(a in 1u64..100_000, b in 1u64..100_000) {
            prop_assert_eq!(gcd(a, b) * lcm(a, b), a * b);
        }
    }
}
