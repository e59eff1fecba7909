//! Truncated Euler products with certified tail bounds.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;

use crate::rational;

/// Default truncation: primes up to `10^6`.
pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;

/// A floating value with a rigorous bound on its absolute error.
///
/// `divergent` marks an infinite product whose factors do not converge to a
/// nonzero limit; its value is then exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certified {
    pub value: f64,
    pub error: f64,
    pub divergent: bool,
}

impl Certified {
    pub fn new(value: f64, error: f64) -> Self {
        Self {
            value,
            error,
            divergent: false,
        }
    }

    /// The nearest float to an exact rational.
    pub fn exact(r: &BigRational) -> Self {
        let value = rational::to_f64(r);
        Self::new(value, value.abs() * f64::EPSILON)
    }

    pub fn divergent() -> Self {
        Self {
            value: 0.0,
            error: 0.0,
            divergent: true,
        }
    }

    pub fn lower(&self) -> f64 {
        self.value - self.error
    }

    pub fn upper(&self) -> f64 {
        self.value + self.error
    }

    /// Whether `x` lies in `[value - error, value + error]`.
    pub fn contains(&self, x: f64) -> bool {
        self.lower() <= x && x <= self.upper()
    }
}

impl fmt::Display for Certified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divergent {
            write!(f, "0 (divergent)")
        } else {
            write!(f, "{} ± {:e}", self.value, self.error)
        }
    }
}

/// A set of rational primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSet {
    Finite(BTreeSet<u64>),
    /// All primes `p ≡ residue (mod modulus)`.
    ResidueClass {
        modulus: u64,
        residue: u64,
    },
    All,
}

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet::Finite(BTreeSet::new())
    }

    pub fn finite(primes: impl IntoIterator<Item = u64>) -> Self {
        PrimeSet::Finite(primes.into_iter().collect())
    }

    pub fn residue_class(modulus: u64, residue: u64) -> Self {
        assert!(modulus > 0);
        PrimeSet::ResidueClass {
            modulus,
            residue: residue % modulus,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, PrimeSet::Finite(_))
    }

    /// Membership for a prime `p`.
    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::Finite(s) => s.contains(&p),
            PrimeSet::ResidueClass { modulus, residue } => p % modulus == *residue,
            PrimeSet::All => true,
        }
    }

    /// Members up to `bound`, ascending.
    pub fn primes_up_to(&self, bound: u64) -> Vec<u64> {
        match self {
            PrimeSet::Finite(s) => s.range(..=bound).copied().collect(),
            _ => primes_up_to(bound)
                .into_iter()
                .filter(|&p| self.contains(p))
                .collect(),
        }
    }
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `∏_{p ∈ set} (1 - t(p))` where `0 <= t(p) <= 2 p^{-decay}`.
///
/// Finite sets are multiplied out completely. Infinite sets are truncated at
/// `bound` and the tail is bounded by `Σ_{n > P} 2 n^{-decay}
/// <= 2 P^{1-decay} / (decay - 1)`, using `1 - ∏(1 - t) <= Σ t`. With
/// `decay <= 1` an infinite product diverges to zero.
pub fn euler_product(set: &PrimeSet, bound: u64, decay: u32, t: impl Fn(u64) -> f64) -> Certified {
    let (primes, tail) = match set {
        PrimeSet::Finite(s) => (s.iter().copied().collect::<Vec<_>>(), 0.0),
        _ => {
            if decay <= 1 {
                return Certified::divergent();
            }
            let bound = bound.max(2);
            let p = bound as f64;
            let tail = 2.0 * p.powi(1 - decay as i32) / (decay as f64 - 1.0);
            (set.primes_up_to(bound), tail)
        }
    };
    let mut value = 1.0f64;
    for &p in &primes {
        value *= 1.0 - t(p);
    }
    // Each factor carries a few ulps from evaluating t(p).
    let rounding = (primes.len() as f64 + 1.0) * 8.0 * f64::EPSILON;
    Certified::new(value, tail + rounding)
}
