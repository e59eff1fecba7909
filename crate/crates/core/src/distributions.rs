//! Closed-form counts of maximal totally isotropic subspaces and the exact
//! isotropy-rank laws for each Q-imprimitive type.
//!
//! Everything here is exact rational arithmetic. The only floating values
//! are the infinite q-Pochhammer products, which carry a certified bound.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::euler::Certified;
use crate::qtype::QImprimitiveType;
use crate::rational::{self, pow};

/// `(q)_m = ∏_{i=1}^{m} (1 - q^{-i})`, with `(q)_0 = 1`.
pub fn q_pochhammer(q: u64, m: usize) -> BigRational {
    let qb = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut qi = BigInt::one();
    for _ in 0..m {
        qi *= &qb;
        num *= &qi - 1;
        den *= &qi;
    }
    BigRational::new(num, den)
}

/// `(q)_∞` truncated once the tail bound `q^{-N}/(q-1)` drops below `tol`.
///
/// The partial products decrease, so the true value lies in
/// `[value - error, value]`.
pub fn q_pochhammer_limit(q: u64, tol: f64) -> Certified {
    assert!(q >= 2, "q-Pochhammer limit needs q >= 2");
    assert!(tol > 0.0, "tolerance must be positive");
    let qf = q as f64;
    let mut n = 0usize;
    let mut tail = 1.0 / (qf - 1.0);
    while tail >= tol {
        n += 1;
        tail /= qf;
    }
    let partial = rational::to_f64(&q_pochhammer(q, n));
    Certified::new(partial, tail + 2.0 * f64::EPSILON)
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::KOutOfRange { k, n })
    } else {
        Ok(())
    }
}

fn to_integer(r: BigRational) -> BigUint {
    assert!(r.is_integer(), "count {r} is not an integer");
    r.to_integer().to_biguint().expect("counts are nonnegative")
}

/// Number of MTIs in `H^t` (equivalently in `I^2 ⊞ H^t`):
/// `2^{t(t+1)/2} (4)_t / (2)_t`.
pub fn b_count(t: usize) -> BigUint {
    let exp = (t * (t + 1) / 2) as i64;
    to_integer(pow(2, exp) * q_pochhammer(4, t) / q_pochhammer(2, t))
}

/// Number of MTIs of `H^n ⊞ H^{n+m}` meeting the left block in dimension `k`.
pub fn d_count(n: usize, m: usize, k: usize) -> Result<BigUint> {
    check_k(n, k)?;
    let s = 2 * n + m;
    let exp = (s * (s + 1) / 2) as i64 - (k * (k + m)) as i64;
    let value = pow(2, exp) * q_pochhammer(4, n) * q_pochhammer(4, n + m)
        / (q_pochhammer(4, n - k) * q_pochhammer(2, k) * q_pochhammer(2, k + m));
    Ok(to_integer(value))
}

/// `C_δ(n, m, k) = 2^{-k(k+m)} (2)_{2n+m+δ} (4)_n (4)_{n+m}
///  / ((4)_{2n+m+δ} (4)_{n-k} (2)_k (2)_{k+m})`.
pub fn c_delta(delta: u8, n: usize, m: usize, k: usize) -> Result<BigRational> {
    if delta > 1 {
        return Err(Error::InvalidParameters(format!(
            "delta must be 0 or 1, got {delta}"
        )));
    }
    check_k(n, k)?;
    let s = 2 * n + m + delta as usize;
    Ok(pow(2, -((k * (k + m)) as i64))
        * q_pochhammer(2, s)
        * q_pochhammer(4, n)
        * q_pochhammer(4, n + m)
        / (q_pochhammer(4, s)
            * q_pochhammer(4, n - k)
            * q_pochhammer(2, k)
            * q_pochhammer(2, k + m)))
}

/// An exact probability law on isotropy ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    support: Vec<(usize, BigRational)>,
}

impl Distribution {
    pub fn new(mut support: Vec<(usize, BigRational)>) -> Result<Self> {
        support.sort_by_key(|(k, _)| *k);
        if support.iter().any(|(_, p)| p.is_negative()) {
            return Err(Error::InvalidParameters("negative probability".into()));
        }
        if support.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameters("repeated support point".into()));
        }
        Ok(Self { support })
    }

    /// A point mass at `k`.
    pub fn point(k: usize) -> Self {
        Self {
            support: vec![(k, BigRational::one())],
        }
    }

    pub fn support(&self) -> &[(usize, BigRational)] {
        &self.support
    }

    pub fn probability(&self, k: usize) -> BigRational {
        self.support
            .iter()
            .find(|(j, _)| *j == k)
            .map_or_else(BigRational::zero, |(_, p)| p.clone())
    }

    pub fn total(&self) -> BigRational {
        self.support.iter().map(|(_, p)| p.clone()).sum()
    }

    pub fn min_rank(&self) -> Option<usize> {
        self.support.first().map(|(k, _)| *k)
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.support.last().map(|(k, _)| *k)
    }

    /// Expected value of `f(k)`.
    pub fn expectation(&self, f: impl Fn(usize) -> BigRational) -> BigRational {
        self.support.iter().map(|(k, p)| p * f(*k)).sum()
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, p)) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {}", rational::fraction(p))?;
        }
        f.write_str("}")
    }
}

/// `C_1`-type law with a carried term: `c(0)` at `start`, then
/// `c(j) + c(j-1)/carry` in the interior, then `c(last)/carry` at the top.
fn carried_law(
    start: usize,
    top: usize,
    carry_exp: usize,
    coeff: impl Fn(usize) -> Result<BigRational>,
) -> Result<Distribution> {
    let carry = pow(2, -(carry_exp as i64));
    let mut support = Vec::with_capacity(top - start + 1);
    for k in start..=top {
        let j = k - start;
        let mut p = BigRational::zero();
        if k < top {
            p += coeff(j)?;
        }
        if k > start {
            p += coeff(j - 1)? * &carry;
        }
        support.push((k, p));
    }
    Distribution::new(support)
}

fn shifted_law(
    start: usize,
    top: usize,
    coeff: impl Fn(usize) -> Result<BigRational>,
) -> Result<Distribution> {
    (start..=top)
        .map(|k| coeff(k - start).map(|p| (k, p)))
        .collect::<Result<Vec<_>>>()
        .and_then(Distribution::new)
}

/// Law of the isotropy rank of a uniformly random MTI of `V ⊞ W` containing
/// the generating subspace of `ty`, for signature `(r1, r2)` with `r1 >= 2`
/// even.
pub fn isotropy_distribution(ty: QImprimitiveType, r1: usize, r2: usize) -> Result<Distribution> {
    use QImprimitiveType::*;
    if r1 < 2 || r1 % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "isotropy laws need r1 even and at least 2, got r1 = {r1}"
        )));
    }
    let h = r1 / 2;
    match ty {
        A1 => shifted_law(1, h, |j| c_delta(0, h - 1, r2 + 1, j)),
        A2 => shifted_law(1, h, |j| c_delta(0, h - 1, r2, j)),
        B1 => carried_law(0, h, r1 + r2 - 1, |j| c_delta(1, h - 1, r2, j)),
        B2 if r2 == 0 => {
            if h < 2 {
                return Err(Error::InvalidParameters(
                    "type B(ii) with r2 = 0 needs r1 >= 4".into(),
                ));
            }
            carried_law(1, h, r1 + r2 - 2, |j| c_delta(1, h - 2, 1, j))
        }
        B2 => carried_law(0, h, r1 + r2 - 2, |j| c_delta(1, h - 1, r2 - 1, j)),
        B3 => shifted_law(1, h, |j| c_delta(0, h - 1, r2, j)),
        B4 if r2 == 0 => {
            if h < 2 {
                return Err(Error::InvalidParameters(
                    "type B(iv) with r2 = 0 needs r1 >= 4".into(),
                ));
            }
            shifted_law(2, h, |j| c_delta(0, h - 2, 1, j))
        }
        B4 => shifted_law(1, h, |j| c_delta(0, h - 1, r2 - 1, j)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(2, 0), integer(1));
        assert_eq!(q_pochhammer(2, 1), ratio(1, 2));
        assert_eq!(q_pochhammer(4, 2), ratio(45, 64));
    }

    #[test]
    fn pochhammer_limits() {
        let two = q_pochhammer_limit(2, 1e-12);
        assert!((two.value - 0.2887880951).abs() < 1e-9);
        assert!(two.error < 1e-11);
        let four = q_pochhammer_limit(4, 1e-12);
        assert!((four.value - 0.6885375371).abs() < 1e-9);
        for m in 0..30 {
            assert!(two.value - two.error <= rational::to_f64(&q_pochhammer(2, m)));
        }
    }

    #[test]
    fn b_count_small_values() {
        assert_eq!(b_count(0), BigUint::from(1u32));
        assert_eq!(b_count(1), BigUint::from(3u32));
        assert_eq!(b_count(2), BigUint::from(15u32));
    }

    #[test]
    fn d_count_small_values() {
        assert_eq!(d_count(1, 0, 0).unwrap(), BigUint::from(6u32));
        assert_eq!(d_count(1, 0, 1).unwrap(), BigUint::from(9u32));
        assert_eq!(d_count(1, 0, 2), Err(Error::KOutOfRange { k: 2, n: 1 }));
    }

    #[test]
    fn c_delta_examples() {
        assert_eq!(c_delta(0, 1, 0, 0).unwrap(), ratio(2, 5));
        assert_eq!(c_delta(1, 1, 0, 0).unwrap(), ratio(16, 45));
        assert_eq!(c_delta(0, 1, 0, 1).unwrap(), ratio(3, 5));
        assert!(c_delta(2, 1, 0, 0).is_err());
        assert!(c_delta(0, 1, 0, 2).is_err());
    }

    #[test]
    fn distribution_examples() {
        use QImprimitiveType::*;
        let b1 = isotropy_distribution(B1, 4, 0).unwrap();
        assert_eq!(b1.support().len(), 3);
        assert_eq!(b1.probability(0), ratio(16, 45));
        assert_eq!(b1.probability(1), ratio(26, 45));
        assert_eq!(b1.probability(2), ratio(3, 45));

        let a1 = isotropy_distribution(A1, 4, 0).unwrap();
        assert_eq!(a1.probability(0), integer(0));
        assert_eq!(a1.probability(1), ratio(2, 3));
        assert_eq!(a1.probability(2), ratio(1, 3));

        let mixed = isotropy_distribution(B1, 2, 1).unwrap();
        assert_eq!(mixed.probability(0), ratio(4, 5));
        assert_eq!(mixed.probability(1), ratio(1, 5));

        assert_eq!(
            isotropy_distribution(B4, 4, 0).unwrap(),
            Distribution::point(2)
        );
    }

    #[test]
    fn invalid_signatures_are_rejected() {
        use QImprimitiveType::*;
        assert!(isotropy_distribution(B1, 0, 2).is_err());
        assert!(isotropy_distribution(B1, 3, 0).is_err());
        assert!(isotropy_distribution(B4, 2, 0).is_err());
        assert!(isotropy_distribution(B2, 2, 0).is_err());
    }

    #[test]
    fn s6_totally_real_b1_law() {
        let d = isotropy_distribution(QImprimitiveType::B1, 6, 0).unwrap();
        let expected = [512, 976, 190, 5];
        for (k, num) in expected.iter().enumerate() {
            assert_eq!(d.probability(k), ratio(*num, 1683));
        }
    }

    #[test]
    fn every_law_sums_to_one() {
        for ty in QImprimitiveType::ALL {
            for r1 in [2, 4, 6, 8] {
                for r2 in 0..4 {
                    if let Ok(d) = isotropy_distribution(ty, r1, r2) {
                        assert_eq!(d.total(), integer(1), "{ty} at ({r1},{r2})");
                    }
                }
            }
        }
    }
}
