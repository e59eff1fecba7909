//! Type densities, trivial-type densities and class-group predictions.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::distributions::{q_pochhammer, q_pochhammer_limit};
use crate::error::{Error, Result};
use crate::euler::{euler_product, Certified, PrimeSet};
use crate::masses::{c_poly, selmer_term};
use crate::qtype::QImprimitiveType;
use crate::rational::{self, integer, pow};

/// The five local constants for degree `n = 2m`.
///
/// `a, c, d, e` are exact. `b` is the Euler product over `p ≡ 3 (mod 4)`,
/// exactly zero (and flagged divergent) for `n = 2`. `e` is only meaningful
/// when `4 | n`; otherwise it is zero and `e_defined` is false.
#[derive(Debug, Clone, PartialEq)]
pub struct Abcde {
    pub n: usize,
    pub a: BigRational,
    pub b: Certified,
    pub c: BigRational,
    pub d: BigRational,
    pub e: BigRational,
    pub e_defined: bool,
}

fn half_degree(n: usize) -> Result<usize> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    Ok(n / 2)
}

/// `c(m, p) / c(2m, p)`.
fn local_ratio(m: usize, p: u64) -> BigRational {
    c_poly(m).eval(p) / c_poly(2 * m).eval(p)
}

pub fn abcde(n: usize, prime_bound: u64) -> Result<Abcde> {
    let m = half_degree(n)?;
    let r2 = local_ratio(m, 2);
    let two_m = |j: i64| pow(2, -(j * m as i64));
    let (e, e_defined) = if n.is_multiple_of(4) {
        let mp = n / 4;
        (
            c_poly(mp).eval(2) / c_poly(n).eval(2) * pow(2, -8 * mp as i64),
            true,
        )
    } else {
        (BigRational::zero(), false)
    };
    let b = euler_product(
        &PrimeSet::residue_class(4, 3),
        prime_bound,
        m as u32,
        selmer_term(n)?,
    );
    Ok(Abcde {
        n,
        a: &r2 * two_m(1),
        b,
        c: &r2 * two_m(2),
        d: &r2 * two_m(3),
        e,
        e_defined,
    })
}

/// A type density `constant + b_coeff · b`.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeDensity {
    pub ty: QImprimitiveType,
    pub constant: BigRational,
    pub b_coeff: BigRational,
    pub value: Certified,
    /// Set when the density does not depend on the Euler product.
    pub exact: Option<BigRational>,
}

fn affine(
    ty: QImprimitiveType,
    constant: BigRational,
    b_coeff: BigRational,
    b: &Certified,
) -> TypeDensity {
    let exact = if b_coeff.is_zero() || b.divergent {
        Some(constant.clone())
    } else {
        None
    };
    let value = match &exact {
        Some(r) => Certified::exact(r),
        None => {
            let k = rational::to_f64(&constant);
            let s = rational::to_f64(&b_coeff);
            let v = k + s * b.value;
            Certified::new(
                v,
                s.abs() * b.error + 4.0 * f64::EPSILON * (k.abs() + (s * b.value).abs()),
            )
        }
    };
    TypeDensity {
        ty,
        constant,
        b_coeff,
        value,
        exact,
    }
}

/// Densities of the six types among degree-`n` fields, in the order of
/// [`QImprimitiveType::ALL`].
pub fn type_density_table(n: usize, prime_bound: u64) -> Result<Vec<TypeDensity>> {
    let k = abcde(n, prime_bound)?;
    let one = BigRational::one();
    let zero = BigRational::zero();
    let two = integer(2);
    let u = &one - &k.a + &k.d - &k.e;
    let v = &k.a - &k.c - &two * &k.d + &two * &k.e;
    let rows = vec![
        (QImprimitiveType::A1, k.e.clone(), zero.clone()),
        (QImprimitiveType::A2, &k.c - &k.e, zero.clone()),
        (QImprimitiveType::B1, zero.clone(), u.clone()),
        (QImprimitiveType::B2, zero.clone(), v.clone()),
        (QImprimitiveType::B3, &u + &k.d - &k.e, -u.clone()),
        (QImprimitiveType::B4, v.clone(), -v.clone()),
    ];
    let constants: BigRational = rows.iter().map(|r| r.1.clone()).sum();
    let coeffs: BigRational = rows.iter().map(|r| r.2.clone()).sum();
    if constants != one || !coeffs.is_zero() {
        return Err(Error::IdentityFailure(format!(
            "type densities sum to {constants} + {coeffs}·b"
        )));
    }
    Ok(rows
        .into_iter()
        .map(|(ty, c, s)| affine(ty, c, s, &k.b))
        .collect())
}

/// `∏_p (1 - c(m,p)/c(2m,p) · p^{-m})` over all primes.
pub fn trivial_type_density(n: usize, prime_bound: u64) -> Result<Certified> {
    let m = half_degree(n)?;
    Ok(euler_product(
        &PrimeSet::All,
        prime_bound,
        m as u32,
        selmer_term(n)?,
    ))
}

fn unit_rank(r1: usize, r2: usize) -> Result<usize> {
    if r1 + r2 == 0 {
        return Err(Error::InvalidParameters(
            "signature must have r1 + r2 >= 1".into(),
        ));
    }
    Ok(r1 + r2 - 1)
}

/// Probability that the class group has 2-rank `rho` among fields of
/// signature `(r1, r2)` with trivial Q-imprimitive type.
pub fn class_rank_distribution(r1: usize, r2: usize, rho: usize) -> Result<Certified> {
    let u = unit_rank(r1, r2)?;
    let exp = (rho * u + rho * (rho + 1) / 2) as i64;
    let prefactor = q_pochhammer(4, u) / (q_pochhammer(2, u) * pow(2, exp) * q_pochhammer(2, rho));
    let num = q_pochhammer_limit(2, 1e-15);
    let den = q_pochhammer_limit(4, 1e-15);
    // num ∈ [num.value - num.error, num.value], likewise den.
    let den_low = den.value - den.error;
    let ratio = num.value / den.value;
    let ratio_err = num.error / den_low + num.value * den.error / (den_low * den.value);
    let p = rational::to_f64(&prefactor);
    Ok(Certified::new(
        p * ratio,
        p * ratio_err + 4.0 * f64::EPSILON * (p * ratio).abs(),
    ))
}

/// `n`-th moment `∏_{i=1}^{n} (1 + 2^{i - r1 - r2})`.
pub fn class_moments(r1: usize, r2: usize, n: usize) -> Result<BigRational> {
    unit_rank(r1, r2)?;
    let s = (r1 + r2) as i64;
    Ok((1..=n as i64)
        .map(|i| BigRational::one() + pow(2, i - s))
        .product())
}

/// Average number of 2-torsion elements of the narrow class group for
/// trivial Q-imprimitive type.
pub fn narrow_avg_2torsion(r1: usize, r2: usize) -> Result<BigRational> {
    unit_rank(r1, r2)?;
    let exp = if r1 > 0 { -(r2 as i64) } else { 1 - r2 as i64 };
    Ok(BigRational::one() + pow(2, exp))
}
