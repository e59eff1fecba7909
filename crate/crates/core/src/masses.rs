//! Splitting symbols, partitions and local mass polynomials in `x = 1/p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::euler::{self, Certified, PrimeSet};
use crate::rational::{self, integer, pow};

/// A polynomial in `x = 1/p` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MassPoly {
    coeffs: Vec<BigRational>,
}

impl MassPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients from degree 0 upwards, without trailing zeros.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Value at `x = 1/p`.
    pub fn eval(&self, p: u64) -> BigRational {
        let x = BigRational::new(BigInt::one(), BigInt::from(p));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }
}

impl Add for MassPoly {
    type Output = MassPoly;

    fn add(self, rhs: MassPoly) -> MassPoly {
        &self + &rhs
    }
}

impl Add for &MassPoly {
    type Output = MassPoly;

    fn add(self, rhs: &MassPoly) -> MassPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        MassPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &MassPoly {
    type Output = MassPoly;

    fn mul(self, rhs: &MassPoly) -> MassPoly {
        if self.is_zero() || rhs.is_zero() {
            return MassPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        MassPoly::from_coeffs(coeffs)
    }
}

impl Mul for MassPoly {
    type Output = MassPoly;

    fn mul(self, rhs: MassPoly) -> MassPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MassPoly {
    fn sum<I: Iterator<Item = MassPoly>>(iter: I) -> Self {
        iter.fold(MassPoly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for MassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = rational::fraction(c);
            match (k, c.as_str()) {
                (0, _) => write!(f, "{c}")?,
                (1, "1") => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, "1") => write!(f, "x^{k}")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `q(k, parts)`: partitions of `k` into at most `parts` parts.
pub fn count_partitions(k: usize, max_parts: usize) -> u64 {
    // Conjugation: at most `max_parts` parts = largest part at most `max_parts`.
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for part in 1..=max_parts.min(k) {
        for total in part..=k {
            ways[total] += ways[total - part];
        }
    }
    ways[k]
}

/// `c(n, p) = Σ_{k<n} q(k, n-k) x^k`.
pub fn c_poly(n: usize) -> MassPoly {
    assert!(n >= 1, "c(n, p) needs n >= 1");
    MassPoly::from_coeffs(
        (0..n)
            .map(|k| integer(count_partitions(k, n - k) as i64))
            .collect(),
    )
}

/// A weakly decreasing list of nonnegative parts. Zero parts are kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The same partition with zero parts dropped.
    pub fn trimmed(&self) -> Self {
        Self {
            parts: self.parts.iter().copied().filter(|&p| p > 0).collect(),
        }
    }

    /// The same partition padded with zeros to `len` parts.
    pub fn padded(&self, len: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.resize(len.max(parts.len()), 0);
        Self { parts }
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Partitions of `k` into at most `max_parts` positive parts, in
    /// reverse lexicographic order.
    pub fn at_most(k: usize, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(k, k, max_parts, false, &mut cur, &mut out);
        out.into_iter().map(|parts| Partition { parts }).collect()
    }

    /// Partitions of `k` into exactly `parts` odd parts.
    pub fn exactly_odd(k: usize, parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(k, k, parts, true, &mut cur, &mut out);
        out.into_iter()
            .filter(|p| p.len() == parts)
            .map(|parts| Partition { parts })
            .collect()
    }
}

fn fill(
    rest: usize,
    largest: usize,
    slots: usize,
    odd: bool,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=largest.min(rest)).rev() {
        if odd && part % 2 == 0 {
            continue;
        }
        cur.push(part);
        fill(rest - part, part, slots - 1, odd, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

/// A multiset of `(f, e)` pairs: inertia degree and ramification index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplittingSymbol {
    components: Vec<(usize, usize)>,
}

impl SplittingSymbol {
    pub fn new(mut components: Vec<(usize, usize)>) -> Result<Self> {
        if components.iter().any(|&(f, e)| f == 0 || e == 0) {
            return Err(Error::InvalidParameters(
                "inertia degrees and ramification indices must be positive".into(),
            ));
        }
        components.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { components })
    }

    /// Components sorted in decreasing `(f, e)` order.
    pub fn components(&self) -> &[(usize, usize)] {
        &self.components
    }

    /// `n = Σ e f`.
    pub fn degree(&self) -> usize {
        self.components.iter().map(|&(f, e)| e * f).sum()
    }

    /// `k = Σ (e - 1) f`.
    pub fn disc_exponent(&self) -> usize {
        self.components.iter().map(|&(f, e)| (e - 1) * f).sum()
    }

    pub fn all_even(&self) -> bool {
        self.components.iter().all(|&(_, e)| e % 2 == 0)
    }

    /// Permutations of the components that preserve the symbol.
    pub fn symmetry_count(&self) -> BigInt {
        let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in &self.components {
            *mult.entry(*c).or_default() += 1;
        }
        mult.values()
            .map(|&m| (1..=m).map(BigInt::from).product::<BigInt>())
            .product()
    }

    /// `(∏ f_i) · N`.
    pub fn automorphism_count(&self) -> BigInt {
        let f: BigInt = self
            .components
            .iter()
            .map(|&(f, _)| BigInt::from(f))
            .product();
        f * self.symmetry_count()
    }

    fn map_e(&self, g: impl Fn(usize) -> usize) -> Self {
        let mut components: Vec<_> = self.components.iter().map(|&(f, e)| (f, g(e))).collect();
        components.sort_unstable_by(|a, b| b.cmp(a));
        Self { components }
    }
}

impl fmt::Display for SplittingSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|&(f, e)| {
                if e == 1 {
                    f.to_string()
                } else {
                    format!("{f}^{e}")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All splitting symbols of degree `n`.
pub fn enumerate_symbols(n: usize) -> Vec<SplittingSymbol> {
    enumerate_with_step(n, 1)
}

/// Splitting symbols of degree `n` whose ramification indices are all even.
pub fn enumerate_symbols_even(n: usize) -> Vec<SplittingSymbol> {
    enumerate_with_step(n, 2)
}

/// Symbols of degree `n` with every ramification index divisible by `step`.
fn enumerate_with_step(n: usize, step: usize) -> Vec<SplittingSymbol> {
    let mut pairs = Vec::new();
    for f in (1..=n).rev() {
        for e in (step..=n / f).rev() {
            if e % step == 0 {
                pairs.push((f, e));
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    symbols_rec(n, 0, &pairs, &mut cur, &mut out);
    out
}

fn symbols_rec(
    rest: usize,
    from: usize,
    pairs: &[(usize, usize)],
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<SplittingSymbol>,
) {
    if rest == 0 {
        out.push(SplittingSymbol {
            components: cur.clone(),
        });
        return;
    }
    for (i, &(f, e)) in pairs.iter().enumerate().skip(from) {
        if e * f <= rest {
            cur.push((f, e));
            symbols_rec(rest - e * f, i, pairs, cur, out);
            cur.pop();
        }
    }
}

/// `(e - 1)` repeated `f` times for each component.
pub fn symbol_partition(sigma: &SplittingSymbol) -> Partition {
    Partition::new(
        sigma
            .components
            .iter()
            .flat_map(|&(f, e)| std::iter::repeat_n(e - 1, f))
            .collect(),
    )
}

/// Halves every ramification index.
pub fn phi(sigma: &SplittingSymbol) -> Result<SplittingSymbol> {
    if !sigma.all_even() {
        return Err(Error::Parity(format!(
            "{sigma} has an odd ramification index"
        )));
    }
    Ok(sigma.map_e(|e| e / 2))
}

/// Doubles every ramification index.
pub fn phi_inverse(sigma: &SplittingSymbol) -> SplittingSymbol {
    sigma.map_e(|e| 2 * e)
}

/// `(2e_1 - 1) + … ↦ (e_1 - 1) + …` on partitions into odd parts.
pub fn psi(pi: &Partition) -> Result<Partition> {
    if !pi.all_odd() {
        return Err(Error::Parity(format!("{pi} has an even part")));
    }
    Ok(Partition::new(
        pi.parts.iter().map(|p| p.div_ceil(2) - 1).collect(),
    ))
}

/// `(e_1 - 1) + … ↦ (2e_1 - 1) + …`.
pub fn psi_inverse(pi: &Partition) -> Partition {
    Partition::new(pi.parts.iter().map(|p| 2 * p + 1).collect())
}

/// `x^k / ((∏ f_i) · N)`.
pub fn symbol_mass(sigma: &SplittingSymbol) -> MassPoly {
    let c = BigRational::new(BigInt::one(), sigma.automorphism_count());
    MassPoly::monomial(c, sigma.disc_exponent())
}

/// Mass of extensions `K/F` with inertia degree `f` and ramification index
/// `e` over a Galois base `F/Q_p` whose residue field has `p^{f0}` elements:
/// `(1/f) · x^{f0 f (e-1)} / ([F:Q_p] · Disc_p(F)^{e f})`.
pub fn component_mass(
    f: usize,
    e: usize,
    base_disc_exponent: usize,
    base_residue_degree: usize,
    base_degree: usize,
) -> MassPoly {
    assert!(f >= 1 && e >= 1 && base_residue_degree >= 1 && base_degree >= 1);
    let c = BigRational::new(BigInt::one(), BigInt::from(f * base_degree));
    MassPoly::monomial(
        c,
        base_residue_degree * f * (e - 1) + base_disc_exponent * e * f,
    )
}

/// Both evaluations of the total mass of degree-`divisor·m` algebras each of
/// whose components becomes unramified after adjoining the square roots in
/// question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMass {
    /// Sum over symbols of products of component masses.
    pub by_symbols: MassPoly,
    /// `x^{disc · m} · c(m, p)`.
    pub closed_form: MassPoly,
}

/// Total mass of the family with base discriminant exponent `disc_exponent`
/// and `divisor` base fields per component (2 for one square root, 4 for the
/// biquadratic case). Fails if the two evaluations disagree.
pub fn mass_unramified_family(
    m: usize,
    disc_exponent: usize,
    divisor: usize,
) -> Result<FamilyMass> {
    if m == 0 || divisor == 0 {
        return Err(Error::InvalidParameters(
            "m and divisor must be positive".into(),
        ));
    }
    let weight = MassPoly::constant(integer(divisor as i64));
    let by_symbols: MassPoly = enumerate_with_step(divisor * m, divisor)
        .iter()
        .map(|sigma| {
            let n = BigRational::new(BigInt::one(), sigma.symmetry_count());
            sigma
                .components
                .iter()
                .map(|&(f, e)| &weight * &component_mass(f, e / divisor, disc_exponent, 1, divisor))
                .fold(MassPoly::constant(n), |acc, c| &acc * &c)
        })
        .sum();
    let closed_form = c_poly(m).shift(disc_exponent * m);
    if by_symbols != closed_form {
        return Err(Error::IdentityFailure(format!(
            "family m = {m}, disc {disc_exponent}, divisor {divisor}: {by_symbols} != {closed_form}"
        )));
    }
    Ok(FamilyMass {
        by_symbols,
        closed_form,
    })
}

/// Partitions `τ` for which `Σ_{λ(σ) = τ} symbol_mass(σ) ≠ x^k`, with the
/// offending sum. Empty when the refined identity holds in degree `n`.
pub fn partition_identity_failures(n: usize) -> Vec<(Partition, MassPoly)> {
    let mut sums: BTreeMap<Partition, MassPoly> = BTreeMap::new();
    for sigma in enumerate_symbols(n) {
        let tau = symbol_partition(&sigma).trimmed();
        let entry = sums.entry(tau).or_default();
        *entry = &*entry + &symbol_mass(&sigma);
    }
    let mut failures = Vec::new();
    for k in 0..n {
        for tau in Partition::at_most(k, n - k) {
            let got = sums.remove(&tau).unwrap_or_default();
            if got != MassPoly::monomial(BigRational::one(), k) {
                failures.push((tau, got));
            }
        }
    }
    failures.extend(sums);
    failures
}

fn half_degree(n: usize) -> Result<usize> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    Ok(n / 2)
}

/// `c(m, p) / c(2m, p) · p^{-m}` for `n = 2m`.
pub fn prob_p_in_selmer(n: usize, p: u64) -> Result<BigRational> {
    let m = half_degree(n)?;
    Ok(c_poly(m).eval(p) / c_poly(n).eval(p) * pow(p, -(m as i64)))
}

/// Floating `t(p) = c(m, p) / c(2m, p) · p^{-m}` for Euler products.
pub(crate) fn selmer_term(n: usize) -> Result<impl Fn(u64) -> f64> {
    let m = half_degree(n)?;
    let num = c_poly(m);
    let den = c_poly(n);
    let num: Vec<f64> = num.coeffs().iter().map(rational::to_f64).collect();
    let den: Vec<f64> = den.coeffs().iter().map(rational::to_f64).collect();
    Ok(move |p: u64| {
        let x = 1.0 / p as f64;
        let horner = |c: &[f64]| c.iter().rev().fold(0.0, |acc, a| acc * x + a);
        horner(&num) / horner(&den) * x.powi(m as i32)
    })
}

/// Probability that every prime of `s` lies in the Q-imprimitive Selmer group
/// and no prime of `t` does, for degree `n`.
pub fn prob_x_st(n: usize, s: &[u64], t: &PrimeSet, prime_bound: u64) -> Result<Certified> {
    let m = half_degree(n)?;
    for &p in s {
        if !euler::is_prime(p) {
            return Err(Error::InvalidParameters(format!("{p} is not prime")));
        }
        if t.contains(p) {
            return Err(Error::OverlappingPrimeSets(p));
        }
    }
    if let PrimeSet::Finite(ts) = t {
        if ts.iter().any(|&q| !euler::is_prime(q)) {
            return Err(Error::InvalidParameters("T contains a non-prime".into()));
        }
    }
    if m == 1 && !t.is_finite() {
        return Err(Error::InfiniteFamilyInDegreeTwo);
    }
    let mut exact = BigRational::one();
    for &p in s {
        exact *= prob_p_in_selmer(n, p)?;
    }
    let term = selmer_term(n)?;
    let product = euler::euler_product(t, prime_bound, m as u32, term);
    let scale = exact.to_f64().unwrap_or(f64::NAN);
    Ok(Certified::new(
        scale * product.value,
        scale * product.error + (scale * product.value).abs() * 2.0 * f64::EPSILON,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn sym(c: &[(usize, usize)]) -> SplittingSymbol {
        SplittingSymbol::new(c.to_vec()).unwrap()
    }

    fn x(k: usize) -> MassPoly {
        MassPoly::monomial(BigRational::one(), k)
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions(0, 5), 1);
        assert_eq!(count_partitions(0, 0), 1);
        assert_eq!(count_partitions(2, 2), 2);
        assert_eq!(count_partitions(3, 1), 1);
        assert_eq!(count_partitions(5, 0), 0);
        assert_eq!(count_partitions(10, 10), 42);
    }

    #[test]
    fn c_poly_examples() {
        assert_eq!(c_poly(1), MassPoly::one());
        assert_eq!(c_poly(2), MassPoly::one() + x(1));
        assert_eq!(c_poly(4).eval(2), ratio(17, 8));
    }

    #[test]
    fn symbol_enumeration() {
        assert_eq!(enumerate_symbols(1).len(), 1);
        let s2: Vec<String> = enumerate_symbols(2)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(s2, ["(2)", "(1^2)", "(1, 1)"]);
        let e4 = enumerate_symbols_even(4);
        assert_eq!(e4.len(), 3);
        assert!(e4.contains(&sym(&[(1, 2), (1, 2)])));
        assert!(e4.contains(&sym(&[(2, 2)])));
        assert!(e4.contains(&sym(&[(1, 4)])));
    }

    #[test]
    fn symbol_masses() {
        assert_eq!(
            symbol_mass(&sym(&[(1, 1), (1, 1)])),
            MassPoly::constant(ratio(1, 2))
        );
        assert_eq!(symbol_mass(&sym(&[(1, 2)])), x(1));
        let total: MassPoly = enumerate_symbols(2).iter().map(symbol_mass).sum();
        assert_eq!(total, c_poly(2));
    }

    #[test]
    fn bijections() {
        assert_eq!(
            phi(&sym(&[(1, 2), (1, 2)])).unwrap(),
            sym(&[(1, 1), (1, 1)])
        );
        assert_eq!(phi(&sym(&[(2, 2)])).unwrap(), sym(&[(2, 1)]));
        assert!(matches!(
            phi(&sym(&[(1, 2), (1, 1)])),
            Err(Error::Parity(_))
        ));
        assert_eq!(
            symbol_partition(&sym(&[(1, 2), (1, 1)])),
            Partition::new(vec![1, 0])
        );
        assert_eq!(
            psi(&Partition::new(vec![3, 1])).unwrap(),
            Partition::new(vec![1, 0])
        );
        assert!(psi(&Partition::new(vec![2])).is_err());
    }

    #[test]
    fn component_masses() {
        assert_eq!(
            component_mass(1, 1, 1, 1, 2),
            MassPoly::monomial(ratio(1, 2), 1)
        );
        assert_eq!(component_mass(1, 2, 0, 1, 1), x(1));
        assert_eq!(
            component_mass(2, 1, 0, 1, 1),
            MassPoly::constant(ratio(1, 2))
        );
    }

    #[test]
    fn family_masses() {
        let f = mass_unramified_family(2, 0, 2).unwrap();
        assert_eq!(f.closed_form, c_poly(2));
        assert_eq!(
            mass_unramified_family(2, 2, 2).unwrap().closed_form.eval(2),
            ratio(3, 32)
        );
        assert_eq!(
            mass_unramified_family(1, 8, 4).unwrap().closed_form.eval(2),
            ratio(1, 256)
        );
    }

    #[test]
    fn refined_identity_small_degrees() {
        for n in 1..=6 {
            assert!(partition_identity_failures(n).is_empty(), "degree {n}");
        }
    }

    #[test]
    fn selmer_probabilities() {
        assert_eq!(prob_p_in_selmer(4, 2).unwrap(), ratio(3, 17));
        assert_eq!(prob_p_in_selmer(2, 2).unwrap(), ratio(1, 3));
        assert_eq!(prob_p_in_selmer(4, 3).unwrap(), ratio(4, 43));
        assert_eq!(prob_p_in_selmer(5, 3), Err(Error::OddDegree(5)));
    }

    #[test]
    fn prob_x_st_examples() {
        let r = prob_x_st(4, &[2], &PrimeSet::empty(), 1000).unwrap();
        assert!((r.value - 3.0 / 17.0).abs() < 1e-15);
        let one = prob_x_st(4, &[], &PrimeSet::empty(), 1000).unwrap();
        assert_eq!(one.value, 1.0);
        let b = prob_x_st(4, &[], &PrimeSet::residue_class(4, 3), 1_000_000).unwrap();
        assert!((b.value - 0.87434).abs() < 1e-5);
        assert!(b.error < 1e-5);
        assert_eq!(
            prob_x_st(4, &[3], &PrimeSet::residue_class(4, 3), 100),
            Err(Error::OverlappingPrimeSets(3))
        );
        assert_eq!(
            prob_x_st(2, &[], &PrimeSet::residue_class(4, 3), 100),
            Err(Error::InfiniteFamilyInDegreeTwo)
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            (MassPoly::one() + x(1).scale(&ratio(1, 2)) + x(3)).to_string(),
            "1 + 1/2*x + x^3"
        );
        assert_eq!(sym(&[(1, 2), (2, 1)]).to_string(), "(2, 1^2)");
    }
}
