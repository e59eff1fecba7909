//! Nondegenerate symmetric bilinear spaces over F2.
//!
//! Every such space is an orthogonal sum of copies of `I` (the form `[1]`)
//! and `H` (the hyperbolic plane `[[0,1],[1,0]]`). Up to isometry it is
//! determined by its dimension and its canonical vector `w_can`, the unique
//! vector with `b(w_can, v) = b(v, v)` for all `v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::subspace::Subspace;
use crate::vector::{mask, F2Vector, MAX_DIM};

/// A symmetric, nondegenerate F2 bilinear form on `F2^dim`, optionally split
/// as an orthogonal sum `V ⊞ W` at coordinate `split`.
///
/// The zero-dimensional space is allowed; its form is vacuously
/// nondegenerate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BilinearSpace {
    dim: usize,
    gram: Vec<u64>,
    split: Option<usize>,
}

/// Isometry class of a nondegenerate space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryClass {
    /// `H^planes`, alternating.
    Hyperbolic { planes: usize },
    /// `H^planes ⊞ I`, odd dimension.
    HyperbolicPlusI { planes: usize },
    /// `H^planes ⊞ I^2`, even dimension, nonalternating.
    HyperbolicPlusI2 { planes: usize },
}

/// What kind of vector the canonical vector is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonicalKind {
    Zero,
    Anisotropic,
    NonzeroIsotropic,
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IsometryClass::Hyperbolic { planes } => write!(f, "H^{planes}"),
            IsometryClass::HyperbolicPlusI { planes } => write!(f, "H^{planes} + I"),
            IsometryClass::HyperbolicPlusI2 { planes } => write!(f, "H^{planes} + I^2"),
        }
    }
}

impl BilinearSpace {
    /// Validates and wraps a gram matrix given as rows.
    pub fn new(gram: Vec<F2Vector>) -> Result<Self> {
        let dim = gram.len();
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        for row in &gram {
            row.check_len(dim)?;
        }
        let rows: Vec<u64> = gram.iter().map(F2Vector::bits).collect();
        Self::from_rows(dim, rows)
    }

    /// Gram matrix from nested 0/1 rows.
    pub fn from_matrix(rows: &[&[u8]]) -> Result<Self> {
        let gram = rows
            .iter()
            .map(|r| F2Vector::from_slice(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gram)
    }

    pub(crate) fn from_rows(dim: usize, gram: Vec<u64>) -> Result<Self> {
        for i in 0..dim {
            for j in 0..i {
                if ((gram[i] >> j) & 1) != ((gram[j] >> i) & 1) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        if linalg::rank(&gram) != dim {
            return Err(Error::Degenerate);
        }
        Ok(Self {
            dim,
            gram,
            split: None,
        })
    }

    /// The zero-dimensional space.
    pub fn empty() -> Self {
        Self {
            dim: 0,
            gram: Vec::new(),
            split: None,
        }
    }

    /// `I^n`: the dot product on `F2^n`.
    pub fn dot(n: usize) -> Self {
        assert!(n <= MAX_DIM);
        Self {
            dim: n,
            gram: (0..n).map(|i| 1u64 << i).collect(),
            split: None,
        }
    }

    /// `H^t`, with plane `i` on coordinates `2i, 2i + 1`.
    pub fn hyperbolic(t: usize) -> Self {
        assert!(2 * t <= MAX_DIM);
        let gram = (0..2 * t).map(|i| 1u64 << (i ^ 1)).collect();
        Self {
            dim: 2 * t,
            gram,
            split: None,
        }
    }

    /// `I^2 ⊞ H^t`: the dot product on the first two coordinates followed by
    /// `t` hyperbolic planes.
    pub fn i2_plus_hyperbolic(t: usize) -> Self {
        Self::dot(2)
            .orthogonal_sum(&Self::hyperbolic(t))
            .expect("small dimensions")
            .without_split()
    }

    /// `self ⊞ other`, with the split recorded at `self.dim()`.
    pub fn orthogonal_sum(&self, other: &BilinearSpace) -> Result<Self> {
        let dim = self.dim + other.dim;
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        let mut gram = self.gram.clone();
        gram.extend(other.gram.iter().map(|row| row << self.dim));
        Ok(Self {
            dim,
            gram,
            split: Some(self.dim),
        })
    }

    /// Records a split `V ⊞ W` at `split`, checking orthogonality.
    pub fn with_split(mut self, split: usize) -> Result<Self> {
        if split > self.dim {
            return Err(Error::InvalidSplit {
                split,
                dim: self.dim,
            });
        }
        let left = mask(split);
        for (i, row) in self.gram.iter().enumerate() {
            let cross = if i < split { row & !left } else { row & left };
            if cross != 0 {
                return Err(Error::SplitNotOrthogonal(split));
            }
        }
        self.split = Some(split);
        Ok(self)
    }

    pub fn without_split(mut self) -> Self {
        self.split = None;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn split(&self) -> Option<usize> {
        self.split
    }

    pub fn gram_row(&self, i: usize) -> F2Vector {
        F2Vector::from_bits(self.gram[i], self.dim)
    }

    pub(crate) fn gram_rows(&self) -> &[u64] {
        &self.gram
    }

    /// The diagonal of the gram matrix as a vector; `b(v, v) = diag · v`.
    pub fn diagonal(&self) -> F2Vector {
        let bits = (0..self.dim).fold(0u64, |acc, i| acc | (self.gram[i] & (1 << i)));
        F2Vector::from_bits(bits, self.dim)
    }

    /// `b(u, v) = uᵀ G v` over F2.
    pub fn eval_form(&self, u: &F2Vector, v: &F2Vector) -> Result<bool> {
        u.check_len(self.dim)?;
        v.check_len(self.dim)?;
        Ok(self.form_bits(u.bits(), v.bits()))
    }

    #[inline]
    pub(crate) fn form_bits(&self, u: u64, v: u64) -> bool {
        linalg::parity(u & self.pair_bits(v))
    }

    /// `G v`, i.e. the functional `b(·, v)` as a bit mask.
    #[inline]
    pub(crate) fn pair_bits(&self, v: u64) -> u64 {
        linalg::apply(&self.gram, v)
    }

    /// Whether `b(v, v) = 0`.
    pub fn is_isotropic_vector(&self, v: &F2Vector) -> Result<bool> {
        self.eval_form(v, v).map(|x| !x)
    }

    /// The unique `w_can` with `b(w_can, v) = b(v, v)` for all `v`, found by
    /// solving `G w = diag(G)`.
    pub fn canonical_vector(&self) -> F2Vector {
        let diag = self.diagonal().bits();
        let eqs: Vec<(u64, bool)> = self
            .gram
            .iter()
            .enumerate()
            .map(|(i, &row)| (row, (diag >> i) & 1 == 1))
            .collect();
        let sol = linalg::solve(&eqs, mask(self.dim)).expect("nondegenerate gram is invertible");
        debug_assert!(sol.kernel.is_empty());
        F2Vector::from_bits(sol.particular, self.dim)
    }

    /// A space is alternating exactly when its diagonal vanishes.
    pub fn is_alternating(&self) -> bool {
        self.diagonal().is_zero()
    }

    /// Isometry class and the kind of the canonical vector.
    pub fn classify(&self) -> (IsometryClass, CanonicalKind) {
        let w = self.canonical_vector();
        let half = self.dim / 2;
        if self.dim % 2 == 1 {
            debug_assert!(self.form_bits(w.bits(), w.bits()));
            (
                IsometryClass::HyperbolicPlusI { planes: half },
                CanonicalKind::Anisotropic,
            )
        } else if w.is_zero() {
            (
                IsometryClass::Hyperbolic { planes: half },
                CanonicalKind::Zero,
            )
        } else {
            debug_assert!(!self.form_bits(w.bits(), w.bits()));
            (
                IsometryClass::HyperbolicPlusI2 { planes: half - 1 },
                CanonicalKind::NonzeroIsotropic,
            )
        }
    }

    /// `S^⊥` with respect to the form.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let functionals: Vec<u64> = s.basis().iter().map(|v| self.pair_bits(v.bits())).collect();
        Ok(Subspace::from_rows(
            self.dim,
            &linalg::annihilator(&functionals, self.dim),
        ))
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            })
        }
    }

    /// Whether the form vanishes identically on `s`.
    pub fn is_totally_isotropic(&self, s: &Subspace) -> Result<bool> {
        self.check_subspace(s)?;
        let rows = s.rows();
        Ok(rows.iter().enumerate().all(|(i, &u)| {
            let gu = self.pair_bits(u);
            rows[i..].iter().all(|&v| !linalg::parity(gu & v))
        }))
    }

    /// Totally isotropic, and no vector outside `s` extends it isotropically.
    ///
    /// The isotropic vectors of `S^⊥` form the subspace `S^⊥ ∩ ker(diag)`,
    /// so `s` is maximal exactly when that subspace equals `s`.
    pub fn is_maximal_totally_isotropic(&self, s: &Subspace) -> Result<bool> {
        if !self.is_totally_isotropic(s)? {
            return Ok(false);
        }
        let mut functionals: Vec<u64> =
            s.basis().iter().map(|v| self.pair_bits(v.bits())).collect();
        functionals.push(self.diagonal().bits());
        let extension = linalg::annihilator(&functionals, self.dim);
        Ok(extension.len() == s.dim())
    }

    /// `dim (S ∩ V)` for the left block `V` of the split.
    pub fn isotropy_rank(&self, s: &Subspace) -> Result<usize> {
        let split = self.split.ok_or(Error::SplitUnset)?;
        self.check_subspace(s)?;
        let right: Vec<u64> = s.rows().iter().map(|r| r >> split).collect();
        Ok(s.dim() - linalg::rank(&right))
    }

    /// The subspace of vectors supported on the left block `V`.
    pub fn left_block(&self) -> Result<Subspace> {
        let split = self.split.ok_or(Error::SplitUnset)?;
        let rows: Vec<u64> = (0..split).map(|i| 1u64 << i).collect();
        Ok(Subspace::from_rows(self.dim, &rows))
    }

    /// The left block `V` as a standalone space.
    pub fn left(&self) -> Result<BilinearSpace> {
        let split = self.split.ok_or(Error::SplitUnset)?;
        Ok(self.restrict_coordinates(0, split))
    }

    /// The right block `W` as a standalone space.
    pub fn right(&self) -> Result<BilinearSpace> {
        let split = self.split.ok_or(Error::SplitUnset)?;
        Ok(self.restrict_coordinates(split, self.dim - split))
    }

    fn restrict_coordinates(&self, start: usize, len: usize) -> BilinearSpace {
        let gram = self.gram[start..start + len]
            .iter()
            .map(|row| (row >> start) & mask(len))
            .collect();
        BilinearSpace {
            dim: len,
            gram,
            split: None,
        }
    }

    /// The form restricted to the span of `basis`, in those coordinates.
    /// Fails with [`Error::Degenerate`] if the restriction is degenerate.
    pub fn restrict(&self, basis: &[F2Vector]) -> Result<BilinearSpace> {
        for v in basis {
            v.check_len(self.dim)?;
        }
        let k = basis.len();
        let gram = (0..k)
            .map(|i| {
                let gi = self.pair_bits(basis[i].bits());
                (0..k).fold(0u64, |acc, j| {
                    acc | (u64::from(linalg::parity(gi & basis[j].bits())) << j)
                })
            })
            .collect();
        BilinearSpace::from_rows(k, gram)
    }
}

impl fmt::Debug for BilinearSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearSpace(dim={}", self.dim)?;
        if let Some(s) = self.split {
            write!(f, ", split={s}")?;
        }
        f.write_str(", gram=[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", self.gram_row(i))?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> F2Vector {
        F2Vector::parse(s).unwrap()
    }

    #[test]
    fn hyperbolic_pairing() {
        let h = BilinearSpace::hyperbolic(1);
        assert!(h.eval_form(&v("10"), &v("01")).unwrap());
        assert!(!h.eval_form(&v("11"), &v("11")).unwrap());
    }

    #[test]
    fn dot_product_pairing() {
        let i = BilinearSpace::dot(1);
        assert!(i.eval_form(&v("1"), &v("1")).unwrap());
    }

    #[test]
    fn eval_form_rejects_wrong_length() {
        let h = BilinearSpace::hyperbolic(1);
        assert!(matches!(
            h.eval_form(&v("1"), &v("01")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_vectors_of_building_blocks() {
        assert_eq!(BilinearSpace::hyperbolic(1).canonical_vector(), v("00"));
        assert_eq!(BilinearSpace::dot(1).canonical_vector(), v("1"));
        assert_eq!(
            BilinearSpace::i2_plus_hyperbolic(1).canonical_vector(),
            v("1100")
        );
        assert_eq!(BilinearSpace::empty().canonical_vector().len(), 0);
    }

    #[test]
    fn classification_examples() {
        let s = BilinearSpace::from_matrix(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]).unwrap();
        assert_eq!(
            s.classify(),
            (
                IsometryClass::HyperbolicPlusI { planes: 1 },
                CanonicalKind::Anisotropic
            )
        );
        assert_eq!(
            BilinearSpace::hyperbolic(1).classify(),
            (IsometryClass::Hyperbolic { planes: 1 }, CanonicalKind::Zero)
        );
        let i2 = BilinearSpace::dot(2);
        assert_eq!(
            i2.classify(),
            (
                IsometryClass::HyperbolicPlusI2 { planes: 0 },
                CanonicalKind::NonzeroIsotropic
            )
        );
        assert_eq!(i2.canonical_vector(), v("11"));
    }

    #[test]
    fn degenerate_and_asymmetric_grams_are_rejected() {
        assert_eq!(
            BilinearSpace::from_matrix(&[&[1, 1], &[1, 1]]),
            Err(Error::Degenerate)
        );
        assert_eq!(
            BilinearSpace::from_matrix(&[&[1, 1], &[0, 1]]),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn split_must_be_orthogonal() {
        let h = BilinearSpace::hyperbolic(1);
        assert_eq!(h.clone().with_split(1), Err(Error::SplitNotOrthogonal(1)));
        assert!(h.with_split(2).is_ok());
    }

    #[test]
    fn maximality_examples() {
        let h = BilinearSpace::hyperbolic(1);
        let line = Subspace::span(2, &[v("10")]).unwrap();
        assert!(h.is_maximal_totally_isotropic(&line).unwrap());
        assert!(!h.is_totally_isotropic(&Subspace::full(2)).unwrap());

        let i2 = BilinearSpace::dot(2);
        let can = Subspace::span(2, &[v("11")]).unwrap();
        assert!(i2.is_maximal_totally_isotropic(&can).unwrap());
        let aniso = Subspace::span(2, &[v("10")]).unwrap();
        assert!(!i2.is_totally_isotropic(&aniso).unwrap());
    }

    #[test]
    fn isotropy_rank_counts_left_block_intersection() {
        let s = BilinearSpace::hyperbolic(1)
            .orthogonal_sum(&BilinearSpace::hyperbolic(1))
            .unwrap();
        let left = Subspace::span(4, &[v("1000")]).unwrap();
        let right = Subspace::span(4, &[v("0010")]).unwrap();
        assert_eq!(s.isotropy_rank(&left).unwrap(), 1);
        assert_eq!(s.isotropy_rank(&right).unwrap(), 0);
        assert_eq!(
            BilinearSpace::hyperbolic(1).isotropy_rank(&Subspace::zero(2)),
            Err(Error::SplitUnset)
        );
    }
}
