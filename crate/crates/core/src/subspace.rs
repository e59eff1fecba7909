//! Subspaces of F2^n stored in canonical reduced echelon form.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::vector::{F2Vector, MAX_DIM};

/// A linear subspace of `F2^ambient_dim`.
///
/// The basis is always the unique reduced echelon basis (pivot = lowest
/// nonzero coordinate, pivots strictly increasing, each pivot column zero in
/// every other row), so derived equality is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<F2Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        assert!(ambient_dim <= MAX_DIM);
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        assert!(ambient_dim <= MAX_DIM);
        Self {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| F2Vector::unit(ambient_dim, i))
                .collect(),
        }
    }

    /// Span of `vectors`, canonicalized.
    pub fn span(ambient_dim: usize, vectors: &[F2Vector]) -> Result<Self> {
        if ambient_dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(ambient_dim));
        }
        for v in vectors {
            v.check_len(ambient_dim)?;
        }
        let rows: Vec<u64> = vectors.iter().map(F2Vector::bits).collect();
        Ok(Self::from_rows(ambient_dim, &rows))
    }

    /// Canonical basis of the span of `vectors`; all must share one length.
    pub fn canonicalize(vectors: &[F2Vector]) -> Result<Self> {
        let n = vectors.first().map_or(0, F2Vector::len);
        Self::span(n, vectors)
    }

    pub(crate) fn from_rows(ambient_dim: usize, rows: &[u64]) -> Self {
        Self {
            ambient_dim,
            basis: linalg::rref(rows)
                .into_iter()
                .map(|r| F2Vector::from_bits(r, ambient_dim))
                .collect(),
        }
    }

    /// Wraps rows already in canonical reduced echelon form.
    pub(crate) fn from_canonical_rows(ambient_dim: usize, rows: &[u64]) -> Self {
        debug_assert_eq!(linalg::rref(rows), rows);
        Self {
            ambient_dim,
            basis: rows
                .iter()
                .map(|&r| F2Vector::from_bits(r, ambient_dim))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[F2Vector] {
        &self.basis
    }

    pub(crate) fn rows(&self) -> Vec<u64> {
        self.basis.iter().map(F2Vector::bits).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient_dim == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            })
        }
    }

    pub fn contains(&self, v: &F2Vector) -> Result<bool> {
        v.check_len(self.ambient_dim)?;
        Ok(linalg::reduce(v.bits(), &self.rows()) == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient_dim)?;
        let rows = self.rows();
        Ok(other
            .basis
            .iter()
            .all(|v| linalg::reduce(v.bits(), &rows) == 0))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        let mut rows = self.rows();
        rows.extend(other.rows());
        Ok(Self::from_rows(self.ambient_dim, &rows))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim)?;
        // S ∩ T = ann(ann(S) + ann(T)) for the standard dot product.
        let n = self.ambient_dim;
        let mut ann = linalg::annihilator(&self.rows(), n);
        ann.extend(linalg::annihilator(&other.rows(), n));
        Ok(Self::from_rows(n, &linalg::annihilator(&ann, n)))
    }

    /// Every element of the subspace, in Gray-code order starting at zero.
    pub fn elements(&self) -> impl Iterator<Item = F2Vector> + '_ {
        let n = self.ambient_dim;
        let count = 1u64 << self.basis.len();
        let mut current = 0u64;
        (0..count).map(move |i| {
            if i > 0 {
                let flip = i.trailing_zeros() as usize;
                current ^= self.basis[flip].bits();
            }
            F2Vector::from_bits(current, n)
        })
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace[{}]{{", self.ambient_dim)?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}
