//! Splitting off a small nondegenerate block around a chosen vector.

use crate::error::{Error, Result};
use crate::linalg;
use crate::space::BilinearSpace;
use crate::subspace::Subspace;
use crate::vector::{mask, F2Vector};

/// Isometry type of the block `V_w` containing the chosen vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    I,
    I2,
    H,
}

/// A nondegenerate subspace together with the basis that embeds it.
#[derive(Debug, Clone)]
pub struct Embedded {
    /// The form in local coordinates.
    pub space: BilinearSpace,
    /// Image of local basis vector `i` in the ambient space.
    pub basis: Vec<F2Vector>,
}

impl Embedded {
    /// Ambient image of a vector given in local coordinates.
    pub fn push_forward(&self, local: &F2Vector) -> Result<F2Vector> {
        local.check_len(self.basis.len())?;
        let n = self.ambient_dim();
        let bits = self
            .basis
            .iter()
            .enumerate()
            .filter(|(i, _)| local.get(*i))
            .fold(0u64, |acc, (_, b)| acc ^ b.bits());
        Ok(F2Vector::from_bits(bits, n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.first().map_or(0, F2Vector::len)
    }

    /// The embedded block as a subspace of the ambient space.
    pub fn as_subspace(&self, ambient_dim: usize) -> Subspace {
        let rows: Vec<u64> = self.basis.iter().map(F2Vector::bits).collect();
        Subspace::from_rows(ambient_dim, &rows)
    }
}

/// `V = V_w ⊞ V_w^⊥` with explicit bases for both blocks.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub kind: BlockKind,
    pub block: Embedded,
    pub complement: Embedded,
    ambient: BilinearSpace,
}

impl Decomposition {
    /// Splits an ambient vector into its components in the two blocks, in
    /// local coordinates of each.
    pub fn split_vector(&self, v: &F2Vector) -> Result<(F2Vector, F2Vector)> {
        v.check_len(self.ambient.dim())?;
        let block = project(&self.ambient, &self.block, v.bits());
        let complement = project(&self.ambient, &self.complement, v.bits());
        Ok((block, complement))
    }

    /// `(S ∩ V_w, S ∩ V_w^⊥)` as ambient subspaces.
    pub fn split_subspace(&self, s: &Subspace) -> Result<(Subspace, Subspace)> {
        let n = self.ambient.dim();
        let a = s.intersection(&self.block.as_subspace(n))?;
        let b = s.intersection(&self.complement.as_subspace(n))?;
        Ok((a, b))
    }
}

/// Local coordinates of the orthogonal projection of `v` onto `part`.
fn project(ambient: &BilinearSpace, part: &Embedded, v: u64) -> F2Vector {
    let k = part.basis.len();
    // Solve G_part c = (b(v, e_i))_i.
    let gv = ambient.pair_bits(v);
    let eqs: Vec<(u64, bool)> = (0..k)
        .map(|i| {
            let row = part.space.gram_rows()[i];
            (row, linalg::parity(gv & part.basis[i].bits()))
        })
        .collect();
    let sol = linalg::solve(&eqs, mask(k)).expect("block form is nondegenerate");
    F2Vector::from_bits(sol.particular, k)
}

/// Decomposes `space` as `V_w ⊞ V_w^⊥` with `w ∈ V_w`, where `V_w ≅ I` if
/// `w` is anisotropic, `V_w ≅ I^2` if `w` is the isotropic canonical vector,
/// and `V_w ≅ H` for any other isotropic `w`.
pub fn orthogonal_decomposition(space: &BilinearSpace, w: &F2Vector) -> Result<Decomposition> {
    let n = space.dim();
    w.check_len(n)?;
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    let can = space.canonical_vector();
    let wb = w.bits();
    let gw = space.pair_bits(wb);
    let anisotropic = linalg::parity(gw & wb);

    let (kind, basis): (BlockKind, Vec<u64>) = if anisotropic {
        // A noncanonical anisotropic vector cannot sit in a hyperbolic plane,
        // so it also splits off as a copy of I.
        (BlockKind::I, vec![wb])
    } else {
        // Some u with b(w, u) = 1; for the H case also require b(u, u) = 0.
        let mut eqs = vec![(gw, true)];
        let is_canonical = *w == can;
        if !is_canonical {
            eqs.push((space.diagonal().bits(), false));
        }
        let sol = linalg::solve(&eqs, mask(n)).expect("nondegenerate form pairs w nontrivially");
        let u = sol.particular;
        if is_canonical {
            // b(u, u) = b(w_can, u) = 1, so {u, u + w} is an orthonormal pair.
            (BlockKind::I2, vec![u, u ^ wb])
        } else {
            (BlockKind::H, vec![wb, u])
        }
    };

    let basis_vecs: Vec<F2Vector> = basis.iter().map(|&b| F2Vector::from_bits(b, n)).collect();
    let block_space = space.restrict(&basis_vecs)?;

    let functionals: Vec<u64> = basis.iter().map(|&b| space.pair_bits(b)).collect();
    let comp_rows = linalg::annihilator(&functionals, n);
    let comp_vecs: Vec<F2Vector> = comp_rows
        .iter()
        .map(|&b| F2Vector::from_bits(b, n))
        .collect();
    let comp_space = space.restrict(&comp_vecs)?;

    Ok(Decomposition {
        kind,
        block: Embedded {
            space: block_space,
            basis: basis_vecs,
        },
        complement: Embedded {
            space: comp_space,
            basis: comp_vecs,
        },
        ambient: space.clone().without_split(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::IsometryClass;

    fn v(s: &str) -> F2Vector {
        F2Vector::parse(s).unwrap()
    }

    #[test]
    fn anisotropic_canonical_vector_splits_off_i() {
        let d = orthogonal_decomposition(&BilinearSpace::dot(1), &v("1")).unwrap();
        assert_eq!(d.kind, BlockKind::I);
        assert_eq!(d.complement.space.dim(), 0);
    }

    #[test]
    fn noncanonical_vector_in_h_splits_off_h() {
        let d = orthogonal_decomposition(&BilinearSpace::hyperbolic(1), &v("10")).unwrap();
        assert_eq!(d.kind, BlockKind::H);
        assert_eq!(
            d.block.space.classify().0,
            IsometryClass::Hyperbolic { planes: 1 }
        );
        assert_eq!(d.complement.space.dim(), 0);
    }

    #[test]
    fn isotropic_canonical_vector_splits_off_i2() {
        let d = orthogonal_decomposition(&BilinearSpace::dot(2), &v("11")).unwrap();
        assert_eq!(d.kind, BlockKind::I2);
        assert_eq!(
            d.block.space.classify().0,
            IsometryClass::HyperbolicPlusI2 { planes: 0 }
        );
        assert_eq!(d.complement.space.dim(), 0);
    }

    #[test]
    fn zero_vector_is_rejected() {
        assert_eq!(
            orthogonal_decomposition(&BilinearSpace::hyperbolic(1), &v("00")).unwrap_err(),
            Error::ZeroVector
        );
        assert!(matches!(
            orthogonal_decomposition(&BilinearSpace::hyperbolic(1), &v("1")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn split_vector_recombines() {
        let space = BilinearSpace::i2_plus_hyperbolic(2);
        let w = v("001000");
        let d = orthogonal_decomposition(&space, &w).unwrap();
        for x in Subspace::full(6).elements() {
            let (a, b) = d.split_vector(&x).unwrap();
            let back = d.block.push_forward(&a).unwrap() + d.complement.push_forward(&b).unwrap();
            assert_eq!(back, x);
        }
    }
}
