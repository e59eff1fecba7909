//! Q-imprimitive types: the classifier over Selmer flags and the model
//! generating subspace inside `V ⊞ W`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::space::BilinearSpace;
use crate::subspace::Subspace;
use crate::vector::F2Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QImprimitiveType {
    A1,
    A2,
    B1,
    B2,
    B3,
    B4,
}

/// Whether the 2-adic signature space is alternating (A) or not (B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeFamily {
    A,
    B,
}

impl QImprimitiveType {
    pub const ALL: [QImprimitiveType; 6] =
        [Self::A1, Self::A2, Self::B1, Self::B2, Self::B3, Self::B4];

    pub fn family(self) -> TypeFamily {
        match self {
            Self::A1 | Self::A2 => TypeFamily::A,
            _ => TypeFamily::B,
        }
    }

    /// Dimension of the generating subspace.
    pub fn generator_count(self) -> usize {
        match self {
            Self::A1 | Self::B1 => 1,
            Self::A2 | Self::B2 | Self::B3 => 2,
            Self::B4 => 3,
        }
    }

    /// Short ASCII code, e.g. `B1`.
    pub fn code(self) -> &'static str {
        match self {
            Self::A1 => "A1",
            Self::A2 => "A2",
            Self::B1 => "B1",
            Self::B2 => "B2",
            Self::B3 => "B3",
            Self::B4 => "B4",
        }
    }

    /// With `r1 = 0` the archimedean space is trivial and B(iii), B(iv)
    /// coincide with B(i), B(ii).
    pub fn merged_when_totally_complex(self) -> Self {
        match self {
            Self::B3 => Self::B1,
            Self::B4 => Self::B2,
            t => t,
        }
    }
}

impl fmt::Display for QImprimitiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A1 => "A(i)",
            Self::A2 => "A(ii)",
            Self::B1 => "B(i)",
            Self::B2 => "B(ii)",
            Self::B3 => "B(iii)",
            Self::B4 => "B(iv)",
        })
    }
}

impl FromStr for QImprimitiveType {
    type Err = Error;

    /// Accepts `B1`, `b1`, `B(i)` or `Bi`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let ty = match t.as_str() {
            "a1" | "ai" => Self::A1,
            "a2" | "aii" => Self::A2,
            "b1" | "bi" => Self::B1,
            "b2" | "bii" => Self::B2,
            "b3" | "biii" => Self::B3,
            "b4" | "biv" => Self::B4,
            _ => return Err(Error::InvalidParameters(format!("unknown type {s:?}"))),
        };
        Ok(ty)
    }
}

/// Which rational generators lie in the Q-imprimitive Selmer group, and the
/// 2-adic signature conditions on them.
///
/// `sgn2_two_zero` and `sgn2_minus_two_zero` are `None` exactly when 2 is not
/// in the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SelmerFlags {
    pub has_p3mod4: bool,
    pub has_p1mod4: bool,
    pub has_two: bool,
    pub sgn2_two_zero: Option<bool>,
    pub sgn2_minus_two_zero: Option<bool>,
    pub sgn2_minus_one_zero: bool,
}

impl SelmerFlags {
    /// The group is `{±1}`.
    pub fn is_trivial(&self) -> bool {
        !self.has_p3mod4 && !self.has_p1mod4 && !self.has_two
    }
}

/// The type determined by `flags`, rejecting combinations that cannot occur.
pub fn classify_type(flags: &SelmerFlags) -> Result<QImprimitiveType> {
    use QImprimitiveType::*;
    let p3 = flags.has_p3mod4;
    if !flags.has_two {
        if flags.sgn2_two_zero.is_some() || flags.sgn2_minus_two_zero.is_some() {
            return Err(Error::InconsistentFlags(
                "2-adic signs of ±2 are only meaningful when 2 is in the group".into(),
            ));
        }
        if flags.sgn2_minus_one_zero {
            return Err(Error::InconsistentFlags(
                "sgn2(-1) = 0 requires 2 in the group".into(),
            ));
        }
        return Ok(if p3 { B3 } else { B1 });
    }
    let (Some(two), Some(minus_two)) = (flags.sgn2_two_zero, flags.sgn2_minus_two_zero) else {
        return Err(Error::InconsistentFlags(
            "2 is in the group but the 2-adic signs of ±2 are unset".into(),
        ));
    };
    match (two, minus_two, flags.sgn2_minus_one_zero) {
        (false, false, false) => Ok(if p3 { B4 } else { B2 }),
        (true, false, false) => Ok(if p3 { B3 } else { B1 }),
        (false, true, false) => Ok(B3),
        (false, false, true) => Ok(A2),
        (true, true, true) => Ok(A1),
        (a, b, c) => Err(Error::InconsistentFlags(format!(
            "sgn2(2) = 0: {a}, sgn2(-2) = 0: {b}, sgn2(-1) = 0: {c} cannot occur together"
        ))),
    }
}

/// The model `V ⊞ W` for a type and signature, with the generators of the
/// Q-imprimitive subspace.
#[derive(Debug, Clone)]
pub struct SqModel {
    /// `V ⊞ W` with the split at `dim V = r1`.
    pub space: BilinearSpace,
    pub generators: Vec<F2Vector>,
    pub subspace: Subspace,
}

/// `V = I^2 ⊞ H^{r1/2-1}` and `W = H^{r1/2+r2}` (A types) or
/// `I^2 ⊞ H^{r1/2+r2-1}` (B types).
pub fn model_space(family: TypeFamily, r1: usize, r2: usize) -> Result<BilinearSpace> {
    if r1 < 2 || r1 % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "the model needs r1 even and at least 2, got r1 = {r1}"
        )));
    }
    let h = r1 / 2;
    let v = BilinearSpace::i2_plus_hyperbolic(h - 1);
    let w = match family {
        TypeFamily::A => BilinearSpace::hyperbolic(h + r2),
        TypeFamily::B => BilinearSpace::i2_plus_hyperbolic(h + r2 - 1),
    };
    v.orthogonal_sum(&w)
}

/// The generating subspace of `ty` in the model space for `(r1, r2)`.
///
/// The noncanonical vector `w` is the first standard hyperbolic basis vector
/// of `W`.
pub fn sq_basis(ty: QImprimitiveType, r1: usize, r2: usize) -> Result<SqModel> {
    use QImprimitiveType::*;
    let space = model_space(ty.family(), r1, r2)?;
    let v_dim = r1;
    let w_dim = space.dim() - v_dim;
    let v_can = F2Vector::from_bits(0b11, v_dim);
    let w_can = match ty.family() {
        TypeFamily::A => F2Vector::zero(w_dim),
        TypeFamily::B => F2Vector::from_bits(0b11, w_dim),
    };
    let w_index = match ty.family() {
        TypeFamily::A => 0,
        TypeFamily::B => 2,
    };
    let needs_w = matches!(ty, A2 | B2 | B4);
    if needs_w && w_index >= w_dim {
        return Err(Error::InvalidParameters(format!(
            "type {ty} needs a hyperbolic plane in W, which is I^2 at (r1, r2) = ({r1}, {r2})"
        )));
    }
    let zero_v = F2Vector::zero(v_dim);
    let zero_w = F2Vector::zero(w_dim);
    let w = if needs_w {
        F2Vector::unit(w_dim, w_index)
    } else {
        zero_w
    };
    let pairs: Vec<(&F2Vector, &F2Vector)> = match ty {
        A1 => vec![(&v_can, &zero_w)],
        A2 => vec![(&v_can, &zero_w), (&zero_v, &w)],
        B1 => vec![(&v_can, &w_can)],
        B2 => vec![(&v_can, &w_can), (&zero_v, &w)],
        B3 => vec![(&v_can, &w_can), (&zero_v, &w_can)],
        B4 => vec![(&v_can, &w_can), (&zero_v, &w_can), (&zero_v, &w)],
    };
    let generators = pairs
        .into_iter()
        .map(|(a, b)| a.concat(b))
        .collect::<Result<Vec<_>>>()?;
    let subspace = Subspace::span(space.dim(), &generators)?;
    debug_assert_eq!(subspace.dim(), ty.generator_count());
    debug_assert!(space.is_totally_isotropic(&subspace)?);
    Ok(SqModel {
        space,
        generators,
        subspace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use QImprimitiveType::*;

    fn flags(p3: bool, two: Option<(bool, bool)>, m1: bool) -> SelmerFlags {
        SelmerFlags {
            has_p3mod4: p3,
            has_p1mod4: false,
            has_two: two.is_some(),
            sgn2_two_zero: two.map(|t| t.0),
            sgn2_minus_two_zero: two.map(|t| t.1),
            sgn2_minus_one_zero: m1,
        }
    }

    #[test]
    fn classifier_rows() {
        let rows = [
            (false, None, false, B1),
            (false, Some((false, false)), false, B2),
            (false, Some((true, false)), false, B1),
            (false, Some((false, true)), false, B3),
            (false, Some((false, false)), true, A2),
            (false, Some((true, true)), true, A1),
            (true, None, false, B3),
            (true, Some((false, false)), false, B4),
            (true, Some((true, false)), false, B3),
            (true, Some((false, true)), false, B3),
            (true, Some((false, false)), true, A2),
            (true, Some((true, true)), true, A1),
        ];
        for (p3, two, m1, ty) in rows {
            assert_eq!(classify_type(&flags(p3, two, m1)).unwrap(), ty);
        }
    }

    #[test]
    fn excluded_combinations() {
        assert!(classify_type(&flags(false, None, true)).is_err());
        assert!(classify_type(&flags(false, Some((true, true)), false)).is_err());
        assert!(classify_type(&flags(true, Some((true, false)), true)).is_err());
        let mut f = flags(false, None, false);
        f.sgn2_two_zero = Some(false);
        assert!(classify_type(&f).is_err());
        let mut f = flags(false, None, false);
        f.has_two = true;
        assert!(classify_type(&f).is_err());
    }

    #[test]
    fn trivial_flag() {
        assert!(flags(false, None, false).is_trivial());
        let mut f = flags(false, None, false);
        f.has_p1mod4 = true;
        assert!(!f.is_trivial());
        assert_eq!(classify_type(&f).unwrap(), B1);
    }

    #[test]
    fn sq_basis_examples() {
        let b1 = sq_basis(B1, 4, 0).unwrap();
        assert_eq!(b1.space.dim(), 8);
        assert_eq!(b1.subspace.dim(), 1);
        assert_eq!(b1.generators[0], F2Vector::parse("11001100").unwrap());

        let a2 = sq_basis(A2, 4, 0).unwrap();
        assert_eq!(a2.subspace.dim(), 2);
        assert!(a2.space.right().unwrap().is_alternating());
        assert_eq!(a2.generators[1], F2Vector::parse("00001000").unwrap());

        assert_eq!(sq_basis(B4, 4, 0).unwrap().subspace.dim(), 3);
        assert!(sq_basis(B1, 0, 2).is_err());
        assert!(sq_basis(B2, 2, 0).is_err());
    }

    #[test]
    fn generators_are_isotropic() {
        for ty in QImprimitiveType::ALL {
            for r1 in [2, 4, 6] {
                for r2 in 0..3 {
                    let Ok(m) = sq_basis(ty, r1, r2) else {
                        assert!(matches!((ty, r1, r2), (B2 | B4, 2, 0)));
                        continue;
                    };
                    assert!(m.space.is_totally_isotropic(&m.subspace).unwrap());
                    assert_eq!(m.subspace.dim(), ty.generator_count());
                    assert_eq!(m.space.split(), Some(r1));
                }
            }
        }
    }

    #[test]
    fn parse_labels() {
        for ty in QImprimitiveType::ALL {
            assert_eq!(ty.to_string().parse::<QImprimitiveType>().unwrap(), ty);
            assert_eq!(ty.code().parse::<QImprimitiveType>().unwrap(), ty);
        }
        assert!("C1".parse::<QImprimitiveType>().is_err());
    }
}
