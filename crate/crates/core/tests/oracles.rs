//! Closed-form counts and laws against exhaustive enumeration.

use num_bigint::BigUint;
use selmer_core::{
    b_count, d_count, enumerate_mti, isotropy_distribution, rank_histogram, sq_basis,
    BilinearSpace, F2Vector, QImprimitiveType, Subspace,
};

fn count(space: &BilinearSpace) -> BigUint {
    BigUint::from(
        enumerate_mti(space, &Subspace::zero(space.dim()))
            .unwrap()
            .len(),
    )
}

#[test]
fn b_matches_enumeration() {
    for t in 0..=5 {
        assert_eq!(count(&BilinearSpace::hyperbolic(t)), b_count(t), "H^{t}");
        if 2 * t + 2 <= 10 {
            assert_eq!(
                count(&BilinearSpace::i2_plus_hyperbolic(t)),
                b_count(t),
                "I2+H^{t}"
            );
        }
    }
}

/// `d(n, m, k)` and its shifts in the four split configurations.
#[test]
fn d_matches_split_histograms() {
    for n in 0..=2usize {
        for m in 0..=4usize {
            if 2 * n + m > 4 {
                continue;
            }
            let d = |k: usize| d_count(n, m, k).unwrap();

            // H^n ⊞ H^{n+m}.
            let s = BilinearSpace::hyperbolic(n)
                .orthogonal_sum(&BilinearSpace::hyperbolic(n + m))
                .unwrap();
            let h = rank_histogram(&s, &Subspace::zero(s.dim())).unwrap();
            for k in 0..=n {
                assert_eq!(BigUint::from(h.count(k)), d(k), "case 1 ({n},{m}) k={k}");
            }
            assert_eq!(h.total(), (0..=n).map(|k| h.count(k)).sum::<u64>());

            // (I^2 ⊞ H^n) ⊞ H^{n+m}.
            let s = BilinearSpace::i2_plus_hyperbolic(n)
                .orthogonal_sum(&BilinearSpace::hyperbolic(n + m))
                .unwrap();
            let h = rank_histogram(&s, &Subspace::zero(s.dim())).unwrap();
            for k in 0..=n {
                assert_eq!(
                    BigUint::from(h.count(k + 1)),
                    d(k),
                    "case 2 ({n},{m}) k={k}"
                );
            }
            assert_eq!(h.count(0), 0);

            // (I^2 ⊞ H^n) ⊞ (I^2 ⊞ H^{n+m}), split by whether (w_can, 0)
            // lies in the MTI.
            let left = BilinearSpace::i2_plus_hyperbolic(n);
            let s = left
                .orthogonal_sum(&BilinearSpace::i2_plus_hyperbolic(n + m))
                .unwrap();
            let dim = s.dim();
            let wv = F2Vector::from_bits(0b11, dim);
            let all = enumerate_mti(&s, &Subspace::zero(dim)).unwrap();
            let scale = BigUint::from(2u32).pow((2 * n + m + 1) as u32);
            for k in 0..=n + 1 {
                let with = all
                    .iter()
                    .filter(|x| x.contains(&wv).unwrap() && s.isotropy_rank(x).unwrap() == k)
                    .count();
                let without = all
                    .iter()
                    .filter(|x| !x.contains(&wv).unwrap() && s.isotropy_rank(x).unwrap() == k)
                    .count();
                let exp_with = if k >= 1 { d(k - 1) } else { BigUint::ZERO };
                let exp_without = if k <= n { &scale * d(k) } else { BigUint::ZERO };
                assert_eq!(BigUint::from(with), exp_with, "case 3a ({n},{m}) k={k}");
                assert_eq!(
                    BigUint::from(without),
                    exp_without,
                    "case 3b ({n},{m}) k={k}"
                );
            }
        }
    }
}

#[test]
fn isotropy_laws_match_constrained_enumeration() {
    for ty in QImprimitiveType::ALL {
        for r1 in [2usize, 4, 6] {
            for r2 in 0..=4usize {
                if 2 * (r1 + r2) > 12 {
                    continue;
                }
                let law = isotropy_distribution(ty, r1, r2);
                let model = sq_basis(ty, r1, r2);
                let (Ok(law), Ok(model)) = (law, model) else {
                    assert!(matches!(
                        (ty, r1, r2),
                        (QImprimitiveType::B2 | QImprimitiveType::B4, 2, 0)
                    ));
                    continue;
                };
                let h = rank_histogram(&model.space, &model.subspace).unwrap();
                let freq = h.frequencies();
                for (k, p) in law.support() {
                    let got = freq.get(k).cloned().unwrap_or_default();
                    assert_eq!(&got, p, "{ty} at ({r1},{r2}), k={k}");
                }
                for (k, p) in &freq {
                    assert_eq!(&law.probability(*k), p, "{ty} at ({r1},{r2}), k={k}");
                }
            }
        }
    }
}

#[test]
fn every_enumerated_subspace_is_maximal() {
    for space in [
        BilinearSpace::hyperbolic(3),
        BilinearSpace::i2_plus_hyperbolic(2),
        BilinearSpace::dot(5),
        BilinearSpace::dot(6),
    ] {
        for s in enumerate_mti(&space, &Subspace::zero(space.dim())).unwrap() {
            assert!(space.is_maximal_totally_isotropic(&s).unwrap());
            assert_eq!(s.dim(), space.dim() / 2);
        }
    }
}
