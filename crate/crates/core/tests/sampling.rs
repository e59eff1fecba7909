use selmer_core::{
    enumerate_mti, sample_uniform_mti, sq_basis, BilinearSpace, MtiSampler, QImprimitiveType,
    Subspace,
};

#[test]
fn draws_are_uniform_over_h2() {
    let space = BilinearSpace::hyperbolic(2);
    let sampler = MtiSampler::new(&space, &Subspace::zero(4)).unwrap();
    assert_eq!(sampler.candidates().len(), 15);
    let draws = 100_000u64;
    let mut hits = [0u64; 15];
    for i in 0..draws {
        hits[sampler.draw_index(7, i)] += 1;
    }
    for h in hits {
        let f = h as f64 / draws as f64;
        assert!((f - 1.0 / 15.0).abs() < 0.01, "frequency {f}");
    }
}

#[test]
fn draws_are_reproducible() {
    let model = sq_basis(QImprimitiveType::B1, 4, 0).unwrap();
    let sampler = MtiSampler::new(&model.space, &model.subspace).unwrap();
    let a: Vec<usize> = (0..1000).map(|i| sampler.draw_index(42, i)).collect();
    let b: Vec<usize> = (0..1000).map(|i| sampler.draw_index(42, i)).collect();
    let c: Vec<usize> = (0..1000).map(|i| sampler.draw_index(43, i)).collect();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn samples_respect_the_constraint() {
    let model = sq_basis(QImprimitiveType::B1, 4, 0).unwrap();
    let g = &model.generators[0];
    for seed in 0..50 {
        let s = sample_uniform_mti(&model.space, &model.subspace, seed).unwrap();
        assert!(s.contains(g).unwrap());
        assert!(model.space.is_maximal_totally_isotropic(&s).unwrap());
    }
    let h = BilinearSpace::hyperbolic(1);
    let all = enumerate_mti(&h, &Subspace::zero(2)).unwrap();
    for seed in 0..20 {
        assert!(all.contains(&sample_uniform_mti(&h, &Subspace::zero(2), seed).unwrap()));
    }
}

#[test]
fn enumeration_is_deterministic() {
    let model = sq_basis(QImprimitiveType::B3, 4, 1).unwrap();
    let a = enumerate_mti(&model.space, &model.subspace).unwrap();
    let b = enumerate_mti(&model.space, &model.subspace).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0] < w[1]));
}
