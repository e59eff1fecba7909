//! Shared workloads for the criterion benches.

use selmer_core::{sq_basis, BilinearSpace, QImprimitiveType, SqModel};

/// Model spaces of increasing size for constrained enumeration.
pub fn models() -> Vec<(String, SqModel)> {
    [
        (QImprimitiveType::B1, 4, 0),
        (QImprimitiveType::B1, 4, 1),
        (QImprimitiveType::B3, 6, 0),
    ]
    .into_iter()
    .map(|(ty, r1, r2)| {
        let model = sq_basis(ty, r1, r2).expect("valid model");
        (format!("{ty} ({r1},{r2})"), model)
    })
    .collect()
}

/// Unconstrained hyperbolic spaces `H^t`.
pub fn hyperbolic(ts: &[usize]) -> Vec<(usize, BilinearSpace)> {
    ts.iter()
        .map(|&t| (t, BilinearSpace::hyperbolic(t)))
        .collect()
}
