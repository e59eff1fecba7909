//! Monte Carlo draws of uniform MTIs against the exact isotropy law.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use selmer_core::rational::to_f64;
use selmer_core::{isotropy_distribution, sq_basis, MtiSampler, QImprimitiveType};

use crate::table::{Cell, Table};

/// Cells further than this many standard errors from the exact law fail.
pub const SIGMA_GATE: f64 = 3.0;

#[derive(Debug, Clone)]
pub struct McRow {
    pub k: usize,
    pub count: u64,
    pub empirical: f64,
    pub exact: BigRational,
    pub std_err: f64,
    pub within: bool,
}

#[derive(Debug, Clone)]
pub struct McReport {
    pub ty: QImprimitiveType,
    pub r1: usize,
    pub r2: usize,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<McRow>,
    pub chi2: f64,
    pub df: usize,
}

impl McReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.within)
    }

    pub fn tables(&self) -> Vec<Table> {
        let mut cells = Table::new(
            format!(
                "Monte Carlo: {} at ({},{}), {} samples, seed {}",
                self.ty, self.r1, self.r2, self.samples, self.seed
            ),
            &[
                "k",
                "Count",
                "Empirical",
                "Exact",
                "Std err",
                "Within 3 sigma",
            ],
        );
        for r in &self.rows {
            cells.push(vec![
                Cell::Int(r.k as i64),
                Cell::Int(r.count as i64),
                Cell::Float(r.empirical),
                Cell::exact(r.exact.clone()),
                Cell::Float(r.std_err),
                Cell::text(if r.within { "yes" } else { "no" }),
            ]);
        }
        let mut summary = Table::new("Goodness of fit", &["Statistic", "Value"]);
        summary.push(vec![Cell::text("chi2"), Cell::Float(self.chi2)]);
        summary.push(vec![Cell::text("df"), Cell::Int(self.df as i64)]);
        summary.push(vec![
            Cell::text("passed"),
            Cell::text(if self.passed() { "yes" } else { "no" }),
        ]);
        vec![cells, summary]
    }
}

/// Draws `samples` MTIs containing the type's model subspace and compares
/// their isotropy ranks with the exact law.
///
/// Draw `i` depends only on `(seed, i)`, and counts are merged by addition,
/// so the report does not depend on the thread count.
pub fn run(
    ty: QImprimitiveType,
    r1: usize,
    r2: usize,
    samples: u64,
    seed: u64,
    cap: usize,
) -> anyhow::Result<McReport> {
    anyhow::ensure!(samples > 0, "sample count must be positive");
    let law = isotropy_distribution(ty, r1, r2)?;
    let model = sq_basis(ty, r1, r2)?;
    let sampler = MtiSampler::with_cap(&model.space, &model.subspace, cap)?;
    let ranks = sampler
        .candidates()
        .iter()
        .map(|s| model.space.isotropy_rank(s))
        .collect::<selmer_core::Result<Vec<_>>>()?;

    let max_k = ranks.iter().copied().max().unwrap_or(0).max(r1 / 2);
    let counts = (0..samples)
        .into_par_iter()
        .fold(
            || vec![0u64; max_k + 1],
            |mut acc, i| {
                acc[ranks[sampler.draw_index(seed, i)]] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; max_k + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let n = samples as f64;
    let mut rows = Vec::new();
    let mut chi2 = 0.0;
    let mut cells = 0usize;
    for (k, &count) in counts.iter().enumerate() {
        let exact = law.probability(k);
        let p = to_f64(&exact);
        let empirical = count as f64 / n;
        let std_err = (p * (1.0 - p) / n).sqrt();
        let within = if std_err == 0.0 {
            empirical == p
        } else {
            (empirical - p).abs() <= SIGMA_GATE * std_err
        };
        if p > 0.0 {
            let expected = n * p;
            chi2 += (count as f64 - expected).powi(2) / expected;
            cells += 1;
        }
        rows.push(McRow {
            k,
            count,
            empirical,
            exact,
            std_err,
            within,
        });
    }
    Ok(McReport {
        ty,
        r1,
        r2,
        samples,
        seed,
        rows,
        chi2,
        df: cells.saturating_sub(1),
    })
}

/// Counts by rank, for callers that want the raw histogram.
pub fn histogram(report: &McReport) -> BTreeMap<usize, u64> {
    report.rows.iter().map(|r| (r.k, r.count)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_never_has_rank_zero() {
        let r = run(QImprimitiveType::A1, 4, 0, 2_000, 1, 14).unwrap();
        assert_eq!(r.rows[0].count, 0);
        assert!(r.passed());
    }

    #[test]
    fn b1_small_run_is_reproducible() {
        let a = run(QImprimitiveType::B1, 4, 0, 3_000, 9, 14).unwrap();
        let b = run(QImprimitiveType::B1, 4, 0, 3_000, 9, 14).unwrap();
        assert_eq!(histogram(&a), histogram(&b));
        assert_eq!(histogram(&a).values().sum::<u64>(), 3_000);
        assert_eq!(a.df, 2);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(run(QImprimitiveType::B1, 4, 1, 10, 0, 8).is_err());
    }
}
