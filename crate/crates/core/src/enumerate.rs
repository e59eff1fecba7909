//! Enumeration, counting and uniform sampling of maximal totally isotropic
//! subspaces (MTIs).
//!
//! Over F2, `b(v, v) = diag(G) · v` is linear, so "isotropic and orthogonal
//! to everything chosen so far" is a linear condition on the next basis
//! vector. MTIs are generated directly in reduced echelon form, building rows
//! from the highest pivot down; each row is drawn from the solution space of
//! a linear system, so every MTI is produced exactly once.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::space::BilinearSpace;
use crate::subspace::Subspace;
use crate::vector::mask;

/// Default largest ambient dimension accepted by the enumerator.
pub const DEFAULT_ENUMERATION_CAP: usize = 14;

/// Counts of MTIs bucketed by isotropy rank.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankHistogram {
    counts: BTreeMap<usize, u64>,
}

impl RankHistogram {
    pub fn add(&mut self, k: usize) {
        *self.counts.entry(k).or_insert(0) += 1;
    }

    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    /// Exact frequencies; empty when the histogram is empty.
    pub fn frequencies(&self) -> BTreeMap<usize, BigRational> {
        let total = BigInt::from(self.total());
        self.counts
            .iter()
            .map(|(&k, &c)| (k, BigRational::new(BigInt::from(c), total.clone())))
            .collect()
    }
}

impl FromIterator<usize> for RankHistogram {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut h = RankHistogram::default();
        for k in iter {
            h.add(k);
        }
        h
    }
}

fn validate(space: &BilinearSpace, containing: &Subspace, cap: usize) -> Result<()> {
    if space.dim() > cap {
        return Err(Error::EnumerationCap {
            dim: space.dim(),
            cap,
        });
    }
    space.check_subspace(containing)?;
    if !space.is_totally_isotropic(containing)? {
        return Err(Error::NotTotallyIsotropic);
    }
    Ok(())
}

/// All MTIs of `space` containing `containing`, sorted lexicographically by
/// their echelon basis bits. Uses [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_mti(space: &BilinearSpace, containing: &Subspace) -> Result<Vec<Subspace>> {
    enumerate_mti_with_cap(space, containing, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_mti_with_cap(
    space: &BilinearSpace,
    containing: &Subspace,
    cap: usize,
) -> Result<Vec<Subspace>> {
    validate(space, containing, cap)?;
    let n = space.dim();
    let target = n / 2;
    if target == 0 {
        return Ok(vec![Subspace::zero(n)]);
    }

    // An MTI inside S0^⊥ automatically contains S0, so only the
    // orthogonality functionals of S0 (plus isotropy) constrain the search.
    let mut base: Vec<u64> = containing
        .basis()
        .iter()
        .map(|v| space.pair_bits(v.bits()))
        .collect();
    base.push(space.diagonal().bits());
    let base = linalg::rref(&base);

    let search = Search {
        space,
        full: mask(n),
        target,
    };

    let top = search.candidates(&base, 0, n, target);
    let mut out: Vec<Subspace> = top
        .into_par_iter()
        .flat_map_iter(|row| {
            let mut found = Vec::new();
            let mut rows = vec![row];
            let mut constraints = base.clone();
            constraints.push(space.pair_bits(row));
            let pivots = row & row.wrapping_neg();
            search.extend(
                &mut rows,
                &mut constraints,
                pivots,
                row.trailing_zeros() as usize,
                &mut found,
            );
            found
        })
        .collect();
    out.sort();
    debug_assert!(out
        .iter()
        .all(|s| s.contains_subspace(containing).unwrap_or(false)));
    Ok(out)
}

struct Search<'a> {
    space: &'a BilinearSpace,
    full: u64,
    target: usize,
}

impl Search<'_> {
    /// Every admissible next row whose pivot lies below `hi`, given that
    /// `remaining` rows (including this one) are still to be placed.
    fn candidates(
        &self,
        constraints: &[u64],
        pivots: u64,
        hi: usize,
        remaining: usize,
    ) -> Vec<u64> {
        let mut rows = Vec::new();
        if remaining == 0 || hi < remaining {
            return rows;
        }
        for p in (remaining - 1..hi).rev() {
            let vars = self.full & !mask(p + 1) & !pivots;
            let eqs: Vec<(u64, bool)> = constraints
                .iter()
                .map(|&f| (f, (f >> p) & 1 == 1))
                .collect();
            let Some(sol) = linalg::solve(&eqs, vars) else {
                continue;
            };
            let base_row = (1u64 << p) | sol.particular;
            let count = 1u64 << sol.kernel.len();
            let mut current = base_row;
            for i in 0..count {
                if i > 0 {
                    current ^= sol.kernel[i.trailing_zeros() as usize];
                }
                if remaining == 1 || self.feasible(constraints, current, pivots, p, remaining - 1) {
                    rows.push(current);
                }
            }
        }
        rows
    }

    /// Necessary condition for placing `needed` more rows with pivots below
    /// `p`: the admissible vectors must project onto at least `needed`
    /// dimensions of the coordinates below `p`.
    fn feasible(
        &self,
        constraints: &[u64],
        row: u64,
        pivots: u64,
        p: usize,
        needed: usize,
    ) -> bool {
        let pivots = pivots | (1u64 << p);
        let mut eqs: Vec<(u64, bool)> = constraints.iter().map(|&f| (f, false)).collect();
        eqs.push((self.space.pair_bits(row), false));
        let vars = self.full & !pivots;
        let all = linalg::solve(&eqs, vars).map_or(0, |s| s.kernel.len());
        let high = linalg::solve(&eqs, vars & !mask(p)).map_or(0, |s| s.kernel.len());
        all - high >= needed
    }

    fn extend(
        &self,
        rows: &mut Vec<u64>,
        constraints: &mut Vec<u64>,
        pivots: u64,
        hi: usize,
        out: &mut Vec<Subspace>,
    ) {
        let remaining = self.target - rows.len();
        if remaining == 0 {
            let mut sorted = rows.clone();
            sorted.reverse();
            out.push(Subspace::from_canonical_rows(self.space.dim(), &sorted));
            return;
        }
        for row in self.candidates(constraints, pivots, hi, remaining) {
            rows.push(row);
            constraints.push(self.space.pair_bits(row));
            self.extend(
                rows,
                constraints,
                pivots | (row & row.wrapping_neg()),
                row.trailing_zeros() as usize,
                out,
            );
            constraints.pop();
            rows.pop();
        }
    }
}

/// Number of MTIs containing `containing`.
pub fn count_mti(space: &BilinearSpace, containing: &Subspace) -> Result<usize> {
    enumerate_mti(space, containing).map(|v| v.len())
}

/// Histogram of isotropy ranks over all MTIs containing `containing`.
pub fn rank_histogram(space: &BilinearSpace, containing: &Subspace) -> Result<RankHistogram> {
    rank_histogram_with_cap(space, containing, DEFAULT_ENUMERATION_CAP)
}

pub fn rank_histogram_with_cap(
    space: &BilinearSpace,
    containing: &Subspace,
    cap: usize,
) -> Result<RankHistogram> {
    if space.split().is_none() {
        return Err(Error::SplitUnset);
    }
    let all = enumerate_mti_with_cap(space, containing, cap)?;
    all.iter()
        .map(|s| space.isotropy_rank(s))
        .collect::<Result<Vec<_>>>()
        .map(|ks| ks.into_iter().collect())
}

/// Uniform sampler over the MTIs containing a fixed subspace.
///
/// Draw `i` under seed `s` uses a ChaCha8 generator seeded with `s` on
/// stream `i`, so draws are reproducible and independent of evaluation
/// order.
#[derive(Debug, Clone)]
pub struct MtiSampler {
    candidates: Vec<Subspace>,
}

impl MtiSampler {
    pub fn new(space: &BilinearSpace, containing: &Subspace) -> Result<Self> {
        Self::with_cap(space, containing, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(space: &BilinearSpace, containing: &Subspace, cap: usize) -> Result<Self> {
        let candidates = enumerate_mti_with_cap(space, containing, cap)?;
        if candidates.is_empty() {
            return Err(Error::EmptyCandidateSet);
        }
        Ok(Self { candidates })
    }

    pub fn candidates(&self) -> &[Subspace] {
        &self.candidates
    }

    /// Index into [`candidates`](Self::candidates) of draw `draw` under `seed`.
    pub fn draw_index(&self, seed: u64, draw: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(draw);
        rng.random_range(0..self.candidates.len())
    }

    pub fn draw(&self, seed: u64, draw: u64) -> &Subspace {
        &self.candidates[self.draw_index(seed, draw)]
    }
}

/// A single uniform draw (draw index 0) from the MTIs containing `containing`.
pub fn sample_uniform_mti(
    space: &BilinearSpace,
    containing: &Subspace,
    seed: u64,
) -> Result<Subspace> {
    let sampler = MtiSampler::new(space, containing)?;
    Ok(sampler.draw(seed, 0).clone())
}
