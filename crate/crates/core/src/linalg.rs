//! Word-packed Gaussian elimination over F2.
//!
//! Rows and equations are `u64` bit masks. Pivots are always taken at the
//! lowest set bit, so every routine here is deterministic.

#[inline]
pub(crate) fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

/// Reduced row echelon form: nonzero rows sorted by strictly increasing pivot
/// (lowest set bit), every pivot column cleared in all other rows.
pub(crate) fn rref(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::with_capacity(rows.len());
    for &row in rows {
        let mut r = row;
        for &b in &basis {
            if r & (b & b.wrapping_neg()) != 0 {
                r ^= b;
            }
        }
        if r == 0 {
            continue;
        }
        let pivot = r & r.wrapping_neg();
        for b in basis.iter_mut() {
            if *b & pivot != 0 {
                *b ^= r;
            }
        }
        basis.push(r);
    }
    basis.sort_by_key(|b| b.trailing_zeros());
    basis
}

pub(crate) fn rank(rows: &[u64]) -> usize {
    rref(rows).len()
}

/// Reduces `v` against an echelon basis produced by [`rref`].
pub(crate) fn reduce(v: u64, basis: &[u64]) -> u64 {
    let mut r = v;
    for &b in basis {
        if r & (b & b.wrapping_neg()) != 0 {
            r ^= b;
        }
    }
    r
}

/// Solution set of a linear system over F2.
#[derive(Debug, Clone)]
pub(crate) struct Solution {
    pub particular: u64,
    pub kernel: Vec<u64>,
}

/// Solves `parity(coeffs & x) == rhs` for every equation, with `x` supported
/// on the variable mask `vars`. Returns `None` when inconsistent.
pub(crate) fn solve(equations: &[(u64, bool)], vars: u64) -> Option<Solution> {
    let mut reduced: Vec<(u64, bool)> = Vec::with_capacity(equations.len());
    for &(coeffs, rhs) in equations {
        let mut c = coeffs & vars;
        let mut r = rhs;
        for &(bc, br) in &reduced {
            if c & (bc & bc.wrapping_neg()) != 0 {
                c ^= bc;
                r ^= br;
            }
        }
        if c == 0 {
            if r {
                return None;
            }
            continue;
        }
        let pivot = c & c.wrapping_neg();
        for eq in reduced.iter_mut() {
            if eq.0 & pivot != 0 {
                eq.0 ^= c;
                eq.1 ^= r;
            }
        }
        reduced.push((c, r));
    }

    let pivots = reduced
        .iter()
        .fold(0u64, |acc, (c, _)| acc | (c & c.wrapping_neg()));
    let particular = reduced
        .iter()
        .filter(|(_, r)| *r)
        .fold(0u64, |acc, (c, _)| acc | (c & c.wrapping_neg()));

    let mut free = vars & !pivots;
    let mut kernel = Vec::new();
    while free != 0 {
        let j = free & free.wrapping_neg();
        free ^= j;
        let mut v = j;
        for &(c, _) in &reduced {
            if c & j != 0 {
                v |= c & c.wrapping_neg();
            }
        }
        kernel.push(v);
    }
    Some(Solution { particular, kernel })
}

/// Basis of `{x : parity(f & x) = 0 for every f}` inside `F2^n`.
pub(crate) fn annihilator(functionals: &[u64], n: usize) -> Vec<u64> {
    let eqs: Vec<(u64, bool)> = functionals.iter().map(|&f| (f, false)).collect();
    let sol = solve(&eqs, crate::vector::mask(n)).expect("homogeneous systems are consistent");
    rref(&sol.kernel)
}

/// Applies a symmetric bit matrix (rows) to `v`.
pub(crate) fn apply(rows: &[u64], v: u64) -> u64 {
    rows.iter().enumerate().fold(0u64, |acc, (i, &row)| {
        acc | (u64::from(parity(row & v)) << i)
    })
}
