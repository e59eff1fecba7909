//! Verification suites: closed forms against exhaustive enumeration and
//! exact mass identities.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::bail;
use num_bigint::BigUint;
use rayon::prelude::*;
use selmer_core::masses::{
    c_poly, enumerate_symbols, enumerate_symbols_even, mass_unramified_family,
    partition_identity_failures, phi, phi_inverse, symbol_mass, MassPoly,
};
use selmer_core::{
    b_count, d_count, enumerate_mti_with_cap, isotropy_distribution, rank_histogram_with_cap,
    sq_basis, BilinearSpace, F2Vector, QImprimitiveType, Subspace,
};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Distributions,
    Masses,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Distributions => "distributions",
            Suite::Masses => "masses",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Ok(match s {
            "counts" => Suite::Counts,
            "distributions" => Suite::Distributions,
            "masses" => Suite::Masses,
            "all" => Suite::All,
            _ => bail!("unknown suite {s:?} (expected counts, distributions, masses or all)"),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Probe = Box<dyn Fn() -> Result<String, String> + Send + Sync>;

struct Pending {
    suite: &'static str,
    name: String,
    probe: Probe,
}

fn pending(
    suite: &'static str,
    name: impl Into<String>,
    probe: impl Fn() -> Result<String, String> + Send + Sync + 'static,
) -> Pending {
    Pending {
        suite,
        name: name.into(),
        probe: Box::new(probe),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

const COUNTS_MAX_T: usize = 5;

fn counts_checks(cap: usize) -> Vec<Pending> {
    let mut out = Vec::new();
    for t in 0..=COUNTS_MAX_T {
        out.push(pending("counts", format!("b({t}) in H^{t}"), move || {
            let space = BilinearSpace::hyperbolic(t);
            let n = enumerate_mti_with_cap(&space, &Subspace::zero(space.dim()), cap)
                .map_err(|e| e.to_string())?
                .len();
            expect_eq("count", BigUint::from(n), b_count(t))?;
            Ok(format!("{n} MTIs"))
        }));
        if 2 * t + 2 <= 2 * COUNTS_MAX_T {
            out.push(pending(
                "counts",
                format!("b({t}) in I^2+H^{t}"),
                move || {
                    let space = BilinearSpace::i2_plus_hyperbolic(t);
                    let n = enumerate_mti_with_cap(&space, &Subspace::zero(space.dim()), cap)
                        .map_err(|e| e.to_string())?
                        .len();
                    expect_eq("count", BigUint::from(n), b_count(t))?;
                    Ok(format!("{n} MTIs"))
                },
            ));
        }
    }
    for n in 0..=2usize {
        for m in 0..=4usize {
            if 2 * n + m > 4 {
                continue;
            }
            out.push(pending(
                "counts",
                format!("d({n},{m},k) split H"),
                move || d_split_hyperbolic(n, m, cap),
            ));
            out.push(pending(
                "counts",
                format!("d({n},{m},k) split I2 left"),
                move || d_split_left(n, m, cap),
            ));
            out.push(pending(
                "counts",
                format!("d({n},{m},k) split I2 both"),
                move || d_split_both(n, m, cap),
            ));
        }
    }
    out
}

fn d(n: usize, m: usize, k: usize) -> Result<BigUint, String> {
    d_count(n, m, k).map_err(|e| e.to_string())
}

/// `H^n ⊞ H^{n+m}`: rank `k` has `d(n,m,k)` MTIs.
fn d_split_hyperbolic(n: usize, m: usize, cap: usize) -> Result<String, String> {
    let s = BilinearSpace::hyperbolic(n)
        .orthogonal_sum(&BilinearSpace::hyperbolic(n + m))
        .map_err(|e| e.to_string())?;
    let h =
        rank_histogram_with_cap(&s, &Subspace::zero(s.dim()), cap).map_err(|e| e.to_string())?;
    for k in 0..=n {
        expect_eq(&format!("k={k}"), BigUint::from(h.count(k)), d(n, m, k)?)?;
    }
    expect_eq("total", h.total(), (0..=n).map(|k| h.count(k)).sum::<u64>())?;
    Ok(format!("{} MTIs", h.total()))
}

/// `(I^2 ⊞ H^n) ⊞ H^{n+m}`: every rank is shifted up by one.
fn d_split_left(n: usize, m: usize, cap: usize) -> Result<String, String> {
    let s = BilinearSpace::i2_plus_hyperbolic(n)
        .orthogonal_sum(&BilinearSpace::hyperbolic(n + m))
        .map_err(|e| e.to_string())?;
    let h =
        rank_histogram_with_cap(&s, &Subspace::zero(s.dim()), cap).map_err(|e| e.to_string())?;
    expect_eq("k=0", h.count(0), 0)?;
    for k in 0..=n {
        expect_eq(
            &format!("k={}", k + 1),
            BigUint::from(h.count(k + 1)),
            d(n, m, k)?,
        )?;
    }
    Ok(format!("{} MTIs", h.total()))
}

/// `(I^2 ⊞ H^n) ⊞ (I^2 ⊞ H^{n+m})`, split by whether `(w_can, 0)` lies in
/// the MTI.
fn d_split_both(n: usize, m: usize, cap: usize) -> Result<String, String> {
    let s = BilinearSpace::i2_plus_hyperbolic(n)
        .orthogonal_sum(&BilinearSpace::i2_plus_hyperbolic(n + m))
        .map_err(|e| e.to_string())?;
    let dim = s.dim();
    let wv = F2Vector::from_bits(0b11, dim);
    let all = enumerate_mti_with_cap(&s, &Subspace::zero(dim), cap).map_err(|e| e.to_string())?;
    let mut with = vec![0u64; n + 2];
    let mut without = vec![0u64; n + 2];
    for x in &all {
        let k = s.isotropy_rank(x).map_err(|e| e.to_string())?;
        if k > n + 1 {
            return Err(format!("rank {k} exceeds {}", n + 1));
        }
        if x.contains(&wv).map_err(|e| e.to_string())? {
            with[k] += 1;
        } else {
            without[k] += 1;
        }
    }
    let scale = BigUint::from(2u32).pow((2 * n + m + 1) as u32);
    for k in 0..=n + 1 {
        let exp_with = if k >= 1 {
            d(n, m, k - 1)?
        } else {
            BigUint::ZERO
        };
        let exp_without = if k <= n {
            &scale * d(n, m, k)?
        } else {
            BigUint::ZERO
        };
        expect_eq(
            &format!("containing k={k}"),
            BigUint::from(with[k]),
            exp_with,
        )?;
        expect_eq(
            &format!("avoiding k={k}"),
            BigUint::from(without[k]),
            exp_without,
        )?;
    }
    Ok(format!("{} MTIs", all.len()))
}

/// Signatures covered by the distributions suite.
pub const DISTRIBUTION_SIGNATURES: [(usize, usize); 4] = [(2, 0), (4, 0), (2, 1), (4, 1)];

/// Compares an isotropy law with the normalized histogram of MTIs containing
/// the type's model subspace. `Ok(None)` when the type does not occur.
pub fn law_matches_enumeration(
    ty: QImprimitiveType,
    r1: usize,
    r2: usize,
    cap: usize,
) -> Result<Option<String>, String> {
    let (law, model) = match (isotropy_distribution(ty, r1, r2), sq_basis(ty, r1, r2)) {
        (Ok(law), Ok(model)) => (law, model),
        (Err(_), Err(_)) => return Ok(None),
        (Ok(_), Err(e)) | (Err(e), Ok(_)) => return Err(format!("law and model disagree: {e}")),
    };
    let h =
        rank_histogram_with_cap(&model.space, &model.subspace, cap).map_err(|e| e.to_string())?;
    let freq = h.frequencies();
    let max_k = r1 / 2;
    for k in 0..=max_k.max(freq.keys().max().copied().unwrap_or(0)) {
        let got = freq.get(&k).cloned().unwrap_or_default();
        expect_eq(&format!("k={k}"), got, law.probability(k))?;
    }
    let law_text: Vec<String> = (0..=max_k)
        .map(|k| law.probability(k).to_string())
        .collect();
    Ok(Some(format!(
        "{} MTIs, law ({})",
        h.total(),
        law_text.join(", ")
    )))
}

fn distribution_checks(cap: usize) -> Vec<Pending> {
    let mut out = Vec::new();
    for (r1, r2) in DISTRIBUTION_SIGNATURES {
        for ty in QImprimitiveType::ALL {
            out.push(pending(
                "distributions",
                format!("{ty} at ({r1},{r2})"),
                move || {
                    Ok(law_matches_enumeration(ty, r1, r2, cap)?
                        .unwrap_or_else(|| "type does not occur".to_string()))
                },
            ));
        }
    }
    out
}

const MASS_MAX_DEGREE: usize = 8;
const MASS_MAX_HALF: usize = 4;

fn mass_checks() -> Vec<Pending> {
    let mut out = Vec::new();
    for n in 1..=MASS_MAX_DEGREE {
        out.push(pending(
            "masses",
            format!("total mass in degree {n}"),
            move || {
                let symbols = enumerate_symbols(n);
                let total: MassPoly = symbols.iter().map(symbol_mass).sum();
                expect_eq("sum", total.to_string(), c_poly(n).to_string())?;
                Ok(format!("{} symbols, c = {total}", symbols.len()))
            },
        ));
        out.push(pending(
            "masses",
            format!("per-partition masses in degree {n}"),
            move || {
                let failures = partition_identity_failures(n);
                if failures.is_empty() {
                    Ok("all partitions agree".to_string())
                } else {
                    Err(format!(
                        "{} partitions disagree, first {:?}",
                        failures.len(),
                        failures[0].0.parts()
                    ))
                }
            },
        ));
    }
    for m in 1..=MASS_MAX_HALF {
        out.push(pending(
            "masses",
            format!("even symbols in degree {}", 2 * m),
            move || {
                let even = enumerate_symbols_even(2 * m);
                let total: MassPoly = even.iter().map(symbol_mass).sum();
                expect_eq("sum", total.to_string(), c_poly(m).shift(m).to_string())?;
                for s in &even {
                    let back = phi_inverse(&phi(s).map_err(|e| e.to_string())?);
                    expect_eq("phi round trip", back.to_string(), s.to_string())?;
                }
                Ok(format!("{} symbols", even.len()))
            },
        ));
        out.push(pending(
            "masses",
            format!("unramified families, m = {m}"),
            move || {
                for disc in 0..=3 {
                    for divisor in [2, 4] {
                        let f =
                            mass_unramified_family(m, disc, divisor).map_err(|e| e.to_string())?;
                        expect_eq(
                            &format!("disc {disc}, divisor {divisor}"),
                            f.by_symbols.to_string(),
                            f.closed_form.to_string(),
                        )?;
                    }
                }
                Ok("both routes agree".to_string())
            },
        ));
    }
    out
}

/// Runs a suite, fanning checks out over the rayon pool. Results keep the
/// declaration order.
pub fn run(suite: Suite, cap: usize) -> Vec<Check> {
    let mut jobs = Vec::new();
    if matches!(suite, Suite::Counts | Suite::All) {
        jobs.extend(counts_checks(cap));
    }
    if matches!(suite, Suite::Distributions | Suite::All) {
        jobs.extend(distribution_checks(cap));
    }
    if matches!(suite, Suite::Masses | Suite::All) {
        jobs.extend(mass_checks());
    }
    jobs.par_iter()
        .map(|job| {
            let (passed, detail) = match (job.probe)() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check {
                suite: job.suite,
                name: job.name.clone(),
                passed,
                detail,
            }
        })
        .collect()
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn render_text(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {}: {} ({})", c.suite, c.name, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(
        out,
        "{} checks, {} passed, {failed} failed",
        checks.len(),
        checks.len() - failed
    );
    out
}

pub fn render_json(checks: &[Check]) -> String {
    let failed = checks.iter().filter(|c| !c.passed).count();
    let v = json!({
        "passed": failed == 0,
        "total": checks.len(),
        "failed": failed,
        "checks": checks.iter().map(|c| json!({
            "suite": c.suite,
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        assert_eq!("masses".parse::<Suite>().unwrap(), Suite::Masses);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn mass_suite_passes() {
        let checks = run(Suite::Masses, 14);
        assert!(all_passed(&checks), "{}", render_text(&checks));
        assert_eq!(checks.len(), 2 * MASS_MAX_DEGREE + 2 * MASS_MAX_HALF);
    }

    #[test]
    fn cap_violations_are_reported_not_raised() {
        let checks = run(Suite::Counts, 4);
        assert!(!all_passed(&checks));
        assert!(checks.iter().any(|c| c.detail.contains("cap")));
    }

    #[test]
    fn json_report_shape() {
        let checks = vec![Check {
            suite: "masses",
            name: "x".into(),
            passed: false,
            detail: "y".into(),
        }];
        let v: serde_json::Value = serde_json::from_str(&render_json(&checks)).unwrap();
        assert_eq!(v["passed"], false);
        assert_eq!(v["failed"], 1);
    }
}
