//! Single-shot reports: one isotropy law, or the local masses at one prime.

use anyhow::ensure;
use selmer_core::euler::is_prime;
use selmer_core::masses::{c_poly, enumerate_symbols, prob_p_in_selmer, symbol_mass};
use selmer_core::{isotropy_distribution, QImprimitiveType};

use crate::table::{Cell, Table};

pub fn dist_table(ty: QImprimitiveType, r1: usize, r2: usize) -> anyhow::Result<Table> {
    let law = isotropy_distribution(ty, r1, r2)?;
    let mut t = Table::new(
        format!("Isotropy rank law of {ty} at ({r1},{r2})"),
        &["k", "Probability", "Decimal"],
    );
    for (k, p) in law.support() {
        t.push(vec![
            Cell::Int(*k as i64),
            Cell::exact(p.clone()),
            Cell::Float(selmer_core::rational::to_f64(p)),
        ]);
    }
    Ok(t)
}

/// Largest degree accepted by [`mass_tables`]; the symbol count grows fast.
pub const MAX_MASS_DEGREE: usize = 24;

pub fn mass_tables(degree: usize, p: u64) -> anyhow::Result<Vec<Table>> {
    ensure!(
        (1..=MAX_MASS_DEGREE).contains(&degree),
        "degree must lie in 1..={MAX_MASS_DEGREE}"
    );
    ensure!(is_prime(p), "{p} is not prime");
    let mut symbols = Table::new(
        format!("Splitting symbols of degree {degree} at p = {p}"),
        &[
            "Symbol",
            "Disc exponent",
            "Automorphisms",
            "Mass",
            "Mass at p",
        ],
    );
    for sigma in enumerate_symbols(degree) {
        let mass = symbol_mass(&sigma);
        symbols.push(vec![
            Cell::text(sigma.to_string()),
            Cell::Int(sigma.disc_exponent() as i64),
            Cell::text(sigma.automorphism_count().to_string()),
            Cell::text(mass.to_string()),
            Cell::exact(mass.eval(p)),
        ]);
    }

    let mut totals = Table::new(
        format!("Total mass in degree {degree}"),
        &["Quantity", "Value", "Decimal"],
    );
    let c = c_poly(degree);
    totals.push(vec![
        Cell::text("c(n, x)"),
        Cell::text(c.to_string()),
        Cell::text(""),
    ]);
    let at_p = c.eval(p);
    let decimal = selmer_core::rational::to_f64(&at_p);
    totals.push(vec![
        Cell::text("c(n, p)"),
        Cell::exact(at_p),
        Cell::Float(decimal),
    ]);
    if degree.is_multiple_of(2) {
        let q = prob_p_in_selmer(degree, p)?;
        let decimal = selmer_core::rational::to_f64(&q);
        totals.push(vec![
            Cell::text("Pr(p in Sel)"),
            Cell::exact(q),
            Cell::Float(decimal),
        ]);
    }
    Ok(vec![symbols, totals])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dist_of_b1_mixed() {
        let t = dist_table(QImprimitiveType::B1, 2, 1).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.rows[0][1].display(4), "4/5");
    }

    #[test]
    fn mass_at_two_in_degree_two() {
        let t = mass_tables(2, 2).unwrap();
        assert_eq!(t[0].rows.len(), 3);
        assert_eq!(t[1].cell("c(n, p)", "Value").unwrap().display(4), "3/2");
        assert!(t[1].cell("Pr(p in Sel)", "Value").is_some());
        assert!(mass_tables(3, 4).is_err());
        assert!(mass_tables(0, 2).is_err());
    }
}
