//! The predicted tables: type densities, isotropy laws and class-group
//! statistics.

use std::str::FromStr;

use anyhow::bail;
use num_rational::BigRational;
use num_traits::{One, Zero};
use selmer_core::{
    class_moments, class_rank_distribution, isotropy_distribution, narrow_avg_2torsion,
    trivial_type_density, type_density_table, Distribution, QImprimitiveType,
};

use crate::table::{common_denominator_row, Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    S4Real,
    S4Mixed,
    S6Real,
    BiTrivial,
    Quadratic,
    Moments,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::S4Real,
        Target::S4Mixed,
        Target::S6Real,
        Target::BiTrivial,
        Target::Quadratic,
        Target::Moments,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::S4Real => "s4-real",
            Target::S4Mixed => "s4-mixed",
            Target::S6Real => "s6-real",
            Target::BiTrivial => "bi-trivial",
            Target::Quadratic => "quadratic",
            Target::Moments => "moments",
        }
    }
}

impl FromStr for Target {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match Target::ALL.iter().find(|t| t.name() == s) {
            Some(t) => Ok(*t),
            None => bail!(
                "unknown table {s:?} (expected one of {})",
                Target::ALL.map(Target::name).join(", ")
            ),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TableOptions {
    pub prime_bound: u64,
    pub max_degree: usize,
}

pub fn build(target: Target, opts: &TableOptions) -> anyhow::Result<Table> {
    match target {
        Target::S4Real => type_table("Totally real S4 fields", 4, 4, 0, opts),
        Target::S4Mixed => type_table("Mixed signature S4 fields", 4, 2, 1, opts),
        Target::S6Real => type_table("Totally real S6 fields", 6, 6, 0, opts),
        Target::BiTrivial => bi_trivial(opts),
        Target::Quadratic => quadratic(opts),
        Target::Moments => moments(),
    }
}

fn k_columns(max_k: usize) -> Vec<String> {
    (0..=max_k).map(|k| format!("k = {k}")).collect()
}

/// Law probabilities for `k = 0..=max_k`, over a common denominator.
pub fn law_cells(d: &Distribution, max_k: usize) -> Vec<Cell> {
    let values: Vec<BigRational> = (0..=max_k).map(|k| d.probability(k)).collect();
    common_denominator_row(&values)
}

fn type_table(
    title: &str,
    n: usize,
    r1: usize,
    r2: usize,
    opts: &TableOptions,
) -> anyhow::Result<Table> {
    let max_k = r1 / 2;
    let mut columns = vec!["Type".to_string(), "Density".to_string()];
    columns.extend(k_columns(max_k));
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new(title, &cols);
    for density in type_density_table(n, opts.prime_bound)? {
        let law = isotropy_distribution(density.ty, r1, r2)?;
        let mut row = vec![
            Cell::text(density.ty.to_string()),
            Cell::Float(density.value.value),
        ];
        row.extend(law_cells(&law, max_k));
        table.push(row);
    }
    Ok(table)
}

fn bi_trivial(opts: &TableOptions) -> anyhow::Result<Table> {
    if opts.max_degree < 4 {
        bail!("max degree must be at least 4");
    }
    let degrees: Vec<usize> = (4..=opts.max_degree).step_by(2).collect();
    let mut columns = vec!["Type".to_string()];
    columns.extend(degrees.iter().map(|n| format!("n = {n}")));
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new("Density of Sn fields with type B(i) or trivial type", &cols);

    let mut b1 = vec![Cell::text("B(i)")];
    let mut trivial = vec![Cell::text("trivial")];
    for &n in &degrees {
        let t = type_density_table(n, opts.prime_bound)?;
        let d = t
            .iter()
            .find(|d| d.ty == QImprimitiveType::B1)
            .expect("all types present");
        b1.push(Cell::Float(d.value.value));
        trivial.push(Cell::Float(
            trivial_type_density(n, opts.prime_bound)?.value,
        ));
    }
    table.push(b1);
    table.push(trivial);
    Ok(table)
}

fn quadratic(opts: &TableOptions) -> anyhow::Result<Table> {
    let mut table = Table::new("Quadratic fields", &["Type", "Density", "Decimal"]);
    for d in type_density_table(2, opts.prime_bound)? {
        let exact = d.exact.clone().expect("quadratic densities are exact");
        table.push(vec![
            Cell::text(d.ty.to_string()),
            Cell::exact(exact),
            Cell::Float(d.value.value),
        ]);
    }
    Ok(table)
}

const MOMENT_SIGNATURES: [(usize, usize); 3] = [(4, 0), (2, 1), (0, 2)];

/// Isotropy law of a trivial-type field: type B(i), or rank 0 when there are
/// no real places.
fn trivial_law(r1: usize, r2: usize) -> anyhow::Result<Distribution> {
    if r1 == 0 {
        Ok(Distribution::point(0))
    } else {
        Ok(isotropy_distribution(QImprimitiveType::B1, r1, r2)?)
    }
}

fn moments() -> anyhow::Result<Table> {
    let columns: Vec<String> = std::iter::once("Statistic".to_string())
        .chain(MOMENT_SIGNATURES.iter().map(|(a, b)| format!("({a},{b})")))
        .collect();
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new(
        "Quartic fields with trivial type: class group predictions",
        &cols,
    );

    for rho in 0..=3 {
        let mut row = vec![Cell::text(format!("rho = {rho}"))];
        for (r1, r2) in MOMENT_SIGNATURES {
            row.push(Cell::Float(class_rank_distribution(r1, r2, rho)?.value));
        }
        table.push(row);
    }
    let laws = MOMENT_SIGNATURES
        .iter()
        .map(|&(r1, r2)| trivial_law(r1, r2))
        .collect::<anyhow::Result<Vec<_>>>()?;
    for k in 0..=2 {
        let mut row = vec![Cell::text(format!("k = {k}"))];
        for law in &laws {
            let values: Vec<BigRational> = (0..=2).map(|j| law.probability(j)).collect();
            row.push(common_denominator_row(&values).swap_remove(k));
        }
        table.push(row);
    }
    let mut cl = vec![Cell::text("Avg #Cl[2]")];
    let mut narrow = vec![Cell::text("Avg #Cl+[2]")];
    for (r1, r2) in MOMENT_SIGNATURES {
        cl.push(Cell::exact(class_moments(r1, r2, 1)?));
        narrow.push(Cell::exact(narrow_avg_2torsion(r1, r2)?));
    }
    table.push(cl);
    table.push(narrow);
    Ok(table)
}

/// `E[2^k]` under a law.
pub fn expected_power_of_two(d: &Distribution) -> BigRational {
    d.expectation(|k| BigRational::from_integer(num_bigint::BigInt::one() << k))
}

/// Whether the narrow average equals the class-group average times `E[2^k]`.
pub fn narrow_average_consistent(r1: usize, r2: usize) -> anyhow::Result<bool> {
    let law = trivial_law(r1, r2)?;
    let lhs = class_moments(r1, r2, 1)? * expected_power_of_two(&law);
    Ok(lhs == narrow_avg_2torsion(r1, r2)? && !lhs.is_zero())
}
