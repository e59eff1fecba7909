//! A small typed table with Markdown, CSV and JSON renderers.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use selmer_core::rational;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "md" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => bail!("unknown format {s:?} (expected md, csv or json)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    /// An exact rational, optionally shown over a fixed denominator.
    Exact {
        value: BigRational,
        denom: Option<BigInt>,
    },
    Float(f64),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    pub fn exact(value: BigRational) -> Self {
        Cell::Exact { value, denom: None }
    }

    pub fn exact_over(value: BigRational, denom: &BigInt) -> Self {
        Cell::Exact {
            value,
            denom: Some(denom.clone()),
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Cell::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn as_float(&self) -> Option<f64> {
        match self {
            Cell::Float(x) => Some(*x),
            _ => None,
        }
    }

    fn fraction(value: &BigRational, denom: &Option<BigInt>) -> String {
        if value.is_integer() {
            return value.numer().to_string();
        }
        if let Some(d) = denom {
            if !d.is_zero() && (d % value.denom()).is_zero() {
                let num = value.numer() * (d / value.denom());
                return format!("{num}/{d}");
            }
        }
        rational::fraction(value)
    }

    /// Human rendering with floats rounded half-even to `precision` places.
    pub fn display(&self, precision: usize) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Exact { value, denom } => Self::fraction(value, denom),
            Cell::Float(x) if x.is_finite() => rational::round_f64_half_even(*x, precision),
            Cell::Float(x) => x.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => json!(i),
            Cell::Exact { value, denom } => Value::String(Self::fraction(value, denom)),
            Cell::Float(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        }
    }

    fn from_json(v: &Value) -> anyhow::Result<Self> {
        Ok(match v {
            Value::String(s) => match rational::parse_fraction(s) {
                Some(value) => {
                    let denom = s
                        .split_once('/')
                        .map(|(_, d)| d.trim().parse::<BigInt>())
                        .transpose()?;
                    Cell::Exact { value, denom }
                }
                None => Cell::Text(s.clone()),
            },
            Value::Number(n) => match n.as_i64() {
                Some(i) if !n.is_f64() => Cell::Int(i),
                _ => Cell::Float(n.as_f64().ok_or_else(|| anyhow!("bad number {n}"))?),
            },
            Value::Null => Cell::Float(f64::NAN),
            other => bail!("unexpected JSON cell {other}"),
        })
    }
}

/// A row's exact cells shown over their least common denominator.
pub fn common_denominator_row(values: &[BigRational]) -> Vec<Cell> {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| {
        num_integer::Integer::lcm(&acc, v.denom())
    });
    values
        .iter()
        .map(|v| Cell::exact_over(v.clone(), &lcm))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width in {:?}",
            self.title
        );
        self.rows.push(row);
    }

    /// The cell in the row whose first cell displays as `label`.
    pub fn cell(&self, label: &str, column: &str) -> Option<&Cell> {
        let j = self.columns.iter().position(|c| c == column)?;
        self.rows
            .iter()
            .find(|r| r.first().map(|c| c.display(0)) == Some(label.to_string()))
            .map(|r| &r[j])
    }

    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Md => self.markdown(precision),
            Format::Csv => self.csv(precision),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    fn markdown(&self, precision: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "### {}\n", self.title);
        let _ = writeln!(out, "| {} |", self.columns.join(" | "));
        let _ = writeln!(
            out,
            "|{}|",
            self.columns
                .iter()
                .map(|_| "---")
                .collect::<Vec<_>>()
                .join("|")
        );
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.display(precision)).collect();
            let _ = writeln!(out, "| {} |", cells.join(" | "));
        }
        out
    }

    fn csv(&self, precision: usize) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| field(c)).collect();
        let _ = writeln!(out, "{}", header.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| field(&c.display(precision))).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> anyhow::Result<Self> {
        let title = v["title"].as_str().context("missing title")?.to_string();
        let columns = v["columns"]
            .as_array()
            .context("missing columns")?
            .iter()
            .map(|c| c.as_str().map(str::to_string).context("column name"))
            .collect::<anyhow::Result<Vec<_>>>()?;
        let rows = v["rows"]
            .as_array()
            .context("missing rows")?
            .iter()
            .map(|r| {
                r.as_array()
                    .context("row")?
                    .iter()
                    .map(Cell::from_json)
                    .collect::<anyhow::Result<Vec<_>>>()
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(Self {
            title,
            columns,
            rows,
        })
    }
}

/// Renders several tables one after another.
pub fn render_all(tables: &[Table], format: Format, precision: usize) -> String {
    match format {
        Format::Json if tables.len() == 1 => tables[0].render(format, precision),
        Format::Json => {
            let v = Value::Array(tables.iter().map(Table::to_json).collect());
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
        _ => tables
            .iter()
            .map(|t| t.render(format, precision))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Parses output of [`render_all`] in JSON form.
pub fn parse_json(s: &str) -> anyhow::Result<Vec<Table>> {
    let v: Value = serde_json::from_str(s)?;
    match &v {
        Value::Array(items) => items.iter().map(Table::from_json).collect(),
        _ => Ok(vec![Table::from_json(&v)?]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use selmer_core::rational::ratio;

    fn sample() -> Table {
        let mut t = Table::new("Sample", &["Type", "Density", "k = 0", "k = 1"]);
        let mut row = vec![Cell::text("B(i)"), Cell::Float(0.728078)];
        row.extend(common_denominator_row(&[ratio(16, 45), ratio(1, 15)]));
        t.push(row);
        t.push(vec![
            Cell::text("x,y"),
            Cell::Float(0.00004),
            Cell::Int(0),
            Cell::exact(ratio(0, 1)),
        ]);
        t
    }

    #[test]
    fn markdown_rendering() {
        let s = sample().render(Format::Md, 4);
        assert!(s.contains("| B(i) | 0.7281 | 16/45 | 3/45 |"), "{s}");
        assert!(s.contains("| x,y | 0.0000 | 0 | 0 |"), "{s}");
    }

    #[test]
    fn csv_quotes_fields() {
        let s = sample().render(Format::Csv, 4);
        assert!(s.starts_with("Type,Density,k = 0,k = 1\n"));
        assert!(s.contains("\"x,y\",0.0000,0,0"));
    }

    #[test]
    fn json_round_trip_is_idempotent() {
        let once = render_all(&[sample(), sample()], Format::Json, 4);
        let twice = render_all(&parse_json(&once).unwrap(), Format::Json, 4);
        assert_eq!(once, twice);
        assert!(once.contains("\"3/45\""));
        let parsed = parse_json(&once).unwrap();
        assert_eq!(parsed[0].rows[0][3].as_exact(), Some(&ratio(1, 15)));
    }

    fn cell_strategy() -> impl Strategy<Value = Cell> {
        prop_oneof![
            "[a-z ,()]{0,6}".prop_map(Cell::text),
            any::<i64>().prop_map(Cell::Int),
            (-50i64..50, 1i64..60).prop_map(|(n, d)| Cell::exact(ratio(n, d))),
            (1i64..20, 1i64..20).prop_map(|(n, d)| {
                let v = ratio(n, d);
                let denom = v.denom() * BigInt::from(3);
                Cell::exact_over(v, &denom)
            }),
            (-1e6f64..1e6).prop_map(Cell::Float),
        ]
    }

    proptest! {
        #[test]
        fn random_tables_round_trip(rows in prop::collection::vec(prop::collection::vec(cell_strategy(), 3), 0..5)) {
            let mut t = Table::new("t", &["a", "b", "c"]);
            for r in rows {
                t.push(r);
            }
            let once = t.render(Format::Json, 4);
            let parsed = parse_json(&once).unwrap();
            prop_assert_eq!(parsed[0].render(Format::Json, 4), once.clone());
            prop_assert_eq!(parsed[0].render(Format::Md, 4), t.render(Format::Md, 4));
        }
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
