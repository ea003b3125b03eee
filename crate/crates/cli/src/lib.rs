//! Command implementations behind the `dyckmax` binary.
//!
//! Each command returns the text it would print, so everything here can be
//! tested without spawning a process.

use std::fmt::Write as _;

use dyckmax::asympt::{self, decimal_quotient};
use dyckmax::exact::{self, ClosedForm};
use dyckmax::genfun::{self, to_z_integers};
use dyckmax::{paths, BigCount, Error, Rational};
use num_bigint::BigInt;
use serde::Serialize;

mod verify;

pub use verify::{verify, Check, Fault, VerifyConfig, VerifyReport};

/// Environment variable that replaces every resource guard.
pub const MAX_N_ENV: &str = "DYCKMAX_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Strict,
    Weak,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Strict => "strict",
            Kind::Weak => "weak",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// How series coefficients are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Via {
    /// Divisor-function closed forms.
    Exact,
    /// Expand the generating function and read off coefficients.
    Genfun,
}

/// Upper bounds on command arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub series_order: u64,
    pub table_n: u64,
    pub paths_n: u64,
    pub paths_list_n: u64,
    pub oracle_n: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            series_order: 500,
            table_n: 10_000,
            paths_n: paths::DEFAULT_MAX_N as u64,
            paths_list_n: 14,
            oracle_n: 14,
        }
    }
}

impl Limits {
    /// Every guard set to the same value.
    pub fn uniform(max_n: u64) -> Self {
        Limits {
            series_order: max_n,
            table_n: max_n,
            paths_n: max_n,
            paths_list_n: max_n,
            oracle_n: max_n,
        }
    }

    /// Defaults, or [`Limits::uniform`] when `DYCKMAX_MAX_N` holds a number.
    pub fn from_env() -> Self {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }
}

fn guard(what: &'static str, requested: u64, limit: u64) -> Result<(), Error> {
    if requested > limit {
        return Err(Error::Guard {
            what,
            requested,
            limit,
        });
    }
    Ok(())
}

/// `c_1..c_order`, `c_n = [z^{2n}]` of the chosen total.
pub fn series_coeffs(kind: Kind, order: usize, via: Via) -> Result<Vec<BigInt>, Error> {
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    match via {
        Via::Exact => {
            let cf = ClosedForm::new(order);
            Ok((1..=order)
                .map(|n| match kind {
                    Kind::Strict => cf.strict_total(n),
                    Kind::Weak => cf.weak_total(n),
                })
                .map(BigInt::from)
                .collect())
        }
        Via::Genfun => {
            let f = match kind {
                Kind::Strict => genfun::tot_simplified::<Rational>(order),
                Kind::Weak => genfun::wtot_simplified::<Rational>(order),
            };
            to_z_integers(&f, order)
        }
    }
}

#[derive(Debug, Serialize)]
struct Document<'a, R: Serialize> {
    kind: &'a str,
    records: &'a [R],
}

fn to_json<R: Serialize>(kind: &str, records: &[R]) -> String {
    let mut s = serde_json::to_string_pretty(&Document { kind, records })
        .expect("records serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesRecord {
    pub n: u64,
    pub coeff: String,
}

pub fn cmd_series(
    kind: Kind,
    order: u64,
    via: Via,
    format: Format,
    limits: &Limits,
) -> Result<String, Error> {
    guard("order", order, limits.series_order)?;
    let coeffs = series_coeffs(kind, order as usize, via)?;
    let records: Vec<SeriesRecord> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| SeriesRecord {
            n: i as u64 + 1,
            coeff: c.to_string(),
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(kind.name(), &records),
        Format::Csv => {
            let mut out = String::from("n,coeff\n");
            for r in &records {
                writeln!(out, "{},{}", r.n, r.coeff).unwrap();
            }
            out
        }
        Format::Plain => {
            let words: Vec<&str> = records.iter().map(|r| r.coeff.as_str()).collect();
            format!("{}\n", words.join(" "))
        }
    })
}

/// One row of `table`. Counts are exact decimal strings, means rounded to six
/// places.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub n: u64,
    pub catalan: String,
    pub strict_total: String,
    pub weak_total: String,
    pub strict_mean: f64,
    pub weak_mean: f64,
    pub strict_asympt: f64,
    pub weak_asympt: f64,
}

fn round6(x: f64) -> f64 {
    format!("{x:.6}").parse().unwrap()
}

pub fn table_records(n_max: u64) -> Vec<OutputRecord> {
    let cf = ClosedForm::new(n_max as usize);
    (1..=n_max)
        .map(|n| {
            let cat = exact::catalan(n);
            let strict = cf.strict_total(n as usize);
            let weak = cf.weak_total(n as usize);
            let mean = |t: &BigCount| decimal_quotient(t, &cat, 6).parse().unwrap();
            OutputRecord {
                n,
                strict_mean: mean(&strict),
                weak_mean: mean(&weak),
                strict_asympt: round6(asympt::strict_mean_asympt(n as f64)),
                weak_asympt: round6(asympt::weak_mean_asympt(n as f64)),
                catalan: cat.to_string(),
                strict_total: strict.to_string(),
                weak_total: weak.to_string(),
            }
        })
        .collect()
}

const TABLE_HEADER: [&str; 8] = [
    "n",
    "catalan",
    "strict_total",
    "weak_total",
    "strict_mean",
    "weak_mean",
    "strict_asympt",
    "weak_asympt",
];

fn table_cells(r: &OutputRecord) -> [String; 8] {
    [
        r.n.to_string(),
        r.catalan.clone(),
        r.strict_total.clone(),
        r.weak_total.clone(),
        format!("{:.6}", r.strict_mean),
        format!("{:.6}", r.weak_mean),
        format!("{:.6}", r.strict_asympt),
        format!("{:.6}", r.weak_asympt),
    ]
}

pub fn cmd_table(n_max: u64, format: Format, limits: &Limits) -> Result<String, Error> {
    guard("n-max", n_max, limits.table_n)?;
    let records = table_records(n_max);
    Ok(match format {
        Format::Json => to_json("table", &records),
        Format::Csv => {
            let mut out = TABLE_HEADER.join(",");
            out.push('\n');
            for r in &records {
                out.push_str(&table_cells(r).join(","));
                out.push('\n');
            }
            out
        }
        Format::Plain => {
            let rows: Vec<[String; 8]> = records.iter().map(table_cells).collect();
            let mut widths = TABLE_HEADER.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut out = String::new();
            let header = TABLE_HEADER.map(String::from);
            for row in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = row
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(cells.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathRecord {
    pub path: String,
    pub height: u32,
    pub strict: u32,
    pub weak: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathSummary {
    pub n: u32,
    pub paths: u64,
    pub strict_total: u64,
    pub weak_total: u64,
}

pub fn cmd_paths(n: u32, list: bool, format: Format, limits: &Limits) -> Result<String, Error> {
    let cap = if list { limits.paths_list_n } else { limits.paths_n };
    guard("n", n as u64, cap)?;
    let limit = cap.min(paths::HARD_MAX_N as u64) as u32;
    if list {
        let records: Vec<PathRecord> = paths::enumerate_with_limit(n, limit)?
            .map(|p| {
                let s = p.stats();
                PathRecord {
                    path: p.to_string(),
                    height: s.height,
                    strict: s.strict_ltr,
                    weak: s.weak_ltr,
                }
            })
            .collect();
        return Ok(match format {
            Format::Json => to_json("paths", &records),
            Format::Csv => {
                let mut out = String::from("path,height,strict,weak\n");
                for r in &records {
                    writeln!(out, "{},{},{},{}", r.path, r.height, r.strict, r.weak).unwrap();
                }
                out
            }
            Format::Plain => records
                .iter()
                .map(|r| format!("{} h={} strict={} weak={}\n", r.path, r.height, r.strict, r.weak))
                .collect(),
        });
    }
    let t = paths::totals_with_limit(n, limit)?;
    let summary = PathSummary {
        n,
        paths: t.catalan,
        strict_total: t.strict_total,
        weak_total: t.weak_total,
    };
    Ok(match format {
        Format::Json => to_json("paths-summary", std::slice::from_ref(&summary)),
        Format::Csv => format!(
            "n,paths,strict_total,weak_total\n{},{},{},{}\n",
            summary.n, summary.paths, summary.strict_total, summary.weak_total
        ),
        Format::Plain => format!(
            "n={}: {} paths, strict {}, weak {}\n",
            summary.n, summary.paths, summary.strict_total, summary.weak_total
        ),
    })
}
