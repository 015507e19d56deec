use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::registry::{self, Point, Target};

/// How the x = 0 column is filled, where a table has one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroColumnRule {
    /// No x = 0 column.
    Absent,
    Zero,
    /// Limit c/(2ν − s): 1/(2ν) or 2/(2ν−1), infinite at the pole.
    Limit { numerator: f64, shift: f64 },
}

impl ZeroColumnRule {
    fn value(self, nu: f64) -> Option<f64> {
        match self {
            ZeroColumnRule::Absent => None,
            ZeroColumnRule::Zero => Some(0.0),
            ZeroColumnRule::Limit { numerator, shift } => {
                let d = 2.0 * nu - shift;
                Some(if d == 0.0 { f64::INFINITY } else { numerator / d })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableSpec {
    pub table_id: u8,
    pub nu_rows: &'static [f64],
    /// Column arguments; a leading 0 is filled by `zero_column_rule`.
    pub x_cols: &'static [f64],
    pub approximant_id: &'static str,
    pub exact: Target,
    pub zero_column_rule: ZeroColumnRule,
}

const ROWS_A: &[f64] = &[0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0];
const ROWS_B: &[f64] = &[0.5, 1.0, 2.5, 5.0, 7.5, 10.0];
const ROWS_C: &[f64] = &[0.0, 1.0, 2.5, 5.0, 10.0];
const COLS_A: &[f64] = &[0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0];
const COLS_B: &[f64] = &[0.0, 0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 15.0, 25.0, 50.0];
const COLS_C: &[f64] = &[0.5, 1.0, 2.5, 5.0, 10.0, 15.0, 25.0, 50.0, 100.0, 200.0];

pub static TABLES: [TableSpec; 6] = [
    TableSpec {
        table_id: 1,
        nu_rows: ROWS_A,
        x_cols: COLS_A,
        approximant_id: "eq17_lower",
        exact: Target::SuccRatioL,
        zero_column_rule: ZeroColumnRule::Zero,
    },
    TableSpec {
        table_id: 2,
        nu_rows: ROWS_A,
        x_cols: COLS_A,
        approximant_id: "eq17_upper",
        exact: Target::SuccRatioL,
        zero_column_rule: ZeroColumnRule::Limit { numerator: 1.0, shift: 0.0 },
    },
    TableSpec {
        table_id: 3,
        nu_rows: ROWS_A,
        x_cols: COLS_B,
        approximant_id: "eq18_lower",
        exact: Target::SuccRatioL,
        zero_column_rule: ZeroColumnRule::Zero,
    },
    TableSpec {
        table_id: 4,
        nu_rows: ROWS_B,
        x_cols: COLS_B,
        approximant_id: "eq18_upper",
        exact: Target::SuccRatioL,
        zero_column_rule: ZeroColumnRule::Limit { numerator: 2.0, shift: 1.0 },
    },
    TableSpec {
        table_id: 5,
        nu_rows: ROWS_C,
        x_cols: COLS_C,
        approximant_id: "eq39_upper",
        exact: Target::PointwiseL,
        zero_column_rule: ZeroColumnRule::Absent,
    },
    TableSpec {
        table_id: 6,
        nu_rows: ROWS_C,
        x_cols: COLS_C,
        approximant_id: "eq46_upper",
        exact: Target::PointwiseL,
        zero_column_rule: ZeroColumnRule::Absent,
    },
];

pub fn table_spec(id: u8) -> Result<&'static TableSpec> {
    TABLES.iter().find(|t| t.table_id == id).ok_or(Error::UnknownTable(id))
}

/// Relative errors |approximant/exact − 1|, one row per order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub spec: TableSpec,
    pub values: Vec<Vec<f64>>,
}

fn entry(spec: &TableSpec, nu: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return spec.zero_column_rule.value(nu).ok_or_else(|| Error::domain("table has no x = 0 column"));
    }
    let p = Point::new(nu, x);
    let approx = registry::lookup(spec.approximant_id)?.evaluate_unchecked(&p)?;
    let exact = registry::exact(spec.exact, &p)?;
    Ok((approx / exact - 1.0).abs())
}

pub fn relative_error_table(spec: &TableSpec) -> Result<Table> {
    let values = spec
        .nu_rows
        .par_iter()
        .map(|&nu| spec.x_cols.iter().map(|&x| entry(spec, nu, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { spec: *spec, values })
}

fn fmt4(v: f64) -> String {
    if v.is_infinite() {
        "inf".to_string()
    } else {
        format!("{v:.4}")
    }
}

impl Table {
    /// Fixed four-decimal layout, infinite entries as `inf`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{:>6}", "nu\\x");
        for x in self.spec.x_cols {
            let _ = write!(out, " {:>8}", x);
        }
        out.push('\n');
        for (nu, row) in self.spec.nu_rows.iter().zip(&self.values) {
            let _ = write!(out, "{:>6}", nu);
            for v in row {
                let _ = write!(out, " {:>8}", fmt4(*v));
            }
            out.push('\n');
        }
        out
    }

    pub const CSV_HEADER: &'static str = "table_id,nu,x,value,is_inf";

    /// Long format with shortest round-trip values; infinite entries leave
    /// `value` empty and set `is_inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for (nu, row) in self.spec.nu_rows.iter().zip(&self.values) {
            for (x, v) in self.spec.x_cols.iter().zip(row) {
                let (value, inf) = if v.is_infinite() { (String::new(), 1) } else { (v.to_string(), 0) };
                let _ = writeln!(out, "{},{},{},{},{}", self.spec.table_id, nu, x, value, inf);
            }
        }
        out
    }

    pub fn get(&self, nu: f64, x: f64) -> Option<f64> {
        let i = self.spec.nu_rows.iter().position(|&n| n == nu)?;
        let j = self.spec.x_cols.iter().position(|&c| c == x)?;
        Some(self.values[i][j])
    }
}
