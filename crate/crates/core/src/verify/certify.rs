use std::fmt;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::Result;
use crate::registry::{self, BoundSpec, Point, Side};

use super::grid::Grid;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Registered equality order, slack within tolerance of zero.
    Equality,
    Violation,
    /// The bound or the reference value could not be evaluated.
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "ok",
            Status::Equality => "equality",
            Status::Violation => "violation",
            Status::Error => "error",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointRecord {
    pub nu: f64,
    pub x: f64,
    pub y: Option<f64>,
    /// Signed relative margin; negative means the inequality failed.
    pub slack: f64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridReport {
    pub bound_id: String,
    pub points_checked: usize,
    pub violations: Vec<PointRecord>,
    pub errors: Vec<PointRecord>,
    pub worst_slack: f64,
    pub max_rel_gap: f64,
    pub records: Vec<PointRecord>,
}

impl GridReport {
    pub fn from_records(bound_id: impl Into<String>, records: Vec<PointRecord>) -> Self {
        let violations: Vec<_> = records.iter().copied().filter(|r| r.status == Status::Violation).collect();
        let errors: Vec<_> = records.iter().copied().filter(|r| r.status == Status::Error).collect();
        let finite = records.iter().filter(|r| r.status != Status::Error).map(|r| r.slack);
        let worst_slack = finite.clone().fold(f64::INFINITY, f64::min);
        let max_rel_gap = finite.fold(f64::NEG_INFINITY, f64::max);
        Self {
            bound_id: bound_id.into(),
            points_checked: records.len(),
            violations,
            errors,
            worst_slack,
            max_rel_gap,
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }

    pub const CSV_HEADER: &'static str = "bound_id,nu,x,y,slack,status";

    /// One row per point under [`Self::CSV_HEADER`]; y is empty when unused.
    pub fn write_csv_rows(&self, out: &mut String) {
        for r in &self.records {
            let y = r.y.map(|y| y.to_string()).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{},{},{}", self.bound_id, r.nu, r.x, y, r.slack, r.status);
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{:<22} points={:<6} violations={:<4} errors={:<3} worst_slack={:.3e} max_gap={:.3e} {}",
            self.bound_id,
            self.points_checked,
            self.violations.len(),
            self.errors.len(),
            self.worst_slack,
            self.max_rel_gap,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn classify(spec: &BoundSpec, p: &Point, tol: f64) -> PointRecord {
    let outcome = (|| -> Result<f64> {
        let bound = spec.evaluate(p)?;
        let exact = registry::exact(spec.target, p)?;
        let margin = match spec.side {
            Side::Lower => exact - bound,
            Side::Upper => bound - exact,
        };
        Ok(margin / exact.abs())
    })();
    let (slack, status) = match outcome {
        Ok(s) if s.is_nan() => (s, Status::Error),
        Ok(s) if spec.is_equality(p.nu) && s.abs() <= tol => (s, Status::Equality),
        Ok(s) if s < -tol => (s, Status::Violation),
        Ok(s) => (s, Status::Ok),
        Err(_) => (f64::NAN, Status::Error),
    };
    PointRecord { nu: p.nu, x: p.x, y: p.y, slack, status }
}

/// Points of `grid` inside the bound's order range, in (ν, x, y) order.
pub fn points_for(spec: &BoundSpec, grid: &Grid) -> Vec<Point> {
    let mut pts = Vec::new();
    for &nu in grid.nu_values.iter().filter(|&&nu| spec.nu_validity.contains(nu)) {
        for &x in &grid.x_values {
            if spec.target.needs_y() {
                pts.extend(grid.ys(x).map(|y| Point::with_y(nu, x, y)));
            } else {
                pts.push(Point::new(nu, x));
            }
        }
    }
    pts
}

/// Check one registered inequality at every in-range grid point.
pub fn certify(bound_id: &str, grid: &Grid, tolerance: f64) -> Result<GridReport> {
    let spec = registry::lookup(bound_id)?;
    let records = points_for(spec, grid).par_iter().map(|p| classify(spec, p, tolerance)).collect();
    Ok(GridReport::from_records(spec.id, records))
}

/// [`certify`] for every registered bound, in registry order.
pub fn certify_all(grid: &Grid, tolerance: f64) -> Vec<GridReport> {
    registry::all()
        .iter()
        .map(|s| certify(s.id, grid, tolerance).expect("registered id"))
        .collect()
}
