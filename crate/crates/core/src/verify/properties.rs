//! Structural properties of L_ν and b_ν checked on a grid. Each check
//! yields a [`GridReport`] whose slack is a relative margin that must be
//! strictly positive (or below the residual threshold for recurrences).

use rayon::prelude::*;

use crate::bfunc::b;
use crate::error::Result;
use crate::special::{l_nu, ratio_succ_exact, recurrence_check, Kind};
use crate::succ_ratio::product_difference;

use super::certify::{GridReport, PointRecord, Status};
use super::grid::Grid;

pub const RECURRENCE_TOL: f64 = 1e-12;

fn record(nu: f64, x: f64, margin: Result<f64>, strict_zero: bool) -> PointRecord {
    let (slack, status) = match margin {
        Ok(m) if m.is_nan() => (m, Status::Error),
        Ok(m) if m > 0.0 || (!strict_zero && m >= 0.0) => (m, Status::Ok),
        Ok(m) => (m, Status::Violation),
        Err(_) => (f64::NAN, Status::Error),
    };
    PointRecord { nu, x, y: None, slack, status }
}

fn pairs(nus: &[f64], xs: &[f64]) -> Vec<(f64, f64)> {
    nus.iter().flat_map(|&nu| xs.iter().map(move |&x| (nu, x))).collect()
}

fn run<F>(name: &str, pts: Vec<(f64, f64)>, f: F) -> GridReport
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
{
    let records = pts.par_iter().map(|&(nu, x)| record(nu, x, f(nu, x), true)).collect();
    GridReport::from_records(name, records)
}

/// b_ν(x_i) > b_ν(x_{i+1}) for consecutive grid arguments.
pub fn b_decreasing_in_x(grid: &Grid) -> GridReport {
    let xs = &grid.x_values;
    let pts = pairs(&grid.nu_values, &xs[..xs.len() - 1]);
    run("b_decreasing_in_x", pts, |nu, x| {
        let i = xs.iter().position(|&t| t == x).unwrap_or(0);
        let (b0, b1) = (b(nu, x)?, b(nu, xs[i + 1])?);
        Ok((b0 - b1) / b0)
    })
}

/// b_{ν_i}(x) < b_{ν_{i+1}}(x) for consecutive grid orders.
pub fn b_increasing_in_nu(grid: &Grid) -> GridReport {
    let nus = &grid.nu_values;
    let pts = pairs(&nus[..nus.len() - 1], &grid.x_values);
    run("b_increasing_in_nu", pts, |nu, x| {
        let i = nus.iter().position(|&t| t == nu).unwrap_or(0);
        let (b0, b1) = (b(nu, x)?, b(nus[i + 1], x)?);
        Ok((b1 - b0) / b1)
    })
}

/// L_{ν+1}/L_ν < L_ν/L_{ν−1} for ν ≥ 1/2.
pub fn ratio_decreasing_in_nu(grid: &Grid) -> GridReport {
    let nus: Vec<f64> = grid.nu_values.iter().copied().filter(|&nu| nu >= 0.5).collect();
    run("ratio_decreasing_in_nu", pairs(&nus, &grid.x_values), |nu, x| {
        let h0 = ratio_succ_exact(Kind::L, nu, x)?;
        let h1 = ratio_succ_exact(Kind::L, nu + 1.0, x)?;
        Ok((h0 - h1) / h0)
    })
}

/// L_{ν−1}L_{ν+1} < L_ν² for ν > −3/2 + 0.01.
pub fn turan(grid: &Grid) -> GridReport {
    let nus: Vec<f64> = grid.nu_values.iter().copied().filter(|&nu| nu > -1.49).collect();
    run("turan", pairs(&nus, &grid.x_values), |nu, x| {
        let l0 = l_nu(nu, x)?;
        Ok(1.0 - (l_nu(nu - 1.0, x)? / l0) * (l_nu(nu + 1.0, x)? / l0))
    })
}

/// M_ν/M_{ν−1} > I_ν/I_{ν−1} for ν ≥ 1/2 and x ≤ 30.
pub fn m_ratio_domination(grid: &Grid) -> GridReport {
    let nus: Vec<f64> = grid.nu_values.iter().copied().filter(|&nu| nu >= 0.5).collect();
    let xs: Vec<f64> = grid.x_values.iter().copied().filter(|&x| x <= 30.0).collect();
    run("m_ratio_domination", pairs(&nus, &xs), |nu, x| {
        let m = ratio_succ_exact(Kind::M, nu, x)?;
        let i = ratio_succ_exact(Kind::I, nu, x)?;
        Ok((m - i) / m)
    })
}

/// b_ν(x) < (x/2)csch(x) for orders in the open interval (lo, hi).
pub fn csch_reversal(grid: &Grid, lo: f64, hi: f64) -> GridReport {
    let nus: Vec<f64> = grid.nu_values.iter().copied().filter(|&nu| lo < nu && nu < hi).collect();
    run("csch_reversal", pairs(&nus, &grid.x_values), |nu, x| {
        let c = 0.5 * x / x.sinh();
        Ok((c - b(nu, x)?) / c)
    })
}

/// The order interval on which the csch lower bound for b_ν is reversed.
pub const REVERSAL_RANGE: (f64, f64) = (-1.5, -0.5);

/// Both three-term relation residuals at most 1e−12; slack is
/// 1e−12 minus the larger residual.
pub fn recurrence_residuals(grid: &Grid) -> GridReport {
    let nus: Vec<f64> = grid.nu_values.iter().copied().filter(|&nu| nu >= -0.4).collect();
    let records = pairs(&nus, &grid.x_values)
        .par_iter()
        .map(|&(nu, x)| {
            let m = recurrence_check(nu, x).map(|(r1, r2)| RECURRENCE_TOL - r1.max(r2));
            record(nu, x, m, false)
        })
        .collect();
    GridReport::from_records("recurrence_residuals", records)
}

/// Sign of I_ν L_{ν−1} − I_{ν−1} L_ν for −1/2 ≤ ν < 1/2, where positivity
/// is only conjectured. Informational.
pub fn product_difference_extension(grid: &Grid) -> GridReport {
    let nus: Vec<f64> = grid.nu_values.iter().copied().filter(|&nu| (-0.5..0.5).contains(&nu)).collect();
    run("eq14_extension", pairs(&nus, &grid.x_values), |nu, x| {
        let d = product_difference(nu, x)?;
        Ok(d.value.signum() * (1.0 - d.est_rel_error).max(0.0))
    })
}

/// The full suite on `grid`, with the reversal checked on its proven range.
pub fn monotonicity_suite(grid: &Grid) -> Vec<GridReport> {
    vec![
        b_decreasing_in_x(grid),
        b_increasing_in_nu(grid),
        ratio_decreasing_in_nu(grid),
        turan(grid),
        m_ratio_domination(grid),
        csch_reversal(grid, REVERSAL_RANGE.0, REVERSAL_RANGE.1),
        recurrence_residuals(grid),
    ]
}
