use crate::error::{Error, Result};
use crate::registry::{self, Point};

pub const PRESCAN_POINTS: usize = 200;
pub const CROSSOVER_TOL: f64 = 1e-4;
pub const DEFAULT_X_RANGE: (f64, f64) = (0.05, 50.0);

/// The x at which two registered bounds on the same quantity coincide.
///
/// A 200-point scan of [lo, hi] must show exactly one sign change of the
/// difference; the bracketing cell is then bisected to 1e−4.
pub fn crossover(bound_a: &str, bound_b: &str, nu: f64, (lo, hi): (f64, f64)) -> Result<f64> {
    let a = registry::lookup(bound_a)?;
    let b = registry::lookup(bound_b)?;
    if a.target != b.target {
        return Err(Error::domain(format!("{bound_a} and {bound_b} bound different quantities")));
    }
    if a.target.needs_y() {
        return Err(Error::domain("crossovers are located in x for single-argument bounds"));
    }
    if !(0.0 < lo && lo < hi) {
        return Err(Error::domain(format!("invalid search interval [{lo}, {hi}]")));
    }
    let diff = |x: f64| -> Result<f64> {
        let p = Point::new(nu, x);
        Ok(a.evaluate(&p)? - b.evaluate(&p)?)
    };
    let xs: Vec<f64> = (0..PRESCAN_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / (PRESCAN_POINTS - 1) as f64)
        .collect();
    let ds = xs.iter().map(|&x| diff(x)).collect::<Result<Vec<_>>>()?;
    let cells: Vec<usize> = (0..xs.len() - 1).filter(|&i| ds[i].signum() != ds[i + 1].signum()).collect();
    let i = match cells.as_slice() {
        [] => return Err(Error::NoSignChange { a: a.id.into(), b: b.id.into(), lo, hi }),
        [i] => *i,
        many => {
            return Err(Error::MultipleSignChanges { a: a.id.into(), b: b.id.into(), lo, hi, count: many.len() })
        }
    };
    let (mut l, mut r) = (xs[i], xs[i + 1]);
    let sl = ds[i].signum();
    while r - l > CROSSOVER_TOL {
        let m = 0.5 * (l + r);
        if diff(m)?.signum() == sl {
            l = m;
        } else {
            r = m;
        }
    }
    Ok(0.5 * (l + r))
}
