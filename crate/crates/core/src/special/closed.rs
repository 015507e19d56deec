//! Elementary closed forms at the half-integer orders −3/2, −1/2 and 1/2.

use std::f64::consts::PI;

use super::Kind;
use crate::error::{Error, Result};

/// cosh x − sinh(x)/x without cancellation for small x.
fn cosh_minus_sinhc(x: f64) -> f64 {
    if x >= 1.0 {
        return x.cosh() - x.sinh() / x;
    }
    // Σ_{k≥1} 2k x^{2k} / (2k+1)!
    let x2 = x * x;
    let mut pow_over_fact = x2 / 6.0; // x^2 / 3!
    let mut sum = 2.0 * pow_over_fact;
    let mut k = 1.0;
    loop {
        pow_over_fact *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        k += 1.0;
        let t = 2.0 * k * pow_over_fact;
        sum += t;
        if t < 1e-18 * sum {
            return sum;
        }
    }
}

/// Exact elementary value of I_ν(x) or L_ν(x) for ν ∈ {−3/2, −1/2, 1/2}.
pub fn half_integer_closed(kind: Kind, nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("x must be positive and finite, got {x}")));
    }
    let pre = (2.0 / (PI * x)).sqrt();
    let body = match (kind, nu) {
        (Kind::I, 0.5) => x.sinh(),
        (Kind::I, -0.5) => x.cosh(),
        (Kind::I, -1.5) => x.sinh() - x.cosh() / x,
        (Kind::L, 0.5) => {
            let s = (0.5 * x).sinh();
            2.0 * s * s
        }
        (Kind::L, -0.5) => x.sinh(),
        (Kind::L, -1.5) => cosh_minus_sinhc(x),
        _ => {
            return Err(Error::domain(format!("no closed form registered for {kind:?} at nu = {nu}")));
        }
    };
    Ok(pre * body)
}
