//! The kernel b_ν(x) = (x/2)^{ν+1} / (√π Γ(ν+3/2) L_ν(x)), which takes
//! values in (0, 1/2) for ν > −3/2, decreases in x and increases in ν.

use std::f64::consts::PI;

use crate::bracket::Bracket;
use crate::error::{Error, Result};
use crate::special::{gamma_pos, l_nu, ln_gamma};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BValue {
    pub value: f64,
    pub nu: f64,
    pub x: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Small,
    Large,
}

fn check(nu: f64, x: f64) -> Result<()> {
    if !(nu > -1.5) || !nu.is_finite() {
        return Err(Error::domain(format!("b_nu(x) needs nu > -3/2, got {nu}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("b_nu(x) needs x > 0, got {x}")));
    }
    Ok(())
}

pub fn b_eval(nu: f64, x: f64) -> Result<BValue> {
    check(nu, x)?;
    let l = l_nu(nu, x)?;
    let num = (0.5 * x).powf(nu + 1.0) / (PI.sqrt() * gamma_pos(nu + 1.5)?);
    let mut value = num / l;
    if !value.is_normal() {
        let log = (nu + 1.0) * (0.5 * x).ln() - 0.5 * PI.ln() - ln_gamma(nu + 1.5)? - l.ln();
        value = log.exp();
    }
    Ok(BValue { value, nu, x })
}

/// Shorthand for `b_eval(nu, x)?.value`.
pub fn b(nu: f64, x: f64) -> Result<f64> {
    b_eval(nu, x).map(|v| v.value)
}

/// (1/2)(1 + x²/(3(2ν+3)))^{−1}, a strict upper bound for b_ν(x).
pub fn b_upper_quadratic(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    Ok(0.5 / (1.0 + x * x / (3.0 * (2.0 * nu + 3.0))))
}

fn csch(u: f64) -> f64 {
    1.0 / u.sinh()
}

/// (x/2)csch(x) ≤ b_ν(x) < (x/4)csch(x/(2ν+3)); the lower side needs
/// ν ≥ −1/2 (equality at −1/2), the upper side ν > −1.
pub fn b_csch_bracket(nu: f64, x: f64) -> Result<Bracket> {
    check(nu, x)?;
    let lower = 0.5 * x * csch(x);
    let upper = 0.25 * x * csch(x / (2.0 * nu + 3.0));
    Ok(Bracket::new(("eq13_lower", lower, nu >= -0.5), ("eq13_upper", upper, nu > -1.0)))
}

/// Small-x form 1/2 − x²/(6(2ν+3)) or large-x form
/// x^{ν+3/2} e^{−x} / (2^{ν+1/2} Γ(ν+3/2)).
pub fn b_asym(nu: f64, x: f64, regime: Regime) -> Result<f64> {
    if !(nu > -1.5) {
        return Err(Error::domain(format!("b_nu(x) needs nu > -3/2, got {nu}")));
    }
    match regime {
        Regime::Small => Ok(0.5 - x * x / (6.0 * (2.0 * nu + 3.0))),
        Regime::Large => {
            let log = (nu + 1.5) * x.ln() - x - (nu + 0.5) * 2f64.ln() - ln_gamma(nu + 1.5)?;
            Ok(log.exp())
        }
    }
}
