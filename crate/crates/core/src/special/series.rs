//! Power-series evaluation of I_ν(x) and L_ν(x).
//!
//! Both series have the shape Σ (x/2)^{2n+ν+p} / (Γ(n+α) Γ(n+ν+β)). Terms
//! whose second gamma argument is non-positive are formed directly through
//! the reciprocal gamma (so poles give exact zeros); from the first positive
//! argument onward terms follow by the ratio recursion, and every such term
//! is positive.

use std::sync::OnceLock;

use super::gamma::{ln_gamma, rgamma};
use super::sum::CompensatedSum;
use crate::error::{Error, Result};

/// Smallest order accepted by the series evaluators. Below −3/2 the leading
/// terms of L_ν change sign; the values are still exact but no sign
/// statement is made.
pub const MIN_SERIES_ORDER: f64 = -2.5;

/// Relative cancellation above which M_ν = L_ν − I_ν is flagged.
pub const CANCELLATION_THRESHOLD: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub x_max: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-16, max_terms: 500, x_max: 600.0 }
    }
}

impl EvalConfig {
    pub fn new(rel_tol: f64, max_terms: usize, x_max: f64) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1e-6) {
            return Err(Error::domain(format!("rel_tol must lie in (0, 1e-6), got {rel_tol}")));
        }
        if max_terms < 50 {
            return Err(Error::domain(format!("max_terms must be at least 50, got {max_terms}")));
        }
        if !(x_max > 0.0 && x_max.is_finite()) {
            return Err(Error::domain(format!("x_max must be positive and finite, got {x_max}")));
        }
        Ok(Self { rel_tol, max_terms, x_max })
    }

    /// Defaults, with `STRUVE_MAX_TERMS` overriding the series cap when it
    /// parses as an integer ≥ 50.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(n) = std::env::var("STRUVE_MAX_TERMS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
            if n >= 50 {
                cfg.max_terms = n;
            }
        }
        cfg
    }
}

/// Process-wide configuration used by the convenience evaluators. Read once
/// from the environment and never mutated.
pub fn global_config() -> &'static EvalConfig {
    static CFG: OnceLock<EvalConfig> = OnceLock::new();
    CFG.get_or_init(EvalConfig::from_env)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuncValue {
    pub value: f64,
    pub terms_used: usize,
    pub est_rel_error: f64,
    /// Set when the value is a difference that lost more than six digits.
    pub cancellation: bool,
}

fn check_args(nu: f64, x: f64, cfg: &EvalConfig) -> Result<()> {
    if !nu.is_finite() || nu < MIN_SERIES_ORDER {
        return Err(Error::domain(format!("order nu = {nu} outside [{MIN_SERIES_ORDER}, inf)")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("argument x must be positive and finite, got {x}")));
    }
    if x > cfg.x_max {
        return Err(Error::OverflowRisk { x, x_max: cfg.x_max });
    }
    Ok(())
}

/// Term n of Σ (x/2)^{2n+ν+p} / (Γ(n+α) Γ(n+ν+β)) formed directly.
fn direct_term(half_x: f64, nu: f64, p: f64, alpha: f64, beta: f64, n: usize) -> f64 {
    let n = n as f64;
    let expo = 2.0 * n + nu + p;
    let r1 = rgamma(n + alpha);
    let r2 = rgamma(n + nu + beta);
    if r1 == 0.0 || r2 == 0.0 {
        return 0.0;
    }
    let v = half_x.powf(expo) * r1 * r2;
    if v.is_finite() && v != 0.0 {
        return v;
    }
    // Over/underflow in the direct product: go through logarithms. Only
    // reachable with positive gamma arguments at extreme parameters.
    match (ln_gamma(n + alpha), ln_gamma(n + nu + beta)) {
        (Ok(l1), Ok(l2)) => (expo * half_x.ln() - l1 - l2).exp(),
        _ => v,
    }
}

fn hyper_series(nu: f64, x: f64, p: f64, alpha: f64, beta: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    check_args(nu, x, cfg)?;
    let half_x = 0.5 * x;
    let q = half_x * half_x;
    // First n with n + ν + β > 0; all later terms are positive.
    let n0 = if nu + beta > 0.0 { 0 } else { (-(nu + beta)).floor() as usize + 1 };

    let mut acc = CompensatedSum::new();
    for n in 0..n0 {
        acc.add(direct_term(half_x, nu, p, alpha, beta, n));
    }
    let mut term = direct_term(half_x, nu, p, alpha, beta, n0);
    let mut n = n0;
    loop {
        acc.add(term);
        let nf = n as f64;
        let ratio = q / ((nf + alpha) * (nf + nu + beta));
        let next = term * ratio;
        n += 1;
        let s = acc.value();
        if ratio < 1.0 && 2.0 * next.abs() <= cfg.rel_tol * s.abs() {
            let est = if s == 0.0 { 0.0 } else { 2.0 * next.abs() / s.abs() };
            return Ok(FuncValue { value: s, terms_used: n, est_rel_error: est, cancellation: false });
        }
        if n >= cfg.max_terms {
            return Err(Error::Convergence { nu, x, max_terms: cfg.max_terms });
        }
        term = next;
    }
}

/// Modified Bessel function of the first kind I_ν(x) by its power series.
pub fn bessel_i(nu: f64, x: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    hyper_series(nu, x, 0.0, 1.0, 1.0, cfg)
}

/// Modified Struve function of the first kind L_ν(x) by its power series.
pub fn struve_l(nu: f64, x: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    hyper_series(nu, x, 1.0, 1.5, 1.5, cfg)
}

/// M_ν(x) = L_ν(x) − I_ν(x). Exponentially small against its parts for
/// large x; the `cancellation` flag reports when more than six digits cancel.
pub fn struve_m(nu: f64, x: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    let l = struve_l(nu, x, cfg)?;
    let i = bessel_i(nu, x, cfg)?;
    let value = l.value - i.value;
    let scale = l.value.abs().max(i.value.abs());
    let amplification = if value == 0.0 { f64::INFINITY } else { scale / value.abs() };
    let est = amplification * (l.est_rel_error + i.est_rel_error + f64::EPSILON);
    Ok(FuncValue {
        value,
        terms_used: l.terms_used + i.terms_used,
        est_rel_error: est,
        cancellation: amplification > CANCELLATION_THRESHOLD,
    })
}

/// I_ν(x) with the global configuration.
pub fn i_nu(nu: f64, x: f64) -> Result<f64> {
    bessel_i(nu, x, global_config()).map(|v| v.value)
}

/// L_ν(x) with the global configuration.
pub fn l_nu(nu: f64, x: f64) -> Result<f64> {
    struve_l(nu, x, global_config()).map(|v| v.value)
}

/// M_ν(x) with the global configuration.
pub fn m_nu(nu: f64, x: f64) -> Result<f64> {
    struve_m(nu, x, global_config()).map(|v| v.value)
}
