//! Bounds for L_ν(x)/L_ν(y) with 0 < x < y, pointwise bounds for L_ν(x),
//! and the large-x constant a_ν of the pointwise upper bound.
//!
//! Products of exponentials and powers are assembled as logarithms and
//! exponentiated once.

use std::f64::consts::{LN_2, PI};

use crate::bracket::{Bracket, EQUALITY_EPS};
use crate::error::{Error, Result};
use crate::special::{gamma_pos, i_nu, l_nu, ln_gamma};

/// A pair of arguments with 0 < x ≤ y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgPair {
    pub x: f64,
    pub y: f64,
}

impl ArgPair {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x > 0.0 && x.is_finite() && y.is_finite()) {
            return Err(Error::domain(format!("arguments must be positive and finite, got ({x}, {y})")));
        }
        if x > y {
            return Err(Error::domain(format!("argument ratio needs x <= y, got ({x}, {y})")));
        }
        Ok(Self { x, y })
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == self.y
    }
}

/// L_ν(x)/L_ν(y).
pub fn arg_ratio_exact(nu: f64, pair: ArgPair) -> Result<f64> {
    if pair.is_diagonal() {
        return Ok(1.0);
    }
    Ok(l_nu(nu, pair.x)? / l_nu(nu, pair.y)?)
}

fn k_nu(nu: f64) -> f64 {
    3.0 * (2.0 * nu + 3.0)
}

/// ½·ln((3(2ν+3)+y²)/(3(2ν+3)+x²)).
fn ln_quadratic_factor(nu: f64, x: f64, y: f64) -> f64 {
    let k = k_nu(nu);
    0.5 * ((k + y * y) / (k + x * x)).ln()
}

/// c·ln((c+√(c²+y²))/(c+√(c²+x²))) together with √(c²+x²) − √(c²+y²).
fn ln_radical_terms(c: f64, x: f64, y: f64) -> f64 {
    let rx = c.hypot(x);
    let ry = c.hypot(y);
    let power = if c == 0.0 { 0.0 } else { c * ((c + ry) / (c + rx)).ln() };
    (rx - ry) + power
}

fn diagonal() -> Bracket {
    Bracket::new(("identity", 1.0, true), ("identity", 1.0, true))
}

fn require_half(nu: f64, what: &str) -> Result<()> {
    if nu >= -0.5 {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} needs nu >= -1/2, got {nu}")))
    }
}

pub mod raw {
    use super::*;

    pub fn eq37_lower(nu: f64, x: f64, y: f64) -> Result<f64> {
        Ok(x / y * ln_quadratic_factor(nu, x, y).exp() * (i_nu(nu, x)? / i_nu(nu, y)?))
    }

    pub fn eq37_upper(nu: f64, x: f64, y: f64) -> Result<f64> {
        Ok(i_nu(nu, x)? / i_nu(nu, y)?)
    }

    pub fn eq38_lower(nu: f64, x: f64, y: f64) -> Result<f64> {
        let p = nu + 0.5;
        let ln = ln_radical_terms(p, x, y) + (nu + 1.0) * (x / y).ln() + ln_quadratic_factor(nu, x, y);
        Ok(ln.exp())
    }

    pub fn eq38_upper(nu: f64, x: f64, y: f64) -> Result<f64> {
        let q = nu + 1.5;
        let ln = ln_radical_terms(q, x, y)
            + ((0.5 * x).tanh() / (0.5 * y).tanh()).ln()
            + nu * (x / y).ln();
        Ok(ln.exp())
    }

    pub fn eq33a_upper(nu: f64, x: f64, y: f64) -> Result<f64> {
        Ok((x / y).powf(nu + 1.0))
    }

    pub fn eq33b_upper(nu: f64, x: f64, y: f64) -> Result<f64> {
        Ok((x - y + nu * (y / x).ln()).exp())
    }

    /// ((cosh x − 1)/(cosh y − 1))(y/x)^ν with cosh t − 1 = 2 sinh²(t/2).
    pub fn eq34_upper(nu: f64, x: f64, y: f64) -> Result<f64> {
        let ln_ch = |t: f64| 2.0 * (0.5 * t).sinh().ln();
        Ok((ln_ch(x) - ln_ch(y) + nu * (y / x).ln()).exp())
    }

    pub fn eq40_lower(nu: f64, x: f64, y: f64) -> Result<f64> {
        // ln cosh t = t + ln(1 + e^{−2t}) − ln 2
        let ln_cosh = |t: f64| t + (-2.0 * t).exp().ln_1p() - LN_2;
        let ln = ln_cosh(x) - ln_cosh(y) + (nu + 1.0) * (x / y).ln() + ln_quadratic_factor(nu, x, y);
        Ok(ln.exp())
    }

    pub fn eq42_lower(nu: f64, x: f64, y: f64) -> Result<f64> {
        let shift = if nu == 0.0 { 0.0 } else { nu * ((y + nu) / (x + nu)).ln() };
        let ln = x - y + shift + (nu + 1.0) * (x / y).ln() + ln_quadratic_factor(nu, x, y);
        Ok(ln.exp())
    }

    pub fn eq39_lower(nu: f64, x: f64) -> Result<f64> {
        let q = nu + 1.5;
        let ln = q.hypot(x) - q - 0.5 * PI.ln() - (nu - 1.0) * LN_2 - ln_gamma(nu + 1.5)?
            + nu * x.ln()
            + (0.5 * x).tanh().ln()
            + q * ((2.0 * nu + 3.0) / (q + q.hypot(x))).ln();
        Ok(ln.exp())
    }

    pub fn eq39_upper(nu: f64, x: f64) -> Result<f64> {
        let p = nu + 0.5;
        let k = k_nu(nu);
        let power = if p == 0.0 { 0.0 } else { p * ((2.0 * nu + 1.0) / (p + p.hypot(x))).ln() };
        let ln = p.hypot(x) - p - 0.5 * PI.ln() - nu * LN_2 - ln_gamma(nu + 1.5)?
            + (nu + 1.0) * x.ln()
            + 0.5 * (k / (k + x * x)).ln()
            + power;
        Ok(ln.exp())
    }

    pub fn eq43_upper(nu: f64, x: f64) -> Result<f64> {
        let k = k_nu(nu);
        let shift = if nu == 0.0 { 0.0 } else { nu * (nu / (x + nu)).ln() };
        let ln = -0.5 * PI.ln() - nu * LN_2 - ln_gamma(nu + 1.5)?
            + shift
            + 0.5 * (k / (k + x * x)).ln()
            + (nu + 1.0) * x.ln()
            + x;
        Ok(ln.exp())
    }

    pub fn eq45_upper(nu: f64, x: f64) -> Result<f64> {
        Ok(2.0 * gamma_pos(nu + 2.0)? / (PI.sqrt() * gamma_pos(nu + 1.5)?) * i_nu(nu + 1.0, x)?)
    }

    pub fn eq46_upper(nu: f64, x: f64) -> Result<f64> {
        let s = (nu + 1.0).hypot(x);
        let ln = 0.5 * LN_2 + ln_gamma(nu + 2.0)? - PI.ln() - ln_gamma(nu + 1.5)?
            + s
            + 2.0 / s
            - 0.25 * (s * s).ln()
            + (nu + 1.0) * (x / (nu + 1.0 + s)).ln();
        Ok(ln.exp())
    }
}

/// (x/y)√((3(2ν+3)+y²)/(3(2ν+3)+x²))·I_ν(x)/I_ν(y) below (ν ≥ −1/2) and
/// I_ν(x)/I_ν(y) above (ν ≥ 1/2).
pub fn arg_ratio_bessel_bracket(nu: f64, pair: ArgPair) -> Result<Bracket> {
    if pair.is_diagonal() {
        return Ok(diagonal());
    }
    let (x, y) = (pair.x, pair.y);
    Ok(Bracket::new(
        ("eq37_lower", raw::eq37_lower(nu, x, y)?, nu >= -0.5),
        ("eq37_upper", raw::eq37_upper(nu, x, y)?, nu >= 0.5),
    ))
}

/// Elementary two-sided bound, ν ≥ −1/2.
pub fn arg_ratio_explicit_bracket(nu: f64, pair: ArgPair) -> Result<Bracket> {
    require_half(nu, "explicit argument-ratio bracket")?;
    if pair.is_diagonal() {
        return Ok(diagonal());
    }
    let (x, y) = (pair.x, pair.y);
    Ok(Bracket::new(
        ("eq38_lower", raw::eq38_lower(nu, x, y)?, true),
        ("eq38_upper", raw::eq38_upper(nu, x, y)?, true),
    ))
}

/// Elementary two-sided bound on L_ν(x), ν ≥ −1/2.
pub fn pointwise_bracket(nu: f64, x: f64) -> Result<Bracket> {
    require_half(nu, "pointwise bracket")?;
    if !(x > 0.0) {
        return Err(Error::domain(format!("pointwise bracket needs x > 0, got {x}")));
    }
    Ok(Bracket::new(
        ("eq39_lower", raw::eq39_lower(nu, x)?, true),
        ("eq39_upper", raw::eq39_upper(nu, x)?, true),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgPriorVariant {
    Eq33a,
    Eq33b,
    Eq34,
    HbvCombined,
    Eq42,
}

impl ArgPriorVariant {
    pub fn id(self) -> &'static str {
        match self {
            Self::Eq33a => "eq33a_upper",
            Self::Eq33b => "eq33b_upper",
            Self::Eq34 => "eq34_upper",
            Self::HbvCombined => "eq40_lower",
            Self::Eq42 => "eq42_lower",
        }
    }

    fn valid(self, nu: f64) -> bool {
        match self {
            Self::Eq33a => nu > -1.5,
            Self::Eq33b | Self::Eq34 => nu >= 0.5,
            Self::HbvCombined => nu > -0.5,
            Self::Eq42 => nu >= 0.0,
        }
    }
}

/// One-sided bounds on L_ν(x)/L_ν(y) from earlier work and their
/// combinations with the Bessel bracket.
pub fn arg_ratio_prior_bounds(nu: f64, pair: ArgPair, variant: ArgPriorVariant) -> Result<f64> {
    if !variant.valid(nu) {
        return Err(Error::domain(format!("{} is not valid at nu = {nu}", variant.id())));
    }
    if pair.is_diagonal() {
        return Ok(1.0);
    }
    let (x, y) = (pair.x, pair.y);
    match variant {
        ArgPriorVariant::Eq33a => raw::eq33a_upper(nu, x, y),
        ArgPriorVariant::Eq33b => raw::eq33b_upper(nu, x, y),
        ArgPriorVariant::Eq34 => raw::eq34_upper(nu, x, y),
        ArgPriorVariant::HbvCombined => raw::eq40_lower(nu, x, y),
        ArgPriorVariant::Eq42 => raw::eq42_lower(nu, x, y),
    }
}

pub fn eq34_is_equality(nu: f64) -> bool {
    (nu - 0.5).abs() <= EQUALITY_EPS
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwisePriorVariant {
    Eq43,
    Eq45,
    Eq46,
}

impl PointwisePriorVariant {
    pub fn id(self) -> &'static str {
        match self {
            Self::Eq43 => "eq43_upper",
            Self::Eq45 => "eq45_upper",
            Self::Eq46 => "eq46_upper",
        }
    }
}

/// Upper bounds on L_ν(x) built from bounds for I_ν.
pub fn pointwise_prior_upper(nu: f64, x: f64, variant: PointwisePriorVariant) -> Result<f64> {
    let ok = match variant {
        PointwisePriorVariant::Eq43 => nu >= 0.0,
        _ => nu > -0.5,
    };
    if !ok {
        return Err(Error::domain(format!("{} is not valid at nu = {nu}", variant.id())));
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!("pointwise bounds need x > 0, got {x}")));
    }
    match variant {
        PointwisePriorVariant::Eq43 => raw::eq43_upper(nu, x),
        PointwisePriorVariant::Eq45 => raw::eq45_upper(nu, x),
        PointwisePriorVariant::Eq46 => raw::eq46_upper(nu, x),
    }
}

/// a_ν together with its Stirling bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ANuConstant {
    pub nu: f64,
    pub value: f64,
    pub stirling_lower: f64,
    pub stirling_upper: f64,
}

/// a_ν = √(12/π)·√(ν+3/2)/Γ(ν+3/2)·(ν+1/2)^{ν+1/2}e^{−ν−1/2}, the limit of
/// the pointwise upper bound divided by x^{−1/2}e^x.
pub fn a_nu_constant(nu: f64) -> Result<ANuConstant> {
    if !(nu > -0.5) {
        return Err(Error::domain(format!("a_nu needs nu > -1/2, got {nu}")));
    }
    let p = nu + 0.5;
    let ln = 0.5 * (12.0 / PI).ln() + 0.5 * (nu + 1.5).ln() - ln_gamma(nu + 1.5)? + p * p.ln() - p;
    let upper = 6f64.sqrt() / PI * ((2.0 * nu + 3.0) / (2.0 * nu + 1.0)).sqrt();
    let lower = upper * (-1.0 / (6.0 * (2.0 * nu + 1.0))).exp();
    Ok(ANuConstant { nu, value: ln.exp(), stirling_lower: lower, stirling_upper: upper })
}

/// √2 Γ(ν+2)/(π Γ(ν+3/2)), the large-x constant of the I-based upper bound.
pub fn b_nu_constant(nu: f64) -> Result<f64> {
    if !(nu > -0.5) {
        return Err(Error::domain(format!("the constant needs nu > -1/2, got {nu}")));
    }
    Ok((0.5 * LN_2 + ln_gamma(nu + 2.0)? - PI.ln() - ln_gamma(nu + 1.5)?).exp())
}

/// The order at which the two large-x constants coincide, by bisection on
/// [lo, hi] to absolute tolerance `tol`.
pub fn constant_crossover(lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let f = |nu: f64| -> Result<f64> { Ok(a_nu_constant(nu)?.value - b_nu_constant(nu)?) };
    let (mut a, mut b) = (lo, hi);
    let (fa, fb) = (f(a)?, f(b)?);
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { a: "a_nu".into(), b: "b_nu".into(), lo, hi });
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if f(m)?.signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pair(x: f64, y: f64) -> ArgPair {
        ArgPair::new(x, y).unwrap()
    }

    #[test]
    fn exact_ratio() {
        assert_eq!(arg_ratio_exact(3.0, pair(2.0, 2.0)).unwrap(), 1.0);
        let want = (1f64.cosh() - 1.0) * 2f64.sqrt() / (2f64.cosh() - 1.0);
        assert_relative_eq!(arg_ratio_exact(0.5, pair(1.0, 2.0)).unwrap(), want, max_relative = 1e-13);
        let r = arg_ratio_exact(1.0, pair(2.0, 7.0)).unwrap();
        assert!(r < (2.0f64 / 7.0).powi(2));
        assert!(ArgPair::new(3.0, 1.0).is_err());
    }

    #[test]
    fn bessel_bracket() {
        let br = arg_ratio_bessel_bracket(0.5, pair(1.0, 3.0)).unwrap();
        assert_relative_eq!(br.upper, 1f64.sinh() * 3f64.sqrt() / 3f64.sinh(), max_relative = 1e-13);
        assert!(br.upper >= arg_ratio_exact(0.5, pair(1.0, 3.0)).unwrap());
        let e = arg_ratio_exact(1.0, pair(0.5, 5.0)).unwrap();
        let br = arg_ratio_bessel_bracket(1.0, pair(0.5, 5.0)).unwrap();
        assert!(br.lower < e && e < br.upper);
        let br = arg_ratio_bessel_bracket(-0.5, pair(1.0, 2.0)).unwrap();
        assert!(br.lower_valid && !br.upper_valid);
    }

    #[test]
    fn explicit_bracket() {
        let br = arg_ratio_explicit_bracket(0.5, pair(2.0, 2.0 + 1e-9)).unwrap();
        assert_relative_eq!(br.lower, 1.0, max_relative = 1e-7);
        assert_relative_eq!(br.upper, 1.0, max_relative = 1e-7);
        for &nu in &[-0.5, 0.0, 1.0, 4.0] {
            for &(x, y) in &[(0.1, 0.3), (1.0, 5.0), (3.0, 40.0)] {
                let e = arg_ratio_exact(nu, pair(x, y)).unwrap();
                let br = arg_ratio_explicit_bracket(nu, pair(x, y)).unwrap();
                assert!(br.lower < e && e < br.upper, "nu={nu} x={x} y={y}");
            }
        }
        // Lower has the right order in y, upper is off by a factor ~y.
        let r = |y: f64| {
            let br = arg_ratio_explicit_bracket(1.0, pair(1.0, y)).unwrap();
            (br.lower / arg_ratio_exact(1.0, pair(1.0, y)).unwrap(), br.upper / arg_ratio_exact(1.0, pair(1.0, y)).unwrap())
        };
        let (l25, u25) = r(25.0);
        let (l50, u50) = r(50.0);
        assert!((l50 / l25 - 1.0).abs() < 0.1);
        assert!((u50 / u25 / 2.0 - 1.0).abs() < 0.15);
        assert!(arg_ratio_explicit_bracket(-0.6, pair(1.0, 2.0)).is_err());
    }

    #[test]
    fn pointwise() {
        let l = l_nu(0.0, 5.0).unwrap();
        let br = pointwise_bracket(0.0, 5.0).unwrap();
        assert!((br.upper / l - 1.0 - 1.3722).abs() < 1e-4);
        let br = pointwise_bracket(10.0, 0.5).unwrap();
        assert!((br.upper / l_nu(10.0, 0.5).unwrap() - 1.0 - 0.0005).abs() < 1e-4);
        let x = 1e-4;
        let br = pointwise_bracket(1.0, x).unwrap();
        let lead = x * x / (PI.sqrt() * 2.0 * gamma_pos(2.5).unwrap());
        assert_relative_eq!(br.lower, lead, max_relative = 1e-6);
        assert_relative_eq!(br.upper, lead, max_relative = 1e-6);
        let br = pointwise_bracket(-0.5, 2.0).unwrap();
        assert!(br.upper.is_finite() && br.contains(l_nu(-0.5, 2.0).unwrap()));
    }

    #[test]
    fn prior_bounds() {
        let e = arg_ratio_exact(0.5, pair(1.0, 2.0)).unwrap();
        assert_relative_eq!(arg_ratio_prior_bounds(0.5, pair(1.0, 2.0), ArgPriorVariant::Eq34).unwrap(), e, max_relative = 1e-13);
        assert!(eq34_is_equality(0.5));
        let v = arg_ratio_prior_bounds(0.0, pair(1.0, 4.0), ArgPriorVariant::Eq33a).unwrap();
        assert_relative_eq!(v, 0.25, max_relative = 1e-15);
        assert!(v >= arg_ratio_exact(0.0, pair(1.0, 4.0)).unwrap());
        let v = arg_ratio_prior_bounds(1.0, pair(1.0, 3.0), ArgPriorVariant::Eq42).unwrap();
        let want = (-2.0f64).exp() * 2.0 / 9.0 * (24.0f64 / 16.0).sqrt();
        assert_relative_eq!(v, want, max_relative = 1e-14);
        assert!(v <= arg_ratio_exact(1.0, pair(1.0, 3.0)).unwrap());
        assert!(arg_ratio_prior_bounds(0.2, pair(1.0, 3.0), ArgPriorVariant::Eq33b).is_err());
        let v = arg_ratio_prior_bounds(0.0, pair(0.5, 4.0), ArgPriorVariant::HbvCombined).unwrap();
        assert!(v < arg_ratio_exact(0.0, pair(0.5, 4.0)).unwrap());
    }

    #[test]
    fn pointwise_priors() {
        let l = l_nu(0.0, 0.5).unwrap();
        let u = pointwise_prior_upper(0.0, 0.5, PointwisePriorVariant::Eq46).unwrap();
        assert!((u / l - 1.0 - 5.3417).abs() < 2e-4);
        let u = pointwise_prior_upper(2.5, 2.5, PointwisePriorVariant::Eq46).unwrap();
        assert!((u / l_nu(2.5, 2.5).unwrap() - 1.0 - 0.7309).abs() < 2e-4);
        let u = pointwise_prior_upper(0.0, 1.0, PointwisePriorVariant::Eq43).unwrap();
        let want = 0.9f64.sqrt() * 1f64.exp() / (PI.sqrt() * gamma_pos(1.5).unwrap());
        assert_relative_eq!(u, want, max_relative = 1e-14);
        assert!(u >= l_nu(0.0, 1.0).unwrap());
        let u = pointwise_prior_upper(1.0, 3.0, PointwisePriorVariant::Eq45).unwrap();
        assert!(u > l_nu(1.0, 3.0).unwrap());
        assert!(pointwise_prior_upper(-0.2, 1.0, PointwisePriorVariant::Eq43).is_err());
    }

    #[test]
    fn a_nu() {
        for &nu in &[-0.49, 0.0, 2.5, 50.0, 100.0] {
            let a = a_nu_constant(nu).unwrap();
            assert!(a.stirling_lower < a.value && a.value < a.stirling_upper, "nu={nu}");
            assert!(a.value > 1.0 / (2.0 * PI).sqrt());
        }
        let a = a_nu_constant(50.0).unwrap();
        assert!(a.stirling_upper - a.stirling_lower < 2e-3);
        let nu = constant_crossover(0.0, 10.0, 1e-4).unwrap();
        assert!((nu - 2.521).abs() < 5e-3, "{nu}");
        assert!(a_nu_constant(-0.5).is_err());
    }
}
