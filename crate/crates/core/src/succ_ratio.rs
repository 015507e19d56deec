//! Bounds for h_ν(x) = L_ν(x)/L_{ν−1}(x).
//!
//! The public operations enforce each inequality's order range; the
//! formulas themselves live in [`raw`] and are evaluated at any order the
//! underlying functions accept (the relative-error tables need that).

use std::f64::consts::PI;

use crate::bfunc::b;
use crate::bracket::{Bracket, EQUALITY_EPS};
use crate::error::{Error, Result};
use crate::registry::{self, Side, Target};
use crate::special::{gamma_pos, i_nu, l_nu, m_accurate, FuncValue, CANCELLATION_THRESHOLD};

/// x / (a + √(a² + x²)) without cancellation when a < 0.
pub(crate) fn x_over_hypot(a: f64, x: f64) -> f64 {
    let r = a.hypot(x);
    if a >= 0.0 {
        x / (a + r)
    } else {
        (r - a) / x
    }
}

fn require(cond: bool, what: &str, nu: f64) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} is not valid at nu = {nu}")))
    }
}

pub mod raw {
    //! Formula values without order-range checks.

    use super::*;

    pub fn i_ratio_lower(nu: f64, x: f64) -> Result<f64> {
        Ok(x / (nu - 0.5 + (nu + 0.5).hypot(x)))
    }

    pub fn i_ratio_upper(nu: f64, x: f64) -> Result<f64> {
        Ok(x_over_hypot(nu - 0.5, x))
    }

    pub fn i_ratio_tanh_lower(nu: f64, x: f64) -> Result<f64> {
        let t = x.tanh();
        Ok(x * t / (x + (2.0 * nu - 1.0) * t))
    }

    pub fn eq17_lower(nu: f64, x: f64) -> Result<f64> {
        Ok(1.0 / (i_nu(nu - 1.0, x)? / i_nu(nu, x)? + 2.0 * b(nu, x)? / x))
    }

    pub fn eq17_upper(nu: f64, x: f64) -> Result<f64> {
        Ok(i_nu(nu, x)? / i_nu(nu - 1.0, x)?)
    }

    pub fn eq18_lower(nu: f64, x: f64) -> Result<f64> {
        Ok(x / (nu - 0.5 + 2.0 * b(nu, x)? + (nu + 0.5).hypot(x)))
    }

    pub fn eq18_upper(nu: f64, x: f64) -> Result<f64> {
        Ok(x_over_hypot(nu - 0.5, x))
    }

    pub fn eq19_lower(nu: f64, x: f64) -> Result<f64> {
        let t = x.tanh();
        Ok(x * t / (x + (2.0 * nu - 1.0) * t + 2.0 * b(nu, x)? * t))
    }

    pub fn eq20_upper(_nu: f64, x: f64) -> Result<f64> {
        Ok((0.5 * x).tanh())
    }

    pub fn eq21_lower(nu: f64, x: f64) -> Result<f64> {
        Ok(x_over_hypot(nu + b(nu, x)?, x))
    }

    pub fn eq22_lower(nu: f64, x: f64) -> Result<f64> {
        let t = (0.5 * x).tanh();
        let db = b(nu, x)? - b(0.5, x)?;
        Ok(x * t / (x + (2.0 * nu - 1.0) * t + 2.0 * db * t))
    }

    pub fn eq24_upper(nu: f64, x: f64) -> Result<f64> {
        let b0 = b(nu, x)?;
        let b1 = b(nu + 1.0, x)?;
        Ok(x / (nu - 1.0 + 2.0 * b0 - b1 + (nu + 1.0 + b1).hypot(x)))
    }

    /// (x/2)^ν I_ν(x) / (√π Γ(ν+3/2)), the cap on the product difference for ν ≥ −1/2.
    pub fn eq15_upper(nu: f64, x: f64) -> Result<f64> {
        Ok((0.5 * x).powf(nu) * i_nu(nu, x)? / (PI.sqrt() * gamma_pos(nu + 1.5)?))
    }

    /// (x/2)^{ν−1} I_{ν−1}(x) / (√π Γ(ν+1/2)), the cap for ν ≥ 3/2.
    pub fn eq16_upper(nu: f64, x: f64) -> Result<f64> {
        Ok((0.5 * x).powf(nu - 1.0) * i_nu(nu - 1.0, x)? / (PI.sqrt() * gamma_pos(nu + 0.5)?))
    }
}

/// Classical brackets for I_ν/I_{ν−1}: lower valid for ν ≥ 0, upper for ν ≥ 1/2.
pub fn bessel_ratio_bounds(nu: f64, x: f64) -> Result<Bracket> {
    Ok(Bracket::new(
        ("i_ratio_lower", raw::i_ratio_lower(nu, x)?, nu >= 0.0),
        ("i_ratio_upper", raw::i_ratio_upper(nu, x)?, nu >= 0.5),
    ))
}

/// x tanh x / (x + (2ν−1) tanh x) < I_ν/I_{ν−1} for ν > 1/2.
pub fn bessel_ratio_lower_tanh(nu: f64, x: f64) -> Result<f64> {
    require(nu > 0.5, "tanh lower bound for the Bessel ratio", nu)?;
    raw::i_ratio_tanh_lower(nu, x)
}

/// I_ν L_{ν−1} − I_{ν−1} L_ν.
///
/// For large x the two products agree to roughly e^{−x}; the value is then
/// taken from the equivalent form I_ν M_{ν−1} − I_{ν−1} M_ν, where the M
/// values carry no such cancellation.
pub fn product_difference(nu: f64, x: f64) -> Result<FuncValue> {
    let i0 = i_nu(nu, x)?;
    let i1 = i_nu(nu - 1.0, x)?;
    let p = i0 * l_nu(nu - 1.0, x)?;
    let q = i1 * l_nu(nu, x)?;
    let direct = p - q;
    let amp = p.abs().max(q.abs()) / direct.abs();
    if amp <= 1e4 || nu < -0.5 {
        return Ok(FuncValue {
            value: direct,
            terms_used: 0,
            est_rel_error: amp * 4.0 * f64::EPSILON,
            cancellation: amp > CANCELLATION_THRESHOLD,
        });
    }
    let r = i0 * m_accurate(nu - 1.0, x)?;
    let s = i1 * m_accurate(nu, x)?;
    let value = r - s;
    let amp = r.abs().max(s.abs()) / value.abs();
    Ok(FuncValue {
        value,
        terms_used: 0,
        est_rel_error: amp * 1e-12,
        cancellation: amp > CANCELLATION_THRESHOLD,
    })
}

/// Two-sided bound through the Bessel ratio: lower valid for ν ≥ 0, upper for ν ≥ 1/2.
pub fn ratio_bracket_via_bessel(nu: f64, x: f64) -> Result<Bracket> {
    Ok(Bracket::new(
        ("eq17_lower", raw::eq17_lower(nu, x)?, nu >= 0.0),
        ("eq17_upper", raw::eq17_upper(nu, x)?, nu >= 0.5),
    ))
}

/// Closed-form radical bracket: lower valid for ν ≥ 0, upper for ν ≥ 1/2.
pub fn ratio_bracket_segura_form(nu: f64, x: f64) -> Result<Bracket> {
    Ok(Bracket::new(
        ("eq18_lower", raw::eq18_lower(nu, x)?, nu >= 0.0),
        ("eq18_upper", raw::eq18_upper(nu, x)?, nu >= 0.5),
    ))
}

pub fn ratio_lower_tanh(nu: f64, x: f64) -> Result<f64> {
    require(nu > 0.5, "eq19_lower", nu)?;
    raw::eq19_lower(nu, x)
}

/// tanh(x/2), exact at ν = 1/2.
pub fn ratio_upper_tanh_half(nu: f64, x: f64) -> Result<f64> {
    require(nu >= 0.5, "eq20_upper", nu)?;
    raw::eq20_upper(nu, x)
}

pub fn ratio_lower_turan(nu: f64, x: f64) -> Result<f64> {
    require(nu >= -0.5, "eq21_lower", nu)?;
    raw::eq21_lower(nu, x)
}

pub fn ratio_lower_tanh_half(nu: f64, x: f64) -> Result<f64> {
    require(nu >= 0.5, "eq22_lower", nu)?;
    if (nu - 0.5).abs() <= EQUALITY_EPS {
        return Ok((0.5 * x).tanh());
    }
    raw::eq22_lower(nu, x)
}

pub fn ratio_upper_refined(nu: f64, x: f64) -> Result<f64> {
    require(nu >= 0.0, "eq24_upper", nu)?;
    raw::eq24_upper(nu, x)
}

/// One step of h_ν = 1/(2ν/x + 2b_ν(x)/x + h_{ν+1}): a bracket for
/// h_{ν+1}(x) becomes a bracket for h_ν(x), with the sides exchanged.
pub fn ratio_refine_step(nu: f64, x: f64, next: &Bracket) -> Result<Bracket> {
    require(nu >= 0.0, "refinement step", nu)?;
    next.check()?;
    let shift = (2.0 * nu + 2.0 * b(nu, x)?) / x;
    let map = |h: f64| 1.0 / (shift + h);
    Ok(Bracket::new(
        ("eq23_lower", map(next.upper), next.upper_valid),
        ("eq23_upper", map(next.lower), next.lower_valid),
    ))
}

/// Tightest bracket for h_ν(x) from every registered bound valid at ν.
pub fn best_bracket(nu: f64, x: f64) -> Result<Bracket> {
    let point = registry::Point::new(nu, x);
    let mut lower: Option<(&'static str, f64)> = None;
    let mut upper: Option<(&'static str, f64)> = None;
    for spec in registry::bounds_for(Target::SuccRatioL) {
        if !spec.nu_validity.contains(nu) {
            continue;
        }
        let v = spec.evaluate_unchecked(&point)?;
        match spec.side {
            Side::Lower if lower.is_none_or(|(_, l)| v > l) => lower = Some((spec.id, v)),
            Side::Upper if upper.is_none_or(|(_, u)| v < u) => upper = Some((spec.id, v)),
            _ => {}
        }
    }
    if lower.is_none() && upper.is_none() {
        return Err(Error::NoValidBound(nu));
    }
    let (lid, l) = lower.unwrap_or(("none", 0.0));
    let (uid, u) = upper.unwrap_or(("none", f64::INFINITY));
    Ok(Bracket::new((lid, l, lower.is_some()), (uid, u, upper.is_some())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{ratio_succ_exact, Kind};
    use approx::assert_relative_eq;

    fn h(nu: f64, x: f64) -> f64 {
        ratio_succ_exact(Kind::L, nu, x).unwrap()
    }

    #[test]
    fn bessel_ratio_examples() {
        let br = bessel_ratio_bounds(0.5, 3.0).unwrap();
        assert_relative_eq!(br.upper, 1.0);
        assert!(br.upper >= 3f64.tanh());
        let r = i_nu(1.0, 2.0).unwrap() / i_nu(0.0, 2.0).unwrap();
        let br = bessel_ratio_bounds(1.0, 2.0).unwrap();
        assert!(br.lower < r && r < br.upper);
        let br = bessel_ratio_bounds(0.0, 1.0).unwrap();
        assert_relative_eq!(br.lower, 1.0 / (-0.5 + 1.25f64.sqrt()), max_relative = 1e-15);
        let r = i_nu(0.0, 1.0).unwrap() / i_nu(-1.0, 1.0).unwrap();
        assert!(br.lower < r);
        assert!(!br.upper_valid);
        assert!(bessel_ratio_lower_tanh(1.0, 2.0).unwrap() < i_nu(1.0, 2.0).unwrap() / i_nu(0.0, 2.0).unwrap());
    }

    #[test]
    fn product_difference_closed_forms() {
        for &x in &[0.5, 3.0, 30.0] {
            let d = product_difference(0.5, x).unwrap().value;
            assert_relative_eq!(d, 2.0 / (PI * x) * (x.cosh() - 1.0), max_relative = 1e-11);
            let d = product_difference(-0.5, x).unwrap().value;
            assert_relative_eq!(d, 2.0 / (PI * x), max_relative = 1e-8);
        }
        let d = product_difference(1.0, 2.0).unwrap().value;
        assert!(d > 0.0 && d < raw::eq15_upper(1.0, 2.0).unwrap());
    }

    #[test]
    fn product_difference_positive_far_out() {
        for &nu in &[0.75, 1.0, 2.5, 10.0] {
            for &x in &[10.0, 25.0, 50.0] {
                let d = product_difference(nu, x).unwrap();
                assert!(d.value > 0.0, "nu={nu} x={x}");
                assert!(!d.cancellation);
            }
        }
    }

    #[test]
    fn via_bessel_examples() {
        let br = ratio_bracket_via_bessel(1.0, 5.0).unwrap();
        assert!((br.lower / h(1.0, 5.0) - 1.0).abs() - 0.0186 < 1e-4 + 0.00005);
        let br = ratio_bracket_via_bessel(0.5, 1.0).unwrap();
        assert!(((br.upper / h(0.5, 1.0) - 1.0) - 0.6481).abs() < 1e-4);
        let br = ratio_bracket_via_bessel(10.0, 1e-4).unwrap();
        assert!(((br.upper / h(10.0, 1e-4) - 1.0) - 0.05).abs() < 1e-6);
    }

    #[test]
    fn bessel_form_examples() {
        let br = ratio_bracket_segura_form(0.0, 1.0).unwrap();
        assert!(((1.0 - br.lower / h(0.0, 1.0)) - 0.1973).abs() < 1e-4);
        let br = ratio_bracket_segura_form(1.0, 2.5).unwrap();
        assert!(((br.upper / h(1.0, 2.5) - 1.0) - 0.2417).abs() < 1e-4);
        // Upper/exact − 1 → 2/(2ν−1), infinite at ν = 1/2.
        let br = ratio_bracket_segura_form(0.5, 1e-6).unwrap();
        assert!(br.upper / h(0.5, 1e-6) - 1.0 > 1e5);
    }

    #[test]
    fn tanh_bounds() {
        assert!(ratio_lower_tanh(1.0, 2.0).unwrap() < h(1.0, 2.0));
        let far = ratio_lower_tanh(0.75, 200.0).unwrap();
        assert!(far < 1.0 && far > 0.99);
        assert!(ratio_lower_tanh(2.0, 0.5).unwrap() < ratio_lower_tanh_half(2.0, 0.5).unwrap());
        assert!(ratio_lower_tanh(0.5, 1.0).is_err());

        assert_relative_eq!(ratio_upper_tanh_half(0.5, 3.0).unwrap(), h(0.5, 3.0), max_relative = 1e-13);
        assert!(ratio_upper_tanh_half(1.0, 1.0).unwrap() > h(1.0, 1.0));
        assert!(ratio_upper_tanh_half(0.4, 1.0).is_err());

        assert_relative_eq!(ratio_lower_tanh_half(0.5, 4.0).unwrap(), 2f64.tanh());
        let v = ratio_lower_tanh_half(1.0, 2.0).unwrap();
        assert!(ratio_lower_tanh(1.0, 2.0).unwrap() < v && v < h(1.0, 2.0));
        let v = ratio_lower_tanh_half(2.5, 10.0).unwrap();
        assert!(v > 0.0 && v < h(2.5, 10.0));
    }

    #[test]
    fn turan_lower() {
        let exact = {
            let x: f64 = 1.0;
            let lm = x.sinh();
            let lmm = x.cosh() - x.sinh() / x;
            lm / lmm
        };
        assert!(ratio_lower_turan(-0.5, 1.0).unwrap() < exact);
        let v = ratio_lower_turan(0.0, 2.0).unwrap();
        assert!(v < h(0.0, 2.0));
        assert!(v < raw::eq18_lower(0.0, 2.0).unwrap());
        let x = 1e-6;
        assert_relative_eq!(ratio_lower_turan(0.5, x).unwrap(), x / 2.0, max_relative = 1e-6);
        assert!(ratio_lower_turan(-0.6, 1.0).is_err());
    }

    #[test]
    fn refined_upper() {
        let x = 1e-4;
        assert!((ratio_upper_refined(0.0, x).unwrap() / h(0.0, x) - 1.0).abs() < 1e-6);
        assert!(ratio_upper_refined(1.0, 3.0).unwrap() > h(1.0, 3.0));
        assert!(ratio_upper_refined(-0.1, 1.0).is_err());
    }

    #[test]
    fn refine_step_identities() {
        let (nu, x) = (1.0, 3.0);
        // Radical upper bound at ν+1 maps to the radical lower bound at ν.
        let next = ratio_bracket_segura_form(nu + 1.0, x).unwrap();
        let step = ratio_refine_step(nu, x, &next).unwrap();
        assert_relative_eq!(step.lower, raw::eq18_lower(nu, x).unwrap(), max_relative = 1e-14);
        // Turán lower bound at ν+1 maps to the refined upper bound at ν.
        let t = raw::eq21_lower(nu + 1.0, x).unwrap();
        let next = Bracket::new(("eq21_lower", t, true), ("none", f64::INFINITY, false));
        let step = ratio_refine_step(nu, x, &next).unwrap();
        assert_relative_eq!(step.upper, raw::eq24_upper(nu, x).unwrap(), max_relative = 1e-14);
        assert!(!step.lower_valid);
        // Exact input gives the exact ratio back.
        let e = h(nu + 1.0, x);
        let step = ratio_refine_step(nu, x, &Bracket::new(("exact", e, true), ("exact", e, true))).unwrap();
        assert_relative_eq!(step.lower, h(nu, x), max_relative = 1e-13);
        assert_relative_eq!(step.upper, h(nu, x), max_relative = 1e-13);
        // Out-of-order input is rejected.
        let bad = Bracket::new(("a", 0.9, true), ("b", 0.1, true));
        assert!(matches!(ratio_refine_step(nu, x, &bad), Err(Error::InvalidBracket { .. })));
    }

    #[test]
    fn best_bracket_examples() {
        let best = best_bracket(1.0, 10.0).unwrap();
        let exact = h(1.0, 10.0);
        assert!(best.lower <= exact && exact <= best.upper);
        for br in [ratio_bracket_via_bessel(1.0, 10.0).unwrap(), ratio_bracket_segura_form(1.0, 10.0).unwrap()] {
            assert!(best.width().unwrap() <= br.width().unwrap());
        }
        let best = best_bracket(0.5, 3.0).unwrap();
        assert_relative_eq!(best.upper, 1.5f64.tanh(), max_relative = 1e-15);
        assert_eq!(best.upper_id, "eq20_upper");
        assert!(matches!(best_bracket(-0.8, 1.0), Err(Error::NoValidBound(_))));
    }
}
