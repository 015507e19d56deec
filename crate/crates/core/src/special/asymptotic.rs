use std::f64::consts::PI;

use super::gamma::gamma_pos;
use super::Kind;
use crate::error::{Error, Result};

/// Three-term large-x expansion shared by I_ν and L_ν:
/// e^x/√(2πx)·(1 − (4ν²−1)/(8x) + (4ν²−1)(4ν²−9)/(128x²)).
pub fn asym_large_x(kind: Kind, nu: f64, x: f64) -> Result<f64> {
    if kind == Kind::M {
        return Err(Error::domain("large-x expansion is provided for I and L only"));
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!("x must be positive, got {x}")));
    }
    let mu = 4.0 * nu * nu;
    let series = 1.0 - (mu - 1.0) / (8.0 * x) + (mu - 1.0) * (mu - 9.0) / (128.0 * x * x);
    Ok(x.exp() / (2.0 * PI * x).sqrt() * series)
}

/// Leading small-x behaviour: x^ν/(2^ν Γ(ν+1)) for I (ν > −1) and
/// x^{ν+1}/(√π 2^ν Γ(ν+3/2))·(1 + x²/(3(2ν+3))) for L (ν > −3/2).
pub fn small_x_leading(kind: Kind, nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("x must be positive, got {x}")));
    }
    match kind {
        Kind::I if nu > -1.0 => Ok(x.powf(nu) / (2f64.powf(nu) * gamma_pos(nu + 1.0)?)),
        Kind::L if nu > -1.5 => {
            let lead = x.powf(nu + 1.0) / (PI.sqrt() * 2f64.powf(nu) * gamma_pos(nu + 1.5)?);
            Ok(lead * (1.0 + x * x / (3.0 * (2.0 * nu + 3.0))))
        }
        _ => Err(Error::domain(format!("small-x form undefined for {kind:?} at nu = {nu}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{bessel_i, struve_l, EvalConfig};
    use approx::assert_relative_eq;

    #[test]
    fn vanishing_corrections_at_half() {
        let x: f64 = 7.0;
        let v = asym_large_x(Kind::L, 0.5, x).unwrap();
        assert_relative_eq!(v, x.exp() / (2.0 * PI * x).sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn large_x_against_series() {
        let cfg = EvalConfig::default();
        let a = asym_large_x(Kind::I, 1.0, 50.0).unwrap();
        let s = bessel_i(1.0, 50.0, &cfg).unwrap().value;
        assert!((a / s - 1.0).abs() <= 1e-4);
        let a = asym_large_x(Kind::L, 2.5, 100.0).unwrap();
        let s = struve_l(2.5, 100.0, &cfg).unwrap().value;
        assert!((a / s - 1.0).abs() <= 1e-4);
    }

    #[test]
    fn small_x_against_series() {
        let cfg = EvalConfig::default();
        let lead = small_x_leading(Kind::L, 0.0, 0.01).unwrap();
        let expected = 0.01 / (PI.sqrt() * gamma_pos(1.5).unwrap()) * (1.0 + 0.0001 / 9.0);
        assert_relative_eq!(lead, expected, max_relative = 1e-15);
        let s = struve_l(0.0, 0.01, &cfg).unwrap().value;
        assert!((lead / s - 1.0).abs() <= 1e-8);

        assert_relative_eq!(small_x_leading(Kind::I, 0.0, 1e-9).unwrap(), 1.0, max_relative = 1e-14);

        let lead = small_x_leading(Kind::L, 0.5, 0.1).unwrap();
        let closed = (2.0 / (PI * 0.1)).sqrt() * (0.1f64.cosh() - 1.0);
        assert!((lead / closed - 1.0).abs() <= 1e-4);
    }

    #[test]
    fn small_x_domain() {
        assert!(small_x_leading(Kind::I, -1.0, 0.5).is_err());
        assert!(small_x_leading(Kind::L, -1.5, 0.5).is_err());
        assert!(small_x_leading(Kind::M, 0.0, 0.5).is_err());
    }
}
