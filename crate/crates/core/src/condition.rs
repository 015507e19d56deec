//! Condition numbers C(f)(x) = x f′(x)/f(x) for f = L_ν and f = I_ν, and
//! the brackets for C(L_ν).

use std::fmt;
use std::str::FromStr;

use crate::bfunc::b;
use crate::bracket::{Bracket, EQUALITY_EPS};
use crate::error::{Error, Result};
use crate::special::{i_nu, l_nu, Kind};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CondValue {
    pub value: f64,
    pub kind: Kind,
    pub nu: f64,
    pub x: f64,
    /// Relative disagreement between the two recurrence forms of C.
    pub residual: f64,
}

/// C(f)(x) from x f_{ν−1}/f_ν − ν, with the shifted form
/// x f_{ν+1}/f_ν + ν (+ 2b_ν(x) for L) kept as a residual.
pub fn cond_exact(kind: Kind, nu: f64, x: f64) -> Result<CondValue> {
    let (value, other) = match kind {
        Kind::L => {
            let l0 = l_nu(nu, x)?;
            let down = x * l_nu(nu - 1.0, x)? / l0 - nu;
            let up = x * l_nu(nu + 1.0, x)? / l0 + nu + 2.0 * b(nu, x)?;
            (down, up)
        }
        Kind::I => {
            let i0 = i_nu(nu, x)?;
            (x * i_nu(nu - 1.0, x)? / i0 - nu, x * i_nu(nu + 1.0, x)? / i0 + nu)
        }
        Kind::M => return Err(Error::domain("condition numbers are provided for I and L only")),
    };
    let residual = (value - other).abs() / value.abs().max(f64::MIN_POSITIVE);
    Ok(CondValue { value, kind, nu, x, residual })
}

fn c_i(nu: f64, x: f64) -> Result<f64> {
    cond_exact(Kind::I, nu, x).map(|c| c.value)
}

/// The families of brackets for C(L_ν).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondVariant {
    Eq29,
    Eq30,
    Eq31,
    Apti,
    Prior,
}

impl FromStr for CondVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "eq29" => Ok(Self::Eq29),
            "eq30" => Ok(Self::Eq30),
            "eq31" => Ok(Self::Eq31),
            "apti" | "eq27" => Ok(Self::Apti),
            "prior" => Ok(Self::Prior),
            other => Err(Error::domain(format!("unknown condition-number variant '{other}'"))),
        }
    }
}

impl fmt::Display for CondVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Eq29 => "eq29",
            Self::Eq30 => "eq30",
            Self::Eq31 => "eq31",
            Self::Apti => "apti",
            Self::Prior => "prior",
        };
        f.write_str(s)
    }
}

pub mod raw {
    use super::*;

    pub fn eq27_upper(nu: f64, x: f64) -> Result<f64> {
        Ok((x * x + nu * nu + 2.0 * (2.0 * nu + 1.0) * b(nu, x)?).sqrt())
    }

    pub fn eq28_lower(nu: f64, x: f64) -> Result<f64> {
        c_i(nu, x)
    }

    pub fn eq28_upper(nu: f64, x: f64) -> Result<f64> {
        Ok(c_i(nu, x)? + 2.0 * b(nu, x)?)
    }

    pub fn eq29_lower(nu: f64, x: f64) -> Result<f64> {
        Ok((nu - 0.5).hypot(x) - 0.5)
    }

    pub fn eq29_upper(nu: f64, x: f64) -> Result<f64> {
        let bv = b(nu, x)?;
        Ok((nu + bv).hypot(x) + bv)
    }

    pub fn eq30_lower(nu: f64, x: f64) -> Result<f64> {
        let b0 = b(nu, x)?;
        let b1 = b(nu + 1.0, x)?;
        Ok((nu + 1.0 + b1).hypot(x) + 2.0 * b0 - b1 - 1.0)
    }

    pub fn eq30_upper(nu: f64, x: f64) -> Result<f64> {
        Ok((nu + 0.5).hypot(x) + 2.0 * b(nu, x)? - 0.5)
    }

    pub fn eq31_lower(nu: f64, x: f64) -> Result<f64> {
        let b0 = b(nu, x)?;
        let b1 = b(nu + 1.0, x)?;
        Ok(nu + 2.0 * b0 + x * x / (nu + 0.5 + 2.0 * b1 + (nu + 1.5).hypot(x)))
    }

    pub fn prior_nup1(nu: f64, _x: f64) -> Result<f64> {
        Ok(nu + 1.0)
    }

    pub fn prior_xminus(nu: f64, x: f64) -> Result<f64> {
        Ok(x - nu)
    }

    /// x coth(x/2) − ν, written as x/tanh(x/2) − ν.
    pub fn prior_coth(nu: f64, x: f64) -> Result<f64> {
        Ok(x / (0.5 * x).tanh() - nu)
    }
}

/// C(I_ν) < C(L_ν) < C(I_ν) + 2b_ν(x); lower for ν ≥ 1/2, upper for ν ≥ −1/2.
pub fn cond_bracket_via_bessel(nu: f64, x: f64) -> Result<Bracket> {
    let ci = c_i(nu, x)?;
    Ok(Bracket::new(
        ("eq28_lower", ci, nu >= 0.5),
        ("eq28_upper", ci + 2.0 * b(nu, x)?, nu >= -0.5),
    ))
}

const NONE: (&str, f64, bool) = ("none", f64::NAN, false);

/// Radical-type brackets for C(L_ν). Sides outside their range are
/// flagged invalid; a variant with no valid side at ν is a domain error.
pub fn cond_bracket_sqrt(nu: f64, x: f64, variant: CondVariant) -> Result<Bracket> {
    let br = match variant {
        CondVariant::Eq29 => Bracket::new(
            ("eq29_lower", raw::eq29_lower(nu, x)?, nu >= 0.5),
            ("eq29_upper", raw::eq29_upper(nu, x)?, nu >= -0.5),
        ),
        CondVariant::Eq30 => Bracket::new(
            ("eq30_lower", raw::eq30_lower(nu, x)?, nu >= -1.0),
            ("eq30_upper", raw::eq30_upper(nu, x)?, nu >= -0.5),
        ),
        CondVariant::Eq31 => Bracket::new(("eq31_lower", raw::eq31_lower(nu, x)?, nu >= -1.0), NONE),
        CondVariant::Apti => Bracket::new(NONE, ("eq27_upper", raw::eq27_upper(nu, x)?, nu > -1.5)),
        CondVariant::Prior => {
            let candidates = [
                ("prior_nup1", raw::prior_nup1(nu, x)?, nu > -1.5),
                ("prior_xminus", raw::prior_xminus(nu, x)?, nu >= -0.5),
                ("prior_coth", raw::prior_coth(nu, x)?, nu >= 0.5),
            ];
            let best = candidates
                .into_iter()
                .filter(|c| c.2)
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap_or(NONE);
            Bracket::new(best, NONE)
        }
    };
    if !br.lower_valid && !br.upper_valid {
        return Err(Error::domain(format!("variant {variant} has no valid side at nu = {nu}")));
    }
    Ok(br)
}

/// Whether ν sits on the equality order of the x coth(x/2) − ν bound.
pub fn prior_coth_is_equality(nu: f64) -> bool {
    (nu - 0.5).abs() <= EQUALITY_EPS
}
