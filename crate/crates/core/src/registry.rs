//! Named inequalities: target quantity, side, order range, strictness and
//! evaluator for every bound the crate provides.

use std::fmt;

use crate::arg_ratio::{self, ArgPair};
use crate::bfunc::{self, b};
use crate::bracket::{NuRange, Strictness};
use crate::condition::{self, cond_exact};
use crate::error::{Error, Result};
use crate::special::{l_nu, ratio_succ_exact, Kind};
use crate::succ_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// L_ν(x)/L_{ν−1}(x)
    SuccRatioL,
    /// I_ν(x)/I_{ν−1}(x)
    SuccRatioI,
    /// x L′_ν(x)/L_ν(x)
    CondL,
    /// L_ν(x)/L_ν(y)
    ArgRatioL,
    /// L_ν(x)
    PointwiseL,
    /// b_ν(x)
    BKernel,
    /// I_ν L_{ν−1} − I_{ν−1} L_ν
    ProductDifference,
}

impl Target {
    pub fn needs_y(self) -> bool {
        self == Target::ArgRatioL
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Target::SuccRatioL => "succ_ratio_L",
            Target::SuccRatioI => "succ_ratio_I",
            Target::CondL => "cond_L",
            Target::ArgRatioL => "arg_ratio_L",
            Target::PointwiseL => "pointwise_L",
            Target::BKernel => "b_kernel",
            Target::ProductDifference => "product_difference",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

/// Evaluation point; `y` is used only by argument-ratio bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub nu: f64,
    pub x: f64,
    pub y: Option<f64>,
}

impl Point {
    pub fn new(nu: f64, x: f64) -> Self {
        Self { nu, x, y: None }
    }

    pub fn with_y(nu: f64, x: f64, y: f64) -> Self {
        Self { nu, x, y: Some(y) }
    }

    fn y(&self) -> Result<f64> {
        self.y.ok_or_else(|| Error::domain("this bound needs a second argument y"))
    }

    fn pair(&self) -> Result<ArgPair> {
        ArgPair::new(self.x, self.y()?)
    }
}

type Eval = fn(&Point) -> Result<f64>;

#[derive(Clone, Copy)]
pub struct BoundSpec {
    pub id: &'static str,
    pub target: Target,
    pub side: Side,
    pub nu_validity: NuRange,
    pub strictness: Strictness,
    eval: Eval,
}

impl fmt::Debug for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundSpec")
            .field("id", &self.id)
            .field("target", &self.target)
            .field("side", &self.side)
            .field("nu_validity", &self.nu_validity)
            .field("strictness", &self.strictness)
            .finish()
    }
}

impl BoundSpec {
    /// Bound value; fails outside the registered order range.
    pub fn evaluate(&self, p: &Point) -> Result<f64> {
        if !self.nu_validity.contains(p.nu) {
            return Err(Error::domain(format!("{} requires {}, got nu = {}", self.id, self.nu_validity, p.nu)));
        }
        self.evaluate_unchecked(p)
    }

    /// Formula value at any order the underlying functions accept.
    pub fn evaluate_unchecked(&self, p: &Point) -> Result<f64> {
        if self.target.needs_y() && p.y == Some(p.x) {
            return Ok(1.0);
        }
        (self.eval)(p)
    }

    pub fn is_equality(&self, nu: f64) -> bool {
        self.strictness.is_equality(nu)
    }
}

use NuRange::{Above, AtLeast};
use Side::{Lower, Upper};
use Strictness::{EqualityAt, Strict};
use Target::*;

macro_rules! spec {
    ($id:literal, $target:expr, $side:expr, $range:expr, $strict:expr, $eval:expr) => {
        BoundSpec { id: $id, target: $target, side: $side, nu_validity: $range, strictness: $strict, eval: $eval }
    };
}

static REGISTRY: &[BoundSpec] = &[
    // b_ν(x)
    spec!("eq12_upper", BKernel, Upper, Above(-1.5), Strict, |p| bfunc::b_upper_quadratic(p.nu, p.x)),
    spec!("eq13_lower", BKernel, Lower, AtLeast(-0.5), EqualityAt(-0.5), |p| Ok(0.5 * p.x / p.x.sinh())),
    spec!("eq13_upper", BKernel, Upper, Above(-1.0), Strict, |p| {
        Ok(0.25 * p.x / (p.x / (2.0 * p.nu + 3.0)).sinh())
    }),
    // I_ν L_{ν−1} − I_{ν−1} L_ν
    spec!("eq14_positivity", ProductDifference, Lower, AtLeast(0.5), Strict, |_| Ok(0.0)),
    spec!("eq15_upper", ProductDifference, Upper, AtLeast(-0.5), Strict, |p| succ_ratio::raw::eq15_upper(p.nu, p.x)),
    spec!("eq16_upper", ProductDifference, Upper, AtLeast(1.5), Strict, |p| succ_ratio::raw::eq16_upper(p.nu, p.x)),
    // I_ν/I_{ν−1}
    spec!("i_ratio_lower", SuccRatioI, Lower, AtLeast(0.0), Strict, |p| succ_ratio::raw::i_ratio_lower(p.nu, p.x)),
    spec!("i_ratio_upper", SuccRatioI, Upper, AtLeast(0.5), Strict, |p| succ_ratio::raw::i_ratio_upper(p.nu, p.x)),
    spec!("i_ratio_tanh_lower", SuccRatioI, Lower, Above(0.5), Strict, |p| succ_ratio::raw::i_ratio_tanh_lower(p.nu, p.x)),
    // L_ν/L_{ν−1}
    spec!("eq17_lower", SuccRatioL, Lower, AtLeast(0.0), Strict, |p| succ_ratio::raw::eq17_lower(p.nu, p.x)),
    spec!("eq17_upper", SuccRatioL, Upper, AtLeast(0.5), Strict, |p| succ_ratio::raw::eq17_upper(p.nu, p.x)),
    spec!("eq18_lower", SuccRatioL, Lower, AtLeast(0.0), Strict, |p| succ_ratio::raw::eq18_lower(p.nu, p.x)),
    spec!("eq18_upper", SuccRatioL, Upper, AtLeast(0.5), Strict, |p| succ_ratio::raw::eq18_upper(p.nu, p.x)),
    spec!("eq19_lower", SuccRatioL, Lower, Above(0.5), Strict, |p| succ_ratio::raw::eq19_lower(p.nu, p.x)),
    spec!("eq20_upper", SuccRatioL, Upper, AtLeast(0.5), EqualityAt(0.5), |p| succ_ratio::raw::eq20_upper(p.nu, p.x)),
    spec!("eq21_lower", SuccRatioL, Lower, AtLeast(-0.5), Strict, |p| succ_ratio::raw::eq21_lower(p.nu, p.x)),
    spec!("eq22_lower", SuccRatioL, Lower, AtLeast(0.5), EqualityAt(0.5), |p| succ_ratio::raw::eq22_lower(p.nu, p.x)),
    spec!("eq24_upper", SuccRatioL, Upper, AtLeast(0.0), Strict, |p| succ_ratio::raw::eq24_upper(p.nu, p.x)),
    // x L′_ν/L_ν
    spec!("eq27_upper", CondL, Upper, Above(-1.5), Strict, |p| condition::raw::eq27_upper(p.nu, p.x)),
    spec!("eq28_lower", CondL, Lower, AtLeast(0.5), Strict, |p| condition::raw::eq28_lower(p.nu, p.x)),
    spec!("eq28_upper", CondL, Upper, AtLeast(-0.5), Strict, |p| condition::raw::eq28_upper(p.nu, p.x)),
    spec!("eq29_lower", CondL, Lower, AtLeast(0.5), Strict, |p| condition::raw::eq29_lower(p.nu, p.x)),
    spec!("eq29_upper", CondL, Upper, AtLeast(-0.5), Strict, |p| condition::raw::eq29_upper(p.nu, p.x)),
    spec!("eq30_lower", CondL, Lower, AtLeast(-1.0), Strict, |p| condition::raw::eq30_lower(p.nu, p.x)),
    spec!("eq30_upper", CondL, Upper, AtLeast(-0.5), Strict, |p| condition::raw::eq30_upper(p.nu, p.x)),
    spec!("eq31_lower", CondL, Lower, AtLeast(-1.0), Strict, |p| condition::raw::eq31_lower(p.nu, p.x)),
    spec!("prior_nup1", CondL, Lower, Above(-1.5), Strict, |p| condition::raw::prior_nup1(p.nu, p.x)),
    spec!("prior_xminus", CondL, Lower, AtLeast(-0.5), Strict, |p| condition::raw::prior_xminus(p.nu, p.x)),
    spec!("prior_coth", CondL, Lower, AtLeast(0.5), EqualityAt(0.5), |p| condition::raw::prior_coth(p.nu, p.x)),
    // L_ν(x)/L_ν(y)
    spec!("eq33a_upper", ArgRatioL, Upper, Above(-1.5), Strict, |p| arg_ratio::raw::eq33a_upper(p.nu, p.x, p.y()?)),
    spec!("eq33b_upper", ArgRatioL, Upper, AtLeast(0.5), Strict, |p| arg_ratio::raw::eq33b_upper(p.nu, p.x, p.y()?)),
    spec!("eq34_upper", ArgRatioL, Upper, AtLeast(0.5), EqualityAt(0.5), |p| arg_ratio::raw::eq34_upper(p.nu, p.x, p.y()?)),
    spec!("eq37_lower", ArgRatioL, Lower, AtLeast(-0.5), Strict, |p| arg_ratio::raw::eq37_lower(p.nu, p.x, p.y()?)),
    spec!("eq37_upper", ArgRatioL, Upper, AtLeast(0.5), Strict, |p| arg_ratio::raw::eq37_upper(p.nu, p.x, p.y()?)),
    spec!("eq38_lower", ArgRatioL, Lower, AtLeast(-0.5), Strict, |p| arg_ratio::raw::eq38_lower(p.nu, p.x, p.y()?)),
    spec!("eq38_upper", ArgRatioL, Upper, AtLeast(-0.5), Strict, |p| arg_ratio::raw::eq38_upper(p.nu, p.x, p.y()?)),
    spec!("eq40_lower", ArgRatioL, Lower, Above(-0.5), Strict, |p| arg_ratio::raw::eq40_lower(p.nu, p.x, p.y()?)),
    spec!("eq42_lower", ArgRatioL, Lower, AtLeast(0.0), Strict, |p| arg_ratio::raw::eq42_lower(p.nu, p.x, p.y()?)),
    // L_ν(x)
    spec!("eq39_lower", PointwiseL, Lower, AtLeast(-0.5), Strict, |p| arg_ratio::raw::eq39_lower(p.nu, p.x)),
    spec!("eq39_upper", PointwiseL, Upper, AtLeast(-0.5), Strict, |p| arg_ratio::raw::eq39_upper(p.nu, p.x)),
    spec!("eq43_upper", PointwiseL, Upper, AtLeast(0.0), Strict, |p| arg_ratio::raw::eq43_upper(p.nu, p.x)),
    spec!("eq45_upper", PointwiseL, Upper, Above(-0.5), Strict, |p| arg_ratio::raw::eq45_upper(p.nu, p.x)),
    spec!("eq46_upper", PointwiseL, Upper, Above(-0.5), Strict, |p| arg_ratio::raw::eq46_upper(p.nu, p.x)),
];

pub fn all() -> &'static [BoundSpec] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static BoundSpec> {
    REGISTRY.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownBound(id.to_string()))
}

pub fn bounds_for(target: Target) -> impl Iterator<Item = &'static BoundSpec> {
    REGISTRY.iter().filter(move |s| s.target == target)
}

/// Reference value of a target quantity at a point.
pub fn exact(target: Target, p: &Point) -> Result<f64> {
    match target {
        SuccRatioL => ratio_succ_exact(Kind::L, p.nu, p.x),
        SuccRatioI => ratio_succ_exact(Kind::I, p.nu, p.x),
        CondL => cond_exact(Kind::L, p.nu, p.x).map(|c| c.value),
        ArgRatioL => arg_ratio::arg_ratio_exact(p.nu, p.pair()?),
        PointwiseL => l_nu(p.nu, p.x),
        BKernel => b(p.nu, p.x),
        ProductDifference => succ_ratio::product_difference(p.nu, p.x).map(|v| v.value),
    }
}
