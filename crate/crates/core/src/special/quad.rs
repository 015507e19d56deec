//! Independent quadrature route to I_ν and L_ν through
//!
//! 2(x/2)^ν/(√π Γ(ν+1/2)) ∫₀¹ (1−t²)^{ν−1/2} {cosh, sinh}(xt) dt,   ν > −1/2.
//!
//! With t = sin θ the weight becomes cos^{2ν} θ on [0, π/2]. For ν < 1/2 the
//! half next to π/2 is further mapped through π/2 − θ = v^{1/(2ν+1)}, which
//! turns the endpoint power into a bounded factor.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::gamma::{gamma_pos, rgamma};
use super::Kind;
use crate::error::{Error, Result};

pub const QUAD_TOL: f64 = 1e-12;
const MAX_INTERVALS: usize = 4000;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// 15-point Kronrod estimate and |Kronrod − Gauss| on [a, b].
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Globally adaptive Gauss–Kronrod integration: the segment with the largest
/// error estimate is bisected until the total estimate meets
/// max(abs_tol, rel_tol·|I|).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<(f64, f64)> {
    let (value, err) = gk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, err });
    let mut total = value;
    let mut total_err = err;
    loop {
        if total_err <= abs_tol.max(rel_tol * total.abs()) {
            return Ok((total, total_err));
        }
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature { estimate: total_err, intervals: heap.len() });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(Error::Quadrature { estimate: total_err, intervals: heap.len() + 1 });
        }
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Segment { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, err: e2 });
        // Re-sum periodically so the running totals do not drift.
        if heap.len() % 64 == 0 {
            total = heap.iter().map(|s| s.value).sum();
            total_err = heap.iter().map(|s| s.err).sum();
        }
    }
}

/// ∫₀¹ (1−t²)^{ν−1/2} g(t) dt for ν > −1/2, through t = sin θ.
fn weighted_integral<G: Fn(f64) -> f64>(nu: f64, g: G) -> Result<f64> {
    let two_nu = 2.0 * nu;
    if nu >= 0.5 {
        let f = |th: f64| th.cos().powf(two_nu) * g(th.sin());
        return Ok(integrate(f, 0.0, FRAC_PI_2, 0.0, QUAD_TOL)?.0);
    }
    let left = |th: f64| th.cos().powf(two_nu) * g(th.sin());
    let (a, _) = integrate(left, 0.0, FRAC_PI_4, 0.0, QUAD_TOL)?;
    // u = π/2 − θ = v^m, m = 1/(2ν+1): sin^{2ν}(u) du = m (sin u / u)^{2ν} dv.
    let m = 1.0 / (two_nu + 1.0);
    let v_end = FRAC_PI_4.powf(two_nu + 1.0);
    let right = |v: f64| {
        let u = v.powf(m);
        let sinc = if u == 0.0 { 1.0 } else { u.sin() / u };
        m * sinc.powf(two_nu) * g(u.cos())
    };
    let (b, _) = integrate(right, 0.0, v_end, 0.0, QUAD_TOL)?;
    Ok(a + b)
}

fn prefactor(nu: f64, x: f64) -> Result<f64> {
    Ok(2.0 * (0.5 * x).powf(nu) / (PI.sqrt() * gamma_pos(nu + 0.5)?))
}

fn oracle(kind: Kind, nu: f64, x: f64) -> Result<f64> {
    if !(nu > -0.5) || !nu.is_finite() {
        return Err(Error::domain(format!("quadrature oracle needs nu > -1/2, got {nu}")));
    }
    if !(x > 0.0 && x <= 600.0) {
        return Err(Error::domain(format!("quadrature oracle needs 0 < x <= 600, got {x}")));
    }
    let g: fn(f64) -> f64 = match kind {
        Kind::I => f64::cosh,
        Kind::L => f64::sinh,
        Kind::M => return Err(Error::domain("quadrature oracle covers I and L only")),
    };
    Ok(prefactor(nu, x)? * weighted_integral(nu, |t| g(x * t))?)
}

/// Continuation of ∫₀¹ (1−t²)^α e^{−xt} dt to −2 < α < −1 by subtracting
/// the endpoint behaviour: with g(t) = (1+t)^α e^{−xt}, s = 1 − t and
/// ψ(s) = (g(1−s) − g(1))/s,
///
/// ∫₀^{1/2} (1−t²)^α e^{−xt} dt + ∫₀^{1/2} s^{α+1} (ψ(s) − ψ(0)) ds
///   + ψ(0)(1/2)^{α+2}/(α+2) + g(1)(1/2)^{α+1}/(α+1).
///
/// The remaining integrand is bounded, and both poles at α = −1 and α = −2
/// sit in closed-form terms.
fn finite_part_exp_integral(alpha: f64, x: f64) -> Result<f64> {
    let (a, _) = integrate(|t: f64| (1.0 - t * t).powf(alpha) * (-x * t).exp(), 0.0, 0.5, 0.0, QUAD_TOL)?;
    let g1 = 2f64.powf(alpha) * (-x).exp();
    let c: f64 = 0.5;
    let psi0 = g1 * (x - 0.5 * alpha);
    let psi = |s: f64| g1 * (alpha * (-0.5 * s).ln_1p() + x * s).exp_m1() / s;
    let body = |s: f64| {
        if s == 0.0 {
            return 0.0;
        }
        s.powf(alpha + 1.0) * (psi(s) - psi0)
    };
    let (b, _) = integrate(body, 0.0, c, 0.0, QUAD_TOL)?;
    let beta = alpha + 2.0;
    let poles = psi0 * c.powf(beta) / beta + g1 * c.powf(alpha + 1.0) / (alpha + 1.0);
    Ok(a + b + poles)
}

/// M_ν(x) = −2(x/2)^ν/(√π Γ(ν+1/2)) ∫₀¹ (1−t²)^{ν−1/2} e^{−xt} dt.
///
/// The integral is used as written for ν > −1/2 and through its finite-part
/// continuation for −3/2 < ν < −1/2; the endpoints −1/2 and −3/2 use
/// closed forms. Free of the cancellation that L_ν − I_ν suffers
/// once x is more than a few units.
pub fn struve_m_integral(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("x must be positive and finite, got {x}")));
    }
    if nu == -0.5 {
        return Ok(-(2.0 / (PI * x)).sqrt() * (-x).exp());
    }
    if nu == -1.5 {
        return Ok((2.0 / (PI * x)).sqrt() * (-x).exp() * (1.0 + 1.0 / x));
    }
    if !(nu > -1.5) || !nu.is_finite() {
        return Err(Error::domain(format!("integral form of M needs nu >= -3/2, got {nu}")));
    }
    if nu > -0.5 {
        return Ok(-prefactor(nu, x)? * weighted_integral(nu, |t| (-x * t).exp())?);
    }
    let pre = 2.0 * (0.5 * x).powf(nu) * rgamma(nu + 0.5) / PI.sqrt();
    Ok(-pre * finite_part_exp_integral(nu - 0.5, x)?)
}

/// I_ν(x) from its integral representation; ν > −1/2, 0 < x ≤ 600.
pub fn quad_oracle_i(nu: f64, x: f64) -> Result<f64> {
    oracle(Kind::I, nu, x)
}

/// L_ν(x) from its integral representation; ν > −1/2, 0 < x ≤ 600.
pub fn quad_oracle_l(nu: f64, x: f64) -> Result<f64> {
    oracle(Kind::L, nu, x)
}
