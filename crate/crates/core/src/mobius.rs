//! The iteration `x -> 1 - alpha / x` and the hyperbolic functions built on it.
//!
//! With `alpha = 1 / (4 cosh^2 theta)` the fixed points are
//! `r1 = (1 + tanh theta) / 2` and `r2 = (1 - tanh theta) / 2`, and every orbit has a
//! closed form in `sinh(n theta)`. The functions `F0` and `F0*` describe the
//! symmetric orbits used to weight loose paths.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::math;

/// `alpha` with its derived angle and fixed points.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MobiusParams {
    /// Parameter in `(0, 1/4]`.
    pub alpha: f64,
    /// `arcosh(alpha^(-1/2) / 2)`.
    pub theta: f64,
    /// Larger root of `x^2 - x + alpha`.
    pub r1: f64,
    /// Smaller root of `x^2 - x + alpha`.
    pub r2: f64,
}

impl MobiusParams {
    /// Validates `alpha` in `(0, 1/4]` and derives `theta`, `r1`, `r2`.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 0.25) {
            return Err(invalid(format!("alpha = {alpha} is outside (0, 1/4]")));
        }
        let u = 0.5 / math::sqrt(alpha);
        let theta = math::ln(u + math::sqrt((u * u - 1.0).max(0.0)));
        Ok(Self::with(alpha, theta))
    }

    /// Parameters for a given angle `theta >= 0`, i.e. `alpha = sech^2(theta) / 4`.
    pub fn from_theta(theta: f64) -> Result<Self> {
        if !(theta >= 0.0) || !theta.is_finite() {
            return Err(invalid(format!("theta = {theta} must be finite and non-negative")));
        }
        Ok(Self::with(0.25 * math::sech2(theta), theta))
    }

    fn with(alpha: f64, theta: f64) -> Self {
        let t = math::tanh(theta);
        MobiusParams { alpha, theta, r1: 0.5 * (1.0 + t), r2: 0.5 * (1.0 - t) }
    }

    /// `x^2 - x + alpha`.
    pub fn phi(&self, x: f64) -> f64 {
        x * x - x + self.alpha
    }

    /// `F0(x) = (1 - tanh(theta) tanh(x theta / 2)) / 2`.
    pub fn f0(&self, x: f64) -> f64 {
        0.5 * (1.0 - math::tanh(self.theta) * math::tanh(0.5 * x * self.theta))
    }

    /// `F0*(x) = 1 - F0(x) = F0(-x)`.
    pub fn f0_star(&self, x: f64) -> f64 {
        self.f0(-x)
    }
}

/// A point of an orbit: a real value or the pole reached right after zero.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum OrbitPoint {
    /// Ordinary value.
    Finite(f64),
    /// The image of zero; its own image is one.
    Pole,
}

impl OrbitPoint {
    /// The value, if finite.
    pub fn value(&self) -> Option<f64> {
        match *self {
            OrbitPoint::Finite(x) => Some(x),
            OrbitPoint::Pole => None,
        }
    }
}

fn forward(alpha: f64, p: OrbitPoint) -> OrbitPoint {
    match p {
        OrbitPoint::Finite(0.0) => OrbitPoint::Pole,
        OrbitPoint::Finite(x) => OrbitPoint::Finite(1.0 - alpha / x),
        OrbitPoint::Pole => OrbitPoint::Finite(1.0),
    }
}

fn backward(alpha: f64, p: OrbitPoint) -> OrbitPoint {
    match p {
        OrbitPoint::Finite(1.0) => OrbitPoint::Pole,
        OrbitPoint::Finite(x) => OrbitPoint::Finite(alpha / (1.0 - x)),
        OrbitPoint::Pole => OrbitPoint::Finite(0.0),
    }
}

/// The orbit `x_0, x_1, ..., x_n` of `f(x) = 1 - alpha / x`.
///
/// For negative `n` the orbit runs backwards with `f^-1(x) = alpha / (1 - x)`
/// and the returned vector is `x_0, x_-1, ..., x_n`. Zero maps to the pole and the
/// pole maps to one (backwards: one maps to the pole and the pole to zero).
pub fn iterate_direct(alpha: f64, x0: f64, n: i64) -> Result<Vec<OrbitPoint>> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(invalid(format!("alpha = {alpha} must be positive")));
    }
    if !x0.is_finite() {
        return Err(invalid("starting point must be finite"));
    }
    if n >= 0 && x0 == 0.0 {
        return Err(invalid("forward orbit cannot start at 0"));
    }
    if n < 0 && x0 == 1.0 {
        return Err(invalid("backward orbit cannot start at 1"));
    }
    let step = if n >= 0 { forward } else { backward };
    let mut orbit = Vec::with_capacity(n.unsigned_abs() as usize + 1);
    let mut p = OrbitPoint::Finite(x0);
    orbit.push(p);
    for _ in 0..n.unsigned_abs() {
        p = step(alpha, p);
        orbit.push(p);
    }
    Ok(orbit)
}

/// `x_n` from the hyperbolic closed form, for any integer `n`.
///
/// The sinh ratios are rewritten through `coth(n theta)` so that large `|n|` does
/// not overflow; at `alpha = 1/4` the linear limit form is used. A denominator
/// within `1e-14` of zero yields the pole.
pub fn closed_form(alpha: f64, x0: f64, n: i64) -> Result<OrbitPoint> {
    let params = MobiusParams::new(alpha)?;
    if !(x0 > 0.0 && x0 <= 1.0) {
        return Err(invalid(format!("x0 = {x0} is outside (0, 1]")));
    }
    if n == 0 {
        return Ok(OrbitPoint::Finite(x0));
    }
    let (num, den) = if params.theta == 0.0 {
        let nf = n as f64;
        (2.0 * (nf + 1.0) * x0 - nf, 2.0 * (2.0 * nf * x0 - (nf - 1.0)))
    } else {
        let c = math::cosh(params.theta);
        let s = math::sinh(params.theta);
        let coth = 1.0 / math::tanh(n as f64 * params.theta);
        (2.0 * c * (c + coth * s) * x0 - 1.0, 2.0 * c * (2.0 * c * x0 - (c - coth * s)))
    };
    if math::abs(den) < 1e-14 {
        return Ok(OrbitPoint::Pole);
    }
    Ok(OrbitPoint::Finite(num / den))
}

/// `F0(x)` for `alpha` in `(0, 1/4]`.
pub fn f0(alpha: f64, x: f64) -> Result<f64> {
    Ok(MobiusParams::new(alpha)?.f0(x))
}

/// `F0*(x) = 1 - F0(x)` for `alpha` in `(0, 1/4]`.
pub fn f0_star(alpha: f64, x: f64) -> Result<f64> {
    Ok(MobiusParams::new(alpha)?.f0_star(x))
}

/// The start `y_0` of the symmetric orbit of length `l`: the largest root of
/// `x + x_l(x) = 1`, equal to `F0(l)`.
pub fn symmetric_y0(alpha: f64, l: usize) -> Result<f64> {
    Ok(MobiusParams::new(alpha)?.f0(l as f64))
}

/// Term `n` of the orbit symmetric about `(p + q) / 2`: `F0*(2n - p - q)`.
pub fn symmetric_term(alpha: f64, p: i64, q: i64, n: i64) -> Result<f64> {
    Ok(MobiusParams::new(alpha)?.f0_star((2 * n - p - q) as f64))
}

/// Long-run behaviour of an orbit started at a positive point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum OrbitKind {
    /// Start strictly between the fixed points.
    IncreasingToR1,
    /// Start above `r1`.
    DecreasingToR1,
    /// Start below `r2`; some iterate becomes non-positive.
    ExitsPositive,
    /// Start at a fixed point.
    Constant,
}

impl OrbitKind {
    /// Snake-case name used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            OrbitKind::IncreasingToR1 => "increasing_to_r1",
            OrbitKind::DecreasingToR1 => "decreasing_to_r1",
            OrbitKind::ExitsPositive => "exits_positive",
            OrbitKind::Constant => "constant",
        }
    }
}

/// Classifies the orbit of `x0 > 0` by its position relative to `r2 <= r1`.
pub fn classify_orbit(alpha: f64, x0: f64) -> Result<OrbitKind> {
    let p = MobiusParams::new(alpha)?;
    if !(x0 > 0.0) || !x0.is_finite() {
        return Err(invalid(format!("x0 = {x0} must be positive")));
    }
    let eps = 1e-14;
    Ok(if math::abs(x0 - p.r1) <= eps || math::abs(x0 - p.r2) <= eps {
        OrbitKind::Constant
    } else if x0 > p.r1 {
        OrbitKind::DecreasingToR1
    } else if x0 > p.r2 {
        OrbitKind::IncreasingToR1
    } else {
        OrbitKind::ExitsPositive
    })
}

/// `(4 - c^(1/3) - c^(-1/3)) / 3` with `c = (3 sqrt(69) + 25) / 2`; about `0.24512233`.
pub fn alpha_star() -> f64 {
    let c = 0.5 * (3.0 * math::sqrt(69.0) + 25.0);
    let t = math::cbrt(c);
    (4.0 - t - 1.0 / t) / 3.0
}

/// Whether `alpha / (1 - alpha)^2 > r2`, which holds exactly when `alpha < alpha*`.
pub fn pendant_bound_exceeds_r2(alpha: f64) -> Result<bool> {
    let p = MobiusParams::new(alpha)?;
    Ok(alpha / ((1.0 - alpha) * (1.0 - alpha)) > p.r2)
}
