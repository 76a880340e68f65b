//! Bracketed scalar root finding: secant steps safeguarded by bisection.

use alloc::string::String;

use crate::error::{Error, Result};
use crate::math;

/// Finds a root of `f` in `[lo, hi]` to absolute width `tol`.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them be zero).
/// A secant step is taken when it lands inside the bracket; a bisection step is
/// forced whenever the bracket failed to halve over the previous two steps.
pub fn find_root(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let fail = |reason: &str| Error::SolverFailure { lo, hi, reason: String::from(reason) };
    if !(lo < hi) || !(tol > 0.0) {
        return Err(fail("bracket must satisfy lo < hi with a positive tolerance"));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if !fa.is_finite() || !fb.is_finite() {
        return Err(fail("function is not finite at the bracket ends"));
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if (fa < 0.0) == (fb < 0.0) {
        return Err(fail("function has the same sign at both ends"));
    }

    // bracket widths one and two steps back
    let mut history = [f64::INFINITY; 2];
    for _ in 0..500 {
        let width = b - a;
        if width <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        let secant = b - fb * (b - a) / (fb - fa);
        let force_bisect = width > 0.5 * history[0];
        let x = if !force_bisect && secant > a && secant < b { secant } else { mid };
        let fx = f(x);
        if !fx.is_finite() {
            return Err(fail("function is not finite inside the bracket"));
        }
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        history = [history[1], width];
    }
    if b - a > tol {
        return Err(fail("no convergence within the step budget"));
    }
    Ok(if math::abs(fa) < math::abs(fb) { a } else { b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cube_root_of_two() {
        let r = find_root(|x| x * x * x - 2.0, 0.0, 2.0, 1e-13).unwrap();
        assert!((r - 2f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn handles_flat_functions() {
        let r = find_root(|x| (x - 0.3f64).powi(9), 0.0, 1.0, 1e-10).unwrap();
        assert!((r - 0.3).abs() < 1e-1);
        let r = find_root(|x| libm::tanh(50.0 * (x - 0.7)), 0.0, 1.0, 1e-12).unwrap();
        assert!((r - 0.7).abs() < 1e-11);
    }

    #[test]
    fn rejects_bad_brackets() {
        assert!(matches!(find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-9), Err(Error::SolverFailure { .. })));
        assert!(find_root(|x| x, 1.0, 0.0, 1e-9).is_err());
        assert_eq!(find_root(|x| x, 0.0, 1.0, 1e-9).unwrap(), 0.0);
    }
}
