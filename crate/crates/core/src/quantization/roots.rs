//! Bracketing root finders for monotone functions.

use crate::error::{Error, Result};

/// Largest energy the bracket expansion of [`solve_level`] may reach.
pub const BRACKET_LIMIT: f64 = 1e20;

/// Solves `action(E) = target` for a strictly increasing `action` with
/// `action(0) = 0`.
///
/// The bracket `[0, seed]` is doubled until it straddles the target, then
/// bisected down to a width of `1e-12·max(1, E)` and finished with one
/// secant step. The returned root satisfies
/// `|action(E) - target| <= 1e-9·max(1, target)`.
pub fn solve_level<F>(action: F, target: f64, bracket_seed: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(target.is_finite() && target >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "quantization target must be a non-negative number, got {target}"
        )));
    }
    if target == 0.0 {
        return Ok(0.0);
    }
    if !(bracket_seed.is_finite() && bracket_seed > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bracket seed must be positive, got {bracket_seed}"
        )));
    }

    let (mut lo, mut f_lo) = (0.0, 0.0);
    let mut hi = bracket_seed;
    let mut f_hi = action(hi)?;
    while f_hi < target {
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        if hi > BRACKET_LIMIT {
            return Err(Error::Unbounded {
                operation: "solve_level",
                limit: BRACKET_LIMIT,
            });
        }
        f_hi = action(hi)?;
    }

    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = action(mid)?;
        if f_mid < target {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    let mut best = if target - f_lo < f_hi - target {
        (lo, f_lo)
    } else {
        (hi, f_hi)
    };
    if f_hi > f_lo {
        let secant = lo + (target - f_lo) * (hi - lo) / (f_hi - f_lo);
        if secant > lo && secant < hi {
            let f_sec = action(secant)?;
            if (f_sec - target).abs() < (best.1 - target).abs() {
                best = (secant, f_sec);
            }
        }
    }

    let gap = (best.1 - target).abs();
    if gap > 1e-9 * target.max(1.0) {
        return Err(Error::Convergence {
            operation: "solve_level",
            estimate: best.0,
            gap,
        });
    }
    Ok(best.0)
}

/// Plain bisection for a sign change of `f` on `[a, b]`, down to
/// `abs_tol`. Returns `None` if `f(a)` and `f(b)` share a sign.
pub fn bisect<F>(f: F, mut a: f64, mut b: f64, abs_tol: f64) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= abs_tol || mid == a || mid == b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}
