//! Classical turning points of `E - V` and `E' - W²`.
//!
//! Both wells admit closed-form turning points after a change of variable:
//! `z = A cot(αx)` for the cot family and `t = sin²(αx)` for the cot–tan
//! family, where the condition becomes a quadratic in `t`. A bisection on
//! the original variable backs up the analytic roots.

use serde::Serialize;

use super::roots::bisect;
use crate::error::{Error, Result};
use crate::potentials::{PotentialSpec, SuperpotentialSpec, Well};

/// Substitutions used to reduce the quantization integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum ChangeOfVariable {
    /// `z = sin(αx)`, maps `(0, π/2α)` onto `(0, 1)`.
    Z { alpha: f64 },
    /// `t = z² = sin²(αx)`.
    T { alpha: f64 },
    /// `z = A cot(αx)`, decreasing from `+∞` to `-∞` across `(0, π/α)`.
    CotZ { a: f64, alpha: f64 },
    /// `ρ = z / √(E' - z²)` with `z = A cot(αx)`; sends the allowed
    /// interval onto the whole line, its left half onto `(0, ∞)`.
    Rho { a: f64, alpha: f64, energy: f64 },
}

impl ChangeOfVariable {
    pub fn forward(&self, x: f64) -> f64 {
        match *self {
            Self::Z { alpha } => (alpha * x).sin(),
            Self::T { alpha } => (alpha * x).sin().powi(2),
            Self::CotZ { a, alpha } => a / (alpha * x).tan(),
            Self::Rho { a, alpha, energy } => {
                let z = a / (alpha * x).tan();
                z / (energy - z * z).sqrt()
            }
        }
    }

    pub fn inverse(&self, y: f64) -> f64 {
        match *self {
            Self::Z { alpha } => y.asin() / alpha,
            Self::T { alpha } => y.sqrt().asin() / alpha,
            Self::CotZ { a, alpha } => a.atan2(y) / alpha,
            Self::Rho { a, alpha, energy } => {
                let z = y * (energy / (1.0 + y * y)).sqrt();
                a.atan2(z) / alpha
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Z { .. } => "z",
            Self::T { .. } => "t",
            Self::CotZ { .. } => "z",
            Self::Rho { .. } => "rho",
        }
    }
}

/// Ends of the classically allowed interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TurningPoints {
    pub lower: f64,
    pub upper: f64,
    /// Set when a hard wall, not the potential, bounds the motion.
    pub at_walls: bool,
    /// Substitution that produced the analytic roots.
    pub substitution: Option<ChangeOfVariable>,
}

impl TurningPoints {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Roots of `e t² - b t + c = 0` (with `e, b > 0`, `c >= 0`) in ascending
/// order, given the discriminant `b² - 4ec`, computed without cancellation.
fn quadratic_in_t(e: f64, b: f64, c: f64, disc: f64) -> (f64, f64) {
    let q = 0.5 * (b + disc.max(0.0).sqrt());
    (c / q, q / e)
}

/// Where `V` attains its minimum.
fn potential_minimum_at(spec: &PotentialSpec) -> f64 {
    match spec.well() {
        Well::CotSquared { .. } => 0.5 * spec.length(),
        Well::PoschlTeller { v01, v02 } => {
            let (r1, r2) = (v01.sqrt(), v02.sqrt());
            let t = if r1 + r2 > 0.0 { r1 / (r1 + r2) } else { 0.5 };
            t.sqrt().asin() / spec.alpha()
        }
    }
}

/// Bisection on `g` either side of `split`, where `g > 0` inside the
/// allowed region and `g < 0` at the walls.
pub fn bisect_turning_points<G>(g: G, split: f64, length: f64) -> Option<(f64, f64)>
where
    G: Fn(f64) -> f64,
{
    let tol = 1e-15 * length;
    let lower = bisect(&g, 0.0, split, tol)?;
    let upper = bisect(&g, split, length, tol)?;
    Some((lower, upper))
}

fn residual_ok(g: impl Fn(f64) -> f64, tp: (f64, f64), scale: f64) -> bool {
    let ok = |x: f64| x.is_finite() && g(x).abs() <= 1e-9 * scale.max(f64::MIN_POSITIVE);
    ok(tp.0) && ok(tp.1) && tp.0 <= tp.1
}

/// Turning points `a < b` of `E - V(x)`.
///
/// When a depth vanishes the motion is bounded by a wall rather than by the
/// potential; the wall is returned and `at_walls` is set.
pub fn turning_points_wkb(spec: &PotentialSpec, energy: f64) -> Result<TurningPoints> {
    let minimum = spec.minimum();
    if !(energy > minimum) {
        return Err(Error::NoClassicalRegion { energy, minimum });
    }
    let length = spec.length();
    let alpha = spec.alpha();

    let (analytic, substitution, at_walls) = match spec.well() {
        Well::CotSquared { v0 } => {
            if v0 == 0.0 {
                return Ok(TurningPoints {
                    lower: 0.0,
                    upper: length,
                    at_walls: true,
                    substitution: None,
                });
            }
            // V0 cot²(αx) = E  ⇔  z = A cot(αx) = ±√E with A = √V0
            let sub = ChangeOfVariable::CotZ {
                a: v0.sqrt(),
                alpha,
            };
            let lower = sub.inverse(energy.sqrt());
            ((lower, length - lower), sub, false)
        }
        Well::PoschlTeller { v01, v02 } => {
            // E - V01/t - V02/(1-t) = 0  ⇔  E t² - (E + V01 - V02) t + V01 = 0
            let sub = ChangeOfVariable::T { alpha };
            // b² - 4E·V01 = (E - (r1 + r2)²)(E - (r1 - r2)²)
            let (r1, r2) = (v01.sqrt(), v02.sqrt());
            let disc = (energy - (r1 + r2).powi(2)) * (energy - (r1 - r2).powi(2));
            let (t1, t2) = quadratic_in_t(energy, energy + v01 - v02, v01, disc);
            (
                (sub.inverse(t1), sub.inverse(t2.min(1.0))),
                sub,
                v01 == 0.0 || v02 == 0.0,
            )
        }
    };

    let mut tp = TurningPoints {
        lower: analytic.0,
        upper: analytic.1,
        at_walls,
        substitution: Some(substitution),
    };
    if !at_walls {
        let g = |x: f64| energy - spec.value_unchecked(x);
        if !residual_ok(g, analytic, energy) {
            let (lower, upper) = bisect_turning_points(g, potential_minimum_at(spec), length)
                .ok_or(Error::NoClassicalRegion { energy, minimum })?;
            tp.lower = lower;
            tp.upper = upper;
        }
    }
    Ok(tp)
}

/// Turning points `c <= d` of `E' - W²(x)`. At `E' = 0` both collapse onto
/// the zero of `W`.
pub fn turning_points_swkb(sp: &SuperpotentialSpec, e_prime: f64) -> Result<TurningPoints> {
    if !(e_prime >= 0.0) || !e_prime.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "shifted energy E' must be non-negative, got {e_prime}"
        )));
    }
    if e_prime == 0.0 {
        let x = sp.zero_crossing();
        return Ok(TurningPoints {
            lower: x,
            upper: x,
            at_walls: false,
            substitution: None,
        });
    }
    let length = sp.length();
    let (analytic, substitution) = match *sp {
        SuperpotentialSpec::Cot { a, alpha } => {
            let sub = ChangeOfVariable::CotZ { a, alpha };
            let root = e_prime.sqrt();
            ((sub.inverse(root), sub.inverse(-root)), sub)
        }
        SuperpotentialSpec::CotTan { a1, a2, alpha } => {
            // E' - W² = E - A1² cosec² - A2² sec²  with  E = E' + (A1 - A2)²
            let energy = e_prime + (a1 - a2).powi(2);
            let sub = ChangeOfVariable::T { alpha };
            // the discriminant reduces to E'(E' - 4A1A2), exact near the
            // double root at small E'
            let disc = e_prime * (e_prime - 4.0 * a1 * a2);
            let (t1, t2) = quadratic_in_t(energy, energy + a1 * a1 - a2 * a2, a1 * a1, disc);
            ((sub.inverse(t1), sub.inverse(t2.min(1.0))), sub)
        }
    };
    let mut tp = TurningPoints {
        lower: analytic.0,
        upper: analytic.1,
        at_walls: false,
        substitution: Some(substitution),
    };
    let g = |x: f64| {
        let w = sp.value_unchecked(x);
        e_prime - w * w
    };
    if !residual_ok(g, analytic, e_prime) {
        let (lower, upper) = bisect_turning_points(g, sp.zero_crossing(), length).ok_or(
            Error::Convergence {
                operation: "turning_points_swkb",
                estimate: analytic.0,
                gap: f64::NAN,
            },
        )?;
        tp.lower = lower;
        tp.upper = upper;
    }
    Ok(tp)
}
