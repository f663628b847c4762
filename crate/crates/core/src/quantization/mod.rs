//! WKB and SWKB quantization by direct quadrature.
//!
//! * WKB: `∫ₐᵇ √(E - V) dx = (n + ½)π` between the roots of `E = V`.
//! * SWKB: `∫꜀ᵈ √(E' - W²) dx = nπ` between the roots of `E' = W²`, with
//!   `E = E' + E₀`. The `½` of the WKB rule is replaced by the correction
//!   integral `½∫ W'/√(E' - W²) dx`, whose magnitude is always `π/2`.
//!
//! Levels are indexed from `n = 0` for both rules; the SWKB ground state is
//! `E' = 0` exactly.

mod quadrature;
mod roots;
mod turning;

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

pub use quadrature::{gauss_legendre, integrate_sqrt_endpoints, QuadratureConfig, PANEL_ORDER};
pub use roots::{bisect, solve_level, BRACKET_LIMIT};
pub use turning::{
    bisect_turning_points, turning_points_swkb, turning_points_wkb, ChangeOfVariable,
    TurningPoints,
};

use crate::error::{Error, Result};
use crate::potentials::{PotentialSpec, SuperpotentialSpec, Well};
use crate::spectra::{EnergyLevel, LevelMethod};

/// Semiclassical rule used by [`spectrum_numeric`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Wkb,
    Swkb,
}

/// `∫ₐᵇ √(E - V(x)) dx`.
///
/// Fails with [`Error::WallTurningPoints`] when a depth vanishes, since the
/// rule assumes soft turning points on both sides.
pub fn action_wkb(spec: &PotentialSpec, energy: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let tp = turning_points_wkb(spec, energy)?;
    if tp.at_walls {
        return Err(Error::WallTurningPoints);
    }
    integrate_sqrt_endpoints(
        |x| (energy - spec.value_unchecked(x)).max(0.0).sqrt(),
        tp.lower,
        tp.upper,
        cfg,
    )
}

/// `∫꜀ᵈ √(E' - W²(x)) dx`; zero at `E' = 0`.
pub fn action_swkb(sp: &SuperpotentialSpec, e_prime: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let tp = turning_points_swkb(sp, e_prime)?;
    if tp.width() == 0.0 {
        return Ok(0.0);
    }
    integrate_sqrt_endpoints(
        |x| {
            let w = sp.value_unchecked(x);
            (e_prime - w * w).max(0.0).sqrt()
        },
        tp.lower,
        tp.upper,
        cfg,
    )
}

/// `½ ∫꜀ᵈ W'(x) / √(E' - W²(x)) dx`.
///
/// The antiderivative is `½ arcsin(W/√E')`. `W` falls from `+√E'` at `c` to
/// `-√E'` at `d`, so the value is `-π/2` for every admissible `E'`.
pub fn maslov_integral(sp: &SuperpotentialSpec, e_prime: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(e_prime > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "correction integral needs E' > 0, got {e_prime}"
        )));
    }
    let tp = turning_points_swkb(sp, e_prime)?;
    let root = e_prime.sqrt();
    let half = integrate_sqrt_endpoints(
        |x| {
            let w = sp.value_unchecked(x);
            let gap = (root - w) * (root + w);
            if gap > 0.0 {
                sp.derivative_unchecked(x) / gap.sqrt()
            } else {
                0.0
            }
        },
        tp.lower,
        tp.upper,
        cfg,
    )?;
    Ok(0.5 * half)
}

/// Closed form of [`action_wkb`]: `(π/α)(√(E + V0) - √V0)` for cot²,
/// `(π/2α)(√E - √V01 - √V02)` for Pöschl–Teller.
pub fn action_wkb_closed(spec: &PotentialSpec, energy: f64) -> f64 {
    let alpha = spec.alpha();
    match spec.well() {
        Well::CotSquared { v0 } => PI / alpha * ((energy + v0).sqrt() - v0.sqrt()),
        Well::PoschlTeller { v01, v02 } => {
            PI / (2.0 * alpha) * (energy.sqrt() - v01.sqrt() - v02.sqrt())
        }
    }
}

/// Closed form of [`action_swkb`]: `(π/α)(√(E' + A²) - A)` or
/// `(π/2α)(√(E' + (A₁ - A₂)²) - (A₁ - A₂))`.
pub fn action_swkb_closed(sp: &SuperpotentialSpec, e_prime: f64) -> f64 {
    match *sp {
        SuperpotentialSpec::Cot { a, alpha } => PI / alpha * ((e_prime + a * a).sqrt() - a),
        SuperpotentialSpec::CotTan { a1, a2, alpha } => {
            let s = a1 - a2;
            PI / (2.0 * alpha) * ((e_prime + s * s).sqrt() - s)
        }
    }
}

/// WKB level `n` from inverting [`action_wkb_closed`].
pub fn wkb_energy_closed(spec: &PotentialSpec, n: usize) -> f64 {
    let alpha = spec.alpha();
    let k = n as f64 + 0.5;
    match spec.well() {
        Well::CotSquared { v0 } => (k * alpha + v0.sqrt()).powi(2) - v0,
        Well::PoschlTeller { v01, v02 } => (2.0 * alpha * k + v01.sqrt() + v02.sqrt()).powi(2),
    }
}

/// Physical energy `E` of WKB level `n`.
pub fn solve_wkb_level(spec: &PotentialSpec, n: usize, cfg: &QuadratureConfig) -> Result<f64> {
    if spec.is_free_box() || matches!(spec.well(), Well::PoschlTeller { v01, v02 } if v01 == 0.0 || v02 == 0.0) {
        return Err(Error::WallTurningPoints);
    }
    let minimum = spec.minimum();
    let alpha = spec.alpha();
    let target = (n as f64 + 0.5) * PI;
    let above = solve_level(
        |y| {
            if y <= 0.0 {
                Ok(0.0)
            } else {
                action_wkb(spec, minimum + y, cfg)
            }
        },
        target,
        alpha * alpha,
    )?;
    Ok(minimum + above)
}

/// Physical energy `E = E' + E₀` of SWKB level `n`.
pub fn solve_swkb_level(sp: &SuperpotentialSpec, n: usize, cfg: &QuadratureConfig) -> Result<f64> {
    let alpha = sp.alpha();
    let e_prime = solve_level(
        |e| action_swkb(sp, e, cfg),
        n as f64 * PI,
        alpha * alpha,
    )?;
    Ok(e_prime + sp.ground_state_energy())
}

/// Levels `0..=n_max` by quadrature and root finding.
pub fn spectrum_numeric(
    method: Method,
    spec: &PotentialSpec,
    n_max: usize,
    cfg: &QuadratureConfig,
) -> Result<Vec<EnergyLevel>> {
    cfg.validate()?;
    let sp = spec.superpotential();
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let (energy, tag) = match method {
                Method::Wkb => (solve_wkb_level(spec, n, cfg)?, LevelMethod::WkbNumeric),
                Method::Swkb => (solve_swkb_level(&sp, n, cfg)?, LevelMethod::SwkbNumeric),
            };
            Ok(EnergyLevel::new(spec, n, energy, tag))
        })
        .collect()
}
