//! The two confined wells, their superpotentials, and the algebraic maps
//! between depth parameters and superpotential amplitudes.
//!
//! Units: `ħ = 2m = 1`. With that choice the kinetic operator is `-d²/dx²`
//! and the factorization `V = W² + W' + E₀` holds with no stray constants.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// Reduced Planck constant in the unit system used throughout.
pub const HBAR: f64 = 1.0;
/// Twice the particle mass. Fixed to one, so `ħ²/2m = 1`.
pub const TWO_M: f64 = 1.0;

/// Hard-walled box `0 < x < L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoxDomain {
    length: f64,
}

impl BoxDomain {
    pub fn new(length: f64) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "box length must be positive and finite, got {length}"
            )));
        }
        Ok(Self { length })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// True for points strictly between the walls.
    pub fn contains(&self, x: f64) -> bool {
        x > 0.0 && x < self.length
    }

    fn check_interior(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutsideBox {
                x,
                length: self.length,
            })
        }
    }
}

/// Which well, with its absolute depth coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "potential", rename_all = "snake_case")]
pub enum Well {
    /// `V0 cot²(πx/L)`
    CotSquared { v0: f64 },
    /// `V01 cosec²(πx/2L) + V02 sec²(πx/2L)`
    PoschlTeller { v01: f64, v02: f64 },
}

/// A well together with the box that confines it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    well: Well,
    domain: BoxDomain,
}

fn check_depth(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be a non-negative finite depth, got {value}"
        )))
    }
}

impl PotentialSpec {
    pub fn new(well: Well, length: f64) -> Result<Self> {
        match well {
            Well::CotSquared { v0 } => check_depth("v0", v0)?,
            Well::PoschlTeller { v01, v02 } => {
                check_depth("v01", v01)?;
                check_depth("v02", v02)?;
            }
        }
        Ok(Self {
            well,
            domain: BoxDomain::new(length)?,
        })
    }

    pub fn cot_squared(v0: f64, length: f64) -> Result<Self> {
        Self::new(Well::CotSquared { v0 }, length)
    }

    pub fn poschl_teller(v01: f64, v02: f64, length: f64) -> Result<Self> {
        Self::new(Well::PoschlTeller { v01, v02 }, length)
    }

    pub fn well(&self) -> Well {
        self.well
    }

    pub fn domain(&self) -> BoxDomain {
        self.domain
    }

    pub fn length(&self) -> f64 {
        self.domain.length
    }

    /// Wavenumber of the trigonometric argument: `π/L` for cot², `π/2L` for
    /// Pöschl–Teller.
    pub fn alpha(&self) -> f64 {
        match self.well {
            Well::CotSquared { .. } => PI / self.length(),
            Well::PoschlTeller { .. } => PI / (2.0 * self.length()),
        }
    }

    /// Minimum of `V` on the open box.
    pub fn minimum(&self) -> f64 {
        match self.well {
            Well::CotSquared { .. } => 0.0,
            Well::PoschlTeller { v01, v02 } => (v01.sqrt() + v02.sqrt()).powi(2),
        }
    }

    /// True when every depth is zero, i.e. the plain infinite square well.
    pub fn is_free_box(&self) -> bool {
        match self.well {
            Well::CotSquared { v0 } => v0 == 0.0,
            Well::PoschlTeller { v01, v02 } => v01 == 0.0 && v02 == 0.0,
        }
    }

    pub fn eval_potential(&self, x: f64) -> Result<f64> {
        self.domain.check_interior(x)?;
        Ok(self.value_unchecked(x))
    }

    /// `V(x)` without the wall check. Callers guarantee `0 < x < L`.
    pub(crate) fn value_unchecked(&self, x: f64) -> f64 {
        let ax = self.alpha() * x;
        match self.well {
            Well::CotSquared { v0 } => {
                let c = ax.cos() / ax.sin();
                v0 * c * c
            }
            Well::PoschlTeller { v01, v02 } => {
                let (s, c) = ax.sin_cos();
                v01 / (s * s) + v02 / (c * c)
            }
        }
    }

    /// The normalizable superpotential whose `W² + W'` reproduces this well
    /// up to the factorization energy.
    pub fn superpotential(&self) -> SuperpotentialSpec {
        superpotential_from_potential(self)
    }
}

impl Serialize for PotentialSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PotentialSpec", 2)?;
        s.serialize_field("well", &self.well())?;
        s.serialize_field("length", &self.length())?;
        s.end()
    }
}

/// Superpotential `W(x)`, always strictly decreasing on the box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum SuperpotentialSpec {
    /// `A cot(αx)` with `α = π/L`.
    Cot { a: f64, alpha: f64 },
    /// `A₁ cot(αx) + A₂ tan(αx)` with `α = π/2L`.
    CotTan { a1: f64, a2: f64, alpha: f64 },
}

impl SuperpotentialSpec {
    pub fn cot(a: f64, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "cot amplitude A must be positive for a normalizable ground state, got {a}"
            )));
        }
        Ok(Self::Cot { a, alpha })
    }

    pub fn cot_tan(a1: f64, a2: f64, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(a1.is_finite() && a1 > 0.0 && a2.is_finite() && a2 < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "need A1 > 0 and A2 < 0 for a normalizable ground state, got A1 = {a1}, A2 = {a2}"
            )));
        }
        Ok(Self::CotTan { a1, a2, alpha })
    }

    pub fn alpha(&self) -> f64 {
        match *self {
            Self::Cot { alpha, .. } | Self::CotTan { alpha, .. } => alpha,
        }
    }

    /// Box length implied by `α`.
    pub fn length(&self) -> f64 {
        match *self {
            Self::Cot { alpha, .. } => PI / alpha,
            Self::CotTan { alpha, .. } => PI / (2.0 * alpha),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.check_interior(x)?;
        Ok(self.value_unchecked(x))
    }

    /// `W'(x)`.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        self.check_interior(x)?;
        Ok(self.derivative_unchecked(x))
    }

    fn check_interior(&self, x: f64) -> Result<()> {
        let length = self.length();
        if x > 0.0 && x < length {
            Ok(())
        } else {
            Err(Error::OutsideBox { x, length })
        }
    }

    pub(crate) fn value_unchecked(&self, x: f64) -> f64 {
        match *self {
            Self::Cot { a, alpha } => {
                let ax = alpha * x;
                a * ax.cos() / ax.sin()
            }
            Self::CotTan { a1, a2, alpha } => {
                let (s, c) = (alpha * x).sin_cos();
                a1 * c / s + a2 * s / c
            }
        }
    }

    pub(crate) fn derivative_unchecked(&self, x: f64) -> f64 {
        match *self {
            Self::Cot { a, alpha } => {
                let s = (alpha * x).sin();
                -a * alpha / (s * s)
            }
            Self::CotTan { a1, a2, alpha } => {
                let (s, c) = (alpha * x).sin_cos();
                alpha * (a2 / (c * c) - a1 / (s * s))
            }
        }
    }

    /// The unique point where `W` changes sign.
    pub fn zero_crossing(&self) -> f64 {
        match *self {
            Self::Cot { alpha, .. } => 0.5 * PI / alpha,
            // A₁ cot + A₂ tan = 0  ⇔  tan² = A₁/|A₂|
            Self::CotTan { a1, a2, alpha } => (a1 / -a2).sqrt().atan() / alpha,
        }
    }

    /// Factorization energy `E₀`: `Aα` or `(A₁ - A₂)²`.
    pub fn ground_state_energy(&self) -> f64 {
        ground_state_energy(self)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "wavenumber alpha must be positive, got {alpha}"
        )))
    }
}

pub fn eval_potential(spec: &PotentialSpec, x: f64) -> Result<f64> {
    spec.eval_potential(x)
}

pub fn eval_superpotential(sp: &SuperpotentialSpec, x: f64) -> Result<f64> {
    sp.eval(x)
}

/// Inverts `V0 = A² - Aα`, `V01 = A₁² - A₁α`, `V02 = A₂² + A₂α`, taking the
/// roots with `A, A₁ > 0` and `A₂ < 0`, the only ones whose ground state
/// vanishes at both walls.
pub fn superpotential_from_potential(spec: &PotentialSpec) -> SuperpotentialSpec {
    let alpha = spec.alpha();
    let disc = |v: f64| (alpha * alpha + 4.0 * v).sqrt();
    match spec.well() {
        Well::CotSquared { v0 } => SuperpotentialSpec::Cot {
            a: 0.5 * (alpha + disc(v0)),
            alpha,
        },
        Well::PoschlTeller { v01, v02 } => SuperpotentialSpec::CotTan {
            a1: 0.5 * (alpha + disc(v01)),
            a2: -0.5 * (alpha + disc(v02)),
            alpha,
        },
    }
}

pub fn ground_state_energy(sp: &SuperpotentialSpec) -> f64 {
    match *sp {
        SuperpotentialSpec::Cot { a, alpha } => a * alpha,
        SuperpotentialSpec::CotTan { a1, a2, .. } => (a1 - a2).powi(2),
    }
}

/// `V(x) - [W²(x) + W'(x) + E₀]`, identically zero for a matched pair.
pub fn susy_residual(spec: &PotentialSpec, sp: &SuperpotentialSpec, x: f64) -> Result<f64> {
    let v = spec.eval_potential(x)?;
    let w = sp.eval(x)?;
    let dw = sp.derivative(x)?;
    Ok(v - (w * w + dw + sp.ground_state_energy()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const PI2: f64 = PI * PI;

    fn cot2() -> PotentialSpec {
        PotentialSpec::cot_squared(2.0 * PI2, 1.0).unwrap()
    }

    fn pt() -> PotentialSpec {
        PotentialSpec::poschl_teller(0.5 * PI2, 1.5 * PI2, 1.0).unwrap()
    }

    #[test]
    fn potential_values() {
        assert!(cot2().eval_potential(0.5).unwrap().abs() < 1e-12);
        assert_relative_eq!(cot2().eval_potential(0.25).unwrap(), 2.0 * PI2, max_relative = 1e-14);
        assert_relative_eq!(pt().eval_potential(0.5).unwrap(), 4.0 * PI2, max_relative = 1e-14);
    }

    #[test]
    fn walls_are_rejected() {
        for x in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(matches!(cot2().eval_potential(x), Err(Error::OutsideBox { .. })));
            assert!(cot2().superpotential().eval(x).is_err());
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(PotentialSpec::cot_squared(-1.0, 1.0).is_err());
        assert!(PotentialSpec::cot_squared(1.0, 0.0).is_err());
        assert!(PotentialSpec::poschl_teller(1.0, f64::INFINITY, 1.0).is_err());
        assert!(SuperpotentialSpec::cot(-1.0, PI).is_err());
        assert!(SuperpotentialSpec::cot_tan(1.0, 1.0, PI).is_err());
    }

    #[test]
    fn superpotential_roots() {
        let free = PotentialSpec::cot_squared(0.0, 1.0).unwrap().superpotential();
        assert_eq!(free, SuperpotentialSpec::Cot { a: PI, alpha: PI });

        match cot2().superpotential() {
            SuperpotentialSpec::Cot { a, .. } => assert_relative_eq!(a, 2.0 * PI, max_relative = 1e-14),
            other => panic!("unexpected {other:?}"),
        }
        match pt().superpotential() {
            SuperpotentialSpec::CotTan { a1, a2, alpha } => {
                assert_relative_eq!(a1, PI, max_relative = 1e-14);
                assert_relative_eq!(a2, -1.5 * PI, max_relative = 1e-14);
                assert_relative_eq!(alpha, 0.5 * PI, max_relative = 1e-15);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn superpotential_values() {
        let w = SuperpotentialSpec::cot(2.0 * PI, PI).unwrap();
        assert!(w.eval(0.5).unwrap().abs() < 1e-14);
        assert_relative_eq!(w.eval(0.25).unwrap(), 2.0 * PI, max_relative = 1e-14);
        let w = SuperpotentialSpec::cot_tan(PI, -1.5 * PI, 0.5 * PI).unwrap();
        assert_relative_eq!(w.eval(0.5).unwrap(), -0.5 * PI, max_relative = 1e-14);
    }

    #[test]
    fn factorization_energies() {
        assert_relative_eq!(SuperpotentialSpec::cot(PI, PI).unwrap().ground_state_energy(), PI2);
        assert_relative_eq!(
            SuperpotentialSpec::cot(2.0 * PI, PI).unwrap().ground_state_energy(),
            2.0 * PI2
        );
        assert_relative_eq!(
            SuperpotentialSpec::cot_tan(PI, -1.5 * PI, 0.5 * PI)
                .unwrap()
                .ground_state_energy(),
            6.25 * PI2,
            max_relative = 1e-14
        );
    }

    #[test]
    fn susy_residual_spot_checks() {
        let spec = cot2();
        let r = susy_residual(&spec, &spec.superpotential(), 0.3).unwrap();
        assert!(r.abs() < 1e-10 * spec.eval_potential(0.3).unwrap());
        let spec = pt();
        let r = susy_residual(&spec, &spec.superpotential(), 0.7).unwrap();
        assert!(r.abs() < 1e-10 * spec.eval_potential(0.7).unwrap());
        let spec = PotentialSpec::cot_squared(0.0, 1.0).unwrap();
        assert!(susy_residual(&spec, &spec.superpotential(), 0.5).unwrap().abs() < 1e-12);
    }

    #[test]
    fn zero_crossing_is_a_root() {
        let sp = pt().superpotential();
        let x = sp.zero_crossing();
        assert!(sp.eval(x).unwrap().abs() < 1e-12);
        assert_relative_eq!(cot2().superpotential().zero_crossing(), 0.5);
    }
}
