//! Closed-form spectra, ground-state wavefunctions, and the method
//! comparison table.
//!
//! Exact energies are written in the dimensionless form `ε = E / E₁^∞` with
//! `E₁^∞ = π²/L²`:
//!
//! * Pöschl–Teller: `ε_n = (n + ½ + √(v₁ + 1/16) + √(v₂ + 1/16))²`
//! * cot²: `ε_p = p² - p + ½ + (p - ½)√(4v + 1)`, `p = n + 1`
//!
//! Both follow from the SWKB closed forms through `V01 = A₁² - A₁α`,
//! `V02 = A₂² + A₂α`, `V0 = A² - Aα`. Commonly printed variants of these
//! formulas drop the outer square of the first and replace `- p + ½` by
//! `- 1` in the second; neither survives the `v → 0` limit `ε = p²`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{oracle_spectrum, SineBasisConfig};
use crate::potentials::{PotentialSpec, SuperpotentialSpec, Well};
use crate::quantization::{
    integrate_sqrt_endpoints, spectrum_numeric, Method, QuadratureConfig,
};

/// How a level was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelMethod {
    Exact,
    SwkbClosed,
    SwkbNumeric,
    WkbNumeric,
    Oracle,
}

/// One bound-state energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLevel {
    /// 0-based index.
    pub n: usize,
    /// 1-based label `n + 1`.
    pub p: usize,
    pub energy: f64,
    /// `E - E₀`, the energy measured from the factorization energy.
    pub e_prime: f64,
    /// `E / E₁^∞`.
    pub eps: f64,
    pub method: LevelMethod,
}

impl EnergyLevel {
    pub fn new(spec: &PotentialSpec, n: usize, energy: f64, method: LevelMethod) -> Self {
        let shift = spec.superpotential().ground_state_energy();
        Self {
            n,
            p: n + 1,
            energy,
            e_prime: energy - shift,
            eps: energy / unit_energy(spec.length()),
            method,
        }
    }
}

/// `E₁^∞ = π²/L²`.
fn unit_energy(length: f64) -> f64 {
    PI * PI / (length * length)
}

/// `E_n^∞ = π²n²/L²` for `n >= 1`.
pub fn infinite_well_energy(length: f64, n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "infinite-well levels are labelled from n = 1".into(),
        ));
    }
    if !(length.is_finite() && length > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "box length must be positive, got {length}"
        )));
    }
    Ok((n as f64).powi(2) * unit_energy(length))
}

/// Depths in units of `E₁^∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Depths {
    Single { v: f64 },
    Pair { v1: f64, v2: f64 },
}

pub fn dimensionless_params(spec: &PotentialSpec) -> Depths {
    let unit = unit_energy(spec.length());
    match spec.well() {
        Well::CotSquared { v0 } => Depths::Single { v: v0 / unit },
        Well::PoschlTeller { v01, v02 } => Depths::Pair {
            v1: v01 / unit,
            v2: v02 / unit,
        },
    }
}

/// Inverse of [`dimensionless_params`].
pub fn from_dimensionless(depths: Depths, length: f64) -> Result<PotentialSpec> {
    let unit = unit_energy(length);
    match depths {
        Depths::Single { v } => PotentialSpec::cot_squared(v * unit, length),
        Depths::Pair { v1, v2 } => PotentialSpec::poschl_teller(v1 * unit, v2 * unit, length),
    }
}

/// SWKB level `n` in closed form: `(2αn + A₁ - A₂)²` or
/// `(A + nα)² - A² + Aα`.
pub fn swkb_energy_closed(spec: &PotentialSpec, n: usize) -> f64 {
    let n = n as f64;
    match spec.superpotential() {
        SuperpotentialSpec::Cot { a, alpha } => (a + n * alpha).powi(2) - a * a + a * alpha,
        SuperpotentialSpec::CotTan { a1, a2, alpha } => (2.0 * alpha * n + a1 - a2).powi(2),
    }
}

/// Exact Schrödinger level `n` (0-based).
pub fn exact_energy(spec: &PotentialSpec, n: usize) -> f64 {
    let unit = unit_energy(spec.length());
    let eps = match dimensionless_params(spec) {
        Depths::Single { v } => {
            let p = n as f64 + 1.0;
            p * p - p + 0.5 + (p - 0.5) * (4.0 * v + 1.0).sqrt()
        }
        Depths::Pair { v1, v2 } => {
            (n as f64 + 0.5 + (v1 + 1.0 / 16.0).sqrt() + (v2 + 1.0 / 16.0).sqrt()).powi(2)
        }
    };
    eps * unit
}

/// `ψ₀ = N₀ sin^{s1}(αx) cos^{s2}(αx)`, i.e. `N₀ exp(∫W dx)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroundStateWavefunction {
    pub sp: SuperpotentialSpec,
    /// `A/α` or `A₁/α`.
    pub s1: f64,
    /// `-A₂/α`; zero for the cot family.
    pub s2: f64,
    pub norm: f64,
}

impl GroundStateWavefunction {
    /// Unnormalized (`N₀ = 1`) ground state of `sp`.
    pub fn shape(sp: SuperpotentialSpec) -> Self {
        let (s1, s2) = match sp {
            SuperpotentialSpec::Cot { a, alpha } => (a / alpha, 0.0),
            SuperpotentialSpec::CotTan { a1, a2, alpha } => (a1 / alpha, -a2 / alpha),
        };
        Self {
            sp,
            s1,
            s2,
            norm: 1.0,
        }
    }

    pub fn length(&self) -> f64 {
        self.sp.length()
    }

    fn shape_at(&self, x: f64) -> f64 {
        let (s, c) = (self.sp.alpha() * x).sin_cos();
        let mut value = s.powf(self.s1);
        if self.s2 != 0.0 {
            value *= c.powf(self.s2);
        }
        value
    }
}

/// `ψ₀(x)` on the closed box; exactly zero at both walls.
pub fn eval_ground_state(gs: &GroundStateWavefunction, x: f64) -> Result<f64> {
    let length = gs.length();
    if !(0.0..=length).contains(&x) {
        return Err(Error::OutsideBox { x, length });
    }
    if x == 0.0 || x == length {
        return Ok(0.0);
    }
    Ok(gs.norm * gs.shape_at(x))
}

/// Fixes `N₀` so that `∫₀^L ψ₀² dx = 1`.
pub fn normalize_ground_state(
    sp: &SuperpotentialSpec,
    cfg: &QuadratureConfig,
) -> Result<GroundStateWavefunction> {
    let mut gs = GroundStateWavefunction::shape(*sp);
    let integral = integrate_sqrt_endpoints(|x| gs.shape_at(x).powi(2), 0.0, gs.length(), cfg)?;
    gs.norm = 1.0 / integral.sqrt();
    Ok(gs)
}

/// Largest relative deviation of the finite-difference local energy
/// `(-ψ'' + Vψ)/ψ` from `E₀`, sampled on `points` uniformly spaced nodes of
/// the inner band `[L/10, 9L/10]` with second-difference step `step`.
pub fn local_energy_deviation(
    spec: &PotentialSpec,
    gs: &GroundStateWavefunction,
    step: f64,
    points: usize,
) -> Result<f64> {
    if points < 2 || !(step > 0.0) {
        return Err(Error::InvalidParameter(
            "need at least two grid points and a positive step".into(),
        ));
    }
    let length = spec.length();
    let e0 = gs.sp.ground_state_energy();
    let mut worst: f64 = 0.0;
    for i in 0..points {
        let x = length * (0.1 + 0.8 * i as f64 / (points - 1) as f64);
        let psi = eval_ground_state(gs, x)?;
        let second = (eval_ground_state(gs, x + step)? - 2.0 * psi + eval_ground_state(gs, x - step)?)
            / (step * step);
        let local = (-second + spec.eval_potential(x)? * psi) / psi;
        worst = worst.max((local - e0).abs() / e0);
    }
    Ok(worst)
}

/// Which methods a table should carry. The exact column is always present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MethodSet {
    pub swkb_closed: bool,
    pub swkb_numeric: bool,
    pub wkb: bool,
    pub oracle: bool,
}

impl MethodSet {
    pub const ALL: Self = Self {
        swkb_closed: true,
        swkb_numeric: true,
        wkb: true,
        oracle: true,
    };
    pub const EXACT_ONLY: Self = Self {
        swkb_closed: false,
        swkb_numeric: false,
        wkb: false,
        oracle: false,
    };
}

/// All levels for one `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub n: usize,
    pub p: usize,
    pub levels: Vec<EnergyLevel>,
}

impl SpectrumRow {
    pub fn energy(&self, method: LevelMethod) -> Option<f64> {
        self.levels
            .iter()
            .find(|l| l.method == method)
            .map(|l| l.energy)
    }

    /// `(E_method - E_exact) / E_exact`.
    pub fn deviation(&self, method: LevelMethod) -> Option<f64> {
        let exact = self.energy(LevelMethod::Exact)?;
        self.energy(method).map(|e| (e - exact) / exact)
    }

    /// SWKB deviation, from the numeric route when present.
    pub fn swkb_deviation(&self) -> Option<f64> {
        self.deviation(LevelMethod::SwkbNumeric)
            .or_else(|| self.deviation(LevelMethod::SwkbClosed))
    }
}

/// Levels of one well under several methods, sorted by `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub spec: PotentialSpec,
    pub rows: Vec<SpectrumRow>,
    /// Set when WKB was requested but the well has a hard-wall turning point.
    pub wkb_unavailable: bool,
    /// Per-level `|E(N) - E(2N)|` of the oracle, when it ran.
    pub oracle_convergence: Option<Vec<f64>>,
}

impl SpectrumTable {
    pub fn depths(&self) -> Depths {
        dimensionless_params(&self.spec)
    }
}

/// Builds a table for the requested methods.
pub fn build_table(
    spec: &PotentialSpec,
    n_max: usize,
    methods: MethodSet,
    quad: &QuadratureConfig,
    basis: &SineBasisConfig,
) -> Result<SpectrumTable> {
    let mut rows: Vec<SpectrumRow> = (0..=n_max)
        .map(|n| {
            let mut levels = vec![EnergyLevel::new(spec, n, exact_energy(spec, n), LevelMethod::Exact)];
            if methods.swkb_closed {
                levels.push(EnergyLevel::new(
                    spec,
                    n,
                    swkb_energy_closed(spec, n),
                    LevelMethod::SwkbClosed,
                ));
            }
            SpectrumRow { n, p: n + 1, levels }
        })
        .collect();

    let mut add = |levels: Vec<EnergyLevel>| {
        for level in levels {
            rows[level.n].levels.push(level);
        }
    };
    if methods.swkb_numeric {
        add(spectrum_numeric(Method::Swkb, spec, n_max, quad)?);
    }
    let mut wkb_unavailable = false;
    if methods.wkb {
        match spectrum_numeric(Method::Wkb, spec, n_max, quad) {
            Ok(levels) => add(levels),
            Err(Error::WallTurningPoints) => wkb_unavailable = true,
            Err(e) => return Err(e),
        }
    }
    let mut oracle_convergence = None;
    if methods.oracle {
        let oracle = oracle_spectrum(spec, n_max, basis)?;
        add(oracle
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(n, &e)| EnergyLevel::new(spec, n, e, LevelMethod::Oracle))
            .collect());
        oracle_convergence = Some(oracle.convergence);
    }

    Ok(SpectrumTable {
        spec: *spec,
        rows,
        wkb_unavailable,
        oracle_convergence,
    })
}

/// Every method side by side, with deviations from the exact column.
pub fn compare_methods(
    spec: &PotentialSpec,
    n_max: usize,
    quad: &QuadratureConfig,
    basis: &SineBasisConfig,
) -> Result<SpectrumTable> {
    build_table(spec, n_max, MethodSet::ALL, quad, basis)
}
