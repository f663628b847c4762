//! Semiclassical bound-state energies of the two confined trigonometric wells
//! `V0 cot²(πx/L)` and `V01 cosec²(πx/2L) + V02 sec²(πx/2L)`.
//!
//! The crate computes the spectrum four ways and compares them:
//!
//! * closed-form exact Schrödinger energies ([`spectra::exact_energy`]),
//! * supersymmetric WKB (SWKB), both closed form and by quadrature plus
//!   root finding ([`quantization::spectrum_numeric`]),
//! * ordinary WKB by quadrature,
//! * a sine-basis Galerkin diagonalization ([`oracle::oracle_spectrum`]) that
//!   shares no formulas with the others.
//!
//! Units are `ħ = 2m = 1` everywhere, so the Schrödinger operator is
//! `-d²/dx² + V(x)` and energies of the empty box are `π²n²/L²`.
//!
//! ```
//! use wellquant::{potentials::PotentialSpec, spectra};
//!
//! let spec = PotentialSpec::cot_squared(2.0 * std::f64::consts::PI.powi(2), 1.0).unwrap();
//! let e1 = spectra::exact_energy(&spec, 1);
//! assert!((e1 / std::f64::consts::PI.powi(2) - 7.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod error;
pub mod format;
pub mod oracle;
pub mod potentials;
pub mod quantization;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use potentials::{BoxDomain, PotentialSpec, SuperpotentialSpec, Well};
pub use quantization::{Method, QuadratureConfig, TurningPoints};
pub use spectra::{EnergyLevel, GroundStateWavefunction, LevelMethod, SpectrumTable};
