//! Reference spectrum from a Galerkin diagonalization of `-d²/dx² + V` in
//! the particle-in-a-box basis `√(2/L) sin(kπx/L)`.
//!
//! The basis satisfies the wall conditions exactly and makes the kinetic
//! term diagonal. Potential matrix elements are assembled from one family
//! of wall-regular moments
//!
//! ```text
//! f_m = (1/L) ∫ V(x) [1 - cos(mu)] dx        m even
//! f_m = (1/L) ∫ V(x) [cos(u) - cos(mu)] dx   m odd,   u = πx/L
//! ```
//!
//! whose brackets vanish quadratically at both walls, so every integrand is
//! finite. Then `H_kl = δ_kl (kπ/L)² + f_{k+l} - f_{|k-l|}`.

mod eigen;

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

pub use eigen::{eigen_symmetric, eigenvalues_symmetric, Matrix};

use crate::error::{Error, Result};
use crate::potentials::PotentialSpec;
use crate::quantization::{integrate_sqrt_endpoints, QuadratureConfig};

/// Smallest basis accepted.
pub const MIN_BASIS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SineBasisConfig {
    pub basis_size: usize,
    pub quad: QuadratureConfig,
}

impl Default for SineBasisConfig {
    fn default() -> Self {
        Self {
            basis_size: 400,
            quad: QuadratureConfig::default(),
        }
    }
}

/// Lowest eigenvalues at basis size `2N` with `|E(N) - E(2N)|` per level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSpectrum {
    pub eigenvalues: Vec<f64>,
    pub convergence: Vec<f64>,
    pub basis_size: usize,
}

fn check_basis(n: usize) -> Result<()> {
    if n < MIN_BASIS {
        return Err(Error::InvalidParameter(format!(
            "sine basis needs at least {MIN_BASIS} functions, got {n}"
        )));
    }
    Ok(())
}

/// Bracket of `f_m` as a function of the distance `y` to the nearer wall.
/// `right` selects the wall at `x = L`, where odd brackets flip sign.
fn bracket(m: usize, u: f64, right: bool) -> f64 {
    if m % 2 == 0 {
        let s = (0.5 * m as f64 * u).sin();
        2.0 * s * s
    } else {
        let b = 2.0 * (0.5 * (m + 1) as f64 * u).sin() * (0.5 * (m - 1) as f64 * u).sin();
        if right {
            -b
        } else {
            b
        }
    }
}

/// Moments `f_0 ..= f_max` for `spec`.
pub fn wall_moments(spec: &PotentialSpec, max_m: usize, quad: &QuadratureConfig) -> Result<Vec<f64>> {
    let length = spec.length();
    let half = 0.5 * length;
    let k = PI / length;
    (0..=max_m)
        .into_par_iter()
        .map(|m| {
            if m < 2 || spec.is_free_box() {
                return Ok(0.0);
            }
            let cfg = quad.with_min_nodes(2 * m);
            let left = integrate_sqrt_endpoints(
                |y| spec.value_unchecked(y) * bracket(m, k * y, false),
                0.0,
                half,
                &cfg,
            )?;
            let right = integrate_sqrt_endpoints(
                |y| spec.value_unchecked(length - y) * bracket(m, k * y, true),
                0.0,
                half,
                &cfg,
            )?;
            Ok((left + right) / length)
        })
        .collect()
}

fn assemble(spec: &PotentialSpec, moments: &[f64], n: usize) -> Matrix {
    assert!(moments.len() > 2 * n);
    let k = PI / spec.length();
    Matrix::from_fn(n, |i, j| {
        let (a, b) = (i + 1, j + 1);
        let kinetic = if a == b { (a as f64 * k).powi(2) } else { 0.0 };
        kinetic + moments[a + b] - moments[a.abs_diff(b)]
    })
}

/// `N×N` Hamiltonian in the sine basis.
pub fn hamiltonian_matrix(spec: &PotentialSpec, n: usize, quad: &QuadratureConfig) -> Result<Matrix> {
    check_basis(n)?;
    let moments = wall_moments(spec, 2 * n, quad)?;
    Ok(assemble(spec, &moments, n))
}

/// Lowest `levels` eigenvalues for each basis size in `sizes`, sharing one
/// set of moments.
pub fn eigenvalue_ladder(
    spec: &PotentialSpec,
    levels: usize,
    sizes: &[usize],
    quad: &QuadratureConfig,
) -> Result<Vec<Vec<f64>>> {
    for &n in sizes {
        check_basis(n)?;
    }
    let largest = sizes.iter().copied().max().unwrap_or(0);
    let moments = wall_moments(spec, 2 * largest, quad)?;
    sizes
        .par_iter()
        .map(|&n| eigenvalues_symmetric(&assemble(spec, &moments, n), levels))
        .collect()
}

/// Levels `0..=n_max` from bases of size `N` and `2N`.
pub fn oracle_spectrum(spec: &PotentialSpec, n_max: usize, cfg: &SineBasisConfig) -> Result<OracleSpectrum> {
    let n = cfg.basis_size;
    check_basis(n)?;
    if 4 * (n_max + 1) > n {
        return Err(Error::InvalidParameter(format!(
            "{} levels need a basis of at least {} functions, got {n}",
            n_max + 1,
            4 * (n_max + 1)
        )));
    }
    let ladder = eigenvalue_ladder(spec, n_max + 1, &[n, 2 * n], &cfg.quad)?;
    let (coarse, fine) = (&ladder[0], &ladder[1]);
    Ok(OracleSpectrum {
        eigenvalues: fine.clone(),
        convergence: coarse.iter().zip(fine).map(|(a, b)| (a - b).abs()).collect(),
        basis_size: 2 * n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI2: f64 = PI * PI;

    #[test]
    fn free_box_is_diagonal() {
        let spec = PotentialSpec::cot_squared(0.0, 1.0).unwrap();
        let h = hamiltonian_matrix(&spec, 12, &QuadratureConfig::default()).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                let expect = if i == j { ((i + 1) as f64 * PI).powi(2) } else { 0.0 };
                assert_eq!(h[(i, j)], expect);
            }
        }
        let v = eigenvalues_symmetric(&h, 3).unwrap();
        assert_eq!(v, vec![PI2, 4.0 * PI2, 9.0 * PI2]);
    }

    #[test]
    fn matrix_symmetry_and_parity() {
        let quad = QuadratureConfig::default();
        let spec = PotentialSpec::cot_squared(2.0 * PI2, 1.0).unwrap();
        let h = hamiltonian_matrix(&spec, 20, &quad).unwrap();
        assert!(h.asymmetry() <= 1e-12);
        for i in 0..20 {
            for j in 0..20 {
                if (i + j) % 2 == 1 {
                    assert!(h[(i, j)].abs() < 1e-8 * h[(0, 0)], "H[{i},{j}] = {}", h[(i, j)]);
                }
            }
        }
        let spec = PotentialSpec::poschl_teller(0.5 * PI2, 1.5 * PI2, 1.0).unwrap();
        assert!(hamiltonian_matrix(&spec, 20, &quad).unwrap().asymmetry() <= 1e-12);
    }

    #[test]
    fn brute_force_matrix_element() {
        // (2/L) ∫ sin(kπx) V sin(lπx) dx by a fine midpoint sum
        let spec = PotentialSpec::poschl_teller(0.5 * PI2, 1.5 * PI2, 1.0).unwrap();
        let h = hamiltonian_matrix(&spec, 10, &QuadratureConfig::default()).unwrap();
        let steps = 400_000;
        for (k, l) in [(1, 1), (2, 5), (3, 4)] {
            let mut sum = 0.0;
            for i in 0..steps {
                let x = (i as f64 + 0.5) / steps as f64;
                sum += (k as f64 * PI * x).sin() * spec.eval_potential(x).unwrap() * (l as f64 * PI * x).sin();
            }
            let brute = 2.0 * sum / steps as f64 + if k == l { (k as f64 * PI).powi(2) } else { 0.0 };
            assert!((h[(k - 1, l - 1)] - brute).abs() < 1e-6 * brute.abs().max(1.0), "{k},{l}");
        }
    }

    #[test]
    fn rejects_small_basis() {
        let spec = PotentialSpec::cot_squared(1.0, 1.0).unwrap();
        assert!(hamiltonian_matrix(&spec, 5, &QuadratureConfig::default()).is_err());
        let cfg = SineBasisConfig {
            basis_size: 20,
            ..Default::default()
        };
        assert!(oracle_spectrum(&spec, 5, &cfg).is_err());
    }

    #[test]
    fn oracle_ground_levels() {
        let cfg = SineBasisConfig {
            basis_size: 100,
            ..Default::default()
        };
        let spec = PotentialSpec::cot_squared(2.0 * PI2, 1.0).unwrap();
        let o = oracle_spectrum(&spec, 2, &cfg).unwrap();
        assert_eq!(o.basis_size, 200);
        assert!((o.eigenvalues[0] / (2.0 * PI2) - 1.0).abs() < 1e-3);
        assert!(o.convergence.iter().all(|g| g.is_finite()));
    }
}
