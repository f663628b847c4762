//! Self-check suite run by `wellquant verify`.
//!
//! Each check sweeps the default parameter grid, records the worst relative
//! discrepancy and where it occurred, and compares it with a fixed
//! tolerance.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{oracle_spectrum, SineBasisConfig};
use crate::potentials::{susy_residual, PotentialSpec};
use crate::quantization::{
    action_swkb, action_swkb_closed, action_wkb, action_wkb_closed, integrate_sqrt_endpoints,
    maslov_integral, solve_swkb_level, QuadratureConfig,
};
use crate::spectra::{
    dimensionless_params, eval_ground_state, exact_energy, from_dimensionless,
    local_energy_deviation, normalize_ground_state, swkb_energy_closed, Depths,
};

/// Dimensionless cot² depths of the default grid.
pub const COT_GRID: [f64; 5] = [0.5, 1.0, 2.0, 5.0, 10.0];
/// Each Pöschl–Teller depth ranges over this set independently.
pub const PT_GRID: [f64; 3] = [0.5, 1.5, 3.0];

/// Check names in execution order.
pub const CHECKS: [&str; 8] = [
    "susy",
    "maslov",
    "swkb_exact",
    "swkb_numeric",
    "quadrature",
    "normalization",
    "schrodinger",
    "oracle",
];

/// The fourteen wells of the default grid, cot² first.
pub fn default_grid(length: f64) -> Result<Vec<PotentialSpec>> {
    let mut specs = Vec::new();
    for v in COT_GRID {
        specs.push(from_dimensionless(Depths::Single { v }, length)?);
    }
    for v1 in PT_GRID {
        for v2 in PT_GRID {
            specs.push(from_dimensionless(Depths::Pair { v1, v2 }, length)?);
        }
    }
    Ok(specs)
}

/// Short label such as `cot2 v=2` or `pt v1=0.5 v2=3`.
pub fn describe(spec: &PotentialSpec) -> String {
    use crate::format::sig12;
    match dimensionless_params(spec) {
        Depths::Single { v } => format!("cot2 v={}", sig12(v)),
        Depths::Pair { v1, v2 } => format!("pt v1={} v2={}", sig12(v1), sig12(v2)),
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub length: f64,
    /// Levels `0..levels` enter the spectral checks.
    pub levels: usize,
    pub quad: QuadratureConfig,
    pub basis: SineBasisConfig,
    pub skip: Vec<String>,
    /// Scales every exact energy by `1 + perturb_exact`. A fault hook: any
    /// nonzero value large enough should make the spectral checks fail.
    pub perturb_exact: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            length: 1.0,
            levels: 10,
            quad: QuadratureConfig::default(),
            basis: SineBasisConfig::default(),
            skip: Vec::new(),
            perturb_exact: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub worst: f64,
    pub tolerance: f64,
    /// Where the worst case occurred.
    pub location: String,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.worst <= self.tolerance
    }

    /// `PASS name worst=... tol=... at ...`
    pub fn line(&self) -> String {
        format!(
            "{} {:<13} worst={:.3e} tol={:.0e} at {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.worst,
            self.tolerance,
            self.location
        )
    }
}

/// Worst value with its label. Ties keep the earlier entry so the result
/// does not depend on scheduling.
#[derive(Debug, Clone)]
struct Worst {
    value: f64,
    location: String,
}

impl Worst {
    fn new() -> Self {
        Self {
            value: 0.0,
            location: "-".into(),
        }
    }

    fn offer(&mut self, value: f64, location: impl FnOnce() -> String) {
        // NaN must register as a failure
        if value > self.value || value.is_nan() && !self.value.is_nan() {
            self.value = value;
            self.location = location();
        }
    }

    fn merge(mut self, other: Worst) -> Self {
        let loc = other.location;
        self.offer(other.value, || loc);
        self
    }

    fn finish(self, name: &'static str, tolerance: f64) -> CheckOutcome {
        CheckOutcome {
            name,
            worst: self.value,
            tolerance,
            location: self.location,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Runs one check over every grid point, in parallel, merging in grid order.
fn over_grid<F>(specs: &[PotentialSpec], f: F) -> Result<Worst>
where
    F: Fn(&PotentialSpec, &mut Worst) -> Result<()> + Sync,
{
    let per_spec: Vec<Worst> = specs
        .par_iter()
        .map(|spec| {
            let mut w = Worst::new();
            f(spec, &mut w)?;
            Ok(w)
        })
        .collect::<Result<_>>()?;
    Ok(per_spec.into_iter().fold(Worst::new(), Worst::merge))
}

/// Runs every check not named in `cfg.skip`.
pub fn run_checks(cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    for name in &cfg.skip {
        if !CHECKS.contains(&name.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "unknown check '{name}' (known: {})",
                CHECKS.join(", ")
            )));
        }
    }
    cfg.quad.validate()?;
    let specs = default_grid(cfg.length)?;
    let exact = |spec: &PotentialSpec, n: usize| exact_energy(spec, n) * (1.0 + cfg.perturb_exact);
    let mut out = Vec::new();
    for name in CHECKS {
        if cfg.skip.iter().any(|s| s == name) {
            continue;
        }
        let outcome = match name {
            "susy" => over_grid(&specs, |spec, w| {
                // relative to |V| or E₀, whichever is larger, since V vanishes
                // at the midpoint of the cot² well
                let sp = spec.superpotential();
                let e0 = sp.ground_state_energy();
                for i in 1..1000 {
                    let x = spec.length() * i as f64 / 1000.0;
                    let v = spec.eval_potential(x)?;
                    let r = susy_residual(spec, &sp, x)?.abs() / v.abs().max(e0);
                    w.offer(r, || format!("{} x={}", describe(spec), i as f64 / 1000.0));
                }
                Ok(())
            })?
            .finish(name, 1e-10),

            "maslov" => over_grid(&specs, |spec, w| {
                let sp = spec.superpotential();
                let alpha = sp.alpha();
                for k in 0..=16 {
                    let e_prime = alpha * alpha * 10f64.powf(0.5 * k as f64 - 4.0);
                    let m = maslov_integral(&sp, e_prime, &cfg.quad)?;
                    w.offer((m.abs() - 0.5 * PI).abs(), || {
                        format!("{} E'/a^2=1e{}", describe(spec), 0.5 * k as f64 - 4.0)
                    });
                }
                Ok(())
            })?
            .finish(name, 1e-8),

            "swkb_exact" => over_grid(&specs, |spec, w| {
                for n in 0..cfg.levels {
                    let d = rel(swkb_energy_closed(spec, n), exact(spec, n));
                    w.offer(d, || format!("{} n={n}", describe(spec)));
                }
                Ok(())
            })?
            .finish(name, 1e-12),

            "swkb_numeric" => over_grid(&specs, |spec, w| {
                let sp = spec.superpotential();
                for n in 0..cfg.levels {
                    let e = solve_swkb_level(&sp, n, &cfg.quad)?;
                    let d = rel(e, swkb_energy_closed(spec, n));
                    w.offer(d, || format!("{} n={n}", describe(spec)));
                }
                Ok(())
            })?
            .finish(name, 1e-8),

            "quadrature" => over_grid(&specs, |spec, w| {
                let sp = spec.superpotential();
                let e0 = sp.ground_state_energy();
                for n in 0..cfg.levels {
                    let e = exact_energy(spec, n);
                    let d = rel(action_wkb(spec, e, &cfg.quad)?, action_wkb_closed(spec, e));
                    w.offer(d, || format!("{} wkb n={n}", describe(spec)));
                    if n > 0 {
                        let d = rel(action_swkb(&sp, e - e0, &cfg.quad)?, action_swkb_closed(&sp, e - e0));
                        w.offer(d, || format!("{} swkb n={n}", describe(spec)));
                    }
                }
                Ok(())
            })?
            .finish(name, 1e-9),

            "normalization" => {
                let fine = QuadratureConfig {
                    initial_nodes: 256,
                    rel_tol: 1e-13,
                    ..cfg.quad
                };
                let mut worst = over_grid(&specs, |spec, w| {
                    let gs = normalize_ground_state(&spec.superpotential(), &cfg.quad)?;
                    let integral = integrate_sqrt_endpoints(
                        |x| eval_ground_state(&gs, x).unwrap_or(0.0).powi(2),
                        0.0,
                        spec.length(),
                        &fine,
                    )?;
                    w.offer((integral - 1.0).abs(), || describe(spec));
                    Ok(())
                })?;
                // N₀ = 16/√3 for v1 = 0.5, v2 = 1.5 at L = 1 (Wallis integral)
                let pt = from_dimensionless(Depths::Pair { v1: 0.5, v2: 1.5 }, 1.0)?;
                let gs = normalize_ground_state(&pt.superpotential(), &cfg.quad)?;
                worst.offer(rel(gs.norm, 16.0 / 3f64.sqrt()), || "pt v1=0.5 v2=1.5 N0".into());
                worst.finish(name, 1e-10)
            }

            "schrodinger" => over_grid(&specs, |spec, w| {
                let gs = normalize_ground_state(&spec.superpotential(), &cfg.quad)?;
                let d = local_energy_deviation(spec, &gs, 1e-4 * spec.length(), 81)?;
                w.offer(d, || describe(spec));
                Ok(())
            })?
            .finish(name, 1e-5),

            "oracle" => {
                let levels = cfg.levels.min(5);
                over_grid(&specs, |spec, w| {
                    let o = oracle_spectrum(spec, levels - 1, &cfg.basis)?;
                    for (n, &e) in o.eigenvalues.iter().enumerate() {
                        w.offer(rel(e, exact(spec, n)), || format!("{} n={n}", describe(spec)));
                    }
                    Ok(())
                })?
                .finish(name, 1e-3)
            }
            _ => unreachable!("check list and dispatch out of sync"),
        };
        out.push(outcome);
    }
    Ok(out)
}
