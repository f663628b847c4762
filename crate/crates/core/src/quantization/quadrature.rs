//! Composite Gauss–Legendre quadrature behind a sine change of variable.
//!
//! With `x = m + h sin θ` an integrand that behaves like `√(x - a)` (or
//! `1/√(x - a)`) at an endpoint becomes analytic in `θ`, so a plain panel
//! rule converges quickly without any special weights.

use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Nodes per Gauss–Legendre panel.
pub const PANEL_ORDER: usize = 8;

/// Controls the node-doubling loop of [`integrate_sqrt_endpoints`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureConfig {
    /// Nodes used by the first estimate. Rounded up to a whole number of
    /// panels.
    pub initial_nodes: usize,
    /// Successive estimates must agree to this relative tolerance.
    pub rel_tol: f64,
    pub max_doublings: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            initial_nodes: 64,
            rel_tol: 1e-10,
            max_doublings: 12,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.initial_nodes < PANEL_ORDER {
            return Err(Error::InvalidParameter(format!(
                "quadrature needs at least {PANEL_ORDER} initial nodes, got {}",
                self.initial_nodes
            )));
        }
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "quadrature tolerance must be positive, got {}",
                self.rel_tol
            )));
        }
        if self.max_doublings == 0 {
            return Err(Error::InvalidParameter(
                "max_doublings must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Same tolerances with a larger starting node count.
    pub fn with_min_nodes(self, nodes: usize) -> Self {
        Self {
            initial_nodes: self.initial_nodes.max(nodes),
            ..self
        }
    }
}

/// Legendre `P_n(x)` and its derivative by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    (p1, n * (x * p1 - p0) / (x * x - 1.0))
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule.reverse();
    rule
}

fn panel_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_ORDER))
}

/// One composite estimate of `∫ g(θ) dθ` over `(-π/2, π/2)` with `panels`
/// equal panels.
fn composite_theta<G: Fn(f64) -> f64>(g: &G, panels: usize) -> f64 {
    let rule = panel_rule();
    let width = 2.0 * FRAC_PI_2 / panels as f64;
    let half = 0.5 * width;
    let mut total = 0.0;
    for p in 0..panels {
        let centre = -FRAC_PI_2 + (p as f64 + 0.5) * width;
        let mut s = 0.0;
        for &(u, w) in rule {
            s += w * g(centre + half * u);
        }
        total += s * half;
    }
    total
}

/// `∫ f(x) dx` over `(lower, upper)` where `f` may vanish or blow up like an
/// inverse square root at either end.
///
/// Panels double until two consecutive estimates agree to `cfg.rel_tol`.
pub fn integrate_sqrt_endpoints<F>(f: F, lower: f64, upper: f64, cfg: &QuadratureConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    cfg.validate()?;
    if !(lower.is_finite() && upper.is_finite()) || upper < lower {
        return Err(Error::InvalidParameter(format!(
            "integration interval ({lower}, {upper}) is not a finite ordered pair"
        )));
    }
    if upper == lower {
        return Ok(0.0);
    }
    let mid = 0.5 * (lower + upper);
    let half = 0.5 * (upper - lower);
    let g = |theta: f64| {
        let (s, c) = theta.sin_cos();
        f(mid + half * s) * half * c
    };

    let mut panels = cfg.initial_nodes.div_ceil(PANEL_ORDER);
    let mut previous = composite_theta(&g, panels);
    let mut gap = f64::INFINITY;
    for _ in 0..cfg.max_doublings {
        panels *= 2;
        let current = composite_theta(&g, panels);
        if !current.is_finite() {
            return Err(Error::Convergence {
                operation: "integrate_sqrt_endpoints",
                estimate: current,
                gap,
            });
        }
        gap = (current - previous).abs();
        if gap <= cfg.rel_tol * current.abs() || (current == 0.0 && previous == 0.0) {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::Convergence {
        operation: "integrate_sqrt_endpoints",
        estimate: previous,
        gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = gauss_legendre(PANEL_ORDER);
        let w: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert!((w - 2.0).abs() < 1e-14);
        // degree 2n-1 = 15 is exact
        let m: f64 = rule.iter().map(|&(x, w)| w * x.powi(14)).sum();
        assert!((m - 2.0 / 15.0).abs() < 1e-14);
        assert!(rule.windows(2).all(|p| p[0].0 < p[1].0));
    }

    #[test]
    fn quarter_circle() {
        let cfg = QuadratureConfig::default();
        let v = integrate_sqrt_endpoints(|x| (1.0 - x * x).max(0.0).sqrt(), -1.0, 1.0, &cfg).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn beta_three_halves() {
        let cfg = QuadratureConfig::default();
        let v = integrate_sqrt_endpoints(|x| (x * (1.0 - x)).max(0.0).sqrt(), 0.0, 1.0, &cfg).unwrap();
        assert!((v - PI / 8.0).abs() < 1e-12);
    }

    #[test]
    fn inverse_sqrt_endpoints() {
        // ∫ dx / √(1 - x²) = π
        let cfg = QuadratureConfig::default();
        let v = integrate_sqrt_endpoints(|x| 1.0 / (1.0 - x * x).sqrt(), -1.0, 1.0, &cfg).unwrap();
        assert!((v - PI).abs() < 1e-12);
    }

    #[test]
    fn empty_interval_is_zero() {
        let cfg = QuadratureConfig::default();
        assert_eq!(integrate_sqrt_endpoints(|_| 1.0, 0.3, 0.3, &cfg).unwrap(), 0.0);
        assert!(integrate_sqrt_endpoints(|_| 1.0, 0.3, 0.2, &cfg).is_err());
    }

    #[test]
    fn non_convergence_reports_best_estimate() {
        let cfg = QuadratureConfig {
            initial_nodes: 8,
            rel_tol: 1e-14,
            max_doublings: 2,
        };
        // highly oscillatory, unresolved by 32 nodes
        match integrate_sqrt_endpoints(|x| (500.0 * x).sin(), 0.0, 1.0, &cfg) {
            Err(Error::Convergence { estimate, gap, .. }) => {
                assert!(estimate.is_finite());
                assert!(gap > 0.0);
            }
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn config_validation() {
        let bad = QuadratureConfig {
            initial_nodes: 4,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = QuadratureConfig {
            rel_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
