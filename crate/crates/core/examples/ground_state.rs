//! Normalized ground states `ψ₀ ∝ exp(∫W)` and a finite-difference check
//! that they solve the Schrödinger equation.
//!
//! ```bash
//! cargo run --example ground_state
//! ```

use wellquant::quantization::QuadratureConfig;
use wellquant::spectra::{
    eval_ground_state, from_dimensionless, local_energy_deviation, normalize_ground_state, Depths,
};

fn main() -> wellquant::Result<()> {
    let cfg = QuadratureConfig::default();
    for depths in [Depths::Single { v: 0.0 }, Depths::Single { v: 2.0 }, Depths::Pair { v1: 0.5, v2: 1.5 }] {
        let spec = from_dimensionless(depths, 1.0)?;
        let gs = normalize_ground_state(&spec.superpotential(), &cfg)?;
        println!(
            "{depths:?}: psi0 = N sin^{:.4}(ax) cos^{:.4}(ax), N = {:.12}",
            gs.s1, gs.s2, gs.norm
        );
        let samples: Vec<String> = [0.0, 0.25, 0.5, 0.75, 1.0]
            .iter()
            .map(|&x| eval_ground_state(&gs, x).map(|p| format!("{p:.6}")))
            .collect::<wellquant::Result<_>>()?;
        println!("  psi0 at x = 0, 1/4, 1/2, 3/4, 1: {}", samples.join(", "));
        if !spec.is_free_box() {
            let coarse = local_energy_deviation(&spec, &gs, 2e-4, 81)?;
            let fine = local_energy_deviation(&spec, &gs, 1e-4, 81)?;
            println!(
                "  local energy deviation: h = 2e-4 -> {coarse:.2e}, h = 1e-4 -> {fine:.2e} (ratio {:.2})",
                coarse / fine
            );
        }
    }
    Ok(())
}
