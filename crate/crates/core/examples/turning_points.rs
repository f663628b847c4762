//! Turning points and action integrals, by quadrature and in closed form,
//! plus the half-integral that supplies the Maslov-like `π/2`.
//!
//! ```bash
//! cargo run --example turning_points
//! ```

use std::f64::consts::PI;

use wellquant::potentials::PotentialSpec;
use wellquant::quantization::{
    action_swkb, action_swkb_closed, action_wkb, action_wkb_closed, maslov_integral,
    turning_points_swkb, turning_points_wkb, QuadratureConfig,
};

fn main() -> wellquant::Result<()> {
    let pi2 = PI * PI;
    let cfg = QuadratureConfig::default();
    let spec = PotentialSpec::poschl_teller(0.5 * pi2, 1.5 * pi2, 1.0)?;
    let sp = spec.superpotential();
    let e0 = sp.ground_state_energy();

    println!("pt, v1 = 0.5, v2 = 1.5, E0 = {:.6} pi^2", e0 / pi2);
    println!("{:>10} {:>10} {:>10} {:>16} {:>16}", "E/pi^2", "a", "b", "I_wkb", "closed");
    for eps in [7.0, 12.25, 20.0, 50.0] {
        let e = eps * pi2;
        let tp = turning_points_wkb(&spec, e)?;
        println!(
            "{eps:>10} {:>10.6} {:>10.6} {:>16.12} {:>16.12}",
            tp.lower,
            tp.upper,
            action_wkb(&spec, e, &cfg)?,
            action_wkb_closed(&spec, e)
        );
    }

    println!();
    println!("{:>10} {:>10} {:>10} {:>16} {:>16} {:>14}", "E'/pi^2", "c", "d", "I_swkb", "closed", "|M| - pi/2");
    for eps in [1e-3, 1.0, 6.0, 100.0] {
        let ep = eps * pi2;
        let tp = turning_points_swkb(&sp, ep)?;
        let m = maslov_integral(&sp, ep, &cfg)?;
        println!(
            "{eps:>10} {:>10.6} {:>10.6} {:>16.12} {:>16.12} {:>14.2e}",
            tp.lower,
            tp.upper,
            action_swkb(&sp, ep, &cfg)?,
            action_swkb_closed(&sp, ep),
            m.abs() - 0.5 * PI
        );
    }
    Ok(())
}
