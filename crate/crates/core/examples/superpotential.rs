//! Factorize both wells: build the superpotential, check `V = W² + W' + E₀`
//! pointwise and print the ground-state energy.
//!
//! ```bash
//! cargo run --example superpotential
//! ```

use std::f64::consts::PI;

use wellquant::potentials::{susy_residual, PotentialSpec, SuperpotentialSpec};

fn main() -> wellquant::Result<()> {
    let pi2 = PI * PI;
    let wells = [
        ("cot2, v = 2", PotentialSpec::cot_squared(2.0 * pi2, 1.0)?),
        ("pt, v1 = 0.5, v2 = 1.5", PotentialSpec::poschl_teller(0.5 * pi2, 1.5 * pi2, 1.0)?),
    ];
    for (label, spec) in wells {
        let sp = spec.superpotential();
        match sp {
            SuperpotentialSpec::Cot { a, alpha } => println!("{label}: W = {a:.6} cot({alpha:.6} x)"),
            SuperpotentialSpec::CotTan { a1, a2, alpha } => {
                println!("{label}: W = {a1:.6} cot({alpha:.6} x) {a2:+.6} tan({alpha:.6} x)")
            }
        }
        println!("  E0 / pi^2      = {:.12}", sp.ground_state_energy() / pi2);
        println!("  W = 0 at x     = {:.12}", sp.zero_crossing());

        let worst = (1..100)
            .map(|i| susy_residual(&spec, &sp, i as f64 / 100.0).map(f64::abs))
            .collect::<wellquant::Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("  max |V - W^2 - W' - E0| on a 99-point grid = {worst:.3e}");
        println!("  V(0.25) = {:.9}, W(0.25) = {:.9}", spec.eval_potential(0.25)?, sp.eval(0.25)?);
    }
    Ok(())
}
