//! Solve the WKB and SWKB quantization conditions numerically for the cot²
//! well and compare with the exact levels.
//!
//! ```bash
//! cargo run --example swkb_vs_wkb
//! ```

use std::f64::consts::PI;

use wellquant::quantization::{spectrum_numeric, Method, QuadratureConfig};
use wellquant::spectra::{exact_energy, from_dimensionless, Depths};

fn main() -> wellquant::Result<()> {
    let spec = from_dimensionless(Depths::Single { v: 2.0 }, 1.0)?;
    let cfg = QuadratureConfig::default();
    let wkb = spectrum_numeric(Method::Wkb, &spec, 7, &cfg)?;
    let swkb = spectrum_numeric(Method::Swkb, &spec, 7, &cfg)?;

    println!("cot2, v = 2: energies in units of pi^2");
    println!("{:>3} {:>14} {:>14} {:>14} {:>10} {:>10}", "n", "exact", "swkb", "wkb", "err_swkb", "err_wkb");
    for (w, s) in wkb.iter().zip(&swkb) {
        let exact = exact_energy(&spec, w.n);
        println!(
            "{:>3} {:>14.9} {:>14.9} {:>14.9} {:>10.1e} {:>9.3}%",
            w.n,
            exact / (PI * PI),
            s.eps,
            w.eps,
            (s.energy - exact).abs() / exact,
            100.0 * (w.energy - exact) / exact
        );
    }
    Ok(())
}
