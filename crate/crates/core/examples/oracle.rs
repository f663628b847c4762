//! Diagonalize `-d²/dx² + V` in the sine basis of the box and watch the
//! lowest levels converge from above as the basis grows.
//!
//! ```bash
//! cargo run --release --example oracle
//! ```

use std::f64::consts::PI;

use wellquant::oracle::{eigenvalue_ladder, oracle_spectrum, SineBasisConfig};
use wellquant::quantization::QuadratureConfig;
use wellquant::spectra::{exact_energy, from_dimensionless, Depths};

fn main() -> wellquant::Result<()> {
    let pi2 = PI * PI;
    let spec = from_dimensionless(Depths::Pair { v1: 0.5, v2: 1.5 }, 1.0)?;

    let sizes = [25, 50, 100, 200];
    let ladder = eigenvalue_ladder(&spec, 3, &sizes, &QuadratureConfig::default())?;
    println!("pt, v1 = 0.5, v2 = 1.5: E_n / pi^2 (exact (n + 2.5)^2)");
    for (n, row) in sizes.iter().zip(&ladder) {
        let cells: Vec<String> = row.iter().map(|e| format!("{:.10}", e / pi2)).collect();
        println!("  N = {n:>3}: {}", cells.join("  "));
    }

    let o = oracle_spectrum(&spec, 4, &SineBasisConfig::default())?;
    println!("\nN = 400 vs {}:", o.basis_size);
    for (n, (e, gap)) in o.eigenvalues.iter().zip(&o.convergence).enumerate() {
        let exact = exact_energy(&spec, n);
        println!(
            "  n = {n}: {:.10}  |E(N) - E(2N)| = {gap:.1e}  rel. error = {:.1e}",
            e / pi2,
            (e - exact).abs() / exact
        );
    }
    Ok(())
}
