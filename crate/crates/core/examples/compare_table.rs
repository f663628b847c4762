//! Every method side by side, rendered as the CLI would print it.
//!
//! ```bash
//! cargo run --release --example compare_table
//! ```

use wellquant::format::{spectrum_table, Format};
use wellquant::oracle::SineBasisConfig;
use wellquant::quantization::QuadratureConfig;
use wellquant::spectra::{compare_methods, from_dimensionless, Depths};

fn main() -> wellquant::Result<()> {
    let spec = from_dimensionless(Depths::Single { v: 2.0 }, 1.0)?;
    let basis = SineBasisConfig {
        basis_size: 100,
        ..Default::default()
    };
    let table = compare_methods(&spec, 5, &QuadratureConfig::default(), &basis)?;
    print!("{}", spectrum_table(&table).render(Format::Plain));

    // at v = 0 the WKB turning points sit on the walls
    let free = from_dimensionless(Depths::Single { v: 0.0 }, 1.0)?;
    let table = compare_methods(&free, 2, &QuadratureConfig::default(), &basis)?;
    println!("\nv = 0, wkb unavailable: {}", table.wkb_unavailable);
    print!("{}", spectrum_table(&table).render(Format::Csv));
    Ok(())
}
