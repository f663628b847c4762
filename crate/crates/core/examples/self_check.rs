//! Run the self-check suite from library code, skipping the diagonalization.
//!
//! ```bash
//! cargo run --release --example self_check
//! ```

use wellquant::verify::{run_checks, VerifyConfig};

fn main() -> wellquant::Result<()> {
    let cfg = VerifyConfig {
        skip: vec!["oracle".into()],
        ..Default::default()
    };
    let outcomes = run_checks(&cfg)?;
    for c in &outcomes {
        println!("{}", c.line());
    }
    let failed = outcomes.iter().filter(|c| !c.passed()).count();
    println!("{failed} of {} checks failed", outcomes.len());
    Ok(())
}
