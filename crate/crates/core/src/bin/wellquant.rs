use std::io;
use std::path::PathBuf;

use wellquant::cli;

fn main() {
    let env = std::env::var_os(cli::CONFIG_ENV).map(PathBuf::from);
    let code = cli::run(std::env::args_os(), env.as_deref(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
