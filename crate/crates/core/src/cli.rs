//! Command-line front end. [`run`] takes the argument list and output sinks
//! and returns the process exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3
//! numerical failure.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::error::Error;
use crate::format::{spec_cells, spectrum_table, Cell, Format, Table};
use crate::oracle::SineBasisConfig;
use crate::potentials::PotentialSpec;
use crate::quantization::{solve_wkb_level, QuadratureConfig};
use crate::spectra::{
    build_table, eval_ground_state, exact_energy, from_dimensionless, infinite_well_energy,
    normalize_ground_state, swkb_energy_closed, Depths, MethodSet,
};
use crate::verify::{run_checks, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "WELLQUANT_CONFIG";

#[derive(Debug, Parser)]
#[command(
    name = "wellquant",
    version,
    about = "WKB and SWKB spectra of the cot² and Pöschl–Teller wells"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy levels by the requested methods
    Spectrum(WellArgs),
    /// Every method side by side with relative deviations from the exact levels
    Compare(WellArgs),
    /// Normalized ground state sampled on [0, L]
    Wavefunction {
        #[command(flatten)]
        well: WellArgs,
        /// Number of samples, endpoints included
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Run the self-check suite on the default parameter grid
    Verify(VerifyArgs),
    /// Dimensionless levels over a range of depths
    Sweep {
        #[command(flatten)]
        well: WellArgs,
        #[arg(long, allow_hyphen_values = true)]
        v_from: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        v_to: Option<f64>,
        /// Number of depth values, both ends included
        #[arg(long)]
        steps: Option<usize>,
        /// Which Pöschl–Teller depth to vary: v1, v2 or both
        #[arg(long)]
        vary: Option<String>,
    },
}

#[derive(Debug, Args, Clone, Default)]
struct NumericArgs {
    /// `key = value` file; flags take precedence over its entries
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    length: Option<f64>,
    /// Number of levels, n = 0 .. levels-1
    #[arg(long)]
    levels: Option<usize>,
    #[arg(long)]
    quad_nodes: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    quad_tol: Option<f64>,
    #[arg(long)]
    basis_size: Option<usize>,
}

#[derive(Debug, Args, Clone, Default)]
struct WellArgs {
    #[command(flatten)]
    numeric: NumericArgs,
    /// cot2 or pt
    #[arg(long)]
    potential: Option<String>,
    /// cot² depth in units of π²/L²
    #[arg(long, allow_hyphen_values = true)]
    v: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    v1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    v2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    v0_absolute: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    v01_absolute: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    v02_absolute: Option<f64>,
    /// exact, swkb, swkb-closed, swkb-numeric, wkb, oracle or all; repeatable
    #[arg(long)]
    method: Vec<String>,
    /// csv, json or plain
    #[arg(long)]
    format: Option<String>,
}

#[derive(Debug, Args, Clone, Default)]
struct VerifyArgs {
    #[command(flatten)]
    numeric: NumericArgs,
    /// Check to leave out; repeatable
    #[arg(long)]
    skip: Vec<String>,
    /// Scale exact energies by 1 + δ before comparing (fault injection)
    #[arg(long, allow_hyphen_values = true)]
    perturb_exact: Option<f64>,
}

/// A failure that maps onto an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(msg) => Failure::Usage(msg),
            other => Failure::Numeric(other),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

const CONFIG_KEYS: [&str; 21] = [
    "potential",
    "v",
    "v1",
    "v2",
    "v0-absolute",
    "v01-absolute",
    "v02-absolute",
    "length",
    "levels",
    "method",
    "format",
    "quad-nodes",
    "quad-tol",
    "basis-size",
    "samples",
    "skip",
    "perturb-exact",
    "v-from",
    "v-to",
    "steps",
    "vary",
];

/// Parsed `key = value` config file. Keys use the flag spelling; `_` is
/// accepted for `-`. Lines starting with `#` are comments.
#[derive(Debug, Default)]
struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    fn parse(text: &str, origin: &Path) -> Result<Self, Failure> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                usage(format!("{}:{}: expected `key = value`", origin.display(), i + 1))
            })?;
            let key = key.trim().replace('_', "-");
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(usage(format!(
                    "{}:{}: unknown key '{key}'",
                    origin.display(),
                    i + 1
                )));
            }
            entries.insert(key, value.trim().to_string());
        }
        Ok(Self { entries })
    }

    fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text, path)
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        self.raw(key)
            .map(|s| {
                s.parse()
                    .map_err(|_| usage(format!("config: invalid value '{s}' for {key}")))
            })
            .transpose()
    }

    fn list(&self, key: &str) -> Vec<String> {
        self.raw(key)
            .map(|s| {
                s.split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(String::from)
                    .collect()
            })
            .unwrap_or_default()
    }

    fn remove(&mut self, keys: &[&str]) {
        for k in keys {
            self.entries.remove(*k);
        }
    }
}

fn load_config(flag: &Option<PathBuf>, env: Option<&Path>) -> Result<ConfigFile, Failure> {
    match flag.as_deref().or(env) {
        Some(path) => ConfigFile::load(path),
        None => Ok(ConfigFile::default()),
    }
}

/// Flag first, then config entry.
fn pick<T: FromStr>(flag: Option<T>, cfg: &ConfigFile, key: &str) -> Result<Option<T>, Failure> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => cfg.get(key),
    }
}

fn split_list(items: &[String]) -> Vec<String> {
    items
        .iter()
        .flat_map(|s| s.split(','))
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

struct Numeric {
    length: f64,
    levels: usize,
    quad: QuadratureConfig,
    basis: SineBasisConfig,
}

fn resolve_numeric(args: &NumericArgs, cfg: &ConfigFile) -> Result<Numeric, Failure> {
    let length = pick(args.length, cfg, "length")?.unwrap_or(1.0);
    if !(length.is_finite() && length > 0.0) {
        return Err(usage(format!("--length must be positive, got {length}")));
    }
    let levels = pick(args.levels, cfg, "levels")?.unwrap_or(10);
    if levels < 1 {
        return Err(usage("--levels must be at least 1"));
    }
    let mut quad = QuadratureConfig::default();
    if let Some(n) = pick(args.quad_nodes, cfg, "quad-nodes")? {
        quad.initial_nodes = n;
    }
    if let Some(t) = pick(args.quad_tol, cfg, "quad-tol")? {
        quad.rel_tol = t;
    }
    quad.validate()?;
    let basis = SineBasisConfig {
        basis_size: pick(args.basis_size, cfg, "basis-size")?.unwrap_or(400),
        quad,
    };
    Ok(Numeric {
        length,
        levels,
        quad,
        basis,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Family {
    Cot2,
    Pt,
}

/// Depth values still in their input convention.
struct DepthInput {
    family: Family,
    absolute: bool,
    first: Option<f64>,
    second: Option<f64>,
}

const DIMENSIONLESS_KEYS: [&str; 3] = ["v", "v1", "v2"];
const ABSOLUTE_KEYS: [&str; 3] = ["v0-absolute", "v01-absolute", "v02-absolute"];

fn resolve_depths(args: &WellArgs, cfg: &mut ConfigFile) -> Result<DepthInput, Failure> {
    let family = match pick(args.potential.clone(), cfg, "potential")?.as_deref() {
        Some("cot2") => Family::Cot2,
        Some("pt") => Family::Pt,
        Some(other) => return Err(usage(format!("unknown potential '{other}' (expected cot2 or pt)"))),
        None => return Err(usage("--potential is required (cot2 or pt)")),
    };
    let flag_dimless = args.v.is_some() || args.v1.is_some() || args.v2.is_some();
    let flag_abs = args.v0_absolute.is_some() || args.v01_absolute.is_some() || args.v02_absolute.is_some();
    if flag_dimless && flag_abs {
        return Err(usage(
            "dimensionless depths (--v, --v1, --v2) and absolute depths (--v*-absolute) cannot be mixed",
        ));
    }
    // a convention chosen on the command line replaces the other one from
    // the config file
    if flag_dimless {
        cfg.remove(&ABSOLUTE_KEYS);
    }
    if flag_abs {
        cfg.remove(&DIMENSIONLESS_KEYS);
    }
    let cfg_dimless = DIMENSIONLESS_KEYS.iter().any(|k| cfg.raw(k).is_some());
    let cfg_abs = ABSOLUTE_KEYS.iter().any(|k| cfg.raw(k).is_some());
    if cfg_dimless && cfg_abs {
        return Err(usage("config mixes dimensionless and absolute depths"));
    }
    let absolute = flag_abs || (!flag_dimless && cfg_abs);

    let (first, second) = match (family, absolute) {
        (Family::Cot2, false) => (pick(args.v, cfg, "v")?, None),
        (Family::Cot2, true) => (pick(args.v0_absolute, cfg, "v0-absolute")?, None),
        (Family::Pt, false) => (pick(args.v1, cfg, "v1")?, pick(args.v2, cfg, "v2")?),
        (Family::Pt, true) => (
            pick(args.v01_absolute, cfg, "v01-absolute")?,
            pick(args.v02_absolute, cfg, "v02-absolute")?,
        ),
    };
    let stray = match family {
        Family::Cot2 => {
            args.v1.is_some() || args.v2.is_some() || args.v01_absolute.is_some() || args.v02_absolute.is_some()
        }
        Family::Pt => args.v.is_some() || args.v0_absolute.is_some(),
    };
    if stray {
        return Err(usage("depth flags do not match the chosen potential"));
    }
    Ok(DepthInput {
        family,
        absolute,
        first,
        second,
    })
}

fn build_spec(d: &DepthInput, length: f64) -> Result<PotentialSpec, Failure> {
    let missing = |name: &str| usage(format!("missing depth {name}"));
    let spec = match (d.family, d.absolute) {
        (Family::Cot2, false) => from_dimensionless(Depths::Single { v: d.first.ok_or_else(|| missing("--v"))? }, length)?,
        (Family::Cot2, true) => PotentialSpec::cot_squared(d.first.ok_or_else(|| missing("--v0-absolute"))?, length)?,
        (Family::Pt, false) => from_dimensionless(
            Depths::Pair {
                v1: d.first.ok_or_else(|| missing("--v1"))?,
                v2: d.second.ok_or_else(|| missing("--v2"))?,
            },
            length,
        )?,
        (Family::Pt, true) => PotentialSpec::poschl_teller(
            d.first.ok_or_else(|| missing("--v01-absolute"))?,
            d.second.ok_or_else(|| missing("--v02-absolute"))?,
            length,
        )?,
    };
    Ok(spec)
}

fn resolve_format(args: &WellArgs, cfg: &ConfigFile) -> Result<Format, Failure> {
    match args.format.clone().or_else(|| cfg.raw("format").map(String::from)) {
        Some(s) => s.parse().map_err(usage),
        None => Ok(Format::Csv),
    }
}

fn resolve_methods(args: &WellArgs, cfg: &ConfigFile) -> Result<MethodSet, Failure> {
    let names = if args.method.is_empty() {
        cfg.list("method")
    } else {
        split_list(&args.method)
    };
    if names.is_empty() {
        return Ok(MethodSet {
            swkb_closed: true,
            ..MethodSet::EXACT_ONLY
        });
    }
    let mut set = MethodSet::EXACT_ONLY;
    for name in names {
        match name.as_str() {
            "exact" => {}
            "swkb" | "swkb-closed" => set.swkb_closed = true,
            "swkb-numeric" => set.swkb_numeric = true,
            "wkb" => set.wkb = true,
            "oracle" => set.oracle = true,
            "all" => set = MethodSet::ALL,
            other => {
                return Err(usage(format!(
                    "unknown method '{other}' (expected exact, swkb, swkb-closed, swkb-numeric, wkb, oracle or all)"
                )))
            }
        }
    }
    Ok(set)
}

fn wkb_note(err: &mut dyn Write, spec: &PotentialSpec) {
    let _ = writeln!(
        err,
        "note: WKB unavailable for {} (a vanishing depth puts the turning points on the walls)",
        crate::verify::describe(spec)
    );
}

fn cmd_table(args: &WellArgs, env: Option<&Path>, compare: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let mut cfg = load_config(&args.numeric.config, env)?;
    let num = resolve_numeric(&args.numeric, &cfg)?;
    let depths = resolve_depths(args, &mut cfg)?;
    let spec = build_spec(&depths, num.length)?;
    let format = resolve_format(args, &cfg)?;
    let methods = if compare { MethodSet::ALL } else { resolve_methods(args, &cfg)? };
    let table = build_table(&spec, num.levels - 1, methods, &num.quad, &num.basis)?;
    if table.wkb_unavailable {
        wkb_note(err, &spec);
    }
    emit(out, &spectrum_table(&table).render(format))
}

fn cmd_wavefunction(
    args: &WellArgs,
    samples: Option<usize>,
    env: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut cfg = load_config(&args.numeric.config, env)?;
    let num = resolve_numeric(&args.numeric, &cfg)?;
    let depths = resolve_depths(args, &mut cfg)?;
    let spec = build_spec(&depths, num.length)?;
    let format = resolve_format(args, &cfg)?;
    let samples = pick(samples, &cfg, "samples")?.unwrap_or(101);
    if samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    let sp = spec.superpotential();
    let gs = normalize_ground_state(&sp, &num.quad)?;
    let length = spec.length();
    let rows = (0..samples)
        .map(|i| {
            let x = if i + 1 == samples {
                length
            } else {
                length * i as f64 / (samples - 1) as f64
            };
            Ok(vec![Cell::Num(x), Cell::Num(eval_ground_state(&gs, x)?)])
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut spec_echo = spec_cells(&spec);
    spec_echo.push(("E0".into(), Cell::Num(sp.ground_state_energy())));
    spec_echo.push(("norm".into(), Cell::Num(gs.norm)));
    let table = Table {
        spec: spec_echo,
        columns: vec!["x".into(), "psi0".into()],
        rows,
    };
    emit(out, &table.render(format))
}

struct SweepRange {
    from: Option<f64>,
    to: Option<f64>,
    steps: Option<usize>,
    vary: Option<String>,
}

fn cmd_sweep(
    args: &WellArgs,
    range: SweepRange,
    env: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let cfg = load_config(&args.numeric.config, env)?;
    let num = resolve_numeric(&args.numeric, &cfg)?;
    let format = resolve_format(args, &cfg)?;
    let from = pick(range.from, &cfg, "v-from")?.ok_or_else(|| usage("--v-from is required"))?;
    let to = pick(range.to, &cfg, "v-to")?.ok_or_else(|| usage("--v-to is required"))?;
    let steps = pick(range.steps, &cfg, "steps")?.unwrap_or(11);
    if steps < 2 {
        return Err(usage("--steps must be at least 2"));
    }
    if !(from >= 0.0 && to >= 0.0) {
        return Err(usage("sweep depths must be non-negative"));
    }
    let vary = pick(range.vary, &cfg, "vary")?.unwrap_or_else(|| "both".into());
    if args.v0_absolute.is_some() || args.v01_absolute.is_some() || args.v02_absolute.is_some() {
        return Err(usage("sweeps run over dimensionless depths; absolute depth flags are not accepted"));
    }
    // the swept depth need not be given; the fixed one must be
    let family = match pick(args.potential.clone(), &cfg, "potential")?.as_deref() {
        Some("cot2") => Family::Cot2,
        Some("pt") => Family::Pt,
        Some(other) => return Err(usage(format!("unknown potential '{other}' (expected cot2 or pt)"))),
        None => return Err(usage("--potential is required (cot2 or pt)")),
    };
    if family == Family::Cot2 && (args.v1.is_some() || args.v2.is_some()) {
        return Err(usage("depth flags do not match the chosen potential"));
    }
    let v1_fixed = pick(args.v1, &cfg, "v1")?;
    let v2_fixed = pick(args.v2, &cfg, "v2")?;

    let values: Vec<f64> = (0..steps)
        .map(|i| {
            if i + 1 == steps {
                to
            } else {
                from + (to - from) * i as f64 / (steps - 1) as f64
            }
        })
        .collect();
    let depths: Vec<Depths> = values
        .iter()
        .map(|&v| match family {
            Family::Cot2 => Ok(Depths::Single { v }),
            Family::Pt => match vary.as_str() {
                "both" => Ok(Depths::Pair { v1: v, v2: v }),
                "v1" => Ok(Depths::Pair {
                    v1: v,
                    v2: v2_fixed.ok_or_else(|| usage("--vary v1 needs a fixed --v2"))?,
                }),
                "v2" => Ok(Depths::Pair {
                    v1: v1_fixed.ok_or_else(|| usage("--vary v2 needs a fixed --v1"))?,
                    v2: v,
                }),
                other => Err(usage(format!("--vary must be v1, v2 or both, got '{other}'"))),
            },
        })
        .collect::<Result<_, Failure>>()?;

    let unit = infinite_well_energy(num.length, 1)?;
    let levels = num.levels;
    let blocks: Vec<(Vec<Vec<Cell>>, bool)> = depths
        .par_iter()
        .map(|&d| {
            let spec = from_dimensionless(d, num.length)?;
            let mut unavailable = false;
            let mut rows = Vec::with_capacity(levels);
            for n in 0..levels {
                let wkb = match solve_wkb_level(&spec, n, &num.quad) {
                    Ok(e) => Some(e / unit),
                    Err(Error::WallTurningPoints) => {
                        unavailable = true;
                        None
                    }
                    Err(e) => return Err(e),
                };
                let mut row = match d {
                    Depths::Single { v } => vec![Cell::Num(v)],
                    Depths::Pair { v1, v2 } => vec![Cell::Num(v1), Cell::Num(v2)],
                };
                row.extend([
                    Cell::Int(n),
                    Cell::Num(exact_energy(&spec, n) / unit),
                    Cell::Num(swkb_energy_closed(&spec, n) / unit),
                    wkb.into(),
                ]);
                rows.push(row);
            }
            Ok((rows, unavailable))
        })
        .collect::<Result<_, Error>>()?;

    let mut columns: Vec<String> = match family {
        Family::Cot2 => vec!["v".into()],
        Family::Pt => vec!["v1".into(), "v2".into()],
    };
    columns.extend(["n", "eps_exact", "eps_swkb", "eps_wkb"].map(String::from));
    let mut spec_echo = vec![(
        "potential".to_string(),
        Cell::Text(match family {
            Family::Cot2 => "cot2".into(),
            Family::Pt => "pt".into(),
        }),
    )];
    if family == Family::Pt {
        spec_echo.push(("vary".into(), Cell::Text(vary.clone())));
    }
    spec_echo.push(("length".into(), Cell::Num(num.length)));
    if blocks.iter().any(|b| b.1) {
        let _ = writeln!(
            err,
            "note: WKB unavailable where a depth vanishes (turning points on the walls); eps_wkb left empty"
        );
    }
    let table = Table {
        spec: spec_echo,
        columns,
        rows: blocks.into_iter().flat_map(|b| b.0).collect(),
    };
    emit(out, &table.render(format))
}

fn cmd_verify(args: &VerifyArgs, env: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = load_config(&args.numeric.config, env)?;
    let num = resolve_numeric(&args.numeric, &cfg)?;
    let skip = if args.skip.is_empty() {
        cfg.list("skip")
    } else {
        split_list(&args.skip)
    };
    let vcfg = VerifyConfig {
        length: num.length,
        levels: num.levels,
        quad: num.quad,
        basis: num.basis,
        skip,
        perturb_exact: pick(args.perturb_exact, &cfg, "perturb-exact")?.unwrap_or(0.0),
    };
    let outcomes = run_checks(&vcfg)?;
    let mut text = String::new();
    for c in &outcomes {
        text.push_str(&c.line());
        text.push('\n');
    }
    let failed: Vec<&str> = outcomes.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
    if failed.is_empty() {
        text.push_str(&format!("verify: all {} checks passed\n", outcomes.len()));
    } else {
        text.push_str(&format!(
            "verify: {} of {} checks failed: {}\n",
            failed.len(),
            outcomes.len(),
            failed.join(", ")
        ));
    }
    emit(out, &text)?;
    Ok(if failed.is_empty() { EXIT_OK } else { EXIT_VERIFY })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<i32, Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| usage(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. `env_config` stands in for `$WELLQUANT_CONFIG`.
pub fn run<I, S>(args: I, env_config: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Spectrum(a) => cmd_table(a, env_config, false, out, err),
        Command::Compare(a) => cmd_table(a, env_config, true, out, err),
        Command::Wavefunction { well, samples } => cmd_wavefunction(well, *samples, env_config, out),
        Command::Verify(a) => cmd_verify(a, env_config, out),
        Command::Sweep {
            well,
            v_from,
            v_to,
            steps,
            vary,
        } => cmd_sweep(
            well,
            SweepRange {
                from: *v_from,
                to: *v_to,
                steps: *steps,
                vary: vary.clone(),
            },
            env_config,
            out,
            err,
        ),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "numerical failure: {e}");
            EXIT_NUMERIC
        }
    }
}
