//! Deterministic text output: CSV, JSON and aligned plain tables.
//!
//! Every real number goes through [`sig12`], which prints twelve
//! significant digits with a `.` separator and no locale dependence.

use serde_json::{Map, Number, Value};

use crate::potentials::Well;
use crate::spectra::{dimensionless_params, Depths, LevelMethod, SpectrumTable};

/// Significant digits in every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// `%.12g`: fixed notation for decimal exponents in `[-5, 12)`, scientific
/// otherwise, trailing zeros trimmed.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let mantissa = trim_zeros(mantissa.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to twelve significant digits.
pub fn round12(x: f64) -> f64 {
    sig12(x).parse().unwrap_or(x)
}

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "plain" => Ok(Self::Plain),
            other => Err(format!("unknown format '{other}' (expected csv, json or plain)")),
        }
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(usize),
    Num(f64),
    Text(String),
    Missing,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => sig12(*x),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Num(x) => Number::from_f64(round12(*x)).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Num)
    }
}

/// A header echo plus named columns.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub spec: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Plain => self.to_plain(),
        }
    }

    /// Header row, comma separated, LF endings. Missing values are empty.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::text).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"spec": {...}, "rows": [...]}` with keys in column order.
    pub fn to_json(&self) -> String {
        let mut spec = Map::new();
        for (k, v) in &self.spec {
            spec.insert(k.clone(), v.json());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (k, v) in self.columns.iter().zip(row) {
                    obj.insert(k.clone(), v.json());
                }
                Value::Object(obj)
            })
            .collect();
        let mut root = Map::new();
        root.insert("spec".into(), Value::Object(spec));
        root.insert("rows".into(), Value::Array(rows));
        let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("json");
        s.push('\n');
        s
    }

    /// `# key = value` preamble and right-aligned columns.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.spec {
            out.push_str(&format!("# {k} = {}\n", v.text()));
        }
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| match c {
                Cell::Missing => "-".to_string(),
                c => c.text(),
            }).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, h)| body.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            padded.join("  ") + "\n"
        };
        out.push_str(&line(&self.columns));
        for row in &body {
            out.push_str(&line(row));
        }
        out
    }
}

/// Spec echo shared by every command.
pub fn spec_cells(spec: &crate::potentials::PotentialSpec) -> Vec<(String, Cell)> {
    let mut cells = Vec::new();
    match spec.well() {
        Well::CotSquared { v0 } => {
            cells.push(("potential".into(), Cell::Text("cot2".into())));
            if let Depths::Single { v } = dimensionless_params(spec) {
                cells.push(("v".into(), Cell::Num(v)));
            }
            cells.push(("v0".into(), Cell::Num(v0)));
        }
        Well::PoschlTeller { v01, v02 } => {
            cells.push(("potential".into(), Cell::Text("pt".into())));
            if let Depths::Pair { v1, v2 } = dimensionless_params(spec) {
                cells.push(("v1".into(), Cell::Num(v1)));
                cells.push(("v2".into(), Cell::Num(v2)));
            }
            cells.push(("v01".into(), Cell::Num(v01)));
            cells.push(("v02".into(), Cell::Num(v02)));
        }
    }
    cells.push(("length".into(), Cell::Num(spec.length())));
    cells
}

/// Columns: `n, p, v | v1, v2, E_exact, E_swkb_closed, E_swkb_numeric,
/// E_wkb, E_oracle, dev_swkb, dev_wkb, dev_oracle`.
pub fn spectrum_table(table: &SpectrumTable) -> Table {
    let depths = table.depths();
    let mut columns: Vec<String> = vec!["n".into(), "p".into()];
    let depth_cells: Vec<Cell> = match depths {
        Depths::Single { v } => {
            columns.push("v".into());
            vec![Cell::Num(v)]
        }
        Depths::Pair { v1, v2 } => {
            columns.extend(["v1".into(), "v2".into()]);
            vec![Cell::Num(v1), Cell::Num(v2)]
        }
    };
    columns.extend(
        [
            "E_exact",
            "E_swkb_closed",
            "E_swkb_numeric",
            "E_wkb",
            "E_oracle",
            "dev_swkb",
            "dev_wkb",
            "dev_oracle",
        ]
        .map(String::from),
    );

    let rows = table
        .rows
        .iter()
        .map(|row| {
            let mut cells = vec![Cell::Int(row.n), Cell::Int(row.p)];
            cells.extend(depth_cells.iter().cloned());
            cells.push(row.energy(LevelMethod::Exact).into());
            cells.push(row.energy(LevelMethod::SwkbClosed).into());
            cells.push(row.energy(LevelMethod::SwkbNumeric).into());
            cells.push(row.energy(LevelMethod::WkbNumeric).into());
            cells.push(row.energy(LevelMethod::Oracle).into());
            cells.push(row.swkb_deviation().into());
            cells.push(row.deviation(LevelMethod::WkbNumeric).into());
            cells.push(row.deviation(LevelMethod::Oracle).into());
            cells
        })
        .collect();

    let mut spec = spec_cells(&table.spec);
    spec.push((
        "wkb".into(),
        Cell::Text(if table.wkb_unavailable { "unavailable" } else { "available" }.into()),
    ));
    Table {
        spec,
        columns,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(-2.5), "-2.5");
        assert_eq!(sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig12(19.739208802178716), "19.7392088022");
        assert_eq!(sig12(1e-7), "1e-07");
        assert_eq!(sig12(1.234e15), "1.234e+15");
        assert_eq!(sig12(0.000123456789012345), "0.000123456789012");
        assert_eq!(sig12(999999999999.9), "1e+12");
    }

    #[test]
    fn rounding_is_idempotent() {
        for x in [1.0 / 3.0, 2.0f64.sqrt() * 1e8, -7.123456789012345e-9] {
            let r = round12(x);
            assert_eq!(round12(r), r);
            assert!((r - x).abs() <= 1e-11 * x.abs());
        }
    }

    #[test]
    fn csv_json_plain() {
        let t = Table {
            spec: vec![("potential".into(), Cell::Text("cot2".into()))],
            columns: vec!["n".into(), "E".into(), "dev".into()],
            rows: vec![vec![Cell::Int(0), Cell::Num(1.5), Cell::Missing]],
        };
        assert_eq!(t.to_csv(), "n,E,dev\n0,1.5,\n");
        let json: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(json["spec"]["potential"], "cot2");
        assert_eq!(json["rows"][0]["E"], 1.5);
        assert!(json["rows"][0]["dev"].is_null());
        let keys: Vec<&String> = json["rows"][0].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["n", "E", "dev"]);
        assert!(t.to_plain().contains("# potential = cot2"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }
}
