//! Command-line surface.
//!
//! Four subcommands: `table` prints a triangle, `sequence` extracts a
//! vector from one (column, row sums, diagonal, or a matrix-vector
//! product), `sheffer` evaluates the row polynomials at a point, and
//! `verify` runs named identity checks.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or
//! parse error.

pub mod output;
pub mod spec;

use std::fs;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exact::{BigInt, Ratio, Ring};
use crate::identities::{self, IdentityReport};
use crate::riordan::Triangle;
use crate::sheffer::ShefferSeq;
use output::{
    report_text, reports_json, sequence_bfile, sequence_csv, sequence_json, sequence_text,
    triangle_bfile, triangle_csv, triangle_json, triangle_text, Cell,
};
use spec::{build_array, parse_ratio, parse_spec, ArrayValue};

/// Triangles take quadratic memory; depths beyond this need an explicit
/// override.
const DEPTH_CAP: usize = 512;

#[derive(Parser, Debug)]
#[command(
    name = "catalan-arrays",
    version,
    about = "Exact Riordan-array triangles, Sheffer sequences, and identity verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a triangle
    Table {
        /// Array spec: catalan, shapiro[2], pascal[-1/3], catalan[r],
        /// inv(...), mul(..., ...)
        spec: String,
        /// Largest row index (inclusive)
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Index of the first b-file line
        #[arg(long, default_value_t = 0)]
        offset: i64,
        /// Raise the safety cap on --depth (default 512)
        #[arg(long, value_name = "N")]
        max_depth: Option<usize>,
    },
    /// Extract a sequence from a triangle
    Sequence {
        /// Array spec: catalan, shapiro[2], pascal[-1/3], catalan[r],
        /// inv(...), mul(..., ...)
        spec: String,
        #[command(flatten)]
        transform: TransformArgs,
        /// Largest row index (inclusive)
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Index of the first b-file line
        #[arg(long, default_value_t = 0)]
        offset: i64,
        /// Raise the safety cap on --depth (default 512)
        #[arg(long, value_name = "N")]
        max_depth: Option<usize>,
    },
    /// Evaluate the row polynomials p_n(x) = sum_k T(n,k) x^k
    Sheffer {
        /// Array spec: catalan, shapiro[2], pascal[-1/3], inv(...),
        /// mul(..., ...)
        spec: String,
        /// Evaluation point: an integer or a fraction p/q
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Multiply the n-th value by (-1)^n
        #[arg(long)]
        signed_flip: bool,
        /// Largest polynomial index (inclusive)
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Index of the first b-file line
        #[arg(long, default_value_t = 0)]
        offset: i64,
        /// Raise the safety cap on --depth (default 512)
        #[arg(long, value_name = "N")]
        max_depth: Option<usize>,
    },
    /// Run identity checks; "all" runs the whole catalog
    Verify {
        /// Check name, or "all"
        name: String,
        /// Verification depth (inclusive)
        #[arg(long, default_value_t = 30)]
        depth: usize,
        /// Family parameter for checks that take one
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        /// Evaluation point for checks that take one
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Human)]
        format: ReportFormat,
        /// Raise the safety cap on --depth (default 512)
        #[arg(long, value_name = "N")]
        max_depth: Option<usize>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct TransformArgs {
    /// One column, read downward from its diagonal entry
    #[arg(long, value_name = "K")]
    pub column: Option<usize>,
    /// Sum each row
    #[arg(long)]
    pub row_sums: bool,
    /// Main diagonal
    #[arg(long)]
    pub diagonal: bool,
    /// Multiply the triangle into a comma-separated integer vector
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub apply: Option<String>,
    /// Multiply the triangle into a vector read from a JSON file
    #[arg(long, value_name = "PATH")]
    pub apply_file: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
    Bfile,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Human,
    Json,
}

/// Executes a parsed command line. `Ok` carries the process exit code;
/// `Err` is a usage problem the caller should report on stderr (exit 2).
pub fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Table {
            spec: text,
            depth,
            format,
            offset,
            max_depth,
        } => {
            check_depth(*depth, *max_depth)?;
            let ast = parse_spec(text)?;
            let out = match build_array(&ast, *depth)? {
                ArrayValue::Int(a) => render_triangle(&a.to_triangle(text.as_str()), text, *format, *offset)?,
                ArrayValue::Rat(a) => render_triangle(&a.to_triangle(text.as_str()), text, *format, *offset)?,
                ArrayValue::Poly(a) => render_triangle(&a.to_triangle(text.as_str()), text, *format, *offset)?,
            };
            print!("{out}");
            Ok(0)
        }
        Command::Sequence {
            spec: text,
            transform,
            depth,
            format,
            offset,
            max_depth,
        } => {
            check_depth(*depth, *max_depth)?;
            let ast = parse_spec(text)?;
            let out = match build_array(&ast, *depth)? {
                ArrayValue::Int(a) => {
                    render_sequence(&a.to_triangle(text.as_str()), text, transform, *format, *offset)?
                }
                ArrayValue::Rat(a) => {
                    render_sequence(&a.to_triangle(text.as_str()), text, transform, *format, *offset)?
                }
                ArrayValue::Poly(a) => {
                    render_sequence(&a.to_triangle(text.as_str()), text, transform, *format, *offset)?
                }
            };
            print!("{out}");
            Ok(0)
        }
        Command::Sheffer {
            spec: text,
            x,
            signed_flip,
            depth,
            format,
            offset,
            max_depth,
        } => {
            check_depth(*depth, *max_depth)?;
            let ast = parse_spec(text)?;
            let point = parse_ratio(x).map_err(|e| format!("invalid --x: {e}"))?;
            let triangle: Triangle<Ratio> = match build_array(&ast, *depth)? {
                ArrayValue::Int(a) => a
                    .map(|v| Ratio::from_integer(v.clone()))
                    .to_triangle(text.as_str()),
                ArrayValue::Rat(a) => a.to_triangle(text.as_str()),
                ArrayValue::Poly(_) => {
                    return Err(
                        "polynomial entries cannot be evaluated at a point; \
                         replace the symbol r with a number"
                            .into(),
                    )
                }
            };
            let mut values = ShefferSeq::from_triangle(&triangle).values(&point);
            if *signed_flip {
                for (n, v) in values.iter_mut().enumerate() {
                    if n % 2 == 1 {
                        *v = Ring::neg(v);
                    }
                }
            }
            let transform = if *signed_flip {
                format!("sheffer x={x} signed-flip")
            } else {
                format!("sheffer x={x}")
            };
            let out = match format {
                Format::Text => sequence_text(&values),
                Format::Csv => sequence_csv(&values),
                Format::Json => sequence_json(text, &transform, *depth, &values),
                Format::Bfile => sequence_bfile(&values, *offset)?,
            };
            print!("{out}");
            Ok(0)
        }
        Command::Verify {
            name,
            depth,
            r,
            x,
            format,
            max_depth,
        } => {
            check_depth(*depth, *max_depth)?;
            let reports = select_checks(name, *depth, r.as_deref(), x.as_deref())?;
            match format {
                ReportFormat::Human => {
                    let mut out = String::new();
                    for report in &reports {
                        out.push_str(&report_text(report));
                    }
                    let passed = reports.iter().filter(|r| r.passed()).count();
                    out.push_str(&format!("{passed}/{} checks passed\n", reports.len()));
                    print!("{out}");
                }
                ReportFormat::Json => print!("{}", reports_json(&reports)),
            }
            Ok(if identities::all_passed(&reports) { 0 } else { 1 })
        }
    }
}

fn check_depth(depth: usize, max_depth: Option<usize>) -> Result<(), String> {
    let cap = max_depth.unwrap_or(DEPTH_CAP);
    if depth > cap {
        return Err(format!(
            "depth {depth} exceeds the cap of {cap}; pass --max-depth {depth} to allow it"
        ));
    }
    Ok(())
}

fn render_triangle<C: Cell + Ring>(
    t: &Triangle<C>,
    spec: &str,
    format: Format,
    offset: i64,
) -> Result<String, String> {
    Ok(match format {
        Format::Text => triangle_text(t),
        Format::Csv => triangle_csv(t),
        Format::Json => triangle_json(spec, t),
        Format::Bfile => triangle_bfile(t, offset)?,
    })
}

fn render_sequence<C: Cell + Ring>(
    t: &Triangle<C>,
    spec: &str,
    transform: &TransformArgs,
    format: Format,
    offset: i64,
) -> Result<String, String> {
    let (description, values) = extract_values(t, transform)?;
    Ok(match format {
        Format::Text => sequence_text(&values),
        Format::Csv => sequence_csv(&values),
        Format::Json => sequence_json(spec, &description, t.depth(), &values),
        Format::Bfile => sequence_bfile(&values, offset)?,
    })
}

fn extract_values<C: Cell + Ring>(
    t: &Triangle<C>,
    transform: &TransformArgs,
) -> Result<(String, Vec<C>), String> {
    if let Some(k) = transform.column {
        if k > t.depth() {
            return Err(format!("column {k} exceeds depth {}", t.depth()));
        }
        return Ok((format!("column {k}"), t.column(k)));
    }
    if transform.row_sums {
        return Ok(("row-sums".into(), t.row_sums()));
    }
    if transform.diagonal {
        return Ok(("diagonal".into(), t.diagonal()));
    }
    let vector: Vec<BigInt> = if let Some(list) = &transform.apply {
        list.split(',')
            .map(|s| {
                let s = s.trim();
                BigInt::from_str(s).map_err(|_| format!("'{s}' is not an integer"))
            })
            .collect::<Result<_, _>>()?
    } else if let Some(path) = &transform.apply_file {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        vector_from_json(&text)?
    } else {
        unreachable!("clap requires exactly one transform")
    };
    let lifted: Vec<C> = vector.iter().map(|v| C::from_bigint(v)).collect();
    let image = t.apply(&lifted).map_err(|e| e.to_string())?;
    Ok(("apply".into(), image))
}

/// Accepts a bare JSON array of integers, an object with a `values`
/// array (the `sequence --format json` shape), or an object with `rows`
/// (the `table --format json` shape, from which column 0 is taken).
fn vector_from_json(text: &str) -> Result<Vec<BigInt>, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    if let Some(items) = value.as_array() {
        return items.iter().map(json_to_bigint).collect();
    }
    if let Some(items) = value.get("values").and_then(|v| v.as_array()) {
        return items.iter().map(json_to_bigint).collect();
    }
    if let Some(rows) = value.get("rows").and_then(|v| v.as_array()) {
        return rows
            .iter()
            .map(|row| {
                row.as_array()
                    .and_then(|r| r.first())
                    .ok_or_else(|| "malformed rows: expected non-empty arrays".to_string())
                    .and_then(json_to_bigint)
            })
            .collect();
    }
    Err("expected a JSON array, or an object with \"values\" or \"rows\"".into())
}

fn json_to_bigint(v: &serde_json::Value) -> Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => {
            let s = n.to_string();
            BigInt::from_str(&s).map_err(|_| format!("'{s}' is not an integer"))
        }
        serde_json::Value::String(s) => {
            BigInt::from_str(s).map_err(|_| format!("'{s}' is not an integer"))
        }
        other => Err(format!("expected an integer, found {other}")),
    }
}

type CheckFn = fn(usize) -> IdentityReport;

const SIMPLE_CHECKS: &[(&str, CheckFn)] = &[
    ("catalan-gf", identities::check_catalan_gf),
    ("ballot", identities::check_entry_formulas),
    ("binomial-sum", identities::check_binomial_sum),
    ("specialization", identities::check_specialization),
    ("pascal-additivity", identities::check_pascal_additivity),
    ("family-entries", identities::check_family_entries),
    ("family-inverse-entries", identities::check_family_inverse_entries),
    ("closed-form", identities::check_closed_form),
    ("inverse-closed-form", identities::check_inverse_closed_form),
    ("column-zero", identities::check_column_zero),
    ("fibonacci-pair", identities::check_fibonacci_pair),
    ("fib-power", identities::check_fib_power),
    ("fib-closed-forms", identities::check_fib_closed_forms),
    ("shapiro-recurrence", identities::check_shapiro_recurrence),
    ("basis", identities::check_basis),
    ("chebyshev", identities::check_chebyshev),
    ("gf", identities::check_gf),
    ("sheffer-shape", identities::check_sheffer_shape),
];

fn select_checks(
    name: &str,
    depth: usize,
    r: Option<&str>,
    x: Option<&str>,
) -> Result<Vec<IdentityReport>, String> {
    let no_r = || match r {
        Some(_) => Err(format!("check '{name}' does not take --r")),
        None => Ok(()),
    };
    let no_x = || match x {
        Some(_) => Err(format!("check '{name}' does not take --x")),
        None => Ok(()),
    };
    let parse_int = |flag: &str, s: &str| {
        BigInt::from_str(s).map_err(|_| format!("invalid {flag} '{s}': expected an integer"))
    };
    match name {
        "all" => {
            no_r()?;
            no_x()?;
            Ok(identities::run_all(depth))
        }
        "row-sums" => {
            no_x()?;
            Ok(match r {
                Some(s) => vec![identities::check_row_sums(&parse_int("--r", s)?, depth)],
                None => (-2..=3)
                    .map(|v| identities::check_row_sums(&BigInt::from(v), depth))
                    .collect(),
            })
        }
        "power" => {
            no_r()?;
            Ok(match x {
                Some(s) => vec![identities::check_power_sequences(&parse_int("--x", s)?, depth)],
                None => [2i64, 3, 4]
                    .iter()
                    .map(|&v| identities::check_power_sequences(&BigInt::from(v), depth))
                    .collect(),
            })
        }
        "shift" => Ok(match (r, x) {
            (None, None) => [(1i64, 0i64), (0, 0), (2, -1)]
                .iter()
                .map(|&(a, b)| {
                    identities::check_shift(&Ratio::from_int(a), &Ratio::from_int(b), depth)
                })
                .collect(),
            _ => {
                let rv = r
                    .map(parse_ratio)
                    .transpose()
                    .map_err(|e| format!("invalid --r: {e}"))?
                    .unwrap_or_else(|| Ratio::from_int(1));
                let xv = x
                    .map(parse_ratio)
                    .transpose()
                    .map_err(|e| format!("invalid --x: {e}"))?
                    .unwrap_or_else(|| Ratio::from_int(0));
                vec![identities::check_shift(&rv, &xv, depth)]
            }
        }),
        _ => {
            no_r()?;
            no_x()?;
            for (check_name, f) in SIMPLE_CHECKS {
                if *check_name == name {
                    return Ok(vec![f(depth)]);
                }
            }
            let known: Vec<&str> = std::iter::once("all")
                .chain(SIMPLE_CHECKS.iter().map(|(n, _)| *n))
                .chain(["row-sums", "power", "shift"])
                .collect();
            Err(format!(
                "unknown check '{name}'; available: {}",
                known.join(", ")
            ))
        }
    }
}
