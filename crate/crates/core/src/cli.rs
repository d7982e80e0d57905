//! The `hall` command line.
//!
//! ```text
//! hall <classify|multiply|comultiply|verify|serre> --quiver <path|name> --q <prime>
//!      [--bound N] [--cache path] [--format text|json] [--jobs N] [--no-braiding]
//!      [--no-timestamp]
//! ```
//!
//! Exit codes: 0 success, 1 a check produced a counterexample, 2 usage, input or cache error,
//! 3 the request exceeds the dimension bound or is infeasible to enumerate.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{ClassRegistry, DEFAULT_DIM_BOUND};
use crate::error::{Error, Result};
use crate::gfq::Prime;
use crate::hall::{Braiding, HallAlgebra};
use crate::quiver::Quiver;
use crate::verify::{self, Suite, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hall",
    version,
    about = "Exact Hall algebras of Dynkin quivers over F_q"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Built-in quiver name (a1..a8, d4..d8, e6, e7, e8) or path to a quiver JSON file.
    #[arg(long, global = true)]
    pub quiver: Option<String>,

    /// Prime field size.
    #[arg(long = "q", global = true, default_value_t = 2)]
    pub q: u32,

    /// Largest total dimension to classify.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_BOUND)]
    pub bound: usize,

    /// Subobject-count cache; loaded if present and rewritten after the run.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Use the symmetric (unbraided) flip in `H ⊗ H`.
    #[arg(long, global = true)]
    pub no_braiding: bool,

    /// Omit timestamps and timings so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the isomorphism classes up to the bound.
    Classify,
    /// Hall product of two classes, given by label.
    Multiply { m: String, n: String },
    /// Coproduct of a class, given by label.
    Comultiply { e: String },
    /// Run a verification sweep: green, bialgebra, antipode, hexagon, serre, euler,
    /// associativity, or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Quantum Serre relations (quivers of type A_2).
    Serre,
}

/// Runs the CLI in-process and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Malformed(format!("cannot start {n} workers: {e}"))),
        },
        None => execute(&cli),
    };
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } | Error::Infeasible(_) => EXIT_INFEASIBLE,
        _ => EXIT_ERROR,
    }
}

struct Outcome {
    text: String,
    code: i32,
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let quiver_arg = cli
        .quiver
        .as_deref()
        .ok_or_else(|| Error::Malformed("--quiver is required".into()))?;
    let q = cli.q;
    let quiver = Quiver::load(quiver_arg)?;
    let prime = Prime::new(q)?;
    let registry = ClassRegistry::build(quiver.into(), prime, cli.bound)?;
    let mut h = HallAlgebra::from_registry(registry.into());
    if cli.no_braiding {
        h = h.with_braiding(Braiding::Trivial);
    }
    if let Some(path) = &cli.cache {
        cache_load(&h, path)?;
    }

    let (result, text, reports) = match &cli.command {
        Command::Classify => classify(&h),
        Command::Multiply { m, n } => {
            let v = h.multiply(&h.basis_by_label(m)?, &h.basis_by_label(n)?)?;
            terms_output(h.render(&v))
        }
        Command::Comultiply { e } => {
            let t = h.comultiply(&h.basis_by_label(e)?)?;
            terms_output(h.render_tensor(&t))
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            reports_output(verify::run_suite(&h, suite)?, !cli.no_timestamp)
        }
        Command::Serre => reports_output(verify::verify_serre(&h)?, !cli.no_timestamp),
    };

    if let Some(path) = &cli.cache {
        cache_store(&h, path)?;
    }

    let failures = reports.iter().filter(|r| !r.passed()).count();
    let computed = h.table().computed_count();
    let code = if failures > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    };

    let text = match cli.format {
        Format::Text => {
            let mut s = text;
            s.push_str(&format!(
                "summary: quiver={} q={} bound={} checks={} counterexamples={} hall_profiles_computed={}\n",
                h.registry().quiver().describe(),
                h.q(),
                h.registry().bound(),
                reports.len(),
                failures,
                computed
            ));
            if !cli.no_timestamp {
                s.push_str(&format!("generated_at: {}\n", unix_time()));
            }
            s
        }
        Format::Json => {
            let mut doc = json!({
                "command": command_name(&cli.command),
                "quiver": h.registry().quiver().spec(),
                "q": h.q(),
                "bound": h.registry().bound(),
                "braiding": if cli.no_braiding { "trivial" } else { "euler" },
                "result": result,
                "summary": {
                    "checks": reports.len(),
                    "counterexamples": failures,
                    "hall_profiles_computed": computed,
                },
            });
            if !cli.no_timestamp {
                doc["generated_at"] = json!(unix_time());
            }
            serde_json::to_string_pretty(&doc)? + "\n"
        }
    };
    Ok(Outcome { text, code })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify => "classify",
        Command::Multiply { .. } => "multiply",
        Command::Comultiply { .. } => "comultiply",
        Command::Verify { .. } => "verify",
        Command::Serre => "serre",
    }
}

fn unix_time() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

type Rendered = (Value, String, Vec<VerificationReport>);

fn classify(h: &HallAlgebra) -> Rendered {
    let reg = h.registry();
    let header = ["id", "dim", "aut", "orbit", "indecomposable"];
    let rows: Vec<[String; 5]> = reg
        .classes()
        .iter()
        .map(|c| {
            [
                c.label.clone(),
                c.dims.to_string(),
                c.aut_order.to_string(),
                c.orbit_size.to_string(),
                if c.indecomposable { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
            + "\n"
    };
    let mut text = fmt_row(header.to_vec());
    for row in &rows {
        text.push_str(&fmt_row(row.iter().map(String::as_str).collect()));
    }
    let json = Value::Array(
        reg.classes()
            .iter()
            .map(|c| {
                json!({
                    "id": c.label,
                    "dim": c.dims.0,
                    "aut": c.aut_order.to_string(),
                    "orbit": c.orbit_size.to_string(),
                    "indecomposable": c.indecomposable,
                })
            })
            .collect(),
    );
    (json, text, Vec::new())
}

fn terms_output(terms: Vec<(String, String)>) -> Rendered {
    let mut text = String::new();
    for (k, v) in &terms {
        text.push_str(&format!("{k}: {v}\n"));
    }
    if terms.is_empty() {
        text.push_str("0\n");
    }
    let json = Value::Array(terms.iter().map(|(k, v)| json!([k, v])).collect());
    (json, text, Vec::new())
}

fn reports_output(mut reports: Vec<VerificationReport>, timing: bool) -> Rendered {
    if !timing {
        for r in &mut reports {
            r.elapsed_us = None;
        }
    }
    let text = verify::render_text(&reports, timing);
    let json = serde_json::to_value(&reports).unwrap_or(Value::Null);
    (json, text, reports)
}

/// Loads a cache file into the algebra's table if the file exists.
pub fn cache_load(h: &HallAlgebra, path: &Path) -> Result<usize> {
    match std::fs::read_to_string(path) {
        Ok(text) => h.load_table_json(&text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(0),
        Err(e) => Err(e.into()),
    }
}

/// Writes the algebra's table to `path` via a temporary file and rename.
pub fn cache_store(h: &HallAlgebra, path: &Path) -> Result<()> {
    let text = h.table_json()?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hall").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn multiply_text() {
        let (code, out, _) = run_str(&[
            "multiply",
            "(1,0)",
            "(0,1)",
            "--quiver",
            "a2",
            "--q",
            "2",
            "--bound",
            "2",
            "--no-timestamp",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("(1,0)+(0,1): 1\n(1,1): 1\n"), "{out}");
    }

    #[test]
    fn comultiply_zero() {
        let (code, out, _) = run_str(&[
            "comultiply",
            "0",
            "--quiver",
            "a2",
            "--q",
            "2",
            "--no-timestamp",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("0 ⊗ 0: 1\n"), "{out}");
    }

    #[test]
    fn error_codes() {
        assert_eq!(run_str(&["classify", "--q", "2"]).0, EXIT_ERROR);
        assert_eq!(
            run_str(&["classify", "--quiver", "a2", "--q", "4"]).0,
            EXIT_ERROR
        );
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_ERROR);
        let (code, _, err) = run_str(&[
            "multiply", "(1,1)", "(1,1)", "--quiver", "a2", "--q", "2", "--bound", "3",
        ]);
        assert_eq!(code, EXIT_INFEASIBLE, "{err}");
    }

    #[test]
    fn serre_requires_a2() {
        let (code, _, _) = run_str(&["serre", "--quiver", "a3", "--q", "2", "--bound", "3"]);
        assert_eq!(code, EXIT_ERROR);
    }
}
