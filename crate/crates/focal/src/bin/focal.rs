//! Thin command-line driver: `verify` runs a reproduction suite
//! symbolically, `run` evaluates one scenario at chosen parameter values,
//! `table` sweeps a parameter and tabulates the results.

use clap::{Parser, Subcommand, ValueEnum};
use focal::exact::Rat;
use focal::report::{
    builtin_table_bindings, cmd_run, cmd_table, cmd_verify, render_json, render_table_csv,
    render_table_json, render_table_text, render_text,
};
use focal::scenarios::{Bindings, CertConfig, Suite};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "focal",
    version,
    about = "Exact intersection-theory verification suite for focal surfaces of line congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite symbolically and adjudicate every claimed identity.
    Verify {
        /// all | focal | jets | bisecants | tangency | plucker
        #[arg(default_value = "all")]
        suite_name: String,
        /// Same as the positional suite name.
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one scenario at given parameter bindings (unbound parameters
    /// stay symbolic).
    Run {
        scenario: String,
        /// Bindings like `a=2 b=2 g=1 k2=4 chi=1`; values are exact
        /// rationals (`1/2` is fine).
        bindings: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep an integer parameter (e.g. `d=4..10`) and tabulate the
    /// scenario's results; without a sweep, tabulate the built-in examples.
    Table {
        scenario: String,
        /// Sweep of the form `name=lo..hi` (inclusive).
        sweep: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(text: String, out: Option<PathBuf>) -> ExitCode {
    match out {
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(&path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::FAILURE
            }
        },
    }
}

fn parse_bindings(items: &[String]) -> Result<Bindings, String> {
    let mut out = Bindings::new();
    for item in items {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("malformed binding `{item}` (expected name=value)"))?;
        let value =
            Rat::from_str(value.trim()).map_err(|e| format!("malformed binding `{item}`: {e}"))?;
        out.insert(name.trim().to_string(), value);
    }
    Ok(out)
}

fn parse_sweep(spec: &str) -> Result<(String, i64, i64), String> {
    let (name, range) = spec
        .split_once('=')
        .ok_or_else(|| format!("malformed sweep `{spec}` (expected name=lo..hi)"))?;
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| format!("malformed sweep `{spec}` (expected name=lo..hi)"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("malformed sweep bound `{lo}`"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("malformed sweep bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("reversed sweep bounds {lo}..{hi}"));
    }
    Ok((name.trim().to_string(), lo, hi))
}

fn cert_config() -> CertConfig {
    let mut cfg = CertConfig::default();
    if let Ok(value) = std::env::var("FOCAL_SAMPLES") {
        if let Ok(n) = value.parse::<usize>() {
            cfg.min_samples = cfg.min_samples.max(n);
        }
    }
    cfg
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = cert_config();
    match cli.command {
        Command::Verify {
            suite_name,
            suite,
            format,
            out,
        } => {
            let name = suite.unwrap_or(suite_name);
            let suite = match Suite::from_str(&name) {
                Ok(s) => s,
                Err(e) => return usage_error(&e.to_string()),
            };
            let doc = match cmd_verify(suite, &cfg) {
                Ok(d) => d,
                Err(e) => return usage_error(&e.to_string()),
            };
            let text = match format {
                Format::Text => render_text(&doc),
                Format::Json => render_json(&doc),
                Format::Csv => return usage_error("verify supports text or json output"),
            };
            let passed = doc.passed();
            let code = emit(text, out);
            if code == ExitCode::SUCCESS && !passed {
                return ExitCode::FAILURE;
            }
            code
        }
        Command::Run {
            scenario,
            bindings,
            format,
            out,
        } => {
            let bindings = match parse_bindings(&bindings) {
                Ok(b) => b,
                Err(e) => return usage_error(&e),
            };
            let doc = match cmd_run(&scenario, &bindings, &cfg) {
                Ok(d) => d,
                Err(e) => return usage_error(&e.to_string()),
            };
            let text = match format {
                Format::Text => render_text(&doc),
                Format::Json => render_json(&doc),
                Format::Csv => return usage_error("run supports text or json output"),
            };
            let passed = doc.passed();
            let code = emit(text, out);
            if code == ExitCode::SUCCESS && !passed {
                return ExitCode::FAILURE;
            }
            code
        }
        Command::Table {
            scenario,
            sweep,
            format,
            out,
        } => {
            let bindings_list = match sweep {
                Some(spec) => {
                    let (name, lo, hi) = match parse_sweep(&spec) {
                        Ok(t) => t,
                        Err(e) => return usage_error(&e),
                    };
                    (lo..=hi)
                        .map(|v| {
                            let mut b = Bindings::new();
                            b.insert(name.clone(), Rat::from_int(v));
                            b
                        })
                        .collect()
                }
                None => {
                    let builtin = builtin_table_bindings(&scenario);
                    if builtin.is_empty() {
                        return usage_error(&format!("unknown scenario `{scenario}`"));
                    }
                    builtin
                }
            };
            let doc = match cmd_table(&scenario, bindings_list, &cfg) {
                Ok(d) => d,
                Err(e) => return usage_error(&e.to_string()),
            };
            let text = match format {
                Format::Csv => render_table_csv(&doc),
                Format::Json => render_table_json(&doc),
                Format::Text => render_table_text(&doc),
            };
            emit(text, out)
        }
    }
}
