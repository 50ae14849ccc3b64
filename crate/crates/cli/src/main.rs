//! `abelian-ideals`: inspect root systems, list abelian ideals, verify invariants.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use abelian_ideals::hasse::HasseGraph;
use abelian_ideals::ideals::IdealCatalog;
use abelian_ideals::report::{self, VerifyReport};
use abelian_ideals::young::{y_lattice, young_decode, young_encode, YoungDiagram};
use abelian_ideals::{RootSystemQ, SimpleType};
use anyhow::{Context, Result};
use clap::{ArgGroup, Parser, Subcommand};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "abelian-ideals", version, about = "Abelian ideals of Borel subalgebras, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan matrix, highest root and numerical invariants of a type.
    Info {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
        #[arg(long)]
        json: bool,
    },
    /// List every abelian ideal with its parameter.
    #[command(group(ArgGroup::new("format").args(["json", "text"])))]
    Ideals {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Run the invariant suite; exits with 1 if any check fails.
    #[command(group(ArgGroup::new("target").args(["ty", "all"]).required(true)))]
    Verify {
        #[arg(value_name = "TYPE")]
        ty: Option<SimpleType>,
        /// Every type up to --max-rank.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write the Hasse graph in DOT format ("-" for standard output).
    Hasse {
        #[arg(value_name = "TYPE")]
        ty: SimpleType,
        #[arg(long, value_name = "PATH")]
        dot: PathBuf,
    },
    /// Maximal dimensions, Poincare quotients and sum formulas per type.
    Tables {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
    },
    /// Young diagrams of Y_{l+1} and their rim codes.
    #[command(group(ArgGroup::new("mode").args(["encode", "decode", "list"])))]
    Young {
        /// Rank of the type A root system.
        l: usize,
        /// Encode a diagram given by comma-separated row lengths.
        #[arg(long, value_name = "ROWS")]
        encode: Option<String>,
        /// Decode a rim code.
        #[arg(long, value_name = "CODE")]
        decode: Option<u64>,
        /// List every diagram with its code (the default).
        #[arg(long)]
        list: bool,
    },
    /// Replay the A11 galleries against the tabulated rho-point differences.
    Golden {
        #[arg(long)]
        json: bool,
    },
}

enum Outcome {
    Success,
    ChecksFailed,
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn parse_rows(s: &str) -> Result<YoungDiagram, String> {
    let rows: Vec<usize> = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad row length {t:?}: {e}")))
            .collect::<Result<_, _>>()?
    };
    YoungDiagram::new(rows).map_err(|e| e.to_string())
}

fn run(cmd: Command, out: &mut impl Write) -> Result<Outcome> {
    match cmd {
        Command::Info { ty, json } => {
            let info = report::type_info(&RootSystemQ::build(ty));
            if json {
                out.write_all(to_json(&info)?.as_bytes())?;
            } else {
                out.write_all(info.to_text().as_bytes())?;
            }
        }
        Command::Ideals { ty, json, .. } => {
            let rs = RootSystemQ::build(ty);
            let cat = IdealCatalog::build(&rs)?;
            if json {
                out.write_all(to_json(&report::ideals_json(&cat))?.as_bytes())?;
            } else {
                out.write_all(report::ideals_text(&cat).as_bytes())?;
            }
        }
        Command::Verify { ty, all, max_rank, json } => {
            let types = if all { SimpleType::all_up_to(max_rank) } else { ty.into_iter().collect() };
            let reports: Vec<VerifyReport> = types.iter().map(|&t| report::verify(&RootSystemQ::build(t))).collect();
            let passed = reports.iter().all(|r| r.passed);
            if json {
                let value = if all {
                    serde_json::json!({ "schema": report::SCHEMA_VERSION, "passed": passed, "reports": reports })
                } else {
                    serde_json::to_value(&reports[0])?
                };
                out.write_all(to_json(&value)?.as_bytes())?;
            } else {
                for r in &reports {
                    out.write_all(r.to_text().as_bytes())?;
                }
            }
            if !passed {
                return Ok(Outcome::ChecksFailed);
            }
        }
        Command::Hasse { ty, dot } => {
            let rs = RootSystemQ::build(ty);
            let cat = IdealCatalog::build(&rs)?;
            let text = HasseGraph::build(&rs, &cat)?.to_dot(&rs, &cat)?;
            if dot.as_os_str() == "-" {
                out.write_all(text.as_bytes())?;
            } else {
                fs::write(&dot, text).with_context(|| format!("writing {}", dot.display()))?;
            }
        }
        Command::Tables { max_rank, json } => {
            let rows = report::tables(max_rank)?;
            if json {
                out.write_all(to_json(&rows)?.as_bytes())?;
            } else {
                out.write_all(report::render_tables(&rows).as_bytes())?;
            }
        }
        Command::Young { l, encode, decode, .. } => {
            let n = l + 1;
            if let Some(rows) = encode {
                let d = parse_rows(&rows).map_err(anyhow::Error::msg).map_err(usage)?;
                let code = young_encode(&d, n).map_err(|e| usage(e.into()))?;
                writeln!(out, "{code} {code:0width$b}", width = l)?;
            } else if let Some(code) = decode {
                let d = young_decode(code, n).map_err(|e| usage(e.into()))?;
                writeln!(out, "{d}")?;
            } else {
                for d in y_lattice(n) {
                    let code = young_encode(&d, n)?;
                    writeln!(out, "{code:>6} {code:0width$b} {d}", width = l)?;
                }
            }
        }
        Command::Golden { json } => {
            let g = report::golden_a11_check()?;
            if json {
                out.write_all(to_json(&g)?.as_bytes())?;
            } else {
                for (l, r) in g.left.iter().zip(&g.right) {
                    let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
                    writeln!(
                        out,
                        "{:>2}  s{:<2} {:<4}  s{:<2} {}",
                        l.r,
                        l.letter,
                        mark(l.matches && l.positive_root),
                        r.letter,
                        mark(r.matches && r.positive_root)
                    )?;
                }
                writeln!(out, "staircase shape {:?}, passed: {}", g.shape, g.passed)?;
            }
            if !g.passed {
                return Ok(Outcome::ChecksFailed);
            }
        }
    }
    Ok(Outcome::Success)
}

#[derive(Debug)]
struct UsageError(anyhow::Error);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(e: anyhow::Error) -> anyhow::Error {
    UsageError(e).into()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli.command, &mut lock) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
