//! The `coxperp` command-line front end.
//!
//! Exit codes: 0 on success, 2 when the presentation is unsupported (some
//! class fails the uniform-root certification), 1 on any error.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::{corpus_generate, corpus_to_text, default_pool};
use crate::crosscheck::crosscheck;
use crate::error::{CoxError, Result};
use crate::finite_part::finite_part;
use crate::graph::{CoxeterGraph, Label, Vertex};
use crate::oracle::{enumerate_group, oracle_centralizer_order, oracle_perp_matrix, reflection_count};
use crate::presentation::{centralizer_report, PerpResult};
use crate::reflindep::check_group;
use crate::report::{self, OracleSummary};

#[derive(Parser, Debug)]
#[command(name = "coxperp", version, about = "Reflection-perpendicular subgroups of Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// Graph file (text or JSON format); standard input when omitted.
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    /// Graph file, as an alternative to the positional argument.
    #[arg(long = "input", value_name = "FILE", conflicts_with = "file")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Tolerance for numeric comparisons.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Cap on the number of enumerated roots.
    #[arg(long, default_value_t = 20_000)]
    max_roots: usize,
    /// Cap on the number of enumerated group elements.
    #[arg(long, default_value_t = 200_000)]
    max_group: usize,
}

#[derive(Args, Debug)]
struct AtVertex {
    #[command(flatten)]
    common: Common,
    /// The generator x.
    #[arg(long = "x", value_name = "VERTEX")]
    x: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Components, odd components and types of the graph.
    Analyze(Common),
    /// Coxeter presentation of W^perp(x).
    Perp(AtVertex),
    /// Finite part of W^perp(x).
    Finpart(AtVertex),
    /// Sufficient conditions for reflection independence.
    Reflindep(Common),
    /// Numeric oracle for finite groups.
    Oracle(AtVertex),
    /// Compare the presentation with the oracle (finite groups).
    Crosscheck(AtVertex),
    /// Generate a seeded corpus of random connected graphs.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        /// Comma-separated label pool, e.g. `2,3,4,5,inf`.
        #[arg(long)]
        pool: Option<String>,
        /// Output format; the text graph format by default.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// What a subcommand produced.
struct Outcome {
    output: String,
    code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

fn load(common: &Common) -> Result<CoxeterGraph> {
    let path = common.file.as_ref().or(common.input.as_ref());
    let src = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CoxError::Parse {
            line: 0,
            message: format!("cannot read {}: {e}", p.display()),
        })?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CoxError::Parse {
                line: 0,
                message: format!("cannot read standard input: {e}"),
            })?;
            s
        }
    };
    CoxeterGraph::parse(&src)
}

fn render(format: Format, json: impl FnOnce() -> serde_json::Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => report::to_string(&json()),
        Format::Text => text(),
    }
}

fn parse_pool(src: &str) -> Result<Vec<Label>> {
    src.split(',')
        .map(|t| {
            let t = t.trim();
            match Label::parse(t) {
                Some(l @ Label::Finite(2..)) | Some(l @ Label::Infinite) => Ok(l),
                _ => Err(CoxError::Parse {
                    line: 0,
                    message: format!("invalid pool label {t:?}"),
                }),
            }
        })
        .collect()
}

fn at_vertex(a: &AtVertex) -> Result<(CoxeterGraph, Vertex)> {
    let g = load(&a.common)?;
    let x = g.vertex(&a.x)?;
    Ok((g, x))
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Analyze(c) => {
            let g = load(&c)?;
            Ok(Outcome::ok(render(c.format, || report::analyze_json(&g), || report::analyze_text(&g))))
        }
        Command::Perp(a) => {
            let (g, x) = at_vertex(&a)?;
            let r = centralizer_report(&g, x)?;
            let code = match r.perp {
                PerpResult::Presentation(_) => 0,
                PerpResult::Unsupported { .. } => 2,
            };
            let output = render(a.common.format, || report::perp_json(&g, &r), || report::perp_text(&g, &r));
            Ok(Outcome { output, code })
        }
        Command::Finpart(a) => {
            let (g, x) = at_vertex(&a)?;
            let r = finite_part(&g, x)?;
            Ok(Outcome::ok(render(a.common.format, || report::finpart_json(&g, &r), || report::finpart_text(&g, &r))))
        }
        Command::Reflindep(c) => {
            let g = load(&c)?;
            let v = check_group(&g)?;
            Ok(Outcome::ok(render(c.format, || report::reflindep_json(&g, &v), || report::reflindep_text(&g, &v))))
        }
        Command::Oracle(a) => {
            let (g, x) = at_vertex(&a)?;
            let c = &a.common;
            let perp = oracle_perp_matrix(&g, x, c.max_roots, c.tol)?;
            let group = enumerate_group(&g, c.max_roots, c.max_group)?;
            let orders = oracle_centralizer_order(&g, x, &group, c.tol, c.max_group)?;
            let summary = OracleSummary {
                perp,
                group_order: group.order(),
                reflections: reflection_count(&group),
                centralizer_order: orders.z_order,
                perp_order: orders.perp_order,
            };
            Ok(Outcome::ok(render(
                c.format,
                || report::oracle_json(&g, x, &summary),
                || report::oracle_text(&g, x, &summary),
            )))
        }
        Command::Crosscheck(a) => {
            let (g, x) = at_vertex(&a)?;
            let c = crosscheck(&g, x, a.common.max_roots, a.common.tol)?;
            let code = match (c.supported, c.agree) {
                (false, _) => 2,
                (true, true) => 0,
                (true, false) => 1,
            };
            let output = render(
                a.common.format,
                || report::crosscheck_json(&g, x, &c),
                || report::crosscheck_text(&g, x, &c),
            );
            Ok(Outcome { output, code })
        }
        Command::Corpus {
            seed,
            count,
            max_rank,
            pool,
            format,
        } => {
            let pool = match pool {
                Some(p) => parse_pool(&p)?,
                None => default_pool(),
            };
            let graphs = corpus_generate(seed, count, max_rank, &pool);
            let output = match format.unwrap_or(Format::Text) {
                Format::Text => corpus_to_text(&graphs),
                Format::Json => report::to_string(&serde_json::Value::Array(
                    graphs.iter().map(CoxeterGraph::to_json_value).collect(),
                )),
            };
            Ok(Outcome::ok(output))
        }
    }
}

/// Run the CLI on `args` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.output.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool_labels(s: &str) -> Vec<String> {
        parse_pool(s).unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn pools() {
        assert_eq!(pool_labels("2, 3,inf"), vec!["2", "3", "inf"]);
        assert!(parse_pool("1,3").is_err());
        assert!(parse_pool("x").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["coxperp", "perp"], &mut out, &mut err), 1);
        assert!(!err.is_empty());
    }
}
