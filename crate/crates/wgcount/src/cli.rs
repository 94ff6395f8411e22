//! Command-line surface: argument grammar, graph resolution, per-verb
//! pipelines, text/JSON rendering, and the embedded expected-value tables.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::closed_forms::{closed_count, family_gf};
use crate::counting::{self, EngineLimits, Method};
use crate::genfun::{self, quasi_from_gf, verify_graph, RationalGf};
use crate::graph::{parse_graph, Family, Graph};
use crate::{Error, Result};

const GRAMMAR: &str = "usage: wgcount <count|series|genfun|quasipoly|verify|table> \
[--graph <dsl-or-path>] [--n <int>] [--terms <int>] \
[--method auto|brute|elim|closed] [--format text|json] \
[--max-states <int>] [--table <name>]";

#[derive(Parser, Debug)]
#[command(name = "wgcount", version, about = "Exact enumeration of bounded-weight \
assignments on simple graphs", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Count weight assignments for a single bound n
    Count {
        #[command(flatten)]
        common: Common,
        /// Weight bound
        #[arg(long)]
        n: u32,
    },
    /// Print the count series WG(0..terms-1)
    Series {
        #[command(flatten)]
        common: Common,
        /// Number of series terms
        #[arg(long)]
        terms: usize,
    },
    /// Reconstruct the rational generating function of the count series
    Genfun {
        #[command(flatten)]
        common: Common,
    },
    /// Extract the quasi-polynomial of the counting function
    Quasipoly {
        #[command(flatten)]
        common: Common,
    },
    /// Run the structural-theorem checks against a graph
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Recompute an embedded reference table and diff it
    Table {
        /// Table name: paths-cycles | complete | hypercubes | bicliques | examples
        #[arg(long)]
        table: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        max_states: Option<f64>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Family DSL (e.g. cycle:4), inline JSON document, or path to a file
    #[arg(long)]
    graph: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Cost ceiling (table/assignment states) for the counting engines
    #[arg(long)]
    max_states: Option<f64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Auto,
    Brute,
    Elim,
    Closed,
}

impl MethodArg {
    fn engine(self) -> Option<Method> {
        match self {
            MethodArg::Auto => Some(Method::Auto),
            MethodArg::Brute => Some(Method::Brute),
            MethodArg::Elim => Some(Method::Elim),
            MethodArg::Closed => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Brute => "brute",
            MethodArg::Elim => "elim",
            MethodArg::Closed => "closed",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Text,
    Json,
}

/// What a CLI invocation produced; `main` prints the streams and exits with
/// `code`.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn limits(max_states: Option<f64>) -> EngineLimits {
    let mut l = EngineLimits::default();
    if let Some(v) = max_states {
        l.brute_states = v;
        l.elim_states = v;
    }
    l
}

/// Resolves `--graph`: inline JSON document, path to a file holding one, or
/// family DSL.
fn resolve_graph(source: &str) -> Result<Graph> {
    let s = source.trim();
    if s.starts_with('{') {
        return parse_graph(s);
    }
    if Path::new(s).is_file() {
        let text = std::fs::read_to_string(s)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {s}: {e}")))?;
        return parse_graph(&text);
    }
    parse_graph(s)
}

/// The closed-form engine needs the family, not just the edge set.
fn resolve_family(source: &str) -> Result<Family> {
    let s = source.trim();
    if s.starts_with('{') || Path::new(s).is_file() {
        return Err(Error::InvalidArgument(
            "--method closed needs a family DSL graph (e.g. complete:4)".into(),
        ));
    }
    Family::parse(s)
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "m": g.vertex_count(),
        "edges": g.edges().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
    })
}

fn document(command: &str, graph: Option<&Graph>, result: Value, checks: Value) -> String {
    let doc = json!({
        "command": command,
        "graph": graph.map(graph_json).unwrap_or(Value::Null),
        "result": result,
        "checks": checks,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("documents serialize");
    s.push('\n');
    s
}

fn big_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

/// Entry point shared by `main` and the tests: parses `argv` (including the
/// program name) and executes the command.
pub fn run(argv: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap encodes --help/--version as "errors" with exit code 0
            let rendered = e.render().to_string();
            return if e.exit_code() == 0 {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            } else {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("{rendered}\n{GRAMMAR}\n"),
                }
            };
        }
    };
    match execute(cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            let code = match e {
                Error::Verification(_) => 2,
                _ => 1,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn execute(cli: Cli) -> Result<Outcome> {
    match cli.verb {
        Verb::Count { common, n } => run_count(&common, n),
        Verb::Series { common, terms } => run_series(&common, terms),
        Verb::Genfun { common } => run_genfun(&common),
        Verb::Quasipoly { common } => run_quasipoly(&common),
        Verb::Verify { common } => run_verify(&common),
        Verb::Table { table, method, format, max_states } => {
            run_table(&table, method, format, max_states)
        }
    }
}

fn run_count(common: &Common, n: u32) -> Result<Outcome> {
    let g = resolve_graph(&common.graph)?;
    let count = match common.method.engine() {
        Some(method) => counting::count_with(&g, n, method, limits(common.max_states))?,
        None => closed_count(&resolve_family(&common.graph)?, n)?,
    };
    let stdout = match common.format {
        FormatArg::Text => format!("{count}\n"),
        FormatArg::Json => document(
            "count",
            Some(&g),
            json!({ "n": n, "count": count.to_string(), "method": common.method.name() }),
            json!([]),
        ),
    };
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

fn run_series(common: &Common, terms: usize) -> Result<Outcome> {
    let g = resolve_graph(&common.graph)?;
    let values = match common.method.engine() {
        Some(method) => counting::series_with(&g, terms, method, limits(common.max_states))?,
        None => {
            let fam = resolve_family(&common.graph)?;
            (0..terms as u32)
                .map(|n| closed_count(&fam, n))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let stdout = match common.format {
        FormatArg::Text => format!("{}\n", big_strings(&values).join(", ")),
        FormatArg::Json => document(
            "series",
            Some(&g),
            json!({
                "terms": terms,
                "values": big_strings(&values),
                "method": common.method.name(),
            }),
            json!([]),
        ),
    };
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

fn compute_gf(common: &Common) -> Result<(Graph, RationalGf)> {
    let g = resolve_graph(&common.graph)?;
    let gf = match common.method.engine() {
        Some(method) => genfun::rho_with(&g, method, limits(common.max_states))?,
        None => family_gf(&resolve_family(&common.graph)?)?,
    };
    Ok((g, gf))
}

fn run_genfun(common: &Common) -> Result<Outcome> {
    let (g, gf) = compute_gf(common)?;
    let stdout = match common.format {
        FormatArg::Text => format!("{}\n", gf.render_canonical()),
        FormatArg::Json => {
            let numerator: Vec<String> = gf
                .numerator()
                .integer_coeffs()
                .expect("canonical numerators are integral")
                .iter()
                .map(BigInt::to_string)
                .collect();
            document(
                "genfun",
                Some(&g),
                json!({
                    "gf": gf.render_canonical(),
                    "paper_form": gf.render_paper(),
                    "numerator": numerator,
                    "exp_one": gf.exp_one(),
                    "exp_minus": gf.exp_minus(),
                }),
                json!([]),
            )
        }
    };
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

fn run_quasipoly(common: &Common) -> Result<Outcome> {
    let (g, gf) = compute_gf(common)?;
    let qp = quasi_from_gf(&gf)?;
    let stdout = match common.format {
        FormatArg::Text => {
            let mut out = String::new();
            for line in qp.render() {
                writeln!(out, "{line}").unwrap();
            }
            out
        }
        FormatArg::Json => {
            let residues: Vec<Value> = (0..qp.period())
                .map(|r| {
                    json!({
                        "residue": r,
                        "coefficients": qp
                            .residue_coeffs(r)
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            document(
                "quasipoly",
                Some(&g),
                json!({
                    "period": qp.period(),
                    "degree": qp.degree(),
                    "residues": residues,
                    "rendered": qp.render(),
                }),
                json!([]),
            )
        }
    };
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

fn run_verify(common: &Common) -> Result<Outcome> {
    let g = resolve_graph(&common.graph)?;
    let report = verify_graph(&g)?;
    let code = if report.passed() { 0 } else { 2 };
    let stdout = match common.format {
        FormatArg::Text => {
            let mut out = String::new();
            for c in &report.checks {
                writeln!(out, "{} {}: {}", c.status.to_uppercase(), c.check, c.witness).unwrap();
            }
            writeln!(
                out,
                "{}: {}",
                report.gf,
                if report.passed() { "all checks passed" } else { "CHECKS FAILED" }
            )
            .unwrap();
            out
        }
        FormatArg::Json => document(
            "verify",
            Some(&g),
            json!({ "gf": report.gf, "passed": report.passed() }),
            serde_json::to_value(&report.checks).expect("checks serialize"),
        ),
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}

#[derive(Deserialize)]
struct TableEntry {
    name: String,
    graph: String,
    render: String,
    expected: String,
}

fn table_data(name: &str) -> Result<Vec<TableEntry>> {
    let raw = match name {
        "paths-cycles" => include_str!("../data/tables/paths_cycles.json"),
        "complete" => include_str!("../data/tables/complete.json"),
        "hypercubes" => include_str!("../data/tables/hypercubes.json"),
        "bicliques" => include_str!("../data/tables/bicliques.json"),
        "examples" => include_str!("../data/tables/examples.json"),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown table {name}; expected paths-cycles, complete, hypercubes, \
                 bicliques, or examples"
            )))
        }
    };
    serde_json::from_str(raw)
        .map_err(|e| Error::InvalidArgument(format!("embedded table {name} is corrupt: {e}")))
}

fn table_entry_gf(entry: &TableEntry, method: MethodArg, l: EngineLimits) -> Result<RationalGf> {
    if method == MethodArg::Closed {
        if let Ok(fam) = resolve_family(&entry.graph) {
            if let Ok(gf) = family_gf(&fam) {
                return Ok(gf);
            }
        }
    }
    let g = resolve_graph(&entry.graph)?;
    let engine = method.engine().unwrap_or(Method::Auto);
    match genfun::rho_with(&g, engine, l) {
        Ok(gf) => Ok(gf),
        // a cost guard is an engine limitation, not a wrong table entry:
        // fall back to the family closed form (K_7 fits no engine), then auto
        Err(Error::CostGuard(guard)) => {
            if let Ok(fam) = resolve_family(&entry.graph) {
                if let Ok(gf) = family_gf(&fam) {
                    return Ok(gf);
                }
            }
            if engine != Method::Auto {
                genfun::rho_with(&g, Method::Auto, l)
            } else {
                Err(Error::CostGuard(guard))
            }
        }
        Err(e) => Err(e),
    }
}

fn run_table(
    name: &str,
    method: MethodArg,
    format: FormatArg,
    max_states: Option<f64>,
) -> Result<Outcome> {
    let entries = table_data(name)?;
    let l = limits(max_states);
    let results: Vec<(String, String, String)> = entries
        .par_iter()
        .map(|entry| {
            let got = match table_entry_gf(entry, method, l) {
                Ok(gf) => match entry.render.as_str() {
                    "paper" => gf.render_paper(),
                    _ => gf.render_canonical(),
                },
                Err(e) => format!("error: {e}"),
            };
            let status = if got == entry.expected { "pass" } else { "fail" };
            (entry.name.clone(), status.to_string(), got)
        })
        .collect();
    let passed = results.iter().filter(|(_, s, _)| s == "pass").count();
    let all_pass = passed == results.len();
    let stdout = match format {
        FormatArg::Text => {
            let mut out = String::new();
            for ((name, status, got), entry) in results.iter().zip(&entries) {
                if status == "pass" {
                    writeln!(out, "PASS {name}: {got}").unwrap();
                } else {
                    writeln!(out, "FAIL {name}: expected {}, got {got}", entry.expected).unwrap();
                }
            }
            writeln!(out, "{passed}/{} entries match", results.len()).unwrap();
            out
        }
        FormatArg::Json => {
            let checks: Vec<Value> = results
                .iter()
                .map(|(name, status, got)| {
                    json!({ "check": name, "status": status, "witness": got })
                })
                .collect();
            document(
                "table",
                None,
                json!({ "table": name, "passed": all_pass, "entries": results.len() }),
                Value::Array(checks),
            )
        }
    };
    Ok(Outcome {
        code: if all_pass { 0 } else { 2 },
        stdout,
        stderr: String::new(),
    })
}
