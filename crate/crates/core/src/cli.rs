//! Command-line front end. JSON goes to stdout, diagnostics to stderr, and the
//! exit code is the only success signal: 0 success, 1 a negative verdict
//! (invalid coloring, failed assertion, construction finding), 2 bad input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bound::{parse_bound_list, DegreeBound};
use crate::coloring::{validate_tree_coloring, Coloring};
use crate::error::Error;
use crate::experiments::{
    nordhaus_gaddum_sweep, parse_check_list, survey, Check, Mode, SurveyConfig, SurveySource,
};
use crate::families::{construct_bipartite_coloring, construct_wheel_coloring};
use crate::graph::{parse_graph6, read_graph6_lines, Graph};
use crate::oracle::{strong_from_profile, Oracle};
use crate::theorems::cross_validate;

#[derive(Debug, Parser)]
#[command(
    name = "eqtree",
    version,
    about = "Equitable (t,k)-tree-colorings of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a coloring against the definition.
    Validate {
        /// graph6 string or file holding one.
        #[arg(long)]
        graph: String,
        /// Coloring JSON, inline or as a file path.
        #[arg(long)]
        coloring: String,
        /// Degree bound: an integer or `inf`.
        #[arg(long)]
        k: String,
    },
    /// Decide whether an equitable (t,k)-tree-coloring exists.
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: String,
        /// Include a witness coloring when one exists.
        #[arg(long)]
        witness: bool,
        /// Abort the search after this many nodes.
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Equitable and strong equitable vertex arboricity with the full profile.
    Strong {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: String,
    },
    /// Build a coloring of a structured family and validate it.
    Construct {
        /// `bipartite` (params: n ell, host K_{n,n+ell}) or `wheel` (params: n).
        #[arg(long)]
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        k: String,
    },
    /// Run characterization checks over all labeled graphs of an order or a graph6 file.
    Survey {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        order: Option<usize>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Comma-separated degree bounds.
        #[arg(long, default_value = "inf")]
        k: String,
        /// Comma-separated checks; all of them by default.
        #[arg(long)]
        check: Option<String>,
        /// Force `assert` or `report` on every check.
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// JSON report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write counterexamples as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// List at most this many counterexamples per check, bound and mode.
        #[arg(long)]
        max_counterexamples: Option<usize>,
        /// Record wall-clock time; the report is then no longer reproducible byte for byte.
        #[arg(long)]
        timing: bool,
    },
    /// Sum and product of the strong arboricities of every graph and its complement.
    Ng {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "inf")]
        k: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every applicable characterization with the oracle on one graph.
    Theorems {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: String,
    },
}

/// Input problem attributed to one argument.
struct Usage {
    arg: &'static str,
    error: Error,
}

impl Usage {
    fn new(arg: &'static str, error: impl Into<Error>) -> Self {
        Usage {
            arg,
            error: error.into(),
        }
    }
}

enum Failure {
    Usage(Usage),
    Runtime(Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(u)) => {
            let _ = writeln!(err, "error: --{}: {}", u.arg, u.error);
            2
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { graph, coloring, k } => {
            let g = read_graph(&graph)?;
            let c = read_coloring(&coloring)?;
            let k = parse_k(&k)?;
            let report =
                validate_tree_coloring(&g, &c, k).map_err(|e| Usage::new("coloring", e))?;
            emit(out, &report)?;
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::Solve {
            graph,
            t,
            k,
            witness,
            node_limit,
        } => {
            let g = read_graph(&graph)?;
            let k = parse_k(&k)?;
            let oracle = node_limit.map_or_else(Oracle::new, Oracle::with_node_limit);
            let found = oracle.find_coloring(&g, t, k)?;
            let mut body = json!({ "t": t, "k": k, "feasible": found.is_some() });
            if witness {
                body["witness"] = serde_json::to_value(&found).map_err(Error::from)?;
            }
            emit(out, &body)?;
            Ok(0)
        }
        Command::Strong { graph, k } => {
            let g = read_graph(&graph)?;
            let k = parse_k(&k)?;
            let profile = Oracle::new().feasibility_profile(&g, k)?;
            let equitable = profile.iter().position(|&f| f).map_or(1, |i| i + 1);
            let profile_rows: Vec<_> = profile
                .iter()
                .enumerate()
                .map(|(i, &feasible)| json!({ "t": i + 1, "feasible": feasible }))
                .collect();
            emit(
                out,
                &json!({
                    "order": g.order(),
                    "k": k,
                    "equitable_arboricity": equitable,
                    "strong_arboricity": strong_from_profile(&profile),
                    "profile": profile_rows,
                }),
            )?;
            Ok(0)
        }
        Command::Construct {
            family,
            params,
            q,
            k,
        } => {
            let k = parse_k(&k)?;
            let result = match (family.as_str(), params.as_slice()) {
                ("bipartite", &[n, ell]) => construct_bipartite_coloring(n, ell, q, k),
                ("wheel", &[n]) => match k {
                    DegreeBound::Finite(k) => construct_wheel_coloring(n, q, k),
                    DegreeBound::Unbounded => {
                        return Err(Usage::new(
                            "k",
                            Error::InvalidParameters {
                                family: "wheel",
                                reason: "the wheel recipe needs a finite k".into(),
                            },
                        )
                        .into())
                    }
                },
                ("bipartite" | "wheel", _) => {
                    return Err(Usage::new(
                        "family",
                        Error::InvalidParameters {
                            family: "construct",
                            reason: format!(
                                "{family} takes {} parameters",
                                if family == "wheel" {
                                    "1 (n)"
                                } else {
                                    "2 (n ell)"
                                }
                            ),
                        },
                    )
                    .into())
                }
                _ => {
                    return Err(Usage::new(
                        "family",
                        Error::Unknown {
                            kind: "family",
                            value: family,
                        },
                    )
                    .into())
                }
            };
            match result {
                Ok(c) => {
                    emit(
                        out,
                        &json!({ "family": family, "params": params, "q": q, "k": k, "coloring": c }),
                    )?;
                    Ok(0)
                }
                Err(Error::ConstructionNotApplicable(finding)) => {
                    writeln!(out, "{}", finding.to_json_line())?;
                    Ok(1)
                }
                Err(e @ Error::InvalidParameters { .. }) => Err(Usage::new("params", e).into()),
                Err(e) => Err(e.into()),
            }
        }
        Command::Survey {
            order,
            input,
            k,
            check,
            mode,
            jobs,
            out: out_path,
            csv,
            max_counterexamples,
            timing,
        } => {
            let source = match (order, input) {
                (Some(n), _) => SurveySource::Order(n),
                (None, Some(path)) => {
                    let file = fs::File::open(&path).map_err(|e| Usage::new("in", e))?;
                    let graphs = read_graph6_lines(std::io::BufReader::new(file))
                        .map_err(|e| Usage::new("in", e))?;
                    SurveySource::Graphs {
                        label: path.display().to_string(),
                        graphs,
                    }
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let config = SurveyConfig {
                k: parse_k_list(&k)?,
                checks: match check {
                    Some(list) => parse_check_list(&list).map_err(|e| Usage::new("check", e))?,
                    None => Check::ALL.to_vec(),
                },
                mode: mode
                    .map(|m| m.parse::<Mode>())
                    .transpose()
                    .map_err(|e| Usage::new("mode", e))?,
                jobs,
                max_counterexamples,
                timing,
            };
            let report = survey(&source, &config).map_err(|e| match e {
                e @ Error::EnumerationCap { .. } => Failure::Usage(Usage::new("order", e)),
                e => Failure::Runtime(e),
            })?;
            write_text(out, out_path.as_deref(), &report.to_json())?;
            if let Some(path) = csv {
                report.write_csv(fs::File::create(path)?)?;
            }
            Ok(if report.assert_failures() > 0 { 1 } else { 0 })
        }
        Command::Ng {
            order,
            k,
            jobs,
            out: out_path,
        } => {
            let ks = parse_k_list(&k)?;
            let report = nordhaus_gaddum_sweep(order, &ks, jobs).map_err(|e| match e {
                e @ Error::EnumerationCap { .. } => Failure::Usage(Usage::new("order", e)),
                e => Failure::Runtime(e),
            })?;
            write_text(out, out_path.as_deref(), &report.to_json())?;
            let violated = report.sweeps.iter().any(|s| !s.violations.is_empty());
            Ok(if violated { 1 } else { 0 })
        }
        Command::Theorems { graph, k } => {
            let g = read_graph(&graph)?;
            let report = cross_validate(&g, parse_k(&k)?);
            emit(out, &report)?;
            Ok(if report.all_agree() { 0 } else { 1 })
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(Error::from)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_text(
    out: &mut dyn Write,
    path: Option<&Path>,
    text: &str,
) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_k(s: &str) -> std::result::Result<DegreeBound, Usage> {
    s.parse().map_err(|e| Usage::new("k", e))
}

fn parse_k_list(s: &str) -> std::result::Result<Vec<DegreeBound>, Usage> {
    let ks = parse_bound_list(s).map_err(|e| Usage::new("k", e))?;
    if ks.is_empty() {
        return Err(Usage::new(
            "k",
            Error::Unknown {
                kind: "degree bound list",
                value: s.to_string(),
            },
        ));
    }
    Ok(ks)
}

/// A file holding at least one graph6 line, or an inline graph6 string.
fn read_graph(arg: &str) -> std::result::Result<Graph, Usage> {
    let path = Path::new(arg);
    if path.is_file() {
        let file = fs::File::open(path).map_err(|e| Usage::new("graph", e))?;
        let graphs =
            read_graph6_lines(std::io::BufReader::new(file)).map_err(|e| Usage::new("graph", e))?;
        return graphs.into_iter().next().ok_or_else(|| {
            Usage::new(
                "graph",
                Error::Unknown {
                    kind: "graph file without graphs",
                    value: arg.to_string(),
                },
            )
        });
    }
    parse_graph6(arg.trim().as_bytes()).map_err(|e| Usage::new("graph", e))
}

fn read_coloring(arg: &str) -> std::result::Result<Coloring, Usage> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Usage::new("coloring", e))?
    };
    serde_json::from_str(&text).map_err(|e| Usage::new("coloring", e))
}
