//! `epg`: build, analyse and verify enhanced power graphs from the shell.
//!
//! Exit codes: 0 success, 1 a theorem check found a counterexample, 2 usage
//! or input error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use epg_core::group::DEFAULT_MAX_ORDER;
use epg_core::verify::{self, TheoremId, ROSTER_MAX_ORDER};
use epg_core::{EpgBundle, Family, FiniteGroup, GroupSpec, Limits, Property, PropertyReport, SimpleGraph, Validation};
use serde_json::{json, Value};

const MAX_ORDER_ENV: &str = "EPG_MAX_ORDER";
const DEFAULT_ROSTER_ORDER: usize = 32;

#[derive(Parser, Debug)]
#[command(name = "epg", version, about = "Enhanced power graphs of finite groups")]
struct Cli {
    /// Group order cap for build/check/ingest; roster bound for verify
    /// (default 32). The cap defaults to $EPG_MAX_ORDER, else 512.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,

    /// How thoroughly to check the group axioms of a table.
    #[arg(long, global = true, value_enum)]
    validate: Option<ValidateArg>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the enhanced power graph of a group.
    Build {
        #[arg(long, value_name = "SPEC")]
        group: String,
        /// Drop the identity vertex.
        #[arg(long)]
        deleted: bool,
    },
    /// Report graph properties of a group's enhanced power graph.
    Check {
        #[arg(long, value_name = "SPEC")]
        group: String,
        #[arg(long)]
        deleted: bool,
        /// Comma-separated property names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
    /// Run theorem checks over their rosters.
    Verify {
        /// Theorem ids (comma-separated or repeated), or `all`.
        #[arg(long, value_delimiter = ',', required = true)]
        theorem: Vec<String>,
    },
    /// Validate a Cayley-table file and report graph properties.
    Ingest {
        path: PathBuf,
        #[arg(long)]
        deleted: bool,
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ValidateArg {
    Full,
    Sampled,
    Off,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Edgelist,
    Text,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<epg_core::Error> for Failure {
    fn from(e: epg_core::Error) -> Self {
        usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let cap = default_cap()?;
    let validation = match cli.validate {
        None => Validation::Auto,
        Some(ValidateArg::Full) => Validation::Full,
        Some(ValidateArg::Sampled) => Validation::Sampled,
        Some(ValidateArg::Off) => Validation::Off,
    };
    let limits = Limits { max_order: cli.max_order.unwrap_or(cap), validation };
    let (text, code) = match &cli.command {
        Command::Build { group, deleted } => {
            let g = FiniteGroup::from_spec(&parse_spec(group)?, &limits)?;
            (render_graph(&g, *deleted, cli.format.unwrap_or(Format::Json)), 0)
        }
        Command::Check { group, deleted, props } => {
            let format = report_format(cli.format)?;
            let props = parse_props(props)?;
            let g = FiniteGroup::from_spec(&parse_spec(group)?, &limits)?;
            (render_report(&g, *deleted, &props, format), 0)
        }
        Command::Ingest { path, deleted, props } => {
            let format = report_format(cli.format)?;
            let props = parse_props(props)?;
            let spec = GroupSpec::new(Family::CayleyFile(path.to_string_lossy().into_owned()));
            let g = FiniteGroup::from_spec(&spec, &limits)?;
            (render_report(&g, *deleted, &props, format), 0)
        }
        Command::Verify { theorem } => {
            let format = report_format(cli.format)?;
            let bound = cli.max_order.unwrap_or(DEFAULT_ROSTER_ORDER);
            if bound > cap.min(ROSTER_MAX_ORDER) {
                return Err(usage(format!(
                    "roster bound {bound} exceeds the order cap of {}",
                    cap.min(ROSTER_MAX_ORDER)
                )));
            }
            verify_text(&parse_theorems(theorem)?, bound, format)?
        }
    };
    emit(&text, cli.output.as_ref())?;
    Ok(code)
}

fn default_cap() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| usage(format!("{MAX_ORDER_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn parse_spec(text: &str) -> Result<GroupSpec, Failure> {
    Ok(text.parse::<GroupSpec>()?)
}

fn parse_props(names: &[String]) -> Result<Vec<Property>, Failure> {
    names.iter().filter(|n| !n.trim().is_empty()).map(|n| n.parse::<Property>().map_err(Failure::from)).collect()
}

fn parse_theorems(ids: &[String]) -> Result<Vec<TheoremId>, Failure> {
    if ids.iter().any(|t| t.trim().eq_ignore_ascii_case("all")) {
        if ids.len() > 1 {
            return Err(usage("`all` cannot be combined with other theorem ids"));
        }
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut out: Vec<TheoremId> = ids.iter().map(|t| t.parse::<TheoremId>()).collect::<Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Reports are JSON or text; graph formats make no sense for them.
fn report_format(format: Option<Format>) -> Result<Format, Failure> {
    match format.unwrap_or(Format::Json) {
        f @ (Format::Json | Format::Text) => Ok(f),
        other => {
            Err(usage(format!("--format {} applies to `build` only", other.to_possible_value().unwrap().get_name())))
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            // a closed pipe is not worth a failure exit
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn pick(bundle: &EpgBundle<'_>, deleted: bool) -> SimpleGraph {
    if deleted {
        bundle.deleted().clone()
    } else {
        bundle.epg().clone()
    }
}

fn render_graph(g: &FiniteGroup, deleted: bool, format: Format) -> String {
    let bundle = EpgBundle::new(g);
    let graph = pick(&bundle, deleted);
    match format {
        Format::Dot => graph.to_dot(g.name()),
        Format::Edgelist => graph.to_edge_list(),
        Format::Json => {
            let doc = json!({
                "group": g.spec(),
                "name": g.name(),
                "order": g.order(),
                "deleted": deleted,
                "vertices": graph.labels().unwrap_or_default(),
                "edges": graph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
            });
            format!("{doc}\n")
        }
        Format::Text => {
            let degrees = graph.degrees();
            format!(
                "group: {} ({})\norder: {}\ngraph: {}\nvertices: {}\nedges: {}\ndegree range: {}..{}\n",
                g.name(),
                g.spec(),
                g.order(),
                if deleted { "deleted enhanced power graph" } else { "enhanced power graph" },
                graph.vertex_count(),
                graph.edge_count(),
                degrees.iter().min().copied().unwrap_or(0),
                degrees.iter().max().copied().unwrap_or(0),
            )
        }
    }
}

fn render_report(g: &FiniteGroup, deleted: bool, props: &[Property], format: Format) -> String {
    let bundle = EpgBundle::new(g);
    let graph = pick(&bundle, deleted);
    let report = PropertyReport::analyze(&graph, !deleted);
    let value: Value = if props.is_empty() {
        serde_json::to_value(&report).expect("reports serialize")
    } else {
        Value::Object(report.select(props))
    };
    match format {
        Format::Text => {
            let mut out = format!("group: {} ({})\norder: {}\n", g.name(), g.spec(), g.order());
            for (k, v) in value.as_object().expect("reports are objects") {
                out.push_str(&format!("{k}: {v}\n"));
            }
            out
        }
        _ => format!("{value}\n"),
    }
}

fn verify_text(ids: &[TheoremId], bound: usize, format: Format) -> Result<(String, u8), Failure> {
    let reports = verify::run_selected(ids, bound)?;
    let mut out = String::new();
    let mut code = 0;
    for r in &reports {
        let surprise = verify::unexpectedly_vacuous(r, bound);
        if !r.is_clean() || surprise {
            code = 1;
        }
        if surprise {
            eprintln!("{}: roster unexpectedly vacuous at bound {bound}", r.theorem);
        }
        match format {
            Format::Text => {
                let verdict = if !r.is_clean() {
                    "FAIL"
                } else if r.vacuous {
                    "vacuous"
                } else {
                    "ok"
                };
                out.push_str(&format!("{} {verdict}: {}/{} passed ({} ms)\n", r.theorem, r.passed, r.tested, r.ms));
                for c in &r.counterexamples {
                    out.push_str(&format!(
                        "  counterexample {}: graph {} group {} witness {}\n",
                        c.spec, c.graph_side, c.group_side, c.witness
                    ));
                }
            }
            _ => {
                out.push_str(&serde_json::to_string(r).expect("reports serialize"));
                out.push('\n');
            }
        }
    }
    Ok((out, code))
}
