//! Command-line interface: generate family graphs, label and verify them,
//! compute lower bounds, run the exact solver, and emit the summary table.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 inconclusive solve.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use radiolabel::bounds::{lower_bound_ecc_gap, lower_bound_gear, lower_bound_trivial};
use radiolabel::constructive::{
    gear_positions, label_complete, label_complete_bipartite, label_gear, label_star, label_wheel,
};
use radiolabel::families::{as_standard_gear, FamilySpec};
use radiolabel::graph::{Graph, VertexId};
use radiolabel::radio::{check, Labeling};
use radiolabel::solver::{solve, SolveOutcome, SolverConfig};

#[derive(Parser)]
#[command(
    name = "radiolabel",
    version,
    about = "Radio labelings of gear, wheel, star, complete and complete bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph as JSON or DOT.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the constructive labeling of a family graph.
    Label {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include the gear position indices alongside the labels.
        #[arg(long)]
        show_positions: bool,
    },
    /// Check a labeling against the radio condition.
    Verify {
        /// Graph JSON, or a `label` output document carrying the graph
        /// (use `-` for stdin).
        #[arg(long)]
        graph: String,
        /// Labeling JSON; defaults to labels embedded in the graph document.
        #[arg(long)]
        labeling: Option<String>,
        /// Stop at the first violation.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Compute a lower bound on the radio number.
    Bound {
        #[command(flatten)]
        family: OptionalFamilyArgs,
        /// Graph JSON file (alternative to --family).
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Compute the radio number exactly.
    Solve {
        #[command(flatten)]
        family: OptionalFamilyArgs,
        /// Graph JSON file (alternative to --family).
        #[arg(long)]
        graph: Option<String>,
        /// Abort after this much wall time (e.g. 60s, 2m).
        #[arg(long, value_parser = parse_duration)]
        time_budget: Option<Duration>,
        /// Abort after exploring this many search nodes.
        #[arg(long)]
        node_budget: Option<u64>,
        /// First candidate span; must itself be a sound lower bound.
        #[arg(long)]
        start_span: Option<u32>,
        /// Disable label-reversal symmetry breaking.
        #[arg(long)]
        no_symmetry_breaking: bool,
        /// Parallel workers for the top-level search split.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Print a CSV comparing bounds, constructions and solver results.
    Table {
        /// Comma-separated families, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        families: Vec<String>,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Largest gear solved from scratch; larger gears anchor the
        /// search at the forbidden-value bound.
        #[arg(long, default_value_t = 6)]
        gear_solver_max_n: usize,
        /// Per-row solver budget.
        #[arg(long, value_parser = parse_duration, default_value = "120s")]
        row_time_budget: Duration,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: usize,
    /// First partition size (complete-bipartite only).
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct OptionalFamilyArgs {
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    /// First partition size (complete-bipartite only).
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Complete,
    Star,
    #[value(alias = "bipartite", alias = "complete_bipartite")]
    CompleteBipartite,
    Wheel,
    Gear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Trivial,
    Ecc,
    Gear,
}

/// Output of `label`: the generated graph with its labeling, so the
/// document can be piped straight into `verify --graph -`.
#[derive(Serialize, Deserialize)]
struct LabelDocument {
    graph: Graph,
    labels: BTreeMap<VertexId, u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    positions: Option<BTreeMap<VertexId, usize>>,
}

impl LabelDocument {
    fn new(
        graph: Graph,
        labeling: &Labeling,
        positions: Option<BTreeMap<VertexId, usize>>,
    ) -> Self {
        LabelDocument {
            graph,
            labels: labeling.iter().collect(),
            positions,
        }
    }

    fn labeling(&self) -> Labeling {
        self.labels.iter().map(|(&v, &c)| (v, c)).collect()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Gen { family, format } => cmd_gen(family, format),
        Command::Label {
            family,
            format,
            show_positions,
        } => cmd_label(family, format, show_positions),
        Command::Verify {
            graph,
            labeling,
            fail_fast,
        } => cmd_verify(&graph, labeling.as_deref(), fail_fast),
        Command::Bound {
            family,
            graph,
            method,
        } => cmd_bound(family, graph.as_deref(), method),
        Command::Solve {
            family,
            graph,
            time_budget,
            node_budget,
            start_span,
            no_symmetry_breaking,
            workers,
        } => {
            let cfg = SolverConfig {
                node_budget,
                time_budget,
                start_span,
                symmetry_breaking: !no_symmetry_breaking,
                workers: workers.max(1),
            };
            cmd_solve(family, graph.as_deref(), &cfg)
        }
        Command::Table {
            families,
            max_n,
            gear_solver_max_n,
            row_time_budget,
            workers,
        } => cmd_table(
            &families,
            max_n,
            gear_solver_max_n,
            row_time_budget,
            workers,
        ),
    }
}

fn make_spec(family: FamilyName, n: usize, m: Option<usize>) -> Result<FamilySpec, String> {
    if m.is_some() && family != FamilyName::CompleteBipartite {
        return Err("--m only applies to --family complete-bipartite".into());
    }
    Ok(match family {
        FamilyName::Complete => FamilySpec::Complete { n },
        FamilyName::Star => FamilySpec::Star { n },
        FamilyName::CompleteBipartite => FamilySpec::CompleteBipartite {
            m: m.ok_or("--family complete-bipartite requires --m")?,
            n,
        },
        FamilyName::Wheel => FamilySpec::Wheel { n },
        FamilyName::Gear => FamilySpec::Gear { n },
    })
}

fn spec_from(args: FamilyArgs) -> Result<FamilySpec, String> {
    make_spec(args.family, args.n, args.m)
}

fn optional_spec_from(args: OptionalFamilyArgs) -> Result<Option<FamilySpec>, String> {
    match (args.family, args.n) {
        (Some(family), Some(n)) => Ok(Some(make_spec(family, n, args.m)?)),
        (None, None) if args.m.is_none() => Ok(None),
        _ => Err("--family and --n must be given together".into()),
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

/// Parses a graph document: either a bare graph or a `label` output
/// carrying a graph (and possibly labels).
fn load_graph_document(path: &str) -> Result<(Graph, Option<Labeling>), String> {
    let text = read_input(path)?;
    if let Ok(doc) = serde_json::from_str::<LabelDocument>(&text) {
        let labels = if doc.labels.is_empty() {
            None
        } else {
            Some(doc.labeling())
        };
        return Ok((doc.graph, labels));
    }
    let graph: Graph =
        serde_json::from_str(&text).map_err(|e| format!("parsing graph from {path}: {e}"))?;
    Ok((graph, None))
}

/// Accepts either the bare labeling schema or a `label` output document
/// (unknown fields such as `graph` are ignored).
fn load_labeling(path: &str) -> Result<Labeling, String> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| format!("parsing labeling from {path}: {e}"))
}

fn print_json<T: Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}

fn cmd_gen(family: FamilyArgs, format: Format) -> Result<ExitCode, String> {
    let spec = spec_from(family)?;
    let graph = spec.build().map_err(|e| e.to_string())?;
    match format {
        Format::Json => print_json(&graph)?,
        Format::Dot => print!("{}", graph.to_dot(&BTreeMap::new())),
    }
    Ok(ExitCode::SUCCESS)
}

fn constructive_labeling(spec: &FamilySpec, graph: &Graph) -> Result<Labeling, String> {
    let labeling = match *spec {
        FamilySpec::Complete { n } => label_complete(n),
        FamilySpec::Star { n } => label_star(n),
        FamilySpec::CompleteBipartite { m, n } => label_complete_bipartite(m, n),
        FamilySpec::Wheel { n } => label_wheel(n),
        FamilySpec::Gear { .. } => label_gear(graph),
    };
    labeling.map_err(|e| e.to_string())
}

fn cmd_label(family: FamilyArgs, format: Format, show_positions: bool) -> Result<ExitCode, String> {
    let spec = spec_from(family)?;
    if show_positions && !matches!(spec, FamilySpec::Gear { .. }) {
        return Err("--show-positions only applies to --family gear".into());
    }
    let graph = spec.build().map_err(|e| e.to_string())?;
    let labeling = constructive_labeling(&spec, &graph)?;
    let positions = if show_positions {
        let p = gear_positions(&graph).map_err(|e| e.to_string())?;
        Some(p.iter().collect::<BTreeMap<VertexId, usize>>())
    } else {
        None
    };
    match format {
        Format::Json => print_json(&LabelDocument::new(graph, &labeling, positions))?,
        Format::Dot => {
            let annotations: BTreeMap<VertexId, String> = graph
                .vertices()
                .map(|v| {
                    let mut text = format!("c={}", labeling.get(v).unwrap_or(0));
                    if let Some(p) = &positions {
                        text.push_str(&format!(" x={}", p[&v]));
                    }
                    (v, text)
                })
                .collect();
            print!("{}", graph.to_dot(&annotations));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(graph: &str, labeling: Option<&str>, fail_fast: bool) -> Result<ExitCode, String> {
    let (graph, embedded) = load_graph_document(graph)?;
    let labeling = match labeling {
        Some(path) => load_labeling(path)?,
        None => embedded.ok_or("no --labeling given and the graph document carries no labels")?,
    };
    let violations = check(&graph, &labeling).map_err(|e| e.to_string())?;
    if violations.is_empty() {
        eprintln!(
            "valid radio labeling: span={} diameter={}",
            labeling.span().unwrap_or(0),
            graph.diameter()
        );
        return Ok(ExitCode::SUCCESS);
    }
    let shown = if fail_fast { 1 } else { violations.len() };
    for violation in &violations[..shown] {
        println!("{violation}");
    }
    eprintln!("invalid: {} violation(s)", violations.len());
    Ok(ExitCode::from(1))
}

fn cmd_bound(
    family: OptionalFamilyArgs,
    graph_path: Option<&str>,
    method: Method,
) -> Result<ExitCode, String> {
    let spec = optional_spec_from(family)?;
    if spec.is_some() && graph_path.is_some() {
        return Err("give either --family or --graph, not both".into());
    }
    let graph = match (&spec, graph_path) {
        (Some(spec), None) => spec.build().map_err(|e| e.to_string())?,
        (None, Some(path)) => load_graph_document(path)?.0,
        _ => return Err("bound needs --family/--n or --graph".into()),
    };
    let report = match method {
        Method::Trivial => lower_bound_trivial(&graph),
        Method::Ecc => lower_bound_ecc_gap(&graph),
        Method::Gear => {
            let n = as_standard_gear(&graph)
                .ok_or("--method gear needs a gear graph in the standard layout")?;
            lower_bound_gear(n).map_err(|e| e.to_string())?
        }
    };
    print_json(&report)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(
    family: OptionalFamilyArgs,
    graph_path: Option<&str>,
    cfg: &SolverConfig,
) -> Result<ExitCode, String> {
    let spec = optional_spec_from(family)?;
    if spec.is_some() && graph_path.is_some() {
        return Err("give either --family or --graph, not both".into());
    }
    let graph = match (&spec, graph_path) {
        (Some(spec), None) => spec.build().map_err(|e| e.to_string())?,
        (None, Some(path)) => load_graph_document(path)?.0,
        _ => return Err("solve needs --family/--n or --graph".into()),
    };
    let outcome = solve(&graph, cfg);
    print_json(&outcome)?;
    match outcome {
        SolveOutcome::Solved(_) => Ok(ExitCode::SUCCESS),
        SolveOutcome::Inconclusive(_) => Ok(ExitCode::from(3)),
    }
}

fn parse_families(names: &[String]) -> Result<Vec<FamilyName>, String> {
    let all = [
        FamilyName::Complete,
        FamilyName::Star,
        FamilyName::CompleteBipartite,
        FamilyName::Wheel,
        FamilyName::Gear,
    ];
    let mut selected = Vec::new();
    for name in names {
        if name == "all" {
            selected.extend(all);
            continue;
        }
        let family =
            FamilyName::from_str(name, true).map_err(|_| format!("unknown family {name:?}"))?;
        selected.push(family);
    }
    selected.dedup();
    Ok(selected)
}

struct TableRow {
    family: String,
    n: usize,
    spec: FamilySpec,
    /// Anchor the solver at this known lower bound instead of solving
    /// from scratch.
    anchor: Option<u32>,
}

fn table_rows(families: &[FamilyName], max_n: usize, gear_solver_max_n: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for &family in families {
        match family {
            FamilyName::Complete => {
                for n in 1..=max_n {
                    rows.push(TableRow {
                        family: "complete".into(),
                        n,
                        spec: FamilySpec::Complete { n },
                        anchor: None,
                    });
                }
            }
            FamilyName::Star => {
                for n in 2..=max_n {
                    rows.push(TableRow {
                        family: "star".into(),
                        n,
                        spec: FamilySpec::Star { n },
                        anchor: None,
                    });
                }
            }
            FamilyName::CompleteBipartite => {
                for m in 1..=max_n {
                    for n in m..=max_n {
                        // skip K_{1,1}: it is K_2, outside the m+n+1 closed form
                        if m + n >= 3 && m + n <= max_n {
                            rows.push(TableRow {
                                family: format!("complete_bipartite(m={m})"),
                                n,
                                spec: FamilySpec::CompleteBipartite { m, n },
                                anchor: None,
                            });
                        }
                    }
                }
            }
            FamilyName::Wheel => {
                for n in 3..=max_n {
                    rows.push(TableRow {
                        family: "wheel".into(),
                        n,
                        spec: FamilySpec::Wheel { n },
                        anchor: None,
                    });
                }
            }
            FamilyName::Gear => {
                for n in 2..=max_n {
                    let anchor = if n > gear_solver_max_n && n >= 4 {
                        Some(4 * n as u32 + 2)
                    } else {
                        None
                    };
                    rows.push(TableRow {
                        family: "gear".into(),
                        n,
                        spec: FamilySpec::Gear { n },
                        anchor,
                    });
                }
            }
        }
    }
    rows
}

fn cmd_table(
    family_names: &[String],
    max_n: usize,
    gear_solver_max_n: usize,
    row_time_budget: Duration,
    workers: usize,
) -> Result<ExitCode, String> {
    let families = parse_families(family_names)?;
    println!("family,n,lower_bound,constructive_span,solver_rn,agrees");
    for row in table_rows(&families, max_n, gear_solver_max_n) {
        let graph = row.spec.build().map_err(|e| e.to_string())?;

        let lower_bound = match row.spec {
            FamilySpec::Gear { n } if n >= 4 => {
                lower_bound_gear(n).map_err(|e| e.to_string())?.value
            }
            _ => lower_bound_trivial(&graph)
                .value
                .max(lower_bound_ecc_gap(&graph).value),
        };

        let constructive_span = match constructive_labeling(&row.spec, &graph) {
            Ok(labeling) => {
                let violations = check(&graph, &labeling).map_err(|e| e.to_string())?;
                if !violations.is_empty() {
                    return Err(format!(
                        "internal error: constructive labeling of {} n={} is invalid",
                        row.family, row.n
                    ));
                }
                labeling.span()
            }
            Err(_) => None,
        };

        let cfg = SolverConfig {
            time_budget: Some(row_time_budget),
            start_span: row.anchor,
            workers: workers.max(1),
            ..SolverConfig::default()
        };
        let solver_rn = match solve(&graph, &cfg) {
            SolveOutcome::Solved(result) => Some(result.rn),
            SolveOutcome::Inconclusive(_) => None,
        };

        let values: Vec<u32> = constructive_span.into_iter().chain(solver_rn).collect();
        let agrees = if values.is_empty() {
            "".to_string()
        } else if values.iter().all(|&v| lower_bound <= v)
            && values.windows(2).all(|w| w[0] == w[1])
        {
            "yes".to_string()
        } else {
            "no".to_string()
        };

        let fmt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        println!(
            "{},{},{},{},{},{}",
            row.family,
            row.n,
            lower_bound,
            fmt(constructive_span),
            fmt(solver_rn),
            agrees
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_duration(text: &str) -> Result<Duration, String> {
    let text = text.trim();
    let split = text
        .find(|c: char| !c.is_ascii_digit() && c != '.')
        .unwrap_or(text.len());
    let (number, unit) = text.split_at(split);
    let value: f64 = number
        .parse()
        .map_err(|_| format!("invalid duration {text:?}"))?;
    let seconds = match unit.trim() {
        "ms" => value / 1000.0,
        "" | "s" => value,
        "m" | "min" => value * 60.0,
        "h" => value * 3600.0,
        other => return Err(format!("unknown duration unit {other:?}")),
    };
    if !seconds.is_finite() || seconds < 0.0 {
        return Err(format!("invalid duration {text:?}"));
    }
    Ok(Duration::from_secs_f64(seconds))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duration_parsing() {
        assert_eq!(parse_duration("60s").unwrap(), Duration::from_secs(60));
        assert_eq!(parse_duration("2m").unwrap(), Duration::from_secs(120));
        assert_eq!(parse_duration("500ms").unwrap(), Duration::from_millis(500));
        assert_eq!(parse_duration("5").unwrap(), Duration::from_secs(5));
        assert!(parse_duration("5parsecs").is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(make_spec(FamilyName::Gear, 8, None).is_ok());
        assert!(make_spec(FamilyName::Gear, 8, Some(2)).is_err());
        assert!(make_spec(FamilyName::CompleteBipartite, 3, None).is_err());
        assert_eq!(
            make_spec(FamilyName::CompleteBipartite, 3, Some(2)).unwrap(),
            FamilySpec::CompleteBipartite { m: 2, n: 3 }
        );
    }
}
