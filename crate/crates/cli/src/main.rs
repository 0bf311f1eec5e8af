//! `lexpack`: bounds, constructions and exact packing chromatic numbers of
//! lexicographic products from the command line.
//!
//! Exit codes: 0 success, 1 mathematical negative (invalid coloring or no
//! coloring with the requested `k`), 2 usage or parse error, 3 timeout.

mod spec;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use lexpack_core::graph::{packing_number, Graph};
use lexpack_core::io::write_edge_list;
use lexpack_core::lexproduct::lex_product;
use lexpack_core::registry::{BoundRegistry, ConstructionRegistry, LexPair};
use lexpack_core::solver::{
    exact_chi_rho, find_coloring_with_k, verify_coloring, Budget, PackingColoring, SearchOutcome,
};

use crate::spec::GraphSpec;

#[derive(Parser)]
#[command(name = "lexpack", version, about = "Packing colorings of lexicographic products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every bound formula for G ∘ H.
    Bounds {
        #[arg(long)]
        g: GraphSpec,
        #[arg(long)]
        h: GraphSpec,
        #[arg(long)]
        json: bool,
    },
    /// Compute χ_ρ exactly, or decide whether a k-coloring exists.
    Exact {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 60)]
        budget_seconds: u64,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Build a layered coloring and write it as JSON.
    Construct {
        #[arg(long)]
        method: String,
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        g: Option<GraphSpec>,
        /// Path length; shorthand for `--g path:N`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        h: GraphSpec,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a coloring file against a graph.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        coloring: std::path::PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Maximum t-packing of a graph.
    Rho {
        #[arg(long)]
        g: GraphSpec,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        json: bool,
    },
    /// Write G ∘ H as an edge list.
    Product {
        #[arg(long)]
        g: GraphSpec,
        #[arg(long)]
        h: GraphSpec,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    #[arg(long)]
    g: Option<GraphSpec>,
    /// Two factor specs `G H`; the target is their lexicographic product.
    #[arg(long, num_args = 2, value_names = ["G", "H"])]
    product: Option<Vec<GraphSpec>>,
}

impl Target {
    fn load(&self) -> Result<(Graph, Value), Failure> {
        match (&self.g, &self.product) {
            (Some(g), _) => Ok((g.load().map_err(Failure::Usage)?, json!({ "g": g.to_string() }))),
            (None, Some(factors)) => {
                let g = factors[0].load().map_err(Failure::Usage)?;
                let h = factors[1].load().map_err(Failure::Usage)?;
                let inputs = json!({ "product": [factors[0].to_string(), factors[1].to_string()] });
                Ok((lex_product(&g, &h).into_graph(), inputs))
            }
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Negative,
    Timeout,
}

impl Status {
    fn exit_code(self) -> ExitCode {
        match self {
            Status::Ok => ExitCode::SUCCESS,
            Status::Negative => ExitCode::from(1),
            Status::Timeout => ExitCode::from(3),
        }
    }
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    inputs: Value,
    results: Value,
    status: Status,
}

enum Failure {
    Usage(String),
}

struct Outcome {
    report: RunReport,
    human: String,
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            if outcome.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("report serializes")
                );
            } else {
                print!("{}", outcome.human);
            }
            outcome.report.status.exit_code()
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Bounds { g, h, json } => bounds(&g, &h, json),
        Command::Exact {
            target,
            k,
            budget_seconds,
            budget_nodes,
            json,
        } => {
            if budget_seconds == 0 || budget_nodes == Some(0) {
                return Err(Failure::Usage("budgets must be positive".into()));
            }
            let budget = Budget {
                time: Some(Duration::from_secs(budget_seconds)),
                nodes: budget_nodes,
            };
            exact(&target, k, &budget, json)
        }
        Command::Construct {
            method,
            g,
            n,
            h,
            out,
            json,
        } => {
            let g = match (g, n) {
                (Some(g), _) => g,
                (None, Some(n)) => format!("path:{n}").parse().map_err(Failure::Usage)?,
                (None, None) => unreachable!("clap requires one of --g/--n"),
            };
            construct(&method, &g, &h, out.as_deref(), json)
        }
        Command::Verify {
            target,
            coloring,
            json,
        } => verify(&target, &coloring, json),
        Command::Rho { g, t, json } => rho(&g, t, json),
        Command::Product { g, h, out } => product(&g, &h, out.as_deref()),
    }
}

fn bounds(gs: &GraphSpec, hs: &GraphSpec, json: bool) -> Result<Outcome, Failure> {
    let g = gs.load().map_err(Failure::Usage)?;
    let h = hs.load().map_err(Failure::Usage)?;
    if !g.is_connected() {
        return Err(Failure::Usage(format!("G = {gs} must be connected")));
    }
    let pair = LexPair::new(g, h);
    let mut results = serde_json::Map::new();
    let mut human = format!("G = {gs}, H = {hs}\n");
    for (name, result) in BoundRegistry::standard().evaluate_all(&pair) {
        let (value, text) = match result {
            Ok(Some(report)) => (
                serde_json::to_value(&report).expect("report serializes"),
                report.breakdown(),
            ),
            Ok(None) => (Value::Null, format!("{name}: not applicable\n")),
            Err(e) => (json!({ "error": e.to_string() }), format!("{name}: error: {e}\n")),
        };
        results.insert(name.to_string(), value);
        human.push_str(&text);
    }
    Ok(Outcome {
        report: RunReport {
            command: "bounds",
            inputs: json!({ "g": gs.to_string(), "h": hs.to_string() }),
            results: Value::Object(results),
            status: Status::Ok,
        },
        human,
        json,
    })
}

fn exact(target: &Target, k: Option<u32>, budget: &Budget, json: bool) -> Result<Outcome, Failure> {
    let (graph, mut inputs) = target.load()?;
    inputs["budget_seconds"] = json!(budget.time.map(|t| t.as_secs()));
    inputs["budget_nodes"] = json!(budget.nodes);
    let (results, status, human) = match k {
        Some(k) => {
            inputs["k"] = json!(k);
            match find_coloring_with_k(&graph, k, budget) {
                SearchOutcome::Found(c) => (
                    json!({ "outcome": "found", "coloring": c }),
                    Status::Ok,
                    format!("found a packing coloring with max color {} <= {k}\n{}\n", c.k(), c.to_json()),
                ),
                SearchOutcome::Infeasible => (
                    json!({ "outcome": "none" }),
                    Status::Negative,
                    format!("no packing coloring with {k} colors exists\n"),
                ),
                SearchOutcome::Timeout => (
                    json!({ "outcome": "timeout" }),
                    Status::Timeout,
                    format!("budget exhausted before deciding k = {k}\n"),
                ),
            }
        }
        None => {
            let r = exact_chi_rho(&graph, budget);
            let status = if r.optimal { Status::Ok } else { Status::Timeout };
            let human = if r.optimal {
                format!(
                    "chi_rho = {} (optimal; lower bound {}, {} nodes, {} ms)\n{}\n",
                    r.best.k(),
                    r.lower_bound,
                    r.explored,
                    r.elapsed.as_millis(),
                    r.best.to_json()
                )
            } else {
                format!(
                    "timeout: {} <= chi_rho <= {} ({} nodes)\n{}\n",
                    r.lower_bound,
                    r.best.k(),
                    r.explored,
                    r.best.to_json()
                )
            };
            let mut v = serde_json::to_value(&r).expect("result serializes");
            v["chi_rho"] = json!(r.optimal.then(|| r.best.k()));
            v["status"] = json!(r.status());
            (v, status, human)
        }
    };
    Ok(Outcome {
        report: RunReport {
            command: "exact",
            inputs,
            results,
            status,
        },
        human,
        json,
    })
}

fn construct(
    method: &str,
    gs: &GraphSpec,
    hs: &GraphSpec,
    out: Option<&std::path::Path>,
    json: bool,
) -> Result<Outcome, Failure> {
    let registry = ConstructionRegistry::standard();
    let construction = registry.get(method).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown method `{method}`; available: {}",
            registry.names().join(", ")
        ))
    })?;
    let pair = LexPair::new(
        gs.load().map_err(Failure::Usage)?,
        hs.load().map_err(Failure::Usage)?,
    );
    let target = construction
        .target(&pair)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let plan = construction
        .build(&pair)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let verdict = verify_coloring(pair.product().graph(), &plan.coloring)
        .expect("construction covers the product");
    let body = format!("{}\n", plan.coloring.to_json());
    if let Some(path) = out {
        std::fs::write(path, &body)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut human = format!(
        "{method} on {gs} ∘ {hs}: {} colors (bound {}), {verdict}\n",
        plan.coloring.k(),
        target.value
    );
    if out.is_none() {
        human.push_str(&body);
    }
    let status = if verdict.is_valid() { Status::Ok } else { Status::Negative };
    Ok(Outcome {
        report: RunReport {
            command: "construct",
            inputs: json!({
                "method": method,
                "g": gs.to_string(),
                "h": hs.to_string(),
                "out": out.map(|p| p.display().to_string()),
            }),
            results: json!({
                "k": plan.coloring.k(),
                "bound": target,
                "verdict": verdict,
                "plan": plan,
            }),
            status,
        },
        human,
        json,
    })
}

fn verify(target: &Target, path: &std::path::Path, json: bool) -> Result<Outcome, Failure> {
    let (graph, mut inputs) = target.load()?;
    inputs["coloring"] = json!(path.display().to_string());
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let coloring = PackingColoring::from_json(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let verdict =
        verify_coloring(&graph, &coloring).map_err(|e| Failure::Usage(e.to_string()))?;
    let status = if verdict.is_valid() { Status::Ok } else { Status::Negative };
    Ok(Outcome {
        report: RunReport {
            command: "verify",
            inputs,
            results: json!({ "k": coloring.k(), "verdict": verdict }),
            status,
        },
        human: format!("{verdict}\n"),
        json,
    })
}

fn rho(gs: &GraphSpec, t: u32, json: bool) -> Result<Outcome, Failure> {
    let g = gs.load().map_err(Failure::Usage)?;
    let (size, witness) = packing_number(&g, t).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(Outcome {
        report: RunReport {
            command: "rho",
            inputs: json!({ "g": gs.to_string(), "t": t }),
            results: json!({ "rho": size, "witness": witness }),
            status: Status::Ok,
        },
        human: format!("rho_{t} = {size}, witness {:?}\n", witness.members()),
        json,
    })
}

fn product(gs: &GraphSpec, hs: &GraphSpec, out: Option<&std::path::Path>) -> Result<Outcome, Failure> {
    let g = gs.load().map_err(Failure::Usage)?;
    let h = hs.load().map_err(Failure::Usage)?;
    let p = lex_product(&g, &h);
    let text = write_edge_list(
        p.graph(),
        &[
            format!("lexicographic product G = {gs}, H = {hs}"),
            format!("vertex (g, h) has index g * {} + h", h.order()),
        ],
    );
    let human = match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            format!("wrote {} vertices, {} edges to {}\n", p.graph().order(), p.graph().size(), path.display())
        }
        None => text,
    };
    Ok(Outcome {
        report: RunReport {
            command: "product",
            inputs: json!({ "g": gs.to_string(), "h": hs.to_string() }),
            results: Value::Null,
            status: Status::Ok,
        },
        human,
        json: false,
    })
}
