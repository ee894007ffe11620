//! Command-line surface: instance I/O, classification, formulation export,
//! solving, verification suites and corpus generation.
//!
//! Exit codes: 0 success, 2 parse/usage, 3 I/O, 4 precondition mismatch,
//! 5 resource guard exceeded, 1 failed verification.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use multilin::exactlp::{LpError, PolyhedronH, Var};
use multilin::extform::{alpha_ef, beta_ef, junction_ef, ExtformError};
use multilin::guards::Guards;
use multilin::hypergraph::Instance;
use multilin::io::{format_rational, parse_instance, write_instance, write_lp, IoError};
use multilin::pipeline::{
    gen_instance, solve, GenClass, PipelineError, SolveResult, Strategy,
};
use multilin::relaxations::{
    flower_relaxation, objective_of, paper_inequality_count, standard_linearization, RelaxError,
};
use multilin::verify;

#[derive(Parser)]
#[command(
    name = "multilin",
    about = "Binary polynomial optimization over cost-weighted hypergraphs",
    version
)]
struct Cli {
    /// Override the flower rank cap (separation and flower relaxation).
    #[arg(long, global = true)]
    rank_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the instance's hypergraph into the acyclicity hierarchy.
    Classify { path: PathBuf },
    /// Build a formulation and export it as an LP-format text file.
    Formulate {
        path: PathBuf,
        /// One of: std, flower, beta, alpha, junction.
        #[arg(long)]
        kind: String,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
        /// Render coefficients as decimals (lossy) for external solvers.
        #[arg(long)]
        decimal: bool,
    },
    /// Solve the instance.
    Solve {
        path: PathBuf,
        /// One of: auto, std, flower, beta, alpha, junction, brute, cuts.
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Cut budget for the cutting-plane loop.
        #[arg(long, default_value_t = 50)]
        max_rounds: usize,
        /// Emit a machine-readable JSON record instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: padberg, berge, gamma, beta, alpha, separation,
        /// decomposition, exhaustive.
        suite: String,
    },
    /// Generate a class-certified random instance.
    Gen {
        /// One of: berge, gamma, beta, alpha, general.
        #[arg(long)]
        class: String,
        #[arg(short = 'n', long)]
        nodes: usize,
        #[arg(short = 'm', long)]
        edges: usize,
        #[arg(short = 'r', long)]
        rank: usize,
        #[arg(long)]
        seed: u64,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        match e {
            IoError::Parse(_) => Failure::new(2, e.to_string()),
            IoError::Io(_) => Failure::new(3, e.to_string()),
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Failure {
        let code = match &e {
            PipelineError::Precondition(_) | PipelineError::Generation(_) => 4,
            PipelineError::Guard(_) => 5,
            PipelineError::Lp(LpError::Guard(_)) => 5,
            PipelineError::Relax(RelaxError::Guard(_)) => 5,
            PipelineError::Extform(ExtformError::Guard(_)) => 5,
            PipelineError::Extform(ExtformError::Precondition(_)) => 4,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ExtformError> for Failure {
    fn from(e: ExtformError) -> Failure {
        let code = match &e {
            ExtformError::Precondition(_) => 4,
            ExtformError::Guard(_) => 5,
            ExtformError::Lp(LpError::Guard(_)) => 5,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<RelaxError> for Failure {
    fn from(e: RelaxError) -> Failure {
        let code = match &e {
            RelaxError::Guard(_) => 5,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(3, format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_instance(&text)?)
}

fn main() -> ExitCode {
    // Die quietly when a pipe consumer closes early (e.g. `... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let mut guards = Guards::default();
    if let Some(cap) = cli.rank_cap {
        guards = guards.with_rank_cap(cap);
    }
    match dispatch(cli.command, &guards) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(command: Command, guards: &Guards) -> Result<(), Failure> {
    match command {
        Command::Classify { path } => cmd_classify(&path),
        Command::Formulate {
            path,
            kind,
            out,
            decimal,
        } => cmd_formulate(&path, &kind, &out, decimal, guards),
        Command::Solve {
            path,
            strategy,
            max_rounds,
            json,
        } => cmd_solve(&path, &strategy, max_rounds, json, guards),
        Command::Verify { suite } => cmd_verify(&suite, guards),
        Command::Gen {
            class,
            nodes,
            edges,
            rank,
            seed,
            out,
        } => cmd_gen(&class, nodes, edges, rank, seed, &out),
    }
}

fn cmd_classify(path: &Path) -> Result<(), Failure> {
    let inst = read_instance(path)?;
    let g = inst.hypergraph();
    let report = multilin::acyclicity::classify(g);
    println!("berge: {}", report.berge);
    println!("gamma: {}", report.gamma);
    println!("beta:  {}", report.beta);
    println!("alpha: {}", report.alpha);
    println!("class: {}", report.strongest_class());
    let edge_str = |e: &multilin::hypergraph::Edge| format!("{{{}}}", g.edge_names(e).join(","));
    let w = &report.witness;
    if let Some(c) = &w.berge_cycle {
        let seq: Vec<String> = c
            .nodes
            .iter()
            .zip(&c.edges)
            .map(|(&v, e)| format!("{} {}", g.node_name(v), edge_str(e)))
            .collect();
        println!("berge-cycle: {}", seq.join(" "));
    }
    if let Some(c) = &w.gamma_cycle {
        let seq: Vec<String> = c
            .nodes
            .iter()
            .zip(&c.edges)
            .map(|(&v, e)| format!("{} {}", g.node_name(v), edge_str(e)))
            .collect();
        println!("gamma-cycle: {}", seq.join(" "));
    }
    if let Some(c) = &w.beta_cycle {
        let seq: Vec<String> = c
            .nodes
            .iter()
            .zip(&c.edges)
            .map(|(&v, e)| format!("{} {}", g.node_name(v), edge_str(e)))
            .collect();
        println!("beta-cycle: {}", seq.join(" "));
    }
    if let Some(order) = &w.nest_point_order {
        let names: Vec<&str> = order.iter().map(|&v| g.node_name(v)).collect();
        println!("nest-point-order: {}", names.join(" "));
    }
    if let Some(rip) = &w.rip_ordering {
        let parts: Vec<String> = rip
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                if k == 0 {
                    edge_str(e)
                } else {
                    format!("{} (into #{})", edge_str(e), rip.back[k] + 1)
                }
            })
            .collect();
        println!("rip-ordering: {}", parts.join(" "));
    }
    if let Some(residue) = &w.gyo_residue {
        let parts: Vec<String> = residue.iter().map(edge_str).collect();
        println!("gyo-residue: {}", parts.join(" "));
    }
    Ok(())
}

fn cmd_formulate(
    path: &Path,
    kind: &str,
    out: &Path,
    decimal: bool,
    guards: &Guards,
) -> Result<(), Failure> {
    let inst = read_instance(path)?;
    let g = inst.hypergraph();
    let report = multilin::acyclicity::classify(g);
    let poly: PolyhedronH = match kind {
        "std" => standard_linearization(g),
        "flower" => flower_relaxation(g, guards)?,
        "beta" => {
            if !report.beta {
                return Err(Failure::new(
                    4,
                    "kind beta requires a beta-acyclic hypergraph (beta check failed)",
                ));
            }
            beta_ef(g, guards)?.polyhedron
        }
        "alpha" => {
            if !report.alpha {
                return Err(Failure::new(
                    4,
                    "kind alpha requires an alpha-acyclic hypergraph (alpha check failed)",
                ));
            }
            alpha_ef(g, guards)?.polyhedron
        }
        "junction" => junction_ef(g, guards)?.polyhedron,
        other => return Err(Failure::new(2, format!("unknown formulation kind {other:?}"))),
    };
    let obj = objective_of(&inst);
    let text = write_lp(g, &poly, &obj, decimal);
    std::fs::write(out, text)
        .map_err(|e| Failure::new(3, format!("cannot write {}: {e}", out.display())))?;
    let (eqs, ineqs) = poly.census();
    println!("kind: {kind}");
    println!("variables: {}", poly.dim());
    println!("equations: {eqs}");
    println!("inequalities: {ineqs}");
    println!("max-nonzeros-per-row: {}", poly.max_nonzeros());
    if kind == "std" {
        println!("paper-inequalities: {}", paper_inequality_count(g));
    }
    println!("written: {}", out.display());
    Ok(())
}

fn render_solution(inst: &Instance, result: &SolveResult) -> Option<String> {
    let g = inst.hypergraph();
    result.solution.as_ref().map(|p| {
        g.nodes()
            .map(|v| {
                let val = p
                    .get(&Var::Node(v))
                    .map(format_rational)
                    .unwrap_or_else(|| "?".into());
                format!("{}={}", g.node_name(v), val)
            })
            .collect::<Vec<_>>()
            .join(" ")
    })
}

fn cmd_solve(
    path: &Path,
    strategy: &str,
    max_rounds: usize,
    json: bool,
    guards: &Guards,
) -> Result<(), Failure> {
    let inst = read_instance(path)?;
    let strat = Strategy::parse(strategy)
        .ok_or_else(|| Failure::new(2, format!("unknown strategy {strategy:?}")))?;
    let result = solve(&inst, strat, max_rounds, guards)?;
    if json {
        let g = inst.hypergraph();
        let solution = result.solution.as_ref().map(|p| {
            let mut map = serde_json::Map::new();
            for v in g.nodes() {
                if let Some(x) = p.get(&Var::Node(v)) {
                    map.insert(
                        g.node_name(v).to_string(),
                        serde_json::Value::String(format_rational(x)),
                    );
                }
            }
            serde_json::Value::Object(map)
        });
        let record = serde_json::json!({
            "value": format_rational(&result.value),
            "certificate": result.certificate.name(),
            "formulation": result.formulation,
            "classification": {
                "berge": result.classification.berge,
                "gamma": result.classification.gamma,
                "beta": result.classification.beta,
                "alpha": result.classification.alpha,
                "class": result.classification.strongest_class(),
            },
            "lp_bound": result.lp_bound.as_ref().map(format_rational),
            "solution": solution,
            "stats": {
                "vars": result.stats.vars,
                "constraints": result.stats.constraints,
                "cut_rounds": result.stats.cut_rounds,
                "cuts_added": result.stats.cuts_added,
                "wall_ms": result.stats.wall_ms,
            },
        });
        println!("{record}");
    } else {
        println!("class: {}", result.classification.strongest_class());
        println!("formulation: {}", result.formulation);
        println!("certificate: {}", result.certificate.name());
        println!("value: {}", format_rational(&result.value));
        if let Some(bound) = &result.lp_bound {
            println!("lp-bound: {}", format_rational(bound));
        }
        match render_solution(&inst, &result) {
            Some(s) => println!("solution: {s}"),
            None => println!("warning: no exact certificate at this scale; value is an upper bound"),
        }
        println!(
            "stats: vars={} constraints={} cut_rounds={} cuts_added={} wall_ms={}",
            result.stats.vars,
            result.stats.constraints,
            result.stats.cut_rounds,
            result.stats.cuts_added,
            result.stats.wall_ms
        );
    }
    Ok(())
}

fn cmd_verify(suite: &str, guards: &Guards) -> Result<(), Failure> {
    let report = verify::run_named_suite(suite, guards).ok_or_else(|| {
        Failure::new(
            2,
            format!(
                "unknown suite {suite:?}; available: {}",
                verify::SUITE_NAMES.join(", ")
            ),
        )
    })?;
    print!("{}", report.render());
    if report.pass() {
        Ok(())
    } else {
        Err(Failure::new(1, format!("suite {suite} failed")))
    }
}

fn cmd_gen(
    class: &str,
    nodes: usize,
    edges: usize,
    rank: usize,
    seed: u64,
    out: &Path,
) -> Result<(), Failure> {
    let class_parsed = GenClass::parse(class)
        .ok_or_else(|| Failure::new(2, format!("unknown class {class:?}")))?;
    let inst = gen_instance(class_parsed, nodes, edges, rank, seed)?;
    let text = write_instance(&inst);
    std::fs::write(out, text)
        .map_err(|e| Failure::new(3, format!("cannot write {}: {e}", out.display())))?;
    let report = multilin::acyclicity::classify(inst.hypergraph());
    println!(
        "manifest: class={class} n={nodes} m={edges} r={rank} seed={seed} classified={} path={}",
        report.strongest_class(),
        out.display()
    );
    Ok(())
}
