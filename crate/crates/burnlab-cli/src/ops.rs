use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Subcommand};
use serde_json::json;

use burnlab::bounds::bounds;
use burnlab::burn::validate;
use burnlab::gadget::{
    build_gadget, caterpillar_preimage, certificate_sequence, solve_distinct_3partition,
    verify_gadget_structure, ThreePartitionInstance,
};
use burnlab::generate;
use burnlab::graph::Graph;
use burnlab::interval::IntervalModel;
use burnlab::pkfree::{pkfree_horizon_bound, pkfree_sequence};
use burnlab::solver::{burning_number_exact, burning_number_oracle, Budget, BurnOutcome};
use burnlab::suite::{run_all, SuiteConfig};
use burnlab::variants::{
    edge_burning_number, total_burning_number, verify_relations, RelationStatus, VariantResult,
};

use crate::report::{fnv1a_hex, Consumed, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

#[derive(Debug)]
pub enum CliError {
    Lib(burnlab::Error),
    Io { path: PathBuf, source: std::io::Error },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<burnlab::Error> for CliError {
    fn from(e: burnlab::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use burnlab::Error::*;
        match self {
            CliError::Lib(Parse { .. }) | CliError::Lib(MalformedInstance(_)) => EXIT_PARSE,
            CliError::Lib(Internal(_)) => EXIT_INTERNAL,
            CliError::Lib(_) => EXIT_PRECONDITION,
            CliError::Io { .. } => EXIT_PARSE,
            CliError::Usage(_) => EXIT_PRECONDITION,
        }
    }
}

type CmdResult = Result<i32, CliError>;

/// Solver budget: `unlimited`, an expansion count, a wall-clock limit
/// (`500ms`, `2s`), or both joined by a comma (`100000,2s`).
#[derive(Debug, Clone)]
pub struct BudgetArg {
    pub budget: Budget,
    /// As typed, echoed verbatim in the run report.
    pub raw: String,
}

impl FromStr for BudgetArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let raw = s.to_string();
        if s.eq_ignore_ascii_case("unlimited") {
            return Ok(BudgetArg { budget: Budget::UNLIMITED, raw });
        }
        let mut budget = Budget::UNLIMITED;
        for part in s.split(',') {
            let part = part.trim();
            let bad = |what: &str| format!("bad budget component {part:?}: {what}");
            if let Some(ms) = part.strip_suffix("ms") {
                budget.max_millis = ms.trim().parse().map_err(|_| bad("expected integer milliseconds"))?;
            } else if let Some(secs) = part.strip_suffix('s') {
                let secs: u64 = secs.trim().parse().map_err(|_| bad("expected integer seconds"))?;
                budget.max_millis = secs.saturating_mul(1000);
            } else {
                budget.max_expansions =
                    part.parse().map_err(|_| bad("expected an expansion count"))?;
            }
        }
        Ok(BudgetArg { budget, raw })
    }
}

fn read_input(path: &Path, report: &mut RunReport) -> Result<String, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    report.input_digest = Some(fnv1a_hex(&bytes));
    String::from_utf8(bytes).map_err(|_| CliError::Usage(format!(
        "{}: input is not valid UTF-8",
        path.display()
    )))
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

// ---------------------------------------------------------------- burn

#[derive(Debug, Args)]
pub struct BurnArgs {
    /// Graph file: "n m" header, then one "u v" edge per line.
    pub graph: PathBuf,
    #[command(flatten)]
    pub mode: BurnMode,
    /// Solver budget; required for --exact and --oracle.
    #[arg(long)]
    pub budget: Option<BudgetArg>,
    /// Assert that the graph is a unit-interval graph, enabling the
    /// diameter-based bound rules. Unsound if the claim is false.
    #[arg(long)]
    pub interval: bool,
    /// Write the winning sequence ("k; b_1 ... b_t") to this file.
    #[arg(long, value_name = "PATH")]
    pub witness_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BurnMode {
    /// Exact burning number by iterative-deepening search.
    #[arg(long)]
    pub exact: bool,
    /// Certified lower/upper bounds only; never runs the solver.
    #[arg(long)]
    pub bounds: bool,
    /// Definition-level brute force; guarded to small graphs.
    #[arg(long)]
    pub oracle: bool,
}

fn require_budget(budget: &Option<BudgetArg>, what: &str) -> Result<Budget, CliError> {
    budget.as_ref().map(|b| b.budget).ok_or_else(|| {
        CliError::Usage(format!(
            "{what} needs an explicit --budget (use \"--budget unlimited\" to opt out)"
        ))
    })
}

pub fn cmd_burn(args: &BurnArgs, report: &mut RunReport) -> CmdResult {
    let text = read_input(&args.graph, report)?;
    let g = Graph::parse_edge_list(&text)?;
    println!("graph: {} vertices, {} edges", g.n(), g.edge_count());

    if args.mode.bounds {
        let b = bounds(&g, args.interval)?;
        println!("bounds: {} <= b <= {}  ({:?}, {:?})", b.lower, b.upper, b.lower_rule, b.upper_rule);
        report.results = json!({
            "mode": "bounds",
            "n": g.n(),
            "edges": g.edge_count(),
            "bounds": b,
        });
        return Ok(EXIT_OK);
    }

    if args.mode.oracle {
        require_budget(&args.budget, "--oracle")?;
        let k = burning_number_oracle(&g)?;
        println!("burning number: {k} (brute force)");
        report.results = json!({
            "mode": "oracle",
            "n": g.n(),
            "edges": g.edge_count(),
            "burning_number": k,
        });
        return Ok(EXIT_OK);
    }

    let budget = require_budget(&args.budget, "--exact")?;
    let solved = burning_number_exact(&g, budget)?;
    let mut consumed = Consumed::default();
    consumed.add(&solved.stats);
    report.consumed = Some(consumed);
    match solved.outcome {
        BurnOutcome::Exact { k, witness } => {
            println!("burning number: {k}");
            println!("witness: {}", witness.to_text());
            if let Some(path) = &args.witness_out {
                write_output(path, &format!("{}\n", witness.to_text()))?;
            }
            report.results = json!({
                "mode": "exact",
                "n": g.n(),
                "edges": g.edge_count(),
                "burning_number": k,
                "witness": witness.to_text(),
            });
            Ok(EXIT_OK)
        }
        BurnOutcome::Exhausted { lower, upper } => {
            println!("budget exhausted: {lower} <= b <= {upper}");
            report.results = json!({
                "mode": "exact",
                "n": g.n(),
                "edges": g.edge_count(),
                "exhausted": true,
                "lower": lower,
                "upper": upper,
            });
            Ok(EXIT_BUDGET)
        }
    }
}

// ------------------------------------------------------------- variant

#[derive(Debug, Args)]
pub struct VariantArgs {
    /// Graph file: "n m" header, then one "u v" edge per line.
    pub graph: PathBuf,
    #[command(flatten)]
    pub mode: VariantMode,
    /// Budget for each inner exact solve.
    #[arg(long)]
    pub budget: BudgetArg,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VariantMode {
    /// Burning number of the line graph (edge burning).
    #[arg(long)]
    pub edge: bool,
    /// Burning number of the total graph (total burning).
    #[arg(long)]
    pub total: bool,
    /// Check the edge/total/spike relations against the plain number.
    #[arg(long)]
    pub relations: bool,
}

fn variant_outcome(r: &VariantResult, label: &str, report: &mut RunReport) -> i32 {
    let mut consumed = Consumed::default();
    consumed.add(&r.solved.stats);
    report.consumed = Some(consumed);
    let (value, exit) = match r.solved.outcome {
        BurnOutcome::Exact { k, .. } => {
            println!("{label} burning number: {k}");
            (json!({ "burning_number": k }), EXIT_OK)
        }
        BurnOutcome::Exhausted { lower, upper } => {
            println!("budget exhausted: {lower} <= {label} burning number <= {upper}");
            (json!({ "exhausted": true, "lower": lower, "upper": upper }), EXIT_BUDGET)
        }
    };
    report.results = json!({
        "mode": label,
        "derived_n": r.derived.n(),
        "derived_edges": r.derived.edge_count(),
        "result": value,
    });
    exit
}

pub fn cmd_variant(args: &VariantArgs, report: &mut RunReport) -> CmdResult {
    let text = read_input(&args.graph, report)?;
    let g = Graph::parse_edge_list(&text)?;
    let budget = args.budget.budget;
    println!("graph: {} vertices, {} edges", g.n(), g.edge_count());

    if args.mode.edge {
        let r = edge_burning_number(&g, budget)?;
        return Ok(variant_outcome(&r, "edge", report));
    }
    if args.mode.total {
        let r = total_burning_number(&g, budget)?;
        return Ok(variant_outcome(&r, "total", report));
    }

    let rel = verify_relations(&g, budget)?;
    for c in &rel.checks {
        println!(
            "{:<28} [{}, {}] vs [{}, {}]  {:?}",
            c.relation, c.lhs.0, c.lhs.1, c.rhs.0, c.rhs.1, c.status
        );
    }
    report.results = json!({ "mode": "relations", "checks": rel.checks });
    if rel.any_violated() {
        return Ok(EXIT_VERIFICATION);
    }
    if rel.checks.iter().any(|c| c.status == RelationStatus::Unverified) {
        return Ok(EXIT_BUDGET);
    }
    Ok(EXIT_OK)
}

// -------------------------------------------------------------- gadget

#[derive(Debug, Args)]
pub struct GadgetArgs {
    /// Instance file: one positive integer per line, # comments.
    pub instance: PathBuf,
    /// Re-derive every structural promise from the built graph.
    #[arg(long)]
    pub verify: bool,
    /// Find a distinct triple partition and emit the witness burning
    /// sequence it certifies.
    #[arg(long)]
    pub certificate: bool,
    /// Write the gadget artifacts (edge list, interval model, metadata,
    /// DOT, witness) into this directory.
    #[arg(long, value_name = "DIR")]
    pub emit_dir: Option<PathBuf>,
}

pub fn cmd_gadget(args: &GadgetArgs, report: &mut RunReport) -> CmdResult {
    let text = read_input(&args.instance, report)?;
    let inst = ThreePartitionInstance::parse(&text)?;
    let (g, meta) = build_gadget(&inst)?;
    let horizon = 2 * meta.m + 1;
    println!(
        "gadget: {} elements, target {}, m={} -> {} vertices, spine {}, horizon {horizon}",
        inst.elements().len(),
        inst.target(),
        meta.m,
        g.n(),
        meta.spine_len,
    );

    let mut results = json!({
        "m": meta.m,
        "groups": meta.groups,
        "target": meta.target,
        "n": g.n(),
        "edges": g.edge_count(),
        "spine_len": meta.spine_len,
        "horizon": horizon,
    });
    let mut exit = EXIT_OK;

    if let Some(dir) = &args.emit_dir {
        std::fs::create_dir_all(dir)
            .map_err(|source| CliError::Io { path: dir.clone(), source })?;
        write_output(&dir.join("gadget.edges"), &g.to_edge_list())?;
        write_output(&dir.join("gadget.intervals"), &meta.interval_model.to_text())?;
        write_output(&dir.join("gadget.dot"), &g.to_dot())?;
        let meta_json = serde_json::to_string_pretty(&meta).expect("metadata serializes");
        write_output(&dir.join("gadget.meta.json"), &format!("{meta_json}\n"))?;
        println!("artifacts written to {}", dir.display());
    }

    if args.verify {
        let structure = verify_gadget_structure(&g, &meta);
        let mut rows = structure.checks.clone();

        let b = bounds(&g, true)?;
        rows.push(burnlab::gadget::StructureCheck {
            name: "lower_bound_reaches_horizon".into(),
            pass: b.lower == horizon,
            detail: format!("certified lower {} via {:?}", b.lower, b.lower_rule),
        });
        let preimage = caterpillar_preimage(&g, &meta);
        rows.push(burnlab::gadget::StructureCheck {
            name: "caterpillar_line_graph_roundtrip".into(),
            pass: preimage.is_ok(),
            detail: match &preimage {
                Ok((tree, _)) => format!("tree on {} vertices", tree.n()),
                Err(e) => e.to_string(),
            },
        });
        for row in &rows {
            println!("{} {:<34} {}", if row.pass { "pass" } else { "FAIL" }, row.name, row.detail);
        }
        if rows.iter().any(|r| !r.pass) {
            exit = EXIT_VERIFICATION;
        }
        results["structure"] = serde_json::to_value(&rows).expect("rows serialize");
    }

    if args.certificate {
        let partition = solve_distinct_3partition(&inst).ok_or_else(|| {
            CliError::Usage("no distinct triple partition exists; cannot certify".into())
        })?;
        let seq = certificate_sequence(&inst, &partition, &meta)?;
        let ok = validate(&g, &seq)?;
        println!("certificate: {}", seq.to_text());
        println!("validates at horizon {horizon}: {ok}");
        if let Some(dir) = &args.emit_dir {
            write_output(&dir.join("certificate.witness"), &format!("{}\n", seq.to_text()))?;
        }
        results["certificate"] = json!({
            "partition": partition,
            "witness": seq.to_text(),
            "validates": ok,
        });
        if !ok {
            exit = EXIT_VERIFICATION;
        }
    }

    report.results = results;
    Ok(exit)
}

// ------------------------------------------------------------ generate

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: Family,
    /// Write the edge list here instead of standard output.
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,
    /// Also write a DOT rendering.
    #[arg(long, value_name = "PATH", global = true)]
    pub dot: Option<PathBuf>,
    /// Also write the interval model (families that have one).
    #[arg(long, value_name = "PATH", global = true)]
    pub intervals: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Path on n vertices.
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Cycle on n >= 3 vertices.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Complete graph on n vertices.
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Star: one center joined to the given number of leaves.
    Star {
        #[arg(long)]
        leaves: usize,
    },
    /// Spider: r legs of length r-1 from one center.
    Spider {
        #[arg(long)]
        r: usize,
    },
    /// k-by-k complete bipartite core with one pendant per core vertex.
    #[command(alias = "gtilde")]
    PendantBiclique {
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Caterpillar from explicit per-spine leaf counts.
    Caterpillar {
        #[arg(long)]
        spine: usize,
        /// Comma-separated leaf count per spine vertex.
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<usize>,
    },
    /// Spine path with a pendant tooth over each listed spine pair
    /// (p, p+1); carries a proper interval model.
    Comb {
        #[arg(long)]
        spine: usize,
        /// Comma-separated, strictly increasing pair positions.
        #[arg(long, value_delimiter = ',')]
        teeth: Vec<usize>,
    },
    /// Uniform random labelled tree.
    RandomTree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random tree plus random extra edges, connected by construction.
    RandomConnected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Random caterpillar with its (non-proper) interval model.
    RandomCaterpillar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn build_family(family: &Family) -> Result<(Graph, Option<IntervalModel>, &'static str, serde_json::Value), CliError> {
    Ok(match family {
        Family::Path { n } => (generate::path(*n)?, None, "path", json!({ "n": n })),
        Family::Cycle { n } => (generate::cycle(*n)?, None, "cycle", json!({ "n": n })),
        Family::Complete { n } => (generate::complete(*n)?, None, "complete", json!({ "n": n })),
        Family::Star { leaves } => {
            (generate::star(*leaves)?, None, "star", json!({ "leaves": leaves }))
        }
        Family::Spider { r } => (generate::spider(*r)?, None, "spider", json!({ "r": r })),
        Family::PendantBiclique { k } => (
            generate::pendant_biclique(*k)?,
            None,
            "pendant-biclique",
            json!({ "k": k }),
        ),
        Family::Caterpillar { spine, leaves } => (
            generate::caterpillar(*spine, leaves)?,
            None,
            "caterpillar",
            json!({ "spine": spine, "leaves": leaves }),
        ),
        Family::Comb { spine, teeth } => {
            let (g, model) = generate::comb(*spine, teeth)?;
            (g, Some(model), "comb", json!({ "spine": spine, "teeth": teeth }))
        }
        Family::RandomTree { n, seed } => (
            generate::random_tree(*n, *seed)?,
            None,
            "random-tree",
            json!({ "n": n, "seed": seed }),
        ),
        Family::RandomConnected { n, seed } => (
            generate::random_connected(*n, *seed)?,
            None,
            "random-connected",
            json!({ "n": n, "seed": seed }),
        ),
        Family::RandomCaterpillar { n, seed } => {
            let (g, model) = generate::random_caterpillar(*n, *seed)?;
            (g, Some(model), "random-caterpillar", json!({ "n": n, "seed": seed }))
        }
    })
}

pub fn cmd_generate(args: &GenerateArgs, report: &mut RunReport) -> CmdResult {
    let (g, model, name, params) = build_family(&args.family)?;
    if let Family::RandomTree { seed, .. }
    | Family::RandomConnected { seed, .. }
    | Family::RandomCaterpillar { seed, .. } = args.family
    {
        report.seed = Some(seed);
    }

    match &args.out {
        Some(path) => {
            write_output(path, &g.to_edge_list())?;
            println!("{name}: {} vertices, {} edges -> {}", g.n(), g.edge_count(), path.display());
        }
        // No --out: the edge list itself goes to stdout so the command
        // can be piped; the summary would corrupt it.
        None => print!("{}", g.to_edge_list()),
    }
    if let Some(path) = &args.dot {
        write_output(path, &g.to_dot())?;
    }
    if let Some(path) = &args.intervals {
        let model = model.as_ref().ok_or_else(|| {
            CliError::Usage(format!("family {name} has no interval model"))
        })?;
        write_output(path, &model.to_text())?;
    }

    report.results = json!({
        "family": name,
        "params": params,
        "n": g.n(),
        "edges": g.edge_count(),
    });
    Ok(EXIT_OK)
}

// -------------------------------------------------------------- pkfree

#[derive(Debug, Args)]
pub struct PkfreeArgs {
    /// Graph file: "n m" header, then one "u v" edge per line.
    pub graph: PathBuf,
    /// Forbidden induced path length: the graph must have no induced
    /// path on k vertices.
    pub k: usize,
    /// Echoed in the report; this command runs no budgeted solver.
    #[arg(long)]
    pub budget: Option<BudgetArg>,
    /// Write the sequence ("k; b_1 ... b_t") to this file.
    #[arg(long, value_name = "PATH")]
    pub witness_out: Option<PathBuf>,
}

pub fn cmd_pkfree(args: &PkfreeArgs, report: &mut RunReport) -> CmdResult {
    let text = read_input(&args.graph, report)?;
    let g = Graph::parse_edge_list(&text)?;
    let seq = pkfree_sequence(&g, args.k)?;
    let ok = validate(&g, &seq)?;
    let bound = pkfree_horizon_bound(args.k);
    println!("graph: {} vertices, {} edges", g.n(), g.edge_count());
    println!("sequence: {}", seq.to_text());
    println!("horizon {} within bound {bound}: {}", seq.horizon(), seq.horizon() <= bound);
    if let Some(path) = &args.witness_out {
        write_output(path, &format!("{}\n", seq.to_text()))?;
    }
    report.results = json!({
        "k": args.k,
        "n": g.n(),
        "edges": g.edge_count(),
        "witness": seq.to_text(),
        "horizon": seq.horizon(),
        "bound": bound,
        "validates": ok,
    });
    if !ok || seq.horizon() > bound {
        return Ok(EXIT_VERIFICATION);
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------- verify-all

#[derive(Debug, Args)]
pub struct VerifyAllArgs {
    /// Base seed for every generated corpus.
    #[arg(long)]
    pub seed: u64,
    /// Budget for each inner exact solve.
    #[arg(long)]
    pub budget: BudgetArg,
}

pub fn cmd_verify_all(args: &VerifyAllArgs, report: &mut RunReport) -> CmdResult {
    report.seed = Some(args.seed);
    let cfg = SuiteConfig { seed: args.seed, budget: args.budget.budget };
    let results = run_all(&cfg);
    for r in &results {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!("[verify] {}: {verdict} — {} ({} ms)", r.name, r.detail, r.millis);
    }
    let failed: Vec<&burnlab::suite::CriterionResult> =
        results.iter().filter(|r| !r.pass).collect();
    let exit = if failed.is_empty() {
        EXIT_OK
    } else if failed.iter().all(|r| r.detail.contains("budget exhausted")) {
        EXIT_BUDGET
    } else {
        EXIT_VERIFICATION
    };
    println!("{} of {} criteria passed", results.len() - failed.len(), results.len());
    report.results = json!({
        "criteria": results
            .iter()
            .map(|r| json!({
                "name": r.name,
                "pass": r.pass,
                "detail": r.detail,
                "millis": r.millis,
            }))
            .collect::<Vec<_>>(),
    });
    Ok(exit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_argument_grammar() {
        let b = BudgetArg::from_str("unlimited").unwrap().budget;
        assert_eq!(b.max_expansions, u64::MAX);
        assert_eq!(b.max_millis, u64::MAX);
        let b = BudgetArg::from_str("250000").unwrap().budget;
        assert_eq!(b.max_expansions, 250_000);
        assert_eq!(b.max_millis, u64::MAX);
        let b = BudgetArg::from_str("500ms").unwrap().budget;
        assert_eq!(b.max_millis, 500);
        let b = BudgetArg::from_str("100000,2s").unwrap().budget;
        assert_eq!(b.max_expansions, 100_000);
        assert_eq!(b.max_millis, 2000);
        assert!(BudgetArg::from_str("fast").is_err());
        assert!(BudgetArg::from_str("2m").is_err());
    }
}
