mod ops;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use ops::{
    cmd_burn, cmd_gadget, cmd_generate, cmd_pkfree, cmd_variant, cmd_verify_all, BurnArgs,
    GadgetArgs, GenerateArgs, PkfreeArgs, VariantArgs, VerifyAllArgs, EXIT_INTERNAL,
};
use report::RunReport;

/// Graph burning toolkit: exact solving, bounds, burning variants,
/// hardness gadgets, and a self-verification suite.
///
/// Exit codes: 0 success, 1 internal error, 2 unreadable or unparsable
/// input, 3 precondition violated, 4 budget exhausted, 5 a requested
/// verification failed.
#[derive(Parser)]
#[command(name = "burnlab", version)]
struct Cli {
    /// Write the machine-readable run report here.
    #[arg(long, value_name = "PATH", global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Burning number of a graph: exact, bounded, or brute force.
    Burn(BurnArgs),
    /// Edge burning, total burning, and their relation table.
    Variant(VariantArgs),
    /// Build, verify, and certify a distinct-3-partition gadget.
    Gadget(GadgetArgs),
    /// Emit a graph from one of the built-in families.
    Generate(GenerateArgs),
    /// Burning sequence via the dominating-set recursion for graphs
    /// with no long induced path.
    Pkfree(PkfreeArgs),
    /// Run every criterion of the verification suite.
    VerifyAll(VerifyAllArgs),
}

fn main() -> ExitCode {
    // Inner parallelism cap; the commands themselves stay sequential.
    if let Ok(threads) = std::env::var("BURNLAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: BURNLAB_THREADS must be a positive integer");
                return ExitCode::from(ops::EXIT_PRECONDITION as u8);
            }
        }
    }

    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let mut report = RunReport::new(echo.join(" "));
    match &cli.command {
        Command::Burn(a) => report.budget = a.budget.as_ref().map(|b| b.raw.clone()),
        Command::Variant(a) => report.budget = Some(a.budget.raw.clone()),
        Command::VerifyAll(a) => report.budget = Some(a.budget.raw.clone()),
        Command::Pkfree(a) => report.budget = a.budget.as_ref().map(|b| b.raw.clone()),
        _ => {}
    }

    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Burn(a) => cmd_burn(a, &mut report),
        Command::Variant(a) => cmd_variant(a, &mut report),
        Command::Gadget(a) => cmd_gadget(a, &mut report),
        Command::Generate(a) => cmd_generate(a, &mut report),
        Command::Pkfree(a) => cmd_pkfree(a, &mut report),
        Command::VerifyAll(a) => cmd_verify_all(a, &mut report),
    };
    report.elapsed_ms = started.elapsed().as_millis();

    let code = match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if let Some(path) = &cli.json_out {
        if let Err(e) = report.write(path) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return ExitCode::from(EXIT_INTERNAL as u8);
        }
    }
    ExitCode::from(code as u8)
}
