use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gpg_switch::classify::VerifyScope;
use gpg_switch::commands::{self, exit_code, Outcome, EXIT_INVALID};
use gpg_switch::cycles::DEFAULT_CYCLE_CAP;
use gpg_switch::io::{Format, RunConfig, DEFAULT_CONJECTURE_BUDGET, LONG_CONJECTURE_BUDGET};
use gpg_switch::Result;

/// Signed prisms P(2n+1,1) up to switching isomorphism.
#[derive(Parser)]
#[command(name = "gpg-switch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Half-parameter: the graph is P(2n+1,k).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value = "md")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    cycle_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex, edge, class and group counts.
    Info(Common),
    /// Cycle census with the expected prism counts.
    Cycles(Common),
    /// Orbit table of all switching classes.
    Classify(Common),
    /// Write the classification as JSON.
    Atlas {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimal signatures in the switching class of a signature.
    Minimal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        signature: String,
    },
    /// Compare two signatures.
    Equivalent {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        sig_a: String,
        #[arg(long)]
        sig_b: String,
        /// Also accept an automorphism after switching.
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Count matchings of one size.
    Matchings {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        aut_only: bool,
        #[arg(long)]
        exclude_forbidden: bool,
    },
    /// Largest minimal signature against the bound n+1.
    Conjecture {
        #[command(flatten)]
        common: Common,
        /// Allow n = 6.
        #[arg(long)]
        long: bool,
    },
    /// Check the reference counts, tables and worked examples.
    VerifyPaper {
        /// 1, 2, 3 or all.
        #[arg(long, default_value = "all")]
        n: String,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn config(c: &Common) -> RunConfig {
    RunConfig {
        n: c.n,
        k: c.k,
        format: c.format,
        jobs: c.jobs,
        cycle_cap: c.cycle_cap,
        ..RunConfig::default()
    }
}

fn scope(text: &str) -> Result<VerifyScope> {
    match text {
        "all" => Ok(VerifyScope::All),
        "1" | "2" | "3" => Ok(VerifyScope::Half(text.parse().expect("digit"))),
        other => Err(gpg_switch::Error::InvalidParameters(format!(
            "--n must be 1, 2, 3 or all, got {other:?}"
        ))),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let cfg = match &cli.command {
        Command::Info(c) | Command::Cycles(c) | Command::Classify(c) => config(c),
        Command::Atlas { common, .. }
        | Command::Minimal { common, .. }
        | Command::Equivalent { common, .. }
        | Command::Matchings { common, .. } => config(common),
        Command::Conjecture { common, long } => {
            let budget = if *long { LONG_CONJECTURE_BUDGET } else { DEFAULT_CONJECTURE_BUDGET };
            RunConfig { conjecture_budget: budget, ..config(common) }
        }
        Command::VerifyPaper { jobs, .. } => RunConfig { jobs: *jobs, ..RunConfig::default() },
    };
    cfg.validate()?;
    cfg.thread_pool()?.install(|| match &cli.command {
        Command::Info(_) => commands::info(&cfg),
        Command::Cycles(_) => commands::cycles(&cfg),
        Command::Classify(_) => commands::classify(&cfg),
        Command::Atlas { out, .. } => commands::atlas(&cfg, out),
        Command::Minimal { signature, .. } => commands::minimal(&cfg, signature),
        Command::Equivalent { sig_a, sig_b, up_to_iso, .. } => commands::equivalent(&cfg, sig_a, sig_b, *up_to_iso),
        Command::Matchings { size, aut_only, exclude_forbidden, .. } => {
            commands::matchings(&cfg, *size, *aut_only, *exclude_forbidden)
        }
        Command::Conjecture { .. } => commands::conjecture(&cfg),
        Command::VerifyPaper { n, .. } => commands::verify(scope(n)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INVALID as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
