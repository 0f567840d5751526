//! Batch driver for the axisymmetric boundary integral solver.
//!
//! Exit codes: 0 on success, 1 on numerical failure, 2 on configuration
//! errors. Thread count follows RAYON_NUM_THREADS.

mod commands;
mod config;

use clap::{Args, Parser, Subcommand};
use config::RunConfig;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "axibie",
    about = "Direct solver for Laplace Dirichlet problems on surfaces of revolution",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Run configuration file (key = value lines); defaults apply when omitted
    #[arg(short, long)]
    config: Option<PathBuf>,
    /// Override single fields, e.g. --set n_panels=20 (repeatable)
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Output directory override
    #[arg(short, long)]
    out: Option<String>,
}

impl ConfigArgs {
    fn load(&self) -> axibie::Result<RunConfig> {
        let mut cfg = RunConfig::load(self.config.as_deref(), &self.overrides)?;
        if let Some(out) = &self.out {
            cfg.output_dir = out.clone();
        }
        Ok(cfg)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad count '{p}'")))
        .collect()
}

#[derive(Subcommand)]
enum Command {
    /// Solve one manufactured Dirichlet problem and write sigma,
    /// per-target potentials, and a timing summary
    Solve(ConfigArgs),
    /// Error table over panel counts x mode counts
    Convergence {
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Panel counts, e.g. 5,10,20,40,80
        #[arg(long, value_parser = parse_list)]
        panels: Vec<usize>,
        /// Highest azimuthal modes N_F, e.g. 12,25,50,100,200
        #[arg(long, value_parser = parse_list)]
        modes: Vec<usize>,
    },
    /// Per-phase wall times over a (panels x modes) sweep
    Timing {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long, value_parser = parse_list)]
        panels: Vec<usize>,
        #[arg(long, value_parser = parse_list)]
        modes: Vec<usize>,
        /// Also time matrix construction with the adaptive-quadrature
        /// kernel path on near-diagonal blocks
        #[arg(long)]
        compare_oracle: bool,
    },
    /// Singular-value extremes of I + A_n per mode (full SVD; keep sizes modest)
    Conditioning(ConfigArgs),
    /// Exactness residuals of the embedded quadrature rules
    QuadCheck(ConfigArgs),
    /// Print the default configuration file
    Defaults,
}

fn flatten_lists(lists: Vec<Vec<usize>>) -> Vec<usize> {
    lists.into_iter().flatten().collect()
}

fn run() -> axibie::Result<()> {
    match Cli::parse().command {
        Command::Solve(args) => commands::cmd_solve(&args.load()?),
        Command::Convergence { cfg, panels, modes } => {
            let cfg = cfg.load()?;
            commands::cmd_convergence(&cfg, &flatten_lists(panels), &flatten_lists(modes))
        }
        Command::Timing {
            cfg,
            panels,
            modes,
            compare_oracle,
        } => {
            let cfg = cfg.load()?;
            commands::cmd_timing(
                &cfg,
                &flatten_lists(panels),
                &flatten_lists(modes),
                compare_oracle,
            )
        }
        Command::Conditioning(args) => commands::cmd_conditioning(&args.load()?),
        Command::QuadCheck(args) => commands::cmd_quad_check(&args.load()?),
        Command::Defaults => {
            print!("{}", config::DEFAULTS);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
