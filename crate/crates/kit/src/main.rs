use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use verlinde_kit::commands::{cmd_check_dynkin, cmd_fusion, cmd_lie, cmd_rep, RepCommand};
use verlinde_kit::{exit, Config, Format, KitError, KitResult, Report};

#[derive(Parser, Debug)]
#[command(name = "verlinde-kit", version, about = "Verlinde algebras, graded quivers and quantum root systems")]
struct Cli {
    /// Rounding tolerance for float-to-integer reconstruction.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Largest admissible torus order.
    #[arg(long, global = true)]
    torus_cap: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for verification.
    #[arg(long, global = true)]
    parallel: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan data, roots, Coxeter numbers and center.
    Lie { family: String, rank: usize },
    /// Fusion coefficients at a level, optionally restricted to `k ⊗ j`.
    Fusion {
        family: String,
        rank: usize,
        /// `[LEVEL] [K J]`: the level unless `--level` is given, then
        /// optionally two highest weights such as `1,0 0,1`.
        #[arg(num_args = 0..=3)]
        args: Vec<String>,
        #[arg(long)]
        level: Option<u64>,
        /// Cross-check against the Verlinde formula and the ring axioms.
        #[arg(long)]
        verify: bool,
    },
    /// Operations on the representation defined by a quiver file.
    Rep {
        #[arg(value_enum)]
        action: RepCommand,
        file: PathBuf,
        /// Override the level stored in the file.
        #[arg(long)]
        level: Option<u64>,
    },
    /// Decide whether a quiver is a quantum Dynkin diagram.
    CheckDynkin {
        file: PathBuf,
        #[arg(long)]
        level: Option<u64>,
    },
}

fn run(cli: Cli) -> KitResult<(Report, Format)> {
    let mut config = Config::from_env()?;
    if let Some(t) = cli.tolerance {
        config.tolerance = t;
    }
    if let Some(c) = cli.torus_cap {
        config.torus_cap = c;
    }
    if let Some(f) = cli.format {
        config.format = f;
    }
    if let Some(p) = cli.parallel {
        config.parallel = p;
    }
    config.limits()?;
    let report = match cli.command {
        Command::Lie { family, rank } => cmd_lie(&family, rank)?,
        Command::Fusion { family, rank, args, level, verify } => {
            let (level, weights) = match level {
                Some(l) => (l, &args[..]),
                None => {
                    let first = args.first().ok_or_else(|| KitError::Usage("a level is required".into()))?;
                    let l = first.parse().map_err(|_| KitError::Usage(format!("bad level {first:?}")))?;
                    (l, &args[1..])
                }
            };
            let pair = match weights {
                [k, j] => Some((k.as_str(), j.as_str())),
                [] => None,
                _ => return Err(KitError::Usage("give both k and j, or neither".into())),
            };
            cmd_fusion(&family, rank, level, pair, verify, &config)?
        }
        Command::Rep { action, file, level } => cmd_rep(action, &file, level, &config)?,
        Command::CheckDynkin { file, level } => cmd_check_dynkin(&file, level, &config)?,
    };
    Ok((report, config.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INPUT as u8 } else { exit::OK as u8 });
        }
    };
    match run(cli) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            ExitCode::from(if report.ok { exit::OK } else { exit::VALIDATION } as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
