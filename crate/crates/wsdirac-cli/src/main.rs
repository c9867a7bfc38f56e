//! Command-line driver: bound states of the generalized Woods-Saxon
//! potential under spin or pseudospin symmetry.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical or I/O
//! failure. `WSDIRAC_LOG` (error|warn|info|debug) controls stderr logging;
//! artifacts on stdout or `--out` are byte-deterministic for a given
//! configuration.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wsdirac_cli::commands;
use wsdirac_cli::config::{self, ConfigError, FormatChoice, PekerisChoice, RunConfig};

#[derive(Parser)]
#[command(
    name = "wsdirac",
    version,
    about = "Relativistic bound states of the generalized Woods-Saxon well"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energies over the configured (n, kappa) grid
    Spectrum(CommonArgs),
    /// Fixed four-shape s-wave energy table (6-decimal presentation)
    SwaveTable(CommonArgs),
    /// Radial spinor components F, G of one state on a grid
    Wavefunction(CommonArgs),
    /// Shooting-method cross-check of the closed-form levels
    Verify(CommonArgs),
    /// Centrifugal-approximation coefficient report
    Pekeris(CommonArgs),
}

impl Command {
    fn args(&self) -> &CommonArgs {
        match self {
            Command::Spectrum(a)
            | Command::SwaveTable(a)
            | Command::Wavefunction(a)
            | Command::Verify(a)
            | Command::Pekeris(a) => a,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// JSON run configuration
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Write the artifact here instead of the configured path (or stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Override the configured coefficient source
    #[arg(long, value_enum, value_name = "SOURCE")]
    pekeris: Option<PekerisFlag>,
    /// Override the configured output format
    #[arg(long, value_enum, value_name = "FORMAT")]
    format: Option<FormatFlag>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PekerisFlag {
    Paper,
    Taylor,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatFlag {
    Csv,
    Json,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("WSDIRAC_LOG", "warn"))
        .format_timestamp(None)
        .init();
    ExitCode::from(run(&Cli::parse()))
}

fn run(cli: &Cli) -> u8 {
    let args = cli.command.args();
    let mut cfg = match config::load_config(&args.config) {
        Ok(cfg) => cfg,
        Err(e) => return config_failure(&e),
    };
    apply_overrides(&mut cfg, args);
    if matches!(cli.command, Command::Wavefunction(_)) && cfg.wavefunction.is_none() {
        eprintln!("/wavefunction: block required by the wavefunction command");
        return 2;
    }
    let rendered = match cli.command {
        Command::Spectrum(_) => commands::spectrum(&cfg),
        Command::SwaveTable(_) => commands::swave_table(&cfg),
        Command::Wavefunction(_) => commands::wavefunction(&cfg),
        Command::Verify(_) => commands::verify(&cfg),
        Command::Pekeris(_) => commands::pekeris(&cfg),
    };
    let text = match rendered {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: {e}");
            return 3;
        }
    };
    match write_artifact(cfg.output.path.as_deref(), &text) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            3
        }
    }
}

fn apply_overrides(cfg: &mut RunConfig, args: &CommonArgs) {
    if let Some(flag) = args.pekeris {
        cfg.pekeris_source = match flag {
            PekerisFlag::Paper => PekerisChoice::Paper,
            PekerisFlag::Taylor => PekerisChoice::Taylor,
        };
    }
    if let Some(flag) = args.format {
        cfg.output.format = match flag {
            FormatFlag::Csv => FormatChoice::Csv,
            FormatFlag::Json => FormatChoice::Json,
        };
    }
    if let Some(out) = &args.out {
        cfg.output.path = Some(out.display().to_string());
    }
}

fn config_failure(e: &ConfigError) -> u8 {
    match e {
        ConfigError::Invalid(issues) => {
            for issue in issues {
                eprintln!("{issue}");
            }
        }
        other => eprintln!("{other}"),
    }
    2
}

fn write_artifact(path: Option<&str>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}
