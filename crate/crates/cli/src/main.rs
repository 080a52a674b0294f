use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use defect_oscillator_cli::{
    cmd_coherent, cmd_spectrum, cmd_verify, cmd_wavefunction, Output, RunConfig, Settings,
};

#[derive(Parser)]
#[command(
    name = "defect-osc",
    version,
    about = "Dirac oscillator in topological-defect spacetimes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energy levels over the requested quantum numbers
    Spectrum(Invocation),
    /// Radial Sturmian profiles with their quadrature norms
    Wavefunction(Invocation),
    /// Coherent-state amplitudes over the (tau, rho) grid
    Coherent(Invocation),
    /// Run every numerical check and report residuals
    Verify(Invocation),
}

#[derive(Args)]
struct Invocation {
    /// TOML file with keys named like the long flags
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    settings: Settings,
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID_CONFIG: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (Command::Spectrum(inv)
    | Command::Wavefunction(inv)
    | Command::Coherent(inv)
    | Command::Verify(inv)) = &cli.command;
    let cfg = match RunConfig::from_sources(inv.settings.clone(), inv.config.as_deref()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("defect-osc: {e}");
            return ExitCode::from(EXIT_INVALID_CONFIG);
        }
    };

    let output = match cli.command {
        Command::Spectrum(_) => Ok(Output::Table(cmd_spectrum(&cfg))),
        Command::Wavefunction(_) => cmd_wavefunction(&cfg).map(Output::Table),
        Command::Coherent(_) => cmd_coherent(&cfg).map(Output::Table),
        Command::Verify(_) => Ok(Output::Report(cmd_verify(&cfg))),
    };
    let output = match output {
        Ok(o) => o,
        Err(e) => {
            eprintln!("defect-osc: {e}");
            return ExitCode::FAILURE;
        }
    };

    let written = match &cfg.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            output.write(cfg.format, &mut w)?;
            w.flush()
        }),
        None => output.write(cfg.format, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("defect-osc: cannot write output: {e}");
        return ExitCode::FAILURE;
    }

    match &output {
        Output::Report(r) if !r.passed() => {
            for c in r.checks.iter().filter(|c| !c.passed) {
                eprintln!(
                    "defect-osc: check {} failed (residual {:e})",
                    c.check, c.residual
                );
            }
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
        _ => ExitCode::SUCCESS,
    }
}
