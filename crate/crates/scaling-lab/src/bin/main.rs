//! Command-line driver for the collective-spin metrology toolkit.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

use bec_model::{
    couplings, critical_numbers, eta, load_config, scaling_exponent, time_budget, Species,
    TrapGeometry,
};
use interferometer::{run_interferometer, KerrConfig};
use protocols::{evaluate_eq1, ProtocolKind, ProtocolSpec};
use scaling_lab::{
    fit_exponent, geometric_grid, run_sweep, EvalMode, LabError, NoiseModel, SweepConfig,
    SweepProtocol, CSV_HEADER,
};

#[derive(Parser)]
#[command(
    name = "scaling-lab",
    about = "Precision-scaling experiments for collective-spin metrology protocols"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProtocolArg {
    Halfcat,
    Jz2,
    Njz,
}

impl ProtocolArg {
    fn kind(self) -> ProtocolKind {
        match self {
            ProtocolArg::Halfcat => ProtocolKind::HalfCatJz2,
            ProtocolArg::Jz2 => ProtocolKind::ProductJz2,
            ProtocolArg::Njz => ProtocolKind::ProductNjz,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepProtocolArg {
    Halfcat,
    Jz2,
    Njz,
    Bec,
}

#[derive(Args)]
struct BecParams {
    /// Longitudinal trap dimensions (1-3).
    #[arg(long, default_value_t = 3)]
    d: u8,
    /// Trap hardness exponent.
    #[arg(long, default_value_t = 2.0)]
    q: f64,
    /// Key-value config file overriding the built-in preset.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl BecParams {
    fn resolve(&self) -> Result<(TrapGeometry, Species), LabError> {
        match &self.config {
            Some(path) => Ok(load_config(path)?),
            None => Ok((TrapGeometry::rb87_default(self.d, self.q)?, Species::rb87())),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one operating point by seeded Monte Carlo.
    Simulate {
        #[arg(long, value_enum)]
        protocol: ProtocolArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: f64,
        /// True coupling strength.
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        /// Trials per estimate.
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        seed: u64,
        /// Input polar angle for the quadratic product protocol.
        #[arg(long)]
        beta: Option<f64>,
        /// Estimates used for the deviation and slope.
        #[arg(long, default_value_t = 200)]
        repeats: usize,
    },
    /// Sweep the probe size and fit the precision-scaling exponent.
    Sweep {
        #[arg(long, value_enum)]
        protocol: SweepProtocolArg,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        #[arg(long, default_value_t = 10_000)]
        nu: usize,
        #[arg(long, default_value_t = 200)]
        repeats: usize,
        /// Closed-form precision per point.
        #[arg(long, conflicts_with = "montecarlo")]
        analytic: bool,
        /// Sampled estimation per point (default).
        #[arg(long)]
        montecarlo: bool,
        /// Per-particle dephasing rate.
        #[arg(long, default_value_t = 0.0)]
        noise_dephasing: f64,
        /// Per-particle loss probability.
        #[arg(long, default_value_t = 0.0)]
        noise_loss: f64,
        /// Atom-number standard deviation.
        #[arg(long, default_value_t = 0.0)]
        noise_dn: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        bec: BecParams,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        /// Optional JSON mirror of the full result.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decompose a Kerr configuration and report the output fringe moments.
    Interferometer {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        chi1: f64,
        #[arg(long, allow_negative_numbers = true)]
        chi2: f64,
        #[arg(long, allow_negative_numbers = true)]
        chi12: f64,
        /// Input-beamsplitter polar angle.
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        beta: f64,
    },
    /// Report condensate couplings, mode volume, and scaling exponent.
    Bec {
        /// Built-in species/trap preset.
        #[arg(long, default_value = "rb87")]
        preset: String,
        #[command(flatten)]
        params: BecParams,
        /// Atom number.
        #[arg(long)]
        n: f64,
    },
    /// Fit a power-law exponent to a sweep CSV.
    Fit {
        /// Input CSV produced by `sweep`.
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), LabError> {
    match cmd {
        Cmd::Simulate {
            protocol,
            n,
            t,
            gamma,
            nu,
            seed,
            beta,
            repeats,
        } => {
            let mut spec = ProtocolSpec::new(protocol.kind(), n, t, gamma, nu);
            if let Some(beta) = beta {
                spec = spec.with_beta(beta);
            }
            let result = evaluate_eq1(&spec, repeats, None, seed)?;
            println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
            Ok(())
        }
        Cmd::Sweep {
            protocol,
            n_min,
            n_max,
            points,
            t,
            nu,
            repeats,
            analytic,
            montecarlo: _,
            noise_dephasing,
            noise_loss,
            noise_dn,
            seed,
            bec,
            out,
            json,
        } => {
            let protocol = match protocol {
                SweepProtocolArg::Halfcat => SweepProtocol::HalfCat,
                SweepProtocolArg::Jz2 => SweepProtocol::Jz2,
                SweepProtocolArg::Njz => SweepProtocol::Njz,
                SweepProtocolArg::Bec => {
                    let (trap, species) = bec.resolve()?;
                    SweepProtocol::Bec { trap, species }
                }
            };
            let config = SweepConfig {
                protocol,
                n_grid: geometric_grid(n_min, n_max, points)?,
                t,
                nu,
                repeats,
                mode: if analytic {
                    EvalMode::Analytic
                } else {
                    EvalMode::MonteCarlo
                },
                noise: NoiseModel {
                    dephasing_rate: noise_dephasing,
                    loss_fraction: noise_loss,
                    number_sigma: noise_dn,
                    ..Default::default()
                },
                seed,
            };
            let result = run_sweep(&config)?;
            std::fs::write(&out, result.to_csv())?;
            if let Some(path) = json {
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&result).expect("serializable"),
                )?;
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "exponent": result.exponent,
                    "exponent_stderr": result.exponent_stderr,
                    "config_hash": result.config_hash,
                    "points": result.rows.len(),
                    "csv": out,
                }))
                .expect("serializable")
            );
            Ok(())
        }
        Cmd::Interferometer {
            n,
            chi1,
            chi2,
            chi12,
            beta,
        } => {
            let k = KerrConfig::new(chi1, chi2, chi12);
            let moments = run_interferometer(n, beta, &k, dicke_core::Observable::Jz)
                .map_err(|e| LabError::InvalidConfig(e.to_string()))?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "decomposition": k.decompose(),
                    "output_jz": moments,
                }))
                .expect("serializable")
            );
            Ok(())
        }
        Cmd::Bec { preset, params, n } => {
            if params.config.is_none() && preset != "rb87" {
                return Err(LabError::InvalidConfig(format!(
                    "unknown preset {preset:?}; only rb87 is built in"
                )));
            }
            let (tg, sp) = params.resolve()?;
            let e = eta(&tg, &sp, n)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "trap": tg,
                    "species": sp,
                    "couplings": couplings(&sp),
                    "critical_numbers": critical_numbers(&tg, &sp)?,
                    "eta": e,
                    "scaling_exponent": scaling_exponent(tg.d, tg.q),
                    "time_budget": time_budget(&sp, n)?,
                }))
                .expect("serializable")
            );
            Ok(())
        }
        Cmd::Fit { input } => {
            let text = std::fs::read_to_string(&input)?;
            let points = parse_sweep_csv(&text)?;
            let (exponent, stderr) = fit_exponent(&points)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "exponent": exponent,
                    "exponent_stderr": stderr,
                    "points": points.len(),
                }))
                .expect("serializable")
            );
            Ok(())
        }
    }
}

fn parse_sweep_csv(text: &str) -> Result<Vec<(f64, f64)>, LabError> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header.trim() == CSV_HEADER => {}
        other => {
            return Err(LabError::InvalidConfig(format!(
                "expected header {CSV_HEADER:?}, got {other:?}"
            )))
        }
    }
    let mut points = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 9 {
            return Err(LabError::InvalidConfig(format!(
                "row {}: expected 9 fields, got {}",
                i + 2,
                fields.len()
            )));
        }
        let n: f64 = fields[1]
            .parse()
            .map_err(|e| LabError::InvalidConfig(format!("row {}: n: {e}", i + 2)))?;
        let dg: f64 = fields[6]
            .parse()
            .map_err(|e| LabError::InvalidConfig(format!("row {}: delta_gamma: {e}", i + 2)))?;
        points.push((n, dg));
    }
    Ok(points)
}
