use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sth_cli::config::{ConfigError, OutputFormat, SweepConfig};
use sth_cli::report::{design_report, render_report_text, DEFAULT_CANDIDATES};
use sth_cli::sweep::{
    render_records_csv, render_records_json, render_reports_csv, render_reports_json,
    sweep_records,
};
use sth_cli::verify::{run_verification, subsample};
use sth_core::{case_boundaries, peak_volume_angle, TiltAngle};

/// Tilt-angle maneuverability analysis for star-shaped tilted hexarotors.
#[derive(Parser)]
#[command(name = "sth", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the tilt angle and emit the metric curves
    Sweep(CommonArgs),
    /// Evaluate design candidates and their per-metric maximizers
    Report {
        #[command(flatten)]
        common: CommonArgs,
        /// Candidate tilt angles in degrees (comma separated)
        #[arg(long, value_delimiter = ',')]
        candidates: Option<Vec<f64>>,
        /// Weights for V_FB, A_FBh, r_o, r_i, V_FBh in the conservative pick
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
    },
    /// Compare every closed form against its sampling oracle
    Verify(CommonArgs),
    /// Print case boundaries and platform facts
    Info(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Config file (flat key = value, or JSON)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Smallest tilt angle [deg]
    #[arg(long)]
    alpha_min: Option<f64>,
    /// Largest tilt angle [deg]
    #[arg(long)]
    alpha_max: Option<f64>,
    /// Tilt grid step [deg]
    #[arg(long)]
    alpha_step: Option<f64>,
    /// Run the oracle comparisons alongside the sweep
    #[arg(long)]
    oracle: bool,
    /// Slice-sampling resolution per simplex axis
    #[arg(long)]
    resolution: Option<usize>,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format: csv or json
    #[arg(long)]
    format: Option<String>,
    /// Seed for the Monte Carlo cross-check (verification only)
    #[arg(long)]
    seed: Option<u64>,
}

impl CommonArgs {
    fn resolve(&self) -> Result<SweepConfig, ConfigError> {
        let mut config = match &self.config {
            Some(path) => SweepConfig::load(path)?,
            None => SweepConfig::default(),
        };
        if let Some(v) = self.alpha_min {
            config.alpha_min = v;
        }
        if let Some(v) = self.alpha_max {
            config.alpha_max = v;
        }
        if let Some(v) = self.alpha_step {
            config.alpha_step = v;
        }
        if self.oracle {
            config.oracle_enabled = true;
        }
        if let Some(v) = self.resolution {
            config.slice_resolution = v;
        }
        if let Some(v) = &self.out {
            config.out = Some(v.clone());
        }
        if let Some(v) = &self.format {
            config.format = match v.as_str() {
                "csv" => OutputFormat::Csv,
                "json" => OutputFormat::Json,
                other => {
                    return Err(ConfigError::Invalid {
                        field: "format",
                        message: format!("expected csv or json, got {other}"),
                    })
                }
            };
        }
        if let Some(v) = self.seed {
            config.seed = Some(v);
        }
        config.validate()?;
        Ok(config)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run() -> Result<ExitCode, Box<dyn std::error::Error>> {
    let cli = Cli::parse();
    match cli.command {
        Command::Sweep(common) => {
            let config = common.resolve()?;
            let rows = sweep_records(&config)?;
            let data = match config.format {
                OutputFormat::Csv => render_records_csv(&rows),
                OutputFormat::Json => render_records_json(&rows),
            };
            emit(&config, &data, None)?;

            if config.oracle_enabled {
                let alphas = subsample(&config.tilt_grid(), config.oracle_samples);
                let verification = run_verification(&config, &alphas);
                let report_data = match config.format {
                    OutputFormat::Csv => render_reports_csv(&verification.reports),
                    OutputFormat::Json => render_reports_json(&verification.reports),
                };
                emit(&config, &report_data, Some("oracle"))?;
                if !verification.passed {
                    eprintln!(
                        "oracle disagreement: worst relative error {:.3e}",
                        verification.worst_rel_err
                    );
                    return Ok(ExitCode::from(2));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report {
            common,
            candidates,
            weights,
        } => {
            let config = common.resolve()?;
            let candidates = candidates.unwrap_or_else(|| DEFAULT_CANDIDATES.to_vec());
            let weights = match weights {
                None => None,
                Some(w) => Some(<[f64; 5]>::try_from(w.as_slice()).map_err(|_| {
                    ConfigError::Invalid {
                        field: "weights",
                        message: "expected exactly five weights".into(),
                    }
                })?),
            };
            let report = design_report(&config, &candidates, weights)?;
            print!("{}", render_report_text(&report));
            if config.out.is_some() {
                let data = match config.format {
                    OutputFormat::Csv => render_records_csv(&report.rows),
                    OutputFormat::Json => render_records_json(&report.rows),
                };
                emit(&config, &data, None)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(common) => {
            let mut config = common.resolve()?;
            // verification defaults to a battery grid spanning cases A-C
            // rather than the full sweep grid
            if common.alpha_min.is_none() && common.alpha_max.is_none()
                && common.alpha_step.is_none() && common.config.is_none()
            {
                config.alpha_min = 2.0;
                config.alpha_max = 68.0;
                config.alpha_step = 2.0;
            }
            let alphas = subsample(&config.tilt_grid(), config.oracle_samples);
            let verification = run_verification(&config, &alphas);
            let data = match config.format {
                OutputFormat::Csv => render_reports_csv(&verification.reports),
                OutputFormat::Json => render_reports_json(&verification.reports),
            };
            emit(&config, &data, None)?;
            eprintln!(
                "verify: {} comparisons, worst relative error {:.3e}",
                verification.reports.len(),
                verification.worst_rel_err
            );
            if verification.passed {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("oracle disagreement beyond tolerance");
                Ok(ExitCode::from(2))
            }
        }
        Command::Info(common) => {
            let config = common.resolve()?;
            print_info(&config);
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Write data to the configured output (a suffixed sidecar when `tag` is
/// given), or stdout. File outputs get a deterministic metadata sidecar.
fn emit(config: &SweepConfig, data: &str, tag: Option<&str>) -> std::io::Result<()> {
    match &config.out {
        None => {
            print!("{data}");
            Ok(())
        }
        Some(path) => {
            let target = match tag {
                None => path.clone(),
                Some(tag) => sidecar(path, &format!("{tag}.{}", config.format)),
            };
            std::fs::write(&target, data)?;
            if tag.is_none() {
                let meta = serde_json::to_string_pretty(&config.to_metadata_json())
                    .expect("metadata serializes");
                std::fs::write(sidecar(path, "meta.json"), meta + "\n")?;
            }
            Ok(())
        }
    }
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.file_name().map_or_else(String::new, |n| {
        n.to_string_lossy().into_owned()
    });
    name.push('.');
    name.push_str(suffix);
    path.with_file_name(name)
}

fn print_info(config: &SweepConfig) {
    let p = config.platform;
    println!(
        "platform: mass {} kg, arm {} m, thrust_coeff {} N/Hz^2, drag_coeff {} N*m/Hz^2, \
         input_max {} Hz^2, gravity {} m/s^2",
        p.mass, p.arm_length, p.thrust_coeff, p.drag_coeff, p.input_max, p.gravity
    );
    println!("weight: {} N", p.weight());
    let fmt = |a: Option<TiltAngle>| match a {
        Some(angle) => format!("{:.4} deg", angle.degrees()),
        None => "none".into(),
    };
    let b = case_boundaries(&p);
    println!("case A up to {} (one rotor pair can hold the weight)", fmt(b.ab));
    println!("case B up to {} (two rotor pairs needed)", fmt(b.bc));
    println!("case C up to {} (all rotor pairs needed)", fmt(b.cd));
    match b.cd {
        Some(angle) => println!("hover infeasible (case D) beyond {}", fmt(Some(angle))),
        None => match (b.ab, b.bc) {
            (None, None) => println!("hover infeasible at every tilt (case D everywhere)"),
            _ => println!("hover feasible across the full tilt domain"),
        },
    }
    println!(
        "zero-moment volume peaks at {:.4} deg (arctan of sqrt(2))",
        peak_volume_angle().degrees()
    );
}
