//! Sweep configuration: a flat `key = value` text format with a JSON
//! alternative, resolved against case-study defaults.
//!
//! Recognized keys (all optional):
//!
//! ```text
//! # platform
//! mass = 3.5            # [kg]
//! arm_length = 0.385    # [m]
//! thrust_coeff = 1.5e-3 # [N/Hz^2]
//! drag_coeff = 4.59e-5  # [N*m/Hz^2]
//! input_max = 11664     # [Hz^2]
//! gravity = 9.81        # [m/s^2]
//! # tilt grid, degrees
//! alpha_min = 0
//! alpha_max = 89
//! alpha_step = 0.5
//! # oracle verification
//! oracle = false
//! slice_resolution = 400
//! volume_resolution = 200
//! oracle_samples = 30
//! mc_samples = 200000
//! seed = 7
//! tol_volume = 1e-9
//! tol_area = 0.02
//! tol_extra = 0.02
//! tol_radii = 1e-9
//! # output
//! out = sweep.csv
//! format = csv
//! ```
//!
//! Lines starting with `#` and blank lines are ignored; a trailing `#`
//! comment is allowed after a value. A file whose first character is `{`
//! is parsed as a JSON object with the same keys.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::json;
use thiserror::Error;

use sth_core::PlatformParams;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Json { path: PathBuf, message: String },
    #[error("invalid `{field}`: {message}")]
    Invalid { field: &'static str, message: String },
}

/// Output encoding for data files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// Relative tolerances for the oracle comparisons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Polytope volume vs. corner-hull volume.
    pub volume: f64,
    /// Closed-form slice area vs. sampled hull area.
    pub area: f64,
    /// Closed-form extra-hovering volume vs. grid counting.
    pub extra: f64,
    /// Closed-form radii vs. generic distances on exact vertices.
    pub radii: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            volume: 1e-9,
            area: 0.02,
            extra: 0.02,
            radii: 1e-9,
        }
    }
}

/// Fully resolved sweep configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub platform: PlatformParams,
    /// Tilt grid in degrees.
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_step: f64,
    /// Run the oracle comparisons alongside the sweep.
    pub oracle_enabled: bool,
    /// Samples per simplex axis for slice hulls.
    pub slice_resolution: usize,
    /// Cells per axis for extra-hovering volume counting.
    pub volume_resolution: usize,
    /// Cap on the number of tilt angles verified per metric.
    pub oracle_samples: usize,
    /// Sample count for the seeded Monte Carlo cross-check.
    pub mc_samples: usize,
    /// Seed for the Monte Carlo cross-check; off when absent.
    pub seed: Option<u64>,
    pub tolerances: Tolerances,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            platform: PlatformParams::default(),
            alpha_min: 0.0,
            alpha_max: 89.0,
            alpha_step: 0.5,
            oracle_enabled: false,
            slice_resolution: 400,
            volume_resolution: 200,
            oracle_samples: 30,
            mc_samples: 200_000,
            seed: None,
            tolerances: Tolerances::default(),
            out: None,
            format: OutputFormat::Csv,
        }
    }
}

/// Raw key set shared by the flat and JSON front ends.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    mass: Option<f64>,
    arm_length: Option<f64>,
    thrust_coeff: Option<f64>,
    drag_coeff: Option<f64>,
    input_max: Option<f64>,
    gravity: Option<f64>,
    alpha_min: Option<f64>,
    alpha_max: Option<f64>,
    alpha_step: Option<f64>,
    oracle: Option<bool>,
    slice_resolution: Option<usize>,
    volume_resolution: Option<usize>,
    oracle_samples: Option<usize>,
    mc_samples: Option<usize>,
    seed: Option<u64>,
    tol_volume: Option<f64>,
    tol_area: Option<f64>,
    tol_extra: Option<f64>,
    tol_radii: Option<f64>,
    out: Option<String>,
    format: Option<String>,
}

impl SweepConfig {
    /// Load and validate a config file; missing keys fall back to the
    /// case-study defaults.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let content = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let raw = if content.trim_start().starts_with('{') {
            parse_json(path, &content)?
        } else {
            parse_flat(path, &content)?
        };
        Self::resolve(raw)
    }

    fn resolve(raw: RawConfig) -> Result<Self, ConfigError> {
        let defaults = PlatformParams::default();
        let platform = PlatformParams::new(
            raw.mass.unwrap_or(defaults.mass),
            raw.arm_length.unwrap_or(defaults.arm_length),
            raw.thrust_coeff.unwrap_or(defaults.thrust_coeff),
            raw.drag_coeff.unwrap_or(defaults.drag_coeff),
            raw.input_max.unwrap_or(defaults.input_max),
            raw.gravity.unwrap_or(defaults.gravity),
        )
        .map_err(|e| ConfigError::Invalid {
            field: "platform",
            message: e.to_string(),
        })?;

        let base = SweepConfig::default();
        let format = match raw.format.as_deref() {
            None => base.format,
            Some("csv") => OutputFormat::Csv,
            Some("json") => OutputFormat::Json,
            Some(other) => {
                return Err(ConfigError::Invalid {
                    field: "format",
                    message: format!("expected csv or json, got {other}"),
                })
            }
        };
        let config = SweepConfig {
            platform,
            alpha_min: raw.alpha_min.unwrap_or(base.alpha_min),
            alpha_max: raw.alpha_max.unwrap_or(base.alpha_max),
            alpha_step: raw.alpha_step.unwrap_or(base.alpha_step),
            oracle_enabled: raw.oracle.unwrap_or(base.oracle_enabled),
            slice_resolution: raw.slice_resolution.unwrap_or(base.slice_resolution),
            volume_resolution: raw.volume_resolution.unwrap_or(base.volume_resolution),
            oracle_samples: raw.oracle_samples.unwrap_or(base.oracle_samples),
            mc_samples: raw.mc_samples.unwrap_or(base.mc_samples),
            seed: raw.seed,
            tolerances: Tolerances {
                volume: raw.tol_volume.unwrap_or(base.tolerances.volume),
                area: raw.tol_area.unwrap_or(base.tolerances.area),
                extra: raw.tol_extra.unwrap_or(base.tolerances.extra),
                radii: raw.tol_radii.unwrap_or(base.tolerances.radii),
            },
            out: raw.out.map(PathBuf::from),
            format,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !self.alpha_min.is_finite() || self.alpha_min < 0.0 {
            return Err(ConfigError::Invalid {
                field: "alpha_min",
                message: format!("must be at least 0 degrees, got {}", self.alpha_min),
            });
        }
        if !self.alpha_max.is_finite() || self.alpha_max >= 90.0 {
            return Err(ConfigError::Invalid {
                field: "alpha_max",
                message: format!(
                    "must be below 90 degrees (tilt domain is [0, 90)), got {}",
                    self.alpha_max
                ),
            });
        }
        if self.alpha_min > self.alpha_max {
            return Err(ConfigError::Invalid {
                field: "alpha_min",
                message: format!(
                    "must not exceed alpha_max ({} > {})",
                    self.alpha_min, self.alpha_max
                ),
            });
        }
        if !self.alpha_step.is_finite() || self.alpha_step <= 0.0 {
            return Err(ConfigError::Invalid {
                field: "alpha_step",
                message: format!("must be positive, got {}", self.alpha_step),
            });
        }
        if self.slice_resolution < 2 {
            return Err(ConfigError::Invalid {
                field: "slice_resolution",
                message: format!("must be at least 2, got {}", self.slice_resolution),
            });
        }
        if self.volume_resolution < 1 {
            return Err(ConfigError::Invalid {
                field: "volume_resolution",
                message: "must be at least 1".into(),
            });
        }
        if self.oracle_samples < 1 {
            return Err(ConfigError::Invalid {
                field: "oracle_samples",
                message: "must be at least 1".into(),
            });
        }
        for (field, value) in [
            ("tol_volume", self.tolerances.volume),
            ("tol_area", self.tolerances.area),
            ("tol_extra", self.tolerances.extra),
            ("tol_radii", self.tolerances.radii),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(ConfigError::Invalid {
                    field,
                    message: format!("must be positive, got {value}"),
                });
            }
        }
        Ok(())
    }

    /// The tilt grid in degrees: `alpha_min + k * alpha_step`, covering the
    /// requested interval.
    pub fn tilt_grid(&self) -> Vec<f64> {
        let span = self.alpha_max - self.alpha_min;
        let count = (span / self.alpha_step + 1e-6).floor() as usize + 1;
        (0..count)
            .map(|k| self.alpha_min + k as f64 * self.alpha_step)
            .filter(|&d| d < 90.0)
            .collect()
    }

    /// Resolved settings as JSON for the metadata sidecar. Deterministic:
    /// contains no timestamps or environment data.
    pub fn to_metadata_json(&self) -> serde_json::Value {
        json!({
            "platform": {
                "mass": self.platform.mass,
                "arm_length": self.platform.arm_length,
                "thrust_coeff": self.platform.thrust_coeff,
                "drag_coeff": self.platform.drag_coeff,
                "input_max": self.platform.input_max,
                "gravity": self.platform.gravity,
            },
            "alpha_min": self.alpha_min,
            "alpha_max": self.alpha_max,
            "alpha_step": self.alpha_step,
            "oracle": self.oracle_enabled,
            "slice_resolution": self.slice_resolution,
            "volume_resolution": self.volume_resolution,
            "oracle_samples": self.oracle_samples,
            "mc_samples": self.mc_samples,
            "seed": self.seed,
            "tolerances": {
                "volume": self.tolerances.volume,
                "area": self.tolerances.area,
                "extra": self.tolerances.extra,
                "radii": self.tolerances.radii,
            },
            "format": self.format.to_string(),
        })
    }
}

fn parse_json(path: &Path, content: &str) -> Result<RawConfig, ConfigError> {
    serde_json::from_str(content).map_err(|e| ConfigError::Json {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn parse_flat(path: &Path, content: &str) -> Result<RawConfig, ConfigError> {
    let mut raw = RawConfig::default();
    for (index, full_line) in content.lines().enumerate() {
        let line_no = index + 1;
        let line = full_line
            .split_once('#')
            .map_or(full_line, |(head, _)| head)
            .trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::Parse {
                path: path.to_path_buf(),
                line: line_no,
                message: format!("expected `key = value`, got `{line}`"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let parse_err = |message: String| ConfigError::Parse {
            path: path.to_path_buf(),
            line: line_no,
            message,
        };
        let float = |v: &str| {
            v.parse::<f64>()
                .map_err(|_| parse_err(format!("`{key}` expects a number, got `{v}`")))
        };
        let uint = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| parse_err(format!("`{key}` expects a nonnegative integer, got `{v}`")))
        };
        match key {
            "mass" => raw.mass = Some(float(value)?),
            "arm_length" => raw.arm_length = Some(float(value)?),
            "thrust_coeff" => raw.thrust_coeff = Some(float(value)?),
            "drag_coeff" => raw.drag_coeff = Some(float(value)?),
            "input_max" => raw.input_max = Some(float(value)?),
            "gravity" => raw.gravity = Some(float(value)?),
            "alpha_min" => raw.alpha_min = Some(float(value)?),
            "alpha_max" => raw.alpha_max = Some(float(value)?),
            "alpha_step" => raw.alpha_step = Some(float(value)?),
            "oracle" => {
                raw.oracle = Some(value.parse::<bool>().map_err(|_| {
                    parse_err(format!("`oracle` expects true or false, got `{value}`"))
                })?)
            }
            "slice_resolution" => raw.slice_resolution = Some(uint(value)?),
            "volume_resolution" => raw.volume_resolution = Some(uint(value)?),
            "oracle_samples" => raw.oracle_samples = Some(uint(value)?),
            "mc_samples" => raw.mc_samples = Some(uint(value)?),
            "seed" => {
                raw.seed = Some(value.parse::<u64>().map_err(|_| {
                    parse_err(format!("`seed` expects a nonnegative integer, got `{value}`"))
                })?)
            }
            "tol_volume" => raw.tol_volume = Some(float(value)?),
            "tol_area" => raw.tol_area = Some(float(value)?),
            "tol_extra" => raw.tol_extra = Some(float(value)?),
            "tol_radii" => raw.tol_radii = Some(float(value)?),
            "out" => raw.out = Some(value.to_string()),
            "format" => raw.format = Some(value.to_string()),
            unknown => {
                return Err(parse_err(format!("unknown key `{unknown}`")));
            }
        }
    }
    Ok(raw)
}
