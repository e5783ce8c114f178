//! Command-line front end for the hexarotor tilt-angle analysis: config
//! loading, metric sweeps with CSV/JSON emission, design reports, and the
//! oracle verification battery.

pub mod config;
pub mod report;
pub mod sweep;
pub mod verify;

pub use config::{ConfigError, OutputFormat, SweepConfig, Tolerances};
pub use report::{design_report, render_report_text, DesignReport, DEFAULT_CANDIDATES};
pub use sweep::{
    render_records_csv, render_records_json, render_reports_csv, render_reports_json,
    sweep_records, SweepRow,
};
pub use verify::{run_verification, subsample, Verification};
