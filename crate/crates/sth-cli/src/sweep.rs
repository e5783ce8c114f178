//! Tilt sweeps and their CSV/JSON encodings.
//!
//! Output is deterministic: rows ascend in tilt angle, numbers print in
//! Rust's shortest round-trip form, and no timestamps or environment data
//! enter the data files.

use serde::Serialize;

use sth_core::{metrics_record, MetricsRecord, OracleReport, TiltAngle};

use crate::config::{ConfigError, SweepConfig};

/// One sweep row: the requested grid angle in degrees plus its metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub alpha_deg: f64,
    pub record: MetricsRecord,
}

/// Evaluate the metrics over the configured tilt grid, ascending.
pub fn sweep_records(config: &SweepConfig) -> Result<Vec<SweepRow>, ConfigError> {
    config
        .tilt_grid()
        .into_iter()
        .map(|alpha_deg| {
            let alpha = TiltAngle::from_degrees(alpha_deg).map_err(|e| ConfigError::Invalid {
                field: "alpha_min",
                message: e.to_string(),
            })?;
            Ok(SweepRow {
                alpha_deg,
                record: metrics_record(&config.platform, alpha),
            })
        })
        .collect()
}

pub const SWEEP_CSV_UNITS: &str =
    "# units: alpha_deg [deg], V_FB [N^3], A_FBh [N^2], r_i [N], r_o [N], V_FBh [N^3]";
pub const SWEEP_CSV_HEADER: &str = "alpha_deg,case,V_FB,A_FBh,r_i,r_o,V_FBh,feasible";

/// Fixed-schema CSV for sweep rows.
pub fn render_records_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_CSV_UNITS);
    out.push('\n');
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let r = &row.record;
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.alpha_deg,
            r.case,
            r.volume,
            r.slice_area,
            r.inner_radius,
            r.outer_radius,
            r.extra_volume,
            r.feasible
        ));
    }
    out
}

#[derive(Serialize)]
struct JsonRow {
    alpha_deg: f64,
    case: String,
    #[serde(rename = "V_FB")]
    volume: f64,
    #[serde(rename = "A_FBh")]
    slice_area: f64,
    r_i: f64,
    r_o: f64,
    #[serde(rename = "V_FBh")]
    extra_volume: f64,
    feasible: bool,
}

/// JSON mirror of the CSV schema: an array of row objects.
pub fn render_records_json(rows: &[SweepRow]) -> String {
    let body: Vec<JsonRow> = rows
        .iter()
        .map(|row| JsonRow {
            alpha_deg: row.alpha_deg,
            case: row.record.case.to_string(),
            volume: row.record.volume,
            slice_area: row.record.slice_area,
            r_i: row.record.inner_radius,
            r_o: row.record.outer_radius,
            extra_volume: row.record.extra_volume,
            feasible: row.record.feasible,
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&body).expect("plain structs serialize");
    text.push('\n');
    text
}

pub const REPORT_CSV_HEADER: &str = "metric,alpha_deg,closed_form,oracle,rel_err,resolution";

/// Fixed-schema CSV for oracle comparison rows.
pub fn render_reports_csv(reports: &[OracleReport]) -> String {
    let mut out = String::new();
    out.push_str(REPORT_CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.metric, r.alpha_deg, r.closed_form, r.oracle, r.rel_err, r.resolution
        ));
    }
    out
}

#[derive(Serialize)]
struct JsonReport<'a> {
    metric: &'a str,
    alpha_deg: f64,
    closed_form: f64,
    oracle: f64,
    rel_err: f64,
    resolution: usize,
}

/// JSON mirror of the oracle-report CSV schema.
pub fn render_reports_json(reports: &[OracleReport]) -> String {
    let body: Vec<JsonReport> = reports
        .iter()
        .map(|r| JsonReport {
            metric: &r.metric,
            alpha_deg: r.alpha_deg,
            closed_form: r.closed_form,
            oracle: r.oracle,
            rel_err: r.rel_err,
            resolution: r.resolution,
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&body).expect("plain structs serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use sth_core::HoverCase;

    fn cfg(min: f64, max: f64, step: f64) -> SweepConfig {
        SweepConfig {
            alpha_min: min,
            alpha_max: max,
            alpha_step: step,
            ..SweepConfig::default()
        }
    }

    #[test]
    fn rows_ascend_and_cover_grid() {
        let rows = sweep_records(&cfg(0.0, 89.9, 0.1)).unwrap();
        assert_eq!(rows.len(), 900);
        for pair in rows.windows(2) {
            assert!(pair[0].alpha_deg < pair[1].alpha_deg);
        }
    }

    #[test]
    fn case_bands_are_contiguous_with_known_boundaries() {
        let rows = sweep_records(&cfg(0.0, 89.9, 0.1)).unwrap();
        let first_of = |case: HoverCase| {
            rows.iter()
                .find(|r| r.record.case == case)
                .map(|r| r.alpha_deg)
                .unwrap()
        };
        // transition angles within one 0.1-degree grid step of the arccos values
        assert_relative_eq!(first_of(HoverCase::B), 11.2, epsilon = 0.11);
        assert_relative_eq!(first_of(HoverCase::C), 60.7, epsilon = 0.11);
        assert_relative_eq!(first_of(HoverCase::D), 71.0, epsilon = 0.11);
        // contiguous bands: the case letter never decreases with tilt
        let rank = |c: HoverCase| match c {
            HoverCase::A => 0,
            HoverCase::B => 1,
            HoverCase::C => 2,
            HoverCase::D => 3,
        };
        for pair in rows.windows(2) {
            assert!(rank(pair[0].record.case) <= rank(pair[1].record.case));
        }
    }

    #[test]
    fn table_row_in_csv() {
        let rows = sweep_records(&cfg(54.5, 54.5, 1.0)).unwrap();
        let csv = render_records_csv(&rows);
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with('#'));
        assert_eq!(lines.next().unwrap(), SWEEP_CSV_HEADER);
        let row = lines.next().unwrap();
        assert!(row.starts_with("54.5,B,"), "row: {row}");
        assert!(row.ends_with(",true"));
        let volume: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert_relative_eq!(volume, 42843.0, max_relative = 5e-3);
    }

    #[test]
    fn csv_rendering_is_deterministic() {
        let config = cfg(0.0, 89.0, 0.5);
        let a = render_records_csv(&sweep_records(&config).unwrap());
        let b = render_records_csv(&sweep_records(&config).unwrap());
        assert_eq!(a, b);
        assert!(!a.contains("nan") && !a.contains("NaN"));
    }

    #[test]
    fn json_mirrors_csv_schema() {
        let rows = sweep_records(&cfg(10.0, 12.0, 1.0)).unwrap();
        let parsed: serde_json::Value =
            serde_json::from_str(&render_records_json(&rows)).unwrap();
        let arr = parsed.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        let first = &arr[0];
        for key in ["alpha_deg", "case", "V_FB", "A_FBh", "r_i", "r_o", "V_FBh", "feasible"] {
            assert!(first.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(first["alpha_deg"], 10.0);
        assert_eq!(first["case"], "A");
    }
}
