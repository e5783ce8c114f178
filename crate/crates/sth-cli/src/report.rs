//! Design comparison across candidate tilt angles: the metric grid,
//! per-metric maximizers, and a configurable conservative pick.

use std::fmt::Write as _;

use sth_core::{case_boundaries, CaseBoundaries};

use crate::config::{ConfigError, SweepConfig};
use crate::sweep::{sweep_records, SweepRow};

/// Candidate angle (degrees) maximizing each metric, among feasible rows.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MetricMaxima {
    pub volume: Option<f64>,
    pub slice_area: Option<f64>,
    pub outer_radius: Option<f64>,
    pub inner_radius: Option<f64>,
    pub extra_volume: Option<f64>,
}

/// Metric grid over design candidates with maximizer annotations.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignReport {
    pub rows: Vec<SweepRow>,
    pub boundaries: CaseBoundaries,
    pub maxima: MetricMaxima,
    /// Candidate maximizing the min-normalized score, weighted per metric.
    pub conservative: Option<f64>,
    pub weights: [f64; 5],
}

/// Default design candidates: the per-metric sweet spots of the case-study
/// platform.
pub const DEFAULT_CANDIDATES: [f64; 5] = [42.0, 49.5, 54.5, 55.0, 60.5];

fn argmax(rows: &[SweepRow], value: impl Fn(&SweepRow) -> f64) -> Option<f64> {
    rows.iter()
        .filter(|r| r.record.feasible)
        .max_by(|a, b| value(a).partial_cmp(&value(b)).unwrap())
        .map(|r| r.alpha_deg)
}

/// Evaluate all metrics at each candidate angle (degrees) and annotate the
/// per-metric maximizers. Infeasible candidates appear as rows but are
/// excluded from maximizer and conservative selection.
pub fn design_report(
    config: &SweepConfig,
    candidates_deg: &[f64],
    weights: Option<[f64; 5]>,
) -> Result<DesignReport, ConfigError> {
    if candidates_deg.is_empty() {
        return Err(ConfigError::Invalid {
            field: "candidates",
            message: "need at least one candidate angle".into(),
        });
    }
    for &d in candidates_deg {
        if !(0.0..90.0).contains(&d) {
            return Err(ConfigError::Invalid {
                field: "candidates",
                message: format!("candidate {d} outside the tilt domain [0, 90) degrees"),
            });
        }
    }
    let weights = weights.unwrap_or([1.0; 5]);
    if weights.iter().any(|&w| w < 0.0) || weights.iter().all(|&w| w == 0.0) {
        return Err(ConfigError::Invalid {
            field: "weights",
            message: "need nonnegative weights with at least one positive".into(),
        });
    }

    let mut candidate_config = config.clone();
    let rows: Vec<SweepRow> = candidates_deg
        .iter()
        .map(|&d| {
            candidate_config.alpha_min = d;
            candidate_config.alpha_max = d;
            candidate_config.alpha_step = 1.0;
            Ok(sweep_records(&candidate_config)?.remove(0))
        })
        .collect::<Result<_, ConfigError>>()?;

    let maxima = MetricMaxima {
        volume: argmax(&rows, |r| r.record.volume),
        slice_area: argmax(&rows, |r| r.record.slice_area),
        outer_radius: argmax(&rows, |r| r.record.outer_radius),
        inner_radius: argmax(&rows, |r| r.record.inner_radius),
        extra_volume: argmax(&rows, |r| r.record.extra_volume),
    };

    Ok(DesignReport {
        conservative: conservative_pick(&rows, weights),
        boundaries: case_boundaries(&config.platform),
        maxima,
        rows,
        weights,
    })
}

/// Min-normalized scoring: each metric is divided by its best value over the
/// candidates, scaled by its weight; a candidate's score is the worst of the
/// five, and the highest score wins. Balances the metrics instead of
/// maximizing any single one.
fn conservative_pick(rows: &[SweepRow], weights: [f64; 5]) -> Option<f64> {
    let feasible: Vec<&SweepRow> = rows.iter().filter(|r| r.record.feasible).collect();
    if feasible.is_empty() {
        return None;
    }
    let metrics = |r: &SweepRow| {
        [
            r.record.volume,
            r.record.slice_area,
            r.record.outer_radius,
            r.record.inner_radius,
            r.record.extra_volume,
        ]
    };
    let mut best = [0.0f64; 5];
    for r in &feasible {
        for (slot, value) in best.iter_mut().zip(metrics(r)) {
            *slot = slot.max(value);
        }
    }
    // zero-weight metrics are excluded rather than scored as zero
    let score = |r: &SweepRow| {
        metrics(r)
            .iter()
            .zip(best.iter())
            .zip(weights.iter())
            .filter(|((_, &b), &w)| b > 0.0 && w > 0.0)
            .map(|((&m, &b), &w)| w * m / b)
            .fold(f64::INFINITY, f64::min)
    };
    feasible
        .iter()
        .max_by(|a, b| score(a).partial_cmp(&score(b)).unwrap())
        .map(|r| r.alpha_deg)
}

fn fmt_angle(d: Option<f64>) -> String {
    match d {
        Some(v) => format!("{v}"),
        None => "-".into(),
    }
}

/// Human-readable report table.
pub fn render_report_text(report: &DesignReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>10} {:>5} {:>12} {:>12} {:>9} {:>9} {:>12} {:>9}",
        "alpha_deg", "case", "V_FB[N^3]", "A_FBh[N^2]", "r_i[N]", "r_o[N]", "V_FBh[N^3]", "feasible"
    );
    for row in &report.rows {
        let r = &row.record;
        let _ = writeln!(
            out,
            "{:>10} {:>5} {:>12.1} {:>12.1} {:>9.2} {:>9.2} {:>12.1} {:>9}",
            row.alpha_deg,
            r.case.to_string(),
            r.volume,
            r.slice_area,
            r.inner_radius,
            r.outer_radius,
            r.extra_volume,
            r.feasible
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "max V_FB  at alpha = {} deg", fmt_angle(report.maxima.volume));
    let _ = writeln!(out, "max A_FBh at alpha = {} deg", fmt_angle(report.maxima.slice_area));
    let _ = writeln!(out, "max r_o   at alpha = {} deg", fmt_angle(report.maxima.outer_radius));
    let _ = writeln!(out, "max r_i   at alpha = {} deg", fmt_angle(report.maxima.inner_radius));
    let _ = writeln!(out, "max V_FBh at alpha = {} deg", fmt_angle(report.maxima.extra_volume));
    let _ = writeln!(
        out,
        "conservative pick (min-normalized, weights {:?}): alpha = {} deg",
        report.weights,
        fmt_angle(report.conservative)
    );
    let b = report.boundaries;
    let _ = writeln!(
        out,
        "case boundaries [deg]: A/B {}, B/C {}, C/D {}",
        fmt_angle(b.ab.map(|a| a.degrees())),
        fmt_angle(b.bc.map(|a| a.degrees())),
        fmt_angle(b.cd.map(|a| a.degrees())),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use sth_core::HoverCase;

    #[test]
    fn table_candidates_reproduce_known_maxima() {
        let report =
            design_report(&SweepConfig::default(), &DEFAULT_CANDIDATES, None).unwrap();
        assert_eq!(report.maxima.volume, Some(54.5));
        assert_eq!(report.maxima.slice_area, Some(55.0));
        assert_eq!(report.maxima.outer_radius, Some(60.5));
        assert_eq!(report.maxima.inner_radius, Some(49.5));
        assert_eq!(report.maxima.extra_volume, Some(42.0));
    }

    #[test]
    fn single_candidate_takes_all_maxima() {
        let report = design_report(&SweepConfig::default(), &[30.0], None).unwrap();
        assert_eq!(report.maxima.volume, Some(30.0));
        assert_eq!(report.maxima.extra_volume, Some(30.0));
        assert_eq!(report.conservative, Some(30.0));
    }

    #[test]
    fn infeasible_candidates_are_rows_but_not_maximizers() {
        let mut candidates = DEFAULT_CANDIDATES.to_vec();
        candidates.push(80.0);
        let report = design_report(&SweepConfig::default(), &candidates, None).unwrap();
        assert_eq!(report.rows.len(), 6);
        let row80 = report.rows.iter().find(|r| r.alpha_deg == 80.0).unwrap();
        assert!(!row80.record.feasible);
        assert_eq!(row80.record.case, HoverCase::D);
        // 80 deg has the largest V_FB among none of them... the max stays at 54.5
        assert_eq!(report.maxima.volume, Some(54.5));
        assert_ne!(report.conservative, Some(80.0));
    }

    #[test]
    fn empty_and_out_of_domain_candidates_rejected() {
        assert!(design_report(&SweepConfig::default(), &[], None).is_err());
        assert!(design_report(&SweepConfig::default(), &[92.0], None).is_err());
    }

    #[test]
    fn weights_steer_the_conservative_pick() {
        let report = design_report(&SweepConfig::default(), &DEFAULT_CANDIDATES, None).unwrap();
        let default_pick = report.conservative.unwrap();
        // weighting extra-hovering volume only reproduces its argmax
        let skewed = design_report(
            &SweepConfig::default(),
            &DEFAULT_CANDIDATES,
            Some([0.0, 0.0, 0.0, 0.0, 1.0]),
        )
        .unwrap();
        assert_eq!(skewed.conservative, Some(42.0));
        assert!(DEFAULT_CANDIDATES.contains(&default_pick));
    }

    #[test]
    fn text_table_mentions_every_candidate() {
        let report =
            design_report(&SweepConfig::default(), &DEFAULT_CANDIDATES, None).unwrap();
        let text = render_report_text(&report);
        for d in DEFAULT_CANDIDATES {
            assert!(text.contains(&format!("{d}")), "missing {d} in:\n{text}");
        }
        assert!(text.contains("conservative"));
    }
}
