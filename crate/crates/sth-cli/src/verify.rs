//! The oracle battery: closed forms re-measured by sampling.

use sth_core::{
    hover, oracle, ActuationMatrices, OracleReport, TiltAngle, ZeroMomentBasis,
};

use crate::config::SweepConfig;

/// Outcome of running the full comparison battery.
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub reports: Vec<OracleReport>,
    pub worst_rel_err: f64,
    pub passed: bool,
}

/// Cap a tilt grid to an evenly spaced subsample.
pub fn subsample(grid: &[f64], cap: usize) -> Vec<f64> {
    if grid.len() <= cap || cap == 0 {
        return grid.to_vec();
    }
    (0..cap)
        .map(|k| grid[k * (grid.len() - 1) / (cap - 1).max(1)])
        .collect()
}

/// Run every closed-form/oracle comparison over the given tilt angles
/// (degrees). Infeasible tilts are skipped per metric, not failed.
pub fn run_verification(config: &SweepConfig, alphas_deg: &[f64]) -> Verification {
    let params = config.platform;
    let alphas: Vec<TiltAngle> = alphas_deg
        .iter()
        .filter_map(|&d| TiltAngle::from_degrees(d).ok())
        .collect();
    let kernel = |a: TiltAngle| ZeroMomentBasis::new(&ActuationMatrices::new(&params, a));
    let tol = config.tolerances;

    let mut outcomes = Vec::new();

    outcomes.push(oracle::compare(
        "V_FB",
        |a| Some(hover::zero_moment_volume(&params, a)),
        |a| {
            let sampled = oracle::sample_zero_moment_forces(&kernel(a), params.input_max, 2).ok()?;
            Some(oracle::oracle_volume(&sampled))
        },
        &alphas,
        tol.volume,
        2,
    ));

    let slice_res = config.slice_resolution;
    outcomes.push(oracle::compare(
        "A_FBh",
        |a| hover::closed_form_slice_area(&params, a).ok(),
        |a| Some(oracle::oracle_slice(&kernel(a), &params, a, slice_res).ok()?.area),
        &alphas,
        tol.area,
        slice_res,
    ));

    outcomes.push(oracle::compare(
        "V_FBh",
        |a| {
            hover::closed_form_slice_area(&params, a).ok()?; // skip case D
            Some(hover::extra_hover_volume(&params, a))
        },
        |a| {
            hover::closed_form_slice_area(&params, a).ok()?;
            Some(oracle::oracle_extra_hover_volume(
                &kernel(a),
                &params,
                a,
                config.volume_resolution,
            ))
        },
        &alphas,
        tol.extra,
        config.volume_resolution,
    ));

    // radii: per-case formulas vs. generic distances on the exact vertices
    outcomes.push(oracle::compare(
        "r_i",
        |a| Some(hover::closed_form_radii(&params, a).ok()?.0),
        |a| {
            let slice = hover::hover_slice_vertices(&params, a).ok()?;
            Some(hover::slice_radii(&slice).ok()?.0)
        },
        &alphas,
        tol.radii,
        1,
    ));
    outcomes.push(oracle::compare(
        "r_o",
        |a| Some(hover::closed_form_radii(&params, a).ok()?.1),
        |a| {
            let slice = hover::hover_slice_vertices(&params, a).ok()?;
            Some(hover::slice_radii(&slice).ok()?.1)
        },
        &alphas,
        tol.radii,
        1,
    ));

    // optional seeded Monte Carlo cross-check, looser than the grid count
    if let Some(seed) = config.seed {
        let samples = config.mc_samples;
        outcomes.push(oracle::compare(
            "V_FBh_mc",
            |a| {
                hover::closed_form_slice_area(&params, a).ok()?;
                Some(hover::extra_hover_volume(&params, a))
            },
            |a| {
                hover::closed_form_slice_area(&params, a).ok()?;
                Some(oracle::monte_carlo_extra_hover_volume(
                    &kernel(a),
                    &params,
                    a,
                    samples,
                    seed,
                ))
            },
            &alphas,
            0.05,
            samples,
        ));
    }

    let mut reports = Vec::new();
    let mut worst: f64 = 0.0;
    let mut passed = true;
    for outcome in outcomes {
        worst = worst.max(outcome.worst_rel_err);
        passed &= outcome.passed;
        reports.extend(outcome.reports);
    }
    Verification {
        reports,
        worst_rel_err: worst,
        passed,
    }
}
