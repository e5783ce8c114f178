//! Brute-force verification of the closed-form metrics.
//!
//! Nothing here trusts the per-case formulas: the admissible input set is
//! sampled directly, pushed through the force map, and measured with generic
//! hull and counting routines. Agreement with the closed forms over a tilt
//! grid is the library's main correctness evidence.

use nalgebra::{Vector2, Vector3};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::ZeroMomentBasis;
use crate::error::{Error, Result};
use crate::geometry;
use crate::hover::{classify_hover_case, HoverCase};
use crate::params::{PlatformParams, TiltAngle};

/// Default cap on materialized sample grids.
pub const DEFAULT_POINT_CAP: usize = 2_000_000;

/// Forces sampled from the zero-moment polytope on a regular grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPolytope {
    /// Force samples [N].
    pub points: Vec<Vector3<f64>>,
    /// Grid resolution per kernel axis.
    pub resolution: usize,
}

/// Sample the zero-moment force polytope: each kernel coordinate runs over
/// `resolution` equispaced values in `[0, input_max]`, so the eight
/// parallelepiped corners are hit exactly.
pub fn sample_zero_moment_forces(
    basis: &ZeroMomentBasis,
    input_max: f64,
    resolution: usize,
) -> Result<SampledPolytope> {
    sample_zero_moment_forces_capped(basis, input_max, resolution, DEFAULT_POINT_CAP)
}

/// As [`sample_zero_moment_forces`] with an explicit point cap.
pub fn sample_zero_moment_forces_capped(
    basis: &ZeroMomentBasis,
    input_max: f64,
    resolution: usize,
    cap: usize,
) -> Result<SampledPolytope> {
    if resolution < 2 {
        return Err(Error::ResolutionTooSmall { resolution });
    }
    let total = resolution
        .checked_pow(3)
        .filter(|&t| t <= cap)
        .ok_or(Error::ResolutionTooLarge {
            resolution,
            points: resolution.saturating_mul(resolution).saturating_mul(resolution),
            cap,
        })?;
    let step = input_max / (resolution as f64 - 1.0);
    let mut points = Vec::with_capacity(total);
    for i in 0..resolution {
        for j in 0..resolution {
            for k in 0..resolution {
                let coords =
                    Vector3::new(i as f64 * step, j as f64 * step, k as f64 * step);
                points.push(basis.force_map * coords);
            }
        }
    }
    Ok(SampledPolytope { points, resolution })
}

/// Convex-hull volume of the sampled forces [N^3]. For grid samples of the
/// parallelepiped the eight corners already determine the hull, so the
/// result is exact up to hull arithmetic. Coplanar samples yield zero.
pub fn oracle_volume(polytope: &SampledPolytope) -> f64 {
    geometry::convex_hull_volume_3d(&polytope.points)
}

/// Hover-slice measurements recovered from sampling.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceOracle {
    /// 2D hull area of the sampled slice [N^2].
    pub area: f64,
    /// Distance from the origin to the nearest hull edge [N].
    pub inner_radius: f64,
    /// Distance from the origin to the farthest hull vertex [N].
    pub outer_radius: f64,
    /// Hull vertices, counterclockwise.
    pub hull: Vec<Vector2<f64>>,
    /// Grid spacing used on each kernel axis [Hz^2].
    pub grid_spacing: f64,
}

/// Sample the hover-plane slice of the polytope.
///
/// The constraint surface is the part of the plane where kernel coordinates
/// sum to the hover requirement inside the input box; it is swept with an
/// `resolution`-per-axis grid over the first two coordinates, the third
/// being determined. Lateral forces of feasible samples are hulled and
/// measured generically. Converges to the closed forms as O(1/resolution).
pub fn oracle_slice(
    basis: &ZeroMomentBasis,
    params: &PlatformParams,
    alpha: TiltAngle,
    resolution: usize,
) -> Result<SliceOracle> {
    if resolution < 2 {
        return Err(Error::ResolutionTooSmall { resolution });
    }
    if classify_hover_case(params, alpha) == HoverCase::D {
        return Err(Error::InfeasibleHover {
            alpha_deg: alpha.degrees(),
        });
    }
    let required = params.hover_input_sum(alpha);
    let reach = required.min(params.input_max);
    let step = reach / resolution as f64;
    let snap = 1e-12 * params.input_max;

    let mut samples: Vec<Vector2<f64>> = Vec::new();
    for i in 0..=resolution {
        let c1 = i as f64 * step;
        for j in 0..=resolution {
            let c2 = j as f64 * step;
            let c3 = required - c1 - c2;
            if c3 < -snap || c3 > params.input_max + snap {
                continue;
            }
            let force = basis.force_map * Vector3::new(c1, c2, c3.clamp(0.0, params.input_max));
            samples.push(Vector2::new(force.x, force.y));
        }
    }
    if samples.is_empty() {
        return Err(Error::InfeasibleHover {
            alpha_deg: alpha.degrees(),
        });
    }

    let hull = geometry::convex_hull_2d(&samples);
    let area = geometry::polygon_area(&hull);
    let outer_radius = hull.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
    let mut inner_radius = f64::INFINITY;
    if hull.len() >= 3 {
        for (j, &a) in hull.iter().enumerate() {
            let b = hull[(j + 1) % hull.len()];
            inner_radius =
                inner_radius.min(geometry::point_segment_distance(Vector2::zeros(), a, b));
        }
    } else {
        inner_radius = 0.0;
    }
    Ok(SliceOracle {
        area,
        inner_radius,
        outer_radius,
        hull,
        grid_spacing: step,
    })
}

/// Count-based estimate of the extra-hovering volume [N^3].
///
/// Cell midpoints of a `resolution`-per-axis grid over the input box are
/// mapped through the force map; the fraction with vertical force at least
/// the weight scales the exact polytope volume `|det(input_max * H)|`.
/// Error is O(1/resolution). Zero in case D.
pub fn oracle_extra_hover_volume(
    basis: &ZeroMomentBasis,
    params: &PlatformParams,
    alpha: TiltAngle,
    resolution: usize,
) -> f64 {
    if resolution == 0 || classify_hover_case(params, alpha) == HoverCase::D {
        return 0.0;
    }
    let step = params.input_max / resolution as f64;
    let weight = params.weight();
    let mut hits: usize = 0;
    for i in 0..resolution {
        let c1 = (i as f64 + 0.5) * step;
        for j in 0..resolution {
            let c2 = (j as f64 + 0.5) * step;
            for k in 0..resolution {
                let c3 = (k as f64 + 0.5) * step;
                let vertical = basis.force_map.row(2)
                    * nalgebra::Vector3::new(c1, c2, c3);
                if vertical[(0, 0)] >= weight {
                    hits += 1;
                }
            }
        }
    }
    let fraction = hits as f64 / (resolution as f64).powi(3);
    let exact_volume = (params.input_max.powi(3) * basis.force_map.determinant()).abs();
    exact_volume * fraction
}

/// Seeded Monte Carlo variant of [`oracle_extra_hover_volume`]; used as an
/// extra cross-check, never as an acceptance number.
pub fn monte_carlo_extra_hover_volume(
    basis: &ZeroMomentBasis,
    params: &PlatformParams,
    alpha: TiltAngle,
    samples: usize,
    seed: u64,
) -> f64 {
    if samples == 0 || classify_hover_case(params, alpha) == HoverCase::D {
        return 0.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weight = params.weight();
    let mut hits: usize = 0;
    for _ in 0..samples {
        let coords = Vector3::new(
            rng.random_range(0.0..=params.input_max),
            rng.random_range(0.0..=params.input_max),
            rng.random_range(0.0..=params.input_max),
        );
        let force = basis.force_map * coords;
        if force.z >= weight {
            hits += 1;
        }
    }
    let fraction = hits as f64 / samples as f64;
    (params.input_max.powi(3) * basis.force_map.determinant()).abs() * fraction
}

/// One closed-form/oracle comparison at a single tilt angle.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub metric: String,
    pub alpha_deg: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub rel_err: f64,
    pub resolution: usize,
}

/// Result of sweeping a comparison over a tilt grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub reports: Vec<OracleReport>,
    pub worst_rel_err: f64,
    /// Number of grid points skipped (typically case-D tilts).
    pub skipped: usize,
    pub passed: bool,
}

fn relative_error(reference: f64, measured: f64) -> f64 {
    let scale = reference.abs().max(measured.abs());
    if scale == 0.0 {
        0.0
    } else {
        (reference - measured).abs() / scale
    }
}

/// Evaluate a closed form and an oracle over a tilt grid and report the
/// worst relative error. Either closure may return `None` to skip a tilt
/// (infeasible cases propagate as skips, not failures).
pub fn compare<F, G>(
    metric: &str,
    closed_form: F,
    oracle: G,
    alphas: &[TiltAngle],
    tolerance: f64,
    resolution: usize,
) -> Comparison
where
    F: Fn(TiltAngle) -> Option<f64>,
    G: Fn(TiltAngle) -> Option<f64>,
{
    let mut reports = Vec::with_capacity(alphas.len());
    let mut worst: f64 = 0.0;
    let mut skipped = 0;
    for &alpha in alphas {
        let (Some(reference), Some(measured)) = (closed_form(alpha), oracle(alpha)) else {
            skipped += 1;
            continue;
        };
        let rel_err = relative_error(reference, measured);
        worst = worst.max(rel_err);
        reports.push(OracleReport {
            metric: metric.to_string(),
            alpha_deg: alpha.degrees(),
            closed_form: reference,
            oracle: measured,
            rel_err,
            resolution,
        });
    }
    Comparison {
        reports,
        worst_rel_err: worst,
        skipped,
        passed: worst <= tolerance,
    }
}
