//! Maneuverability metrics built on the zero-moment force polytope.
//!
//! The zero-moment forces form a parallelepiped spanned by the scaled
//! columns of the kernel force map. Five scalar metrics summarize it:
//!
//! * the polytope volume,
//! * the area of its slice by the hovering plane (vertical force equal to
//!   the weight),
//! * inscribed and circumscribed radii of that slice,
//! * the volume of the region above the hovering plane.
//!
//! How many rotor pairs must work to hold the hovering plane splits the
//! tilt domain into cases A-D; D means gravity cannot be compensated at
//! all. Slice vertices, areas, radii and volumes all have per-case closed
//! forms, and the generic polygon routines in [`crate::geometry`] provide
//! an algebraically independent route to the same numbers.

use std::fmt;

use nalgebra::{Vector2, Vector3};

use crate::error::{Error, Result};
use crate::geometry;
use crate::params::{PlatformParams, TiltAngle};

/// Hover-capability regime at a given tilt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HoverCase {
    /// One saturated rotor pair can exceed the weight.
    A,
    /// Two saturated pairs are needed.
    B,
    /// All three pairs are needed.
    C,
    /// The weight exceeds the maximum vertical force: hover impossible.
    D,
}

impl fmt::Display for HoverCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HoverCase::A => "A",
            HoverCase::B => "B",
            HoverCase::C => "C",
            HoverCase::D => "D",
        };
        f.write_str(s)
    }
}

/// Tilt angles at which the hover case changes, where they exist.
///
/// The boundary angle itself belongs to the lower-letter case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseBoundaries {
    /// Largest tilt of case A.
    pub ab: Option<TiltAngle>,
    /// Largest tilt of case B.
    pub bc: Option<TiltAngle>,
    /// Largest tilt of case C; beyond it hover is infeasible.
    pub cd: Option<TiltAngle>,
}

fn boundary_angle(params: &PlatformParams, pairs: f64) -> Option<TiltAngle> {
    let ratio = params.weight() / (2.0 * pairs * params.thrust_coeff * params.input_max);
    if ratio <= 1.0 {
        TiltAngle::from_radians(ratio.acos()).ok()
    } else {
        None
    }
}

/// Case-boundary angles `arccos(weight / (2 k c_f input_max))` for k = 1, 2, 3.
pub fn case_boundaries(params: &PlatformParams) -> CaseBoundaries {
    CaseBoundaries {
        ab: boundary_angle(params, 1.0),
        bc: boundary_angle(params, 2.0),
        cd: boundary_angle(params, 3.0),
    }
}

/// Classify the hover regime by comparing the input bound with the
/// per-pair gravity-compensation requirement. Ties go to the lower letter.
pub fn classify_hover_case(params: &PlatformParams, alpha: TiltAngle) -> HoverCase {
    let required = params.hover_input_sum(alpha);
    if params.input_max >= required {
        HoverCase::A
    } else if params.input_max >= required / 2.0 {
        HoverCase::B
    } else if params.input_max >= required / 3.0 {
        HoverCase::C
    } else {
        HoverCase::D
    }
}

/// Volume of the zero-moment force polytope [N^3]:
/// `12 sqrt(3) (c_f input_max)^3 cos(alpha) sin(alpha)^2`.
pub fn zero_moment_volume(params: &PlatformParams, alpha: TiltAngle) -> f64 {
    let unit = params.rotor_force_max();
    12.0 * 3f64.sqrt() * unit.powi(3) * alpha.cos() * alpha.sin() * alpha.sin()
}

/// Tilt angle maximizing the polytope volume: `arctan(sqrt(2))`.
pub fn peak_volume_angle() -> TiltAngle {
    TiltAngle::from_radians(2f64.sqrt().atan()).expect("within domain")
}

/// A vertex of the hover-plane slice with the kernel coordinates that
/// produce it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SliceVertex {
    /// Lateral force components (x, y) on the hovering plane [N].
    pub force: Vector2<f64>,
    /// Generating kernel coordinates, each in `[0, input_max]`, summing to
    /// the hover requirement [Hz^2].
    pub coords: Vector3<f64>,
}

/// Convex slice of the polytope by the hovering plane.
///
/// Vertices are ordered counterclockwise starting from the one with maximal
/// y-force (ties broken toward larger x-force).
#[derive(Debug, Clone, PartialEq)]
pub struct HoverSlice {
    pub case: HoverCase,
    pub vertices: Vec<SliceVertex>,
}

/// Lateral force scales of the slice geometry:
/// `sat = c_f input_max sin(alpha)` (one saturated kernel coordinate) and
/// `hov = weight/2 tan(alpha)` (the hover-required coordinate sum).
fn lateral_scales(params: &PlatformParams, alpha: TiltAngle) -> (f64, f64) {
    let sat = params.rotor_force_max() * alpha.sin();
    let hov = 0.5 * params.weight() * alpha.tan();
    (sat, hov)
}

fn vertex(x: f64, y: f64, c1: f64, c2: f64, c3: f64) -> SliceVertex {
    SliceVertex {
        force: Vector2::new(x, y),
        coords: Vector3::new(c1, c2, c3),
    }
}

/// Slice vertices for an explicit case; the formulas are plain algebra, so
/// evaluating one case's vertex set at another case's angle is allowed (used
/// for boundary-continuity checks). Case D has no slice.
pub fn slice_vertices_for_case(
    params: &PlatformParams,
    alpha: TiltAngle,
    case: HoverCase,
) -> Result<Vec<SliceVertex>> {
    let (sat, hov) = lateral_scales(params, alpha);
    let sum = params.hover_input_sum(alpha);
    let cap = params.input_max;
    let sq3 = 3f64.sqrt();
    let vertices = match case {
        HoverCase::A => vec![
            vertex(0.0, 2.0 * hov, sum, 0.0, 0.0),
            vertex(-sq3 * hov, -hov, 0.0, 0.0, sum),
            vertex(sq3 * hov, -hov, 0.0, sum, 0.0),
        ],
        HoverCase::B => vec![
            vertex(sq3 * (hov - sat), 3.0 * sat - hov, cap, sum - cap, 0.0),
            vertex(-sq3 * (hov - sat), 3.0 * sat - hov, cap, 0.0, sum - cap),
            vertex(-sq3 * sat, 2.0 * hov - 3.0 * sat, sum - cap, 0.0, cap),
            vertex(-sq3 * (2.0 * sat - hov), -hov, 0.0, sum - cap, cap),
            vertex(sq3 * (2.0 * sat - hov), -hov, 0.0, cap, sum - cap),
            vertex(sq3 * sat, 2.0 * hov - 3.0 * sat, sum - cap, cap, 0.0),
        ],
        HoverCase::C => vec![
            vertex(sq3 * (3.0 * sat - hov), 3.0 * sat - hov, cap, cap, sum - 2.0 * cap),
            vertex(-sq3 * (3.0 * sat - hov), 3.0 * sat - hov, cap, sum - 2.0 * cap, cap),
            vertex(0.0, -2.0 * (3.0 * sat - hov), sum - 2.0 * cap, cap, cap),
        ],
        HoverCase::D => {
            return Err(Error::InfeasibleHover {
                alpha_deg: alpha.degrees(),
            })
        }
    };
    Ok(vertices)
}

/// Vertices of the hover-plane slice for the platform's actual case at
/// `alpha`. Fails in case D.
pub fn hover_slice_vertices(params: &PlatformParams, alpha: TiltAngle) -> Result<HoverSlice> {
    let case = classify_hover_case(params, alpha);
    let vertices = slice_vertices_for_case(params, alpha, case)?;
    Ok(HoverSlice { case, vertices })
}

/// Shoelace area of the slice polygon [N^2].
pub fn hover_slice_area(slice: &HoverSlice) -> f64 {
    let points: Vec<Vector2<f64>> = slice.vertices.iter().map(|v| v.force).collect();
    geometry::polygon_area(&points)
}

/// Per-case closed-form slice area [N^2]; zero in case D.
pub fn slice_area_for_case(params: &PlatformParams, alpha: TiltAngle, case: HoverCase) -> f64 {
    let (sat, hov) = lateral_scales(params, alpha);
    let sq3 = 3f64.sqrt();
    match case {
        // equilateral triangle of circumradius 2*hov
        HoverCase::A => 3.0 * sq3 * hov * hov,
        // corner triangles cut off the case-A triangle
        HoverCase::B => 3.0 * sq3 * hov * hov - 9.0 * sq3 * (hov - sat) * (hov - sat),
        // inverted triangle shrinking to a point at the feasibility edge
        HoverCase::C => 3.0 * sq3 * (3.0 * sat - hov) * (3.0 * sat - hov),
        HoverCase::D => 0.0,
    }
}

/// Closed-form slice area for the actual case at `alpha`. Fails in case D.
pub fn closed_form_slice_area(params: &PlatformParams, alpha: TiltAngle) -> Result<f64> {
    match classify_hover_case(params, alpha) {
        HoverCase::D => Err(Error::InfeasibleHover {
            alpha_deg: alpha.degrees(),
        }),
        case => Ok(slice_area_for_case(params, alpha, case)),
    }
}

/// Inscribed and circumscribed radii of the slice polygon [N], measured
/// generically: the nearest-edge and farthest-vertex distances from the
/// origin. The origin must lie inside the polygon.
pub fn slice_radii(slice: &HoverSlice) -> Result<(f64, f64)> {
    let points: Vec<Vector2<f64>> = slice.vertices.iter().map(|v| v.force).collect();
    let outer = points.iter().map(|p| p.norm()).fold(0.0f64, f64::max);
    if outer == 0.0 {
        // slice degenerated to the origin (zero tilt)
        return Ok((0.0, 0.0));
    }
    if !geometry::origin_in_convex_polygon(&points, 1e-12 * outer * outer) {
        return Err(Error::InvalidSlice {
            message: "origin outside the slice polygon".into(),
        });
    }
    let mut inner = f64::INFINITY;
    for (j, &a) in points.iter().enumerate() {
        let b = points[(j + 1) % points.len()];
        if (b - a).norm() <= 1e-15 * outer {
            continue; // coincident vertices at a case boundary
        }
        inner = inner.min(geometry::point_segment_distance(Vector2::zeros(), a, b));
    }
    Ok((inner, outer))
}

/// Per-case closed-form radii `(inner, outer)` [N]; zeros in case D.
pub fn radii_for_case(params: &PlatformParams, alpha: TiltAngle, case: HoverCase) -> (f64, f64) {
    let (sat, hov) = lateral_scales(params, alpha);
    match case {
        HoverCase::A => (hov, 2.0 * hov),
        HoverCase::B => {
            let top = 3.0 * sat - hov;
            let inner = hov.min(top.abs());
            let outer = (3.0 * sat * sat + (2.0 * hov - 3.0 * sat) * (2.0 * hov - 3.0 * sat)).sqrt();
            (inner, outer)
        }
        HoverCase::C => {
            let edge = 3.0 * sat - hov;
            (edge, 2.0 * edge)
        }
        HoverCase::D => (0.0, 0.0),
    }
}

/// Closed-form radii for the actual case at `alpha`. Fails in case D.
pub fn closed_form_radii(params: &PlatformParams, alpha: TiltAngle) -> Result<(f64, f64)> {
    match classify_hover_case(params, alpha) {
        HoverCase::D => Err(Error::InfeasibleHover {
            alpha_deg: alpha.degrees(),
        }),
        case => Ok(radii_for_case(params, alpha, case)),
    }
}

/// Geometry of the polytope region above the hovering plane.
///
/// In case B that region is a large pyramid with three congruent corner
/// pyramids removed; the triangle fields describe one corner pyramid's base.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtraHoverGeometry {
    /// Maximum vertical force with all inputs saturated [N].
    pub max_vertical_force: f64,
    /// Vertical force margin above the weight [N].
    pub surplus_height: f64,
    /// Height of one removed corner pyramid [N]; meaningful in case B,
    /// zero at the B/C boundary.
    pub corner_height: f64,
    /// Angle between a polytope edge and the vertical [rad]; equals the
    /// tilt angle because every generator makes that angle with the z-axis.
    pub edge_angle: f64,
    /// In-plane offset of a corner-pyramid base vertex [N].
    pub corner_offset: f64,
    /// Side of the equilateral corner-pyramid base [N].
    pub corner_side: f64,
    /// Area of the corner-pyramid base [N^2].
    pub corner_area: f64,
}

/// Extra-hovering construction quantities. Fails in case D.
pub fn extra_hover_geometry(
    params: &PlatformParams,
    alpha: TiltAngle,
) -> Result<ExtraHoverGeometry> {
    if classify_hover_case(params, alpha) == HoverCase::D {
        return Err(Error::InfeasibleHover {
            alpha_deg: alpha.degrees(),
        });
    }
    let max_vertical_force = params.max_vertical_force(alpha);
    let surplus_height = max_vertical_force - params.weight();
    // one polytope edge projects onto the vertical as 2 c_f input_max cos(alpha)
    let corner_height = surplus_height - 2.0 * params.rotor_force_max() * alpha.cos();
    let corner_offset = corner_height * alpha.tan();
    let corner_side = 2.0 * 60f64.to_radians().sin() * corner_offset;
    let corner_area = 3f64.sqrt() / 4.0 * corner_side * corner_side;
    Ok(ExtraHoverGeometry {
        max_vertical_force,
        surplus_height,
        corner_height,
        edge_angle: alpha.radians(),
        corner_offset,
        corner_side,
        corner_area,
    })
}

/// Per-case extra-hovering volume [N^3]; zero in case D.
pub fn extra_hover_volume_for_case(
    params: &PlatformParams,
    alpha: TiltAngle,
    case: HoverCase,
) -> f64 {
    let area = slice_area_for_case(params, alpha, case);
    match case {
        // whole polytope minus the pyramid below the hovering plane
        HoverCase::A => {
            zero_moment_volume(params, alpha) - area * params.weight() / 3.0
        }
        // large pyramid minus the three corner pyramids
        HoverCase::B => {
            let surplus = params.max_vertical_force(alpha) - params.weight();
            let corner_height = surplus - 2.0 * params.rotor_force_max() * alpha.cos();
            let side = 2.0 * 60f64.to_radians().sin() * corner_height * alpha.tan();
            let corner_area = 3f64.sqrt() / 4.0 * side * side;
            (area + 3.0 * corner_area) * surplus / 3.0 - corner_area * corner_height
        }
        // a single pyramid on the slice
        HoverCase::C => {
            let surplus = params.max_vertical_force(alpha) - params.weight();
            area * surplus / 3.0
        }
        HoverCase::D => 0.0,
    }
}

/// Volume of zero-moment forces whose vertical component is at least the
/// weight [N^3]; zero in case D.
pub fn extra_hover_volume(params: &PlatformParams, alpha: TiltAngle) -> f64 {
    let case = classify_hover_case(params, alpha);
    extra_hover_volume_for_case(params, alpha, case)
}

/// One row of a tilt sweep: all five metrics plus the case label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsRecord {
    pub alpha: TiltAngle,
    pub case: HoverCase,
    /// Zero-moment polytope volume [N^3].
    pub volume: f64,
    /// Hover-slice area [N^2].
    pub slice_area: f64,
    /// Inscribed radius of the slice [N].
    pub inner_radius: f64,
    /// Circumscribed radius of the slice [N].
    pub outer_radius: f64,
    /// Extra-hovering volume [N^3].
    pub extra_volume: f64,
    /// False in case D: the platform cannot hover at this tilt.
    pub feasible: bool,
    /// True at zero tilt, where the polytope collapses to a segment and all
    /// slice metrics vanish.
    pub degenerate: bool,
}

/// Evaluate every metric at one tilt angle. Case D produces a well-formed
/// record with zeroed slice metrics and `feasible = false`.
pub fn metrics_record(params: &PlatformParams, alpha: TiltAngle) -> MetricsRecord {
    let case = classify_hover_case(params, alpha);
    let volume = zero_moment_volume(params, alpha);
    let (slice_area, inner_radius, outer_radius, extra_volume) = if case == HoverCase::D {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        let area = slice_area_for_case(params, alpha, case);
        let (inner, outer) = radii_for_case(params, alpha, case);
        (area, inner, outer, extra_hover_volume_for_case(params, alpha, case))
    };
    MetricsRecord {
        alpha,
        case,
        volume,
        slice_area,
        inner_radius,
        outer_radius,
        extra_volume,
        feasible: case != HoverCase::D,
        degenerate: alpha.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn p() -> PlatformParams {
        PlatformParams::default()
    }

    fn deg(d: f64) -> TiltAngle {
        TiltAngle::from_degrees(d).unwrap()
    }

    #[test]
    fn case_classification_spot_checks() {
        assert_eq!(classify_hover_case(&p(), deg(10.0)), HoverCase::A);
        assert_eq!(classify_hover_case(&p(), deg(50.0)), HoverCase::B);
        assert_eq!(classify_hover_case(&p(), deg(65.0)), HoverCase::C);
        assert_eq!(classify_hover_case(&p(), deg(80.0)), HoverCase::D);
        assert_eq!(classify_hover_case(&p(), deg(0.0)), HoverCase::A);
    }

    #[test]
    fn boundaries_match_arccos_formula() {
        let b = case_boundaries(&p());
        let ratio = |pairs: f64| p().weight() / (2.0 * pairs * p().thrust_coeff * p().input_max);
        assert_abs_diff_eq!(b.ab.unwrap().radians(), ratio(1.0).acos(), epsilon = 1e-15);
        assert_abs_diff_eq!(b.bc.unwrap().radians(), ratio(2.0).acos(), epsilon = 1e-15);
        assert_abs_diff_eq!(b.cd.unwrap().radians(), ratio(3.0).acos(), epsilon = 1e-15);
        assert_abs_diff_eq!(b.ab.unwrap().degrees(), 11.1203, epsilon = 1e-3);
        assert_abs_diff_eq!(b.bc.unwrap().degrees(), 60.6192, epsilon = 1e-3);
        assert_abs_diff_eq!(b.cd.unwrap().degrees(), 70.9087, epsilon = 1e-3);
        // boundary itself belongs to the lower-letter case
        assert_eq!(classify_hover_case(&p(), b.ab.unwrap()), HoverCase::A);
        assert_eq!(classify_hover_case(&p(), b.bc.unwrap()), HoverCase::B);
        assert_eq!(classify_hover_case(&p(), b.cd.unwrap()), HoverCase::C);
    }

    #[test]
    fn boundaries_absent_for_weak_platforms() {
        // so heavy that even case A is unreachable at zero tilt
        let weak = PlatformParams::new(3.5, 0.385, 1.5e-3, 4.59e-5, 100.0, 9.81).unwrap();
        let b = case_boundaries(&weak);
        assert!(b.ab.is_none());
        assert!(b.bc.is_none());
        assert!(b.cd.is_none());
        assert_eq!(classify_hover_case(&weak, deg(0.0)), HoverCase::D);
    }

    #[test]
    fn volume_closed_form() {
        assert_eq!(zero_moment_volume(&p(), deg(0.0)), 0.0);
        // determinant route: |det(input_max * H)|
        for d in [10.0, 36.8, 54.5, 71.3] {
            let a = deg(d);
            let m = crate::actuation::ActuationMatrices::new(&p(), a);
            let zm = crate::decomposition::ZeroMomentBasis::new(&m);
            let det = (p().input_max.powi(3) * zm.force_map.determinant()).abs();
            assert_relative_eq!(zero_moment_volume(&p(), a), det, max_relative = 1e-12);
        }
        assert_relative_eq!(zero_moment_volume(&p(), deg(36.8)), 32000.0, max_relative = 5e-3);
        assert_relative_eq!(zero_moment_volume(&p(), deg(71.3)), 32000.0, max_relative = 5e-3);
        assert_relative_eq!(zero_moment_volume(&p(), deg(54.5)), 42843.0, max_relative = 5e-3);
    }

    #[test]
    fn peak_angle_is_arctan_sqrt2() {
        assert_abs_diff_eq!(peak_volume_angle().degrees(), 54.7356, epsilon = 1e-4);
    }

    #[test]
    fn case_a_slice_is_weight_scaled_triangle() {
        let slice = hover_slice_vertices(&p(), deg(10.0)).unwrap();
        assert_eq!(slice.case, HoverCase::A);
        assert_eq!(slice.vertices.len(), 3);
        // apex carries the maximal y-force, weight * tan(alpha)
        let apex = slice.vertices[0];
        assert_abs_diff_eq!(apex.force.x, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(apex.force.y, 6.055, epsilon = 1e-3);
        assert_relative_eq!(apex.force.y, p().weight() * deg(10.0).tan(), epsilon = 1e-12);
    }

    #[test]
    fn case_b_slice_hexagon() {
        let a = deg(50.0);
        let slice = hover_slice_vertices(&p(), a).unwrap();
        assert_eq!(slice.case, HoverCase::B);
        assert_eq!(slice.vertices.len(), 6);
        // the vertex saturating coordinate 2 sits at max x-force
        let max_x = slice
            .vertices
            .iter()
            .cloned()
            .max_by(|u, v| u.force.x.partial_cmp(&v.force.x).unwrap())
            .unwrap();
        let sat = p().rotor_force_max() * a.sin();
        assert_relative_eq!(max_x.force.x, 3f64.sqrt() * sat, epsilon = 1e-12);
        assert_abs_diff_eq!(max_x.force.x, 23.21, epsilon = 5e-3);
        assert_relative_eq!(
            max_x.force.y,
            p().weight() * a.tan() - 3.0 * sat,
            epsilon = 1e-9
        );
    }

    #[test]
    fn slice_vertices_generate_their_forces() {
        // push every vertex's kernel coordinates through the force map
        for d in [5.0, 30.0, 50.0, 65.0, 70.0] {
            let a = deg(d);
            let m = crate::actuation::ActuationMatrices::new(&p(), a);
            let zm = crate::decomposition::ZeroMomentBasis::new(&m);
            let slice = hover_slice_vertices(&p(), a).unwrap();
            let sum = p().hover_input_sum(a);
            for v in &slice.vertices {
                let force = zm.force_map * v.coords;
                assert_abs_diff_eq!(force.x, v.force.x, epsilon = 1e-9);
                assert_abs_diff_eq!(force.y, v.force.y, epsilon = 1e-9);
                assert_relative_eq!(force.z, p().weight(), max_relative = 1e-12);
                assert_relative_eq!(v.coords.sum(), sum, max_relative = 1e-12);
                for &c in v.coords.iter() {
                    assert!(c >= -1e-9 && c <= p().input_max * (1.0 + 1e-12));
                }
            }
        }
    }

    #[test]
    fn slice_is_counterclockwise_from_max_y() {
        for d in [5.0, 30.0, 50.0, 65.0] {
            let slice = hover_slice_vertices(&p(), deg(d)).unwrap();
            let points: Vec<Vector2<f64>> = slice.vertices.iter().map(|v| v.force).collect();
            assert!(geometry::signed_polygon_area(&points) >= 0.0, "CCW at {d} deg");
            let max_y = points.iter().map(|q| q.y).fold(f64::NEG_INFINITY, f64::max);
            assert_abs_diff_eq!(points[0].y, max_y, epsilon = 1e-12);
        }
    }

    #[test]
    fn hexagon_collapses_onto_triangle_at_case_boundary() {
        let ab = case_boundaries(&p()).ab.unwrap();
        let tri = slice_vertices_for_case(&p(), ab, HoverCase::A).unwrap();
        let hexa = slice_vertices_for_case(&p(), ab, HoverCase::B).unwrap();
        for h in &hexa {
            let nearest = tri
                .iter()
                .map(|t| (t.force - h.force).norm())
                .fold(f64::INFINITY, f64::min);
            assert_abs_diff_eq!(nearest, 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn shoelace_matches_area_formula() {
        for d in [5.0, 10.0, 20.0, 42.0, 54.5, 55.0, 60.5, 65.0, 70.0] {
            let a = deg(d);
            let slice = hover_slice_vertices(&p(), a).unwrap();
            let shoelace = hover_slice_area(&slice);
            let formula = closed_form_slice_area(&p(), a).unwrap();
            assert_relative_eq!(shoelace, formula, max_relative = 1e-9);
        }
    }

    #[test]
    fn area_spot_values() {
        assert_relative_eq!(closed_form_slice_area(&p(), deg(55.0)).unwrap(), 1506.0, max_relative = 5e-3);
        assert_relative_eq!(closed_form_slice_area(&p(), deg(42.0)).unwrap(), 1022.0, max_relative = 5e-3);
        // case A closed form: (3 sqrt(3) / 4) (weight tan)^2
        let expected = 3.0 * 3f64.sqrt() / 4.0 * (p().weight() * deg(10.0).tan()).powi(2);
        assert_relative_eq!(closed_form_slice_area(&p(), deg(10.0)).unwrap(), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(expected, 47.614, epsilon = 1e-3);
    }

    #[test]
    fn generic_radii_match_formulas() {
        for d in [3.0, 10.0, 30.0, 49.5, 54.5, 60.5, 64.0, 70.0] {
            let a = deg(d);
            let slice = hover_slice_vertices(&p(), a).unwrap();
            let (gi, go) = slice_radii(&slice).unwrap();
            let (fi, fo) = closed_form_radii(&p(), a).unwrap();
            assert_relative_eq!(gi, fi, max_relative = 1e-9);
            assert_relative_eq!(go, fo, max_relative = 1e-9);
        }
    }

    #[test]
    fn radii_spot_values() {
        let (inner, _) = closed_form_radii(&p(), deg(49.5)).unwrap();
        assert_relative_eq!(inner, 19.81, max_relative = 5e-3);
        let (_, outer) = closed_form_radii(&p(), deg(60.5)).unwrap();
        assert_relative_eq!(outer, 30.34, max_relative = 5e-3);
        let (inner, outer) = closed_form_radii(&p(), deg(10.0)).unwrap();
        assert_relative_eq!(inner, 0.5 * p().weight() * deg(10.0).tan(), epsilon = 1e-12);
        assert_relative_eq!(outer, p().weight() * deg(10.0).tan(), epsilon = 1e-12);
        assert_abs_diff_eq!(inner, 3.027, epsilon = 5e-3);
        assert_abs_diff_eq!(outer, 6.055, epsilon = 5e-3);
    }

    #[test]
    fn zero_tilt_slice_degenerates_cleanly() {
        let slice = hover_slice_vertices(&p(), deg(0.0)).unwrap();
        assert_eq!(hover_slice_area(&slice), 0.0);
        assert_eq!(slice_radii(&slice).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn extra_geometry_spot_values() {
        let g = extra_hover_geometry(&p(), deg(42.0)).unwrap();
        assert_abs_diff_eq!(g.surplus_height, 43.67, epsilon = 0.01);
        assert_abs_diff_eq!(g.corner_height, 17.67, epsilon = 0.01);
        assert_abs_diff_eq!(g.corner_side, 27.56, epsilon = 0.01);
        assert_abs_diff_eq!(g.edge_angle, deg(42.0).radians(), epsilon = 1e-15);

        // corner pyramids vanish exactly at the B/C boundary
        let bc = case_boundaries(&p()).bc.unwrap();
        let g = extra_hover_geometry(&p(), bc).unwrap();
        assert_abs_diff_eq!(g.corner_height, 0.0, epsilon = 1e-9);

        assert!(extra_hover_geometry(&p(), deg(80.0)).is_err());
    }

    #[test]
    fn extra_volume_spot_values() {
        assert_relative_eq!(extra_hover_volume(&p(), deg(42.0)), 23450.0, max_relative = 5e-3);
        assert_relative_eq!(extra_hover_volume(&p(), deg(60.5)), 7089.0, max_relative = 5e-3);
        assert_relative_eq!(extra_hover_volume(&p(), deg(49.5)), 20577.0, max_relative = 5e-3);
        assert_eq!(extra_hover_volume(&p(), deg(80.0)), 0.0);
    }

    #[test]
    fn metrics_continuous_across_case_boundaries() {
        let b = case_boundaries(&p());
        for (angle, lower, upper) in [
            (b.ab.unwrap(), HoverCase::A, HoverCase::B),
            (b.bc.unwrap(), HoverCase::B, HoverCase::C),
        ] {
            let area_low = slice_area_for_case(&p(), angle, lower);
            let area_high = slice_area_for_case(&p(), angle, upper);
            assert_relative_eq!(area_low, area_high, max_relative = 1e-9);
            let (il, ol) = radii_for_case(&p(), angle, lower);
            let (ih, oh) = radii_for_case(&p(), angle, upper);
            assert_relative_eq!(il, ih, max_relative = 1e-9);
            assert_relative_eq!(ol, oh, max_relative = 1e-9);
            let vl = extra_hover_volume_for_case(&p(), angle, lower);
            let vh = extra_hover_volume_for_case(&p(), angle, upper);
            assert_relative_eq!(vl, vh, max_relative = 1e-9);
        }
    }

    #[test]
    fn record_zeroes_case_d_and_flags_zero_tilt() {
        let r = metrics_record(&p(), deg(80.0));
        assert_eq!(r.case, HoverCase::D);
        assert!(!r.feasible);
        assert_eq!(r.slice_area, 0.0);
        assert_eq!(r.inner_radius, 0.0);
        assert_eq!(r.outer_radius, 0.0);
        assert_eq!(r.extra_volume, 0.0);
        assert!(r.volume > 0.0);

        let r0 = metrics_record(&p(), deg(0.0));
        assert!(r0.degenerate);
        assert!(r0.feasible);
        assert_eq!(r0.volume, 0.0);
        assert_eq!(r0.slice_area, 0.0);
        assert_eq!(r0.extra_volume, 0.0);
    }

    #[test]
    fn table_row_54_5() {
        let r = metrics_record(&p(), deg(54.5));
        assert_relative_eq!(r.volume, 42843.0, max_relative = 5e-3);
        assert_relative_eq!(r.slice_area, 1505.0, max_relative = 5e-3);
        assert_relative_eq!(r.outer_radius, 25.26, max_relative = 5e-3);
        assert_relative_eq!(r.inner_radius, 18.66, max_relative = 5e-3);
        assert_relative_eq!(r.extra_volume, 15441.0, max_relative = 5e-3);
    }

    fn rotate120(v: Vector2<f64>) -> Vector2<f64> {
        let (s, c) = (120f64.to_radians().sin(), 120f64.to_radians().cos());
        Vector2::new(c * v.x - s * v.y, s * v.x + c * v.y)
    }

    proptest! {
        #[test]
        fn inner_radius_never_exceeds_outer(d in 0.0..89.9f64) {
            let r = metrics_record(&p(), deg(d));
            prop_assert!(r.inner_radius <= r.outer_radius + 1e-12);
        }

        #[test]
        fn extra_volume_bounded_by_polytope(d in 0.0..89.9f64) {
            let r = metrics_record(&p(), deg(d));
            prop_assert!(r.extra_volume <= r.volume + 1e-9 * r.volume.abs());
            prop_assert!(r.extra_volume >= 0.0);
            prop_assert!(r.slice_area >= 0.0);
        }

        #[test]
        fn hexagon_vertices_lie_on_triangle_perimeter(d in 12.0..60.0f64) {
            // case-B hexagon vertices sit on the case-A triangle for the same tilt
            let a = deg(d);
            prop_assume!(classify_hover_case(&p(), a) == HoverCase::B);
            let hexa = hover_slice_vertices(&p(), a).unwrap();
            let tri: Vec<Vector2<f64>> = slice_vertices_for_case(&p(), a, HoverCase::A)
                .unwrap()
                .iter()
                .map(|v| v.force)
                .collect();
            let scale = p().weight() * a.tan();
            for v in &hexa.vertices {
                let dist = (0..3)
                    .map(|j| geometry::point_segment_distance(v.force, tri[j], tri[(j + 1) % 3]))
                    .fold(f64::INFINITY, f64::min);
                prop_assert!(dist < 1e-9 * scale, "dist {dist} at {d} deg");
            }
        }

        #[test]
        fn slice_has_threefold_symmetry(d in 1.0..70.5f64) {
            let a = deg(d);
            prop_assume!(classify_hover_case(&p(), a) != HoverCase::D);
            let slice = hover_slice_vertices(&p(), a).unwrap();
            let scale = slice.vertices.iter().map(|v| v.force.norm()).fold(1e-12f64, f64::max);
            for v in &slice.vertices {
                let image = rotate120(v.force);
                let nearest = slice
                    .vertices
                    .iter()
                    .map(|w| (w.force - image).norm())
                    .fold(f64::INFINITY, f64::min);
                prop_assert!(nearest < 1e-9 * scale);
            }
        }
    }
}
