//! Actuation analysis for star-shaped tilted hexarotors.
//!
//! Models a hexarotor whose rotors sit on a regular hexagon and are
//! alternately canted about the arms by a fixed tilt angle, and computes the
//! maneuverability metrics that the tilt angle controls: the zero-moment
//! force polytope volume, the hover-plane slice area and radii, and the
//! force volume left above gravity compensation. Every closed form is backed
//! by a sampling oracle that re-measures the same quantity from first
//! principles.
//!
//! * [`params`] — platform constants and the tilt-angle domain
//! * [`actuation`] — rotor geometry, input matrices, wrenches, rigid-body
//!   dynamics
//! * [`decomposition`] — moment-kernel/row-space split of the input space
//! * [`hover`] — hover cases and the closed-form metrics
//! * [`oracle`] — grid-sampling verification of the closed forms
//! * [`geometry`] — hulls, areas and distances shared by the above
//!
//! Everything is a pure function over immutable values; computations for
//! different tilt angles can run on as many threads as you like.

pub mod actuation;
pub mod decomposition;
mod error;
pub mod geometry;
pub mod hover;
pub mod oracle;
pub mod params;

pub use actuation::{
    classify_actuation, rigid_body_derivatives, rotor_axis, rotor_position, wrench,
    ActuationClass, ActuationMatrices, InputVector, RigidBodyState, Wrench,
};
pub use decomposition::{
    decoupling_check, moment_row_basis, split_input, zero_moment_basis, DecouplingCheck,
    InputSplit, MomentRowBasis, ZeroMomentBasis,
};
pub use error::{Error, Result};
pub use hover::{
    case_boundaries, classify_hover_case, closed_form_radii, closed_form_slice_area,
    extra_hover_geometry, extra_hover_volume, hover_slice_area, hover_slice_vertices,
    metrics_record, peak_volume_angle, zero_moment_volume, CaseBoundaries, ExtraHoverGeometry,
    HoverCase, HoverSlice, MetricsRecord, SliceVertex,
};
pub use oracle::{
    compare, monte_carlo_extra_hover_volume, oracle_extra_hover_volume, oracle_slice,
    oracle_volume, sample_zero_moment_forces, Comparison, OracleReport, SampledPolytope,
    SliceOracle,
};
pub use params::{PlatformParams, TiltAngle};
