use thiserror::Error;

/// Errors produced by the actuation and metrics computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A platform parameter or derived quantity violated its constraint.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// Rotor indices are 1..=6.
    #[error("rotor index {index} out of range 1..=6")]
    RotorIndex { index: usize },

    /// A control input component left the admissible interval.
    #[error("input component {index} = {value} outside [0, {bound}]")]
    InputOutOfBounds { index: usize, value: f64, bound: f64 },

    /// Attitude matrix failed the orthonormality check.
    #[error("attitude matrix is not a rotation (orthonormality residual {residual:.3e})")]
    InvalidRotation { residual: f64 },

    /// Inertia matrix must be symmetric positive definite.
    #[error("inertia matrix is not symmetric positive definite")]
    InvalidInertia,

    /// Moment input matrix lost rank; its row space has no 3D basis.
    #[error("moment input matrix is rank deficient (rank {rank} < 3)")]
    RankDeficientMoment { rank: usize },

    /// The stacked basis [A B] could not be inverted.
    #[error("input-space basis [A B] is numerically singular (condition number {condition:.3e})")]
    SingularBasis { condition: f64 },

    /// Hover-plane quantities are undefined when gravity cannot be compensated.
    #[error("hover infeasible at alpha = {alpha_deg:.3} deg (case D: input bound too small)")]
    InfeasibleHover { alpha_deg: f64 },

    /// The hover slice degenerated or lost the origin; radii are undefined.
    #[error("hover slice is invalid: {message}")]
    InvalidSlice { message: String },

    /// Sampling resolutions below 2 cannot bracket the polytope.
    #[error("sampling resolution {resolution} too small (need at least 2)")]
    ResolutionTooSmall { resolution: usize },

    /// Guard against accidentally materializing enormous sample grids.
    #[error("sampling resolution {resolution} would produce {points} points (cap {cap})")]
    ResolutionTooLarge { resolution: usize, points: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
