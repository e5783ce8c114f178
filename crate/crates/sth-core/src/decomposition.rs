//! Split of the input space into a moment-generating part and a
//! zero-moment part.
//!
//! The moment matrix of the alternately tilted hexarotor annihilates inputs
//! that load opposite rotors equally, so its kernel is spanned by the
//! stacked-identity basis `[I; I]`. Forces reachable through that kernel are
//! the image of a 3x3 map obtained by summing the two column blocks of the
//! force matrix; forces reachable through the moment row space vanish
//! identically, which is what makes the platform fully decoupled.

use nalgebra::{Matrix3, Matrix6, Matrix6x3, Vector3, Vector6};

use crate::actuation::{ActuationMatrices, InputVector, DEFAULT_RANK_TOL};
use crate::error::{Error, Result};

/// Default relative tolerance for the decoupling residual.
pub const DEFAULT_DECOUPLING_TOL: f64 = 1e-9;

/// Kernel basis of the moment matrix and the induced zero-moment force map.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroMomentBasis {
    /// 6x3 kernel basis; the stacked identity `[I; I]`.
    pub basis: Matrix6x3<f64>,
    /// 3x3 map from kernel coordinates to body force [N/Hz^2].
    pub force_map: Matrix3<f64>,
}

impl ZeroMomentBasis {
    pub fn new(matrices: &ActuationMatrices) -> Self {
        let basis = Self::kernel_basis();
        let force_map = matrices.force * basis;
        Self { basis, force_map }
    }

    /// The closed-form kernel basis `[I; I]`, valid for every tilt angle.
    pub fn kernel_basis() -> Matrix6x3<f64> {
        let mut b = Matrix6x3::zeros();
        b.fixed_view_mut::<3, 3>(0, 0).copy_from(&Matrix3::identity());
        b.fixed_view_mut::<3, 3>(3, 0).copy_from(&Matrix3::identity());
        b
    }
}

/// Construct the zero-moment basis and force map for a set of input matrices.
pub fn zero_moment_basis(matrices: &ActuationMatrices) -> ZeroMomentBasis {
    ZeroMomentBasis::new(matrices)
}

/// Orthonormal basis of the moment matrix's row space.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentRowBasis {
    /// 6x3 matrix with orthonormal columns spanning the row space.
    pub basis: Matrix6x3<f64>,
}

impl MomentRowBasis {
    /// Extract the row space from a singular value decomposition.
    ///
    /// Fails if the moment matrix is numerically rank deficient, which does
    /// not happen for any admissible tilt angle.
    pub fn new(matrices: &ActuationMatrices) -> Result<Self> {
        let svd = matrices.moment.svd(false, true);
        let sigma = &svd.singular_values;
        let max = sigma.iter().cloned().fold(0.0f64, f64::max);
        let rank = sigma.iter().filter(|&&s| s > DEFAULT_RANK_TOL * max).count();
        if rank < 3 {
            return Err(Error::RankDeficientMoment { rank });
        }
        let v_t = svd.v_t.expect("requested V^T");
        Ok(Self {
            basis: v_t.transpose(),
        })
    }
}

/// Construct an orthonormal moment-row-space basis.
pub fn moment_row_basis(matrices: &ActuationMatrices) -> Result<MomentRowBasis> {
    MomentRowBasis::new(matrices)
}

/// An input resolved into moment-generating and zero-moment components.
#[derive(Debug, Clone, PartialEq)]
pub struct InputSplit {
    /// Component in the moment row space; carries the full control moment.
    pub moment_part: Vector6<f64>,
    /// Component in the moment kernel; produces force only.
    pub zero_moment_part: Vector6<f64>,
    /// Coordinates of `moment_part` in the row-space basis.
    pub moment_coords: Vector3<f64>,
    /// Coordinates of `zero_moment_part` in the kernel basis.
    pub zero_moment_coords: Vector3<f64>,
}

/// Resolve an input against the stacked basis `[A B]` by a direct solve.
pub fn split_input(
    input: &InputVector,
    row_basis: &MomentRowBasis,
    kernel: &ZeroMomentBasis,
) -> Result<InputSplit> {
    let mut stacked = Matrix6::zeros();
    stacked.fixed_view_mut::<6, 3>(0, 0).copy_from(&row_basis.basis);
    stacked.fixed_view_mut::<6, 3>(0, 3).copy_from(&kernel.basis);

    let coords = stacked.lu().solve(input.values()).ok_or_else(|| {
        let sigma = stacked.svd(false, false).singular_values;
        let max = sigma.iter().cloned().fold(0.0f64, f64::max);
        let min = sigma.iter().cloned().fold(f64::INFINITY, f64::min);
        Error::SingularBasis {
            condition: if min > 0.0 { max / min } else { f64::INFINITY },
        }
    })?;

    let moment_coords = coords.fixed_rows::<3>(0).into_owned();
    let zero_moment_coords = coords.fixed_rows::<3>(3).into_owned();
    Ok(InputSplit {
        moment_part: row_basis.basis * moment_coords,
        zero_moment_part: kernel.basis * zero_moment_coords,
        moment_coords,
        zero_moment_coords,
    })
}

/// Outcome of the force/moment decoupling test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecouplingCheck {
    pub passed: bool,
    /// Spectral norm of the force matrix restricted to the moment row
    /// space, relative to the force matrix's own spectral norm.
    pub residual: f64,
}

/// Verify that forces reachable through the moment row space vanish: the
/// force matrix applied to the row-space basis must have spectral norm
/// below `tol` relative to the force matrix itself.
pub fn decoupling_check(
    matrices: &ActuationMatrices,
    row_basis: &MomentRowBasis,
    tol: f64,
) -> DecouplingCheck {
    let coupled = matrices.force * row_basis.basis;
    let coupled_norm = spectral_norm3(coupled.svd(false, false).singular_values.as_slice());
    let force_norm = spectral_norm3(matrices.force.svd(false, false).singular_values.as_slice());
    let residual = if force_norm > 0.0 {
        coupled_norm / force_norm
    } else {
        coupled_norm
    };
    DecouplingCheck {
        passed: residual < tol,
        residual,
    }
}

fn spectral_norm3(singular_values: &[f64]) -> f64 {
    singular_values.iter().cloned().fold(0.0f64, f64::max)
}
