//! Parametric actuation model of the star-shaped tilted hexarotor.
//!
//! Six rotors sit at the vertices of a regular hexagon of radius
//! `arm_length` in the body x-y plane. Rotor `i` (1-based) is canted about
//! its arm by the tilt angle with sign alternating between neighbors, and
//! neighbors spin in opposite directions. Squared spin rates map linearly to
//! the total body-frame force and moment through a pair of 3x6 input
//! matrices, built here both in closed form and by stacking per-rotor
//! contributions so the two constructions can be checked against each other.

use nalgebra::{Matrix3, Matrix3x6, Matrix6, Rotation3, Vector3, Vector6};

use crate::error::{Error, Result};
use crate::params::{PlatformParams, TiltAngle};

/// Default relative singular-value threshold for numeric rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Spin direction of rotor `i` (1-based): +1 for odd rotors, -1 for even.
///
/// Neighbors counter-rotate so that drag moments cancel pairwise; the sign
/// assignment matches the closed-form moment matrix.
fn spin_direction(index: usize) -> f64 {
    if index % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

fn check_rotor_index(index: usize) -> Result<()> {
    if (1..=6).contains(&index) {
        Ok(())
    } else {
        Err(Error::RotorIndex { index })
    }
}

/// Position of rotor `i` in the body frame [m]: the hexagon vertex at
/// `(i-1) * 60` degrees from the body x-axis.
pub fn rotor_position(params: &PlatformParams, index: usize) -> Result<Vector3<f64>> {
    check_rotor_index(index)?;
    let yaw = (index as f64 - 1.0) * 60f64.to_radians();
    Ok(Rotation3::from_axis_angle(&Vector3::z_axis(), yaw)
        * Vector3::new(params.arm_length, 0.0, 0.0))
}

/// Unit spin axis of rotor `i`: the body z-axis canted about the arm by the
/// tilt angle, with alternating sign, then carried to the rotor's station.
pub fn rotor_axis(alpha: TiltAngle, index: usize) -> Result<Vector3<f64>> {
    check_rotor_index(index)?;
    let yaw = (index as f64 - 1.0) * 60f64.to_radians();
    let cant = if index.is_multiple_of(2) {
        alpha.radians()
    } else {
        -alpha.radians()
    };
    Ok(Rotation3::from_axis_angle(&Vector3::z_axis(), yaw)
        * (Rotation3::from_axis_angle(&Vector3::x_axis(), cant) * Vector3::z()))
}

/// Actuation classification by numeric rank of the input matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActuationClass {
    /// Zero tilt: all thrust axes collinear, lateral force unavailable.
    UnderActuatedCollinear,
    /// Stacked force/moment map has full rank 6.
    FullyActuated,
    /// Neither of the above; does not occur for a well-formed platform.
    Degenerate,
}

/// Force and moment input matrices for a fixed tilt angle.
///
/// `force` maps squared spin rates to body force [N/Hz^2], `moment` to body
/// moment [N*m/Hz^2].
#[derive(Debug, Clone, PartialEq)]
pub struct ActuationMatrices {
    pub force: Matrix3x6<f64>,
    pub moment: Matrix3x6<f64>,
}

impl ActuationMatrices {
    /// Closed-form matrices for the alternately tilted hexarotor.
    pub fn new(params: &PlatformParams, alpha: TiltAngle) -> Self {
        let (s, c) = (alpha.sin(), alpha.cos());
        let cf = params.thrust_coeff;
        let ct = params.drag_coeff;
        let r = params.drag_arm();
        let h = 3f64.sqrt() / 2.0;

        let force = cf
            * Matrix3x6::from_row_slice(&[
                0.0, h * s, -h * s, 0.0, h * s, -h * s,
                s, -0.5 * s, -0.5 * s, s, -0.5 * s, -0.5 * s,
                c, c, c, c, c, c,
            ]);

        // a: in-plane moment magnitude per unit input; b: yaw magnitude.
        let a = r * c - s;
        let b = r * s + c;
        let moment = ct
            * Matrix3x6::from_row_slice(&[
                0.0, h * a, h * a, 0.0, -h * a, -h * a,
                -a, -0.5 * a, 0.5 * a, a, 0.5 * a, -0.5 * a,
                b, -b, b, -b, b, -b,
            ]);

        Self { force, moment }
    }

    /// The same matrices assembled rotor by rotor from thrust, thrust-moment
    /// and drag-moment contributions. Kept separate from [`Self::new`] so the
    /// closed form can be verified against first principles.
    pub fn from_rotor_geometry(params: &PlatformParams, alpha: TiltAngle) -> Self {
        let mut force = Matrix3x6::zeros();
        let mut moment = Matrix3x6::zeros();
        for i in 1..=6 {
            let p = rotor_position(params, i).expect("index in range");
            let z = rotor_axis(alpha, i).expect("index in range");
            let f = params.thrust_coeff * z;
            let m = params.thrust_coeff * p.cross(&z)
                + spin_direction(i) * params.drag_coeff * z;
            force.set_column(i - 1, &f);
            moment.set_column(i - 1, &m);
        }
        Self { force, moment }
    }

    /// 6x6 stack of the force matrix over the moment matrix.
    pub fn stacked(&self) -> Matrix6<f64> {
        let mut c = Matrix6::zeros();
        c.fixed_view_mut::<3, 6>(0, 0).copy_from(&self.force);
        c.fixed_view_mut::<3, 6>(3, 0).copy_from(&self.moment);
        c
    }

    /// Rank-based actuation class with the default tolerance.
    pub fn classify(&self) -> ActuationClass {
        self.classify_with_tol(DEFAULT_RANK_TOL)
    }

    /// Rank-based actuation class; `tol` is relative to the largest singular
    /// value of each matrix.
    pub fn classify_with_tol(&self, tol: f64) -> ActuationClass {
        let force_rank = relative_rank(self.force.svd(false, false).singular_values.as_slice(), tol);
        let stacked_rank =
            relative_rank(self.stacked().svd(false, false).singular_values.as_slice(), tol);
        if stacked_rank == 6 {
            ActuationClass::FullyActuated
        } else if force_rank < 3 {
            ActuationClass::UnderActuatedCollinear
        } else {
            ActuationClass::Degenerate
        }
    }

    /// Numeric rank of the force matrix.
    pub fn force_rank(&self, tol: f64) -> usize {
        relative_rank(self.force.svd(false, false).singular_values.as_slice(), tol)
    }

    /// Numeric rank of the moment matrix.
    pub fn moment_rank(&self, tol: f64) -> usize {
        relative_rank(self.moment.svd(false, false).singular_values.as_slice(), tol)
    }

    /// Numeric rank of the stacked 6x6 map.
    pub fn stacked_rank(&self, tol: f64) -> usize {
        relative_rank(self.stacked().svd(false, false).singular_values.as_slice(), tol)
    }
}

fn relative_rank(singular_values: &[f64], tol: f64) -> usize {
    let max = singular_values.iter().cloned().fold(0.0f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    singular_values.iter().filter(|&&s| s > tol * max).count()
}

/// Classify actuation from the input matrices (free-function form of
/// [`ActuationMatrices::classify_with_tol`]).
pub fn classify_actuation(matrices: &ActuationMatrices, tol: f64) -> ActuationClass {
    matrices.classify_with_tol(tol)
}

/// Squared spin rates of the six rotors, each bounded to `[0, input_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct InputVector(Vector6<f64>);

impl InputVector {
    pub fn new(values: Vector6<f64>, input_max: f64) -> Result<Self> {
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() || value < 0.0 || value > input_max {
                return Err(Error::InputOutOfBounds {
                    index: index + 1,
                    value,
                    bound: input_max,
                });
            }
        }
        Ok(Self(values))
    }

    /// All six rotors at the same input level.
    pub fn uniform(value: f64, input_max: f64) -> Result<Self> {
        Self::new(Vector6::repeat(value), input_max)
    }

    pub fn values(&self) -> &Vector6<f64> {
        &self.0
    }
}

/// Body-frame force [N] and moment [N*m] produced by a control input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wrench {
    pub force: Vector3<f64>,
    pub moment: Vector3<f64>,
}

/// Evaluate the actuation map: force and moment for a bounded input.
pub fn wrench(matrices: &ActuationMatrices, input: &InputVector) -> Wrench {
    Wrench {
        force: matrices.force * input.values(),
        moment: matrices.moment * input.values(),
    }
}

/// Pose, rates and inertia of the vehicle as a rigid body.
#[derive(Debug, Clone, PartialEq)]
pub struct RigidBodyState {
    /// Position of the body origin in the world frame [m].
    pub position: Vector3<f64>,
    /// Body-to-world rotation.
    pub attitude: Matrix3<f64>,
    /// Angular rate in the body frame [rad/s].
    pub angular_rate: Vector3<f64>,
    /// Inertia about the body origin [kg*m^2].
    pub inertia: Matrix3<f64>,
}

impl RigidBodyState {
    pub fn new(
        position: Vector3<f64>,
        attitude: Matrix3<f64>,
        angular_rate: Vector3<f64>,
        inertia: Matrix3<f64>,
    ) -> Result<Self> {
        let residual = (attitude.transpose() * attitude - Matrix3::identity()).norm();
        if residual > 1e-9 || attitude.determinant() < 0.0 {
            return Err(Error::InvalidRotation { residual });
        }
        if (inertia - inertia.transpose()).norm() > 1e-9 * inertia.norm()
            || inertia.cholesky().is_none()
        {
            return Err(Error::InvalidInertia);
        }
        Ok(Self {
            position,
            attitude,
            angular_rate,
            inertia,
        })
    }
}

impl Default for RigidBodyState {
    /// Level attitude at rest with a placeholder inertia of
    /// diag(0.1, 0.1, 0.2) kg*m^2, suitable for smoke tests only.
    fn default() -> Self {
        Self {
            position: Vector3::zeros(),
            attitude: Matrix3::identity(),
            angular_rate: Vector3::zeros(),
            inertia: Matrix3::from_diagonal(&Vector3::new(0.1, 0.1, 0.2)),
        }
    }
}

/// Newton-Euler accelerations: gravity plus rotated control force over mass,
/// and the inertia-resolved moment balance. Returns (linear [m/s^2],
/// angular [rad/s^2]).
pub fn rigid_body_derivatives(
    state: &RigidBodyState,
    params: &PlatformParams,
    matrices: &ActuationMatrices,
    input: &InputVector,
) -> (Vector3<f64>, Vector3<f64>) {
    let w = wrench(matrices, input);
    let linear =
        Vector3::new(0.0, 0.0, -params.gravity) + state.attitude * w.force / params.mass;
    let coriolis = -state.angular_rate.cross(&(state.inertia * state.angular_rate));
    let angular = state
        .inertia
        .cholesky()
        .expect("inertia validated at construction")
        .solve(&(coriolis + w.moment));
    (linear, angular)
}
