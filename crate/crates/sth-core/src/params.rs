//! Platform parameters and the tilt-angle domain.

use crate::error::{Error, Result};

/// Physical description of a star-shaped tilted hexarotor.
///
/// All six rotors share the same thrust/drag coefficients and input bound;
/// adjacent rotors are canted by the same angle with alternating sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlatformParams {
    /// Total mass [kg].
    pub mass: f64,
    /// Distance from the body origin to each rotor [m].
    pub arm_length: f64,
    /// Thrust coefficient [N/Hz^2].
    pub thrust_coeff: f64,
    /// Drag-moment coefficient [N*m/Hz^2].
    pub drag_coeff: f64,
    /// Upper bound on each control input (squared spin rate) [Hz^2].
    pub input_max: f64,
    /// Gravitational acceleration [m/s^2].
    pub gravity: f64,
}

impl PlatformParams {
    pub fn new(
        mass: f64,
        arm_length: f64,
        thrust_coeff: f64,
        drag_coeff: f64,
        input_max: f64,
        gravity: f64,
    ) -> Result<Self> {
        let params = Self {
            mass,
            arm_length,
            thrust_coeff,
            drag_coeff,
            input_max,
            gravity,
        };
        params.validate()?;
        Ok(params)
    }

    fn validate(&self) -> Result<()> {
        let positive: [(&'static str, f64); 5] = [
            ("mass", self.mass),
            ("arm_length", self.arm_length),
            ("thrust_coeff", self.thrust_coeff),
            ("drag_coeff", self.drag_coeff),
            ("gravity", self.gravity),
        ];
        for (name, value) in positive {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidParameter {
                    name,
                    message: format!("must be strictly positive, got {value}"),
                });
            }
        }
        if !self.input_max.is_finite() || self.input_max < 0.0 {
            return Err(Error::InvalidParameter {
                name: "input_max",
                message: format!("must be nonnegative, got {}", self.input_max),
            });
        }
        if self.thrust_coeff <= self.drag_coeff {
            return Err(Error::InvalidParameter {
                name: "thrust_coeff",
                message: format!(
                    "must exceed drag_coeff ({} <= {})",
                    self.thrust_coeff, self.drag_coeff
                ),
            });
        }
        Ok(())
    }

    /// Weight force m*g [N].
    pub fn weight(&self) -> f64 {
        self.mass * self.gravity
    }

    /// Arm length scaled by the thrust-to-drag coefficient ratio [m].
    ///
    /// Pairs the thrust-moment and drag-moment contributions when the moment
    /// input matrix is factored by the drag coefficient.
    pub fn drag_arm(&self) -> f64 {
        self.thrust_coeff / self.drag_coeff * self.arm_length
    }

    /// Largest force a single rotor can produce, `thrust_coeff * input_max` [N].
    pub fn rotor_force_max(&self) -> f64 {
        self.thrust_coeff * self.input_max
    }

    /// Sum of zero-moment input coordinates required to hover level at the
    /// given tilt, `m g / (2 c_f cos(alpha))` [Hz^2].
    pub fn hover_input_sum(&self, alpha: TiltAngle) -> f64 {
        self.weight() / (2.0 * self.thrust_coeff * alpha.cos())
    }

    /// Largest vertical force with all rotors at full input [N].
    pub fn max_vertical_force(&self, alpha: TiltAngle) -> f64 {
        6.0 * self.rotor_force_max() * alpha.cos()
    }
}

impl Default for PlatformParams {
    /// Case-study hexarotor: 3.5 kg, 0.385 m arms, c_f = 1.5e-3, c_tau =
    /// 4.59e-5, inputs bounded by 108^2 Hz^2, g = 9.81.
    fn default() -> Self {
        Self {
            mass: 3.5,
            arm_length: 0.385,
            thrust_coeff: 1.5e-3,
            drag_coeff: 4.59e-5,
            input_max: 108.0 * 108.0,
            gravity: 9.81,
        }
    }
}

/// Tilt cant angle, restricted to [0, 90) degrees.
///
/// Stored in radians; construct from degrees at interface boundaries.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TiltAngle(f64);

impl TiltAngle {
    pub fn from_radians(radians: f64) -> Result<Self> {
        if !radians.is_finite() || !(0.0..std::f64::consts::FRAC_PI_2).contains(&radians) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                message: format!(
                    "tilt angle must lie in [0, 90) degrees, got {} rad",
                    radians
                ),
            });
        }
        Ok(Self(radians))
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        Self::from_radians(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn tan(self) -> f64 {
        self.0.tan()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_matches_case_study() {
        let p = PlatformParams::default();
        assert_eq!(p.mass, 3.5);
        assert_eq!(p.arm_length, 0.385);
        assert_eq!(p.thrust_coeff, 1.5e-3);
        assert_eq!(p.drag_coeff, 4.59e-5);
        assert_eq!(p.input_max, 11664.0);
        assert_eq!(p.gravity, 9.81);
        assert!((p.weight() - 34.335).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_fields() {
        assert!(PlatformParams::new(0.0, 0.385, 1.5e-3, 4.59e-5, 1.0, 9.81).is_err());
        assert!(PlatformParams::new(3.5, -1.0, 1.5e-3, 4.59e-5, 1.0, 9.81).is_err());
        assert!(PlatformParams::new(3.5, 0.385, 1.5e-3, 4.59e-5, -1.0, 9.81).is_err());
    }

    #[test]
    fn rejects_drag_above_thrust() {
        let err = PlatformParams::new(3.5, 0.385, 1e-5, 4.59e-5, 1.0, 9.81).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { name: "thrust_coeff", .. }));
    }

    #[test]
    fn tilt_angle_domain() {
        assert!(TiltAngle::from_degrees(0.0).is_ok());
        assert!(TiltAngle::from_degrees(89.999).is_ok());
        assert!(TiltAngle::from_degrees(90.0).is_err());
        assert!(TiltAngle::from_degrees(-1.0).is_err());
        assert!(TiltAngle::from_radians(f64::NAN).is_err());
    }

    #[test]
    fn degree_round_trip() {
        let a = TiltAngle::from_degrees(54.5).unwrap();
        assert!((a.degrees() - 54.5).abs() < 1e-12);
    }
}
