//! Generating curves, their panelization, and the surface of revolution.
//!
//! A surface is described by a planar generating curve t -> (r(t), z(t))
//! in the meridian half-plane r >= 0, rotated about the z axis. Curves are
//! always arc-length parameterized here: built-ins either come that way or
//! are reparameterized numerically at construction.

mod arclength;
mod curve;
mod discretization;
mod spline;

pub use arclength::ArcLengthMap;
pub use curve::{GeneratingCurve, ParametricCurve};
pub use discretization::{Discretization, Node};
pub use spline::{CubicSpline, SplineEnds};

/// A point on the generating curve with its outward unit normal and the
/// parameterization jacobian |d tau / ds| (identically 1 under arc length,
/// retained for generality).
#[derive(Debug, Clone, Copy)]
pub struct CurvePoint {
    pub r: f64,
    pub z: f64,
    pub n_r: f64,
    pub n_z: f64,
    pub jacobian: f64,
}

/// Maps cylindrical surface coordinates to Cartesian:
/// (r cos theta, r sin theta, z).
pub fn surface_point(r: f64, z: f64, theta: f64) -> [f64; 3] {
    debug_assert!(r >= 0.0);
    [r * theta.cos(), r * theta.sin(), z]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surface_point_basic() {
        assert_eq!(surface_point(1.0, 0.0, 0.0), [1.0, 0.0, 0.0]);
        let p = surface_point(1.0, 0.0, std::f64::consts::PI);
        assert!((p[0] + 1.0).abs() < 1e-15 && p[1].abs() < 1e-15 && p[2] == 0.0);
        let q = surface_point(2.0, 3.0, std::f64::consts::FRAC_PI_2);
        assert!(q[0].abs() < 1e-15 && (q[1] - 2.0).abs() < 1e-15 && q[2] == 3.0);
    }
}
