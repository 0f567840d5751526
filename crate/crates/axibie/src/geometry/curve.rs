use crate::error::{Error, Result};
use crate::geometry::arclength::ArcLengthMap;
use crate::geometry::spline::{CubicSpline, SplineEnds};
use crate::geometry::CurvePoint;
use std::f64::consts::PI;

/// A planar curve u -> (r(u), z(u)) in an arbitrary parameterization,
/// the raw material for a [`GeneratingCurve`].
pub trait ParametricCurve: Send + Sync {
    fn eval(&self, u: f64) -> (f64, f64);
    fn deriv(&self, u: f64) -> (f64, f64);
    fn domain(&self) -> (f64, f64);
    fn is_closed(&self) -> bool;
}

enum CurveImpl {
    /// Sphere of given radius: gamma(t) = R (sin t/R, cos t/R), already
    /// arc-length parameterized.
    Sphere { radius: f64 },
    Mapped(ArcLengthMap),
}

/// An arc-length parameterized generating curve with consistent outward
/// normals. Immutable after construction; safe for concurrent reads.
pub struct GeneratingCurve {
    imp: CurveImpl,
    total: f64,
    closed: bool,
    /// +1 when the curve runs counterclockwise around the meridian region
    /// (outward normal = tangent rotated by -pi/2), -1 otherwise.
    normal_sign: f64,
}

impl GeneratingCurve {
    /// Sphere of radius `radius`, generating curve on [0, pi * radius]
    /// from the north pole to the south pole.
    pub fn sphere(radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::Config(format!("sphere radius must be positive, got {radius}")));
        }
        Ok(GeneratingCurve {
            imp: CurveImpl::Sphere { radius },
            total: PI * radius,
            closed: false,
            normal_sign: -1.0, // pole-to-pole traversal is clockwise
        })
    }

    /// Ball-like profile with a wavy meridian: rho(u) (sin u, cos u) with
    /// rho(u) = scale (1 + amplitude cos(waves u)), u in [0, pi]. Both
    /// endpoints sit on the axis; integer `waves` keeps the poles smooth.
    pub fn wavy_block(scale: f64, amplitude: f64, waves: u32) -> Result<Self> {
        if !(scale > 0.0) || amplitude.abs() >= 1.0 {
            return Err(Error::Config(format!(
                "wavy profile needs scale > 0 and |amplitude| < 1 (got {scale}, {amplitude})"
            )));
        }
        Self::from_parametric(Box::new(WavyProfile {
            scale,
            amplitude,
            waves: waves as f64,
        }))
    }

    /// Torus whose tube cross-section is a star-shaped closed curve:
    /// (R + rho(u) cos u, rho(u) sin u) with rho = a (1 + w cos(m u)).
    pub fn starfish_torus(major: f64, minor: f64, amplitude: f64, waves: u32) -> Result<Self> {
        let rho_max = minor * (1.0 + amplitude.abs());
        if !(minor > 0.0) || amplitude.abs() >= 1.0 || major <= rho_max {
            return Err(Error::Config(format!(
                "torus cross-section must stay off the axis \
                 (major {major}, max cross-section radius {rho_max})"
            )));
        }
        Self::from_parametric(Box::new(StarfishCross {
            major,
            minor,
            amplitude,
            waves: waves as f64,
        }))
    }

    /// Curve through sampled (r, z) points, interpolated by a cubic spline
    /// in chord-length parameterization and then reparameterized to arc
    /// length. Closed when the first and last samples coincide; otherwise
    /// both endpoints must lie on the axis (r = 0 to 1e-10).
    pub fn from_samples(points: &[(f64, f64)]) -> Result<Self> {
        if points.len() < 4 {
            return Err(Error::Config(format!(
                "need at least 4 sample points, got {}",
                points.len()
            )));
        }
        let scale = points
            .iter()
            .map(|&(r, z)| r.hypot(z))
            .fold(0.0, f64::max)
            .max(1e-30);
        let first = points[0];
        let last = *points.last().unwrap();
        let closed = (first.0 - last.0).hypot(first.1 - last.1) <= 1e-9 * scale;
        let mut pts = points.to_vec();
        if closed {
            let n = pts.len();
            pts[n - 1] = first; // exact closure
        } else {
            for idx in [0, pts.len() - 1] {
                if pts[idx].0.abs() > 1e-10 * scale {
                    return Err(Error::Config(format!(
                        "open curve endpoint {idx} is off the axis (r = {})",
                        pts[idx].0
                    )));
                }
                pts[idx].0 = 0.0;
            }
        }
        Self::from_parametric(Box::new(SampledCurve::new(&pts, closed)?))
    }

    /// General entry point: reparameterize any parametric curve to arc
    /// length and validate the generating-curve invariants.
    pub fn from_parametric(source: Box<dyn ParametricCurve>) -> Result<Self> {
        let closed = source.is_closed();
        let map = ArcLengthMap::new(source)?;
        let total = map.total_length();
        let area = map.signed_area()?;
        if area == 0.0 {
            return Err(Error::Config("degenerate curve: zero enclosed area".into()));
        }
        let curve = GeneratingCurve {
            imp: CurveImpl::Mapped(map),
            total,
            closed,
            normal_sign: area.signum(),
        };
        curve.validate()?;
        Ok(curve)
    }

    fn validate(&self) -> Result<()> {
        let scale = self.total.max(1.0);
        for k in 0..=200 {
            let t = self.total * k as f64 / 200.0;
            let p = self.eval(t)?;
            if p.r < -1e-12 * scale {
                return Err(Error::Config(format!(
                    "generating curve has negative radius r = {} at t = {t}",
                    p.r
                )));
            }
        }
        if self.closed {
            let a = self.eval(0.0)?;
            let b = self.eval(self.total)?;
            if (a.r - b.r).hypot(a.z - b.z) > 1e-12 * scale {
                return Err(Error::Config("closed curve endpoints do not match".into()));
            }
        }
        Ok(())
    }

    pub fn total_length(&self) -> f64 {
        self.total
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Position, outward unit normal, and jacobian at arclength t in [0, T].
    pub fn eval(&self, t: f64) -> Result<CurvePoint> {
        let slack = 1e-9 * self.total;
        if t < -slack || t > self.total + slack {
            return Err(Error::Domain(format!(
                "arclength parameter {t} outside [0, {}]",
                self.total
            )));
        }
        let t = t.clamp(0.0, self.total);
        let ((r, z), (t_r, t_z)) = match &self.imp {
            CurveImpl::Sphere { radius } => {
                let ang = t / radius;
                (
                    (radius * ang.sin(), radius * ang.cos()),
                    (ang.cos(), -ang.sin()),
                )
            }
            CurveImpl::Mapped(map) => map.eval(t),
        };
        // outward normal: tangent rotated by -pi/2 for counterclockwise
        // traversal, +pi/2 for clockwise
        let (n_r, n_z) = (self.normal_sign * t_z, -self.normal_sign * t_r);
        Ok(CurvePoint {
            r: r.max(0.0),
            z,
            n_r,
            n_z,
            jacobian: 1.0,
        })
    }

    /// Fixed-resolution polygon of the meridian region, closed through the
    /// axis for open curves. Resolution-independent of any discretization,
    /// so inside/outside queries and centroids stay identical across panel
    /// counts.
    pub fn meridian_polygon(&self) -> Vec<(f64, f64)> {
        let n = 1024usize;
        let mut poly: Vec<(f64, f64)> = (0..n)
            .map(|k| {
                let t = self.total * k as f64 / n as f64;
                let p = self.eval(t).expect("in-domain sample");
                (p.r, p.z)
            })
            .collect();
        if !self.closed {
            let last = self.eval(self.total).expect("endpoint");
            poly.push((last.r, last.z));
            // both endpoints are on the axis; the r = 0 return segment
            // closes the contour
            poly.push((0.0, last.z));
            poly.push((0.0, poly[0].1));
        }
        poly
    }

    /// Largest distance from the origin to the curve.
    pub fn bounding_radius(&self) -> f64 {
        (0..=512)
            .map(|k| {
                let p = self.eval(self.total * k as f64 / 512.0).unwrap();
                p.r.hypot(p.z)
            })
            .fold(0.0, f64::max)
    }

    /// Area centroid of the meridian region.
    pub fn meridian_centroid(&self) -> (f64, f64) {
        let poly = self.meridian_polygon();
        let mut a2 = 0.0;
        let mut cr = 0.0;
        let mut cz = 0.0;
        for k in 0..poly.len() {
            let (r0, z0) = poly[k];
            let (r1, z1) = poly[(k + 1) % poly.len()];
            let cross = r0 * z1 - r1 * z0;
            a2 += cross;
            cr += (r0 + r1) * cross;
            cz += (z0 + z1) * cross;
        }
        (cr / (3.0 * a2), cz / (3.0 * a2))
    }

    /// Ray-cast test for (r, z) strictly inside the meridian region.
    pub fn meridian_contains(&self, r: f64, z: f64) -> bool {
        let poly = self.meridian_polygon();
        let mut inside = false;
        for k in 0..poly.len() {
            let (r0, z0) = poly[k];
            let (r1, z1) = poly[(k + 1) % poly.len()];
            if (z0 > z) != (z1 > z) {
                let x = r0 + (z - z0) / (z1 - z0) * (r1 - r0);
                if x > r {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Distance from (r, z) to the sampled curve.
    pub fn meridian_clearance(&self, r: f64, z: f64) -> f64 {
        (0..=1024)
            .map(|k| {
                let p = self.eval(self.total * k as f64 / 1024.0).unwrap();
                (p.r - r).hypot(p.z - z)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

struct WavyProfile {
    scale: f64,
    amplitude: f64,
    waves: f64,
}

impl WavyProfile {
    fn rho(&self, u: f64) -> (f64, f64) {
        (
            self.scale * (1.0 + self.amplitude * (self.waves * u).cos()),
            -self.scale * self.amplitude * self.waves * (self.waves * u).sin(),
        )
    }
}

impl ParametricCurve for WavyProfile {
    fn eval(&self, u: f64) -> (f64, f64) {
        let (rho, _) = self.rho(u);
        (rho * u.sin(), rho * u.cos())
    }
    fn deriv(&self, u: f64) -> (f64, f64) {
        let (rho, drho) = self.rho(u);
        (
            drho * u.sin() + rho * u.cos(),
            drho * u.cos() - rho * u.sin(),
        )
    }
    fn domain(&self) -> (f64, f64) {
        (0.0, PI)
    }
    fn is_closed(&self) -> bool {
        false
    }
}

struct StarfishCross {
    major: f64,
    minor: f64,
    amplitude: f64,
    waves: f64,
}

impl StarfishCross {
    fn rho(&self, u: f64) -> (f64, f64) {
        (
            self.minor * (1.0 + self.amplitude * (self.waves * u).cos()),
            -self.minor * self.amplitude * self.waves * (self.waves * u).sin(),
        )
    }
}

impl ParametricCurve for StarfishCross {
    fn eval(&self, u: f64) -> (f64, f64) {
        let (rho, _) = self.rho(u);
        (self.major + rho * u.cos(), rho * u.sin())
    }
    fn deriv(&self, u: f64) -> (f64, f64) {
        let (rho, drho) = self.rho(u);
        (
            drho * u.cos() - rho * u.sin(),
            drho * u.sin() + rho * u.cos(),
        )
    }
    fn domain(&self) -> (f64, f64) {
        (0.0, 2.0 * PI)
    }
    fn is_closed(&self) -> bool {
        true
    }
}

struct SampledCurve {
    r: CubicSpline,
    z: CubicSpline,
    u_end: f64,
    closed: bool,
}

impl SampledCurve {
    fn new(points: &[(f64, f64)], closed: bool) -> Result<Self> {
        // chord-length parameterization
        let mut u = Vec::with_capacity(points.len());
        u.push(0.0);
        for w in points.windows(2) {
            let d = (w[1].0 - w[0].0).hypot(w[1].1 - w[0].1);
            if d == 0.0 && u.len() < points.len() {
                return Err(Error::Config("repeated sample point in curve file".into()));
            }
            u.push(u.last().unwrap() + d);
        }
        let rs: Vec<f64> = points.iter().map(|p| p.0).collect();
        let zs: Vec<f64> = points.iter().map(|p| p.1).collect();
        let (r, z) = if closed {
            (
                CubicSpline::new(&u, &rs, SplineEnds::Periodic)?,
                CubicSpline::new(&u, &zs, SplineEnds::Periodic)?,
            )
        } else {
            let n = points.len();
            let d0r = one_sided_deriv(u[0], u[1], u[2], rs[0], rs[1], rs[2]);
            let d0z = one_sided_deriv(u[0], u[1], u[2], zs[0], zs[1], zs[2]);
            let d1r = one_sided_deriv(u[n - 1], u[n - 2], u[n - 3], rs[n - 1], rs[n - 2], rs[n - 3]);
            let d1z = one_sided_deriv(u[n - 1], u[n - 2], u[n - 3], zs[n - 1], zs[n - 2], zs[n - 3]);
            (
                CubicSpline::new(&u, &rs, SplineEnds::Clamped(d0r, d1r))?,
                CubicSpline::new(&u, &zs, SplineEnds::Clamped(d0z, d1z))?,
            )
        };
        Ok(SampledCurve {
            r,
            z,
            u_end: *u.last().unwrap(),
            closed,
        })
    }
}

/// Derivative at u0 of the parabola through (u0,y0), (u1,y1), (u2,y2).
fn one_sided_deriv(u0: f64, u1: f64, u2: f64, y0: f64, y1: f64, y2: f64) -> f64 {
    y0 * (2.0 * u0 - u1 - u2) / ((u0 - u1) * (u0 - u2))
        + y1 * (u0 - u2) / ((u1 - u0) * (u1 - u2))
        + y2 * (u0 - u1) / ((u2 - u0) * (u2 - u1))
}

impl ParametricCurve for SampledCurve {
    fn eval(&self, u: f64) -> (f64, f64) {
        (self.r.eval(u), self.z.eval(u))
    }
    fn deriv(&self, u: f64) -> (f64, f64) {
        (self.r.deriv(u), self.z.deriv(u))
    }
    fn domain(&self) -> (f64, f64) {
        (0.0, self.u_end)
    }
    fn is_closed(&self) -> bool {
        self.closed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sphere_equator_and_pole() {
        let c = GeneratingCurve::sphere(1.0).unwrap();
        let eq = c.eval(PI / 2.0).unwrap();
        assert_abs_diff_eq!(eq.r, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eq.z, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eq.n_r, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eq.n_z, 0.0, epsilon = 1e-15);
        let pole = c.eval(0.0).unwrap();
        assert_eq!(pole.r, 0.0);
        assert_abs_diff_eq!(pole.z, 1.0, epsilon = 1e-15);
        assert!(c.eval(-0.1).is_err());
        assert!(c.eval(PI + 0.1).is_err());
    }

    #[test]
    fn normals_are_unit_everywhere() {
        let curves = [
            GeneratingCurve::sphere(2.0).unwrap(),
            GeneratingCurve::wavy_block(1.0, 0.15, 4).unwrap(),
            GeneratingCurve::starfish_torus(2.0, 0.5, 0.3, 5).unwrap(),
        ];
        for c in &curves {
            for k in 0..=40 {
                let t = c.total_length() * k as f64 / 40.0;
                let p = c.eval(t).unwrap();
                assert_abs_diff_eq!(p.n_r * p.n_r + p.n_z * p.n_z, 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn torus_normal_matches_finite_difference_tangent() {
        let c = GeneratingCurve::starfish_torus(2.0, 0.5, 0.3, 5).unwrap();
        let t0 = 0.37 * c.total_length();
        let h = 1e-6;
        let a = c.eval(t0 - h).unwrap();
        let b = c.eval(t0 + h).unwrap();
        let (tr, tz) = ((b.r - a.r) / (2.0 * h), (b.z - a.z) / (2.0 * h));
        let p = c.eval(t0).unwrap();
        // normal orthogonal to the tangent and consistent with a -pi/2 or
        // +pi/2 rotation of it
        assert_abs_diff_eq!(p.n_r * tr + p.n_z * tz, 0.0, epsilon = 1e-6);
        let cross = tr * p.n_z - tz * p.n_r;
        assert_abs_diff_eq!(cross.abs(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn torus_normal_points_away_from_tube_center() {
        let c = GeneratingCurve::starfish_torus(2.0, 0.5, 0.0, 1).unwrap();
        for k in 0..24 {
            let t = c.total_length() * k as f64 / 24.0;
            let p = c.eval(t).unwrap();
            let dot = p.n_r * (p.r - 2.0) + p.n_z * p.z;
            assert!(dot > 0.0, "inward normal at t = {t}");
        }
    }

    #[test]
    fn wavy_block_endpoints_on_axis() {
        let c = GeneratingCurve::wavy_block(1.0, 0.15, 4).unwrap();
        assert!(c.eval(0.0).unwrap().r < 1e-12);
        assert!(c.eval(c.total_length()).unwrap().r < 1e-12);
        assert!(!c.is_closed());
    }

    #[test]
    fn sampled_circle_curve_roundtrip() {
        // closed circle around (2, 0) with radius 0.5, dense sampling
        let n = 400;
        let pts: Vec<(f64, f64)> = (0..=n)
            .map(|k| {
                let a = 2.0 * PI * k as f64 / n as f64;
                (2.0 + 0.5 * a.cos(), 0.5 * a.sin())
            })
            .collect();
        let c = GeneratingCurve::from_samples(&pts).unwrap();
        assert!(c.is_closed());
        assert_abs_diff_eq!(c.total_length(), PI, epsilon = 1e-6);
        // points stay on the circle
        for k in 0..10 {
            let t = c.total_length() * k as f64 / 10.0;
            let p = c.eval(t).unwrap();
            let d = (p.r - 2.0).hypot(p.z);
            assert_abs_diff_eq!(d, 0.5, epsilon = 1e-6);
        }
    }

    #[test]
    fn off_axis_open_samples_rejected() {
        let pts = vec![(0.1, 1.0), (0.8, 0.5), (0.9, -0.2), (0.2, -1.0)];
        assert!(GeneratingCurve::from_samples(&pts).is_err());
    }

    #[test]
    fn arc_length_speed_check() {
        let c = GeneratingCurve::wavy_block(1.0, 0.15, 4).unwrap();
        let h = 1e-5;
        for k in 1..20 {
            let t = c.total_length() * k as f64 / 20.0;
            let a = c.eval(t - h).unwrap();
            let b = c.eval(t + h).unwrap();
            let speed = (b.r - a.r).hypot(b.z - a.z) / (2.0 * h);
            assert!((speed - 1.0).abs() < 1e-8, "speed {speed} at t={t}");
        }
    }
}
