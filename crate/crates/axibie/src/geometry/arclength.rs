use crate::error::{Error, Result};
use crate::geometry::ParametricCurve;
use crate::quadrature::adaptive_integrate;

const LENGTH_TOL: f64 = 1e-13;

/// Arc-length reparameterization of an arbitrary parametric curve.
///
/// Cumulative lengths are tabulated on a fine grid at construction; the
/// inverse map s -> u is then recovered per query by Newton iteration on
/// the adaptively integrated speed, so positions inherit the quadrature
/// tolerance rather than the grid resolution.
pub struct ArcLengthMap {
    source: Box<dyn ParametricCurve>,
    grid_u: Vec<f64>,
    grid_s: Vec<f64>,
    total: f64,
}

impl ArcLengthMap {
    pub fn new(source: Box<dyn ParametricCurve>) -> Result<Self> {
        let (u0, u1) = source.domain();
        if !(u1 > u0) {
            return Err(Error::Config("curve domain must have positive length".into()));
        }
        let n_seg = 512usize;
        let speed = |u: f64| {
            let (dr, dz) = source.deriv(u);
            dr.hypot(dz)
        };
        let mut grid_u = Vec::with_capacity(n_seg + 1);
        let mut grid_s = Vec::with_capacity(n_seg + 1);
        grid_u.push(u0);
        grid_s.push(0.0);
        let mut acc = 0.0;
        for k in 1..=n_seg {
            let ua = u0 + (u1 - u0) * (k - 1) as f64 / n_seg as f64;
            let ub = u0 + (u1 - u0) * k as f64 / n_seg as f64;
            acc += adaptive_integrate(speed, ua, ub, LENGTH_TOL)?;
            grid_u.push(ub);
            grid_s.push(acc);
        }
        Ok(ArcLengthMap {
            source,
            grid_u,
            grid_s,
            total: acc,
        })
    }

    pub fn total_length(&self) -> f64 {
        self.total
    }

    pub fn is_closed(&self) -> bool {
        self.source.is_closed()
    }

    /// Source parameter u such that arclength(u) = s.
    pub fn invert(&self, s: f64) -> f64 {
        let s = s.clamp(0.0, self.total);
        if s == 0.0 {
            return self.grid_u[0];
        }
        if s == self.total {
            return *self.grid_u.last().unwrap();
        }
        let k = match self
            .grid_s
            .binary_search_by(|v| v.partial_cmp(&s).unwrap())
        {
            Ok(i) => i.min(self.grid_s.len() - 2),
            Err(i) => i - 1,
        };
        let (ua, ub) = (self.grid_u[k], self.grid_u[k + 1]);
        let (sa, sb) = (self.grid_s[k], self.grid_s[k + 1]);
        let speed = |u: f64| {
            let (dr, dz) = self.source.deriv(u);
            dr.hypot(dz)
        };
        let mut u = ua + (ub - ua) * (s - sa) / (sb - sa);
        let tol = LENGTH_TOL * self.total.max(1.0);
        for _ in 0..30 {
            let len = adaptive_integrate(speed, ua, u, tol).unwrap_or(f64::NAN);
            let f = sa + len - s;
            if f.abs() <= tol || !f.is_finite() {
                break;
            }
            u -= f / speed(u);
            u = u.clamp(ua, ub + (ub - ua));
        }
        u
    }

    /// Position and unit tangent at arclength s.
    pub fn eval(&self, s: f64) -> ((f64, f64), (f64, f64)) {
        let u = self.invert(s);
        let pos = self.source.eval(u);
        let (dr, dz) = self.source.deriv(u);
        let sp = dr.hypot(dz);
        (pos, (dr / sp, dz / sp))
    }

    /// Signed area of the meridian region: 1/2 * contour integral of
    /// (r dz - z dr) over the source curve. For open on-axis curves the
    /// implicit axis closure contributes nothing.
    pub fn signed_area(&self) -> Result<f64> {
        let (u0, u1) = self.source.domain();
        let integrand = |u: f64| {
            let (r, z) = self.source.eval(u);
            let (dr, dz) = self.source.deriv(u);
            0.5 * (r * dz - z * dr)
        };
        adaptive_integrate(integrand, u0, u1, 1e-12)
    }
}
