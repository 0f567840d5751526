use crate::error::{Error, Result};

/// End conditions for a one-dimensional cubic spline.
#[derive(Debug, Clone, Copy)]
pub enum SplineEnds {
    /// Prescribed first derivatives at both ends.
    Clamped(f64, f64),
    /// Periodic closure: y[n-1] is identified with y[0] shifted by one period.
    Periodic,
}

/// Cubic spline through (u_i, y_i), stored via second derivatives.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    u: Vec<f64>,
    y: Vec<f64>,
    m: Vec<f64>, // second derivatives at the knots
}

impl CubicSpline {
    pub fn new(u: &[f64], y: &[f64], ends: SplineEnds) -> Result<Self> {
        let n = u.len();
        if n < 3 || y.len() != n {
            return Err(Error::Config(format!(
                "spline needs >= 3 knots with matching values (got {n}, {})",
                y.len()
            )));
        }
        if u.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config("spline knots must be strictly increasing".into()));
        }
        let m = match ends {
            SplineEnds::Clamped(d0, d1) => solve_clamped(u, y, d0, d1),
            SplineEnds::Periodic => {
                if (y[n - 1] - y[0]).abs() > 1e-9 * (1.0 + y[0].abs()) {
                    return Err(Error::Config(
                        "periodic spline requires matching end values".into(),
                    ));
                }
                solve_periodic(u, y)
            }
        };
        Ok(CubicSpline {
            u: u.to_vec(),
            y: y.to_vec(),
            m,
        })
    }

    fn segment(&self, x: f64) -> usize {
        match self.u.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.u.len() - 2),
            Err(i) => i.clamp(1, self.u.len() - 1) - 1,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.u[i + 1] - self.u[i];
        let a = (self.u[i + 1] - x) / h;
        let b = (x - self.u[i]) / h;
        a * self.y[i]
            + b * self.y[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }

    pub fn deriv(&self, x: f64) -> f64 {
        let i = self.segment(x);
        let h = self.u[i + 1] - self.u[i];
        let a = (self.u[i + 1] - x) / h;
        let b = (x - self.u[i]) / h;
        (self.y[i + 1] - self.y[i]) / h
            + ((3.0 * b * b - 1.0) * self.m[i + 1] - (3.0 * a * a - 1.0) * self.m[i]) * h / 6.0
    }
}

/// Thomas algorithm for a tridiagonal system.
fn solve_tridiagonal(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let denom = diag[i] - lower[i] * c[i - 1];
        c[i] = if i + 1 < n { upper[i] / denom } else { 0.0 };
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    d
}

fn solve_clamped(u: &[f64], y: &[f64], d0: f64, d1: f64) -> Vec<f64> {
    let n = u.len();
    let h: Vec<f64> = u.windows(2).map(|w| w[1] - w[0]).collect();
    let mut lower = vec![0.0; n];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    diag[0] = h[0] / 3.0;
    upper[0] = h[0] / 6.0;
    rhs[0] = (y[1] - y[0]) / h[0] - d0;
    for i in 1..n - 1 {
        lower[i] = h[i - 1] / 6.0;
        diag[i] = (h[i - 1] + h[i]) / 3.0;
        upper[i] = h[i] / 6.0;
        rhs[i] = (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
    }
    lower[n - 1] = h[n - 2] / 6.0;
    diag[n - 1] = h[n - 2] / 3.0;
    rhs[n - 1] = d1 - (y[n - 1] - y[n - 2]) / h[n - 2];
    solve_tridiagonal(&lower, &diag, &upper, &rhs)
}

/// Cyclic tridiagonal solve by the Sherman-Morrison correction.
fn solve_periodic(u: &[f64], y: &[f64]) -> Vec<f64> {
    // unknowns m_0..m_{n-2}; m_{n-1} = m_0 by periodicity
    let n = u.len() - 1; // number of distinct knots
    let h: Vec<f64> = u.windows(2).map(|w| w[1] - w[0]).collect();
    let hm = |i: usize| h[(i + n - 1) % n]; // h_{i-1} with wrap
    let slope = |i: usize| (y[i + 1] - y[i]) / h[i];
    let slope_wrap = |i: usize| slope(i % n);
    let mut lower = vec![0.0; n];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    for i in 0..n {
        lower[i] = hm(i) / 6.0;
        diag[i] = (hm(i) + h[i]) / 3.0;
        upper[i] = h[i] / 6.0;
        rhs[i] = slope_wrap(i) - slope_wrap(i + n - 1);
    }
    // corner entries: lower[0] couples to m_{n-1}, upper[n-1] couples to m_0
    let alpha = lower[0];
    let beta = upper[n - 1];
    let gamma = -diag[0];
    let mut diag_mod = diag.clone();
    diag_mod[0] -= gamma;
    diag_mod[n - 1] -= alpha * beta / gamma;
    let x = solve_tridiagonal(&lower, &diag_mod, &upper, &rhs);
    let mut uvec = vec![0.0; n];
    uvec[0] = gamma;
    uvec[n - 1] = alpha;
    let q = solve_tridiagonal(&lower, &diag_mod, &upper, &uvec);
    let factor =
        (x[0] + beta * x[n - 1] / gamma) / (1.0 + q[0] + beta * q[n - 1] / gamma);
    let mut m: Vec<f64> = (0..n).map(|i| x[i] - factor * q[i]).collect();
    m.push(m[0]);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn clamped_reproduces_cubic_exactly() {
        let f = |x: f64| 2.0 * x * x * x - x * x + 3.0 * x - 1.0;
        let df = |x: f64| 6.0 * x * x - 2.0 * x + 3.0;
        let u: Vec<f64> = (0..9).map(|i| i as f64 / 8.0).collect();
        let y: Vec<f64> = u.iter().map(|&x| f(x)).collect();
        let s = CubicSpline::new(&u, &y, SplineEnds::Clamped(df(0.0), df(1.0))).unwrap();
        for k in 0..100 {
            let x = k as f64 / 99.0;
            assert_abs_diff_eq!(s.eval(x), f(x), epsilon = 1e-12);
            assert_abs_diff_eq!(s.deriv(x), df(x), epsilon = 1e-10);
        }
    }

    #[test]
    fn periodic_interpolates_cosine() {
        let n = 64;
        let u: Vec<f64> = (0..=n).map(|i| 2.0 * PI * i as f64 / n as f64).collect();
        let y: Vec<f64> = u.iter().map(|&x| x.cos()).collect();
        let s = CubicSpline::new(&u, &y, SplineEnds::Periodic).unwrap();
        for k in 0..200 {
            let x = 2.0 * PI * k as f64 / 200.0;
            assert_abs_diff_eq!(s.eval(x), x.cos(), epsilon = 1e-5);
            assert_abs_diff_eq!(s.deriv(x), -x.sin(), epsilon = 1e-4);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CubicSpline::new(&[0.0, 1.0], &[1.0, 2.0], SplineEnds::Periodic).is_err());
        assert!(
            CubicSpline::new(&[0.0, 1.0, 0.5], &[1.0, 2.0, 3.0], SplineEnds::Clamped(0.0, 0.0))
                .is_err()
        );
    }
}
