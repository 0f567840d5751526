//! Azimuthal Fourier transforms of boundary fields, truncation selection,
//! and direct factorization of the modal systems.
//!
//! Fields live on the tensor grid (curve node) x (uniform theta grid).
//! Modal coefficients follow the 1/sqrt(2 pi) convention
//! f_n = (1/sqrt(2 pi)) int e^{-i n theta} f dtheta. Only modes n >= 0
//! are stored and solved; negative modes follow from conjugate symmetry
//! of real data together with A_{-n} = A_n.

use crate::assembly::ModalSystem;
use crate::error::{Error, Result};
use crate::fourier::{dft_forward, dft_inverse};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

const SQRT_2PI: f64 = 2.5066282746310002;

/// Real samples f(node, theta_m) on the tensor grid, theta_m = 2 pi m / M.
#[derive(Debug, Clone)]
pub struct BoundaryField {
    n_nodes: usize,
    m_theta: usize,
    /// node-major rows of length m_theta
    values: Vec<f64>,
}

impl BoundaryField {
    pub fn from_fn<F: FnMut(usize, f64) -> f64>(
        n_nodes: usize,
        m_theta: usize,
        mut f: F,
    ) -> Self {
        let mut values = Vec::with_capacity(n_nodes * m_theta);
        for node in 0..n_nodes {
            for m in 0..m_theta {
                values.push(f(node, 2.0 * PI * m as f64 / m_theta as f64));
            }
        }
        BoundaryField {
            n_nodes,
            m_theta,
            values,
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn m_theta(&self) -> usize {
        self.m_theta
    }

    pub fn theta(&self, m: usize) -> f64 {
        2.0 * PI * m as f64 / self.m_theta as f64
    }

    pub fn value(&self, node: usize, m: usize) -> f64 {
        self.values[node * self.m_theta + m]
    }

    pub fn node_row(&self, node: usize) -> &[f64] {
        &self.values[node * self.m_theta..(node + 1) * self.m_theta]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }
}

/// Per-node modal coefficients for n = 0..=n_max.
#[derive(Debug, Clone)]
pub struct ModalField {
    n_nodes: usize,
    /// modes[n][node]
    modes: Vec<Vec<Complex64>>,
}

impl ModalField {
    pub fn zero(n_nodes: usize, n_max: usize) -> Self {
        ModalField {
            n_nodes,
            modes: vec![vec![Complex64::ZERO; n_nodes]; n_max + 1],
        }
    }

    pub fn n_max(&self) -> usize {
        self.modes.len() - 1
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn mode(&self, n: usize) -> &[Complex64] {
        &self.modes[n]
    }

    pub fn mode_mut(&mut self, n: usize) -> &mut [Complex64] {
        &mut self.modes[n]
    }

    pub fn mode_norm(&self, n: usize) -> f64 {
        self.modes[n].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Modal coefficients of the field at every node via one FFT per node.
pub fn fourier_analyze(field: &BoundaryField, n_max: usize) -> Result<ModalField> {
    let m = field.m_theta;
    if m < 2 * n_max + 1 {
        return Err(Error::Config(format!(
            "theta grid with {m} samples cannot resolve {n_max} modes (need >= {})",
            2 * n_max + 1
        )));
    }
    let mut out = ModalField::zero(field.n_nodes, n_max);
    let scale = SQRT_2PI / m as f64;
    let mut buf = vec![Complex64::ZERO; m];
    for node in 0..field.n_nodes {
        for (b, &v) in buf.iter_mut().zip(field.node_row(node)) {
            *b = Complex64::new(v, 0.0);
        }
        dft_forward(&mut buf);
        for n in 0..=n_max {
            out.modes[n][node] = scale * buf[n];
        }
    }
    Ok(out)
}

/// Reconstructs the real grid field from modes n = -n_max..=n_max using
/// conjugate symmetry for the negative half.
pub fn fourier_synthesize(modes: &ModalField, m_theta: usize) -> Result<BoundaryField> {
    let n_max = modes.n_max();
    if m_theta < 2 * n_max + 1 {
        return Err(Error::Config(format!(
            "theta grid with {m_theta} samples cannot carry {n_max} modes"
        )));
    }
    let mut values = Vec::with_capacity(modes.n_nodes * m_theta);
    let mut buf = vec![Complex64::ZERO; m_theta];
    for node in 0..modes.n_nodes {
        buf.fill(Complex64::ZERO);
        buf[0] = modes.modes[0][node] / SQRT_2PI;
        for n in 1..=n_max {
            let c = modes.modes[n][node] / SQRT_2PI;
            buf[n] = c;
            buf[m_theta - n] = c.conj();
        }
        dft_inverse(&mut buf);
        values.extend(buf.iter().map(|c| c.re));
    }
    Ok(BoundaryField {
        n_nodes: modes.n_nodes,
        m_theta,
        values,
    })
}

/// Smallest N such that the discrete spectral tail beyond N carries at
/// most `eps` of the field's L2 norm on the sampling grid. Returns the
/// grid-limit mode count with `warned = true` when even the full grid
/// spectrum does not decay to the target.
pub fn select_truncation(field: &BoundaryField, eps: f64) -> Result<(usize, bool)> {
    if !(eps > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {eps}")));
    }
    let n_grid = (field.m_theta - 1) / 2;
    let modes = fourier_analyze(field, n_grid)?;
    let mut energy = vec![0.0f64; n_grid + 1];
    for (n, e) in energy.iter_mut().enumerate() {
        let sym = if n == 0 { 1.0 } else { 2.0 };
        *e = sym * modes.modes[n].iter().map(|c| c.norm_sqr()).sum::<f64>();
    }
    let total: f64 = energy.iter().sum();
    if total == 0.0 {
        return Ok((0, false));
    }
    let target = eps * eps * total;
    let mut tail = total;
    for (n, e) in energy.iter().enumerate() {
        tail -= e;
        if tail <= target {
            return Ok((n, false));
        }
    }
    Ok((n_grid, true))
}

enum Factor {
    Lu(nalgebra::linalg::LU<f64, nalgebra::Dyn, nalgebra::Dyn>),
    Inverse(DMatrix<f64>),
}

/// Factorization of I + A_n for one mode, reusable across right-hand
/// sides and safe for concurrent solves.
pub struct FactorizedSystem {
    mode: usize,
    dim: usize,
    rcond_proxy: f64,
    factor: Factor,
}

/// Reciprocal-condition proxy below which a system is declared singular;
/// this separates formulation errors from ordinary roundoff.
pub const SINGULAR_RCOND: f64 = 1e-14;

impl FactorizedSystem {
    /// Pivoted LU factorization of I + A_n; `explicit_inverse` stores the
    /// dense inverse instead of the triangular factors.
    pub fn factorize(system: &ModalSystem, explicit_inverse: bool) -> Result<Self> {
        let m = system.identity_plus();
        let dim = system.dim();
        let lu = m.lu();
        let u_diag: Vec<f64> = (0..dim).map(|i| lu.u()[(i, i)].abs()).collect();
        let dmax = u_diag.iter().fold(0.0f64, |a, &v| a.max(v));
        let dmin = u_diag.iter().fold(f64::INFINITY, |a, &v| a.min(v));
        let rcond_proxy = if dmax > 0.0 { dmin / dmax } else { 0.0 };
        if !rcond_proxy.is_finite() || rcond_proxy < SINGULAR_RCOND {
            return Err(Error::SingularMode {
                mode: system.mode(),
                rcond: rcond_proxy,
            });
        }
        let factor = if explicit_inverse {
            let inv = lu.try_inverse().ok_or(Error::SingularMode {
                mode: system.mode(),
                rcond: rcond_proxy,
            })?;
            Factor::Inverse(inv)
        } else {
            Factor::Lu(lu)
        };
        Ok(FactorizedSystem {
            mode: system.mode(),
            dim,
            rcond_proxy,
            factor,
        })
    }

    pub fn mode(&self) -> usize {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rcond_proxy(&self) -> f64 {
        self.rcond_proxy
    }

    pub fn solve_real(&self, rhs: &DVector<f64>) -> Result<DVector<f64>> {
        match &self.factor {
            Factor::Lu(lu) => lu.solve(rhs).ok_or(Error::SingularMode {
                mode: self.mode,
                rcond: self.rcond_proxy,
            }),
            Factor::Inverse(inv) => Ok(inv * rhs),
        }
    }

    /// Complex solve through the real factors, one triangular pass per
    /// real/imaginary component.
    pub fn solve(&self, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
        if rhs.len() != self.dim {
            return Err(Error::Config(format!(
                "rhs length {} does not match system dimension {}",
                rhs.len(),
                self.dim
            )));
        }
        let re = DVector::from_iterator(self.dim, rhs.iter().map(|c| c.re));
        let im = DVector::from_iterator(self.dim, rhs.iter().map(|c| c.im));
        let xr = self.solve_real(&re)?;
        let xi = self.solve_real(&im)?;
        Ok((0..self.dim)
            .map(|k| Complex64::new(xr[k], xi[k]))
            .collect())
    }
}

/// Factorizes every modal system in parallel.
pub fn factorize_all(
    systems: &[ModalSystem],
    explicit_inverse: bool,
) -> Result<Vec<FactorizedSystem>> {
    systems
        .par_iter()
        .map(|s| FactorizedSystem::factorize(s, explicit_inverse))
        .collect()
}

/// Solves (I + A_n) sigma_n = f_n for every stored mode; modes never
/// couple, and negative modes reuse the factors for |n|.
pub fn solve_modes(factors: &[FactorizedSystem], rhs: &ModalField) -> Result<ModalField> {
    if factors.len() != rhs.n_max() + 1 {
        return Err(Error::Config(format!(
            "{} factorizations for {} rhs modes",
            factors.len(),
            rhs.n_max() + 1
        )));
    }
    let modes: Result<Vec<Vec<Complex64>>> = factors
        .par_iter()
        .zip(rhs.modes.par_iter())
        .map(|(f, b)| f.solve(b))
        .collect();
    Ok(ModalField {
        n_nodes: rhs.n_nodes,
        modes: modes?,
    })
}

/// Largest and smallest singular values of I + A_n.
pub fn condition_extremes(system: &ModalSystem) -> (f64, f64) {
    let svd = system.identity_plus().svd(false, false);
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &v| a.max(v));
    let smin = svd
        .singular_values
        .iter()
        .fold(f64::INFINITY, |a, &v| a.min(v));
    (smax, smin)
}

/// Relative residual ||(I + A) x - b|| / ||b|| for one mode.
pub fn mode_residual(system: &ModalSystem, x: &[Complex64], b: &[Complex64]) -> f64 {
    let dim = system.dim();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..dim {
        let mut acc = x[i];
        for (j, &a) in system.row(i).iter().enumerate() {
            acc += a * x[j];
        }
        num += (acc - b[i]).norm_sqr();
        den += b[i].norm_sqr();
    }
    (num / den.max(f64::MIN_POSITIVE)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn field_from(f: impl Fn(usize, f64) -> f64, n_nodes: usize, m: usize) -> BoundaryField {
        BoundaryField::from_fn(n_nodes, m, |node, th| f(node, th))
    }

    #[test]
    fn analyze_constant_field() {
        let f = field_from(|_, _| 1.0, 3, 32);
        let modes = fourier_analyze(&f, 5).unwrap();
        for node in 0..3 {
            assert_abs_diff_eq!(modes.mode(0)[node].re, SQRT_2PI, epsilon = 1e-13);
            assert_abs_diff_eq!(modes.mode(0)[node].im, 0.0, epsilon = 1e-13);
            for n in 1..=5 {
                assert!(modes.mode(n)[node].norm() < 1e-13);
            }
        }
    }

    #[test]
    fn analyze_single_harmonic() {
        let f = field_from(|_, th| th.cos(), 2, 32);
        let modes = fourier_analyze(&f, 4).unwrap();
        let want = (PI / 2.0).sqrt();
        for node in 0..2 {
            assert_abs_diff_eq!(modes.mode(1)[node].re, want, epsilon = 1e-13);
            for n in [0usize, 2, 3, 4] {
                assert!(modes.mode(n)[node].norm() < 1e-13, "mode {n}");
            }
        }
    }

    #[test]
    fn grid_too_coarse_rejected() {
        let f = field_from(|_, _| 1.0, 1, 8);
        assert!(fourier_analyze(&f, 4).is_err());
        let modes = ModalField::zero(1, 4);
        assert!(fourier_synthesize(&modes, 8).is_err());
    }

    #[test]
    fn truncation_selection() {
        let f = field_from(|node, th| (node as f64 + 1.0) * (3.0 * th).cos(), 4, 64);
        assert_eq!(select_truncation(&f, 1e-8).unwrap(), (3, false));
        let c = field_from(|_, _| 2.5, 4, 64);
        assert_eq!(select_truncation(&c, 1e-8).unwrap(), (0, false));
        // white-ish spectrum cannot decay: warn and return the grid limit
        let w = field_from(|_, th| if th < PI { 1.0 } else { -0.7 }, 1, 64);
        let (n, warned) = select_truncation(&w, 1e-12).unwrap();
        assert!(warned);
        assert_eq!(n, 31);
    }

    #[test]
    fn truncation_tracks_bump_width() {
        // a Gaussian bump in theta needs N ~ 1/width: check monotone growth
        let mut last = 0;
        for &w in &[0.8, 0.4, 0.2, 0.1] {
            let f = field_from(
                |_, th| {
                    let d = (th - PI).abs().min(2.0 * PI - (th - PI).abs());
                    (-d * d / (2.0 * w * w)).exp()
                },
                1,
                256,
            );
            let (n, warned) = select_truncation(&f, 1e-10).unwrap();
            assert!(!warned);
            assert!(n > last, "width {w}: N = {n} did not grow past {last}");
            last = n;
        }
    }

    proptest! {
        #[test]
        fn analyze_synthesize_roundtrip(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n_max = rng.random_range(1usize..8);
            let m = 2 * n_max + 1 + rng.random_range(0usize..16);
            // random band-limited real field
            let coef: Vec<(f64, f64, usize)> = (0..=n_max)
                .map(|n| (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0), n))
                .collect();
            let f = BoundaryField::from_fn(3, m, |node, th| {
                coef.iter()
                    .map(|&(a, b, n)| {
                        (node + 1) as f64 * (a * (n as f64 * th).cos() + b * (n as f64 * th).sin())
                    })
                    .sum()
            });
            let modes = fourier_analyze(&f, n_max).unwrap();
            let back = fourier_synthesize(&modes, m).unwrap();
            let scale = f.max_abs().max(1e-9);
            for node in 0..3 {
                for k in 0..m {
                    prop_assert!(
                        (back.value(node, k) - f.value(node, k)).abs() <= 1e-12 * scale,
                        "node {} sample {}", node, k
                    );
                }
            }
        }
    }

    fn zero_system(dim: usize) -> ModalSystem {
        ModalSystem::from_dmatrix(0, &DMatrix::zeros(dim, dim))
    }

    #[test]
    fn identity_system_solve_returns_input() {
        let sys = zero_system(12);
        let f = FactorizedSystem::factorize(&sys, false).unwrap();
        let rhs: Vec<Complex64> = (0..12)
            .map(|k| Complex64::new(k as f64, -(k as f64) * 0.5))
            .collect();
        let x = f.solve(&rhs).unwrap();
        for (a, b) in x.iter().zip(&rhs) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-14);
            assert_abs_diff_eq!(a.im, b.im, epsilon = 1e-14);
        }
        // explicit-inverse route agrees
        let fi = FactorizedSystem::factorize(&sys, true).unwrap();
        let xi = fi.solve(&rhs).unwrap();
        for (a, b) in xi.iter().zip(&rhs) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-14);
        }
    }

    #[test]
    fn singular_system_reported_with_mode() {
        // A = -I makes I + A exactly singular
        let m = DMatrix::from_diagonal_element(6, 6, -1.0);
        let sys = ModalSystem::from_dmatrix(3, &m);
        match FactorizedSystem::factorize(&sys, false) {
            Err(Error::SingularMode { mode, .. }) => assert_eq!(mode, 3),
            Err(e) => panic!("unexpected error {e}"),
            Ok(_) => panic!("expected singular mode error"),
        }
    }

    #[test]
    fn mode_decoupling_is_exact() {
        let systems: Vec<ModalSystem> = (0..4)
            .map(|n| {
                let mut m = DMatrix::zeros(5, 5);
                m[(0, 0)] = 0.1 * n as f64;
                ModalSystem::from_dmatrix(n, &m)
            })
            .collect();
        let factors = factorize_all(&systems, false).unwrap();
        let mut rhs = ModalField::zero(5, 3);
        rhs.mode_mut(2)[1] = Complex64::new(1.0, 0.5);
        let sol = solve_modes(&factors, &rhs).unwrap();
        for n in [0usize, 1, 3] {
            assert!(sol.mode(n).iter().all(|c| *c == Complex64::ZERO));
        }
        assert!(sol.mode(2)[1].norm() > 0.0);
    }

    #[test]
    fn multi_rhs_reuse_is_bit_identical() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let dim = 10;
        let m = DMatrix::from_fn(dim, dim, |_, _| rng.random_range(-0.05..0.05));
        let sys = ModalSystem::from_dmatrix(0, &m);
        let shared = FactorizedSystem::factorize(&sys, false).unwrap();
        for _ in 0..4 {
            let rhs: Vec<Complex64> = (0..dim)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let a = shared.solve(&rhs).unwrap();
            let fresh = FactorizedSystem::factorize(&sys, false).unwrap();
            let b = fresh.solve(&rhs).unwrap();
            assert_eq!(a, b);
        }
    }
}
