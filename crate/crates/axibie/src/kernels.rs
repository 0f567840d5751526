//! Azimuthal Fourier coefficients of rotationally invariant kernels.
//!
//! With the modal convention
//!
//! ```text
//! k_n(r, z, r', z') = (1/sqrt(2 pi)) int_T e^{-i n theta} k(theta, r, z, r', z') d theta,
//! ```
//!
//! the Laplace single and double layer kernels admit closed forms through
//! Legendre functions of the second kind evaluated at
//! chi = (r^2 + r'^2 + (z - z')^2) / (2 r r'). A trapezoidal FFT path
//! covers well-separated pairs of generic kernels, and term-by-term
//! adaptive integration of the defining integral serves as the slow
//! reference path.

use crate::error::{Error, Result};
use crate::fourier::{dft_forward, next_fft_len};
use crate::geometry::CurvePoint;
use crate::quadrature::adaptive_integrate;
use crate::special::legendre::{legendre_q_derivative, legendre_q_into};
use num_complex::Complex64;
use std::f64::consts::PI;

/// sqrt(8 pi^3)
fn sqrt_8pi3() -> f64 {
    (8.0 * PI.powi(3)).sqrt()
}

/// Derived quantities for one target/source pair.
#[derive(Debug, Clone, Copy)]
pub struct KernelPairGeometry {
    pub target_r: f64,
    pub target_z: f64,
    pub source: CurvePoint,
    pub chi: f64,
    pub mu: f64,
    pub dchi_drp: f64,
    pub dchi_dzp: f64,
}

impl KernelPairGeometry {
    pub fn new(target_r: f64, target_z: f64, source: &CurvePoint) -> Result<Self> {
        let (r, z) = (target_r, target_z);
        let (rp, zp) = (source.r, source.z);
        if !(r > 0.0 && rp > 0.0) {
            return Err(Error::Domain(format!(
                "modal kernels need strictly positive radii (r = {r}, r' = {rp})"
            )));
        }
        let dz = z - zp;
        let chi = (r * r + rp * rp + dz * dz) / (2.0 * r * rp);
        if !(chi > 1.0) {
            return Err(Error::CoincidentPoints {
                chi,
                r,
                z,
                rp,
                zp,
            });
        }
        Ok(KernelPairGeometry {
            target_r: r,
            target_z: z,
            source: *source,
            chi,
            mu: (2.0 / (chi + 1.0)).sqrt(),
            dchi_drp: (rp * rp - r * r - dz * dz) / (2.0 * r * rp * rp),
            dchi_dzp: (zp - z) / (r * rp),
        })
    }
}

/// Real modal coefficients for n in [-N, N], stored for n >= 0 with the
/// even symmetry k_{-n} = k_n of the Laplace kernels.
#[derive(Debug, Clone)]
pub struct ModalCoefficients {
    values: Vec<f64>,
}

impl ModalCoefficients {
    pub fn from_values(values: Vec<f64>) -> Self {
        ModalCoefficients { values }
    }

    pub fn max_mode(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: i64) -> f64 {
        self.values[n.unsigned_abs() as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Reusable scratch for closed-form modal evaluations.
#[derive(Default)]
pub struct KernelScratch {
    q: Vec<f64>,
}

impl KernelScratch {
    fn q_buf(&mut self, len: usize) -> &mut [f64] {
        if self.q.len() < len {
            self.q.resize(len, 0.0);
        }
        &mut self.q[..len]
    }
}

/// s_n = Q_{n-1/2}(chi) / sqrt(8 pi^3 r r'): single layer coefficients,
/// written into `out[0..=n_max]`.
pub fn single_layer_modal_into(
    geom: &KernelPairGeometry,
    out: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    let q = scratch.q_buf(out.len().max(2));
    legendre_q_into(geom.chi, q)?;
    let pref = 1.0 / (sqrt_8pi3() * (geom.target_r * geom.source.r).sqrt());
    for (n, o) in out.iter_mut().enumerate() {
        *o = pref * q[n];
    }
    Ok(())
}

/// d_n^(i): interior Dirichlet double layer coefficients via the Legendre
/// closed form, written into `out[0..=n_max]`.
pub fn double_layer_modal_into(
    geom: &KernelPairGeometry,
    out: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    let q = scratch.q_buf((out.len() + 1).max(2));
    legendre_q_into(geom.chi, q)?;
    let chi = geom.chi;
    let rp = geom.source.r;
    let pref = 1.0 / (sqrt_8pi3() * (geom.target_r * rp).sqrt());
    // d_n = a * dQ_n/dchi + b * Q_n
    let a = pref * (geom.source.n_r * geom.dchi_drp + geom.source.n_z * geom.dchi_dzp);
    let b = -pref * geom.source.n_r / (2.0 * rp);
    for (n, o) in out.iter_mut().enumerate() {
        let prev = if n == 0 { q[1] } else { q[n - 1] };
        let dq = legendre_q_derivative(chi, q[n], prev, n);
        *o = a * dq + b * q[n];
    }
    Ok(())
}

/// Single layer modal coefficients s_n for n = 0..=n_max.
pub fn single_layer_modal(geom: &KernelPairGeometry, n_max: usize) -> Result<ModalCoefficients> {
    let mut out = vec![0.0; n_max + 1];
    let mut scratch = KernelScratch::default();
    single_layer_modal_into(geom, &mut out, &mut scratch)?;
    Ok(ModalCoefficients::from_values(out))
}

/// Interior double layer modal coefficients d_n^(i) for n = 0..=n_max.
pub fn double_layer_modal_interior(
    geom: &KernelPairGeometry,
    n_max: usize,
) -> Result<ModalCoefficients> {
    let mut out = vec![0.0; n_max + 1];
    let mut scratch = KernelScratch::default();
    double_layer_modal_into(geom, &mut out, &mut scratch)?;
    Ok(ModalCoefficients::from_values(out))
}

/// Modal coefficients of the monopole completion term
/// 1/(4 pi |x - x0|) with x0 = (r0, 0, z0), added to the exterior kernel.
/// For r0 = 0 the integrand is independent of theta and only n = 0 survives.
pub fn completion_modal_into(
    target_r: f64,
    target_z: f64,
    x0: (f64, f64),
    out: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    let (r0, z0) = x0;
    if r0 < 0.0 {
        return Err(Error::Config(format!("reference point radius must be >= 0, got {r0}")));
    }
    if r0 == 0.0 {
        let dist = target_r.hypot(target_z - z0);
        if dist == 0.0 {
            return Err(Error::Domain("target coincides with reference point".into()));
        }
        out.fill(0.0);
        out[0] = 1.0 / (2.0 * (2.0 * PI).sqrt() * dist);
        return Ok(());
    }
    let anchor = CurvePoint {
        r: r0,
        z: z0,
        n_r: 0.0,
        n_z: 0.0,
        jacobian: 1.0,
    };
    let geom = KernelPairGeometry::new(target_r, target_z, &anchor)?;
    single_layer_modal_into(&geom, out, scratch)
}

/// d_n^(e) = -d_n^(i) + completion coefficients: exterior Dirichlet double
/// layer, with the 1/(4 pi |x - x0|) term anchored at x0 strictly inside
/// the generating curve.
pub fn double_layer_modal_exterior(
    geom: &KernelPairGeometry,
    x0: (f64, f64),
    n_max: usize,
) -> Result<ModalCoefficients> {
    let mut out = vec![0.0; n_max + 1];
    let mut extra = vec![0.0; n_max + 1];
    let mut scratch = KernelScratch::default();
    double_layer_modal_into(geom, &mut out, &mut scratch)?;
    completion_modal_into(geom.target_r, geom.target_z, x0, &mut extra, &mut scratch)?;
    for (o, e) in out.iter_mut().zip(&extra) {
        *o = -*o + *e;
    }
    Ok(ModalCoefficients::from_values(out))
}

/// Trapezoidal-rule Fourier coefficients of a smooth 2 pi periodic kernel
/// slice, scaled to the sqrt(2 pi) modal convention. `oversample` extra
/// sampling guards aliasing for moderately peaked kernels; intended for
/// well-separated pairs only.
pub fn kernel_coeffs_fft<F: Fn(f64) -> f64>(
    kernel: F,
    n_max: usize,
    oversample: usize,
) -> ModalCoefficients {
    let m = next_fft_len((oversample.max(1) * (2 * n_max + 1)).max(8));
    let mut buf: Vec<Complex64> = (0..m)
        .map(|k| Complex64::new(kernel(2.0 * PI * k as f64 / m as f64), 0.0))
        .collect();
    dft_forward(&mut buf);
    let scale = (2.0 * PI).sqrt() / m as f64;
    let values = (0..=n_max).map(|n| scale * buf[n].re).collect();
    ModalCoefficients::from_values(values)
}

/// Reference path: adaptive integration of the defining modal integral
/// for an even kernel, one mode at a time.
pub fn kernel_coeffs_adaptive<F: Fn(f64) -> f64 + Copy>(
    kernel: F,
    n_max: usize,
    tol: f64,
) -> Result<ModalCoefficients> {
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = adaptive_integrate(|t| kernel(t) * (n as f64 * t).cos(), 0.0, PI, tol)?;
        values.push(2.0 * v / (2.0 * PI).sqrt());
    }
    Ok(ModalCoefficients::from_values(values))
}

/// Squared chordal distance between surface points at azimuthal offset t.
fn dist2(t: f64, r: f64, z: f64, rp: f64, zp: f64) -> f64 {
    r * r + rp * rp - 2.0 * r * rp * t.cos() + (z - zp) * (z - zp)
}

/// A rotationally invariant kernel on the surface of revolution, with an
/// optional closed form for its modal coefficients.
pub trait AxisymKernel: Sync {
    /// Physical kernel at azimuthal offset theta (must be even in theta).
    fn physical(&self, theta: f64, target: &CurvePoint, source: &CurvePoint) -> f64;

    /// Closed-form modal coefficients, if this kernel has them.
    fn modal_closed(
        &self,
        _target: &CurvePoint,
        _source: &CurvePoint,
        _out: &mut [f64],
        _scratch: &mut KernelScratch,
    ) -> Option<Result<()>> {
        None
    }
}

/// Double layer kernel of the interior Dirichlet problem.
pub struct LaplaceInteriorKernel;

impl AxisymKernel for LaplaceInteriorKernel {
    fn physical(&self, theta: f64, target: &CurvePoint, source: &CurvePoint) -> f64 {
        let num = source.n_r * (target.r * theta.cos() - source.r)
            + source.n_z * (target.z - source.z);
        num / (4.0 * PI * dist2(theta, target.r, target.z, source.r, source.z).powf(1.5))
    }

    fn modal_closed(
        &self,
        target: &CurvePoint,
        source: &CurvePoint,
        out: &mut [f64],
        scratch: &mut KernelScratch,
    ) -> Option<Result<()>> {
        Some(
            KernelPairGeometry::new(target.r, target.z, source)
                .and_then(|g| double_layer_modal_into(&g, out, scratch)),
        )
    }
}

/// Exterior Dirichlet kernel: negated double layer plus, when `completed`,
/// the monopole term anchored at an interior reference point.
pub struct LaplaceExteriorKernel {
    pub x0: (f64, f64),
    pub completed: bool,
}

impl AxisymKernel for LaplaceExteriorKernel {
    fn physical(&self, theta: f64, target: &CurvePoint, source: &CurvePoint) -> f64 {
        let dl = LaplaceInteriorKernel.physical(theta, target, source);
        if !self.completed {
            return -dl;
        }
        let (r0, z0) = self.x0;
        -dl + 1.0 / (4.0 * PI * dist2(theta, target.r, target.z, r0, z0).sqrt())
    }

    fn modal_closed(
        &self,
        target: &CurvePoint,
        source: &CurvePoint,
        out: &mut [f64],
        scratch: &mut KernelScratch,
    ) -> Option<Result<()>> {
        let mut run = || -> Result<()> {
            let geom = KernelPairGeometry::new(target.r, target.z, source)?;
            double_layer_modal_into(&geom, out, scratch)?;
            for o in out.iter_mut() {
                *o = -*o;
            }
            if self.completed {
                let mut extra = vec![0.0; out.len()];
                completion_modal_into(target.r, target.z, self.x0, &mut extra, scratch)?;
                for (o, e) in out.iter_mut().zip(&extra) {
                    *o += *e;
                }
            }
            Ok(())
        };
        Some(run())
    }
}

/// Single layer kernel 1/(4 pi |x - x'|).
pub struct LaplaceSingleKernel;

impl AxisymKernel for LaplaceSingleKernel {
    fn physical(&self, theta: f64, target: &CurvePoint, source: &CurvePoint) -> f64 {
        1.0 / (4.0 * PI * dist2(theta, target.r, target.z, source.r, source.z).sqrt())
    }

    fn modal_closed(
        &self,
        target: &CurvePoint,
        source: &CurvePoint,
        out: &mut [f64],
        scratch: &mut KernelScratch,
    ) -> Option<Result<()>> {
        Some(
            KernelPairGeometry::new(target.r, target.z, source)
                .and_then(|g| single_layer_modal_into(&g, out, scratch)),
        )
    }
}
