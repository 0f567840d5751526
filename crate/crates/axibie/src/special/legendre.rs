//! Legendre functions of the second kind of half-integer degree,
//! Q_{n-1/2}(chi) for chi > 1.
//!
//! These generate the azimuthal Fourier coefficients of the Laplace layer
//! kernels. Seeds come from complete elliptic integrals with modulus
//! mu = sqrt(2/(chi+1)); higher degrees follow the three-term recurrence
//!
//! ```text
//! Q_{n-1/2} = 4 (n-1)/(2n-1) chi Q_{n-3/2} - (2n-3)/(2n-1) Q_{n-5/2}.
//! ```
//!
//! The forward direction amplifies contamination by the growing companion
//! solution at a rate exp(2 n arccosh(chi)); when that predicted growth is
//! significant the production entry point switches to Miller's backward
//! recursion, which is stable for chi > 1.

use crate::error::{Error, Result};
use crate::special::elliptic::elliptic_ke;

/// Values Q_{n-1/2}(chi) for n = 0..=n_max at a fixed argument chi > 1.
#[derive(Debug, Clone)]
pub struct LegendreQSequence {
    chi: f64,
    values: Vec<f64>,
}

impl LegendreQSequence {
    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Q_{n-1/2}(chi); negative indices mirror (Q_{-n-1/2} = Q_{n-1/2}).
    pub fn q(&self, n: i64) -> f64 {
        self.values[n.unsigned_abs() as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// dQ_{n-1/2}/dchi for n = 0..=n_max; requires n_max >= 1 since the
    /// n = 0 case uses Q_{1/2} through the negative-index symmetry.
    pub fn derivatives(&self) -> Vec<f64> {
        assert!(self.values.len() >= 2, "need at least Q_{{-1/2}}, Q_{{1/2}}");
        (0..self.values.len())
            .map(|n| {
                let prev = if n == 0 { self.values[1] } else { self.values[n - 1] };
                legendre_q_derivative(self.chi, self.values[n], prev, n)
            })
            .collect()
    }
}

fn check_chi(chi: f64) -> Result<()> {
    if !(chi > 1.0) {
        return Err(Error::Domain(format!(
            "Legendre Q_{{n-1/2}} requires chi > 1, got {chi} (kernel singularity)"
        )));
    }
    Ok(())
}

/// Seeds Q_{-1/2} = mu K(mu) and Q_{1/2} = chi mu K(mu) - sqrt(2(chi+1)) E(mu).
fn seeds(chi: f64) -> Result<(f64, f64)> {
    let mu = (2.0 / (chi + 1.0)).sqrt();
    let (k, e) = elliptic_ke(mu)?;
    let q0 = mu * k;
    let q1 = chi * mu * k - (2.0 * (chi + 1.0)).sqrt() * e;
    Ok((q0, q1))
}

/// Fills `buf[n] = Q_{n-1/2}(chi)` by seeds plus forward recursion.
pub fn legendre_q_forward_into(chi: f64, buf: &mut [f64]) -> Result<()> {
    check_chi(chi)?;
    if buf.is_empty() {
        return Ok(());
    }
    let (q0, q1) = seeds(chi)?;
    buf[0] = q0;
    if buf.len() > 1 {
        buf[1] = q1;
    }
    for n in 2..buf.len() {
        let nf = n as f64;
        buf[n] = (4.0 * (nf - 1.0) * chi * buf[n - 1] - (2.0 * nf - 3.0) * buf[n - 2])
            / (2.0 * nf - 1.0);
    }
    Ok(())
}

/// Q_{n-1/2}(chi) for n = 0..=n_max via forward recursion.
pub fn legendre_q_forward(chi: f64, n_max: usize) -> Result<LegendreQSequence> {
    let mut values = vec![0.0; n_max + 1];
    legendre_q_forward_into(chi, &mut values)?;
    Ok(LegendreQSequence { chi, values })
}

/// Q_{n-1/2}(chi) for n = 0..=n_max via Miller's backward recursion,
/// normalized against the exactly known Q_{-1/2}(chi) = mu K(mu).
pub fn legendre_q_backward(chi: f64, n_max: usize) -> Result<LegendreQSequence> {
    check_chi(chi)?;
    // start far enough above n_max that the arbitrary tail has decayed
    let start = n_max + (40.0 + 10.0 * ((n_max + 1) as f64).log10()).ceil() as usize;
    let mut y = vec![0.0f64; start + 2];
    y[start + 1] = 0.0;
    y[start] = 1.0;
    for m in (0..start).rev() {
        let mf = m as f64;
        // downward form of the recurrence, solved for Q_{m-1/2}
        y[m] = (4.0 * (mf + 1.0) * chi * y[m + 1] - (2.0 * mf + 3.0) * y[m + 2])
            / (2.0 * mf + 1.0);
        if y[m].abs() > 1e250 {
            for v in y[m..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    let (q0, _) = seeds(chi)?;
    let ratio = q0 / y[0];
    let values = y[..=n_max].iter().map(|v| v * ratio).collect();
    Ok(LegendreQSequence { chi, values })
}

/// Forward error growth exponent 2 n arccosh(chi); used to pick the
/// recursion direction.
fn forward_growth(chi: f64, n_max: usize) -> f64 {
    2.0 * n_max as f64 * (chi + (chi * chi - 1.0).sqrt()).ln()
}

fn use_backward(chi: f64, n_max: usize) -> bool {
    forward_growth(chi, n_max) > 18.0 || (chi < 1.0001 && n_max > 100)
}

/// Production entry point: forward recursion while its predicted error
/// stays below ~1e-8, Miller's backward recursion otherwise.
pub fn legendre_q(chi: f64, n_max: usize) -> Result<LegendreQSequence> {
    if use_backward(chi, n_max) {
        legendre_q_backward(chi, n_max)
    } else {
        legendre_q_forward(chi, n_max)
    }
}

/// Buffer-filling variant of [`legendre_q`] for allocation-free callers.
pub fn legendre_q_into(chi: f64, buf: &mut [f64]) -> Result<()> {
    if buf.is_empty() {
        return Ok(());
    }
    let n_max = buf.len() - 1;
    if use_backward(chi, n_max) {
        let seq = legendre_q_backward(chi, n_max)?;
        buf.copy_from_slice(&seq.values);
        Ok(())
    } else {
        legendre_q_forward_into(chi, buf)
    }
}

/// dQ_{n-1/2}/dchi = (2n-1)/(2(chi^2-1)) (chi Q_{n-1/2} - Q_{n-3/2}).
///
/// `q_n` is Q_{n-1/2}, `q_prev` is Q_{n-3/2}; for n = 0 the caller passes
/// Q_{1/2} as `q_prev` (negative-index symmetry Q_{-3/2} = Q_{1/2}).
pub fn legendre_q_derivative(chi: f64, q_n: f64, q_prev: f64, n: usize) -> f64 {
    (2.0 * n as f64 - 1.0) / (2.0 * (chi * chi - 1.0)) * (chi * q_n - q_prev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::adaptive_integrate;
    use crate::special::elliptic::elliptic_k;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    /// Independent integral form: Q_{n-1/2}(chi) = int_0^pi cos(nt) / sqrt(2(chi - cos t)) dt.
    fn q_oracle(chi: f64, n: usize) -> f64 {
        adaptive_integrate(
            |t| (n as f64 * t).cos() / (2.0 * (chi - t.cos())).sqrt(),
            0.0,
            PI,
            1e-13,
        )
        .unwrap()
    }

    #[test]
    fn rejects_chi_at_or_below_one() {
        assert!(legendre_q_forward(1.0, 5).is_err());
        assert!(legendre_q_forward(0.5, 5).is_err());
        assert!(legendre_q_backward(1.0, 5).is_err());
    }

    #[test]
    fn seed_matches_definition_at_chi_three() {
        let seq = legendre_q_forward(3.0, 1).unwrap();
        let mu = (0.5f64).sqrt();
        assert_eq!(seq.q(0), mu * elliptic_k(mu).unwrap());
    }

    #[test]
    fn negative_index_symmetry_is_bit_exact() {
        let seq = legendre_q_forward(2.0, 10).unwrap();
        for n in 0..=10i64 {
            assert_eq!(seq.q(-n), seq.q(n));
        }
    }

    #[test]
    fn large_chi_asymptotic() {
        // Q_{-1/2}(chi) ~ pi / sqrt(2 chi)
        let chi = 1e6;
        let seq = legendre_q_forward(chi, 1).unwrap();
        let asym = PI / (2.0 * chi).sqrt();
        assert_abs_diff_eq!(seq.q(0), asym, epsilon = 1e-5 * asym);
    }

    #[test]
    fn forward_matches_integral_oracle() {
        for &chi in &[1.0 + 1e-4, 1.01, 1.5, 3.0, 10.0] {
            let seq = legendre_q_forward(chi, 50).unwrap();
            let scale = seq.q(0);
            for &n in &[0usize, 1, 2, 5, 13, 27, 50] {
                let reference = q_oracle(chi, n);
                let err = (seq.q(n as i64) - reference).abs();
                assert!(
                    err <= 1e-10 * seq.q(n as i64).abs().max(reference.abs()) + 1e-14 * scale,
                    "chi={chi} n={n}: {} vs oracle {reference}",
                    seq.q(n as i64)
                );
            }
        }
    }

    #[test]
    fn backward_agrees_with_forward_in_stable_regime() {
        let f = legendre_q_forward(2.0, 100).unwrap();
        let b = legendre_q_backward(2.0, 100).unwrap();
        for n in 0..=100 {
            let (x, y) = (f.values()[n], b.values()[n]);
            assert!(
                (x - y).abs() <= 1e-12 * x.abs().max(y.abs()) + 1e-290,
                "n={n}: forward {x} vs backward {y}"
            );
        }
    }

    #[test]
    fn backward_matches_oracle_near_singular_argument() {
        let chi = 1.0 + 1e-6;
        let seq = legendre_q_backward(chi, 200).unwrap();
        for &n in &[0usize, 1, 10, 60, 140, 200] {
            let reference = q_oracle(chi, n);
            assert_abs_diff_eq!(seq.q(n as i64), reference, epsilon = 1e-9 * reference.abs());
        }
    }

    #[test]
    fn backward_reproduces_normalization_anchor() {
        let chi = 1.37;
        let seq = legendre_q_backward(chi, 30).unwrap();
        let mu = (2.0 / (chi + 1.0)).sqrt();
        let q0 = mu * elliptic_k(mu).unwrap();
        assert_eq!(seq.q(0), q0);
    }

    #[test]
    fn auto_policy_switches_in_unstable_regime() {
        // chi = 1.001, n = 400 would lose most digits going forward
        let auto = legendre_q(1.001, 400).unwrap();
        let b = legendre_q_backward(1.001, 400).unwrap();
        for n in (0..=400).step_by(25) {
            assert_eq!(auto.values()[n], b.values()[n]);
        }
        // stable regime stays on the forward path
        let auto = legendre_q(1.0 + 1e-6, 400).unwrap();
        let f = legendre_q_forward(1.0 + 1e-6, 400).unwrap();
        assert_eq!(auto.values()[400], f.values()[400]);
    }

    #[test]
    fn values_positive_and_decreasing_in_degree() {
        for &chi in &[1.0 + 1e-5, 1.1, 4.0] {
            let seq = legendre_q(chi, 120).unwrap();
            for n in 1..=120 {
                assert!(seq.values()[n] > 0.0);
                assert!(seq.values()[n] < seq.values()[n - 1], "chi={chi} n={n}");
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let chi = 2.0;
        let h = 1e-6;
        let seq = legendre_q_forward(chi, 6).unwrap();
        let up = legendre_q_forward(chi + h, 6).unwrap();
        let dn = legendre_q_forward(chi - h, 6).unwrap();
        let derivs = seq.derivatives();
        for n in 0..=6usize {
            let fd = (up.values()[n] - dn.values()[n]) / (2.0 * h);
            assert_abs_diff_eq!(derivs[n], fd, epsilon = 1e-7 * fd.abs());
        }
    }

    #[test]
    fn derivative_negative_for_all_degrees() {
        for &chi in &[1.0 + 1e-4, 1.5, 8.0] {
            let seq = legendre_q(chi, 60).unwrap();
            for (n, d) in seq.derivatives().iter().enumerate() {
                assert!(*d < 0.0, "chi={chi} n={n}: derivative {d} not negative");
            }
        }
    }

    #[test]
    fn derivative_at_zero_uses_symmetry() {
        let chi = 1.8;
        let seq = legendre_q_forward(chi, 1).unwrap();
        let d0 = seq.derivatives()[0];
        let explicit = legendre_q_derivative(chi, seq.q(0), seq.q(1), 0);
        assert_eq!(d0, explicit);
    }
}
