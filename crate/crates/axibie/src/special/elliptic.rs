use crate::error::{Error, Result};
use std::f64::consts::FRAC_PI_2;

const MAX_ITER: usize = 40;

/// Complete elliptic integrals K(mu) and E(mu) of the first and second
/// kinds, with `mu` the *modulus* k (not the parameter m = k^2):
///
/// ```text
/// K(mu) = int_0^{pi/2} (1 - mu^2 sin^2 t)^{-1/2} dt
/// E(mu) = int_0^{pi/2} (1 - mu^2 sin^2 t)^{ 1/2} dt
/// ```
///
/// Computed by the arithmetic-geometric mean iteration; relative error
/// is at machine level away from mu = 1.
pub fn elliptic_ke(mu: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&mu) {
        return Err(Error::Domain(format!(
            "elliptic modulus must lie in [0, 1) for K, got {mu}"
        )));
    }
    let mut a = 1.0f64;
    let mut b = (1.0 - mu * mu).sqrt();
    let mut c = mu;
    let mut csum = 0.5 * c * c; // sum of 2^(n-1) c_n^2
    let mut pow2 = 0.5;
    for _ in 0..MAX_ITER {
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        pow2 *= 2.0;
        csum += pow2 * c * c;
    }
    let k = FRAC_PI_2 / a;
    let e = k * (1.0 - csum);
    Ok((k, e))
}

/// K(mu) alone; domain [0, 1).
pub fn elliptic_k(mu: f64) -> Result<f64> {
    elliptic_ke(mu).map(|(k, _)| k)
}

/// E(mu) alone; domain [0, 1] (E(1) = 1 exactly).
pub fn elliptic_e(mu: f64) -> Result<f64> {
    if mu == 1.0 {
        return Ok(1.0);
    }
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::Domain(format!(
            "elliptic modulus must lie in [0, 1], got {mu}"
        )));
    }
    elliptic_ke(mu).map(|(_, e)| e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::adaptive_integrate;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};

    #[test]
    fn zero_modulus_gives_quarter_period() {
        let (k, e) = elliptic_ke(0.0).unwrap();
        assert_abs_diff_eq!(k, FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(e, FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn unit_modulus() {
        assert_eq!(elliptic_e(1.0).unwrap(), 1.0);
        assert!(elliptic_ke(1.0).is_err());
        assert!(elliptic_ke(-0.1).is_err());
    }

    #[test]
    fn matches_defining_integrals() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..8 {
            let mu: f64 = rng.random_range(0.01..0.99);
            let (k, e) = elliptic_ke(mu).unwrap();
            let k_ref = adaptive_integrate(
                |t| 1.0 / (1.0 - (mu * t.sin()).powi(2)).sqrt(),
                0.0,
                FRAC_PI_2,
                1e-13,
            )
            .unwrap();
            let e_ref = adaptive_integrate(
                |t| (1.0 - (mu * t.sin()).powi(2)).sqrt(),
                0.0,
                FRAC_PI_2,
                1e-13,
            )
            .unwrap();
            assert_abs_diff_eq!(k, k_ref, epsilon = 1e-12 * k_ref);
            assert_abs_diff_eq!(e, e_ref, epsilon = 1e-12 * e_ref);
        }
    }

    #[test]
    fn near_unit_modulus_converges() {
        // modulus within 1e-15 of 1 still converges (log blowup in K)
        let (k, e) = elliptic_ke(1.0 - 1e-15).unwrap();
        assert!(k.is_finite() && k > 18.0);
        assert!((e - 1.0).abs() < 1e-13);
    }
}
