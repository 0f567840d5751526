//! Exactness residuals of the embedded rules against the adaptive
//! reference integrator, shared by the `quad-check` command and the
//! acceptance suite.

use crate::error::Result;
use crate::quadrature::{adaptive_integrate, gauss_rule, nearby_rule, singular_rule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Residual record for one rule configuration.
#[derive(Debug, Clone)]
pub struct RuleResidual {
    pub rule: &'static str,
    pub param: String,
    pub residual: f64,
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Vec<f64> {
    (0..=degree).map(|_| rng.random_range(-1.0..1.0)).collect()
}

/// Max Gauss-rule error over monomials of degree <= 19 (absolute; the
/// exact values are 0 or 2/(k+1)).
pub fn gauss_monomial_residual() -> f64 {
    let rule = gauss_rule();
    (0..=19)
        .map(|k| {
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            (rule.integrate(|x| x.powi(k as i32)) - exact).abs()
        })
        .fold(0.0, f64::max)
}

/// Relative error of the 20-point log-singular rule for node `i` on
/// seeded random integrands p(x) + q(x) log|x_i - x| of degree <= 19.
pub fn singular_rule_residual(i: usize, seed: u64, trials: usize) -> Result<f64> {
    let rule = singular_rule(i)?;
    let xi = gauss_rule().nodes[i - 1];
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < trials {
        let p = random_poly(&mut rng, 19);
        let q = random_poly(&mut rng, 19);
        let f = |x: f64| horner(&p, x) + horner(&q, x) * (xi - x).abs().ln();
        let oracle = adaptive_integrate(f, -1.0, xi, 1e-13)?
            + adaptive_integrate(f, xi, 1.0, 1e-13)?;
        if oracle.abs() < 0.1 {
            // redraw when the integral nearly cancels; exactness is
            // scale-invariant over the class so this loses nothing
            continue;
        }
        let got = rule.integrate(f);
        worst = worst.max((got - oracle).abs() / oracle.abs());
        done += 1;
    }
    Ok(worst)
}

/// In-bracket separations used to exercise one decade of the 24-point
/// log-nearby rules, including the bracket edges.
pub fn decade_separations(decade: usize) -> Vec<f64> {
    if decade == 0 {
        vec![1e-1, 0.5, 1.0]
    } else {
        let lo = 10f64.powi(-(decade as i32 + 1));
        vec![lo, 3.16 * lo, 9.9 * lo]
    }
}

/// Relative error of the 24-point log-nearby rule for one decade on
/// seeded random integrands f(x) + g(x) log(x + xbar), xbar in bracket.
pub fn nearby_rule_residual(decade: usize, seed: u64, trials: usize) -> Result<f64> {
    let (nodes, weights) = &crate::quadrature::tables::NEARBY24[decade];
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(100 + decade as u64));
    let mut worst = 0.0f64;
    for xbar in decade_separations(decade) {
        let mut done = 0;
        while done < trials {
            let p = random_poly(&mut rng, 19);
            let q = random_poly(&mut rng, 19);
            let f = |x: f64| horner(&p, x) + horner(&q, x) * (x + xbar).ln();
            let oracle = adaptive_integrate(f, 0.0, 1.0, 1e-13)?;
            if oracle.abs() < 0.1 {
                continue;
            }
            let got: f64 = nodes.iter().zip(weights).map(|(&x, &w)| w * f(x)).sum();
            worst = worst.max((got - oracle).abs() / oracle.abs());
            done += 1;
        }
    }
    Ok(worst)
}

/// Residuals for every embedded rule.
pub fn all_rule_residuals(seed: u64, trials: usize) -> Result<Vec<RuleResidual>> {
    let mut out = vec![RuleResidual {
        rule: "gauss10",
        param: "-".into(),
        residual: gauss_monomial_residual(),
    }];
    for i in 1..=10 {
        out.push(RuleResidual {
            rule: "singular20",
            param: format!("node_{i}"),
            residual: singular_rule_residual(i, seed, trials)?,
        });
    }
    for d in 0..14 {
        out.push(RuleResidual {
            rule: "nearby24",
            param: format!("decade_{d}"),
            residual: nearby_rule_residual(d, seed, trials)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearby_rule_integrates_shifted_log_example() {
        // table for the [1e-5, 1e-4] bracket applied to 1 + log(x + 1e-5)
        let xbar = 1e-5;
        let rule = nearby_rule(xbar);
        let got = rule.integrate(|x| 1.0 + (x + xbar).ln());
        let want = adaptive_integrate(|x| 1.0 + (x + xbar).ln(), 0.0, 1.0, 1e-13).unwrap();
        assert!(
            (got - want).abs() <= 1e-11 * want.abs(),
            "{got} vs {want}"
        );
    }

    #[test]
    fn singular_rule_polynomial_class() {
        for i in [1usize, 4, 6, 10] {
            let r = singular_rule_residual(i, 42, 3).unwrap();
            assert!(r <= 1e-12, "rule {i}: residual {r}");
        }
    }
}
