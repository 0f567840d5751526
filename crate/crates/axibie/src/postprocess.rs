//! Manufactured solutions from point charges, off-surface evaluation of
//! the computed layer potential, and error metrics.

use crate::error::{Error, Result};
use crate::geometry::{surface_point, Discretization, GeneratingCurve};
use crate::solver::BoundaryField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Which side of the surface the charges live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeSide {
    /// Outside the surface: the manufactured field is harmonic inside
    /// (interior Dirichlet data).
    ExteriorOfSurface,
    /// Inside the surface: harmonic outside (exterior Dirichlet data).
    InteriorOfSurface,
}

#[derive(Debug, Clone, Copy)]
pub struct Charge {
    pub position: [f64; 3],
    pub strength: f64,
}

#[derive(Debug, Clone)]
pub struct ChargeSet {
    pub charges: Vec<Charge>,
    pub side: ChargeSide,
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
}

/// Potential of the charge set: sum of q_k / (4 pi |x - y_k|).
pub fn point_charge_potential(charges: &ChargeSet, x: [f64; 3]) -> Result<f64> {
    let mut u = 0.0;
    for c in &charges.charges {
        let d = dist(x, c.position);
        if d == 0.0 {
            return Err(Error::Domain(format!(
                "evaluation point coincides with charge at {:?}",
                c.position
            )));
        }
        u += c.strength / (4.0 * PI * d);
    }
    Ok(u)
}

/// Boundary data for the manufactured problem: charge potential sampled
/// on the surface tensor grid.
pub fn boundary_data(
    disc: &Discretization,
    charges: &ChargeSet,
    m_theta: usize,
) -> Result<BoundaryField> {
    let nodes = disc.nodes();
    let mut err = None;
    let field = BoundaryField::from_fn(nodes.len(), m_theta, |node, theta| {
        let p = nodes[node].point;
        match point_charge_potential(charges, surface_point(p.r, p.z, theta)) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                f64::NAN
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(field),
    }
}

/// How the computed density is turned into an off-surface potential.
#[derive(Debug, Clone, Copy)]
pub enum PotentialKind {
    /// u(x) = int_Gamma n' . (x - x') / (4 pi |x - x'|^3) sigma dA.
    DoubleLayer,
    /// Exterior representation: negated double layer plus the monopole
    /// completion 1/(4 pi |x - x0|) with x0 = (r0, 0, z0).
    ExteriorCompleted { x0: (f64, f64) },
}

/// Evaluates the layer potential at an off-surface point by the tensor
/// rule: panel Gauss nodes in arclength times the uniform trapezoid in
/// theta. Compensated summation keeps the rounding floor well below the
/// quadrature error.
pub fn eval_double_layer_potential(
    disc: &Discretization,
    sigma: &BoundaryField,
    kind: PotentialKind,
    x: [f64; 3],
) -> f64 {
    let m_theta = sigma.m_theta();
    let dtheta = 2.0 * PI / m_theta as f64;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut add = |v: f64| {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (node_idx, node) in disc.nodes().iter().enumerate() {
        let p = node.point;
        let w = node.weight * p.jacobian * p.r * dtheta;
        for m in 0..m_theta {
            let theta = sigma.theta(m);
            let (st, ct) = theta.sin_cos();
            let xp = [p.r * ct, p.r * st, p.z];
            let np = [p.n_r * ct, p.n_r * st, p.n_z];
            let d = [x[0] - xp[0], x[1] - xp[1], x[2] - xp[2]];
            let r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
            let dl = (np[0] * d[0] + np[1] * d[1] + np[2] * d[2]) / (4.0 * PI * r2 * r2.sqrt());
            let kernel = match kind {
                PotentialKind::DoubleLayer => dl,
                PotentialKind::ExteriorCompleted { x0 } => {
                    let x0p = [x0.0, 0.0, x0.1];
                    -dl + 1.0 / (4.0 * PI * dist(x, x0p))
                }
            };
            add(w * kernel * sigma.value(node_idx, m));
        }
    }
    sum
}

/// Distance from x to the surface, measured in the meridian plane; valid
/// because the surface is a body of revolution.
pub fn surface_clearance(disc: &Discretization, x: [f64; 3]) -> f64 {
    let rho = x[0].hypot(x[1]);
    disc.meridian_clearance(rho, x[2])
}

/// Relative l-infinity error ||u_num - u_exact||_inf / ||u_exact||_inf.
pub fn relative_linf_error(u_num: &[f64], u_exact: &[f64]) -> Result<f64> {
    if u_num.len() != u_exact.len() {
        return Err(Error::Config(format!(
            "value lists differ in length: {} vs {}",
            u_num.len(),
            u_exact.len()
        )));
    }
    let denom = u_exact.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if denom == 0.0 {
        return Err(Error::Domain("exact values have zero sup norm".into()));
    }
    let num = u_num
        .iter()
        .zip(u_exact)
        .fold(0.0f64, |a, (x, y)| a.max((x - y).abs()));
    Ok(num / denom)
}

/// Random point charges for a manufactured solution: outside the surface
/// (at twice the bounding radius) for interior problems, inside the
/// meridian region (safe disk around its centroid) for exterior problems.
/// Deterministic for a fixed seed.
pub fn manufactured_charges(
    curve: &GeneratingCurve,
    interior_problem: bool,
    count: usize,
    seed: u64,
) -> ChargeSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut charges = Vec::with_capacity(count);
    if interior_problem {
        let radius = 2.0 * curve.bounding_radius();
        for _ in 0..count {
            let dir = random_direction(&mut rng);
            charges.push(Charge {
                position: [radius * dir[0], radius * dir[1], radius * dir[2]],
                strength: 0.5 + rng.random_range(0.0..1.0),
            });
        }
        ChargeSet {
            charges,
            side: ChargeSide::ExteriorOfSurface,
        }
    } else {
        for (r, z, theta, strength) in interior_meridian_samples(curve, count, &mut rng) {
            charges.push(Charge {
                position: surface_point(r, z, theta),
                strength,
            });
        }
        ChargeSet {
            charges,
            side: ChargeSide::InteriorOfSurface,
        }
    }
}

/// Off-surface evaluation targets: inside the meridian safe disk for
/// interior problems, on a sphere of twice the bounding radius for
/// exterior problems.
pub fn evaluation_targets(
    curve: &GeneratingCurve,
    interior_problem: bool,
    count: usize,
    seed: u64,
) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if interior_problem {
        interior_meridian_samples(curve, count, &mut rng)
            .into_iter()
            .map(|(r, z, theta, _)| surface_point(r, z, theta))
            .collect()
    } else {
        let radius = 2.0 * curve.bounding_radius();
        (0..count)
            .map(|_| {
                let d = random_direction(&mut rng);
                [radius * d[0], radius * d[1], radius * d[2]]
            })
            .collect()
    }
}

/// A reference point strictly inside the meridian region, used to anchor
/// the exterior completion term: the region centroid.
pub fn interior_reference_point(curve: &GeneratingCurve) -> (f64, f64) {
    let (r, z) = curve.meridian_centroid();
    debug_assert!(curve.meridian_contains(r, z));
    (r.max(0.0), z)
}

fn random_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let n2: f64 = v.iter().map(|x| x * x).sum();
        if n2 > 1e-4 && n2 <= 1.0 {
            let n = n2.sqrt();
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

/// Points strictly inside the solid of revolution with positive clearance:
/// sampled from the disk around the meridian centroid whose radius is half
/// the centroid's distance to the surface, then rotated by a random theta.
fn interior_meridian_samples(
    curve: &GeneratingCurve,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(f64, f64, f64, f64)> {
    let (cr, cz) = curve.meridian_centroid();
    let clearance = curve.meridian_clearance(cr, cz);
    let safe = 0.5 * clearance.min(cr.max(1e-6) * 2.0);
    (0..count)
        .map(|_| {
            let rho = safe * rng.random_range(0.0..1.0f64).sqrt();
            let ang = rng.random_range(0.0..2.0 * PI);
            let r = (cr + rho * ang.cos()).max(1e-9);
            let z = cz + rho * ang.sin();
            let theta = rng.random_range(0.0..2.0 * PI);
            (r, z, theta, 0.5 + rng.random_range(0.0..1.0))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GeneratingCurve;
    use approx::assert_abs_diff_eq;

    fn unit_charge_at(p: [f64; 3]) -> ChargeSet {
        ChargeSet {
            charges: vec![Charge {
                position: p,
                strength: 1.0,
            }],
            side: ChargeSide::ExteriorOfSurface,
        }
    }

    #[test]
    fn single_charge_at_unit_distance() {
        let c = unit_charge_at([0.0, 0.0, 1.0]);
        let u = point_charge_potential(&c, [0.0, 0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(u, 1.0 / (4.0 * PI), epsilon = 1e-15);
        assert!(point_charge_potential(&c, [0.0, 0.0, 1.0]).is_err());
    }

    #[test]
    fn opposite_charges_cancel_at_midpoint() {
        let c = ChargeSet {
            charges: vec![
                Charge {
                    position: [1.0, 0.0, 0.0],
                    strength: 1.0,
                },
                Charge {
                    position: [-1.0, 0.0, 0.0],
                    strength: -1.0,
                },
            ],
            side: ChargeSide::ExteriorOfSurface,
        };
        assert_abs_diff_eq!(
            point_charge_potential(&c, [0.0, 0.3, -0.2]).unwrap(),
            0.0,
            epsilon = 1e-16
        );
    }

    #[test]
    fn charge_potential_is_discretely_harmonic() {
        let c = ChargeSet {
            charges: vec![
                Charge {
                    position: [2.0, 0.5, 1.0],
                    strength: 0.7,
                },
                Charge {
                    position: [-1.5, 1.0, -2.0],
                    strength: -1.1,
                },
            ],
            side: ChargeSide::ExteriorOfSurface,
        };
        let x = [0.1, -0.2, 0.3];
        let h = 1e-3;
        let u = |p: [f64; 3]| point_charge_potential(&c, p).unwrap();
        let mut lap = -6.0 * u(x);
        for axis in 0..3 {
            for s in [-1.0, 1.0] {
                let mut p = x;
                p[axis] += s * h;
                lap += u(p);
            }
        }
        lap /= h * h;
        assert!(lap.abs() < 1e-6 * u(x).abs() / (h * h) * 1e-3, "laplacian {lap}");
        assert!(lap.abs() < 1e-4);
    }

    #[test]
    fn gauss_identity_for_constant_density() {
        let disc =
            Discretization::build(GeneratingCurve::sphere(1.0).unwrap(), 8, 10).unwrap();
        let sigma = BoundaryField::from_fn(disc.node_count(), 64, |_, _| 1.0);
        let inside = eval_double_layer_potential(
            &disc,
            &sigma,
            PotentialKind::DoubleLayer,
            [0.2, 0.1, -0.15],
        );
        assert_abs_diff_eq!(inside, -1.0, epsilon = 1e-9);
        let outside = eval_double_layer_potential(
            &disc,
            &sigma,
            PotentialKind::DoubleLayer,
            [1.8, 0.9, 1.1],
        );
        assert_abs_diff_eq!(outside, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn error_metric_basics() {
        let a = [1.0, -2.0, 3.0];
        assert_eq!(relative_linf_error(&a, &a).unwrap(), 0.0);
        let b: Vec<f64> = a.iter().map(|v| 1.01 * v).collect();
        assert_abs_diff_eq!(
            relative_linf_error(&b, &a).unwrap(),
            0.01,
            epsilon = 1e-12
        );
        assert!(relative_linf_error(&a, &[0.0, 0.0, 0.0]).is_err());
        assert!(relative_linf_error(&a, &[1.0]).is_err());
    }

    #[test]
    fn charges_respect_side_flags() {
        let disc =
            Discretization::build(GeneratingCurve::sphere(1.0).unwrap(), 6, 10).unwrap();
        let ext = manufactured_charges(disc.curve(), true, 5, 7);
        assert_eq!(ext.side, ChargeSide::ExteriorOfSurface);
        for c in &ext.charges {
            let d: f64 = c.position.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!(d > 1.5, "charge at distance {d} not clearly outside");
        }
        let int = manufactured_charges(disc.curve(), false, 5, 7);
        assert_eq!(int.side, ChargeSide::InteriorOfSurface);
        for c in &int.charges {
            let rho = c.position[0].hypot(c.position[1]);
            assert!(disc.meridian_contains(rho, c.position[2]));
            assert!(disc.meridian_clearance(rho, c.position[2]) > 0.1);
        }
        // determinism
        let again = manufactured_charges(disc.curve(), false, 5, 7);
        for (a, b) in int.charges.iter().zip(&again.charges) {
            assert_eq!(a.position, b.position);
            assert_eq!(a.strength, b.strength);
        }
    }

    #[test]
    fn torus_interior_charges_stay_in_tube() {
        let curve = GeneratingCurve::starfish_torus(2.0, 0.5, 0.3, 5).unwrap();
        let disc = Discretization::build(curve, 12, 10).unwrap();
        let set = manufactured_charges(disc.curve(), false, 8, 3);
        for c in &set.charges {
            let rho = c.position[0].hypot(c.position[1]);
            assert!(
                disc.meridian_contains(rho, c.position[2]),
                "charge escaped the tube at rho={rho}, z={}",
                c.position[2]
            );
        }
    }

    #[test]
    fn targets_respect_problem_side() {
        let disc =
            Discretization::build(GeneratingCurve::sphere(1.0).unwrap(), 6, 10).unwrap();
        for t in evaluation_targets(disc.curve(), true, 10, 11) {
            let rho = t[0].hypot(t[1]);
            assert!(disc.meridian_contains(rho, t[2]));
        }
        for t in evaluation_targets(disc.curve(), false, 10, 11) {
            let d: f64 = t.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!(d > 1.5);
        }
    }
}
