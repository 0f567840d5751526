//! Quadrature rules and interpolation.
//!
//! Three families of rules are embedded as constant data (see [`tables`]):
//! the standard 10-point Gauss-Legendre rule, ten 20-point rules exact for
//! `f(x) + g(x) log|x_i - x|` with the singularity at Gauss node `x_i`, and
//! fourteen 24-point rules exact for `f(x) + g(x) log(x + xbar)` with the
//! near-singularity a distance `xbar` outside the interval, one rule per
//! decade of `xbar`. An adaptive integrator provides an independent
//! reference for everything the rules claim to integrate.

pub mod adaptive;
pub mod checks;
pub mod lagrange;
pub mod tables;

pub use adaptive::adaptive_integrate;
pub use lagrange::InterpolationMatrix;

use crate::error::{Error, Result};

/// Classifies which integrand family a rule integrates exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Polynomials of degree <= 19 on [-1, 1].
    Gauss10,
    /// f + g log|x_i - x| on [-1, 1], singularity at Gauss node i (1-based).
    Singular20(usize),
    /// f + g log(x + xbar) on [0, 1], xbar in the decade with this index
    /// (0: xbar >= 1e-1, d: xbar in [10^-(d+1), 10^-d]).
    Nearby24(usize),
}

/// Nodes and weights on a fixed reference interval.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    /// Reference interval the nodes live on.
    pub interval: (f64, f64),
    pub nodes: &'static [f64],
    pub weights: &'static [f64],
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Applies the rule to `f` on the reference interval.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Applies the rule to `f` on `[a, b]` via the affine map.
    pub fn integrate_on<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let (ra, rb) = self.interval;
        let scale = (b - a) / (rb - ra);
        self.nodes
            .iter()
            .zip(self.weights)
            .map(|(&x, &w)| scale * w * f(a + (x - ra) * scale))
            .sum()
    }
}

/// The verbatim 10-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_rule() -> QuadratureRule {
    QuadratureRule {
        kind: RuleKind::Gauss10,
        interval: (-1.0, 1.0),
        nodes: &tables::GAUSS10_NODES,
        weights: &tables::GAUSS10_WEIGHTS,
    }
}

/// The 20-point log-singular rule for Gauss node `i` (1-based, 1..=10).
pub fn singular_rule(i: usize) -> Result<QuadratureRule> {
    if !(1..=10).contains(&i) {
        return Err(Error::Domain(format!(
            "singular rule index {i} out of range 1..=10"
        )));
    }
    let (nodes, weights) = &tables::SINGULAR20[i - 1];
    Ok(QuadratureRule {
        kind: RuleKind::Singular20(i),
        interval: (-1.0, 1.0),
        nodes,
        weights,
    })
}

/// Decade index for the nearby rules covering separation `xbar`.
///
/// Total on [0, inf): values >= 1e-1 map to the first table, values below
/// 1e-14 to the last, and bracket edges (exact powers of ten) go to the
/// lower-xbar table.
pub fn nearby_decade(xbar: f64) -> usize {
    assert!(xbar >= 0.0, "nearby rule separation must be nonnegative");
    if xbar > 1e-1 {
        return 0;
    }
    let k = (-xbar.log10()).floor();
    // xbar = 10^-k exactly belongs to [10^-(k+1), 10^-k], i.e. index k.
    (k as i64).clamp(1, 13) as usize
}

/// The 24-point log-nearby rule for separation `xbar >= 0`.
pub fn nearby_rule(xbar: f64) -> QuadratureRule {
    let d = nearby_decade(xbar);
    let (nodes, weights) = &tables::NEARBY24[d];
    QuadratureRule {
        kind: RuleKind::Nearby24(d),
        interval: (0.0, 1.0),
        nodes,
        weights,
    }
}

/// Lagrange transfer matrix from `source_nodes` to `eval_points`;
/// entry (l, j) is L_j(eval_points[l]).
pub fn lagrange_matrix(source_nodes: &[f64], eval_points: &[f64]) -> Result<InterpolationMatrix> {
    InterpolationMatrix::new(source_nodes, eval_points)
}
