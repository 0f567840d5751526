use crate::error::{Error, Result};

/// Dense matrix of Lagrange basis values: entry (l, j) = L_j(eval_points[l]),
/// where L_j is the basis polynomial for source node j.
#[derive(Debug, Clone)]
pub struct InterpolationMatrix {
    n_eval: usize,
    n_source: usize,
    /// row-major, n_eval x n_source
    data: Vec<f64>,
}

impl InterpolationMatrix {
    /// Builds the transfer matrix using the barycentric form.
    pub fn new(source_nodes: &[f64], eval_points: &[f64]) -> Result<Self> {
        let n = source_nodes.len();
        if n == 0 {
            return Err(Error::Config("empty source node set".into()));
        }
        for j in 0..n {
            for k in j + 1..n {
                if source_nodes[j] == source_nodes[k] {
                    return Err(Error::Config(format!(
                        "duplicate source nodes at indices {j} and {k}"
                    )));
                }
            }
        }
        // barycentric weights
        let mut bw = vec![1.0f64; n];
        for j in 0..n {
            for k in 0..n {
                if k != j {
                    bw[j] /= source_nodes[j] - source_nodes[k];
                }
            }
        }
        let mut data = vec![0.0; eval_points.len() * n];
        for (l, &s) in eval_points.iter().enumerate() {
            let row = &mut data[l * n..(l + 1) * n];
            // exact hit on a source node
            if let Some(j) = source_nodes.iter().position(|&t| t == s) {
                row[j] = 1.0;
                continue;
            }
            let mut denom = 0.0;
            for j in 0..n {
                let term = bw[j] / (s - source_nodes[j]);
                row[j] = term;
                denom += term;
            }
            for v in row.iter_mut() {
                *v /= denom;
            }
        }
        Ok(InterpolationMatrix {
            n_eval: eval_points.len(),
            n_source: n,
            data,
        })
    }

    pub fn n_eval(&self) -> usize {
        self.n_eval
    }

    pub fn n_source(&self) -> usize {
        self.n_source
    }

    /// Basis values at evaluation point `l`.
    pub fn row(&self, l: usize) -> &[f64] {
        &self.data[l * self.n_source..(l + 1) * self.n_source]
    }

    pub fn get(&self, l: usize, j: usize) -> f64 {
        self.data[l * self.n_source + j]
    }

    /// Interpolates samples given at the source nodes to the evaluation points.
    pub fn apply(&self, source_values: &[f64]) -> Vec<f64> {
        assert_eq!(source_values.len(), self.n_source);
        (0..self.n_eval)
            .map(|l| {
                self.row(l)
                    .iter()
                    .zip(source_values)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::tables::GAUSS10_NODES;
    use proptest::prelude::*;

    #[test]
    fn identity_when_eval_equals_source() {
        let m = InterpolationMatrix::new(&GAUSS10_NODES, &GAUSS10_NODES).unwrap();
        for l in 0..10 {
            for j in 0..10 {
                let want = if l == j { 1.0 } else { 0.0 };
                assert_eq!(m.get(l, j), want);
            }
        }
    }

    #[test]
    fn duplicate_source_nodes_rejected() {
        assert!(InterpolationMatrix::new(&[0.0, 0.5, 0.5], &[0.1]).is_err());
    }

    #[test]
    fn exact_for_degree_nine_polynomial() {
        let evals: Vec<f64> = (0..24).map(|k| -1.0 + 2.0 * (k as f64) / 23.0).collect();
        let m = InterpolationMatrix::new(&GAUSS10_NODES, &evals).unwrap();
        let f = |x: f64| x.powi(9);
        let src: Vec<f64> = GAUSS10_NODES.iter().map(|&x| f(x)).collect();
        let out = m.apply(&src);
        for (o, &x) in out.iter().zip(&evals) {
            assert!((o - f(x)).abs() <= 1e-12, "at {x}: {o} vs {}", f(x));
        }
    }

    #[test]
    fn exp_interpolation_within_derivative_bound() {
        // |g - interp| <= sup|g^(10)| / 10! * h^10 with h = 2 on [-1, 1]
        let evals: Vec<f64> = (0..101).map(|k| -1.0 + 0.02 * k as f64).collect();
        let m = InterpolationMatrix::new(&GAUSS10_NODES, &evals).unwrap();
        let src: Vec<f64> = GAUSS10_NODES.iter().map(|&x| x.exp()).collect();
        let out = m.apply(&src);
        let bound = std::f64::consts::E / 3628800.0 * 2.0f64.powi(10);
        let max_err = out
            .iter()
            .zip(&evals)
            .map(|(o, &x)| (o - x.exp()).abs())
            .fold(0.0, f64::max);
        assert!(max_err <= bound, "max err {max_err} > bound {bound}");
        assert!(max_err > 0.0);
    }

    proptest! {
        #[test]
        fn rows_sum_to_one(pts in proptest::collection::vec(-1.0f64..1.0, 1..30)) {
            let m = InterpolationMatrix::new(&GAUSS10_NODES, &pts).unwrap();
            for l in 0..pts.len() {
                let s: f64 = m.row(l).iter().sum();
                prop_assert!((s - 1.0).abs() <= 1e-12, "row {} sums to {}", l, s);
            }
        }
    }
}
