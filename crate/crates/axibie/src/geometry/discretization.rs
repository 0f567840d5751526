use crate::error::{Error, Result};
use crate::geometry::{CurvePoint, GeneratingCurve};
use crate::quadrature::tables::{GAUSS10_NODES, GAUSS10_WEIGHTS};

/// One Gauss node of the panelization: arclength position, integration
/// weight (already scaled by the panel half-length), and geometric data.
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub t: f64,
    pub weight: f64,
    pub point: CurvePoint,
}

/// Equisized arc-length panels carrying 10-point Gauss nodes each.
pub struct Discretization {
    curve: GeneratingCurve,
    n_panels: usize,
    n_gauss: usize,
    panel_len: f64,
    nodes: Vec<Node>,
}

impl Discretization {
    pub fn build(curve: GeneratingCurve, n_panels: usize, n_gauss: usize) -> Result<Self> {
        if n_gauss != 10 {
            return Err(Error::Config(format!(
                "only the embedded 10-point Gauss rule is supported, got n_gauss = {n_gauss}"
            )));
        }
        if n_panels == 0 {
            return Err(Error::Config("need at least one panel".into()));
        }
        if curve.is_closed() && n_panels < 3 {
            return Err(Error::Config(
                "closed curves need at least 3 panels so panel adjacency is single-sided".into(),
            ));
        }
        let total = curve.total_length();
        let h = total / n_panels as f64;
        let mut nodes = Vec::with_capacity(n_panels * n_gauss);
        for p in 0..n_panels {
            let a = p as f64 * h;
            for i in 0..n_gauss {
                let t = a + 0.5 * h * (GAUSS10_NODES[i] + 1.0);
                let point = curve.eval(t)?;
                nodes.push(Node {
                    t,
                    weight: 0.5 * h * GAUSS10_WEIGHTS[i],
                    point,
                });
            }
        }
        Ok(Discretization {
            curve,
            n_panels,
            n_gauss,
            panel_len: h,
            nodes,
        })
    }

    pub fn curve(&self) -> &GeneratingCurve {
        &self.curve
    }

    pub fn n_panels(&self) -> usize {
        self.n_panels
    }

    pub fn n_gauss(&self) -> usize {
        self.n_gauss
    }

    pub fn panel_len(&self) -> f64 {
        self.panel_len
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, global: usize) -> &Node {
        &self.nodes[global]
    }

    /// Arclength interval of panel p.
    pub fn panel_interval(&self, p: usize) -> (f64, f64) {
        (p as f64 * self.panel_len, (p + 1) as f64 * self.panel_len)
    }

    pub fn is_closed(&self) -> bool {
        self.curve.is_closed()
    }

    /// Panels sharing an endpoint, with wrap-around on closed curves.
    pub fn panels_adjacent(&self, p: usize, q: usize) -> bool {
        if p == q {
            return false;
        }
        let d = p.abs_diff(q);
        d == 1 || (self.is_closed() && d == self.n_panels - 1)
    }

    /// Largest distance from the origin to the curve (delegates to the
    /// discretization-independent curve query).
    pub fn bounding_radius(&self) -> f64 {
        self.curve.bounding_radius()
    }

    pub fn meridian_centroid(&self) -> (f64, f64) {
        self.curve.meridian_centroid()
    }

    pub fn meridian_contains(&self, r: f64, z: f64) -> bool {
        self.curve.meridian_contains(r, z)
    }

    pub fn meridian_clearance(&self, r: f64, z: f64) -> f64 {
        self.curve.meridian_clearance(r, z)
    }
}
