//! Assembly of the dense modal system matrices.
//!
//! The matrix for mode n discretizes the operator
//! sigma -> sqrt(2 pi) int k_n(x, x') sigma(x') r' dl(x'), organized as
//! N_P x N_P blocks of size N_G x N_G. Well-separated blocks use the
//! plain Gauss weights; diagonal blocks use the 20-point log-singular
//! rules and blocks adjacent to the diagonal use the 24-point log-nearby
//! rules, both followed by Lagrange interpolation back onto the Gauss
//! nodes. Only modes n >= 0 are formed since the Laplace kernels give
//! identical matrices for n and -n.

use crate::error::{Error, Result};
use crate::geometry::{CurvePoint, Discretization};
use crate::kernels::{kernel_coeffs_adaptive, kernel_coeffs_fft, AxisymKernel, KernelScratch};
use crate::quadrature::tables::GAUSS10_NODES;
use crate::quadrature::{
    lagrange_matrix, nearby_rule, singular_rule, InterpolationMatrix, QuadratureRule,
};
use nalgebra::DMatrix;
use rayon::prelude::*;

/// How to evaluate modal kernel coefficients for a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelPath {
    /// Closed form when the kernel has one, otherwise FFT (far) or
    /// adaptive quadrature (near).
    Auto,
    /// Closed form only; errors if the kernel has none.
    Closed,
    /// Trapezoidal FFT of the physical kernel (well-separated pairs only).
    Fft,
    /// Term-by-term adaptive integration of the defining modal integral.
    Adaptive,
}

#[derive(Debug, Clone, Copy)]
pub struct AssemblyOptions {
    pub far_path: KernelPath,
    pub near_path: KernelPath,
    pub fft_oversample: usize,
    pub adaptive_tol: f64,
}

impl Default for AssemblyOptions {
    fn default() -> Self {
        AssemblyOptions {
            far_path: KernelPath::Auto,
            near_path: KernelPath::Auto,
            fft_oversample: 4,
            adaptive_tol: 1e-12,
        }
    }
}

/// Dense matrix A_n for one azimuthal mode, panel-major node ordering,
/// row-major storage.
pub struct ModalSystem {
    mode: usize,
    dim: usize,
    data: Vec<f64>,
}

impl ModalSystem {
    fn zeros(mode: usize, dim: usize) -> Self {
        ModalSystem {
            mode,
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn mode(&self) -> usize {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    /// Scales every entry, used to fold BIE jump factors into the system.
    pub fn scale(&mut self, c: f64) {
        for v in self.data.iter_mut() {
            *v *= c;
        }
    }

    /// I + A_n as a dense column-major matrix ready for factorization.
    pub fn identity_plus(&self) -> DMatrix<f64> {
        let mut m = DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j));
        for i in 0..self.dim {
            m[(i, i)] += 1.0;
        }
        m
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    pub fn from_dmatrix(mode: usize, m: &DMatrix<f64>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        let dim = m.nrows();
        let mut sys = ModalSystem::zeros(mode, dim);
        for i in 0..dim {
            for j in 0..dim {
                sys.data[i * dim + j] = m[(i, j)];
            }
        }
        sys
    }
}

/// Quadrature regime of a (target panel, source panel) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    SelfPanel,
    /// Source panel shares its right endpoint with the target panel.
    AdjacentLeft,
    /// Source panel shares its left endpoint with the target panel.
    AdjacentRight,
    Far,
}

/// Regime of source panel q relative to target panel p.
pub fn regime(disc: &Discretization, p: usize, q: usize) -> Regime {
    if p == q {
        return Regime::SelfPanel;
    }
    let np = disc.n_panels();
    let closed = disc.is_closed();
    let left = if p == 0 {
        closed.then_some(np - 1)
    } else {
        Some(p - 1)
    };
    let right = if p + 1 == np {
        closed.then_some(0)
    } else {
        Some(p + 1)
    };
    if left == Some(q) {
        Regime::AdjacentLeft
    } else if right == Some(q) {
        Regime::AdjacentRight
    } else {
        Regime::Far
    }
}

/// Precomputed rule/interpolation data shared by every panel: one
/// log-singular configuration per target node for the diagonal, and one
/// log-nearby configuration per target node and side for neighbors.
struct NearConfig {
    rule: QuadratureRule,
    /// Auxiliary node positions in the source panel's [-1, 1] coordinates.
    ref_points: Vec<f64>,
    /// Lagrange values L_j(ref point) transferring onto the Gauss nodes.
    lagrange: InterpolationMatrix,
}

struct NearContext {
    self_cfg: Vec<NearConfig>,
    left_cfg: Vec<NearConfig>,
    right_cfg: Vec<NearConfig>,
}

impl NearContext {
    fn build() -> Result<Self> {
        let mut self_cfg = Vec::with_capacity(10);
        let mut left_cfg = Vec::with_capacity(10);
        let mut right_cfg = Vec::with_capacity(10);
        for i in 0..10 {
            let rule = singular_rule(i + 1)?;
            let ref_points = rule.nodes.to_vec();
            let lagrange = lagrange_matrix(&GAUSS10_NODES, &ref_points)?;
            self_cfg.push(NearConfig {
                rule,
                ref_points,
                lagrange,
            });

            // source panel left of the target: panel-normalized distance
            // from the shared endpoint to target node i
            let xbar_left = 0.5 * (GAUSS10_NODES[i] + 1.0);
            debug_assert!(xbar_left > 0.0, "Gauss nodes are interior");
            let rule = nearby_rule(xbar_left);
            let ref_points: Vec<f64> = rule.nodes.iter().map(|&x| 1.0 - 2.0 * x).collect();
            let lagrange = lagrange_matrix(&GAUSS10_NODES, &ref_points)?;
            left_cfg.push(NearConfig {
                rule,
                ref_points,
                lagrange,
            });

            let xbar_right = 0.5 * (1.0 - GAUSS10_NODES[i]);
            debug_assert!(xbar_right > 0.0, "Gauss nodes are interior");
            let rule = nearby_rule(xbar_right);
            let ref_points: Vec<f64> = rule.nodes.iter().map(|&x| 2.0 * x - 1.0).collect();
            let lagrange = lagrange_matrix(&GAUSS10_NODES, &ref_points)?;
            right_cfg.push(NearConfig {
                rule,
                ref_points,
                lagrange,
            });
        }
        Ok(NearContext {
            self_cfg,
            left_cfg,
            right_cfg,
        })
    }
}

const SQRT_2PI: f64 = 2.5066282746310002;

#[allow(clippy::too_many_arguments)]
fn modal_coeffs(
    kernel: &dyn AxisymKernel,
    path: KernelPath,
    far: bool,
    opts: &AssemblyOptions,
    target: &CurvePoint,
    source: &CurvePoint,
    out: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    let resolved = match path {
        KernelPath::Auto => {
            if let Some(res) = kernel.modal_closed(target, source, out, scratch) {
                return res;
            }
            if far {
                KernelPath::Fft
            } else {
                KernelPath::Adaptive
            }
        }
        p => p,
    };
    match resolved {
        KernelPath::Closed => kernel
            .modal_closed(target, source, out, scratch)
            .ok_or_else(|| Error::Config("kernel has no closed-form modal coefficients".into()))?,
        KernelPath::Fft => {
            let mc = kernel_coeffs_fft(
                |t| kernel.physical(t, target, source),
                out.len() - 1,
                opts.fft_oversample,
            );
            out.copy_from_slice(mc.values());
            Ok(())
        }
        KernelPath::Adaptive => {
            let mc = kernel_coeffs_adaptive(
                |t| kernel.physical(t, target, source),
                out.len() - 1,
                opts.adaptive_tol,
            )?;
            out.copy_from_slice(mc.values());
            Ok(())
        }
        KernelPath::Auto => unreachable!(),
    }
}

/// Fills `block[(n * ng + i) * ng + j]` for a well-separated pair (p, q).
#[allow(clippy::too_many_arguments)]
fn far_block_into(
    disc: &Discretization,
    kernel: &dyn AxisymKernel,
    opts: &AssemblyOptions,
    p: usize,
    q: usize,
    n_max: usize,
    block: &mut [f64],
    coeff: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    let ng = disc.n_gauss();
    debug_assert_eq!(block.len(), (n_max + 1) * ng * ng);
    for i in 0..ng {
        let target = disc.node(p * ng + i);
        for j in 0..ng {
            let src = disc.node(q * ng + j);
            modal_coeffs(
                kernel,
                opts.far_path,
                true,
                opts,
                &target.point,
                &src.point,
                coeff,
                scratch,
            )?;
            let wf = SQRT_2PI * src.weight * src.point.r * src.point.jacobian;
            for n in 0..=n_max {
                block[(n * ng + i) * ng + j] = wf * coeff[n];
            }
        }
    }
    Ok(())
}

/// Fills a diagonal or diagonal-adjacent block: per target node, apply the
/// modified rule mapped onto the source panel, evaluate the kernel at the
/// auxiliary nodes, and contract with the Lagrange transfer matrix.
#[allow(clippy::too_many_arguments)]
fn near_block_into(
    disc: &Discretization,
    kernel: &dyn AxisymKernel,
    opts: &AssemblyOptions,
    ctx: &NearContext,
    p: usize,
    q: usize,
    reg: Regime,
    n_max: usize,
    block: &mut [f64],
    coeff: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    let ng = disc.n_gauss();
    let h = disc.panel_len();
    let (aq, _bq) = disc.panel_interval(q);
    debug_assert_eq!(block.len(), (n_max + 1) * ng * ng);
    block.fill(0.0);
    for i in 0..ng {
        let target = disc.node(p * ng + i);
        let cfg = match reg {
            Regime::SelfPanel => &ctx.self_cfg[i],
            Regime::AdjacentLeft => &ctx.left_cfg[i],
            Regime::AdjacentRight => &ctx.right_cfg[i],
            Regime::Far => unreachable!("near_block_into called with far regime"),
        };
        // rule weights pick up the affine-map jacobian onto the panel
        let wscale = if cfg.rule.interval == (-1.0, 1.0) {
            0.5 * h
        } else {
            h
        };
        for (l, &xi) in cfg.ref_points.iter().enumerate() {
            let s = aq + 0.5 * h * (xi + 1.0);
            let aux = disc.curve().eval(s).map_err(|e| Error::AssemblyFailure {
                p,
                q,
                i,
                reason: e.to_string(),
            })?;
            modal_coeffs(
                kernel,
                opts.near_path,
                false,
                opts,
                &target.point,
                &aux,
                coeff,
                scratch,
            )
            .map_err(|e| Error::AssemblyFailure {
                p,
                q,
                i,
                reason: format!("auxiliary node {l}: {e}"),
            })?;
            let wf = SQRT_2PI * wscale * cfg.rule.weights[l] * aux.r * aux.jacobian;
            let lag = cfg.lagrange.row(l);
            for n in 0..=n_max {
                let kv = wf * coeff[n];
                let row = &mut block[(n * ng + i) * ng..(n * ng + i + 1) * ng];
                for (v, lj) in row.iter_mut().zip(lag) {
                    *v += kv * lj;
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn block_into(
    disc: &Discretization,
    kernel: &dyn AxisymKernel,
    opts: &AssemblyOptions,
    ctx: &NearContext,
    p: usize,
    q: usize,
    n_max: usize,
    block: &mut [f64],
    coeff: &mut [f64],
    scratch: &mut KernelScratch,
) -> Result<()> {
    match regime(disc, p, q) {
        Regime::Far => far_block_into(disc, kernel, opts, p, q, n_max, block, coeff, scratch),
        reg => near_block_into(
            disc, kernel, opts, ctx, p, q, reg, n_max, block, coeff, scratch,
        ),
    }
}

/// Blocks A_n^{(p,q)} for all n = 0..=n_max of a well-separated pair.
pub fn assemble_far_block(
    disc: &Discretization,
    kernel: &dyn AxisymKernel,
    p: usize,
    q: usize,
    n_max: usize,
    opts: &AssemblyOptions,
) -> Result<Vec<DMatrix<f64>>> {
    if regime(disc, p, q) != Regime::Far {
        return Err(Error::Config(format!(
            "panels ({p}, {q}) are not well separated"
        )));
    }
    let ng = disc.n_gauss();
    let mut block = vec![0.0; (n_max + 1) * ng * ng];
    let mut coeff = vec![0.0; n_max + 1];
    let mut scratch = KernelScratch::default();
    far_block_into(
        disc, kernel, opts, p, q, n_max, &mut block, &mut coeff, &mut scratch,
    )?;
    Ok(extract_blocks(&block, ng, n_max))
}

/// Block A_n^{(p,q)} of a diagonal or adjacent pair for a single mode n.
pub fn assemble_near_block(
    disc: &Discretization,
    kernel: &dyn AxisymKernel,
    p: usize,
    q: usize,
    n: usize,
    opts: &AssemblyOptions,
) -> Result<DMatrix<f64>> {
    let reg = regime(disc, p, q);
    if reg == Regime::Far {
        return Err(Error::Config(format!("panels ({p}, {q}) are not near")));
    }
    let ctx = NearContext::build()?;
    let ng = disc.n_gauss();
    let mut block = vec![0.0; (n + 1) * ng * ng];
    let mut coeff = vec![0.0; n + 1];
    let mut scratch = KernelScratch::default();
    near_block_into(
        disc, kernel, opts, &ctx, p, q, reg, n, &mut block, &mut coeff, &mut scratch,
    )?;
    Ok(extract_blocks(&block, ng, n).pop().unwrap())
}

fn extract_blocks(block: &[f64], ng: usize, n_max: usize) -> Vec<DMatrix<f64>> {
    (0..=n_max)
        .map(|n| DMatrix::from_fn(ng, ng, |i, j| block[(n * ng + i) * ng + j]))
        .collect()
}

/// Assembles A_n for n = 0..=n_max with the three-regime strategy,
/// parallelized over target panels.
pub fn build_modal_systems(
    disc: &Discretization,
    kernel: &dyn AxisymKernel,
    n_max: usize,
    opts: &AssemblyOptions,
) -> Result<Vec<ModalSystem>> {
    let dim = disc.node_count();
    let np = disc.n_panels();
    let ng = disc.n_gauss();
    let ctx = NearContext::build()?;
    let mut systems: Vec<ModalSystem> = (0..=n_max).map(|n| ModalSystem::zeros(n, dim)).collect();

    // hand each target panel its row slab of every A_n
    let mut slabs: Vec<Vec<&mut [f64]>> = (0..np).map(|_| Vec::with_capacity(n_max + 1)).collect();
    for sys in systems.iter_mut() {
        for (p, slab) in sys.data.chunks_mut(ng * dim).enumerate() {
            slabs[p].push(slab);
        }
    }

    let results: Vec<Result<()>> = slabs
        .into_par_iter()
        .enumerate()
        .map(|(p, mut slab)| {
            let mut block = vec![0.0; (n_max + 1) * ng * ng];
            let mut coeff = vec![0.0; n_max + 1];
            let mut scratch = KernelScratch::default();
            for q in 0..np {
                block_into(
                    disc, kernel, opts, &ctx, p, q, n_max, &mut block, &mut coeff, &mut scratch,
                )?;
                for n in 0..=n_max {
                    for i in 0..ng {
                        let src = &block[(n * ng + i) * ng..(n * ng + i + 1) * ng];
                        slab[n][i * dim + q * ng..i * dim + q * ng + ng].copy_from_slice(src);
                    }
                }
            }
            Ok(())
        })
        .collect();
    for r in results {
        r?;
    }
    Ok(systems)
}

/// Number of near (diagonal or adjacent) blocks in the regime partition.
pub fn near_block_count(disc: &Discretization) -> usize {
    let np = disc.n_panels();
    (0..np)
        .map(|p| {
            (0..np)
                .filter(|&q| regime(disc, p, q) != Regime::Far)
                .count()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GeneratingCurve;
    use crate::kernels::LaplaceInteriorKernel;
    use approx::assert_abs_diff_eq;

    fn sphere_disc(np: usize) -> Discretization {
        Discretization::build(GeneratingCurve::sphere(1.0).unwrap(), np, 10).unwrap()
    }

    /// Kernel stub with k_n = 1 for every mode.
    struct ConstantKernel;
    impl AxisymKernel for ConstantKernel {
        fn physical(&self, _t: f64, _x: &CurvePoint, _y: &CurvePoint) -> f64 {
            unimplemented!("constant stub provides modal coefficients directly")
        }
        fn modal_closed(
            &self,
            _t: &CurvePoint,
            _s: &CurvePoint,
            out: &mut [f64],
            _scratch: &mut KernelScratch,
        ) -> Option<crate::error::Result<()>> {
            out.fill(1.0);
            Some(Ok(()))
        }
    }

    #[test]
    fn far_block_with_constant_kernel_is_pure_weights() {
        let disc = sphere_disc(5);
        let blocks =
            assemble_far_block(&disc, &ConstantKernel, 0, 3, 2, &AssemblyOptions::default())
                .unwrap();
        for b in &blocks {
            for i in 0..10 {
                for j in 0..10 {
                    let node = disc.node(3 * 10 + j);
                    let want = SQRT_2PI * node.weight * node.point.r;
                    assert_abs_diff_eq!(b[(i, j)], want, epsilon = 1e-15);
                }
            }
        }
    }

    #[test]
    fn far_block_rejects_near_pairs() {
        let disc = sphere_disc(5);
        let opts = AssemblyOptions::default();
        assert!(assemble_far_block(&disc, &ConstantKernel, 0, 0, 1, &opts).is_err());
        assert!(assemble_far_block(&disc, &ConstantKernel, 0, 1, 1, &opts).is_err());
        assert!(assemble_near_block(&disc, &ConstantKernel, 0, 3, 1, &opts).is_err());
    }

    #[test]
    fn regime_partition_counts() {
        let open = sphere_disc(8);
        // open curve: ends are single-sided
        assert_eq!(near_block_count(&open), 8 + 2 * 7);
        let torus = Discretization::build(
            GeneratingCurve::starfish_torus(2.0, 0.5, 0.3, 5).unwrap(),
            8,
            10,
        )
        .unwrap();
        assert_eq!(near_block_count(&torus), 3 * 8);
        assert_eq!(regime(&torus, 0, 7), Regime::AdjacentLeft);
        assert_eq!(regime(&torus, 7, 0), Regime::AdjacentRight);
        assert_eq!(regime(&open, 0, 7), Regime::Far);
    }

    #[test]
    fn shapes_of_modal_systems() {
        let disc = sphere_disc(5);
        let systems = build_modal_systems(
            &disc,
            &LaplaceInteriorKernel,
            12,
            &AssemblyOptions::default(),
        )
        .unwrap();
        assert_eq!(systems.len(), 13);
        for (n, s) in systems.iter().enumerate() {
            assert_eq!(s.mode(), n);
            assert_eq!(s.dim(), 50);
        }
    }

    #[test]
    fn gauss_identity_row_sums() {
        // double layer of a constant density evaluated on the boundary is
        // -1/2; discretely, every row of the n = 0 matrix sums to -1/2
        let disc = sphere_disc(8);
        let systems = build_modal_systems(
            &disc,
            &LaplaceInteriorKernel,
            0,
            &AssemblyOptions::default(),
        )
        .unwrap();
        let a0 = &systems[0];
        for i in 0..a0.dim() {
            let s: f64 = a0.row(i).iter().sum();
            assert_abs_diff_eq!(s, -0.5, epsilon = 1e-10);
        }
    }

    #[test]
    fn self_block_entries_finite_despite_singularity() {
        let disc = sphere_disc(5);
        let b = assemble_near_block(
            &disc,
            &LaplaceInteriorKernel,
            2,
            2,
            0,
            &AssemblyOptions::default(),
        )
        .unwrap();
        assert!(b.iter().all(|v| v.is_finite()));
        assert!(b.amax() > 0.0);
    }

    #[test]
    fn sphere_reflection_symmetry() {
        // z -> -z maps node (p, i) to (np-1-p, ng-1-i) and preserves A_n
        let disc = sphere_disc(6);
        let systems = build_modal_systems(
            &disc,
            &LaplaceInteriorKernel,
            3,
            &AssemblyOptions::default(),
        )
        .unwrap();
        let dim = disc.node_count();
        let perm = |k: usize| {
            let (p, i) = (k / 10, k % 10);
            (6 - 1 - p) * 10 + (10 - 1 - i)
        };
        for s in &systems {
            let mut max_diff = 0.0f64;
            let mut max_abs = 0.0f64;
            for i in 0..dim {
                for j in 0..dim {
                    let d = (s.get(i, j) - s.get(perm(i), perm(j))).abs();
                    max_diff = max_diff.max(d);
                    max_abs = max_abs.max(s.get(i, j).abs());
                }
            }
            assert!(
                max_diff <= 1e-12 * max_abs,
                "mode {}: asymmetry {max_diff} vs scale {max_abs}",
                s.mode()
            );
        }
    }

    #[test]
    fn far_block_matches_azimuthal_oracle_at_random_entries() {
        use crate::kernels::kernel_coeffs_adaptive;
        let disc = sphere_disc(6);
        let opts = AssemblyOptions::default();
        // antipodal panels 0 and 5 on the open sphere are far
        let blocks = assemble_far_block(&disc, &LaplaceInteriorKernel, 0, 5, 4, &opts).unwrap();
        for &(i, j) in &[(0usize, 0usize), (3, 7), (9, 9), (5, 2), (2, 8)] {
            let target = disc.node(i).point;
            let src = disc.node(5 * 10 + j);
            let oracle = kernel_coeffs_adaptive(
                |t| LaplaceInteriorKernel.physical(t, &target, &src.point),
                4,
                1e-13,
            )
            .unwrap();
            for n in 0..=4 {
                let want = SQRT_2PI * src.weight * src.point.r * oracle.get(n as i64);
                let got = blocks[n][(i, j)];
                assert!(
                    (got - want).abs() <= 1e-11 * want.abs().max(1e-12),
                    "entry ({i},{j}) mode {n}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn log_kernel_self_panel_matches_lagrange_oracle() {
        // pure curve-kernel stub K(t, s) = log|t - s|: the self-panel rule
        // plus interpolation must reproduce int log|t_i - s| L_j(s) ds
        use crate::quadrature::adaptive_integrate;
        let disc = sphere_disc(3);
        let p = 1usize;
        let (a, b) = disc.panel_interval(p);
        let h = disc.panel_len();
        let ctx = NearContext::build().unwrap();
        let gauss_ts: Vec<f64> = (0..10).map(|j| disc.node(p * 10 + j).t).collect();
        for i in 0..10 {
            let ti = disc.node(p * 10 + i).t;
            let cfg = &ctx.self_cfg[i];
            let mut row = [0.0f64; 10];
            for (l, &xi) in cfg.ref_points.iter().enumerate() {
                let s = a + 0.5 * h * (xi + 1.0);
                let kv = 0.5 * h * cfg.rule.weights[l] * (ti - s).abs().ln();
                for (j, rj) in row.iter_mut().enumerate() {
                    *rj += kv * cfg.lagrange.get(l, j);
                }
            }
            for j in 0..10 {
                let lj = |s: f64| {
                    let m = lagrange_matrix(&gauss_ts, &[s]).unwrap();
                    m.get(0, j)
                };
                let f = |s: f64| (ti - s).abs().ln() * lj(s);
                let want = adaptive_integrate(f, a, ti, 1e-13).unwrap()
                    + adaptive_integrate(f, ti, b, 1e-13).unwrap();
                assert!(
                    (row[j] - want).abs() <= 1e-11 * want.abs().max(0.1),
                    "i={i} j={j}: {} vs {}",
                    row[j],
                    want
                );
            }
        }
    }
}
