//! End-to-end Dirichlet solves and the study harnesses behind the CLI.
//!
//! The interior and exterior problems are posed through the double layer
//! representation. On the boundary the representation satisfies
//! -sigma/2 + K sigma = f with K the principal-value operator, so the
//! discrete second-kind system solved per mode is
//! (I - 2 K_n) sigma_n = -2 f_n.

use crate::assembly::{build_modal_systems, AssemblyOptions, KernelPath, ModalSystem};
use crate::error::{Error, Result};
use crate::geometry::{Discretization, GeneratingCurve};
use crate::kernels::{AxisymKernel, LaplaceExteriorKernel, LaplaceInteriorKernel};
use crate::postprocess::{
    boundary_data, eval_double_layer_potential, evaluation_targets, manufactured_charges,
    point_charge_potential, relative_linf_error, ChargeSet, PotentialKind,
};
use crate::solver::{
    factorize_all, fourier_analyze, fourier_synthesize, select_truncation, solve_modes,
    BoundaryField, ModalField,
};
use crate::fourier::next_fft_len;
use std::time::Instant;

/// Which of the built-in geometries (or a user-sampled curve) to solve on.
#[derive(Debug, Clone)]
pub enum CurveSpec {
    Sphere {
        radius: f64,
    },
    WavyBlock {
        scale: f64,
        amplitude: f64,
        waves: u32,
    },
    StarfishTorus {
        major: f64,
        minor: f64,
        amplitude: f64,
        waves: u32,
    },
    Samples(Vec<(f64, f64)>),
}

impl CurveSpec {
    pub fn build(&self) -> Result<GeneratingCurve> {
        match self {
            CurveSpec::Sphere { radius } => GeneratingCurve::sphere(*radius),
            CurveSpec::WavyBlock {
                scale,
                amplitude,
                waves,
            } => GeneratingCurve::wavy_block(*scale, *amplitude, *waves),
            CurveSpec::StarfishTorus {
                major,
                minor,
                amplitude,
                waves,
            } => GeneratingCurve::starfish_torus(*major, *minor, *amplitude, *waves),
            CurveSpec::Samples(points) => GeneratingCurve::from_samples(points),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemType {
    Interior,
    Exterior,
}

/// Either a fixed highest azimuthal mode or a tolerance from which the
/// truncation is selected against the sampled boundary data.
#[derive(Debug, Clone, Copy)]
pub enum ModeSelection {
    Fixed(usize),
    Tolerance(f64),
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub n_panels: usize,
    pub n_gauss: usize,
    pub modes: ModeSelection,
    pub n_charges: usize,
    pub n_targets: usize,
    pub seed: u64,
    /// Azimuthal grid size override; the default is the smallest
    /// FFT-friendly integer >= 4 (N_F + 1).
    pub theta_grid: Option<usize>,
    pub assembly: AssemblyOptions,
    pub explicit_inverse: bool,
    /// Disabling the monopole completion reproduces the rank-deficient
    /// exterior formulation; exposed for the conditioning experiment.
    pub exterior_completion: bool,
    /// Reference point for the exterior completion; defaults to the
    /// meridian centroid.
    pub x0: Option<(f64, f64)>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            n_panels: 10,
            n_gauss: 10,
            modes: ModeSelection::Fixed(50),
            n_charges: 3,
            n_targets: 20,
            seed: 7,
            theta_grid: None,
            assembly: AssemblyOptions::default(),
            explicit_inverse: false,
            exterior_completion: true,
            x0: None,
        }
    }
}

/// Wall-clock seconds per phase, mirroring the usual cost breakdown of a
/// direct modal solver: geometry/data setup, matrix construction, matrix
/// factorization, Fourier transforms, and triangular solves.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhaseTimings {
    pub setup: f64,
    pub mat: f64,
    pub inv: f64,
    pub fft: f64,
    pub apply: f64,
}

pub struct SolveOutcome {
    pub n_modes: usize,
    pub m_theta: usize,
    pub timings: PhaseTimings,
    pub truncation_warned: bool,
    pub charges: ChargeSet,
    pub x0: Option<(f64, f64)>,
    pub sigma: BoundaryField,
    pub targets: Vec<[f64; 3]>,
    pub u_num: Vec<f64>,
    pub u_exact: Vec<f64>,
    pub rel_linf: f64,
}

fn default_theta_grid(n_modes: usize) -> usize {
    next_fft_len(4 * (n_modes + 1))
}

fn problem_kernel(
    problem: ProblemType,
    cfg: &SolveConfig,
    curve: &GeneratingCurve,
) -> Result<(Box<dyn AxisymKernel>, Option<(f64, f64)>)> {
    match problem {
        ProblemType::Interior => Ok((Box::new(LaplaceInteriorKernel), None)),
        ProblemType::Exterior => {
            let x0 = cfg.x0.unwrap_or_else(|| {
                let (r, z) = curve.meridian_centroid();
                (r, z)
            });
            if !curve.meridian_contains(x0.0, x0.1) {
                return Err(Error::Config(format!(
                    "exterior reference point ({}, {}) is not strictly inside the curve",
                    x0.0, x0.1
                )));
            }
            Ok((
                Box::new(LaplaceExteriorKernel {
                    x0,
                    completed: cfg.exterior_completion,
                }),
                Some(x0),
            ))
        }
    }
}

/// Assembles the scaled modal systems A_n = -2 K_n for n = 0..=n_max.
pub fn assemble_systems(
    disc: &Discretization,
    problem: ProblemType,
    cfg: &SolveConfig,
    n_max: usize,
) -> Result<Vec<ModalSystem>> {
    let (kernel, _) = problem_kernel(problem, cfg, disc.curve())?;
    let mut systems = build_modal_systems(disc, kernel.as_ref(), n_max, &cfg.assembly)?;
    for s in systems.iter_mut() {
        s.scale(-2.0);
    }
    Ok(systems)
}

/// Full manufactured-solution run: build geometry, sample the charge
/// potential on the boundary, solve every retained mode, and compare the
/// reconstructed potential against the exact one at off-surface targets.
pub fn run_dirichlet(
    curve_spec: &CurveSpec,
    problem: ProblemType,
    cfg: &SolveConfig,
) -> Result<SolveOutcome> {
    let mut timings = PhaseTimings::default();

    let t0 = Instant::now();
    let curve = curve_spec.build()?;
    let interior = problem == ProblemType::Interior;
    let charges = manufactured_charges(&curve, interior, cfg.n_charges, cfg.seed);
    let targets = evaluation_targets(&curve, interior, cfg.n_targets, cfg.seed + 1);
    let disc = Discretization::build(curve, cfg.n_panels, cfg.n_gauss)?;
    let (kernel, x0) = problem_kernel(problem, cfg, disc.curve())?;
    timings.setup = t0.elapsed().as_secs_f64();

    // truncation selection and boundary data
    let t0 = Instant::now();
    let (n_modes, truncation_warned) = match cfg.modes {
        ModeSelection::Fixed(n) => (n, false),
        ModeSelection::Tolerance(eps) => {
            let probe_grid = cfg.theta_grid.unwrap_or(512).max(64);
            let probe = boundary_data(&disc, &charges, probe_grid)?;
            select_truncation(&probe, eps)?
        }
    };
    let m_theta = cfg.theta_grid.unwrap_or_else(|| default_theta_grid(n_modes));
    if m_theta < 2 * n_modes + 1 {
        return Err(Error::Config(format!(
            "theta_grid = {m_theta} cannot resolve {n_modes} modes"
        )));
    }
    let data = boundary_data(&disc, &charges, m_theta)?;
    timings.setup += t0.elapsed().as_secs_f64();

    let t0 = Instant::now();
    let mut rhs = fourier_analyze(&data, n_modes)?;
    timings.fft = t0.elapsed().as_secs_f64();
    // second-kind form: (I - 2 K_n) sigma_n = -2 f_n
    for n in 0..=n_modes {
        for v in rhs.mode_mut(n) {
            *v *= -2.0;
        }
    }

    let t0 = Instant::now();
    let mut systems = build_modal_systems(&disc, kernel.as_ref(), n_modes, &cfg.assembly)?;
    for s in systems.iter_mut() {
        s.scale(-2.0);
    }
    timings.mat = t0.elapsed().as_secs_f64();

    let t0 = Instant::now();
    let factors = factorize_all(&systems, cfg.explicit_inverse)?;
    timings.inv = t0.elapsed().as_secs_f64();

    let t0 = Instant::now();
    let sigma_modes: ModalField = solve_modes(&factors, &rhs)?;
    timings.apply = t0.elapsed().as_secs_f64();

    let t0 = Instant::now();
    let sigma = fourier_synthesize(&sigma_modes, m_theta)?;
    timings.fft += t0.elapsed().as_secs_f64();

    let kind = match problem {
        ProblemType::Interior => PotentialKind::DoubleLayer,
        ProblemType::Exterior => PotentialKind::ExteriorCompleted {
            x0: x0.expect("exterior problems carry a reference point"),
        },
    };
    let u_num: Vec<f64> = targets
        .iter()
        .map(|&x| eval_double_layer_potential(&disc, &sigma, kind, x))
        .collect();
    let u_exact: Vec<f64> = targets
        .iter()
        .map(|&x| point_charge_potential(&charges, x))
        .collect::<Result<_>>()?;
    let rel_linf = relative_linf_error(&u_num, &u_exact)?;

    Ok(SolveOutcome {
        n_modes,
        m_theta,
        timings,
        truncation_warned,
        charges,
        x0,
        sigma,
        targets,
        u_num,
        u_exact,
        rel_linf,
    })
}

/// One row of a convergence study: relative l-infinity error of the
/// manufactured solve at each mode count.
pub fn convergence_row(
    curve_spec: &CurveSpec,
    problem: ProblemType,
    base: &SolveConfig,
    n_panels: usize,
    mode_counts: &[usize],
) -> Result<Vec<f64>> {
    let mut row = Vec::with_capacity(mode_counts.len());
    for &nf in mode_counts {
        let cfg = SolveConfig {
            n_panels,
            modes: ModeSelection::Fixed(nf),
            theta_grid: None,
            ..base.clone()
        };
        row.push(run_dirichlet(curve_spec, problem, &cfg)?.rel_linf);
    }
    Ok(row)
}

/// Assembly wall time alone, for scaling studies and the near-diagonal
/// kernel-path comparison.
pub fn assembly_seconds(
    curve_spec: &CurveSpec,
    problem: ProblemType,
    base: &SolveConfig,
    n_panels: usize,
    n_modes: usize,
    near_path: KernelPath,
) -> Result<f64> {
    let curve = curve_spec.build()?;
    let disc = Discretization::build(curve, n_panels, base.n_gauss)?;
    let cfg = SolveConfig {
        n_panels,
        assembly: AssemblyOptions {
            near_path,
            ..base.assembly
        },
        ..base.clone()
    };
    let t0 = Instant::now();
    let systems = assemble_systems(&disc, problem, &cfg, n_modes)?;
    let dt = t0.elapsed().as_secs_f64();
    drop(systems);
    Ok(dt)
}

/// Least-squares slope of log(y) against log(x).
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_interior_small_run_converges() {
        let cfg = SolveConfig {
            n_panels: 6,
            modes: ModeSelection::Fixed(16),
            n_targets: 6,
            ..SolveConfig::default()
        };
        let out = run_dirichlet(&CurveSpec::Sphere { radius: 1.0 }, ProblemType::Interior, &cfg)
            .unwrap();
        assert!(out.rel_linf < 1e-6, "rel error {}", out.rel_linf);
        assert_eq!(out.n_modes, 16);
        assert!(out.m_theta >= 2 * 16 + 1);
    }

    #[test]
    fn determinism_with_fixed_seed() {
        let cfg = SolveConfig {
            n_panels: 5,
            modes: ModeSelection::Fixed(8),
            n_targets: 4,
            ..SolveConfig::default()
        };
        let spec = CurveSpec::Sphere { radius: 1.0 };
        let a = run_dirichlet(&spec, ProblemType::Interior, &cfg).unwrap();
        let b = run_dirichlet(&spec, ProblemType::Interior, &cfg).unwrap();
        assert_eq!(a.rel_linf, b.rel_linf);
        assert_eq!(a.u_num, b.u_num);
    }

    #[test]
    fn tolerance_mode_selection_runs() {
        let cfg = SolveConfig {
            n_panels: 6,
            modes: ModeSelection::Tolerance(1e-8),
            n_targets: 4,
            ..SolveConfig::default()
        };
        let out = run_dirichlet(&CurveSpec::Sphere { radius: 1.0 }, ProblemType::Interior, &cfg)
            .unwrap();
        assert!(!out.truncation_warned);
        assert!(out.n_modes >= 4 && out.n_modes <= 60, "picked {}", out.n_modes);
        assert!(out.rel_linf < 1e-5);
    }

    #[test]
    fn exterior_needs_inside_reference_point() {
        let cfg = SolveConfig {
            n_panels: 6,
            modes: ModeSelection::Fixed(8),
            x0: Some((5.0, 0.0)),
            ..SolveConfig::default()
        };
        assert!(matches!(
            run_dirichlet(&CurveSpec::Sphere { radius: 1.0 }, ProblemType::Exterior, &cfg),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn slope_helper_recovers_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|&x: &f64| 3.0 * x.powf(1.7)).collect();
        let s = log_log_slope(&xs, &ys);
        assert!((s - 1.7).abs() < 1e-12);
    }
}
