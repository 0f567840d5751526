//! Subcommand implementations: each writes versioned CSV (and one JSON
//! summary) artifacts under the configured output directory.

use crate::config::RunConfig;
use axibie::assembly::KernelPath;
use axibie::driver::{
    assemble_systems, assembly_seconds, convergence_row, run_dirichlet, ModeSelection,
    PhaseTimings, ProblemType, SolveConfig,
};
use axibie::error::{Error, Result};
use axibie::geometry::Discretization;
use axibie::quadrature::checks::all_rule_residuals;
use axibie::solver::condition_extremes;
use serde::Serialize;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

fn ensure_dir(dir: &str) -> Result<PathBuf> {
    let p = PathBuf::from(dir);
    fs::create_dir_all(&p)?;
    Ok(p)
}

fn write_artifact(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(path)
}

#[derive(Serialize)]
struct Summary {
    schema: &'static str,
    curve: String,
    problem: &'static str,
    n_panels: usize,
    n_gauss: usize,
    n_modes: usize,
    total_modes: usize,
    m_theta: usize,
    n_charges: usize,
    n_targets: usize,
    seed: u64,
    truncation_warned: bool,
    rel_linf_error: f64,
    t_setup: f64,
    t_mat: f64,
    t_inv: f64,
    t_fft: f64,
    t_apply: f64,
}

fn problem_name(p: ProblemType) -> &'static str {
    match p {
        ProblemType::Interior => "interior",
        ProblemType::Exterior => "exterior",
    }
}

pub fn cmd_solve(cfg: &RunConfig) -> Result<()> {
    let dir = ensure_dir(&cfg.output_dir)?;
    let out = run_dirichlet(&cfg.curve, cfg.problem, &cfg.solve)?;
    if out.truncation_warned {
        eprintln!(
            "warning: boundary-data spectrum does not decay to the tolerance; \
             using the grid-limit truncation N_F = {}",
            out.n_modes
        );
    }

    let summary = Summary {
        schema: "axibie.summary.v1",
        curve: cfg.curve_name.clone(),
        problem: problem_name(cfg.problem),
        n_panels: cfg.solve.n_panels,
        n_gauss: cfg.solve.n_gauss,
        n_modes: out.n_modes,
        total_modes: 2 * out.n_modes + 1,
        m_theta: out.m_theta,
        n_charges: cfg.solve.n_charges,
        n_targets: out.targets.len(),
        seed: cfg.solve.seed,
        truncation_warned: out.truncation_warned,
        rel_linf_error: out.rel_linf,
        t_setup: out.timings.setup,
        t_mat: out.timings.mat,
        t_inv: out.timings.inv,
        t_fft: out.timings.fft,
        t_apply: out.timings.apply,
    };
    write_artifact(
        &dir,
        "summary.json",
        &serde_json::to_string_pretty(&summary).expect("serializable summary"),
    )?;

    let mut pot = String::from("# schema: axibie.potentials.v1\nx,y,z,u_num,u_exact,abs_error\n");
    for (k, t) in out.targets.iter().enumerate() {
        writeln!(
            pot,
            "{:.15e},{:.15e},{:.15e},{:.15e},{:.15e},{:.15e}",
            t[0],
            t[1],
            t[2],
            out.u_num[k],
            out.u_exact[k],
            (out.u_num[k] - out.u_exact[k]).abs()
        )
        .unwrap();
    }
    write_artifact(&dir, "potentials.csv", &pot)?;

    let mut sig = String::from("# schema: axibie.sigma.v1\nnode,theta_index,theta,sigma\n");
    for node in 0..out.sigma.n_nodes() {
        for m in 0..out.sigma.m_theta() {
            writeln!(
                sig,
                "{node},{m},{:.15e},{:.15e}",
                out.sigma.theta(m),
                out.sigma.value(node, m)
            )
            .unwrap();
        }
    }
    write_artifact(&dir, "sigma.csv", &sig)?;

    println!(
        "solved {} {} problem: N_P = {}, N_F = {} ({} modes), rel l_inf error = {:.3e}",
        cfg.curve_name,
        problem_name(cfg.problem),
        cfg.solve.n_panels,
        out.n_modes,
        2 * out.n_modes + 1,
        out.rel_linf
    );
    println!(
        "timings [s]: setup {:.3e}  mat {:.3e}  inv {:.3e}  fft {:.3e}  apply {:.3e}",
        out.timings.setup, out.timings.mat, out.timings.inv, out.timings.fft, out.timings.apply
    );
    println!("artifacts written to {}", dir.display());
    Ok(())
}

pub fn cmd_convergence(cfg: &RunConfig, panels: &[usize], modes: &[usize]) -> Result<()> {
    if panels.is_empty() || modes.is_empty() {
        return Err(Error::Config(
            "convergence study needs nonempty --panels and --modes lists".into(),
        ));
    }
    let dir = ensure_dir(&cfg.output_dir)?;
    let mut csv = String::from("# schema: axibie.convergence.v1\n");
    write!(csv, "n_panels").unwrap();
    for nf in modes {
        write!(csv, ",{}", 2 * nf + 1).unwrap();
    }
    csv.push('\n');
    for &np in panels {
        let row = convergence_row(&cfg.curve, cfg.problem, &cfg.solve, np, modes)?;
        write!(csv, "{np}").unwrap();
        for e in &row {
            write!(csv, ",{e:.5e}").unwrap();
        }
        csv.push('\n');
        println!(
            "N_P = {np:>4}: {}",
            row.iter()
                .map(|e| format!("{e:.3e}"))
                .collect::<Vec<_>>()
                .join("  ")
        );
    }
    let path = write_artifact(&dir, "convergence.csv", &csv)?;
    println!("table written to {}", path.display());
    Ok(())
}

pub fn cmd_timing(
    cfg: &RunConfig,
    panels: &[usize],
    modes: &[usize],
    compare_oracle: bool,
) -> Result<()> {
    if panels.is_empty() || modes.is_empty() {
        return Err(Error::Config(
            "timing study needs nonempty --panels and --modes lists".into(),
        ));
    }
    let dir = ensure_dir(&cfg.output_dir)?;
    let mut csv = String::from("# schema: axibie.timing.v1\n");
    csv.push_str("n_panels,total_modes,t_setup,t_mat,t_inv,t_fft,t_apply");
    if compare_oracle {
        csv.push_str(",t_mat_oracle");
    }
    csv.push('\n');
    for &np in panels {
        for &nf in modes {
            let solve = SolveConfig {
                n_panels: np,
                modes: ModeSelection::Fixed(nf),
                n_targets: 1,
                ..cfg.solve.clone()
            };
            let out = run_dirichlet(&cfg.curve, cfg.problem, &solve)?;
            let t: PhaseTimings = out.timings;
            write!(
                csv,
                "{np},{},{:.6e},{:.6e},{:.6e},{:.6e},{:.6e}",
                2 * nf + 1,
                t.setup,
                t.mat,
                t.inv,
                t.fft,
                t.apply
            )
            .unwrap();
            let mut line = format!(
                "N_P = {np:>3}, modes = {:>4}: mat {:.3e} s, inv {:.3e} s",
                2 * nf + 1,
                t.mat,
                t.inv
            );
            if compare_oracle {
                let oracle = assembly_seconds(
                    &cfg.curve,
                    cfg.problem,
                    &cfg.solve,
                    np,
                    nf,
                    KernelPath::Adaptive,
                )?;
                write!(csv, ",{oracle:.6e}").unwrap();
                write!(
                    line,
                    ", mat via adaptive oracle {:.3e} s ({:.1}x)",
                    oracle,
                    oracle / t.mat
                )
                .unwrap();
            }
            csv.push('\n');
            println!("{line}");
        }
    }
    let path = write_artifact(&dir, "timing.csv", &csv)?;
    println!("timings written to {}", path.display());
    Ok(())
}

pub fn cmd_conditioning(cfg: &RunConfig) -> Result<()> {
    let dir = ensure_dir(&cfg.output_dir)?;
    let n_modes = match cfg.solve.modes {
        ModeSelection::Fixed(n) => n,
        ModeSelection::Tolerance(_) => {
            return Err(Error::Config(
                "field 'n_modes': the conditioning study needs a fixed mode count".into(),
            ))
        }
    };
    let curve = cfg.curve.build()?;
    let disc = Discretization::build(curve, cfg.solve.n_panels, cfg.solve.n_gauss)?;
    let systems = assemble_systems(&disc, cfg.problem, &cfg.solve, n_modes)?;
    let mut csv = String::from("# schema: axibie.conditioning.v1\nn,sigma_max,sigma_min,cond\n");
    for s in &systems {
        let (smax, smin) = condition_extremes(s);
        writeln!(csv, "{},{smax:.15e},{smin:.15e},{:.15e}", s.mode(), smax / smin).unwrap();
    }
    let path = write_artifact(&dir, "conditioning.csv", &csv)?;
    let (smax, smin) = condition_extremes(&systems[0]);
    println!(
        "mode 0: sigma_max = {smax:.6e}, sigma_min = {smin:.6e}, cond = {:.6e}",
        smax / smin
    );
    println!("per-mode singular value extremes written to {}", path.display());
    Ok(())
}

pub fn cmd_quad_check(cfg: &RunConfig) -> Result<()> {
    let dir = ensure_dir(&cfg.output_dir)?;
    let rows = all_rule_residuals(cfg.solve.seed, 3)?;
    let mut csv = String::from("# schema: axibie.quadcheck.v1\nrule,param,max_residual\n");
    for r in &rows {
        writeln!(csv, "{},{},{:.6e}", r.rule, r.param, r.residual).unwrap();
        println!("{:<12} {:<10} residual {:.3e}", r.rule, r.param, r.residual);
    }
    let path = write_artifact(&dir, "quadcheck.csv", &csv)?;
    println!("residuals written to {}", path.display());
    Ok(())
}
