//! Flat key = value run configuration with command-line overrides.

use axibie::assembly::{AssemblyOptions, KernelPath};
use axibie::driver::{CurveSpec, ModeSelection, ProblemType, SolveConfig};
use axibie::error::{Error, Result};
use std::collections::BTreeMap;
use std::path::Path;

/// Everything a run needs, validated before any computation starts.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub curve: CurveSpec,
    pub curve_name: String,
    pub problem: ProblemType,
    pub solve: SolveConfig,
    pub output_dir: String,
}

/// The default configuration as the `defaults` subcommand prints it.
pub const DEFAULTS: &str = "\
# axibie run configuration (key = value, '#' starts a comment)

# geometry: sphere | wavy_block | starfish_torus | file:<path to r,z samples>
curve = sphere
radius = 1.0            # sphere radius
scale = 1.0             # wavy_block base radius
amplitude = 0.15        # wavy_block / starfish_torus wave amplitude
waves = 4               # wavy_block / starfish_torus wave count
major = 2.0             # starfish_torus centerline radius
minor = 0.5             # starfish_torus mean tube radius

# problem
problem = interior      # interior | exterior
exterior_completion = true    # false reproduces the rank-deficient formulation
# x0_r =                # exterior reference point (default: meridian centroid)
# x0_z =

# discretization
n_panels = 10
n_gauss = 10            # fixed by the embedded rules
n_modes = 50            # highest azimuthal mode N_F (2 N_F + 1 modes total)
# tolerance =           # select N_F from boundary data instead of n_modes
# theta_grid =          # azimuthal samples (default: smallest FFT-friendly >= 4(N_F+1))

# manufactured data
n_charges = 3
n_targets = 20
seed = 7

# kernel evaluation
far_path = auto         # auto | closed | fft
near_path = auto        # auto | closed | adaptive
fft_oversample = 4
store_inverse = false   # store explicit inverses instead of LU factors

# output
output_dir = out
";

fn parse_pairs(text: &str, origin: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("{origin}:{}: expected 'key = value'", lineno + 1))
        })?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

struct Fields {
    map: BTreeMap<String, String>,
    used: std::collections::BTreeSet<String>,
}

impl Fields {
    fn raw(&mut self, key: &str) -> Option<String> {
        self.used.insert(key.to_string());
        self.map.get(key).cloned().filter(|v| !v.is_empty())
    }

    fn get<T: std::str::FromStr>(&mut self, key: &str, default: T) -> Result<T> {
        match self.raw(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| Error::Config(format!("field '{key}': cannot parse '{v}'"))),
        }
    }

    fn opt<T: std::str::FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Config(format!("field '{key}': cannot parse '{v}'"))),
        }
    }

    fn unknown(&self) -> Vec<String> {
        self.map
            .keys()
            .filter(|k| !self.used.contains(*k))
            .cloned()
            .collect()
    }
}

fn load_curve_samples(path: &str) -> Result<Vec<(f64, f64)>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("field 'curve': cannot read file '{path}': {e}")))?;
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if parts.len() != 2 {
            return Err(Error::Config(format!(
                "curve file '{path}':{}: expected 'r z' per line",
                lineno + 1
            )));
        }
        let r: f64 = parts[0].parse().map_err(|_| {
            Error::Config(format!("curve file '{path}':{}: bad radius", lineno + 1))
        })?;
        let z: f64 = parts[1].parse().map_err(|_| {
            Error::Config(format!("curve file '{path}':{}: bad height", lineno + 1))
        })?;
        points.push((r, z));
    }
    Ok(points)
}

impl RunConfig {
    /// Loads `path` (when given), then applies `key=value` overrides.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<RunConfig> {
        let mut map = parse_pairs(DEFAULTS, "defaults")?;
        if let Some(p) = path {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Config(format!("config file '{}': {e}", p.display())))?;
            map.extend(parse_pairs(&text, &p.display().to_string())?);
        }
        for ov in overrides {
            let (k, v) = ov.split_once('=').ok_or_else(|| {
                Error::Config(format!("override '{ov}': expected key=value"))
            })?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Self::from_map(map)
    }

    fn from_map(map: BTreeMap<String, String>) -> Result<RunConfig> {
        let mut f = Fields {
            map,
            used: Default::default(),
        };

        let curve_name = f.raw("curve").unwrap_or_else(|| "sphere".into());
        let curve = match curve_name.as_str() {
            "sphere" => CurveSpec::Sphere {
                radius: f.get("radius", 1.0)?,
            },
            "wavy_block" => CurveSpec::WavyBlock {
                scale: f.get("scale", 1.0)?,
                amplitude: f.get("amplitude", 0.15)?,
                waves: f.get("waves", 4u32)?,
            },
            "starfish_torus" => CurveSpec::StarfishTorus {
                major: f.get("major", 2.0)?,
                minor: f.get("minor", 0.5)?,
                amplitude: f.get("amplitude", 0.3)?,
                waves: f.get("waves", 5u32)?,
            },
            other => match other.strip_prefix("file:") {
                Some(path) => CurveSpec::Samples(load_curve_samples(path)?),
                None => {
                    return Err(Error::Config(format!(
                        "field 'curve': unknown geometry '{other}' \
                         (expected sphere | wavy_block | starfish_torus | file:<path>)"
                    )))
                }
            },
        };
        // consume geometry fields not used by this curve so they don't
        // trip the unknown-key check
        for k in ["radius", "scale", "amplitude", "waves", "major", "minor"] {
            let _ = f.raw(k);
        }

        let problem = match f.raw("problem").as_deref().unwrap_or("interior") {
            "interior" => ProblemType::Interior,
            "exterior" => ProblemType::Exterior,
            other => {
                return Err(Error::Config(format!(
                    "field 'problem': expected interior | exterior, got '{other}'"
                )))
            }
        };

        let n_modes: usize = f.get("n_modes", 50)?;
        let tolerance: Option<f64> = f.opt("tolerance")?;
        if let Some(t) = tolerance {
            if !(t > 0.0) {
                return Err(Error::Config(format!(
                    "field 'tolerance': must be positive, got {t}"
                )));
            }
        }
        let modes = match tolerance {
            Some(t) => ModeSelection::Tolerance(t),
            None => ModeSelection::Fixed(n_modes),
        };

        let far_path = parse_path(&f.raw("far_path").unwrap_or_else(|| "auto".into()), "far_path")?;
        let near_path =
            parse_path(&f.raw("near_path").unwrap_or_else(|| "auto".into()), "near_path")?;
        if far_path == KernelPath::Adaptive {
            return Err(Error::Config(
                "field 'far_path': adaptive evaluation is a near-diagonal path".into(),
            ));
        }
        if near_path == KernelPath::Fft {
            return Err(Error::Config(
                "field 'near_path': the FFT path is only accurate for well-separated pairs".into(),
            ));
        }

        let x0_r: Option<f64> = f.opt("x0_r")?;
        let x0_z: Option<f64> = f.opt("x0_z")?;
        let x0 = match (x0_r, x0_z) {
            (Some(r), Some(z)) => Some((r, z)),
            (None, None) => None,
            _ => {
                return Err(Error::Config(
                    "fields 'x0_r'/'x0_z': set both or neither".into(),
                ))
            }
        };

        let solve = SolveConfig {
            n_panels: f.get("n_panels", 10)?,
            n_gauss: f.get("n_gauss", 10)?,
            modes,
            n_charges: f.get("n_charges", 3)?,
            n_targets: f.get("n_targets", 20)?,
            seed: f.get("seed", 7)?,
            theta_grid: f.opt("theta_grid")?,
            assembly: AssemblyOptions {
                far_path,
                near_path,
                fft_oversample: f.get("fft_oversample", 4)?,
                adaptive_tol: 1e-12,
            },
            explicit_inverse: f.get("store_inverse", false)?,
            exterior_completion: f.get("exterior_completion", true)?,
            x0,
        };
        if solve.n_panels == 0 {
            return Err(Error::Config("field 'n_panels': must be >= 1".into()));
        }
        if solve.n_charges == 0 {
            return Err(Error::Config("field 'n_charges': must be >= 1".into()));
        }

        let output_dir = f.raw("output_dir").unwrap_or_else(|| "out".into());
        let unknown = f.unknown();
        if !unknown.is_empty() {
            return Err(Error::Config(format!(
                "unknown configuration fields: {}",
                unknown.join(", ")
            )));
        }
        Ok(RunConfig {
            curve,
            curve_name,
            problem,
            solve,
            output_dir,
        })
    }
}

fn parse_path(value: &str, field: &str) -> Result<KernelPath> {
    match value {
        "auto" => Ok(KernelPath::Auto),
        "closed" => Ok(KernelPath::Closed),
        "fft" => Ok(KernelPath::Fft),
        "adaptive" => Ok(KernelPath::Adaptive),
        other => Err(Error::Config(format!(
            "field '{field}': unknown kernel path '{other}'"
        ))),
    }
}
