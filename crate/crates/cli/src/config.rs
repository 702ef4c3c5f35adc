//! Run configuration: command-line flags merged over a plain key=value
//! config file (flags win), resolved into validated physics inputs.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use qshje::climit::Observable;
use qshje::microstate::{self, Microstate, PhysicalSetup};
use qshje::potentials::PotentialModel;
use qshje::trajectory::ReducedActionConvention;

use crate::CliError;

/// Flags shared by every subcommand. Every field is optional here; defaults
/// apply only after the config file has been merged underneath.
#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// Plain key=value config file; command-line flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Potential model: free | step | linear.
    #[arg(long)]
    pub potential: Option<String>,

    /// Step barrier height U (step potential).
    #[arg(long = "U")]
    pub barrier: Option<f64>,

    /// Constant force f (linear potential).
    #[arg(long = "f")]
    pub force: Option<f64>,

    /// Mass m (default 1).
    #[arg(long = "m")]
    pub mass: Option<f64>,

    /// Energy E (default 0.5).
    #[arg(long = "E")]
    pub energy: Option<f64>,

    /// Planck parameter hbar (default 1); an independent variable here.
    #[arg(long)]
    pub hbar: Option<f64>,

    /// Geometric hbar grid as start:stop:points.
    #[arg(long = "hbar-grid")]
    pub hbar_grid: Option<String>,

    /// Microstate coefficients as a,b,c.
    #[arg(long)]
    pub abc: Option<String>,

    /// Microstate initial values as x0,Wx0,Wxx0 (converted once).
    #[arg(long)]
    pub initials: Option<String>,

    /// Evaluation point x.
    #[arg(long)]
    pub x: Option<f64>,

    /// Linear x grid as start:stop:points.
    #[arg(long = "x-grid")]
    pub x_grid: Option<String>,

    /// Observable for sweeps: Wx | W | W_over_hbar | t_minus_t0 |
    /// quantum_term | residual | turning_width.
    #[arg(long)]
    pub observable: Option<String>,

    /// Output format: csv | json (default csv).
    #[arg(long)]
    pub format: Option<String>,

    /// Output path (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Reduced-action branch: unwrapped | principal (default unwrapped).
    #[arg(long)]
    pub convention: Option<String>,

    /// Indeterminacy amplitude law eta(hbar), grammar: c0*hbar^p + c1.
    #[arg(long)]
    pub eta: Option<String>,

    /// Oscillation phase for the eta family (default pi/2).
    #[arg(long = "eta-phase")]
    pub eta_phase: Option<f64>,

    /// Relative threshold for the turning-region width (default 0.05).
    #[arg(long)]
    pub epsilon: Option<f64>,

    /// Random microstates for residual-audit (default 200).
    #[arg(long)]
    pub samples: Option<u64>,

    /// RNG seed for residual-audit (default 0).
    #[arg(long)]
    pub seed: Option<u64>,

    /// residual-audit: exit 3 when max |residual|/scale exceeds this.
    #[arg(long = "fail-above")]
    pub fail_above: Option<f64>,
}

impl CommonArgs {
    /// Merges a key=value config file underneath the flags.
    pub fn merged_with_file(mut self) -> Result<Self, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut kv = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Config(format!(
                    "{}:{}: expected key=value, got '{line}'",
                    path.display(),
                    lineno + 1
                )));
            };
            kv.insert(key.trim().to_string(), value.trim().to_string());
        }
        let parse_f64 = |kv: &BTreeMap<String, String>, key: &str| -> Result<Option<f64>, CliError> {
            kv.get(key)
                .map(|v| {
                    v.parse::<f64>()
                        .map_err(|_| CliError::Config(format!("config key {key}: bad number '{v}'")))
                })
                .transpose()
        };
        let parse_u64 = |kv: &BTreeMap<String, String>, key: &str| -> Result<Option<u64>, CliError> {
            kv.get(key)
                .map(|v| {
                    v.parse::<u64>()
                        .map_err(|_| CliError::Config(format!("config key {key}: bad integer '{v}'")))
                })
                .transpose()
        };
        const KNOWN: [&str; 20] = [
            "potential", "U", "f", "m", "E", "hbar", "hbar-grid", "abc", "initials", "x",
            "x-grid", "observable", "format", "out", "convention", "eta", "eta-phase",
            "epsilon", "samples", "seed",
        ];
        for key in kv.keys() {
            if !KNOWN.contains(&key.as_str()) && key != "fail-above" {
                return Err(CliError::Config(format!("unknown config key '{key}'")));
            }
        }
        self.potential = self.potential.or_else(|| kv.get("potential").cloned());
        self.barrier = self.barrier.or(parse_f64(&kv, "U")?);
        self.force = self.force.or(parse_f64(&kv, "f")?);
        self.mass = self.mass.or(parse_f64(&kv, "m")?);
        self.energy = self.energy.or(parse_f64(&kv, "E")?);
        self.hbar = self.hbar.or(parse_f64(&kv, "hbar")?);
        self.hbar_grid = self.hbar_grid.or_else(|| kv.get("hbar-grid").cloned());
        self.abc = self.abc.or_else(|| kv.get("abc").cloned());
        self.initials = self.initials.or_else(|| kv.get("initials").cloned());
        self.x = self.x.or(parse_f64(&kv, "x")?);
        self.x_grid = self.x_grid.or_else(|| kv.get("x-grid").cloned());
        self.observable = self.observable.or_else(|| kv.get("observable").cloned());
        self.format = self.format.or_else(|| kv.get("format").cloned());
        self.out = self.out.or_else(|| kv.get("out").map(PathBuf::from));
        self.convention = self.convention.or_else(|| kv.get("convention").cloned());
        self.eta = self.eta.or_else(|| kv.get("eta").cloned());
        self.eta_phase = self.eta_phase.or(parse_f64(&kv, "eta-phase")?);
        self.epsilon = self.epsilon.or(parse_f64(&kv, "epsilon")?);
        self.samples = self.samples.or(parse_u64(&kv, "samples")?);
        self.seed = self.seed.or(parse_u64(&kv, "seed")?);
        self.fail_above = self.fail_above.or(parse_f64(&kv, "fail-above")?);
        Ok(self)
    }
}

/// A parsed start:stop:points grid specification.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

pub fn parse_grid_spec(spec: &str, what: &str) -> Result<GridSpec, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "{what} grid must be start:stop:points, got '{spec}'"
        )));
    }
    let start = parts[0]
        .parse::<f64>()
        .map_err(|_| CliError::Config(format!("{what} grid: bad start '{}'", parts[0])))?;
    let stop = parts[1]
        .parse::<f64>()
        .map_err(|_| CliError::Config(format!("{what} grid: bad stop '{}'", parts[1])))?;
    let points = parts[2]
        .parse::<usize>()
        .map_err(|_| CliError::Config(format!("{what} grid: bad point count '{}'", parts[2])))?;
    if points == 0 {
        return Err(CliError::Config(format!("{what} grid: empty grid")));
    }
    Ok(GridSpec { start, stop, points })
}

fn parse_triple(spec: &str, what: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "{what} must be three comma-separated numbers, got '{spec}'"
        )));
    }
    let mut out = [0.0; 3];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p
            .trim()
            .parse::<f64>()
            .map_err(|_| CliError::Config(format!("{what}: bad number '{p}'")))?;
    }
    Ok(out)
}

/// eta(hbar) = c0 * hbar^p + c1, the restricted sweep grammar.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EtaExpr {
    pub c0: f64,
    pub p: f64,
    pub c1: f64,
}

impl EtaExpr {
    pub fn eval(&self, hbar: f64) -> f64 {
        self.c0 * hbar.powf(self.p) + self.c1
    }
}

pub fn parse_eta(expr: &str) -> Result<EtaExpr, CliError> {
    let bad = |msg: &str| CliError::Config(format!("eta expression '{expr}': {msg}"));
    let mut c0 = 0.0;
    let mut p = 1.0;
    let mut c1 = 0.0;
    let mut saw_hbar = false;
    let mut saw_const = false;
    for term in expr.split('+') {
        let term = term.trim().replace(' ', "");
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        if let Some(pos) = term.find("hbar") {
            if saw_hbar {
                return Err(bad("at most one hbar term"));
            }
            saw_hbar = true;
            let coeff = &term[..pos];
            c0 = match coeff.strip_suffix('*') {
                None if coeff.is_empty() => 1.0,
                Some(c) => c
                    .parse::<f64>()
                    .map_err(|_| bad(&format!("bad coefficient '{c}'")))?,
                None => return Err(bad("coefficient must be followed by '*'")),
            };
            let rest = &term[pos + 4..];
            p = match rest.strip_prefix('^') {
                None if rest.is_empty() => 1.0,
                Some(e) => e
                    .parse::<f64>()
                    .map_err(|_| bad(&format!("bad exponent '{e}'")))?,
                None => return Err(bad(&format!("unexpected trailing '{rest}'"))),
            };
        } else {
            if saw_const {
                return Err(bad("at most one constant term"));
            }
            saw_const = true;
            c1 = term
                .parse::<f64>()
                .map_err(|_| bad(&format!("bad constant '{term}'")))?;
        }
    }
    if !saw_hbar && !saw_const {
        return Err(bad("no terms"));
    }
    Ok(EtaExpr { c0, p, c1 })
}

/// Fully resolved run inputs, also serialized into every JSON summary.
#[derive(Debug, Clone, Serialize)]
pub struct ResolvedConfig {
    pub command: String,
    pub potential: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub barrier: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub force: Option<f64>,
    pub mass: f64,
    pub energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hbar: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hbar_grid: Option<GridSpec>,
    /// Resolved coefficient triple (after any initial-value conversion).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abc: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initials: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_grid: Option<GridSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observable: Option<String>,
    pub convention: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<EtaExpr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_phase: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub format: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Everything a command needs to run.
pub struct Resolved {
    pub args: CommonArgs,
    pub potential: PotentialModel,
    pub mass: f64,
    pub energy: f64,
    pub format: OutputFormat,
    pub convention: ReducedActionConvention,
}

impl Resolved {
    pub fn from_args(args: CommonArgs) -> Result<Self, CliError> {
        let args = args.merged_with_file()?;
        let mass = args.mass.unwrap_or(1.0);
        let energy = args.energy.unwrap_or(0.5);
        let potential = match args.potential.as_deref().unwrap_or("free") {
            "free" => PotentialModel::Free,
            "step" => PotentialModel::Step {
                barrier: args
                    .barrier
                    .ok_or_else(|| CliError::Config("step potential needs --U".into()))?,
            },
            "linear" => PotentialModel::Linear {
                force: args
                    .force
                    .ok_or_else(|| CliError::Config("linear potential needs --f".into()))?,
            },
            other => {
                return Err(CliError::Config(format!(
                    "unknown potential '{other}' (expected free, step or linear)"
                )))
            }
        };
        let format = match args.format.as_deref().unwrap_or("csv") {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            other => {
                return Err(CliError::Config(format!(
                    "unknown format '{other}' (expected csv or json)"
                )))
            }
        };
        let convention = match args.convention.as_deref().unwrap_or("unwrapped") {
            "unwrapped" => ReducedActionConvention::Unwrapped,
            "principal" => ReducedActionConvention::Principal,
            other => {
                return Err(CliError::Config(format!(
                    "unknown convention '{other}' (expected unwrapped or principal)"
                )))
            }
        };
        Ok(Resolved {
            args,
            potential,
            mass,
            energy,
            format,
            convention,
        })
    }

    /// Setup at an explicit hbar.
    pub fn setup_at(&self, hbar: f64) -> Result<PhysicalSetup, CliError> {
        PhysicalSetup::new(self.mass, self.energy, hbar, self.potential).map_err(CliError::from)
    }

    /// The single-hbar setup (--hbar, default 1).
    pub fn setup(&self) -> Result<PhysicalSetup, CliError> {
        self.setup_at(self.args.hbar.unwrap_or(1.0))
    }

    /// hbar used for one-off conversions when only a grid was supplied.
    pub fn conversion_hbar(&self) -> Result<f64, CliError> {
        if let Some(h) = self.args.hbar {
            return Ok(h);
        }
        if let Some(spec) = &self.args.hbar_grid {
            return Ok(parse_grid_spec(spec, "hbar")?.start);
        }
        Ok(1.0)
    }

    /// Resolves the microstate: exactly one of --abc / --initials.
    pub fn microstate(&self) -> Result<(Microstate, Option<[f64; 3]>), CliError> {
        match (&self.args.abc, &self.args.initials) {
            (Some(_), Some(_)) => Err(CliError::Config(
                "supply exactly one of --abc and --initials, not both".into(),
            )),
            (None, None) => Err(CliError::Config(
                "a microstate is required: supply --abc a,b,c or --initials x0,Wx0,Wxx0".into(),
            )),
            (Some(abc), None) => {
                let [a, b, c] = parse_triple(abc, "--abc")?;
                Ok((Microstate::new(a, b, c)?, None))
            }
            (None, Some(initials)) => {
                let [x0, wx0, wxx0] = parse_triple(initials, "--initials")?;
                let setup = self.setup_at(self.conversion_hbar()?)?;
                let ms = microstate::coefficients_from_initials(&setup, x0, wx0, wxx0)?;
                Ok((ms, Some([x0, wx0, wxx0])))
            }
        }
    }

    pub fn hbar_grid(&self) -> Result<Vec<f64>, CliError> {
        let spec = self
            .args
            .hbar_grid
            .as_deref()
            .ok_or_else(|| CliError::Config("an hbar grid is required: --hbar-grid start:stop:points".into()))?;
        let g = parse_grid_spec(spec, "hbar")?;
        if g.points < 2 {
            return Err(CliError::Config("hbar grid needs at least 2 points".into()));
        }
        qshje::climit::geometric_grid(g.start, g.stop, g.points).map_err(CliError::from)
    }

    pub fn x_grid(&self) -> Result<Vec<f64>, CliError> {
        match (&self.args.x_grid, self.args.x) {
            (Some(spec), _) => {
                let g = parse_grid_spec(spec, "x")?;
                if g.points == 1 {
                    return Ok(vec![g.start]);
                }
                Ok((0..g.points)
                    .map(|i| g.start + (g.stop - g.start) * i as f64 / (g.points - 1) as f64)
                    .collect())
            }
            (None, Some(x)) => Ok(vec![x]),
            (None, None) => Err(CliError::Config(
                "an evaluation grid is required: --x or --x-grid start:stop:points".into(),
            )),
        }
    }

    pub fn observable(&self) -> Result<Observable, CliError> {
        self.args
            .observable
            .as_deref()
            .unwrap_or("Wx")
            .parse::<Observable>()
            .map_err(CliError::from)
    }

    pub fn resolved_config(
        &self,
        command: &str,
        abc: Option<[f64; 3]>,
        initials: Option<[f64; 3]>,
    ) -> ResolvedConfig {
        let (barrier, force) = match self.potential {
            PotentialModel::Free => (None, None),
            PotentialModel::Step { barrier } => (Some(barrier), None),
            PotentialModel::Linear { force } => (None, Some(force)),
        };
        ResolvedConfig {
            command: command.to_string(),
            potential: match self.potential {
                PotentialModel::Free => "free",
                PotentialModel::Step { .. } => "step",
                PotentialModel::Linear { .. } => "linear",
            }
            .to_string(),
            barrier,
            force,
            mass: self.mass,
            energy: self.energy,
            hbar: self.args.hbar,
            hbar_grid: self
                .args
                .hbar_grid
                .as_deref()
                .and_then(|s| parse_grid_spec(s, "hbar").ok()),
            abc,
            initials,
            x: self.args.x,
            x_grid: self
                .args
                .x_grid
                .as_deref()
                .and_then(|s| parse_grid_spec(s, "x").ok()),
            observable: self.args.observable.clone(),
            convention: match self.convention {
                ReducedActionConvention::Unwrapped => "unwrapped",
                ReducedActionConvention::Principal => "principal",
            }
            .to_string(),
            eta: self.args.eta.as_deref().and_then(|e| parse_eta(e).ok()),
            eta_phase: self.args.eta_phase,
            epsilon: self.args.epsilon,
            samples: self.args.samples,
            seed: self.args.seed,
            format: match self.format {
                OutputFormat::Csv => "csv",
                OutputFormat::Json => "json",
            }
            .to_string(),
            out: self
                .args
                .out
                .as_ref()
                .map(|p| p.display().to_string()),
        }
    }
}
