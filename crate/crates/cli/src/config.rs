//! Scenario files: a single self-describing TOML document per run, so every
//! produced table can be regenerated from one artifact.
//!
//! ```toml
//! [system]
//! units = "natural"        # or "si" (defaults c to the speed of light)
//! omega_x = 1.0            # matter resonance (required)
//! omega_c = 1.0            # either this or l_cav; neither defaults l_cav = pi
//! mode_index = 1
//!
//! [mirror]
//! model = "power_law:eta_ref=25.2313252202,omega_ref=1.0,p=2.0"
//! # ... or spelled out: kind = "power_law", eta_ref = ..., omega_ref = ..., p = ...
//!
//! [sweep]
//! variable = "g_over_omega_x"
//! min = 0.05
//! max = 1.0
//! points = 20
//! scale = "linear"         # or "log" (requires min > 0)
//!
//! [solver]
//! tol = 1e-12
//! max_iter = 100
//!
//! [output]
//! format = "csv"           # or "json"
//! path = "sweep.csv"
//! ```
//!
//! Unknown keys anywhere are rejected with the offending key named.

use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use polarloss_core::{MirrorModel, SystemParams};

/// Everything that can go wrong before any physics runs.
#[derive(Debug)]
pub enum CliError {
    /// The file is not valid scenario TOML; the message names the key and
    /// position.
    Parse(String),
    /// The file parsed but a field value is inadmissible.
    Validation { field: String, reason: String },
    /// Reading the scenario or writing the output failed.
    Io { path: PathBuf, source: std::io::Error },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "config parse error: {msg}"),
            CliError::Validation { field, reason } => {
                write!(f, "config validation error: {field}: {reason}")
            }
            CliError::Io { path, source } => {
                write!(f, "i/o error on {}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    /// Process exit code mandated for this error class: 1 for config
    /// problems, 2 for i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation { .. } => 1,
            CliError::Io { .. } => 2,
        }
    }
}

fn invalid(field: &str, reason: impl Into<String>) -> CliError {
    CliError::Validation {
        field: field.to_string(),
        reason: reason.into(),
    }
}

// ---------------------------------------------------------------------------
// Raw (on-disk) schema. Everything optional that has a documented default;
// deny_unknown_fields everywhere so typos surface by name.
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    system: RawSystem,
    mirror: RawMirror,
    sweep: RawSweep,
    solver: Option<RawSolver>,
    output: Option<RawOutput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    units: Option<String>,
    omega_x: f64,
    omega_c: Option<f64>,
    l_cav: Option<f64>,
    mode_index: Option<u32>,
    c: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMirror {
    model: Option<String>,
    kind: Option<String>,
    eta_ref: Option<f64>,
    omega_ref: Option<f64>,
    p: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    variable: Option<String>,
    min: f64,
    max: f64,
    points: Option<usize>,
    scale: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSolver {
    tol: Option<f64>,
    max_iter: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    format: Option<String>,
    path: Option<String>,
}

// ---------------------------------------------------------------------------
// Resolved configuration.
// ---------------------------------------------------------------------------

/// Unit system of the scenario; only the default speed of light differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    Natural,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Grid over the coupling ratio g / omega_x.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepGrid {
    pub variable: &'static str,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub scale: SweepScale,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SolverSettings {
    pub tol: f64,
    pub max_iter: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputSettings {
    pub format: OutputFormat,
    pub path: PathBuf,
}

/// A fully validated scenario, defaults applied.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub units: Units,
    /// The system at g = 0; sweeps re-derive it per grid point.
    base: SystemParams,
    pub mirror: MirrorModel,
    pub sweep: SweepGrid,
    pub solver: SolverSettings,
    pub output: OutputSettings,
}

impl ScenarioConfig {
    /// System parameters at a given coupling ratio g / omega_x.
    pub fn params_at(&self, g_ratio: f64) -> SystemParams {
        SystemParams::new(
            self.base.omega_x,
            self.base.omega_c,
            g_ratio * self.base.omega_x,
            self.base.l_cav,
            self.base.c,
            self.base.mode_index,
        )
        .expect("validated base system stays valid at any admissible g")
    }

    /// The g = 0 system the scenario describes.
    pub fn base_params(&self) -> &SystemParams {
        &self.base
    }
}

/// Echo of the resolved configuration for the JSON header.
impl Serialize for ScenarioConfig {
    fn serialize<S>(&self, s: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ScenarioConfig", 5)?;
        st.serialize_field("units", &self.units)?;
        #[derive(Serialize)]
        struct SystemEcho {
            omega_x: f64,
            omega_c: f64,
            l_cav: f64,
            c: f64,
            mode_index: u32,
        }
        st.serialize_field(
            "system",
            &SystemEcho {
                omega_x: self.base.omega_x,
                omega_c: self.base.omega_c,
                l_cav: self.base.l_cav,
                c: self.base.c,
                mode_index: self.base.mode_index,
            },
        )?;
        st.serialize_field("mirror", &self.mirror.to_string())?;
        st.serialize_field("sweep", &self.sweep)?;
        st.serialize_field("solver", &self.solver)?;
        st.serialize_field("output", &self.output)?;
        st.end()
    }
}

/// Parses and validates scenario text. Unknown keys, missing required keys
/// and type mismatches surface as [`CliError::Parse`] with the key named;
/// admissibility problems as [`CliError::Validation`] naming the field.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, CliError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    resolve(raw)
}

/// Reads a scenario file; unreadable file is an i/o error (exit 2), bad
/// content a config error (exit 1).
pub fn load_config(path: &std::path::Path) -> Result<ScenarioConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

fn resolve(raw: RawConfig) -> Result<ScenarioConfig, CliError> {
    let units = match raw.system.units.as_deref() {
        None | Some("natural") => Units::Natural,
        Some("si") => Units::Si,
        Some(other) => {
            return Err(invalid(
                "system.units",
                format!("expected \"natural\" or \"si\", got \"{other}\""),
            ))
        }
    };

    let c = raw.system.c.unwrap_or(match units {
        Units::Natural => 1.0,
        Units::Si => 299_792_458.0,
    });
    let mode_index = raw.system.mode_index.unwrap_or(1);

    let base = build_system(&raw.system, c, mode_index)?;

    let mirror = build_mirror(&raw.mirror)?;

    let sweep = build_sweep(&raw.sweep)?;

    let solver = {
        let raw = raw.solver.unwrap_or(RawSolver {
            tol: None,
            max_iter: None,
        });
        let tol = raw.tol.unwrap_or(1e-12);
        if !(tol.is_finite() && tol > 0.0) {
            return Err(invalid("solver.tol", format!("must be > 0, got {tol}")));
        }
        let max_iter = raw.max_iter.unwrap_or(100);
        if max_iter == 0 {
            return Err(invalid("solver.max_iter", "must be at least 1"));
        }
        SolverSettings { tol, max_iter }
    };

    let output = {
        let raw = raw.output.unwrap_or(RawOutput {
            format: None,
            path: None,
        });
        let format = match raw.format.as_deref() {
            None | Some("csv") => OutputFormat::Csv,
            Some("json") => OutputFormat::Json,
            Some(other) => {
                return Err(invalid(
                    "output.format",
                    format!("expected \"csv\" or \"json\", got \"{other}\""),
                ))
            }
        };
        let path = raw.path.unwrap_or_else(|| "sweep.csv".to_string());
        if path.is_empty() {
            return Err(invalid("output.path", "must not be empty"));
        }
        OutputSettings {
            format,
            path: PathBuf::from(path),
        }
    };

    Ok(ScenarioConfig {
        units,
        base,
        mirror,
        sweep,
        solver,
        output,
    })
}

fn build_system(raw: &RawSystem, c: f64, mode_index: u32) -> Result<SystemParams, CliError> {
    if !(raw.omega_x.is_finite() && raw.omega_x > 0.0) {
        return Err(invalid(
            "system.omega_x",
            format!("must be finite and > 0, got {}", raw.omega_x),
        ));
    }
    let base = match (raw.omega_c, raw.l_cav) {
        (Some(_), Some(_)) => {
            return Err(invalid(
                "system.omega_c",
                "give either omega_c or l_cav, not both",
            ))
        }
        (Some(omega_c), None) => {
            SystemParams::from_cavity_frequency(raw.omega_x, 0.0, omega_c, c, mode_index)
        }
        (None, Some(l_cav)) => SystemParams::from_geometry(raw.omega_x, 0.0, l_cav, c, mode_index),
        (None, None) => {
            SystemParams::from_geometry(raw.omega_x, 0.0, std::f64::consts::PI, c, mode_index)
        }
    };
    base.map_err(|e| invalid("system", e.to_string()))
}

fn build_mirror(raw: &RawMirror) -> Result<MirrorModel, CliError> {
    match (&raw.model, &raw.kind) {
        (Some(model), None) => {
            if raw.eta_ref.is_some() || raw.omega_ref.is_some() || raw.p.is_some() {
                return Err(invalid(
                    "mirror.model",
                    "a model string cannot be combined with spelled-out fields",
                ));
            }
            model
                .parse::<MirrorModel>()
                .map_err(|e| invalid("mirror.model", e.to_string()))
        }
        (None, Some(kind)) => {
            if kind != "power_law" {
                return Err(invalid(
                    "mirror.kind",
                    format!("unknown mirror kind \"{kind}\""),
                ));
            }
            let eta_ref = raw
                .eta_ref
                .ok_or_else(|| invalid("mirror.eta_ref", "required for kind = \"power_law\""))?;
            let omega_ref = raw
                .omega_ref
                .ok_or_else(|| invalid("mirror.omega_ref", "required for kind = \"power_law\""))?;
            let p = raw
                .p
                .ok_or_else(|| invalid("mirror.p", "required for kind = \"power_law\""))?;
            MirrorModel::power_law(eta_ref, omega_ref, p).map_err(|e| invalid("mirror", e.to_string()))
        }
        (Some(_), Some(_)) => Err(invalid(
            "mirror.kind",
            "give either a model string or spelled-out fields, not both",
        )),
        (None, None) => Err(invalid(
            "mirror.model",
            "mirror block needs a model string or kind = \"power_law\" with fields",
        )),
    }
}

fn build_sweep(raw: &RawSweep) -> Result<SweepGrid, CliError> {
    match raw.variable.as_deref() {
        None | Some("g_over_omega_x") => {}
        Some(other) => {
            return Err(invalid(
                "sweep.variable",
                format!("only \"g_over_omega_x\" is supported, got \"{other}\""),
            ))
        }
    }
    let (min, max) = (raw.min, raw.max);
    if !(min.is_finite() && min >= 0.0) {
        return Err(invalid("sweep.min", format!("must be >= 0, got {min}")));
    }
    if !(max.is_finite() && max <= 1.5) {
        return Err(invalid("sweep.max", format!("must be <= 1.5, got {max}")));
    }
    if min > max {
        return Err(invalid(
            "sweep.min",
            format!("must not exceed max ({min} > {max})"),
        ));
    }
    let points = raw.points.unwrap_or(20);
    if points < 2 {
        return Err(invalid(
            "sweep.points",
            format!("need at least 2 grid points, got {points}"),
        ));
    }
    let scale = match raw.scale.as_deref() {
        None | Some("linear") => SweepScale::Linear,
        Some("log") => SweepScale::Log,
        Some(other) => {
            return Err(invalid(
                "sweep.scale",
                format!("expected \"linear\" or \"log\", got \"{other}\""),
            ))
        }
    };
    if scale == SweepScale::Log && min <= 0.0 {
        return Err(invalid("sweep.scale", "log scale requires min > 0"));
    }
    Ok(SweepGrid {
        variable: "g_over_omega_x",
        min,
        max,
        points,
        scale,
    })
}
