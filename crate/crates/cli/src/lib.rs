//! `polarloss`: sweeps and single-point comparisons of polariton loss
//! rates — three Hamiltonian-based formulas against the Maxwell
//! boundary-condition reference — driven by one TOML scenario per run.

pub mod config;
pub mod emit;
pub mod sweep;

use std::fmt::Write as _;
use std::path::Path;

use config::{CliError, ScenarioConfig};
use polarloss_core::RateMethod;
use sweep::SweepRow;

/// `sweep --config <file>`: computes the whole grid and writes the table.
/// Returns the one-line summary printed to standard output.
pub fn cmd_sweep(config_path: &Path) -> Result<String, CliError> {
    let config = config::load_config(config_path)?;
    let rows = sweep::run_sweep(&config)?;
    emit::write_output(&config, &rows)?;
    Ok(format!(
        "wrote {} ({} rows)",
        config.output.path.display(),
        rows.len()
    ))
}

/// `compare --config <file> [--g <ratio>]`: one grid point, all four
/// methods side by side with deviations against the Maxwell reference.
/// Defaults to the sweep upper bound, the most strongly coupled point of
/// the scenario.
pub fn cmd_compare(config_path: &Path, g_ratio: Option<f64>) -> Result<String, CliError> {
    let config = config::load_config(config_path)?;
    let g_ratio = validated_ratio(&config, g_ratio)?;
    let row = sweep::run_point(&config, g_ratio)?;
    Ok(render_compare(&row))
}

/// `modes --config <file> [--g <ratio>]`: polariton eigenfrequencies and
/// Hopfield coefficients at one grid point.
pub fn cmd_modes(config_path: &Path, g_ratio: Option<f64>) -> Result<String, CliError> {
    let config = config::load_config(config_path)?;
    let g_ratio = validated_ratio(&config, g_ratio)?;
    let (lower, upper) = sweep::modes_at(&config, g_ratio)?;
    Ok(render_modes(g_ratio, &lower, &upper))
}

fn validated_ratio(config: &ScenarioConfig, g_ratio: Option<f64>) -> Result<f64, CliError> {
    let g = g_ratio.unwrap_or(config.sweep.max);
    if !(g.is_finite() && (0.0..=1.5).contains(&g)) {
        return Err(CliError::Validation {
            field: "--g".to_string(),
            reason: format!("must lie in [0, 1.5], got {g}"),
        });
    }
    Ok(g)
}

fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn render_compare(row: &SweepRow) -> String {
    let r = &row.report;
    let mut out = String::new();
    let _ = writeln!(out, "# compare at g/omega_x = {}", sig12(row.g_ratio));
    let _ = writeln!(
        out,
        "# omega_L = {}, omega_U = {}",
        sig12(r.lower.omega),
        sig12(r.upper.omega)
    );
    let _ = writeln!(
        out,
        "# mbc_status_L = {}, mbc_status_U = {}",
        row.status_lower, row.status_upper
    );
    let _ = writeln!(out, "method,kappa_L,kappa_U,rel_dev_mbc_L,rel_dev_mbc_U");
    let dev = |kappa: f64, mbc: Option<f64>| -> String {
        mbc.map(|m| sig12(kappa / m - 1.0)).unwrap_or_default()
    };
    let (mbc_l, mbc_u) = (r.lower.kappa_maxwell, r.upper.kappa_maxwell);
    for (method, kl, ku) in [
        (RateMethod::Standard, r.lower.kappa_standard, r.upper.kappa_standard),
        (RateMethod::Electric, r.lower.kappa_electric, r.upper.kappa_electric),
        (RateMethod::Magnetic, r.lower.kappa_magnetic, r.upper.kappa_magnetic),
    ] {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            method.as_str(),
            sig12(kl),
            sig12(ku),
            dev(kl, mbc_l),
            dev(ku, mbc_u)
        );
    }
    let opt = |x: Option<f64>| x.map(sig12).unwrap_or_default();
    let _ = writeln!(
        out,
        "{},{},{},,",
        RateMethod::Maxwell.as_str(),
        opt(mbc_l),
        opt(mbc_u)
    );
    out
}

fn render_modes(
    g_ratio: f64,
    lower: &polarloss_core::PolaritonMode,
    upper: &polarloss_core::PolaritonMode,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# modes at g/omega_x = {}", sig12(g_ratio));
    let _ = writeln!(out, "branch,omega,re_w,im_w,re_x,im_x,re_y,im_y,re_z,im_z");
    for m in [lower, upper] {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            m.branch.as_str(),
            sig12(m.omega),
            sig12(m.w.re),
            sig12(m.w.im),
            sig12(m.x.re),
            sig12(m.x.im),
            sig12(m.y.re),
            sig12(m.y.im),
            sig12(m.z.re),
            sig12(m.z.im)
        );
    }
    out
}
