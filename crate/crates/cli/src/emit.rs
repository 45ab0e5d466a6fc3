//! Table emission. The CSV layout is part of the tool's contract: column
//! order and 12-significant-digit numbers are fixed so downstream plots and
//! diffs are stable byte-for-byte.

use std::io::Write;

use serde::Serialize;

use crate::config::{CliError, OutputFormat, ScenarioConfig};
use crate::sweep::SweepRow;

/// Fixed CSV column order.
pub const CSV_HEADER: &str = "g_over_omega_x,omega_L,omega_U,kappa_std_L,kappa_std_U,\
kappa_elec_L,kappa_elec_U,kappa_mag_L,kappa_mag_U,kappa_mbc_L,kappa_mbc_U,\
mbc_status_L,mbc_status_U";

/// 12 significant digits, scientific notation.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Empty cell for a rate whose solver did not converge; the status column
/// carries the reason.
fn sig12_opt(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

/// Renders rows as CSV text (header + one line per grid point).
pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 + 256 * rows.len());
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let r = &row.report;
        let cells = [
            sig12(row.g_ratio),
            sig12(r.lower.omega),
            sig12(r.upper.omega),
            sig12(r.lower.kappa_standard),
            sig12(r.upper.kappa_standard),
            sig12(r.lower.kappa_electric),
            sig12(r.upper.kappa_electric),
            sig12(r.lower.kappa_magnetic),
            sig12(r.upper.kappa_magnetic),
            sig12_opt(r.lower.kappa_maxwell),
            sig12_opt(r.upper.kappa_maxwell),
            row.status_lower.clone(),
            row.status_upper.clone(),
        ];
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// One JSON row, mirroring the CSV fields.
#[derive(Serialize)]
struct JsonRow<'a> {
    g_over_omega_x: f64,
    omega_l: f64,
    omega_u: f64,
    kappa_std_l: f64,
    kappa_std_u: f64,
    kappa_elec_l: f64,
    kappa_elec_u: f64,
    kappa_mag_l: f64,
    kappa_mag_u: f64,
    kappa_mbc_l: Option<f64>,
    kappa_mbc_u: Option<f64>,
    mbc_status_l: &'a str,
    mbc_status_u: &'a str,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    config: &'a ScenarioConfig,
    rows: Vec<JsonRow<'a>>,
}

/// Renders rows as a JSON document with the resolved configuration echoed
/// in the header, so the file alone reproduces the run.
pub fn render_json(config: &ScenarioConfig, rows: &[SweepRow]) -> String {
    let doc = JsonDocument {
        config,
        rows: rows
            .iter()
            .map(|row| {
                let r = &row.report;
                JsonRow {
                    g_over_omega_x: row.g_ratio,
                    omega_l: r.lower.omega,
                    omega_u: r.upper.omega,
                    kappa_std_l: r.lower.kappa_standard,
                    kappa_std_u: r.upper.kappa_standard,
                    kappa_elec_l: r.lower.kappa_electric,
                    kappa_elec_u: r.upper.kappa_electric,
                    kappa_mag_l: r.lower.kappa_magnetic,
                    kappa_mag_u: r.upper.kappa_magnetic,
                    kappa_mbc_l: r.lower.kappa_maxwell,
                    kappa_mbc_u: r.upper.kappa_maxwell,
                    mbc_status_l: &row.status_lower,
                    mbc_status_u: &row.status_upper,
                }
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    text
}

/// Writes the table in the configured format to the configured path.
pub fn write_output(config: &ScenarioConfig, rows: &[SweepRow]) -> Result<(), CliError> {
    let text = match config.output.format {
        OutputFormat::Csv => render_csv(rows),
        OutputFormat::Json => render_json(config, rows),
    };
    let io_err = |source: std::io::Error| CliError::Io {
        path: config.output.path.clone(),
        source,
    };
    let mut file = std::fs::File::create(&config.output.path).map_err(io_err)?;
    file.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::sweep::run_sweep;

    fn rows_and_config() -> (ScenarioConfig, Vec<SweepRow>) {
        let cfg = parse_config(
            r#"
[system]
omega_x = 1.0

[mirror]
model = "power_law:eta_ref=25.231325220201604,omega_ref=1.0,p=2.0"

[sweep]
min = 0.1
max = 0.3
points = 3
"#,
        )
        .unwrap();
        let rows = run_sweep(&cfg).unwrap();
        (cfg, rows)
    }

    #[test]
    fn csv_shape_and_significant_digits() {
        let (_, rows) = rows_and_config();
        let text = render_csv(&rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], CSV_HEADER);
        for line in &lines[1..] {
            let cells: Vec<&str> = line.split(',').collect();
            assert_eq!(cells.len(), 13);
            // 12 significant digits: d.ddddddddddde±e
            let mantissa = cells[1].split('e').next().unwrap();
            assert_eq!(mantissa.trim_start_matches('-').replace('.', "").len(), 12);
            assert_eq!(cells[11], "ok");
            assert_eq!(cells[12], "ok");
        }
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn rendering_is_deterministic() {
        let (cfg_a, rows_a) = rows_and_config();
        let (cfg_b, rows_b) = rows_and_config();
        assert_eq!(render_csv(&rows_a), render_csv(&rows_b));
        assert_eq!(render_json(&cfg_a, &rows_a), render_json(&cfg_b, &rows_b));
    }

    #[test]
    fn json_mirrors_rows_and_echoes_config() {
        let (cfg, rows) = rows_and_config();
        let text = render_json(&cfg, &rows);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
        assert_eq!(doc["config"]["sweep"]["points"], 3);
        assert_eq!(doc["config"]["system"]["omega_x"], 1.0);
        assert!(doc["config"]["mirror"]
            .as_str()
            .unwrap()
            .starts_with("power_law:"));
        assert_eq!(doc["rows"][0]["mbc_status_l"], "ok");
        assert!(doc["rows"][0]["kappa_mbc_l"].is_f64());
    }

    #[test]
    fn failed_branches_leave_the_rate_cell_empty() {
        let (cfg, mut rows) = rows_and_config();
        rows[1].report.lower.kappa_maxwell = None;
        rows[1].status_lower = "no_convergence".to_string();
        let text = render_csv(&rows);
        let line = text.lines().nth(2).unwrap();
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[9], "");
        assert_eq!(cells[11], "no_convergence");
        let json = render_json(&cfg, &rows);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(doc["rows"][1]["kappa_mbc_l"].is_null());
    }
}
