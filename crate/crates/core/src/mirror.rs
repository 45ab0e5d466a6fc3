//! Thin-mirror models: the delta-layer susceptibility amplitude eta(omega)
//! and the bare cavity loss rate it implies.
//!
//! The mirror at the cavity boundary is a delta-function susceptibility of
//! amplitude `eta(omega)` (units of length). A metallic Drude mirror gives
//! `eta ~ omega^-2`; the family implemented here is the power law
//!
//! ```text
//! eta(omega) = eta_ref * (omega_ref / omega)^p ,
//! ```
//!
//! with `p = 2` (Drude), `p = 1`, `p = 0` (frequency-flat) the cases of
//! interest. The empty cavity then leaks photons at the bare rate
//!
//! ```text
//! kappa_0(omega) = 2 c^3 / (omega^2 eta(omega)^2 L_cav) ,
//! ```
//!
//! valid in the good-mirror regime `omega eta / c >> 1`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Frequency magnitudes at or below this are refused by the power law.
pub const ZERO_FREQ_TOL: f64 = 1e-300;

/// Analytic thin-mirror model, evaluable at complex frequency.
///
/// The `PowerLaw` variant is the only one today; the enum leaves the door
/// open for tabulated or multi-resonance mirrors without breaking the API.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MirrorModel {
    PowerLaw {
        /// eta at the reference frequency (units of length).
        eta_ref: f64,
        /// Reference frequency at which `eta = eta_ref` exactly.
        omega_ref: f64,
        /// Power-law exponent p >= 0.
        exponent: f64,
    },
}

impl MirrorModel {
    /// Validated power-law constructor.
    pub fn power_law(eta_ref: f64, omega_ref: f64, exponent: f64) -> Result<Self> {
        if !(eta_ref.is_finite() && eta_ref > 0.0) {
            return Err(Error::InvalidParameter {
                name: "eta_ref",
                reason: format!("must be finite and > 0, got {eta_ref}"),
            });
        }
        if !(omega_ref.is_finite() && omega_ref > 0.0) {
            return Err(Error::InvalidParameter {
                name: "omega_ref",
                reason: format!("must be finite and > 0, got {omega_ref}"),
            });
        }
        if !(exponent.is_finite() && exponent >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "p",
                reason: format!("must be finite and >= 0, got {exponent}"),
            });
        }
        Ok(MirrorModel::PowerLaw {
            eta_ref,
            omega_ref,
            exponent,
        })
    }

    /// The Drude mirror of the reference configuration: eta_ref^2 = 2000/pi
    /// at omega_ref = 1 with p = 2, so that kappa_0(1) = 1e-3 in natural
    /// units (c = 1, L_cav = pi).
    pub fn reference_drude() -> Self {
        MirrorModel::PowerLaw {
            eta_ref: (2000.0 / std::f64::consts::PI).sqrt(),
            omega_ref: 1.0,
            exponent: 2.0,
        }
    }

    /// Same mirror with `eta_ref` multiplied by `factor` (a better mirror
    /// for factor > 1); used for convergence studies toward the
    /// perfect-mirror limit.
    pub fn scaled_eta(&self, factor: f64) -> Result<Self> {
        let MirrorModel::PowerLaw {
            eta_ref,
            omega_ref,
            exponent,
        } = *self;
        MirrorModel::power_law(eta_ref * factor, omega_ref, exponent)
    }

    /// eta(omega) at complex frequency, principal branch of the power.
    /// Real positive frequencies take a purely real path so no imaginary
    /// dust leaks in.
    pub fn eta(&self, omega: Complex64) -> Result<Complex64> {
        let MirrorModel::PowerLaw {
            eta_ref,
            omega_ref,
            exponent,
        } = *self;
        if omega.norm() <= ZERO_FREQ_TOL {
            return Err(Error::ZeroFrequency);
        }
        if omega.im == 0.0 && omega.re > 0.0 {
            return Ok(Complex64::new(eta_ref * (omega_ref / omega.re).powf(exponent), 0.0));
        }
        Ok(eta_ref * (omega_ref / omega).powf(exponent))
    }

    /// eta at a real positive frequency.
    pub fn eta_real(&self, omega: f64) -> Result<f64> {
        Ok(self.eta(Complex64::new(omega, 0.0))?.re)
    }

    /// Bare loss rate kappa_0(omega) = 2 c^3 / (omega^2 eta(omega)^2 L_cav)
    /// of the empty cavity.
    pub fn kappa0(&self, params: &SystemParams, omega: f64) -> Result<f64> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidParameter {
                name: "omega",
                reason: format!("kappa_0 needs omega > 0, got {omega}"),
            });
        }
        let eta = self.eta_real(omega)?;
        let c = params.c;
        Ok(2.0 * c * c * c / (omega * omega * eta * eta * params.l_cav))
    }
}

impl fmt::Display for MirrorModel {
    /// The CLI mirror-spec string: `power_law:eta_ref=<f>,omega_ref=<f>,p=<f>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let MirrorModel::PowerLaw {
            eta_ref,
            omega_ref,
            exponent,
        } = self;
        write!(f, "power_law:eta_ref={eta_ref},omega_ref={omega_ref},p={exponent}")
    }
}

impl FromStr for MirrorModel {
    type Err = Error;

    /// Parses `power_law:eta_ref=<f>,omega_ref=<f>,p=<f>` (keys in any
    /// order, each exactly once).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidParameter {
            name: "mirror",
            reason,
        };
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("expected `power_law:<key>=<value>,...`, got `{s}`")))?;
        if kind != "power_law" {
            return Err(bad(format!("unknown mirror kind `{kind}`")));
        }
        let (mut eta_ref, mut omega_ref, mut exponent) = (None, None, None);
        for item in body.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("expected `<key>=<value>`, got `{item}`")))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| bad(format!("`{key}` is not a number: `{value}`")))?;
            let slot = match key.trim() {
                "eta_ref" => &mut eta_ref,
                "omega_ref" => &mut omega_ref,
                "p" => &mut exponent,
                other => return Err(bad(format!("unknown mirror key `{other}`"))),
            };
            if slot.replace(value).is_some() {
                return Err(bad(format!("duplicate mirror key `{key}`")));
            }
        }
        match (eta_ref, omega_ref, exponent) {
            (Some(e), Some(w), Some(p)) => MirrorModel::power_law(e, w, p),
            _ => Err(bad("mirror spec needs eta_ref, omega_ref and p".into())),
        }
    }
}
