//! Closed-system parameters: one retained cavity mode coupled to one matter
//! excitation.
//!
//! The cavity is a planar resonator of length `L_cav`; the retained mode has
//! index `m` and bare frequency `omega_c = m * pi * c / L_cav`. All formulas
//! are unit-agnostic as long as the fields are mutually consistent (natural
//! units with `c = 1` are used throughout the tests).

use crate::error::{Error, Result};

/// Geometry consistency bound: `omega_c` must equal `m*pi*c/L_cav` to this
/// relative precision.
pub const GEOMETRY_TOL: f64 = 1e-12;

/// Bare parameters of the closed cavity-matter system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Matter excitation frequency omega_x; also the internal frequency unit.
    pub omega_x: f64,
    /// Bare frequency of the retained cavity mode, omega_c = m*pi*c/L_cav.
    pub omega_c: f64,
    /// Light-matter coupling strength g (the Rabi coupling).
    pub g: f64,
    /// Cavity length.
    pub l_cav: f64,
    /// Speed of light.
    pub c: f64,
    /// Index m >= 1 of the retained cavity mode.
    pub mode_index: u32,
}

impl SystemParams {
    /// Validates every field and the geometry relation
    /// `omega_c = mode_index * pi * c / L_cav` (to [`GEOMETRY_TOL`] relative).
    pub fn new(
        omega_x: f64,
        omega_c: f64,
        g: f64,
        l_cav: f64,
        c: f64,
        mode_index: u32,
    ) -> Result<Self> {
        let positive = |name: &'static str, v: f64| -> Result<()> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    reason: format!("must be finite and > 0, got {v}"),
                })
            }
        };
        positive("omega_x", omega_x)?;
        positive("omega_c", omega_c)?;
        positive("l_cav", l_cav)?;
        positive("c", c)?;
        if !(g.is_finite() && g >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "g",
                reason: format!("must be finite and >= 0, got {g}"),
            });
        }
        if mode_index < 1 {
            return Err(Error::InvalidParameter {
                name: "mode_index",
                reason: "must be >= 1".into(),
            });
        }
        let geometric = f64::from(mode_index) * std::f64::consts::PI * c / l_cav;
        if (omega_c - geometric).abs() > GEOMETRY_TOL * omega_c {
            return Err(Error::InvalidParameter {
                name: "omega_c",
                reason: format!(
                    "inconsistent with geometry: omega_c = {omega_c} but \
                     mode_index*pi*c/L_cav = {geometric}"
                ),
            });
        }
        Ok(Self {
            omega_x,
            omega_c,
            g,
            l_cav,
            c,
            mode_index,
        })
    }

    /// Builds params from the cavity geometry, deriving
    /// `omega_c = mode_index * pi * c / L_cav`.
    pub fn from_geometry(
        omega_x: f64,
        g: f64,
        l_cav: f64,
        c: f64,
        mode_index: u32,
    ) -> Result<Self> {
        if !(l_cav.is_finite() && l_cav > 0.0) {
            return Err(Error::InvalidParameter {
                name: "l_cav",
                reason: format!("must be finite and > 0, got {l_cav}"),
            });
        }
        let omega_c = f64::from(mode_index) * std::f64::consts::PI * c / l_cav;
        Self::new(omega_x, omega_c, g, l_cav, c, mode_index)
    }

    /// Builds params from a given cavity frequency, deriving the length
    /// `L_cav = mode_index * pi * c / omega_c`.
    pub fn from_cavity_frequency(
        omega_x: f64,
        g: f64,
        omega_c: f64,
        c: f64,
        mode_index: u32,
    ) -> Result<Self> {
        if !(omega_c.is_finite() && omega_c > 0.0) {
            return Err(Error::InvalidParameter {
                name: "omega_c",
                reason: format!("must be finite and > 0, got {omega_c}"),
            });
        }
        let l_cav = f64::from(mode_index) * std::f64::consts::PI * c / omega_c;
        Self::new(omega_x, omega_c, g, l_cav, c, mode_index)
    }

    /// Reference configuration used by most tests: natural units (c = 1),
    /// L_cav = pi, fundamental mode, so omega_c = 1, on resonance with
    /// omega_x = 1.
    pub fn resonant_natural(g: f64) -> Result<Self> {
        Self::from_geometry(1.0, g, std::f64::consts::PI, 1.0, 1)
    }

    /// Diamagnetic coefficient D = g^2 / omega_x of the (a + a^dag)^2 term.
    pub fn diamagnetic_coefficient(&self) -> f64 {
        self.g * self.g / self.omega_x
    }
}
