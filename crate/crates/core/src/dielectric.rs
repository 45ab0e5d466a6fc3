//! Semiclassical twin of the Hopfield model: a single-resonance Lorentz
//! dielectric filling the cavity.
//!
//! ```text
//! eps(omega) = 1 + Omega_p^2 / (omega_x^2 - omega^2) ,
//! Omega_p^2  = 4 g^2 omega_c / omega_x .
//! ```
//!
//! With this plasma strength, the closed-cavity dispersion relation
//! `omega^2 eps(omega) = omega_c^2` has exactly the polariton frequencies of
//! the quantum model as its positive roots, which is what lets the Maxwell
//! boundary-condition solver serve as an independent reference for the
//! Hamiltonian rates.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Evaluations closer than this (relative, on omega^2) to the pole at
/// +-omega_x are refused.
pub const POLE_TOL: f64 = 1e-14;

/// Lorentz permittivity of the cavity interior at complex frequency.
pub fn dielectric_function(params: &SystemParams, omega: Complex64) -> Result<Complex64> {
    let plasma_sq = 4.0 * params.g * params.g * params.omega_c / params.omega_x;
    if plasma_sq == 0.0 {
        // Decoupled matter: exactly vacuum, no pole anywhere.
        return Ok(Complex64::new(1.0, 0.0));
    }
    let wx2 = params.omega_x * params.omega_x;
    let denom = wx2 - omega * omega;
    if denom.norm() <= POLE_TOL * wx2 {
        return Err(Error::PoleAtMatterFrequency { omega });
    }
    Ok(1.0 + plasma_sq / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfield::polariton_frequencies_closed_form;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn vacuum_at_zero_coupling() {
        let p = SystemParams::resonant_natural(0.0).unwrap();
        let eps = dielectric_function(&p, Complex64::new(0.37, -0.02)).unwrap();
        assert_eq!(eps, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn closed_cavity_dispersion_reproduces_polariton_frequencies() {
        // omega^2 eps(omega) = omega_c^2 at both Hopfield roots.
        for &(g, wx) in &[(0.1, 1.0), (0.45, 0.8), (1.0, 1.6)] {
            let p = SystemParams::from_geometry(wx, g, PI, 1.0, 1).unwrap();
            let (lo, up) = polariton_frequencies_closed_form(&p);
            for w in [lo, up] {
                let eps = dielectric_function(&p, Complex64::new(w, 0.0)).unwrap();
                let lhs = (w * w * eps).re;
                assert_relative_eq!(lhs, p.omega_c * p.omega_c, max_relative = 1e-10);
                assert!(eps.im.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn pole_is_guarded() {
        let p = SystemParams::resonant_natural(0.2).unwrap();
        let err = dielectric_function(&p, Complex64::new(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::PoleAtMatterFrequency { .. }));
        // Just outside the guard band it evaluates fine (and hugely).
        let eps = dielectric_function(&p, Complex64::new(1.0 + 1e-6, 0.0)).unwrap();
        assert!(eps.re.abs() > 1e4);
    }
}
