//! Complex eigenfrequencies of the open cavity from Maxwell's boundary
//! conditions: the independent semiclassical reference for the golden-rule
//! rates.
//!
//! Geometry: thin (delta-layer) mirror at z = 0, perfect mirror at z = L,
//! Lorentz dielectric `eps(omega)` filling the interior. With the ansatz
//! `E ~ sin(k (L - z))` inside (node at the perfect mirror) and an outgoing
//! plane wave outside, continuity of E and the delta-layer jump of dE/dz at
//! z = 0 collapse to one analytic condition on the complex frequency:
//!
//! ```text
//! F(omega) = k cos(kL) - [ i omega/c + (omega/c)^2 eta(omega) ] sin(kL) ,
//! k = (omega/c) sqrt(eps(omega)) .
//! ```
//!
//! F is odd under k -> -k, so its roots do not depend on the square-root
//! branch. Physical resonances are roots in the lower half-plane; the decay
//! rate of a mode is kappa = -2 Im omega. For the empty cavity the
//! condition reduces to `cot(omega L / c) = i + omega eta / c`, whose
//! asymptotic solution at large omega*eta/c is the bare rate
//! `kappa_0 = 2 c^3 / (omega^2 eta^2 L)`; the finite-mirror root also picks
//! up a real frequency shift of order `c^2/(omega eta L)`, which is real
//! physics of the delta mirror (its reflection phase is not exactly pi) and
//! the dominant source of disagreement with the golden-rule rates at the
//! reference mirror strength.

use num_complex::Complex64;

use crate::dielectric::dielectric_function;
use crate::error::{Error, Result};
use crate::hopfield::polariton_frequencies_closed_form;
use crate::mirror::MirrorModel;
use crate::params::SystemParams;

/// Default relative tolerance of the root iteration.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default iteration budget.
pub const DEFAULT_MAX_ITER: usize = 100;

/// A converged root farther than this (times omega_x) from its initial
/// guess is rejected as having escaped the intended basin.
pub const BASIN_RADIUS: f64 = 0.2;

/// Iterates closer than this (times omega_x) to the dielectric pole at
/// +-omega_x abort the search.
pub const POLE_GUARD: f64 = 1e-6;

/// A converged complex eigenfrequency with solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexModeResult {
    /// The root; Im < 0 for a decaying mode.
    pub omega: Complex64,
    /// Loss rate -2 Im(omega).
    pub kappa: f64,
    /// |F(omega)| at convergence.
    pub residual: f64,
    /// Iterations spent.
    pub iterations: usize,
    /// Where the search started.
    pub initial_guess: Complex64,
}

/// Boundary-condition residual F(omega) on the principal square-root
/// branch.
pub fn mode_condition(
    params: &SystemParams,
    mirror: &MirrorModel,
    omega: Complex64,
) -> Result<Complex64> {
    condition_parts(params, mirror, omega, false).map(|(f, _)| f)
}

/// F together with the interior wavenumber k (whose magnitude sets the
/// natural scale of F near a root).
fn condition_parts(
    params: &SystemParams,
    mirror: &MirrorModel,
    omega: Complex64,
    flip_sqrt_branch: bool,
) -> Result<(Complex64, Complex64)> {
    let c = params.c;
    let eps = dielectric_function(params, omega)?;
    let mut k = (omega / c) * eps.sqrt();
    if flip_sqrt_branch {
        k = -k;
    }
    let eta = mirror.eta(omega)?;
    let i = Complex64::new(0.0, 1.0);
    let kl = k * params.l_cav;
    let f = k * kl.cos() - (i * omega / c + (omega / c) * (omega / c) * eta) * kl.sin();
    Ok((f, k))
}

/// Finds one complex eigenfrequency near `guess` by Muller iteration
/// (three-point quadratic interpolation, derivative-free, superlinear on
/// analytic F).
///
/// Converged when both `|F| <= tol * max(|k|, |omega|/c)` and the last step
/// is below `tol * |omega|`. A converged root farther than `0.2 omega_x`
/// from the guess is rejected as [`Error::BasinEscape`] rather than
/// silently returned, and iterates inside the `1e-6 omega_x` guard band
/// around the dielectric pole abort with [`Error::PoleProximity`].
pub fn find_complex_mode(
    params: &SystemParams,
    mirror: &MirrorModel,
    guess: Complex64,
    tol: f64,
    max_iter: usize,
) -> Result<ComplexModeResult> {
    let guard = |omega: Complex64| -> Result<()> {
        // The dielectric pole at +-omega_x only exists for coupled matter.
        if params.g == 0.0 {
            return Ok(());
        }
        let wx = params.omega_x;
        if (omega - wx).norm() <= POLE_GUARD * wx || (omega + wx).norm() <= POLE_GUARD * wx {
            return Err(Error::PoleProximity { omega });
        }
        Ok(())
    };
    let f = |omega: Complex64| -> Result<(Complex64, f64)> {
        guard(omega)?;
        let (f, k) = condition_parts(params, mirror, omega, false)?;
        let scale = k.norm().max(omega.norm() / params.c);
        Ok((f, scale))
    };

    let (root, residual, iterations) = muller(&f, guess, tol, max_iter)?;
    let distance = (root - guess).norm();
    if distance > BASIN_RADIUS * params.omega_x {
        return Err(Error::BasinEscape {
            root,
            guess,
            distance,
        });
    }
    Ok(ComplexModeResult {
        omega: root,
        kappa: -2.0 * root.im,
        residual,
        iterations,
        initial_guess: guess,
    })
}

/// Muller's method on an analytic function with a per-point residual scale.
/// Returns (root, |F| at root, iterations).
fn muller(
    f: &dyn Fn(Complex64) -> Result<(Complex64, f64)>,
    guess: Complex64,
    tol: f64,
    max_iter: usize,
) -> Result<(Complex64, f64, usize)> {
    // Three seed points bracketing the guess; the relative spread is large
    // enough to survive cancellation in the divided differences.
    let spread = 1e-4;
    let mut x0 = guess * Complex64::new(1.0 + spread, 0.0);
    let mut x1 = guess * Complex64::new(1.0 - spread, 0.0);
    let mut x2 = guess;
    let (mut f0, _) = f(x0)?;
    let (mut f1, _) = f(x1)?;
    let (mut f2, _) = f(x2)?;

    for it in 1..=max_iter {
        let h1 = x1 - x0;
        let h2 = x2 - x1;
        if h2.norm() == 0.0 {
            return Err(Error::NoConvergence {
                iterations: it,
                residual: f2.norm(),
            });
        }
        let d1 = (f1 - f0) / h1;
        let d2 = (f2 - f1) / h2;
        let a = (d2 - d1) / (h2 + h1);
        let b = a * h2 + d2;
        let disc = (b * b - 4.0 * a * f2).sqrt();
        // Pick the denominator sign that maximizes |denom| (stable branch).
        let denom = if (b + disc).norm() >= (b - disc).norm() {
            b + disc
        } else {
            b - disc
        };
        let step = if denom.norm() > 0.0 {
            -2.0 * f2 / denom
        } else if (f2 - f1).norm() > 0.0 {
            // All three interpolation points degenerate: secant fallback.
            -f2 * h2 / (f2 - f1)
        } else {
            // Flat and not converged: no usable update direction.
            return Err(Error::NoConvergence {
                iterations: it,
                residual: f2.norm(),
            });
        };
        let x3 = x2 + step;
        let (f3, s3) = f(x3)?;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        x2 = x3;
        f2 = f3;
        if f2.norm() <= tol * s3 && step.norm() <= tol * x2.norm() {
            return Ok((x2, f2.norm(), it));
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual: f2.norm(),
    })
}

/// Runs the solver for both polariton branches: initial guesses are the
/// closed-form Hopfield frequencies, each seeded into the lower half-plane
/// by -i kappa_0(omega_j)/2. Per-branch failures are reported
/// independently so a lost basin on one branch never hides the other.
///
/// At g = 0 the dielectric is vacuum and only cavity resonances exist; on
/// resonance both guesses then converge to the same single photonic root,
/// which is reported for both branches.
pub fn loss_rates_maxwell(
    params: &SystemParams,
    mirror: &MirrorModel,
    tol: f64,
    max_iter: usize,
) -> (Result<ComplexModeResult>, Result<ComplexModeResult>) {
    let (omega_l, omega_u) = polariton_frequencies_closed_form(params);
    let solve = |omega_j: f64| -> Result<ComplexModeResult> {
        let k0 = mirror.kappa0(params, omega_j)?;
        let guess = Complex64::new(omega_j, -0.5 * k0);
        find_complex_mode(params, mirror, guess, tol, max_iter)
    };
    (solve(omega_l), solve(omega_u))
}
