use num_complex::Complex64;
use thiserror::Error;

/// Everything that can go wrong between parameter validation and a converged
/// complex eigenfrequency.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A constructor argument violates a documented invariant.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The two positive polariton frequencies coincide to within
    /// `1e-12 * omega_x`, so branch labels (and eigenvectors) are not
    /// well defined. Happens at g = 0 exactly on resonance.
    #[error("degenerate polariton spectrum: |omega_L - omega_U| = {split:.3e}")]
    DegenerateSpectrum { split: f64 },

    /// An eigenvalue of the Bogoliubov matrix acquired an imaginary part
    /// beyond `1e-10 * omega_x`. The closed Hamiltonian used here is stable
    /// for every g >= 0, so this indicates a numerically pathological input
    /// rather than a physical instability.
    #[error("unstable/non-real eigenvalue: max |Im omega| = {max_imag:.3e}")]
    UnstableParameters { max_imag: f64 },

    /// The Lorentz dielectric function was evaluated at (or numerically on
    /// top of) its pole omega = +-omega_x.
    #[error("dielectric function evaluated at the matter pole, omega = {omega}")]
    PoleAtMatterFrequency { omega: Complex64 },

    /// A mirror power law eta(omega) ~ omega^-p cannot be evaluated at
    /// omega = 0.
    #[error("frequency magnitude below 1e-300; mirror power law undefined at zero")]
    ZeroFrequency,

    /// The complex root iteration ran out of iterations.
    #[error("no convergence after {iterations} iterations (last residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// The iteration converged, but to a root farther than the trust radius
    /// from the initial guess; the result is discarded rather than silently
    /// reported as the wrong mode.
    #[error("root {root} escaped the basin of guess {guess} (distance {distance:.3e})")]
    BasinEscape {
        root: Complex64,
        guess: Complex64,
        distance: f64,
    },

    /// An iterate came within `1e-6 * omega_x` of the dielectric pole at
    /// +-omega_x. Polariton roots never sit that close for supported
    /// parameters, so this means the guess was bad.
    #[error("iterate {omega} inside the guard band around the matter pole")]
    PoleProximity { omega: Complex64 },
}

impl Error {
    /// Short machine-readable label, used for per-row status columns in
    /// sweep output.
    pub fn status_label(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "invalid_parameter",
            Error::DegenerateSpectrum { .. } => "degenerate_spectrum",
            Error::UnstableParameters { .. } => "unstable_parameters",
            Error::PoleAtMatterFrequency { .. } => "pole_at_matter_frequency",
            Error::ZeroFrequency => "zero_frequency",
            Error::NoConvergence { .. } => "no_convergence",
            Error::BasinEscape { .. } => "basin_escape",
            Error::PoleProximity { .. } => "pole_proximity",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
