//! Loss rates of cavity polaritons in the ultrastrong-coupling regime.
//!
//! A single cavity mode (frequency `omega_c`, quantization length `L`)
//! couples to a matter resonance `omega_x` with vacuum Rabi rate `g`,
//! including the counter-rotating and diamagnetic (A^2) terms that matter
//! once `g / omega_x` is no longer small. The cavity leaks through one
//! imperfect mirror described by a frequency-dependent surface
//! susceptibility `eta(omega)`.
//!
//! The crate computes the decay rate of each polariton branch three ways
//! and provides an independent check:
//!
//! * **standard**: bare-rate times photonic weight `|w|^2` — the textbook
//!   recipe, which ignores how hybridization redistributes the field at
//!   the mirror and overestimates losses in the ultrastrong regime;
//! * **electric**: `kappa_0(omega_j) (omega_m / omega_j) |w - y|^2`,
//!   weighting each branch by its electric-field amplitude at the mirror;
//! * **magnetic**: `kappa_0(omega_j) (omega_m / omega_j)^3 |w + y|^2`,
//!   the equivalent magnetic-field form (identical for power-law mirrors
//!   by an algebraic identity, a useful internal consistency check);
//! * **maxwell**: the complex eigenfrequency of the leaky cavity filled
//!   with the equivalent Lorentz dielectric, found semiclassically with
//!   no reference to the quantum model — the cross-validation standard.
//!
//! Everything is plain `f64` in whatever unit system the caller adopts;
//! the only requirement is consistency (e.g. natural units with
//! `c = omega_x = 1`).
//!
//! ```
//! use polarloss_core::{build_report, loss_rates_maxwell, MirrorModel, SystemParams};
//!
//! let params = SystemParams::resonant_natural(0.3).unwrap();
//! let mirror = MirrorModel::reference_drude();
//! let report = build_report(&params, &mirror).unwrap();
//! let (lower, upper) = loss_rates_maxwell(&params, &mirror, 1e-12, 100);
//! let dev = lower.unwrap().kappa / report.lower.kappa_electric - 1.0;
//! assert!(dev.abs() < 0.05);
//! assert!(report.upper.kappa_standard > upper.unwrap().kappa);
//! ```

pub mod dielectric;
pub mod error;
pub mod hopfield;
pub mod maxwell;
pub mod mirror;
pub mod params;
pub mod rates;

pub use dielectric::dielectric_function;
pub use error::{Error, Result};
pub use hopfield::{
    bogoliubov_matrix, decoupled_modes, diagonalize, polariton_frequencies_closed_form, Branch,
    PolaritonMode,
};
pub use maxwell::{find_complex_mode, loss_rates_maxwell, mode_condition, ComplexModeResult};
pub use mirror::MirrorModel;
pub use params::SystemParams;
pub use rates::{
    build_report, coupling_weight_electric, coupling_weight_magnetic, loss_rate_electric,
    loss_rate_magnetic, loss_rate_standard, report_from_modes, BranchRates, LossRateReport,
    RateMethod,
};
