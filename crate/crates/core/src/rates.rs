//! Golden-rule polariton loss rates from the three system-environment
//! coupling forms.
//!
//! With the environment traced out at the polariton frequency, the three
//! Hamiltonian-based rates for branch j are
//!
//! ```text
//! electric:  kappa_j = kappa_0(omega_j) (omega_m/omega_j)   |w_j - y_j|^2
//! magnetic:  kappa_j = kappa_0(omega_j) (omega_m/omega_j)^3 |w_j + y_j|^2
//! standard:  kappa_j = kappa_0(omega_j)                     |w_j|^2
//! ```
//!
//! where `omega_m` is the retained bare cavity frequency. The electric and
//! magnetic forms are algebraically identical thanks to the eigenvector
//! relation `omega_m (w + y) = omega_j (w - y)`; their numerical residual is
//! carried as a per-branch diagnostic. The standard form keeps only the
//! photon-annihilation weight |w|^2 (RWA in the polariton basis) and is the
//! route that disagrees with the Maxwell reference once the coupling is
//! ultrastrong.
//!
//! The bare-rate kernel kappa_m(omega) of the standard route is identified
//! with kappa_0(omega): it is the only choice that makes the three methods
//! commensurable.

use crate::error::Result;
use crate::hopfield::{diagonalize, Branch, PolaritonMode};
use crate::mirror::MirrorModel;
use crate::params::SystemParams;

/// Which formula produced a rate. `StandardRenormalized` is a reserved
/// label: a renormalized variant of the standard route is known to exist
/// but its formula is not reproduced here, so no constructor fills it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RateMethod {
    Standard,
    Electric,
    Magnetic,
    Maxwell,
    StandardRenormalized,
}

impl RateMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            RateMethod::Standard => "standard",
            RateMethod::Electric => "electric",
            RateMethod::Magnetic => "magnetic",
            RateMethod::Maxwell => "maxwell",
            RateMethod::StandardRenormalized => "standard_renormalized",
        }
    }
}

/// Coupling weight of the electric-field form (a + a'): |w - y|^2.
pub fn coupling_weight_electric(mode: &PolaritonMode) -> f64 {
    mode.w_minus_y().norm_sqr()
}

/// Coupling weight of the magnetic-field form (a - a'): |w + y|^2.
pub fn coupling_weight_magnetic(mode: &PolaritonMode) -> f64 {
    mode.w_plus_y().norm_sqr()
}

/// Electric-form golden-rule rate.
pub fn loss_rate_electric(
    mode: &PolaritonMode,
    mirror: &MirrorModel,
    params: &SystemParams,
) -> Result<f64> {
    let k0 = mirror.kappa0(params, mode.omega)?;
    Ok(k0 * (params.omega_c / mode.omega) * coupling_weight_electric(mode))
}

/// Magnetic-form golden-rule rate.
pub fn loss_rate_magnetic(
    mode: &PolaritonMode,
    mirror: &MirrorModel,
    params: &SystemParams,
) -> Result<f64> {
    let k0 = mirror.kappa0(params, mode.omega)?;
    let ratio = params.omega_c / mode.omega;
    Ok(k0 * ratio * ratio * ratio * coupling_weight_magnetic(mode))
}

/// Standard-route rate: photon weight |w|^2 only (RWA applied in the
/// polariton basis).
pub fn loss_rate_standard(
    mode: &PolaritonMode,
    mirror: &MirrorModel,
    params: &SystemParams,
) -> Result<f64> {
    let k0 = mirror.kappa0(params, mode.omega)?;
    Ok(k0 * mode.w.norm_sqr())
}

/// Rates of one polariton branch by every method, plus diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchRates {
    pub branch: Branch,
    pub omega: f64,
    pub kappa_standard: f64,
    pub kappa_electric: f64,
    pub kappa_magnetic: f64,
    /// Filled by the Maxwell solver separately; `None` until then (or when
    /// the solver failed for this branch).
    pub kappa_maxwell: Option<f64>,
    /// |kappa_electric - kappa_magnetic| / kappa_electric; zero when both
    /// vanish (a decoupled matter branch).
    pub identity_residual: f64,
}

/// Loss rates of both branches for one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct LossRateReport {
    pub params: SystemParams,
    pub mirror: MirrorModel,
    pub lower: BranchRates,
    pub upper: BranchRates,
}

impl LossRateReport {
    pub fn branch(&self, branch: Branch) -> &BranchRates {
        match branch {
            Branch::Lower => &self.lower,
            Branch::Upper => &self.upper,
        }
    }
}

/// Computes the three Hamiltonian-based rates for both branches of the
/// diagonalized system. Maxwell rates stay `None`; the solver fills them in
/// separately so its per-branch failures cannot poison the closed-system
/// numbers.
pub fn build_report(params: &SystemParams, mirror: &MirrorModel) -> Result<LossRateReport> {
    let (lower, upper) = diagonalize(params)?;
    report_from_modes(params, mirror, &lower, &upper)
}

/// Same as [`build_report`] but for externally supplied modes (e.g. the
/// exact decoupled pair at g = 0 where `diagonalize` refuses the degenerate
/// resonant spectrum).
pub fn report_from_modes(
    params: &SystemParams,
    mirror: &MirrorModel,
    lower: &PolaritonMode,
    upper: &PolaritonMode,
) -> Result<LossRateReport> {
    let rates = |mode: &PolaritonMode| -> Result<BranchRates> {
        let kappa_electric = loss_rate_electric(mode, mirror, params)?;
        let kappa_magnetic = loss_rate_magnetic(mode, mirror, params)?;
        let kappa_standard = loss_rate_standard(mode, mirror, params)?;
        let identity_residual = if kappa_electric > 0.0 {
            (kappa_electric - kappa_magnetic).abs() / kappa_electric
        } else {
            0.0
        };
        Ok(BranchRates {
            branch: mode.branch,
            omega: mode.omega,
            kappa_standard,
            kappa_electric,
            kappa_magnetic,
            kappa_maxwell: None,
            identity_residual,
        })
    };
    Ok(LossRateReport {
        params: *params,
        mirror: *mirror,
        lower: rates(lower)?,
        upper: rates(upper)?,
    })
}
