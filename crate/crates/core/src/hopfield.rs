//! Hopfield model of one cavity mode coupled to one matter excitation, and
//! its Bogoliubov diagonalization into polaritons.
//!
//! The closed-system Hamiltonian (hbar = 1) in the Coulomb gauge is
//!
//! ```text
//! H = omega_c a'a + omega_x b'b + i g (a' + a)(b - b') + D (a + a')^2 ,
//! D = g^2 / omega_x ,
//! ```
//!
//! with `a` the photon and `b` the matter boson. A polariton annihilation
//! operator is the linear combination
//!
//! ```text
//! p_j = w a + x b + y a' + z b' ,      j in {L, U},
//! ```
//!
//! fixed by `[p_j, H] = omega_j p_j` together with the symplectic (bosonic)
//! normalization `|w|^2 + |x|^2 - |y|^2 - |z|^2 = 1`.

use faer::Mat;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Two eigenvalues closer than this (relative to omega_x) are treated as
/// degenerate and refused.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Eigenvalues with |Im| beyond this (relative to omega_x) mean the
/// quadratic form is outside its stable regime.
pub const STABILITY_TOL: f64 = 1e-10;

/// Polariton branch label: lower or upper by eigenfrequency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Lower,
    Upper,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Lower => "L",
            Branch::Upper => "U",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One polariton eigenmode: positive eigenfrequency plus the four
/// Hopfield-Bogoliubov coefficients of `p = w a + x b + y a' + z b'`.
///
/// Modes produced by [`diagonalize`] satisfy the symplectic normalization
/// and the phase convention `w` real and >= 0 (with `x` real >= 0 as the
/// tie-breaker when `w` vanishes, i.e. for a decoupled matter mode).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonMode {
    pub branch: Branch,
    /// Positive eigenfrequency omega_j.
    pub omega: f64,
    pub w: Complex64,
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl PolaritonMode {
    /// Symplectic norm `|w|^2 + |x|^2 - |y|^2 - |z|^2`; 1 for a properly
    /// normalized annihilation-operator eigenvector.
    pub fn symplectic_norm(&self) -> f64 {
        self.w.norm_sqr() + self.x.norm_sqr() - self.y.norm_sqr() - self.z.norm_sqr()
    }

    /// `w - y`, the amplitude the electric-field-like operator (a + a')
    /// picks out of this polariton.
    pub fn w_minus_y(&self) -> Complex64 {
        self.w - self.y
    }

    /// `w + y`, the amplitude the magnetic-field-like operator (a - a')
    /// picks out (up to a phase).
    pub fn w_plus_y(&self) -> Complex64 {
        self.w + self.y
    }
}

/// The 4x4 non-Hermitian matrix `M` encoding `[p, H] = omega p` on the basis
/// (a, b, a', b'): a coefficient row vector (w, x, y, z) of a polariton with
/// frequency omega solves `M (w, x, y, z)^T = omega (w, x, y, z)^T`.
///
/// Rows (with D = g^2/omega_x):
///
/// ```text
/// ( omega_c + 2D,  -i g,   -2D,            -i g )
/// ( i g,           omega_x, -i g,           0   )
/// ( 2D,            -i g,   -(omega_c + 2D), -i g )
/// ( -i g,          0,       i g,           -omega_x )
/// ```
pub fn bogoliubov_matrix(params: &SystemParams) -> [[Complex64; 4]; 4] {
    let wc = params.omega_c;
    let wx = params.omega_x;
    let g = params.g;
    let d = params.diamagnetic_coefficient();
    let re = |v: f64| Complex64::new(v, 0.0);
    let ig = Complex64::new(0.0, g);
    [
        [re(wc + 2.0 * d), -ig, re(-2.0 * d), -ig],
        [ig, re(wx), -ig, re(0.0)],
        [re(2.0 * d), -ig, re(-(wc + 2.0 * d)), -ig],
        [-ig, re(0.0), ig, re(-wx)],
    ]
}

/// The two positive polariton frequencies from the characteristic quartic
///
/// ```text
/// (omega^2 - omega_c^2)(omega^2 - omega_x^2) = 4 g^2 (omega_c/omega_x) omega^2 ,
/// ```
///
/// returned as `(omega_L, omega_U)` with `omega_L <= omega_U`. The product
/// rule `omega_L * omega_U = omega_c * omega_x` (the quartic's constant
/// term) holds to rounding.
///
/// `omega_L^2` is computed as `2 (omega_c omega_x)^2 / (B + sqrt(B^2 - 4
/// (omega_c omega_x)^2))` to avoid the cancellation the textbook form
/// suffers at small g.
pub fn polariton_frequencies_closed_form(params: &SystemParams) -> (f64, f64) {
    let wc = params.omega_c;
    let wx = params.omega_x;
    let g = params.g;
    // omega^4 - B omega^2 + (wc wx)^2 = 0
    let b = wc * wc + wx * wx + 4.0 * g * g * wc / wx;
    let prod = wc * wx;
    let disc = (b * b - 4.0 * prod * prod).max(0.0).sqrt();
    let upper_sq = 0.5 * (b + disc);
    let lower_sq = prod * prod / upper_sq;
    (lower_sq.sqrt(), upper_sq.sqrt())
}

/// Diagonalizes the Bogoliubov matrix numerically and returns the two
/// positive-frequency polariton modes `(lower, upper)`, symplectically
/// normalized and phase-fixed.
///
/// Errors with [`Error::DegenerateSpectrum`] when the two branches are
/// closer than `1e-12 * omega_x` (e.g. g = 0 exactly on resonance) and with
/// [`Error::UnstableParameters`] if any eigenvalue fails to be real to
/// `1e-10 * omega_x`.
pub fn diagonalize(params: &SystemParams) -> Result<(PolaritonMode, PolaritonMode)> {
    let m = bogoliubov_matrix(params);
    let mat = Mat::from_fn(4, 4, |r, c| m[r][c]);
    let eig = mat.eigen().map_err(|_| Error::UnstableParameters {
        max_imag: f64::INFINITY,
    })?;
    let vals = eig.S();
    let vecs = eig.U();

    let max_imag = (0..4).map(|j| vals[j].im.abs()).fold(0.0, f64::max);
    if max_imag > STABILITY_TOL * params.omega_x {
        return Err(Error::UnstableParameters { max_imag });
    }

    // The spectrum comes in +- pairs; keep the two positive ones.
    let mut positive: Vec<usize> = (0..4).filter(|&j| vals[j].re > 0.0).collect();
    if positive.len() != 2 {
        // Can only happen if an eigenvalue collapsed onto zero.
        return Err(Error::DegenerateSpectrum { split: 0.0 });
    }
    positive.sort_by(|&a, &b| vals[a].re.total_cmp(&vals[b].re));
    let (lo, up) = (positive[0], positive[1]);
    let split = (vals[up].re - vals[lo].re).abs();
    if split <= DEGENERACY_TOL * params.omega_x {
        return Err(Error::DegenerateSpectrum { split });
    }

    let build = |col: usize, branch: Branch| -> Result<PolaritonMode> {
        let (w, x, y, z) = (vecs[(0, col)], vecs[(1, col)], vecs[(2, col)], vecs[(3, col)]);
        normalize_mode(branch, vals[col].re, w, x, y, z)
    };
    Ok((build(lo, Branch::Lower)?, build(up, Branch::Upper)?))
}

/// The exact decoupled (g = 0) limit, valid for any detuning including exact
/// resonance where [`diagonalize`] refuses to label the degenerate pair:
/// a pure photon mode (w = 1) at omega_c and a pure matter mode (x = 1) at
/// omega_x. Branches are assigned by frequency; on a tie the photon mode is
/// Lower.
pub fn decoupled_modes(params: &SystemParams) -> Result<(PolaritonMode, PolaritonMode)> {
    if params.g != 0.0 {
        return Err(Error::InvalidParameter {
            name: "g",
            reason: format!("decoupled limit requires g = 0, got {}", params.g),
        });
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let photon = |branch| PolaritonMode {
        branch,
        omega: params.omega_c,
        w: one,
        x: zero,
        y: zero,
        z: zero,
    };
    let matter = |branch| PolaritonMode {
        branch,
        omega: params.omega_x,
        w: zero,
        x: one,
        y: zero,
        z: zero,
    };
    if params.omega_c <= params.omega_x {
        Ok((photon(Branch::Lower), matter(Branch::Upper)))
    } else {
        Ok((matter(Branch::Lower), photon(Branch::Upper)))
    }
}

/// Symplectically normalizes a raw eigenvector and fixes its global phase:
/// `w` real >= 0, falling back to `x` real >= 0 when `|w| = 0`.
fn normalize_mode(
    branch: Branch,
    omega: f64,
    w: Complex64,
    x: Complex64,
    y: Complex64,
    z: Complex64,
) -> Result<PolaritonMode> {
    let norm = w.norm_sqr() + x.norm_sqr() - y.norm_sqr() - z.norm_sqr();
    if !(norm.is_finite() && norm > 0.0) {
        // A positive-frequency eigenvector of a stable quadratic form always
        // has positive symplectic norm; anything else means the eigenproblem
        // itself broke down.
        return Err(Error::UnstableParameters { max_imag: f64::NAN });
    }
    let scale = norm.sqrt().recip();
    let (mut w, mut x, mut y, mut z) = (w * scale, x * scale, y * scale, z * scale);
    let anchor = if w.norm() > 1e-300 { w } else { x };
    if anchor.norm() > 0.0 {
        let phase = anchor / anchor.norm();
        let rot = phase.conj();
        w *= rot;
        x *= rot;
        y *= rot;
        z *= rot;
    }
    // Scrub the -0.0 and 1e-17i dust the rotation leaves on the anchored
    // component so that w is exactly real.
    if w.norm() > 1e-300 {
        w.im = 0.0;
    } else {
        x.im = 0.0;
    }
    Ok(PolaritonMode {
        branch,
        omega,
        w,
        x,
        y,
        z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn resonant(g: f64) -> SystemParams {
        SystemParams::resonant_natural(g).unwrap()
    }

    fn detuned(g: f64, omega_x: f64) -> SystemParams {
        SystemParams::from_geometry(omega_x, g, PI, 1.0, 1).unwrap()
    }

    #[test]
    fn matrix_is_block_diagonal_at_zero_coupling() {
        let m = bogoliubov_matrix(&detuned(0.0, 1.7));
        for (r, row) in m.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if r == c {
                    continue;
                }
                assert_eq!(*v, Complex64::new(0.0, 0.0), "m[{r}][{c}]");
            }
        }
        assert_eq!(m[0][0].re, 1.0);
        assert_eq!(m[1][1].re, 1.7);
        assert_eq!(m[2][2].re, -1.0);
        assert_eq!(m[3][3].re, -1.7);
    }

    #[test]
    fn closed_form_matches_quadratic_factorization_at_resonance() {
        // At resonance the quartic factors into omega^2 -+ 2g omega - 1 = 0;
        // for g = 0.1 the positive roots are -+0.1 + sqrt(1.01).
        let (lo, up) = polariton_frequencies_closed_form(&resonant(0.1));
        let s = 1.01f64.sqrt();
        assert_relative_eq!(lo, s - 0.1, max_relative = 1e-14);
        assert_relative_eq!(up, s + 0.1, max_relative = 1e-14);
        // Frozen reference values.
        assert_relative_eq!(lo, 0.904_987_562_112_089_1, max_relative = 1e-14);
        assert_relative_eq!(up, 1.104_987_562_112_089, max_relative = 1e-14);
    }

    #[test]
    fn closed_form_decoupled_limit() {
        let (lo, up) = polariton_frequencies_closed_form(&detuned(0.0, 1.7));
        assert_eq!((lo, up), (1.0, 1.7));
    }

    #[test]
    fn closed_form_product_rule() {
        for &(g, wx) in &[(0.05, 1.0), (0.3, 0.5), (1.0, 2.0), (1.4, 1.3)] {
            let p = detuned(g, wx);
            let (lo, up) = polariton_frequencies_closed_form(&p);
            assert_relative_eq!(lo * up, p.omega_c * p.omega_x, max_relative = 1e-12);
        }
    }

    #[test]
    fn closed_form_is_stable_at_tiny_coupling() {
        // The cancellation-free form must keep full precision where the
        // naive (B - disc)/2 would lose half the digits.
        let p = detuned(1e-8, 2.0);
        let (lo, up) = polariton_frequencies_closed_form(&p);
        assert_relative_eq!(lo, 1.0, max_relative = 1e-15);
        assert_relative_eq!(up, 2.0, max_relative = 1e-15);
    }

    #[test]
    fn numerical_frequencies_match_closed_form() {
        for &(g, wx) in &[(0.05, 1.0), (0.1, 1.0), (0.5, 0.7), (1.0, 1.9)] {
            let p = detuned(g, wx);
            let (lo, up) = polariton_frequencies_closed_form(&p);
            let (ml, mu) = diagonalize(&p).unwrap();
            assert_relative_eq!(ml.omega, lo, max_relative = 1e-10);
            assert_relative_eq!(mu.omega, up, max_relative = 1e-10);
        }
    }

    #[test]
    fn reference_point_coefficients() {
        // g = 0.1 on resonance; closed-form oracle:
        //   |w - y|^2 = omega_L / (1 + omega_L^2)   (equal for both branches)
        //   |w + y|^2 = (omega_j/omega_c)^2 |w - y|^2
        let (lo, up) = diagonalize(&resonant(0.1)).unwrap();

        assert_relative_eq!(
            lo.w_minus_y().norm_sqr(),
            0.497_518_595_104_994_1,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            lo.w_plus_y().norm_sqr(),
            0.407_468_967_007_094_1,
            max_relative = 1e-12
        );
        assert_relative_eq!(lo.w.norm_sqr(), 0.451_370_960_772_772_06, max_relative = 1e-12);

        assert_relative_eq!(
            up.w_minus_y().norm_sqr(),
            0.497_518_595_104_994_74,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            up.w_plus_y().norm_sqr(),
            0.607_468_967_007_094_7,
            max_relative = 1e-12
        );
        assert_relative_eq!(up.w.norm_sqr(), 0.551_122_820_283_272_3, max_relative = 1e-12);
    }

    #[test]
    fn modes_are_normalized_and_phase_fixed() {
        for &(g, wx) in &[(0.1, 1.0), (0.6, 0.8), (1.0, 1.5)] {
            let (lo, up) = diagonalize(&detuned(g, wx)).unwrap();
            for m in [lo, up] {
                assert_relative_eq!(m.symplectic_norm(), 1.0, epsilon = 1e-10);
                assert_eq!(m.w.im, 0.0);
                assert!(m.w.re >= 0.0);
                assert!(m.omega > 0.0);
            }
        }
    }

    #[test]
    fn eigenvector_relation_holds() {
        // omega_c (w + y) = omega_j (w - y): the identity that makes the
        // electric- and magnetic-form rates coincide.
        for &(g, wx) in &[(0.05, 1.0), (0.3, 1.2), (1.0, 0.6)] {
            let p = detuned(g, wx);
            let (lo, up) = diagonalize(&p).unwrap();
            for m in [lo, up] {
                let lhs = p.omega_c * m.w_plus_y();
                let rhs = m.omega * m.w_minus_y();
                assert!(
                    (lhs - rhs).norm() <= 1e-10 * rhs.norm(),
                    "relation violated at g={g}, omega_x={wx}"
                );
            }
        }
    }

    #[test]
    fn decoupled_detuned_diagonalization_is_pure() {
        // g = 0 with detuning keeps the generic path well conditioned and
        // must reproduce the exact photon/matter split.
        let p = detuned(0.0, 1.7);
        let (lo, up) = diagonalize(&p).unwrap();
        assert_relative_eq!(lo.omega, 1.0, max_relative = 1e-12);
        assert_relative_eq!(up.omega, 1.7, max_relative = 1e-12);
        assert_relative_eq!(lo.w.re, 1.0, max_relative = 1e-12);
        assert!(lo.x.norm() < 1e-12 && lo.y.norm() < 1e-12 && lo.z.norm() < 1e-12);
        assert_relative_eq!(up.x.re, 1.0, max_relative = 1e-12);
        assert!(up.w.norm() < 1e-12 && up.y.norm() < 1e-12 && up.z.norm() < 1e-12);
    }

    #[test]
    fn degenerate_spectrum_is_refused() {
        let err = diagonalize(&resonant(0.0)).unwrap_err();
        assert!(matches!(err, Error::DegenerateSpectrum { .. }));
    }

    #[test]
    fn decoupled_modes_cover_the_degenerate_point() {
        let p = resonant(0.0);
        let (lo, up) = decoupled_modes(&p).unwrap();
        assert_eq!(lo.w, Complex64::new(1.0, 0.0));
        assert_eq!(up.x, Complex64::new(1.0, 0.0));
        assert_eq!((lo.omega, up.omega), (1.0, 1.0));
        assert!(decoupled_modes(&resonant(0.1)).is_err());
    }

    #[test]
    fn eigenvalues_come_in_plus_minus_pairs() {
        let p = detuned(0.7, 1.3);
        let m = bogoliubov_matrix(&p);
        let mat = Mat::from_fn(4, 4, |r, c| m[r][c]);
        let eig = mat.eigen().unwrap();
        let mut re: Vec<f64> = (0..4).map(|j| eig.S()[j].re).collect();
        re.sort_by(f64::total_cmp);
        assert_relative_eq!(re[0], -re[3], max_relative = 1e-12);
        assert_relative_eq!(re[1], -re[2], max_relative = 1e-12);
    }
}
