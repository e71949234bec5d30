//! The universal SU(2) polarization gadget.
//!
//! Two quarter-wave and two half-wave plates on a common axis realize every
//! SU(2) transformation of the Jones vector. Each plate is a fixed retarder
//! conjugated by the SO(2) rotation `ϑ(φ) = e^{−iφσ₂}` of its orientation:
//!
//! ```text
//! H_φ = ϑ(φ) iσ₃ ϑ(φ)⁻¹
//! Q_φ = ϑ(φ) diag(e^{iπ/4}, e^{−iπ/4}) ϑ(φ)⁻¹
//! U(ξ, η, ζ) = Q_{ξ/2+π/4} H_{ξ/2+η/4∓π/4} Q_{ξ/2−π/4} H_{(ξ−ζ)/4±π/4}
//!            = e^{−iξσ₂/2} e^{iησ₃/2} e^{−iζσ₂/2}
//! ```
//!
//! With `ξ = 0` and `η ∈ [0, π]`, input `|0⟩` reaches the states with
//! `φ ∈ [π, 2π) ∪ {0}` and input `|1⟩` the remaining ones, see
//! [`target_to_gadget`].

use std::f64::consts::{FRAC_PI_4, PI, TAU};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angle::{wrap_pi, wrap_tau, wrap_two_tau};
use crate::error::{Error, Result};
use crate::matrix::Matrix2;
use crate::qubit::{fidelity, BlochAngles, PureState};
use crate::tolerance::EPS_FID;

/// Euler angles of `e^{−iξσ₂/2} e^{iησ₃/2} e^{−iζσ₂/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerAngles {
    xi: f64,
    eta: f64,
    zeta: f64,
}

fn check_range(name: &'static str, value: f64, max: f64, range: &'static str) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NotFinite { name, value });
    }
    if !(0.0..=max).contains(&value) {
        return Err(Error::OutOfRange { name, value, range });
    }
    Ok(value)
}

impl EulerAngles {
    /// `ξ, ζ ∈ [0, 2π]`, `η ∈ [0, π]`; the bound on `η` is hard.
    pub fn new(xi: f64, eta: f64, zeta: f64) -> Result<Self> {
        Ok(Self {
            xi: check_range("xi", xi, TAU, "[0, 2π]")?,
            eta: check_range("eta", eta, PI, "[0, π]")?,
            zeta: check_range("zeta", zeta, TAU, "[0, 2π]")?,
        })
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }
}

/// Sign taken for the `π/4` offset of a half-wave plate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }
}

/// The correlated choice in `H_{…∓π/4} … H_{…±π/4}`: the upper branch takes
/// `(−, +)`, the lower branch `(+, −)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignBranch {
    Upper,
    Lower,
}

impl SignBranch {
    pub const ALL: [SignBranch; 2] = [SignBranch::Upper, SignBranch::Lower];

    /// Signs of the first and second half-wave offsets.
    pub fn signs(self) -> (Sign, Sign) {
        match self {
            SignBranch::Upper => (Sign::Minus, Sign::Plus),
            SignBranch::Lower => (Sign::Plus, Sign::Minus),
        }
    }
}

/// Orientations of the four plates, in light-path order from the matrix
/// product's left: `Q(q1) H(h1) Q(q2) H(h2)`. Stored in `(−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlateAngles {
    pub q1: f64,
    pub h1: f64,
    pub q2: f64,
    pub h2: f64,
    pub sign_branch: SignBranch,
}

impl PlateAngles {
    /// `Q(q1) · H(h1) · Q(q2) · H(h2)`
    pub fn unitary(&self) -> Matrix2 {
        quarter_wave(self.q1) * half_wave(self.h1) * quarter_wave(self.q2) * half_wave(self.h2)
    }
}

/// Parameters of the rotation-gate decomposition: an axis rotation by
/// `alpha` followed by a ẑ rotation by `beta`. Both are reduced to
/// `(−2π, 2π]`, the period of the half-angle matrices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GateAngles {
    alpha: f64,
    beta: f64,
}

impl GateAngles {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self {
            alpha: wrap_two_tau(alpha),
            beta: wrap_two_tau(beta),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `R_z(β) · R(α)`
    pub fn matrix(&self) -> Matrix2 {
        gate_rotation_z(self.beta) * gate_rotation_axis(self.alpha)
    }
}

/// `ϑ(φ) = e^{−iφσ₂}`
pub fn rotation_matrix(phi: f64) -> Matrix2 {
    let (s, c) = phi.sin_cos();
    Matrix2::real(c, -s, s, c)
}

/// `H_φ = ϑ(φ) iσ₃ ϑ(φ)⁻¹`
pub fn half_wave(phi: f64) -> Matrix2 {
    let r = rotation_matrix(phi);
    r * Matrix2::sigma3().scale(Complex64::i()) * r.adjoint()
}

/// `Q_φ = ϑ(φ) diag(e^{iπ/4}, e^{−iπ/4}) ϑ(φ)⁻¹`
pub fn quarter_wave(phi: f64) -> Matrix2 {
    let r = rotation_matrix(phi);
    let retarder = Matrix2::diag(
        Complex64::from_polar(1.0, FRAC_PI_4),
        Complex64::from_polar(1.0, -FRAC_PI_4),
    );
    r * retarder * r.adjoint()
}

/// `e^{iθσ₃} = diag(e^{iθ}, e^{−iθ})`
fn exp_i_sigma3(theta: f64) -> Matrix2 {
    Matrix2::diag(
        Complex64::from_polar(1.0, theta),
        Complex64::from_polar(1.0, -theta),
    )
}

/// `e^{−iξσ₂/2} e^{iησ₃/2} e^{−iζσ₂/2}`, each factor in closed form.
pub fn euler_unitary(e: &EulerAngles) -> Matrix2 {
    rotation_matrix(e.xi / 2.0) * exp_i_sigma3(e.eta / 2.0) * rotation_matrix(e.zeta / 2.0)
}

/// Plate orientations for an explicit pair of half-wave signs.
pub fn plate_orientations(e: &EulerAngles, first: Sign, second: Sign) -> [f64; 4] {
    let (xi, eta, zeta) = (e.xi, e.eta, e.zeta);
    [
        xi / 2.0 + FRAC_PI_4,
        xi / 2.0 + eta / 4.0 + first.value() * FRAC_PI_4,
        xi / 2.0 - FRAC_PI_4,
        (xi - zeta) / 4.0 + second.value() * FRAC_PI_4,
    ]
}

/// Four-plate product for an explicit pair of half-wave signs.
pub fn gadget_unitary_with_signs(e: &EulerAngles, first: Sign, second: Sign) -> Matrix2 {
    let [q1, h1, q2, h2] = plate_orientations(e, first, second);
    quarter_wave(q1) * half_wave(h1) * quarter_wave(q2) * half_wave(h2)
}

/// The four-plate product `Q H Q H` with signs from `branch`.
pub fn gadget_unitary(e: &EulerAngles, branch: SignBranch) -> Matrix2 {
    plate_angles_from_euler(e, branch).unitary()
}

pub fn plate_angles_from_euler(e: &EulerAngles, branch: SignBranch) -> PlateAngles {
    let (first, second) = branch.signs();
    let [q1, h1, q2, h2] = plate_orientations(e, first, second);
    PlateAngles {
        q1: wrap_pi(q1),
        h1: wrap_pi(h1),
        q2: wrap_pi(q2),
        h2: wrap_pi(h2),
        sign_branch: branch,
    }
}

/// Points of the branch validation grid: 10 values per angle, endpoints
/// included, 10³ triples in total.
pub fn validation_grid() -> Vec<EulerAngles> {
    const STEPS: usize = 10;
    let lin = |max: f64, k: usize| max * k as f64 / (STEPS - 1) as f64;
    let mut out = Vec::with_capacity(STEPS.pow(3));
    for i in 0..STEPS {
        for j in 0..STEPS {
            for k in 0..STEPS {
                out.push(
                    EulerAngles::new(lin(TAU, i), lin(PI, j), lin(TAU, k))
                        .expect("grid stays in range"),
                );
            }
        }
    }
    out
}

/// Worst phase agreement `|Tr(G†U)|/2` of a branch against the Euler form
/// over the validation grid.
pub fn branch_agreement(branch: SignBranch) -> f64 {
    validation_grid()
        .iter()
        .map(|e| gadget_unitary(e, branch).phase_agreement(&euler_unitary(e)))
        .fold(f64::INFINITY, f64::min)
}

/// The first sign branch (upper, then lower) whose four-plate product
/// matches the Euler form up to global phase on the whole validation grid.
/// Computed once.
pub fn validated_branch() -> SignBranch {
    static BRANCH: OnceLock<SignBranch> = OnceLock::new();
    *BRANCH.get_or_init(|| {
        SignBranch::ALL
            .into_iter()
            .find(|b| branch_agreement(*b) >= 1.0 - EPS_FID)
            .expect("no sign branch reproduces the Euler form")
    })
}

/// `|ψ_out⟩ = U(ξ, η, ζ)|ψ_in⟩`
pub fn prepare(psi_in: &PureState, e: &EulerAngles) -> PureState {
    psi_in.transformed(&euler_unitary(e))
}

/// `cos(ζ/2)|0⟩ + e^{−iη} sin(ζ/2)|1⟩`: the output for input `|0⟩`, `ξ = 0`,
/// with the global phase `e^{iη/2}` removed.
pub fn prepare_western(eta: f64, zeta: f64) -> Result<PureState> {
    let e = EulerAngles::new(0.0, eta, zeta)?;
    let half = e.zeta / 2.0;
    Ok(PureState::from_parts(
        Complex64::new(half.cos(), 0.0),
        Complex64::from_polar(half.sin(), -e.eta),
    ))
}

/// `−sin(ζ/2)|0⟩ + e^{−iη} cos(ζ/2)|1⟩`: the output for input `|1⟩`, `ξ = 0`,
/// with the global phase `e^{iη/2}` removed. Orthogonal to
/// [`prepare_western`] at the same settings.
pub fn prepare_eastern(eta: f64, zeta: f64) -> Result<PureState> {
    let e = EulerAngles::new(0.0, eta, zeta)?;
    let half = e.zeta / 2.0;
    Ok(PureState::from_parts(
        Complex64::new(-half.sin(), 0.0),
        Complex64::from_polar(half.cos(), -e.eta),
    ))
}

/// Which basis state is sent through the gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputChoice {
    Zero,
    One,
}

impl InputChoice {
    pub fn state(self) -> PureState {
        match self {
            InputChoice::Zero => PureState::zero(),
            InputChoice::One => PureState::one(),
        }
    }
}

/// Input state and Euler angles that prepare a target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GadgetSetting {
    pub input: InputChoice,
    pub euler: EulerAngles,
}

impl GadgetSetting {
    pub fn prepare(&self) -> PureState {
        prepare(&self.input.state(), &self.euler)
    }
}

/// Solves for `ξ = 0` settings that prepare `target` up to global phase.
///
/// Targets with `φ ∈ [π, 2π) ∪ {0}` use input `|0⟩` with `ζ = θ`,
/// `η = 2π − φ`; targets with `φ ∈ (0, π)` use input `|1⟩` with `ζ = π − θ`,
/// `η = π − φ`. In both cases `η ∈ [0, π]`.
pub fn target_to_gadget(target: &BlochAngles) -> GadgetSetting {
    let (theta, phi) = (target.theta(), target.phi());
    let (input, eta, zeta) = if phi == 0.0 || phi >= PI {
        (InputChoice::Zero, wrap_tau(TAU - phi), theta)
    } else {
        (InputChoice::One, PI - phi, PI - theta)
    };
    let euler = EulerAngles::new(0.0, eta.min(PI), zeta).expect("solver output stays in range");
    GadgetSetting { input, euler }
}

/// `[[cos α/2, −sin α/2], [sin α/2, cos α/2]]`
pub fn gate_rotation_axis(alpha: f64) -> Matrix2 {
    rotation_matrix(alpha / 2.0)
}

/// `e^{−iβσ₃/2} = diag(e^{−iβ/2}, e^{iβ/2})`
pub fn gate_rotation_z(beta: f64) -> Matrix2 {
    exp_i_sigma3(-beta / 2.0)
}

/// Upper end of the `ζ` range searched by [`best_single_chart_fidelity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaRange {
    /// `ζ ∈ [0, π]`: `ζ` plays the role of the polar angle `θ`.
    PolarChart,
    /// `ζ ∈ [0, 2π]`: the full Euler range.
    Full,
}

impl ZetaRange {
    pub fn max(self) -> f64 {
        match self {
            ZetaRange::PolarChart => PI,
            ZetaRange::Full => TAU,
        }
    }
}

/// Best fidelity to `target` reachable from input `|0⟩` with `ξ = 0`,
/// searched over an inclusive `eta_steps × zeta_steps` grid of
/// `η ∈ [0, π]` and the chosen `ζ` range.
pub fn best_single_chart_fidelity(
    target: &PureState,
    eta_steps: usize,
    zeta_steps: usize,
    zeta_range: ZetaRange,
) -> f64 {
    let step = |max: f64, k: usize, n: usize| {
        if n <= 1 {
            0.0
        } else {
            max * k as f64 / (n - 1) as f64
        }
    };
    let mut best = 0.0_f64;
    for i in 0..eta_steps {
        let eta = step(PI, i, eta_steps);
        for j in 0..zeta_steps {
            let zeta = step(zeta_range.max(), j, zeta_steps);
            let e = EulerAngles::new(0.0, eta, zeta).expect("grid stays in range");
            best = best.max(fidelity(target, &prepare(&PureState::zero(), &e)));
        }
    }
    best
}
