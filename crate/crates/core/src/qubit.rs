//! Pure qubit states, the Bloch chart and density matrices.
//!
//! A state `|ψ⟩ = a|0⟩ + b|1⟩` is a point `(x₁, x₂, x₃, x₄)` of the unit
//! 3-sphere with `a = x₁ + i x₂`, `b = x₃ + i x₄`. Physically indistinguishable
//! states differ by a global phase; [`same_ray`] and
//! [`canonical_representative`] work with that equivalence.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angle::wrap_tau;
use crate::error::{Error, Result};
use crate::matrix::Matrix2;
use crate::tolerance::{EPS_FID, EPS_MAT, EPS_NORM, EPS_POLE};

/// A normalized pair of amplitudes `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState {
    a: Complex64,
    b: Complex64,
}

impl PureState {
    /// Builds a state, rejecting `| |a|²+|b|² − 1 | > ε_norm`.
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        Self::with_tolerance(a, b, EPS_NORM)
    }

    pub fn with_tolerance(a: Complex64, b: Complex64, eps_norm: f64) -> Result<Self> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > eps_norm {
            return Err(Error::NotNormalized { norm_sq });
        }
        Ok(Self { a, b })
    }

    /// Builds a state by rescaling `(a, b)` to unit norm. Intended for
    /// sampling; ordinary callers should use [`PureState::new`].
    pub fn normalized(a: Complex64, b: Complex64) -> Result<Self> {
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::NotNormalized { norm_sq: n * n });
        }
        Ok(Self { a: a / n, b: b / n })
    }

    /// For results of norm-preserving arithmetic on valid states.
    pub(crate) const fn from_parts(a: Complex64, b: Complex64) -> Self {
        Self { a, b }
    }

    /// `|0⟩`
    pub const fn zero() -> Self {
        Self::from_parts(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// `|1⟩`
    pub const fn one() -> Self {
        Self::from_parts(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [self.a, self.b]
    }

    /// `(x₁, x₂, x₃, x₄)` on `S³ ⊂ ℝ⁴`.
    pub fn real_coordinates(&self) -> [f64; 4] {
        [self.a.re, self.a.im, self.b.re, self.b.im]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// `e^{iα}|ψ⟩`
    pub fn with_global_phase(&self, alpha: f64) -> Self {
        let p = Complex64::from_polar(1.0, alpha);
        Self::from_parts(p * self.a, p * self.b)
    }

    /// `U|ψ⟩` for a unitary `U`. Unitarity is the caller's responsibility;
    /// the result is renormalization-free.
    pub fn transformed(&self, u: &Matrix2) -> Self {
        let [a, b] = u.apply([self.a, self.b]);
        Self::from_parts(a, b)
    }

    /// Largest modulus of the amplitude difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }
}

/// Polar and azimuthal angles of the Bloch chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochAngles {
    theta: f64,
    phi: f64,
}

impl BlochAngles {
    /// Requires `θ ∈ [0, π]`; `φ` is reduced to `[0, 2π)` and forced to 0
    /// within `ε_pole` of either pole.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::NotFinite {
                name: "theta",
                value: theta,
            });
        }
        if !phi.is_finite() {
            return Err(Error::NotFinite {
                name: "phi",
                value: phi,
            });
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::OutOfRange {
                name: "theta",
                value: theta,
                range: "[0, π]",
            });
        }
        let phi = if theta <= EPS_POLE || PI - theta <= EPS_POLE {
            0.0
        } else {
            wrap_tau(phi)
        };
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// A real 3-vector `(x, y, z)` in the density-matrix expansion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn is_unit(&self, eps: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= eps
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let d = [self.x - other.x, self.y - other.y, self.z - other.z];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    }
}

/// A Hermitian, unit-trace 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(Matrix2);

impl DensityMatrix {
    pub fn new(m: Matrix2) -> Result<Self> {
        Self::with_tolerance(m, EPS_MAT)
    }

    pub fn with_tolerance(m: Matrix2, eps: f64) -> Result<Self> {
        let deviation = m.hermiticity_residual();
        if deviation.is_nan() || deviation > eps {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > eps {
            return Err(Error::BadTrace { trace: trace.re });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.0
    }

    /// `max |(ρ² − ρ)_ij|`; zero for pure states.
    pub fn purity_residual(&self) -> f64 {
        (self.0 * self.0).max_abs_diff(&self.0)
    }

    pub fn is_pure(&self, eps: f64) -> bool {
        self.purity_residual() <= eps
    }
}

/// `|ψ⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`
pub fn state_from_angles(angles: BlochAngles) -> PureState {
    let half = angles.theta / 2.0;
    PureState::from_parts(
        Complex64::new(half.cos(), 0.0),
        Complex64::from_polar(half.sin(), angles.phi),
    )
}

/// Inverse of [`state_from_angles`] up to global phase.
pub fn angles_from_state(psi: &PureState) -> BlochAngles {
    let theta = 2.0 * psi.b.norm().atan2(psi.a.norm());
    let phi = (psi.b * psi.a.conj()).arg();
    // atan2 of non-negative arguments stays in [0, π].
    BlochAngles::new(theta.clamp(0.0, PI), phi).expect("angles derived from a state are finite")
}

/// `ρ = |ψ⟩⟨ψ|`
pub fn density_matrix(psi: &PureState) -> DensityMatrix {
    let (a, b) = (psi.a, psi.b);
    let off = a * b.conj();
    DensityMatrix(Matrix2::new(
        Complex64::new(a.norm_sqr(), 0.0),
        off,
        off.conj(),
        Complex64::new(b.norm_sqr(), 0.0),
    ))
}

/// `r_k = Tr(ρ σ_k)`. Mixed input yields a vector shorter than 1.
pub fn bloch_from_density(rho: &DensityMatrix) -> BlochVector {
    let [s1, s2, s3] = Matrix2::paulis();
    let m = rho.0;
    BlochVector::new(
        (m * s1).trace().re,
        (m * s2).trace().re,
        (m * s3).trace().re,
    )
}

/// `ρ = ½(I + r̂·σ⃗)`
pub fn density_from_bloch(r: &BlochVector) -> Matrix2 {
    let [s1, s2, s3] = Matrix2::paulis();
    (Matrix2::identity() + s1 * r.x + s2 * r.y + s3 * r.z) * 0.5
}

/// `r̂ = (sinθ cosφ, sinθ sinφ, cosθ)`
pub fn bloch_vector_from_angles(angles: BlochAngles) -> BlochVector {
    let (st, ct) = angles.theta.sin_cos();
    let (sp, cp) = angles.phi.sin_cos();
    BlochVector::new(st * cp, st * sp, ct)
}

/// `⟨ψ₁|ψ₂⟩`, conjugate-linear in the first argument.
pub fn inner_product(psi1: &PureState, psi2: &PureState) -> Complex64 {
    psi1.a.conj() * psi2.a + psi1.b.conj() * psi2.b
}

/// `|⟨ψ₁|ψ₂⟩|`
pub fn fidelity(psi1: &PureState, psi2: &PureState) -> f64 {
    inner_product(psi1, psi2).norm()
}

/// Whether `ψ₂ = e^{iα}ψ₁` for some `α`, decided by `|⟨ψ₁|ψ₂⟩| ≥ 1 − ε_fid`.
pub fn same_ray(psi1: &PureState, psi2: &PureState) -> bool {
    same_ray_within(psi1, psi2, EPS_FID)
}

pub fn same_ray_within(psi1: &PureState, psi2: &PureState, eps_fid: f64) -> bool {
    (1.0 - fidelity(psi1, psi2)).abs() <= eps_fid
}

/// Removes the global phase: the first amplitude is made real and
/// non-negative, or the second one when `|a| ≤ ε_pole`.
pub fn canonical_representative(psi: &PureState) -> PureState {
    let (a, b) = (psi.a, psi.b);
    let na = a.norm();
    if na > EPS_POLE {
        let phase = a.conj() / na;
        PureState::from_parts(Complex64::new(na, 0.0), b * phase)
    } else {
        let nb = b.norm();
        let phase = b.conj() / nb;
        PureState::from_parts(a * phase, Complex64::new(nb, 0.0))
    }
}
