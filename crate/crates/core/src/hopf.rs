//! The Hopf fibration `S¹ ↪ S³ → S²`.
//!
//! The projection factors as the ratio chart `h(a, b) = b/a` into the
//! extended complex plane followed by inverse stereographic projection from
//! the north pole. [`hopf_project`] evaluates the composite in closed form,
//! which has no chart singularity at `a = 0`.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qubit::PureState;
use crate::tolerance::{EPS_NORM, EPS_POLE};

/// A point of `ℂ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match self {
            Self::Finite(z) => Some(*z),
            Self::Infinity => None,
        }
    }

    /// Modulus/phase form `R e^{iθ}`; `None` at infinity.
    pub fn to_polar(&self) -> Option<(f64, f64)> {
        self.finite().map(|z| z.to_polar())
    }

    /// Equality with `eps` on finite values; infinity only equals infinity.
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        match (self, other) {
            (Self::Infinity, Self::Infinity) => true,
            (Self::Finite(a), Self::Finite(b)) => (a - b).norm() <= eps,
            _ => false,
        }
    }
}

/// A point of the base space `S² ⊂ ℝ³`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    x1: f64,
    x2: f64,
    x3: f64,
}

impl SpherePoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        Self::with_tolerance(x1, x2, x3, EPS_NORM)
    }

    pub fn with_tolerance(x1: f64, x2: f64, x3: f64, eps_norm: f64) -> Result<Self> {
        let norm_sq = x1 * x1 + x2 * x2 + x3 * x3;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > eps_norm {
            return Err(Error::NotUnitVector { norm_sq });
        }
        Ok(Self { x1, x2, x3 })
    }

    /// Rescales a nonzero vector onto the sphere.
    pub fn normalized(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let n = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::NotUnitVector { norm_sq: n * n });
        }
        Ok(Self {
            x1: x1 / n,
            x2: x2 / n,
            x3: x3 / n,
        })
    }

    const fn from_parts(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn x3(&self) -> f64 {
        self.x3
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn antipode(&self) -> Self {
        Self::from_parts(-self.x1, -self.x2, -self.x3)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        let d = [self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    }
}

/// `h(a, b) = b/a`, or `∞` when `|a| ≤ ε_pole`.
pub fn ratio_chart(psi: &PureState) -> ExtendedComplex {
    if psi.a().norm() > EPS_POLE {
        ExtendedComplex::Finite(psi.b() / psi.a())
    } else {
        ExtendedComplex::Infinity
    }
}

/// `T⁻¹(X + iY) = (2X, 2Y, X²+Y²−1) / (X²+Y²+1)`, with `T⁻¹(∞)` the north pole.
pub fn stereographic_inverse(z: ExtendedComplex) -> SpherePoint {
    match z {
        ExtendedComplex::Infinity => SpherePoint::from_parts(0.0, 0.0, 1.0),
        ExtendedComplex::Finite(z) => {
            let r2 = z.norm_sqr();
            let d = r2 + 1.0;
            SpherePoint::from_parts(2.0 * z.re / d, 2.0 * z.im / d, (r2 - 1.0) / d)
        }
    }
}

/// `T(x₁, x₂, x₃) = (x₁ + i x₂)/(1 − x₃)`, or `∞` within `ε_pole` of the north pole.
pub fn stereographic_forward(p: &SpherePoint) -> ExtendedComplex {
    let denom = 1.0 - p.x3;
    if denom.abs() > EPS_POLE {
        ExtendedComplex::Finite(Complex64::new(p.x1 / denom, p.x2 / denom))
    } else {
        ExtendedComplex::Infinity
    }
}

/// `π(a, b) = (2 Re(b a*), 2 Im(b a*), |b|² − |a|²)`
pub fn hopf_project(psi: &PureState) -> SpherePoint {
    let (a, b) = (psi.a(), psi.b());
    let w = b * a.conj();
    SpherePoint::from_parts(2.0 * w.re, 2.0 * w.im, b.norm_sqr() - a.norm_sqr())
}

/// One point of `π⁻¹(p)`, built by inverting the closed-form projection:
/// `θ' = atan2(√(p₁²+p₂²), −p₃)`, `φ' = atan2(p₂, p₁)`.
pub fn fiber_base_state(p: &SpherePoint) -> PureState {
    let theta = p.x1.hypot(p.x2).atan2(-p.x3);
    let phi = p.x2.atan2(p.x1);
    let half = theta / 2.0;
    PureState::from_parts(
        Complex64::new(half.cos(), 0.0),
        Complex64::from_polar(half.sin(), phi),
    )
}

/// Evenly spaced samples of the circle `π⁻¹(base)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Fiber {
    pub base: SpherePoint,
    pub samples: Vec<PureState>,
    pub phases: Vec<f64>,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Largest distance between a sample's projection and the base point.
    pub fn max_projection_residual(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| hopf_project(s).distance(&self.base))
            .fold(0.0, f64::max)
    }

    /// Samples as rows of `ℝ⁴` coordinates.
    pub fn real_rows(&self) -> Vec<[f64; 4]> {
        self.samples.iter().map(PureState::real_coordinates).collect()
    }
}

/// `{ e^{2πik/n} ψ₀ : k = 0..n }` with `ψ₀` from [`fiber_base_state`].
pub fn fiber_sample(p: &SpherePoint, n: usize) -> Result<Fiber> {
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    let psi0 = fiber_base_state(p);
    let phases: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let samples = phases.iter().map(|&a| psi0.with_global_phase(a)).collect();
    Ok(Fiber {
        base: *p,
        samples,
        phases,
    })
}

/// Singular values (descending) of a matrix given by rows.
pub fn singular_values<const C: usize>(rows: &[[f64; C]]) -> Vec<f64> {
    let m = DMatrix::from_fn(rows.len(), C, |r, c| rows[r][c]);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Number of singular values strictly above `cutoff`.
pub fn numerical_rank<const C: usize>(rows: &[[f64; C]], cutoff: f64) -> usize {
    singular_values(rows).into_iter().filter(|s| *s > cutoff).count()
}
