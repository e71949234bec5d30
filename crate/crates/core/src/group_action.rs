//! The two concrete group actions whose orbits partition their sets:
//! U(1) acting on states by a global phase, and ℝ* acting on ℝⁿ by scaling.

use num_complex::Complex64;

use crate::angle::wrap_tau;
use crate::error::{Error, Result};
use crate::qubit::{canonical_representative, fidelity, PureState};
use crate::tolerance::EPS_FID;

/// `e^{iα}` with `α ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct U1Element {
    alpha: f64,
}

impl U1Element {
    pub fn new(alpha: f64) -> Self {
        Self {
            alpha: wrap_tau(alpha),
        }
    }

    pub const fn identity() -> Self {
        Self { alpha: 0.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.alpha)
    }

    /// Group product `e^{iα₁} e^{iα₂}`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(self.alpha + other.alpha)
    }

    pub fn inverse(&self) -> Self {
        Self::new(-self.alpha)
    }
}

/// `(e^{iα}, |ψ⟩) ↦ e^{iα}|ψ⟩`
pub fn u1_act(g: &U1Element, psi: &PureState) -> PureState {
    psi.with_global_phase(g.alpha)
}

/// Orbit membership under U(1), decided by fidelity.
pub fn orbit_equal(psi1: &PureState, psi2: &PureState) -> bool {
    orbit_equal_within(psi1, psi2, EPS_FID)
}

pub fn orbit_equal_within(psi1: &PureState, psi2: &PureState, eps_fid: f64) -> bool {
    (1.0 - fidelity(psi1, psi2)).abs() <= eps_fid
}

/// Whether two states share a canonical orbit representative up to `eps`.
pub fn same_representative(psi1: &PureState, psi2: &PureState, eps: f64) -> bool {
    canonical_representative(psi1).max_abs_diff(&canonical_representative(psi2)) <= eps
}

/// A nonempty real vector.
#[derive(Debug, Clone, PartialEq)]
pub struct RealVectorN(Vec<f64>);

impl RealVectorN {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Self(components))
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0.0)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `(λ, v) ↦ λv` for `λ ∈ ℝ*`.
pub fn scalar_act(lambda: f64, v: &RealVectorN) -> Result<RealVectorN> {
    if lambda == 0.0 {
        return Err(Error::ZeroScalar);
    }
    if !lambda.is_finite() {
        return Err(Error::NotFinite {
            name: "lambda",
            value: lambda,
        });
    }
    Ok(RealVectorN(v.0.iter().map(|x| lambda * x).collect()))
}

/// Sine of the angle between `v` and `w`.
///
/// The Gram determinant is summed from 2×2 minors (Lagrange's identity), so
/// nearly parallel vectors do not lose it to cancellation.
pub fn sine_between(v: &RealVectorN, w: &RealVectorN) -> f64 {
    let (a, b) = (&v.0, &w.0);
    let mut gram = 0.0;
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let minor = a[i] * b[j] - a[j] * b[i];
            gram += minor * minor;
        }
    }
    (gram.sqrt() / (v.norm() * w.norm())).min(1.0)
}

/// Whether `w = λv` for some `λ ≠ 0`: the line through the origin is shared.
pub fn projective_class_equal(v: &RealVectorN, w: &RealVectorN) -> Result<bool> {
    projective_class_equal_within(v, w, EPS_FID)
}

pub fn projective_class_equal_within(v: &RealVectorN, w: &RealVectorN, eps: f64) -> Result<bool> {
    if v.dim() != w.dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: w.dim(),
        });
    }
    if v.is_zero() || w.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(sine_between(v, w) <= eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::hopf_project;
    use crate::tolerance::{EPS_NORM, EPS_PROJ};
    use proptest::prelude::*;
    use std::f64::consts::{PI, TAU};

    fn vecn(xs: &[f64]) -> RealVectorN {
        RealVectorN::new(xs.to_vec()).unwrap()
    }

    fn state(ar: f64, ai: f64, br: f64, bi: f64) -> PureState {
        PureState::normalized(Complex64::new(ar, ai), Complex64::new(br, bi)).unwrap()
    }

    #[test]
    fn u1_act_examples() {
        let psi = state(0.3, -0.2, 0.5, 0.9);
        assert_eq!(u1_act(&U1Element::identity(), &psi), psi);
        let flipped = u1_act(&U1Element::new(PI), &PureState::zero());
        assert!((flipped.a() - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(U1Element::new(TAU).alpha(), 0.0);
        assert!((U1Element::new(-1.0).alpha() - (TAU - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn orbit_equal_examples() {
        assert!(!orbit_equal(&PureState::zero(), &PureState::one()));
        let psi = state(0.3, -0.2, 0.5, 0.9);
        assert!(orbit_equal(&psi, &canonical_representative(&psi)));
    }

    #[test]
    fn scalar_act_examples() {
        let v = vecn(&[1.0, 0.0, 3.0]);
        assert_eq!(scalar_act(1.0, &v).unwrap(), v);
        assert_eq!(scalar_act(2.0, &v).unwrap(), vecn(&[2.0, 0.0, 6.0]));
        assert_eq!(scalar_act(0.0, &v), Err(Error::ZeroScalar));
        assert!(RealVectorN::new(vec![]).is_err());
    }

    #[test]
    fn projective_class_examples() {
        assert!(projective_class_equal(&vecn(&[1.0, 2.0]), &vecn(&[-3.0, -6.0])).unwrap());
        assert!(!projective_class_equal(&vecn(&[1.0, 0.0]), &vecn(&[0.0, 1.0])).unwrap());
        // By hand: the minors are (0, 1e−7, 1e−7), so |v∧w| = √2·1e−7 and
        // |v||w| ≈ √3·√12 = 6, giving sin ≈ 2.357e−8. The cosine deficit
        // 1 − |cos| ≈ sin²/2 ≈ 3e−16 sits below double precision resolution.
        let v = vecn(&[1.0, 1.0, 1.0]);
        let w = vecn(&[2.0, 2.0, 2.0000001]);
        let sine = sine_between(&v, &w);
        assert!((sine - 2.3570226e-8).abs() < 1e-14, "{sine}");
        assert!(!projective_class_equal(&v, &w).unwrap());
    }

    #[test]
    fn projective_class_errors() {
        assert_eq!(
            projective_class_equal(&vecn(&[0.0, 0.0]), &vecn(&[1.0, 0.0])),
            Err(Error::ZeroVector)
        );
        assert_eq!(
            projective_class_equal(&vecn(&[1.0]), &vecn(&[1.0, 0.0])),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
    }

    fn arb_state() -> impl Strategy<Value = PureState> {
        (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
            .prop_filter("nonzero", |(a, b, c, d)| a * a + b * b + c * c + d * d > 1e-3)
            .prop_map(|(a, b, c, d)| state(a, b, c, d))
    }

    proptest! {
        #[test]
        fn u1_action_axioms(psi in arb_state(), a1 in 0.0..TAU, a2 in 0.0..TAU) {
            let (g1, g2) = (U1Element::new(a1), U1Element::new(a2));
            let lhs = u1_act(&g1, &u1_act(&g2, &psi));
            let rhs = u1_act(&g1.compose(&g2), &psi);
            prop_assert!(lhs.max_abs_diff(&rhs) <= EPS_NORM);
            let back = u1_act(&g1.inverse(), &u1_act(&g1, &psi));
            prop_assert!(back.max_abs_diff(&psi) <= EPS_NORM);
            prop_assert!(orbit_equal(&psi, &lhs));
            prop_assert!(hopf_project(&psi).distance(&hopf_project(&lhs)) <= EPS_PROJ);
        }

        #[test]
        fn orbit_relation_is_an_equivalence(p in arb_state(), q in arb_state(), a in 0.0..TAU, b in 0.0..TAU) {
            let p2 = p.with_global_phase(a);
            let p3 = p.with_global_phase(b);
            prop_assert!(orbit_equal(&p, &p));
            prop_assert_eq!(orbit_equal(&p, &q), orbit_equal(&q, &p));
            prop_assert!(orbit_equal(&p, &p2) && orbit_equal(&p2, &p3) && orbit_equal(&p, &p3));
            // Partition: same orbit iff same representative.
            prop_assert_eq!(orbit_equal(&p, &q), same_representative(&p, &q, 1e-5));
            prop_assert!(same_representative(&p, &p2, 1e-12));
        }

        #[test]
        fn scalar_action_axioms(xs in proptest::collection::vec(-10.0f64..10.0, 1..6), l1 in 0.1f64..5.0, l2 in -5.0f64..-0.1) {
            let v = RealVectorN::new(xs).unwrap();
            let lhs = scalar_act(l1, &scalar_act(l2, &v).unwrap()).unwrap();
            let rhs = scalar_act(l1 * l2, &v).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
            let back = scalar_act(1.0 / l1, &scalar_act(l1, &v).unwrap()).unwrap();
            prop_assert!(back.max_abs_diff(&v) <= 1e-12);
            if !v.is_zero() {
                prop_assert!(projective_class_equal(&v, &lhs).unwrap());
            }
        }
    }
}
