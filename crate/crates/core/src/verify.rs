//! Seeded invariant suite.
//!
//! Every family draws from its own ChaCha stream keyed by `(seed, family)`,
//! so a family's result does not depend on which other families ran or in
//! what order. Reports are sorted by family name.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::angle::circular_distance;
use crate::gadget::{
    best_single_chart_fidelity, euler_unitary, gadget_unitary, half_wave, plate_angles_from_euler,
    prepare_eastern, prepare_western, quarter_wave, rotation_matrix, target_to_gadget, validated_branch,
    EulerAngles, InputChoice, ZetaRange,
};
use crate::group_action::{
    orbit_equal_within, projective_class_equal_within, same_representative, scalar_act, u1_act, RealVectorN,
    U1Element,
};
use crate::hopf::{
    fiber_sample, hopf_project, numerical_rank, ratio_chart, stereographic_forward, stereographic_inverse,
    ExtendedComplex, SpherePoint,
};
use crate::matrix::Matrix2;
use crate::qubit::{
    angles_from_state, bloch_from_density, bloch_vector_from_angles, canonical_representative, density_matrix,
    fidelity, inner_product, same_ray_within, state_from_angles, BlochAngles, PureState,
};
use crate::tolerance::Tolerances;

/// Polar steps of the Bloch coverage grid (endpoints included).
pub const GRID_THETA_STEPS: usize = 50;
/// Azimuthal steps of the Bloch coverage grid over `[0, 2π)`.
pub const GRID_PHI_STEPS: usize = 100;
/// `η` steps of the single-chart witness search.
pub const WITNESS_ETA_STEPS: usize = 200;
/// `ζ` steps of the single-chart witness search.
pub const WITNESS_ZETA_STEPS: usize = 400;
/// Required gap `1 − best fidelity` for the single-chart witness.
pub const WITNESS_GAP: f64 = 1e-4;
/// Samples per fiber.
pub const FIBER_SAMPLES: usize = 64;
/// Upper bound on the number of fibers checked.
pub const MAX_FIBERS: usize = 100;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub tolerance_scale: f64,
}

impl VerifyConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        Self {
            seed,
            samples,
            tolerance_scale: 1.0,
        }
    }

    pub fn tolerances(&self) -> Tolerances {
        Tolerances::scaled(self.tolerance_scale)
    }
}

/// How a family's `value` is compared with its `tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Pass when `value ≤ tolerance` (a residual or failure count).
    AtMost,
    /// Pass when `value > tolerance` (a gap that must stay open).
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckFamily {
    pub name: String,
    pub samples: usize,
    pub value: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub passed: bool,
}

impl CheckFamily {
    pub fn at_most(name: &str, samples: usize, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_owned(),
            samples,
            value,
            tolerance,
            bound: Bound::AtMost,
            passed: value <= tolerance,
        }
    }

    pub fn above(name: &str, samples: usize, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_owned(),
            samples,
            value,
            tolerance,
            bound: Bound::Above,
            passed: value > tolerance,
        }
    }

    /// A family of boolean checks: `value` is the failure count, tolerance 0.
    pub fn failures(name: &str, samples: usize, failures: usize) -> Self {
        Self::at_most(name, samples, failures as f64, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub samples: usize,
    pub tolerance_scale: f64,
    pub families: Vec<CheckFamily>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.families.iter().all(|f| f.passed)
    }

    pub fn family(&self, name: &str) -> Option<&CheckFamily> {
        self.families.iter().find(|f| f.name == name)
    }
}

/// Random stream for one family.
pub fn family_rng(seed: u64, family: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // FNV-1a over the family name picks the stream.
    let stream = family
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325_u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3));
    rng.set_stream(stream);
    rng
}

/// Haar-uniform state: uniform point on S² times a uniform fiber phase.
pub fn random_state<R: Rng>(rng: &mut R) -> PureState {
    let cos_theta: f64 = rng.gen_range(-1.0..=1.0);
    let theta = cos_theta.acos();
    let phi = rng.gen_range(0.0..TAU);
    let alpha = rng.gen_range(0.0..TAU);
    let half = theta / 2.0;
    PureState::normalized(
        Complex64::from_polar(half.cos(), alpha),
        Complex64::from_polar(half.sin(), alpha + phi),
    )
    .expect("unit amplitudes")
}

pub fn random_angles<R: Rng>(rng: &mut R) -> BlochAngles {
    BlochAngles::new(rng.gen_range(0.0..=PI), rng.gen_range(0.0..TAU)).expect("sampled in range")
}

pub fn random_euler<R: Rng>(rng: &mut R) -> EulerAngles {
    EulerAngles::new(rng.gen_range(0.0..=TAU), rng.gen_range(0.0..=PI), rng.gen_range(0.0..=TAU))
        .expect("sampled in range")
}

pub fn random_sphere_point<R: Rng>(rng: &mut R) -> SpherePoint {
    hopf_project(&random_state(rng))
}

/// The `(θ, φ)` coverage grid: `θ` over `[0, π]` inclusive, `φ` over `[0, 2π)`.
pub fn bloch_grid() -> Vec<BlochAngles> {
    let mut out = Vec::with_capacity(GRID_THETA_STEPS * GRID_PHI_STEPS);
    for i in 0..GRID_THETA_STEPS {
        let theta = PI * i as f64 / (GRID_THETA_STEPS - 1) as f64;
        for j in 0..GRID_PHI_STEPS {
            let phi = TAU * j as f64 / GRID_PHI_STEPS as f64;
            out.push(BlochAngles::new(theta, phi).expect("grid stays in range"));
        }
    }
    out
}

/// Whether the `|0⟩` chart is the one required for a target azimuth.
pub fn expects_zero_chart(phi: f64) -> bool {
    phi == 0.0 || phi >= PI
}

fn max_of(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, f64::max)
}

fn vec3_norm(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

pub fn gadget_euler_agreement(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "gadget.euler_agreement");
    let branch = validated_branch();
    let worst_gap = max_of((0..n).map(|_| {
        let e = random_euler(&mut rng);
        1.0 - gadget_unitary(&e, branch).phase_agreement(&euler_unitary(&e))
    }));
    CheckFamily::at_most("gadget.euler_agreement", n, worst_gap, tol.fid)
}

pub fn gadget_unitarity(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "gadget.unitarity");
    let branch = validated_branch();
    let worst = max_of((0..n).map(|_| {
        let e = random_euler(&mut rng);
        let phi = rng.gen_range(-TAU..TAU);
        let plates = plate_angles_from_euler(&e, branch);
        [
            rotation_matrix(phi),
            half_wave(phi),
            quarter_wave(phi),
            euler_unitary(&e),
            gadget_unitary(&e, branch),
            plates.unitary(),
        ]
        .iter()
        .map(Matrix2::unitarity_residual)
        .fold(0.0, f64::max)
    }));
    CheckFamily::at_most("gadget.unitarity", n, worst, tol.mat)
}

pub fn half_wave_involution(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "gadget.half_wave_involution");
    let minus_i = -Matrix2::identity();
    let worst = max_of((0..n).map(|_| {
        let h = half_wave(rng.gen_range(-TAU..TAU));
        (h * h).max_abs_diff(&minus_i)
    }));
    CheckFamily::at_most("gadget.half_wave_involution", n, worst, tol.mat)
}

pub fn hopf_chart_agreement(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "hopf.chart_agreement");
    let mut worst = 0.0_f64;
    let mut taken = 0;
    while taken < n {
        let psi = random_state(&mut rng);
        if psi.a().norm() <= tol.pole {
            continue;
        }
        taken += 1;
        worst = worst.max(stereographic_inverse(ratio_chart(&psi)).distance(&hopf_project(&psi)));
    }
    CheckFamily::at_most("hopf.chart_agreement", n, worst, tol.proj)
}

/// Returns the projection and density-matrix families of the ray check.
pub fn ray_invariance(seed: u64, n: usize, tol: &Tolerances) -> [CheckFamily; 2] {
    let mut rng = family_rng(seed, "hopf.ray_invariance");
    let (mut proj, mut dens) = (0.0_f64, 0.0_f64);
    for _ in 0..n {
        let psi = random_state(&mut rng);
        let alpha = rng.gen_range(0.0..TAU);
        let moved = psi.with_global_phase(alpha);
        proj = proj.max(hopf_project(&moved).distance(&hopf_project(&psi)));
        dens = dens.max(density_matrix(&moved).matrix().max_abs_diff(density_matrix(&psi).matrix()));
    }
    [
        CheckFamily::at_most("hopf.ray_invariance", n, proj, tol.proj),
        CheckFamily::at_most("density.phase_invariance", n, dens, tol.mat),
    ]
}

pub fn orthogonal_antipodes(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "hopf.orthogonal_antipodes");
    let worst = max_of((0..n).map(|_| {
        let psi = random_state(&mut rng);
        let perp = PureState::normalized(-psi.b().conj(), psi.a().conj()).expect("unit");
        hopf_project(&psi).distance(&hopf_project(&perp).antipode())
    }));
    CheckFamily::at_most("hopf.orthogonal_antipodes", n, worst, tol.proj)
}

pub fn stereographic_round_trip(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "hopf.stereographic_round_trip");
    let mut failures = 0;
    for _ in 0..n {
        let p = random_sphere_point(&mut rng);
        if stereographic_inverse(stereographic_forward(&p)).distance(&p) > tol.proj {
            failures += 1;
        }
        let z = stereographic_forward(&p);
        if !stereographic_forward(&stereographic_inverse(z)).approx_eq(&z, tol.proj * (1.0 + z.finite().map_or(0.0, |z| z.norm_sqr()))) {
            failures += 1;
        }
    }
    if stereographic_forward(&stereographic_inverse(ExtendedComplex::Infinity)) != ExtendedComplex::Infinity {
        failures += 1;
    }
    CheckFamily::failures("hopf.stereographic_round_trip", n, failures)
}

/// Returns the projection and great-circle rank families.
pub fn fiber_geometry(seed: u64, fibers: usize, tol: &Tolerances) -> [CheckFamily; 2] {
    let mut rng = family_rng(seed, "fiber.geometry");
    let mut worst = 0.0_f64;
    let mut rank_failures = 0;
    for _ in 0..fibers {
        let base = random_sphere_point(&mut rng);
        let fiber = fiber_sample(&base, FIBER_SAMPLES).expect("n ≥ 2");
        worst = worst.max(fiber.max_projection_residual());
        if numerical_rank(&fiber.real_rows(), tol.rank_cutoff) != 2 {
            rank_failures += 1;
        }
    }
    [
        CheckFamily::at_most("fiber.projection", fibers, worst, tol.proj),
        CheckFamily::failures("fiber.great_circle_rank", fibers, rank_failures),
    ]
}

/// Returns the fidelity and chart-assignment families over the full grid.
pub fn two_chart_coverage(tol: &Tolerances) -> [CheckFamily; 2] {
    let grid = bloch_grid();
    let mut worst = 0.0_f64;
    let mut wrong_chart = 0;
    for g in &grid {
        let setting = target_to_gadget(g);
        let out = setting.prepare();
        worst = worst.max(1.0 - fidelity(&state_from_angles(*g), &out));
        let zero = setting.input == InputChoice::Zero;
        if zero != expects_zero_chart(g.phi()) || setting.euler.xi() != 0.0 {
            wrong_chart += 1;
        }
    }
    [
        CheckFamily::at_most("coverage.two_chart_fidelity", grid.len(), worst, tol.fid),
        CheckFamily::failures("coverage.chart_assignment", grid.len(), wrong_chart),
    ]
}

/// Gap `1 − best fidelity` for the target `(π/2, π/2)` from input `|0⟩`.
pub fn single_chart_witness(tol: &Tolerances) -> CheckFamily {
    let target = state_from_angles(BlochAngles::new(PI / 2.0, PI / 2.0).expect("in range"));
    let best = best_single_chart_fidelity(&target, WITNESS_ETA_STEPS, WITNESS_ZETA_STEPS, ZetaRange::PolarChart);
    CheckFamily::above(
        "coverage.single_chart_gap",
        WITNESS_ETA_STEPS * WITNESS_ZETA_STEPS,
        1.0 - best,
        WITNESS_GAP * tol.scale,
    )
}

/// Returns the inner-product and projection families.
pub fn antipodality(seed: u64, n: usize, tol: &Tolerances) -> [CheckFamily; 2] {
    let mut rng = family_rng(seed, "antipodality");
    let (mut inner, mut proj) = (0.0_f64, 0.0_f64);
    for _ in 0..n {
        let eta = rng.gen_range(0.0..=PI);
        let zeta = rng.gen_range(0.0..=TAU);
        let west = prepare_western(eta, zeta).expect("in range");
        let east = prepare_eastern(eta, zeta).expect("in range");
        inner = inner.max(inner_product(&east, &west).norm());
        let (pe, pw) = (hopf_project(&east).to_array(), hopf_project(&west).to_array());
        proj = proj.max(vec3_norm([pe[0] + pw[0], pe[1] + pw[1], pe[2] + pw[2]]));
    }
    [
        CheckFamily::at_most("antipodality.inner_product", n, inner, tol.mat),
        CheckFamily::at_most("antipodality.projection", n, proj, tol.proj),
    ]
}

/// Returns the Hopf-mirror and Bloch-vector families over the full grid.
pub fn convention_mirror(tol: &Tolerances) -> [CheckFamily; 2] {
    let grid = bloch_grid();
    let (mut hopf, mut bloch) = (0.0_f64, 0.0_f64);
    for g in &grid {
        let (st, ct) = g.theta().sin_cos();
        let (sp, cp) = g.phi().sin_cos();
        let p = hopf_project(&state_from_angles(*g)).to_array();
        let r = bloch_vector_from_angles(*g).to_array();
        let mirror = [st * cp, st * sp, -ct];
        let direct = [st * cp, st * sp, ct];
        hopf = hopf.max(vec3_norm([p[0] - mirror[0], p[1] - mirror[1], p[2] - mirror[2]]));
        bloch = bloch.max(vec3_norm([r[0] - direct[0], r[1] - direct[1], r[2] - direct[2]]));
    }
    [
        CheckFamily::at_most("convention.hopf_mirror", grid.len(), hopf, tol.proj),
        CheckFamily::at_most("convention.bloch_direct", grid.len(), bloch, tol.proj),
    ]
}

/// Returns the triangle and round-trip families.
pub fn bloch_chart(seed: u64, n: usize, tol: &Tolerances) -> [CheckFamily; 2] {
    let mut rng = family_rng(seed, "bloch.chart");
    let (mut triangle, mut round) = (0.0_f64, 0.0_f64);
    for _ in 0..n {
        let g = random_angles(&mut rng);
        let psi = state_from_angles(g);
        let r = bloch_from_density(&density_matrix(&psi));
        triangle = triangle.max(r.distance(&bloch_vector_from_angles(g)));
        let back = angles_from_state(&psi);
        round = round
            .max((back.theta() - g.theta()).abs())
            .max(circular_distance(back.phi(), g.phi()));
    }
    [
        CheckFamily::at_most("bloch.consistency_triangle", n, triangle, tol.mat),
        CheckFamily::at_most("bloch.round_trip", n, round, tol.ang),
    ]
}

pub fn density_purity(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "density.purity");
    let worst = max_of((0..n).map(|_| density_matrix(&random_state(&mut rng)).purity_residual()));
    CheckFamily::at_most("density.purity", n, worst, tol.mat)
}

pub fn pauli_algebra(tol: &Tolerances) -> CheckFamily {
    let s = Matrix2::paulis();
    let i = Complex64::i();
    let mut worst = 0.0_f64;
    for j in 0..3 {
        for k in 0..3 {
            let expected = if j == k {
                Matrix2::identity()
            } else {
                // σ_j σ_k = i ε_jkl σ_l with l the remaining index.
                let l = 3 - j - k;
                let sign = if (j + 1) % 3 == k { 1.0 } else { -1.0 };
                s[l].scale(i * sign)
            };
            worst = worst.max((s[j] * s[k]).max_abs_diff(&expected));
        }
    }
    CheckFamily::at_most("pauli.algebra", 9, worst, tol.mat)
}

pub fn canonical_representative_check(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "representative.idempotence");
    let mut failures = 0;
    for _ in 0..n {
        let psi = random_state(&mut rng);
        let r = canonical_representative(&psi);
        if canonical_representative(&r) != r || !same_ray_within(&psi, &r, tol.fid) {
            failures += 1;
        }
    }
    CheckFamily::failures("representative.idempotence", n, failures)
}

/// Orbit equivalence axioms, partition property, and the bridge to the
/// projection, over triples drawn from shared and distinct orbits.
pub fn orbit_axioms(seed: u64, n: usize, tol: &Tolerances) -> [CheckFamily; 3] {
    let mut rng = family_rng(seed, "group.orbit");
    let eq = |a: &PureState, b: &PureState| orbit_equal_within(a, b, tol.fid);
    let (mut relation, mut partition, mut bridge) = (0, 0, 0);
    for _ in 0..n {
        let p = random_state(&mut rng);
        let q = random_state(&mut rng);
        let p2 = p.with_global_phase(rng.gen_range(0.0..TAU));
        let p3 = p.with_global_phase(rng.gen_range(0.0..TAU));
        // Mix shared and distinct orbits in the transitivity triple.
        let third = if rng.gen_bool(0.5) { p3 } else { q };

        let reflexive = eq(&p, &p) && eq(&q, &q);
        let symmetric = eq(&p, &q) == eq(&q, &p) && eq(&p, &p2) == eq(&p2, &p);
        let transitive = !(eq(&p, &p2) && eq(&p2, &third)) || eq(&p, &third);
        let closed = eq(&p, &p2) && eq(&p2, &p3);
        if !(reflexive && symmetric && transitive && closed) {
            relation += 1;
        }

        // [x] = [y] or [x] ∩ [y] = ∅, decided on canonical representatives.
        for (a, b) in [(&p, &p2), (&p, &q)] {
            let same_rep = same_representative(a, b, tol.ang);
            if eq(a, b) != same_rep {
                partition += 1;
            }
        }

        if hopf_project(&p).distance(&hopf_project(&p2)) > tol.proj {
            bridge += 1;
        }
    }
    [
        CheckFamily::failures("group.orbit_equivalence", n, relation),
        CheckFamily::failures("group.partition", n, partition),
        CheckFamily::failures("group.hopf_bridge", n, bridge),
    ]
}

/// Identity, composition and bijection axioms of the U(1) action on states.
pub fn u1_axioms(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "group.u1_action");
    let mut failures = 0;
    for _ in 0..n {
        let psi = random_state(&mut rng);
        let g1 = U1Element::new(rng.gen_range(0.0..TAU));
        let g2 = U1Element::new(rng.gen_range(0.0..TAU));
        let identity = u1_act(&U1Element::identity(), &psi) == psi;
        let composed = u1_act(&g1, &u1_act(&g2, &psi)).max_abs_diff(&u1_act(&g1.compose(&g2), &psi)) <= tol.norm;
        let bijective = u1_act(&g1.inverse(), &u1_act(&g1, &psi)).max_abs_diff(&psi) <= tol.norm;
        let normalized = (u1_act(&g1, &psi).norm_sqr() - 1.0).abs() <= tol.norm;
        if !(identity && composed && bijective && normalized) {
            failures += 1;
        }
    }
    CheckFamily::failures("group.u1_action", n, failures)
}

/// Identity, composition and bijection axioms of the ℝ* action on ℝⁿ, plus
/// projective-class membership of every scaled vector.
pub fn scalar_axioms(seed: u64, n: usize, tol: &Tolerances) -> CheckFamily {
    let mut rng = family_rng(seed, "group.scalar_action");
    let mut failures = 0;
    for _ in 0..n {
        let dim = rng.gen_range(1..=6);
        let v = RealVectorN::new((0..dim).map(|_| rng.gen_range(-10.0..10.0)).collect()).expect("nonempty");
        let mut scalar = || {
            let mag: f64 = rng.gen_range(0.1..10.0);
            if rng.gen_bool(0.5) {
                mag
            } else {
                -mag
            }
        };
        let (l1, l2) = (scalar(), scalar());
        let identity = scalar_act(1.0, &v).expect("nonzero") == v;
        let lhs = scalar_act(l1, &scalar_act(l2, &v).expect("nonzero")).expect("nonzero");
        let rhs = scalar_act(l1 * l2, &v).expect("nonzero");
        let scale = 1e2 * (1.0 + v.components().iter().fold(0.0_f64, |m, x| m.max(x.abs())));
        let composed = lhs.max_abs_diff(&rhs) <= tol.mat * scale;
        let back = scalar_act(1.0 / l1, &scalar_act(l1, &v).expect("nonzero")).expect("nonzero");
        let bijective = back.max_abs_diff(&v) <= tol.mat * scale;
        let same_class = v.is_zero() || projective_class_equal_within(&v, &lhs, tol.fid).expect("same dimension");
        let rejects_zero = scalar_act(0.0, &v).is_err();
        if !(identity && composed && bijective && same_class && rejects_zero) {
            failures += 1;
        }
    }
    CheckFamily::failures("group.scalar_action", n, failures)
}

/// Runs every family.
pub fn run(config: &VerifyConfig) -> Report {
    let tol = config.tolerances();
    let (seed, n) = (config.seed, config.samples);
    let fibers = n.clamp(1, MAX_FIBERS);

    let mut families = vec![
        gadget_euler_agreement(seed, n, &tol),
        gadget_unitarity(seed, n, &tol),
        half_wave_involution(seed, n, &tol),
        hopf_chart_agreement(seed, n, &tol),
    ];
    families.extend(ray_invariance(seed, n, &tol));
    families.push(orthogonal_antipodes(seed, n, &tol));
    families.push(stereographic_round_trip(seed, n, &tol));
    families.extend(fiber_geometry(seed, fibers, &tol));
    families.extend(two_chart_coverage(&tol));
    families.push(single_chart_witness(&tol));
    families.extend(antipodality(seed, n, &tol));
    families.extend(convention_mirror(&tol));
    families.extend(bloch_chart(seed, n, &tol));
    families.push(density_purity(seed, n, &tol));
    families.push(pauli_algebra(&tol));
    families.push(canonical_representative_check(seed, n, &tol));
    families.extend(orbit_axioms(seed, n, &tol));
    families.push(u1_axioms(seed, n, &tol));
    families.push(scalar_axioms(seed, n, &tol));
    families.sort_by(|a, b| a.name.cmp(&b.name));

    Report {
        seed,
        samples: n,
        tolerance_scale: config.tolerance_scale,
        families,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_independent_of_order() {
        let tol = Tolerances::default();
        let a = hopf_chart_agreement(7, 50, &tol);
        let _ = gadget_euler_agreement(7, 50, &tol);
        assert_eq!(hopf_chart_agreement(7, 50, &tol), a);
        assert_ne!(family_rng(7, "a").gen::<u64>(), family_rng(7, "b").gen::<u64>());
    }

    #[test]
    fn random_state_is_normalized_and_spread() {
        let mut rng = family_rng(1, "states");
        let states: Vec<_> = (0..2000).map(|_| random_state(&mut rng)).collect();
        assert!(states.iter().all(|s| (s.norm_sqr() - 1.0).abs() < 1e-14));
        // Haar measure puts the projection's third coordinate uniform on [−1, 1].
        let mean_z = states.iter().map(|s| hopf_project(s).x3()).sum::<f64>() / states.len() as f64;
        assert!(mean_z.abs() < 0.05, "{mean_z}");
    }

    #[test]
    fn grid_shape_and_boundaries() {
        let g = bloch_grid();
        assert_eq!(g.len(), 5000);
        assert_eq!(g[0].theta(), 0.0);
        assert_eq!(g[g.len() - 1].theta(), PI);
        assert!(g.iter().any(|a| a.phi() == PI));
        assert!(expects_zero_chart(0.0) && expects_zero_chart(PI) && !expects_zero_chart(1.0));
    }

    #[test]
    fn small_run_passes_and_is_sorted() {
        let report = run(&VerifyConfig::new(3, 1));
        assert!(report.all_passed(), "{report:#?}");
        let names: Vec<_> = report.families.iter().map(|f| f.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn tight_scale_breaks_a_check() {
        let report = run(&VerifyConfig {
            seed: 5,
            samples: 50,
            tolerance_scale: 1e-9,
        });
        assert!(!report.all_passed());
    }
}
