//! Numerical tolerances shared by every module.

/// Normalization tolerance for states and unit vectors.
pub const EPS_NORM: f64 = 1e-12;
/// Entrywise matrix tolerance.
pub const EPS_MAT: f64 = 1e-12;
/// Fidelity tolerance: `|⟨ψ₁|ψ₂⟩| = 1` within this.
pub const EPS_FID: f64 = 1e-10;
/// Angle round-trip tolerance.
pub const EPS_ANG: f64 = 1e-9;
/// Below this an amplitude (or `1 − x₃`) counts as zero and the chart switches.
pub const EPS_POLE: f64 = 1e-9;
/// Projection tolerance for chained nonlinear maps.
pub const EPS_PROJ: f64 = 1e-10;
/// Singular-value cutoff for numerical rank.
pub const RANK_CUTOFF: f64 = 1e-8;

/// A full set of tolerances. [`Tolerances::default`] yields the crate
/// constants; [`Tolerances::scaled`] multiplies all of them uniformly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub norm: f64,
    pub mat: f64,
    pub fid: f64,
    pub ang: f64,
    pub pole: f64,
    pub proj: f64,
    pub rank_cutoff: f64,
    /// Factor applied to every constant above.
    pub scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            norm: EPS_NORM,
            mat: EPS_MAT,
            fid: EPS_FID,
            ang: EPS_ANG,
            pole: EPS_POLE,
            proj: EPS_PROJ,
            rank_cutoff: RANK_CUTOFF,
            scale: 1.0,
        }
    }
}

impl Tolerances {
    pub fn scaled(factor: f64) -> Self {
        let d = Self::default();
        Self {
            norm: d.norm * factor,
            mat: d.mat * factor,
            fid: d.fid * factor,
            ang: d.ang * factor,
            pole: d.pole * factor,
            proj: d.proj * factor,
            rank_cutoff: d.rank_cutoff * factor,
            scale: factor,
        }
    }
}
