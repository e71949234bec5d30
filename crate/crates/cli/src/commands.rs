use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::path::Path;

use hopf_gadget::gadget::{
    euler_unitary, gadget_unitary, plate_angles_from_euler, prepare, target_to_gadget, validated_branch,
    EulerAngles, PlateAngles, SignBranch,
};
use hopf_gadget::hopf::{
    fiber_sample, hopf_project, numerical_rank, ratio_chart, stereographic_inverse, ExtendedComplex,
    SpherePoint,
};
use hopf_gadget::qubit::{bloch_from_density, density_matrix, fidelity, state_from_angles};
use hopf_gadget::verify::{self, Bound, Report, VerifyConfig};
use hopf_gadget::{BlochAngles, Complex64, Matrix2, PureState, Tolerances};
use serde::Serialize;
use serde_json::{json, Value};

/// Invalid arguments; reported with exit status 2.
#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<hopf_gadget::Error> for UsageError {
    fn from(e: hopf_gadget::Error) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    fn at_most(name: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_owned(),
            passed: residual <= tolerance,
            residual,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: &'static str,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
}

impl CommandResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Degrees to radians, exact at multiples of 90°.
pub fn degrees_to_radians(deg: f64) -> f64 {
    deg / 180.0 * PI
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn state_json(psi: &PureState) -> Value {
    json!({ "a": complex_json(psi.a()), "b": complex_json(psi.b()) })
}

fn matrix_json(m: &Matrix2) -> Value {
    let e = m.entries();
    json!([
        [complex_json(e[0][0]), complex_json(e[0][1])],
        [complex_json(e[1][0]), complex_json(e[1][1])]
    ])
}

fn euler_json(e: &EulerAngles) -> Value {
    json!({ "xi": e.xi(), "eta": e.eta(), "zeta": e.zeta() })
}

fn plates_json(p: &PlateAngles) -> Value {
    json!({ "q1": p.q1, "h1": p.h1, "q2": p.q2, "h2": p.h2, "sign_branch": p.sign_branch })
}

fn ensure_finite(name: &str, v: f64) -> Result<(), UsageError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(UsageError(format!("{name} must be a finite number, got {v}")))
    }
}

pub fn cmd_prepare(theta: f64, phi: f64, tol: &Tolerances) -> Result<CommandResult, UsageError> {
    ensure_finite("theta", theta)?;
    ensure_finite("phi", phi)?;
    if !(0.0..=PI).contains(&theta) {
        return Err(UsageError(format!(
            "theta = {theta} is out of range: θ must lie in [0, π] radians (phi in [0, 2π))"
        )));
    }
    if !(0.0..TAU).contains(&phi) {
        return Err(UsageError(format!(
            "phi = {phi} is out of range: φ must lie in [0, 2π) radians (theta in [0, π])"
        )));
    }
    let target = BlochAngles::new(theta, phi)?;
    let setting = target_to_gadget(&target);
    let branch = validated_branch();
    let plates = plate_angles_from_euler(&setting.euler, branch);
    let out = prepare(&setting.input.state(), &setting.euler);
    let through_plates = setting.input.state().transformed(&plates.unitary());
    let target_state = state_from_angles(target);

    Ok(CommandResult {
        command: "prepare",
        inputs: json!({ "theta": theta, "phi": phi }),
        outputs: json!({
            "input": setting.input,
            "euler": euler_json(&setting.euler),
            "plates": plates_json(&plates),
            "state": state_json(&out),
            "target": state_json(&target_state),
        }),
        checks: vec![
            Check::at_most("target_fidelity", 1.0 - fidelity(&target_state, &out), tol.fid),
            Check::at_most("plate_stack_fidelity", 1.0 - fidelity(&target_state, &through_plates), tol.fid),
        ],
    })
}

pub fn cmd_project(a: Complex64, b: Complex64, tol: &Tolerances) -> Result<CommandResult, UsageError> {
    for (name, v) in [("a-re", a.re), ("a-im", a.im), ("b-re", b.re), ("b-im", b.im)] {
        ensure_finite(name, v)?;
    }
    let psi = PureState::with_tolerance(a, b, tol.norm)?;
    let point = hopf_project(&psi);
    let chart = ratio_chart(&psi);
    let bloch = bloch_from_density(&density_matrix(&psi));
    let p = point.to_array();
    let mirror_residual = {
        let d = [p[0] - bloch.x, p[1] - bloch.y, p[2] + bloch.z];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    };
    let chart_json = match chart {
        ExtendedComplex::Finite(z) => complex_json(z),
        ExtendedComplex::Infinity => json!("infinity"),
    };

    Ok(CommandResult {
        command: "project",
        inputs: json!({ "a_re": a.re, "a_im": a.im, "b_re": b.re, "b_im": b.im }),
        outputs: json!({
            "sphere_point": p,
            "chart": chart_json,
            "bloch_vector": bloch.to_array(),
        }),
        checks: vec![
            Check::at_most("mirror_relation", mirror_residual, tol.proj),
            Check::at_most(
                "chart_agreement",
                stereographic_inverse(chart).distance(&point),
                // The chart is cut off at |a| ≤ ε_pole; the residual there is O(|a|).
                if chart.is_infinite() { tol.proj.max(2.0 * tol.pole) } else { tol.proj },
            ),
        ],
    })
}

/// CSV body: header `alpha,x1,x2,x3,x4`, 17 significant digits per value.
pub fn fiber_csv(phases: &[f64], rows: &[[f64; 4]]) -> String {
    let mut out = String::from("alpha,x1,x2,x3,x4\n");
    for (alpha, r) in phases.iter().zip(rows) {
        writeln!(out, "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}", alpha, r[0], r[1], r[2], r[3])
            .expect("writing to a String");
    }
    out
}

pub fn cmd_fiber(
    x: f64,
    y: f64,
    z: f64,
    n: usize,
    out: Option<&Path>,
    tol: &Tolerances,
) -> Result<CommandResult, UsageError> {
    for (name, v) in [("x", x), ("y", y), ("z", z)] {
        ensure_finite(name, v)?;
    }
    let base = SpherePoint::with_tolerance(x, y, z, tol.norm)?;
    let fiber = fiber_sample(&base, n)?;
    let rows = fiber.real_rows();
    let csv = fiber_csv(&fiber.phases, &rows);

    let mut outputs = json!({ "rows": rows.len() });
    match out {
        Some(path) => {
            std::fs::write(path, &csv)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
            outputs["csv_path"] = json!(path.display().to_string());
        }
        None => outputs["csv"] = json!(csv),
    }

    let mut checks = vec![Check::at_most("projection_residual", fiber.max_projection_residual(), tol.proj)];
    // Two antipodal samples span only a line; the circle shows from three on.
    if n >= 3 {
        let rank = numerical_rank(&rows, tol.rank_cutoff);
        checks.push(Check {
            name: "great_circle_rank".to_owned(),
            passed: rank == 2,
            residual: (rank as f64 - 2.0).abs(),
            tolerance: 0.0,
        });
    }

    Ok(CommandResult {
        command: "fiber",
        inputs: json!({ "x": x, "y": y, "z": z, "n": n }),
        outputs,
        checks,
    })
}

pub fn cmd_decompose(xi: f64, eta: f64, zeta: f64, tol: &Tolerances) -> Result<CommandResult, UsageError> {
    for (name, v) in [("xi", xi), ("eta", eta), ("zeta", zeta)] {
        ensure_finite(name, v)?;
    }
    if !(0.0..=PI).contains(&eta) {
        return Err(UsageError(format!("eta = {eta}: η is restricted to [0, π]")));
    }
    let e = EulerAngles::new(xi, eta, zeta)?;
    let branch = validated_branch();
    let gadget = gadget_unitary(&e, branch);
    let euler = euler_unitary(&e);
    let agreement = gadget.phase_agreement(&euler);
    let branches: serde_json::Map<String, Value> = SignBranch::ALL
        .iter()
        .map(|b| {
            let key = serde_json::to_value(b).expect("enum serializes").as_str().unwrap_or_default().to_owned();
            (key, plates_json(&plate_angles_from_euler(&e, *b)))
        })
        .collect();

    Ok(CommandResult {
        command: "decompose",
        inputs: json!({ "xi": xi, "eta": eta, "zeta": zeta }),
        outputs: json!({
            "plates": branches,
            "validated_branch": branch,
            "gadget_matrix": matrix_json(&gadget),
            "euler_matrix": matrix_json(&euler),
            "phase_agreement": agreement,
        }),
        checks: vec![
            Check::at_most("phase_agreement", 1.0 - agreement, tol.fid),
            Check::at_most("unitarity", gadget.unitarity_residual(), tol.mat),
        ],
    })
}

pub fn report_result(report: &Report) -> CommandResult {
    let checks = report
        .families
        .iter()
        .map(|f| Check {
            name: f.name.clone(),
            passed: f.passed,
            residual: f.value,
            tolerance: f.tolerance,
        })
        .collect();
    CommandResult {
        command: "verify",
        inputs: json!({ "seed": report.seed, "samples": report.samples, "tolerance_scale": report.tolerance_scale }),
        outputs: json!({
            "families": report.families,
            "all_passed": report.all_passed(),
        }),
        checks,
    }
}

pub fn cmd_verify(seed: u64, samples: usize, tolerance_scale: f64) -> Result<(CommandResult, Report), UsageError> {
    if samples < 1 {
        return Err(UsageError("samples must be at least 1".to_owned()));
    }
    let report = verify::run(&VerifyConfig {
        seed,
        samples,
        tolerance_scale,
    });
    Ok((report_result(&report), report))
}

/// Human-readable lines, 12 significant digits.
pub fn summary_lines(report: &Report) -> Vec<String> {
    report
        .families
        .iter()
        .map(|f| {
            let op = match f.bound {
                Bound::AtMost => "<=",
                Bound::Above => ">",
            };
            format!(
                "{} {:<32} value {:.11e} {op} {:.11e} (n = {})",
                if f.passed { "PASS" } else { "FAIL" },
                f.name,
                f.value,
                f.tolerance,
                f.samples
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn prepare_north_pole() {
        let r = cmd_prepare(0.0, 0.0, &tol()).unwrap();
        assert!(r.passed());
        assert_eq!(r.outputs["input"], "zero");
        assert_eq!(r.outputs["state"]["a"]["re"], 1.0);
        assert_eq!(r.outputs["state"]["b"]["re"], 0.0);
        let q1 = r.outputs["plates"]["q1"].as_f64().unwrap();
        assert!((q1 - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn prepare_eastern_target() {
        let r = cmd_prepare(FRAC_PI_2, FRAC_PI_2, &tol()).unwrap();
        assert_eq!(r.outputs["input"], "one");
        assert_eq!(r.outputs["euler"]["eta"], FRAC_PI_2);
        assert_eq!(r.outputs["euler"]["zeta"], FRAC_PI_2);
        assert!(r.checks.iter().all(|c| c.residual < 1e-10));
    }

    #[test]
    fn prepare_rejects_out_of_range() {
        let err = cmd_prepare(4.0, 0.0, &tol()).unwrap_err();
        assert!(err.0.contains("[0, π]"));
        assert!(cmd_prepare(1.0, TAU, &tol()).is_err());
        assert!(cmd_prepare(f64::NAN, 0.0, &tol()).is_err());
    }

    #[test]
    fn project_examples() {
        let r = cmd_project(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), &tol()).unwrap();
        assert_eq!(r.outputs["sphere_point"], json!([0.0, 0.0, -1.0]));
        assert_eq!(r.outputs["chart"], json!({ "re": 0.0, "im": 0.0 }));

        let r = cmd_project(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), &tol()).unwrap();
        assert_eq!(r.outputs["sphere_point"], json!([0.0, 0.0, 1.0]));
        assert_eq!(r.outputs["chart"], "infinity");
        assert!(r.passed());

        let r = cmd_project(Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0), &tol()).unwrap();
        let p: Vec<f64> = serde_json::from_value(r.outputs["sphere_point"].clone()).unwrap();
        assert!((p[0] - 0.96).abs() < 1e-15 && p[1] == 0.0 && (p[2] - 0.28).abs() < 1e-15);
        assert!(r.passed());

        let err = cmd_project(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), &tol()).unwrap_err();
        assert!(err.0.contains("|a|²+|b|²"), "{err}");
    }

    #[test]
    fn fiber_examples() {
        let r = cmd_fiber(0.0, 0.0, -1.0, 4, None, &tol()).unwrap();
        let csv = r.outputs["csv"].as_str().unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "alpha,x1,x2,x3,x4");
        assert_eq!(lines.len(), 5);
        assert!(r.passed());

        let r = cmd_fiber(1.0, 0.0, 0.0, 64, None, &tol()).unwrap();
        assert_eq!(r.outputs["rows"], 64);
        assert!(r.checks[0].residual < 1e-10);

        assert!(cmd_fiber(0.0, 0.0, 0.5, 8, None, &tol()).is_err());
        assert!(cmd_fiber(0.0, 0.0, 1.0, 1, None, &tol()).is_err());
    }

    #[test]
    fn csv_uses_seventeen_significant_digits() {
        let csv = fiber_csv(&[0.1], &[[1.0 / 3.0, 0.0, -2.0, 1e-300]]);
        let row = csv.lines().nth(1).unwrap();
        assert_eq!(
            row,
            "1.0000000000000001e-1,3.3333333333333331e-1,0.0000000000000000e0,-2.0000000000000000e0,1.0000000000000000e-300"
        );
        let parsed: Vec<f64> = row.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(parsed, vec![0.1, 1.0 / 3.0, 0.0, -2.0, 1e-300]);
    }

    #[test]
    fn decompose_examples() {
        let r = cmd_decompose(0.0, 0.0, 0.0, &tol()).unwrap();
        let up = &r.outputs["plates"]["upper"];
        assert_eq!(up["q1"], PI / 4.0);
        assert_eq!(up["h1"], -PI / 4.0);
        assert_eq!(up["q2"], -PI / 4.0);
        assert_eq!(up["h2"], PI / 4.0);
        assert!(r.outputs["plates"]["lower"].is_object());
        assert!(r.passed());

        let err = cmd_decompose(0.0, 3.5, 0.0, &tol()).unwrap_err();
        assert!(err.0.contains("η is restricted to [0, π]"));
    }

    #[test]
    fn degree_conversion_is_exact_on_right_angles() {
        assert_eq!(degrees_to_radians(180.0), PI);
        assert_eq!(degrees_to_radians(90.0), FRAC_PI_2);
        assert_eq!(degrees_to_radians(360.0), TAU);
    }

    #[test]
    fn verify_summary_has_one_line_per_family() {
        let (result, report) = cmd_verify(1, 1, 1.0).unwrap();
        assert!(result.passed());
        let lines = summary_lines(&report);
        assert_eq!(lines.len(), report.families.len());
        assert!(lines.iter().all(|l| l.starts_with("PASS")));
        assert!(cmd_verify(1, 0, 1.0).is_err());
    }
}
