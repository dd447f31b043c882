//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`). Tolerances are pinned here, not computed.
//!
//! 1. exact operator-identity suite up to n = 30, under 5 s
//! 2. degree-by-degree solution of the deformed relation recovers `[r]`
//! 3. Fock relation residuals across (kind, q, dim) grids
//! 4. classical limits: alternating fermion brackets, second-order
//!    derivative convergence
//! 5. fourth-order integration lands on the exact phase solution for every
//!    model/variant pair
//! 6. closed-form frequency factors match the oracle under a reported
//!    ordering; the generalized-fermion factor matches in magnitude with
//!    the sign flip recorded as a finding
//! 7. the command-line exit-code contract, including negative controls

use std::process::Command;
use std::time::Instant;

use qdeform::dynamics::{
    closed_form_factor_symbolic, closed_form_frequency, closed_form_frequency_magnitude,
    element_frequency, element_frequency_symbolic, exact_evolution, integrate_evolution,
    EvolutionSpec, HamiltonianModel, ModelKind, NOrdering,
};
use qdeform::fock::{relation_residual, FockRep, RepKind};
use qdeform::jackson::{jackson_derivative_numeric, solve_heisenberg_coefficients};
use qdeform::qnum::{basic_int, fermion_classical_limit, BasicNumberKind, QValue};
use qdeform::{rat, Error, HVariant};
use qdeform_cli::suite::identity_suite;

const IDENTITY_BOUND: u32 = 30;
const IDENTITY_TIME_BUDGET_S: f64 = 5.0;
const FOCK_GATE: f64 = 1e-12;
const STD_FERMION_GATE: f64 = 1e-15;
const LIMIT_RATIO_RANGE: (f64, f64) = (80.0, 120.0);
const EVOLVE_GATE: f64 = 1e-8;
const FREQ_GATE: f64 = 1e-12;

fn report(criterion: u32, name: &str, passed: bool) {
    println!(
        "acceptance {criterion} ({name}): {}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "acceptance criterion {criterion} ({name}) failed");
}

fn qv(q: f64) -> QValue {
    QValue::new(q).unwrap()
}

#[test]
fn criterion_1_symbolic_identity_suite() {
    let start = Instant::now();
    let rows = identity_suite(IDENTITY_BOUND, None).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let all_exact = rows.iter().all(|r| r.passed && r.residual == "0");
    let passed = all_exact && rows.len() == 12 && elapsed < IDENTITY_TIME_BUDGET_S;
    for row in rows.iter().filter(|r| !r.passed) {
        eprintln!("  identity {} residual {}", row.identity, row.residual);
    }
    eprintln!("  identity suite: {} checks in {elapsed:.3} s", rows.len());
    report(1, "symbolic identity suite", passed);
}

#[test]
fn criterion_2_deformed_relation_forces_the_bracket() {
    let coeffs = solve_heisenberg_coefficients(30);
    let passed = coeffs.len() == 31
        && coeffs
            .iter()
            .enumerate()
            .all(|(r, d)| *d == basic_int(BasicNumberKind::BosonSymmetric, r as u32));
    report(2, "derivative uniqueness", passed);
}

#[test]
fn criterion_3_fock_relation_residuals() {
    let mut passed = true;
    let mut check = |kind: RepKind, q: f64, dim: usize, gate: f64| {
        let rep = FockRep::new(kind, qv(q), dim).unwrap();
        let residual = relation_residual(&rep);
        if residual >= gate {
            eprintln!("  {} q={q} dim={dim}: residual {residual}", kind.label());
            passed = false;
        }
    };
    for dim in [8, 32, 64] {
        for q in [0.5, 0.9, 1.1, 2.0] {
            check(RepKind::Boson, q, dim, FOCK_GATE);
            check(RepKind::BosonNonsym, q, dim, FOCK_GATE);
        }
        for q in [0.5, 0.9] {
            check(RepKind::GeneralizedFermion, q, dim, FOCK_GATE);
        }
    }
    for q in [0.5, 0.9, 1.1, 2.0] {
        check(RepKind::StandardFermion, q, 2, STD_FERMION_GATE);
    }
    report(3, "fock relation residuals", passed);
}

#[test]
fn criterion_4_classical_limits() {
    let limits_exact =
        (0..=20).all(|n| fermion_classical_limit(n) == rat(if n % 2 == 0 { 0 } else { 1 }, 1));

    let f = |x: f64| x.powi(5);
    let exact = 5.0 * 1.3f64.powi(4);
    let err_coarse = (jackson_derivative_numeric(f, 1.3, qv(1.01)).unwrap() - exact).abs();
    let err_fine = (jackson_derivative_numeric(f, 1.3, qv(1.001)).unwrap() - exact).abs();
    let ratio = err_coarse / err_fine;
    eprintln!("  derivative error {err_coarse:.3e} -> {err_fine:.3e}, ratio {ratio:.1}");
    let second_order = ratio >= LIMIT_RATIO_RANGE.0 && ratio <= LIMIT_RATIO_RANGE.1;

    report(4, "classical limits", limits_exact && second_order);
}

#[test]
fn criterion_5_integration_matches_the_exact_solution() {
    // per-model (q, dim) pairs inside the fixed-step accuracy envelope;
    // every model/variant combination runs at omega t = 10 with 1e4 steps
    let configs: [(ModelKind, &[(f64, usize)]); 4] = [
        (ModelKind::BosonSym, &[(1.1, 16), (2.0, 4)]),
        (ModelKind::BosonNonsym, &[(1.1, 16), (1.5, 4)]),
        (ModelKind::StandardFermion, &[(0.7, 2), (2.0, 2)]),
        (ModelKind::GeneralizedFermion, &[(0.9, 16), (0.5, 6)]),
    ];
    let variants = [
        HVariant::Undeformed,
        HVariant::DeformedQ,
        HVariant::DeformedQinv,
    ];
    let (t_end, steps) = (10.0, 10_000);
    let mut passed = true;
    for (kind, points) in configs {
        for &(q, dim) in points {
            for variant in variants {
                let rep = FockRep::new(kind.rep_kind(), qv(q), dim).unwrap();
                let model = HamiltonianModel::new(kind, 1.0).unwrap();
                let spec = EvolutionSpec::new(rep, model, variant).unwrap();
                let series = integrate_evolution(&spec, t_end, steps);
                let initial = spec.initial().clone();

                let mut worst_err = 0.0f64;
                let mut worst_drift = 0.0f64;
                for (k, matrix) in series.iter().enumerate() {
                    let t = t_end * k as f64 / steps as f64;
                    worst_err = worst_err.max(matrix.max_abs_diff(&exact_evolution(&spec, t)));
                    for ((m, n), z) in initial.data().indexed_iter() {
                        if z.norm() > 0.0 {
                            worst_drift =
                                worst_drift.max((matrix.entry(m, n).norm() - z.norm()).abs());
                        }
                    }
                }
                if worst_err >= EVOLVE_GATE || worst_drift >= EVOLVE_GATE {
                    eprintln!(
                        "  {} {} q={q} dim={dim}: error {worst_err:.2e}, drift {worst_drift:.2e}",
                        kind.label(),
                        variant.label()
                    );
                    passed = false;
                }
            }
        }
    }
    report(5, "integration against the exact solution", passed);
}

#[test]
fn criterion_6_closed_form_frequency_factors() {
    let mut passed = true;

    // exact symbolic agreement, with the matching ordering per combination
    for n in 1..=30u32 {
        let m = i64::from(n);
        let cases = [
            (ModelKind::BosonSym, HVariant::Undeformed, m),
            (ModelKind::BosonSym, HVariant::DeformedQ, m - 1),
            (ModelKind::BosonSym, HVariant::DeformedQinv, m),
        ];
        for (kind, variant, n_sub) in cases {
            let freq = element_frequency_symbolic(kind, variant, n).unwrap();
            let factor = closed_form_factor_symbolic(kind, variant, n_sub).unwrap();
            if freq != factor {
                eprintln!(
                    "  {} {} n={n}: {freq} vs {factor}",
                    kind.label(),
                    variant.label()
                );
                passed = false;
            }
        }
        if !element_frequency_symbolic(ModelKind::BosonNonsym, HVariant::DeformedQ, n)
            .unwrap()
            .is_one()
        {
            passed = false;
        }
        // generalized fermion: exact magnitude agreement, exact sign flip
        let freq =
            element_frequency_symbolic(ModelKind::GeneralizedFermion, HVariant::DeformedQinv, n)
                .unwrap();
        let factor =
            closed_form_factor_symbolic(ModelKind::GeneralizedFermion, HVariant::DeformedQinv, m)
                .unwrap();
        if freq != factor.neg() {
            eprintln!("  gen-fermion n={n}: expected sign flip, got {freq} vs {factor}");
            passed = false;
        }
    }
    let std_freq =
        element_frequency_symbolic(ModelKind::StandardFermion, HVariant::DeformedQinv, 1).unwrap();
    let std_factor =
        closed_form_factor_symbolic(ModelKind::StandardFermion, HVariant::DeformedQinv, 1).unwrap();
    passed &= std_freq == std_factor;

    // reported orderings at concrete q
    let boson = HamiltonianModel::new(ModelKind::BosonSym, 1.0).unwrap();
    for q in [0.5, 2.0] {
        for n in 1..=10u32 {
            let checks = [
                (HVariant::Undeformed, NOrdering::AtN),
                (HVariant::DeformedQ, NOrdering::AtPredecessor),
                (HVariant::DeformedQinv, NOrdering::AtN),
            ];
            for (variant, expected) in checks {
                match closed_form_frequency(&boson, variant, n, qv(q)) {
                    Ok(matched) if matched.ordering == expected => {}
                    other => {
                        eprintln!("  boson-sym {} n={n} q={q}: {other:?}", variant.label());
                        passed = false;
                    }
                }
            }
        }
    }

    // q-independent frequency of the nonsymmetric boson under its variant
    let nonsym = HamiltonianModel::new(ModelKind::BosonNonsym, 1.0).unwrap();
    for q in [0.5, 2.0] {
        for n in 1..=15u32 {
            let f = element_frequency(&nonsym, HVariant::DeformedQ, qv(q), n - 1, n).unwrap();
            if (f - 1.0).abs() >= FREQ_GATE {
                eprintln!("  nonsym q={q} n={n}: {f}");
                passed = false;
            }
        }
    }

    // generalized fermion: no ordering matches, magnitude does
    let genf = HamiltonianModel::new(ModelKind::GeneralizedFermion, 1.0).unwrap();
    for q in [0.5, 0.9] {
        for n in 1..=10u32 {
            match closed_form_frequency(&genf, HVariant::DeformedQinv, n, qv(q)) {
                Err(Error::NoOrderingMatches { oracle, at_n, .. }) => {
                    if (oracle + at_n).abs() >= FREQ_GATE * oracle.abs().max(1.0) {
                        eprintln!("  gen-fermion q={q} n={n}: oracle {oracle}, factor {at_n}");
                        passed = false;
                    }
                }
                other => {
                    eprintln!(
                        "  gen-fermion q={q} n={n}: expected the documented sign \
                               discrepancy, got {other:?}"
                    );
                    passed = false;
                }
            }
            let against_magnitude =
                closed_form_frequency_magnitude(&genf, HVariant::DeformedQinv, n, qv(q));
            if !matches!(&against_magnitude, Ok(m) if m.ordering == NOrdering::AtN) {
                passed = false;
            }
        }
    }

    report(6, "closed-form frequency factors", passed);
}

#[test]
fn criterion_7_cli_exit_contract() {
    let bin = env!("CARGO_BIN_EXE_qdeform");
    let code = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
            .status
            .code()
    };
    let healthy_identity = code(&["identity"]) == Some(0);
    let healthy_fock = code(&[
        "fock", "--kind", "boson", "--q", "0.9", "--q", "2", "--dim", "16",
    ]) == Some(0);
    let identity_control = code(&["identity", "--inject-fault", "basic-number"]) == Some(1);
    let fock_control = code(&[
        "fock",
        "--kind",
        "boson",
        "--q",
        "2",
        "--dim",
        "8",
        "--inject-fault",
        "ladder-entry",
    ]) == Some(1);
    report(
        7,
        "cli exit contract",
        healthy_identity && healthy_fock && identity_control && fock_control,
    );
}
