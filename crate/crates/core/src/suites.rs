//! Assembly of the individual checkers into named verification suites with
//! canonical, machine-readable reports.

use crate::boolalg::BoolAlgebra;
use crate::braid;
use crate::bring_euler::{self, ExpBase};
use crate::incidence;
use crate::jordan::{self, CurveKind, CurveSpec};
use crate::matrix_series::{self, Mat2};
use crate::report::{CheckReport, CheckStatus, SuiteCheck, SuiteReport};
use crate::triple_trig;
use crate::weak_bring;
use std::time::Instant;

/// Checks that are expected to report `refuted-as-printed`: the pair-level
/// exponential equality in its literal form, and the constant-width equality
/// probe against the circle-characterization conjecture. Any other
/// refutation fails the run.
pub const REFUTED_WHITELIST: &[&str] = &["pair_exp_as_printed", "reuleaux_equality_probe"];

/// Frozen count of braid solutions on the two-element carrier, from the
/// exhaustive enumeration of all 256 candidate maps.
pub const BRAID_SOLUTIONS_M2: usize = 43;

fn timed(claim: &str, f: impl FnOnce() -> CheckReport) -> SuiteCheck {
    let start = Instant::now();
    let report = f();
    SuiteCheck::from_report(claim, &report, start.elapsed())
}

/// Folds per-parameter reports into one: first counterexample wins, case
/// counts accumulate.
fn fold_reports(name: &str, reports: impl IntoIterator<Item = CheckReport>) -> CheckReport {
    let mut cases = 0;
    for r in reports {
        cases += r.cases;
        if let Some(w) = r.counterexample {
            return CheckReport::fail(name, cases, w);
        }
    }
    CheckReport::pass(name, cases)
}

fn algebras(max_atoms: u8) -> Vec<BoolAlgebra> {
    (1..=max_atoms).map(|n| BoolAlgebra::new(n).unwrap()).collect()
}

fn bases_for(alg: &BoolAlgebra, base_e: Option<u32>) -> Vec<ExpBase> {
    match base_e {
        Some(mask) => alg
            .element(mask)
            .ok()
            .and_then(|e| ExpBase::new(e).ok())
            .into_iter()
            .collect(),
        None => bring_euler::nonzero_bases(alg),
    }
}

/// The Boolean suite: triple-algebra trigonometry, weak B-ring axioms, and
/// the base-parameterized pair exponential. Unary identities run for
/// `1..=max_atoms`; pairwise identities are capped at two atoms.
pub fn boolean_suite(max_atoms: u8, base_e: Option<u32>) -> SuiteReport {
    let mut report = SuiteReport::new("boolean");
    let algs = algebras(max_atoms);
    let pair_cap = max_atoms.min(2);
    let pair_algs = algebras(pair_cap);

    report.push(timed("triple-exp-cos-addition", || {
        fold_reports(
            "triple_exp_cos_addition",
            pair_algs.iter().map(triple_trig::check_exp_addition),
        )
    }));
    report.push(timed("triple-sin-addition", || {
        fold_reports(
            "triple_sin_addition",
            pair_algs.iter().map(triple_trig::check_sin_addition),
        )
    }));
    report.push(timed("triple-product-formula", || {
        fold_reports(
            "triple_product_formula",
            pair_algs.iter().map(triple_trig::check_product_formula),
        )
    }));
    report.push(timed("triple-fundamental", || {
        fold_reports(
            "triple_fundamental",
            algs.iter().map(triple_trig::check_fundamental),
        )
    }));
    report.push(timed("triple-euler-formula", || {
        fold_reports(
            "triple_euler_formula",
            algs.iter().map(triple_trig::check_euler_formula),
        )
    }));
    report.push(timed("triple-euler-point", || {
        fold_reports(
            "triple_euler_point",
            algs.iter().map(triple_trig::check_euler_point),
        )
    }));

    let ring_algs = algebras(max_atoms.min(3));
    report.push(timed("bring-axioms", || {
        fold_reports(
            "bring_axioms",
            ring_algs.iter().map(|alg| {
                let n = alg.atom_count();
                let ring = weak_bring::build_pair_ring(alg).expect("carrier within cap");
                match weak_bring::check_axioms(&ring) {
                    Ok(ax) if ax.all_pass() => {
                        CheckReport::pass(format!("bring_axioms_n{n}"), 11)
                    }
                    Ok(ax) => {
                        let f = ax.first_failure().unwrap();
                        CheckReport::fail(
                            format!("bring_axioms_n{n}"),
                            11,
                            format!(
                                "axiom ({}) {}: {}",
                                f.number,
                                f.description,
                                f.witness.clone().unwrap_or_default()
                            ),
                        )
                    }
                    Err(e) => CheckReport::fail(format!("bring_axioms_n{n}"), 0, e.to_string()),
                }
            }),
        )
    }));
    report.push(timed("bring-decomposition", || {
        fold_reports(
            "bring_decomposition",
            ring_algs.iter().map(|alg| {
                let h = weak_bring::pair_h(alg);
                let mut cases = 0;
                for p in weak_bring::all_pairs(alg) {
                    cases += 1;
                    let a0 = weak_bring::PairElement::new(p.a, alg.bottom());
                    let b0 = weak_bring::PairElement::new(p.b, alg.bottom());
                    let rebuilt =
                        weak_bring::pair_join(&a0, &weak_bring::twisted_meet(&h, &b0));
                    if rebuilt != p {
                        return CheckReport::fail(
                            "bring_decomposition",
                            cases,
                            format!("(a,b)=({:#b},{:#b})", p.a.mask(), p.b.mask()),
                        );
                    }
                }
                CheckReport::pass("bring_decomposition", cases)
            }),
        )
    }));

    // base-parameterized scalar identities, all (or the overridden) bases
    let scalar_names = [
        "scalar_exp_addition",
        "scalar_cos_addition",
        "scalar_sin_addition",
        "scalar_fundamental_squared",
        "scalar_fundamental_plain",
    ];
    for (idx, name) in scalar_names.into_iter().enumerate() {
        let algs = algs.clone();
        report.push(timed(&name.replace('_', "-"), || {
            fold_reports(
                name,
                algs.iter().flat_map(|alg| {
                    bases_for(alg, base_e)
                        .into_iter()
                        .map(move |base| {
                            bring_euler::check_scalar_identities(alg, &base)
                                .into_iter()
                                .nth(idx)
                                .expect("five scalar identities")
                        })
                        .collect::<Vec<_>>()
                }),
            )
        }));
    }

    report.push(timed("euler-pair", || {
        fold_reports(
            "euler_pair",
            algs.iter().flat_map(|alg| {
                bases_for(alg, base_e)
                    .into_iter()
                    .map(|base| bring_euler::check_euler_pair(alg, &base))
                    .collect::<Vec<_>>()
            }),
        )
    }));

    // the two readings of the pair-exponential equality, capped at 2 atoms
    let dual_algs = algebras(max_atoms.min(2));
    let mut printed: Vec<CheckReport> = Vec::new();
    let mut variant: Vec<CheckReport> = Vec::new();
    let start = Instant::now();
    for alg in &dual_algs {
        for base in bases_for(alg, base_e) {
            let dual = bring_euler::check_theorem_pair_exp(alg, &base);
            printed.push(dual.as_printed);
            variant.push(dual.variant);
        }
    }
    let elapsed = start.elapsed();
    // the printed form is expected to be refuted on every base; report the
    // first witness in canonical order as a finding
    let refuted_everywhere = printed.iter().all(|r| !r.passed());
    let first_witness = printed.iter().find_map(|r| r.counterexample.clone());
    report.push(SuiteCheck {
        name: "pair_exp_as_printed".into(),
        claim: "pair-exp-as-printed".into(),
        status: if refuted_everywhere {
            CheckStatus::RefutedAsPrinted
        } else {
            CheckStatus::Fail
        },
        counterexample: first_witness.or_else(|| {
            Some("expected a counterexample but the printed equality held".into())
        }),
        duration: elapsed,
    });
    report.push(SuiteCheck::from_report(
        "pair-exp-homomorphism",
        &fold_reports("pair_exp_homomorphism", variant),
        elapsed,
    ));

    report.canonicalize();
    report
}

/// The braid suite: both solution families, the blend identity, and the
/// exhaustive enumeration on the two-element carrier.
pub fn braid_suite(max_atoms: u8, enumerate: bool) -> SuiteReport {
    let mut report = SuiteReport::new("braid");
    let algs = algebras(max_atoms.min(3));

    report.push(timed("braid-complement", || {
        fold_reports(
            "braid_complement",
            algs.iter().map(|alg| {
                let phi = braid::phi_complement(alg);
                let m = alg.size();
                let verdict = braid::braid_check(&phi);
                if let Some(w) = verdict.witness {
                    return CheckReport::fail(
                        "braid_complement",
                        (m * m * m) as u64,
                        format!("input={:?} lhs={:?} rhs={:?}", w.input, w.lhs, w.rhs),
                    );
                }
                // proof-shape check: both composites equal (z, z', z)
                let full = m - 1;
                let mut cases = 0;
                for x in 0..m {
                    for y in 0..m {
                        for z in 0..m {
                            cases += 1;
                            let expected = (z, full ^ z, z);
                            let t = (x, y, z);
                            if braid::compose_121(&phi, t) != expected
                                || braid::compose_232(&phi, t) != expected
                            {
                                return CheckReport::fail(
                                    "braid_complement",
                                    cases,
                                    format!("composite shape broken at {t:?}"),
                                );
                            }
                        }
                    }
                }
                CheckReport::pass("braid_complement", cases)
            }),
        )
    }));

    report.push(timed("braid-param-family", || {
        fold_reports(
            "braid_param_family",
            algs.iter().map(braid::check_param_family),
        )
    }));

    report.push(timed("braid-blend-equality", || {
        fold_reports(
            "braid_blend_equality",
            algs.iter().map(|alg| {
                let mut cases = 0;
                for x in alg.elements() {
                    cases += 1;
                    if braid::blend(alg, &x) != braid::phi_param(alg, &x) {
                        return CheckReport::fail(
                            "braid_blend_equality",
                            cases,
                            format!("x={:#b}", x.mask()),
                        );
                    }
                }
                CheckReport::pass("braid_blend_equality", cases)
            }),
        )
    }));

    if enumerate {
        report.push(timed("braid-enumeration-m2", || {
            let solutions = braid::enumerate_solutions(2).expect("m = 2 supported");
            let identity = braid::SquareMapTable::identity(2).unwrap();
            let swap = braid::SquareMapTable::from_fn(2, |i, j| (j, i)).unwrap();
            if solutions.len() != BRAID_SOLUTIONS_M2 {
                return CheckReport::fail(
                    "braid_enumeration_m2",
                    256,
                    format!(
                        "expected {} solutions, found {}",
                        BRAID_SOLUTIONS_M2,
                        solutions.len()
                    ),
                );
            }
            if !solutions.contains(&identity) || !solutions.contains(&swap) {
                return CheckReport::fail(
                    "braid_enumeration_m2",
                    256,
                    "identity or swap missing from the solution list".into(),
                );
            }
            CheckReport::pass("braid_enumeration_m2", 256)
        }));
    }

    report.canonicalize();
    report
}

/// The matrix suite over an explicit batch of det-1 matrices.
pub fn matrix_suite(matrices: &[Mat2<f64>], tol_rel: f64, seed: Option<u64>) -> SuiteReport {
    let mut report = SuiteReport::new("matrix");
    if let Some(s) = seed {
        report = report.with_seed(s);
    }

    report.push(timed("matrix-unipotent-exact", || {
        let a = matrix_series::example_unipotent();
        let sum = a.power_sum();
        let nine = num::BigRational::from_integer(9.into());
        let forty_five = num::BigRational::from_integer(45.into());
        let ok = sum.a11 == nine
            && sum.a12 == forty_five
            && sum.a21 == num::BigRational::from_integer(0.into())
            && sum.a22 == nine
            && sum == a.rhs_factored();
        if ok {
            CheckReport::pass("matrix_unipotent_exact", 1)
        } else {
            CheckReport::fail("matrix_unipotent_exact", 1, format!("{sum:?}"))
        }
    }));

    report.push(timed("matrix-diagonal-exact", || {
        let b = matrix_series::example_diagonal();
        let sum = b.power_sum();
        let ok = sum.a11 == num::BigRational::from_integer(1022.into())
            && sum.a22 == num::BigRational::new(511.into(), 512.into())
            && sum == b.rhs_factored();
        if !ok {
            return CheckReport::fail("matrix_diagonal_exact", 1, format!("{sum:?}"));
        }
        // float path on the same matrix
        let bf = Mat2::new(2.0, 0.0, 0.0, 0.5);
        match matrix_series::verify_identity(&bf, 1e-12) {
            Ok(r) if r.pass => CheckReport::pass("matrix_diagonal_exact", 2),
            Ok(r) => CheckReport::fail(
                "matrix_diagonal_exact",
                2,
                format!("float path error {}", r.max_rel_error),
            ),
            Err(e) => CheckReport::fail("matrix_diagonal_exact", 2, e.to_string()),
        }
    }));

    report.push(timed("matrix-random-batch", || {
        let mut cases = 0;
        for m in matrices {
            cases += 1;
            match matrix_series::verify_identity(m, tol_rel) {
                Ok(r) if r.pass => {}
                Ok(r) => {
                    return CheckReport::fail(
                        "matrix_random_batch",
                        cases,
                        format!(
                            "A={:?} max_rel_error={} max_abs_error={}",
                            m, r.max_rel_error, r.max_abs_error
                        ),
                    )
                }
                Err(e) => {
                    return CheckReport::fail(
                        "matrix_random_batch",
                        cases,
                        format!("A={m:?}: {e}"),
                    )
                }
            }
        }
        CheckReport::pass("matrix_random_batch", cases)
    }));

    report.canonicalize();
    report
}

fn float_check(name: &str, conditions: &[(String, bool)]) -> CheckReport {
    for (desc, ok) in conditions {
        if !ok {
            return CheckReport::fail(name, conditions.len() as u64, desc.clone());
        }
    }
    CheckReport::pass(name, conditions.len() as u64)
}

/// The curve suite over the three built-in shapes at acceptance scales.
pub fn curve_suite() -> SuiteReport {
    use std::f64::consts::PI;
    let mut report = SuiteReport::new("curve");

    report.push(timed("curve-circle", || {
        let spec = CurveSpec::new(CurveKind::Circle { radius: 1.0 }, 4096).unwrap();
        match jordan::analyze(&spec) {
            Ok((m, r)) => {
                let dd_minus_area = m.min_central_chord * m.max_diameter - m.area;
                float_check(
                    "curve_circle",
                    &[
                        (
                            format!("L/D = {} should be pi within 1e-5", r.ratio_l_over_diameter),
                            (r.ratio_l_over_diameter - PI).abs() < 1e-5,
                        ),
                        (
                            format!("L/d = {} should be pi within 1e-5", r.ratio_l_over_chord),
                            (r.ratio_l_over_chord - PI).abs() < 1e-5,
                        ),
                        (
                            format!("dD - A = {dd_minus_area} should be 4 - pi within 1e-4"),
                            (dd_minus_area - (4.0 - PI)).abs() < 1e-4,
                        ),
                        (
                            format!(
                                "discriminant {} should be negative",
                                r.quadratic_discriminant
                            ),
                            r.quadratic_discriminant < 0.0,
                        ),
                    ],
                )
            }
            Err(e) => CheckReport::fail("curve_circle", 0, e.to_string()),
        }
    }));

    report.push(timed("curve-ellipse", || {
        let spec = CurveSpec::new(CurveKind::Ellipse { a: 2.0, b: 1.0 }, 8192).unwrap();
        match jordan::analyze(&spec) {
            Ok((m, r)) => {
                let oracle = 4.0 * 2.0 * jordan::complete_elliptic_e(1.0 - 0.25);
                float_check(
                    "curve_ellipse",
                    &[
                        (
                            format!("L = {} should match the oracle {oracle} within 1e-4", m.length),
                            (m.length - oracle).abs() < 1e-4,
                        ),
                        (
                            format!("margin pi - L/D = {}", r.ineq_i_left_margin),
                            r.ineq_i_left_holds && r.ineq_i_left_margin > 0.5,
                        ),
                        (
                            format!("margin L/d - pi = {}", r.ineq_i_right_margin),
                            r.ineq_i_right_holds && r.ineq_i_right_margin > 0.5,
                        ),
                        (
                            format!(
                                "dD = {} should be 8 within 1e-4 and exceed A = {}",
                                m.min_central_chord * m.max_diameter,
                                m.area
                            ),
                            (m.min_central_chord * m.max_diameter - 8.0).abs() < 1e-4
                                && r.ineq_iii_holds,
                        ),
                    ],
                )
            }
            Err(e) => CheckReport::fail("curve_ellipse", 0, e.to_string()),
        }
    }));

    // equality probe: a constant-width non-circle attains L/D = pi, touching
    // the only-the-circle conjecture; reported as a finding, not a failure
    let start = Instant::now();
    let spec = CurveSpec::new(CurveKind::Reuleaux { width: 1.0 }, 4096).unwrap();
    let check = match jordan::analyze(&spec) {
        Ok((m, _)) => {
            let ratio = m.length / m.max_diameter;
            let equality = (ratio - PI).abs() <= 1e-4;
            let non_circle = m.min_central_chord < m.max_diameter - 1e-3;
            SuiteCheck {
                name: "reuleaux_equality_probe".into(),
                claim: "curve-equality-probe".into(),
                status: if equality && non_circle {
                    CheckStatus::RefutedAsPrinted
                } else {
                    CheckStatus::Fail
                },
                counterexample: Some(format!(
                    "constant-width non-circle with L/D = {ratio} (d = {}, D = {})",
                    m.min_central_chord, m.max_diameter
                )),
                duration: start.elapsed(),
            }
        }
        Err(e) => SuiteCheck {
            name: "reuleaux_equality_probe".into(),
            claim: "curve-equality-probe".into(),
            status: CheckStatus::Fail,
            counterexample: Some(e.to_string()),
            duration: start.elapsed(),
        },
    };
    report.push(check);

    report.canonicalize();
    report
}

/// The incidence suite: seeded configuration builds, exact hypothesis and
/// conclusion checks, and the perturbed negative control.
pub fn incidence_suite(trials: u64, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("incidence").with_seed(seed);

    report.push(timed("incidence-hypotheses", || {
        let mut cases = 0;
        for s in seed..seed + trials {
            cases += 1;
            match incidence::build_config(s) {
                Ok(cfg) => {
                    if let Some((l, r, _)) = cfg
                        .hypothesis_relations()
                        .into_iter()
                        .find(|(_, _, ok)| !ok)
                    {
                        return CheckReport::fail(
                            "incidence_hypotheses",
                            cases,
                            format!("seed {s}: relation {l} ∋ {r} broken\n{}", cfg.certificate()),
                        );
                    }
                }
                Err(e) => {
                    return CheckReport::fail(
                        "incidence_hypotheses",
                        cases,
                        format!("seed {s}: {e}"),
                    )
                }
            }
        }
        CheckReport::pass("incidence_hypotheses", cases)
    }));

    report.push(timed("incidence-conclusion", || {
        let mut cases = 0;
        for s in seed..seed + trials {
            cases += 1;
            let cfg = match incidence::build_config(s) {
                Ok(cfg) => cfg,
                Err(e) => {
                    return CheckReport::fail(
                        "incidence_conclusion",
                        cases,
                        format!("seed {s}: {e}"),
                    )
                }
            };
            let outcome = incidence::verify_conclusion(&cfg);
            let witness_ok = outcome
                .o_prime
                .as_ref()
                .map(|t| {
                    incidence::ni(&cfg.p, t)
                        && incidence::ni(&cfg.q, t)
                        && incidence::ni(&cfg.r, t)
                })
                .unwrap_or(false);
            if !outcome.holds() || !witness_ok {
                return CheckReport::fail(
                    "incidence_conclusion",
                    cases,
                    format!(
                        "seed {s}: collinear={} concurrent={} witness={}\n{}",
                        outcome.collinear_ok,
                        outcome.concurrent_ok,
                        witness_ok,
                        cfg.certificate()
                    ),
                );
            }
        }
        CheckReport::pass("incidence_conclusion", cases)
    }));

    report.push(timed("incidence-negative-control", || {
        let mut cases = 0;
        for s in seed..seed + trials {
            cases += 1;
            let cfg = match incidence::build_config(s) {
                Ok(cfg) => cfg,
                Err(e) => {
                    return CheckReport::fail(
                        "incidence_negative_control",
                        cases,
                        format!("seed {s}: {e}"),
                    )
                }
            };
            let outcome = incidence::verify_conclusion(&cfg.perturb_p1());
            if outcome.holds() {
                return CheckReport::fail(
                    "incidence_negative_control",
                    cases,
                    format!("seed {s}: perturbed configuration still passes"),
                );
            }
        }
        CheckReport::pass("incidence_negative_control", cases)
    }));

    report.push(timed("incidence-dual-probe", || {
        let cfg = match incidence::build_config(seed) {
            Ok(cfg) => cfg,
            Err(e) => return CheckReport::fail("incidence_dual_probe", 0, e.to_string()),
        };
        let dual = cfg.dualize();
        if !dual.hypotheses_hold() {
            return CheckReport::fail(
                "incidence_dual_probe",
                1,
                "dual configuration violates a hypothesis".into(),
            );
        }
        if !incidence::verify_conclusion(&dual).holds() {
            return CheckReport::fail(
                "incidence_dual_probe",
                1,
                "dual configuration fails the conclusion".into(),
            );
        }
        if incidence::verify_conclusion(&cfg.perturb_p1().dualize()).holds() {
            return CheckReport::fail(
                "incidence_dual_probe",
                2,
                "dual of the negative control unexpectedly passes".into(),
            );
        }
        CheckReport::pass("incidence_dual_probe", 2)
    }));

    report.canonicalize();
    report
}

/// Everything at default scales, sorted by suite name.
pub fn all_suites() -> Vec<SuiteReport> {
    let mut suites = vec![
        boolean_suite(3, None),
        braid_suite(3, true),
        matrix_suite(&matrix_series::random_sl2(42, 1000), 1e-6, Some(42)),
        curve_suite(),
        incidence_suite(100, 1),
    ];
    suites.sort_by(|a, b| a.suite.cmp(&b.suite));
    suites
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_enumeration_count() {
        let solutions = braid::enumerate_solutions(2).unwrap();
        assert_eq!(solutions.len(), BRAID_SOLUTIONS_M2);
    }

    #[test]
    fn boolean_suite_acceptable() {
        let report = boolean_suite(2, None);
        assert!(report.acceptable(REFUTED_WHITELIST), "{report:#?}");
        // the printed pair equality must surface as a refutation
        let printed = report
            .checks
            .iter()
            .find(|c| c.name == "pair_exp_as_printed")
            .unwrap();
        assert_eq!(printed.status, CheckStatus::RefutedAsPrinted);
        assert!(printed.counterexample.is_some());
    }

    #[test]
    fn braid_suite_acceptable() {
        assert!(braid_suite(2, true).acceptable(REFUTED_WHITELIST));
    }

    #[test]
    fn matrix_suite_acceptable() {
        let batch = matrix_series::random_sl2(7, 100);
        assert!(matrix_suite(&batch, 1e-6, Some(7)).acceptable(REFUTED_WHITELIST));
    }

    #[test]
    fn curve_suite_acceptable() {
        let report = curve_suite();
        assert!(report.acceptable(REFUTED_WHITELIST), "{report:#?}");
        let probe = report
            .checks
            .iter()
            .find(|c| c.name == "reuleaux_equality_probe")
            .unwrap();
        assert_eq!(probe.status, CheckStatus::RefutedAsPrinted);
    }

    #[test]
    fn incidence_suite_acceptable() {
        assert!(incidence_suite(5, 1).acceptable(REFUTED_WHITELIST));
    }
}
