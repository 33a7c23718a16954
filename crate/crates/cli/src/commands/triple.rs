use serde_json::json;
use superbracket::canonical::{build_l0, verify_embedding, CanonicalEmbedding};
use superbracket::lie::{BilinearForm, GradedAlgebra};
use superbracket::report::CheckLimits;
use superbracket::triple::{check_lemma_2_1, check_triple_axioms, equivalences, trace_form, triple_from_lie, TripleSystem};
use superbracket::Error;

use crate::input::{CliError, CliResult};
use crate::report::{names, pair_violation, residuals, Check, Report};

/// Defining identities, multiplication-operator identities and, with a
/// form, the invariance conditions and the trace form.
pub fn triple_checks(t: &TripleSystem, limits: &CheckLimits) -> CliResult<Vec<Check>> {
    let b = t.basis();
    let axioms = check_triple_axioms(t, limits)?;
    let mut checks = vec![
        Check::new(
            "grading",
            axioms.grading.is_empty(),
            json!({
                "count": axioms.grading.count,
                "first": axioms.grading.samples.iter().take(3)
                    .map(|&(j, k, l)| names(b, &[j, k, l])).collect::<Vec<_>>(),
            }),
        ),
        Check::new("first_pair_symmetry", axioms.skew.is_empty(), residuals(b, &axioms.skew)),
        Check::new("cyclic", axioms.cyclic.is_empty(), residuals(b, &axioms.cyclic)),
        Check::new("derivation", axioms.derivation.is_empty(), residuals(b, &axioms.derivation)),
    ];
    let ops = check_lemma_2_1(t, limits)?;
    checks.push(Check::new("left_operator_symmetry", ops.left_skew.is_empty(), residuals(b, &ops.left_skew)));
    checks.push(Check::new("left_left_commutator", ops.left_left.is_empty(), residuals(b, &ops.left_left)));
    checks.push(Check::new("left_right_commutator", ops.left_right.is_empty(), residuals(b, &ops.left_right)));
    let tr = trace_form(t);
    checks.push(Check::new(
        "left_supertrace",
        tr.left_supertrace.is_empty(),
        residuals(b, &tr.left_supertrace),
    ));
    let Some(g) = t.form() else {
        checks.push(Check::info("form", json!("absent")));
        return Ok(checks);
    };
    let eq = equivalences(t)?;
    checks.push(Check::new(
        "form_grade_block",
        g.grade_block_violation().is_none(),
        pair_violation(b, g.grade_block_violation()),
    ));
    checks.push(Check::new(
        "form_symmetry",
        g.symmetry_violation(t.delta()).is_none(),
        pair_violation(b, g.symmetry_violation(t.delta())),
    ));
    checks.push(Check::new("form_nondegenerate", g.is_nondegenerate(), json!({ "rank": g.rank() })));
    checks.push(Check::new("invariance_a", eq.invariance_a.is_empty(), residuals(b, &eq.invariance_a)));
    checks.push(Check::new("invariance_b", eq.invariance_b.is_empty(), residuals(b, &eq.invariance_b)));
    checks.push(Check::new("invariance_c", eq.invariance_c.is_empty(), residuals(b, &eq.invariance_c)));
    checks.push(Check::new(
        "last_pair_symmetry",
        eq.last_pair_skew.is_empty(),
        residuals(b, &eq.last_pair_skew),
    ));
    checks.push(Check::info(
        "trace_form",
        json!({ "gram": crate::report::matrix_json(tr.form.gram()), "nondegenerate": tr.nondegenerate }),
    ));
    Ok(checks)
}

pub fn verify(t: &TripleSystem, limits: &CheckLimits) -> CliResult<Report> {
    let mut report = Report::new("verify", t.name());
    report.checks = triple_checks(t, limits)?;
    Ok(report)
}

pub fn from_lie(a: &GradedAlgebra, g: &BilinearForm, limits: &CheckLimits) -> CliResult<(TripleSystem, Report)> {
    let t = triple_from_lie(a, g)?;
    let mut report = Report::new("triple-from-lie", a.name());
    report.push(Check::info("dimension", json!(t.dim())));
    report.checks.extend(triple_checks(&t, limits)?);
    Ok((t, report))
}

pub const ANTI_LIE_REFUSAL: &str =
    "the canonical embedding does not work for the case δ = -1; only δ = +1 triple systems embed";

pub fn embed(t: &TripleSystem) -> CliResult<(CanonicalEmbedding, Report)> {
    if t.delta().is_minus() {
        return Err(CliError::Usage(format!("{}: {ANTI_LIE_REFUSAL}", t.name())));
    }
    let e = build_l0(t)?;
    let v = verify_embedding(&e);
    let mut report = Report::new("embed", t.name());
    report.push(Check::info(
        "dimensions",
        json!({ "v": t.dim(), "m": e.m_dim(), "l0": e.l0().dim() }),
    ));
    let refusal = |r: &Option<Error>| r.as_ref().map(|e| e.to_string());
    report.push(Check::new("l0_lie", v.l0_lie.passes(), json!({
        "antisymmetry_violations": v.l0_lie.antisymmetry.count,
        "jacobi_violations": v.l0_lie.jacobi.count,
    })));
    report.push(Check::new(
        "l0_quasi_classical",
        v.l0_refusal.is_none(),
        json!({ "reason": refusal(&v.l0_refusal) }),
    ));
    report.push(Check::new("m_lie", v.m_lie.passes(), json!({
        "antisymmetry_violations": v.m_lie.antisymmetry.count,
        "jacobi_violations": v.m_lie.jacobi.count,
    })));
    report.push(Check::new(
        "m_quasi_classical",
        v.m_refusal.is_none(),
        json!({ "reason": refusal(&v.m_refusal) }),
    ));
    report.push(Check::new("block_structure", v.block_structure, json!({})));
    report.push(Check::new("representation", v.representation, json!({})));
    let gi = &v.generator_invariance;
    report.push(Check::new(
        "generator_invariance",
        gi.invariance.is_empty(),
        json!({ "count": gi.invariance.count, "first": gi.invariance.samples.iter().take(3)
            .map(|r| names(t.basis(), &r.indices)).collect::<Vec<_>>() }),
    ));
    report.push(Check::new(
        "generator_expansion",
        gi.expansion.is_empty(),
        json!({ "count": gi.expansion.count, "first": gi.expansion.samples.iter().take(3)
            .map(|r| names(t.basis(), &r.indices)).collect::<Vec<_>>() }),
    ));
    Ok((e, report))
}
