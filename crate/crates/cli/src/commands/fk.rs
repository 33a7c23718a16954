use serde_json::json;
use superbracket::fk::{
    check_fk_condition, check_generalized_fk, check_jordan, check_jordan_quasi_classical, jordan_lie_algebra,
    jordan_to_lie_triple, FkKind, GeneralTripleSystem, JordanLieAlgebra,
};
use superbracket::report::CheckLimits;
use superbracket::triple::TripleSystem;

use super::triple::triple_checks;
use crate::input::CliResult;
use crate::report::{pair_violation, q_vec, residuals, Check, Report};

/// The K-condition is a verdict only for Jordan systems, where `K` must
/// vanish; otherwise it tells whether the system is (ε, δ) FK.
fn identity_checks(g: &GeneralTripleSystem, jordan: bool, limits: &CheckLimits) -> CliResult<Vec<Check>> {
    let b = g.basis();
    let fk = check_generalized_fk(g, limits)?;
    let k = check_fk_condition(g, limits)?;
    let mut checks = vec![
        Check::info(
            "signs",
            json!({ "kind": g.kind().as_str(), "epsilon": g.epsilon().as_int(), "delta": g.delta().as_int() }),
        ),
        Check::new("fk_identity", fk.passes(), residuals(b, &fk.identity)),
    ];
    let mut details = residuals(b, &k.k_identity);
    details["k_vanishes"] = json!(k.k_vanishes);
    if jordan {
        checks.push(Check::new("k_condition", k.passes(), details));
        checks.push(Check::new("k_vanishes", k.k_vanishes, json!({})));
    } else {
        details["holds"] = json!(k.passes());
        checks.push(Check::info("k_condition", details));
    }
    Ok(checks)
}

fn jordan_checks(g: &GeneralTripleSystem, limits: &CheckLimits) -> CliResult<Vec<Check>> {
    let b = g.basis();
    let j = check_jordan(g, limits)?;
    let mut checks = vec![
        Check::new("outer_symmetry", j.outer_symmetry.is_empty(), residuals(b, &j.outer_symmetry)),
        Check::new(
            "epsilon_is_minus_delta",
            j.epsilon_is_minus_delta,
            json!({ "epsilon": g.epsilon().as_int(), "delta": g.delta().as_int() }),
        ),
    ];
    if g.form().is_some() {
        let f = check_jordan_quasi_classical(g)?;
        checks.push(Check::new("form_grade_block", f.grade_block.is_none(), pair_violation(b, f.grade_block)));
        checks.push(Check::new("form_symmetry", f.symmetry.is_none(), pair_violation(b, f.symmetry)));
        checks.push(Check::new("form_nondegenerate", f.nondegenerate, json!({})));
        checks.push(Check::new("form_invariance", f.invariance.is_empty(), residuals(b, &f.invariance)));
        checks.push(Check::new("form_exchange", f.exchange.is_empty(), residuals(b, &f.exchange)));
    } else {
        checks.push(Check::info("form", json!("absent")));
    }
    Ok(checks)
}

/// The FK identity and K-condition, plus the Jordan conditions for
/// systems of that kind.
pub fn general_checks(g: &GeneralTripleSystem, limits: &CheckLimits) -> CliResult<Vec<Check>> {
    let jordan = g.kind() == FkKind::Jordan;
    let mut checks = identity_checks(g, jordan, limits)?;
    if jordan {
        checks.extend(jordan_checks(g, limits)?);
    }
    if let Some((p, c)) = g.p_operator() {
        checks.push(Check::info(
            "p_operator",
            json!({ "c": crate::report::q(c), "diagonal": q_vec(&(0..p.rows()).map(|i| p.get(i, i).clone()).collect::<Vec<_>>()) }),
        ));
    }
    Ok(checks)
}

/// `verify --kind fk|jordan`: the Jordan conditions are run whenever
/// `jordan` is requested, whatever the file's own kind.
pub fn verify(g: &GeneralTripleSystem, jordan: bool, limits: &CheckLimits) -> CliResult<Report> {
    let mut report = Report::new("verify", g.name());
    report.checks = identity_checks(g, jordan, limits)?;
    if jordan {
        report.checks.extend(jordan_checks(g, limits)?);
    }
    Ok(report)
}

pub fn fk(g: &GeneralTripleSystem, limits: &CheckLimits) -> CliResult<Report> {
    let mut report = Report::new("fk", g.name());
    report.checks = general_checks(g, limits)?;
    Ok(report)
}

pub fn jordan_lie(
    g: &GeneralTripleSystem,
    limits: &CheckLimits,
) -> CliResult<(JordanLieAlgebra, TripleSystem, Report)> {
    let mut report = Report::new("jordan-lie", g.name());
    let j = jordan_lie_algebra(g)?;
    let b = g.basis();
    report.push(Check::info("dimensions", json!({ "v": g.dim(), "m": j.m.span.dim() })));
    report.push(Check::new(
        "bracket_closure",
        j.bracket_mismatches.is_empty(),
        residuals(b, &j.bracket_mismatches),
    ));
    report.push(Check::new("form_well_defined", j.form_well_defined, json!({})));
    report.push(Check::new("m_lie", j.lie.passes(), json!({
        "antisymmetry_violations": j.lie.antisymmetry.count,
        "jacobi_violations": j.lie.jacobi.count,
    })));
    report.push(Check::new(
        "m_form_nondegenerate",
        j.form_kernel.is_empty(),
        json!({ "kernel": j.form_kernel.iter().map(|v| q_vec(v)).collect::<Vec<_>>() }),
    ));
    report.push(Check::new(
        "m_quasi_classical",
        j.refusal.is_none() && j.form_kernel.is_empty(),
        json!({ "reason": j.refusal.as_ref().map(|e| e.to_string()) }),
    ));
    let lie = jordan_to_lie_triple(g)?;
    report.checks.extend(triple_checks(&lie, limits)?.into_iter().map(|mut c| {
        c.name = format!("lie_triple.{}", c.name);
        c
    }));
    Ok((j, lie, report))
}
