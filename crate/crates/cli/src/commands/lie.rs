use serde_json::{json, Value};
use superbracket::exact::{int, Rational};
use superbracket::lie::{
    certify_quasi_classical, check_grading, check_lie_super, derived_test, invariant_form_space,
    lower_central_series, BilinearForm, GradedAlgebra,
};
use superbracket::Matrix;

use crate::report::{matrix_json, names, q, q_vec, Check, Report};

/// Super-antisymmetry, Jacobi and, with a form, the quasi-classical
/// certification.
pub fn lie_checks(a: &GradedAlgebra, form: Option<&BilinearForm>) -> Vec<Check> {
    let basis = a.basis();
    let report = check_lie_super(a);
    let mut checks = vec![
        Check::new("grading", check_grading(a), json!({ "dimension": a.dim() })),
        Check::new(
            "super_antisymmetry",
            report.antisymmetry.is_empty(),
            json!({
                "count": report.antisymmetry.count,
                "first": report.antisymmetry.samples.iter().take(3)
                    .map(|&(j, k)| names(basis, &[j, k])).collect::<Vec<_>>(),
            }),
        ),
        Check::new(
            "jacobi",
            report.jacobi.is_empty(),
            json!({
                "count": report.jacobi.count,
                "first": report.jacobi.samples.iter().take(3)
                    .map(|v| json!({
                        "at": names(basis, &[v.triple.0, v.triple.1, v.triple.2]),
                        "residual": q_vec(&v.residual),
                    }))
                    .collect::<Vec<_>>(),
            }),
        ),
    ];
    match form {
        Some(g) => checks.push(quasi_classical(a, g)),
        None => checks.push(Check::info("form", json!("absent"))),
    }
    checks
}

pub fn quasi_classical(a: &GradedAlgebra, g: &BilinearForm) -> Check {
    match certify_quasi_classical(a, g) {
        Ok(_) => Check::new("quasi_classical", true, json!({ "casimir_commutes": true })),
        Err(e) => Check::new("quasi_classical", false, json!({ "reason": e.to_string() })),
    }
}

pub fn verify(a: &GradedAlgebra, form: Option<&BilinearForm>) -> Report {
    let mut report = Report::new("verify", a.name());
    report.checks = lie_checks(a, form);
    report
}

/// Up to this many small integer combinations of the basis forms are tried
/// when looking for a non-degenerate invariant form.
pub const FORM_SAMPLE_LIMIT: usize = 4096;
const SAMPLE_DIGITS: [i64; 5] = [0, 1, -1, 2, -2];

/// Coefficients of the `k`-th candidate: `k` written in base 5 with
/// digits mapped to `0, 1, -1, 2, -2`, least significant first.
fn candidate(mut k: usize, d: usize) -> Vec<Rational> {
    (0..d)
        .map(|_| {
            let digit = SAMPLE_DIGITS[k % 5];
            k /= 5;
            int(digit)
        })
        .collect()
}

pub fn forms(a: &GradedAlgebra) -> Report {
    let mut report = Report::new("forms", a.name());
    let space = invariant_form_space(a);
    let d = space.len();
    let members: Vec<Value> = space
        .iter()
        .map(|g| json!({ "gram": matrix_json(g.gram()), "nondegenerate": g.is_nondegenerate() }))
        .collect();
    report.push(Check::info("form_space", json!({ "dimension": d, "basis": members })));
    let total = 5usize.checked_pow(d as u32).unwrap_or(usize::MAX).min(FORM_SAMPLE_LIMIT);
    let n = a.dim();
    let mut found = Value::Null;
    let mut tried = 0;
    for k in 1..total {
        tried += 1;
        let coeffs = candidate(k, d);
        let mut gram = Matrix::zeros(n, n);
        for (c, g) in coeffs.iter().zip(&space) {
            gram = &gram + &g.gram().scale(c);
        }
        if gram.rank() == n {
            found = json!({ "coefficients": q_vec(&coeffs), "gram": matrix_json(&gram) });
            break;
        }
    }
    report.push(Check::info(
        "nondegenerate_sample",
        json!({ "candidates_tried": tried, "limit": FORM_SAMPLE_LIMIT, "found": found }),
    ));
    report
}

pub fn casimir(a: &GradedAlgebra, g: &BilinearForm) -> Report {
    let mut report = Report::new("casimir", a.name());
    match certify_quasi_classical(a, g) {
        Ok(c) => {
            let n = a.dim();
            let entries: Vec<Value> = (0..n)
                .flat_map(|j| (0..n).map(move |k| (j, k)))
                .filter(|&(j, k)| *c.get(j, k) != int(0))
                .map(|(j, k)| json!({ "left": a.basis().name(j), "right": a.basis().name(k), "value": q(c.get(j, k)) }))
                .collect();
            report.push(Check::new(
                "casimir",
                c.commutation_violation(a).is_none() && c.is_graded_symmetric(),
                json!({ "coefficients": entries }),
            ));
        }
        Err(e) => report.push(Check::new("casimir", false, json!({ "reason": e.to_string() }))),
    }
    report
}

pub fn series(a: &GradedAlgebra) -> Report {
    let mut report = Report::new("series", a.name());
    let s = lower_central_series(a);
    report.push(Check::info("lower_central_series", json!({ "dimensions": s.dims() })));
    report.push(Check::info(
        "nilpotent",
        json!({ "nilpotent": s.reaches_zero(), "length": s.nilpotency_length() }),
    ));
    report.push(Check::info("derived_condition", json!({ "holds": derived_test(a) })));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use superbracket::lie::{example_algebra, ExampleKind};

    #[test]
    fn candidates_enumerate_small_integers() {
        assert_eq!(candidate(0, 2), vec![int(0), int(0)]);
        assert_eq!(candidate(1, 2), vec![int(1), int(0)]);
        assert_eq!(candidate(7, 2), vec![int(-1), int(1)]);
    }

    #[test]
    fn forms_of_ex1_1_include_a_nondegenerate_member() {
        let (a, _) = example_algebra(ExampleKind::Ex1_1, 1, 0, &int(0), None).unwrap();
        let r = forms(&a);
        assert!(r.checks[0].details["dimension"].as_u64().unwrap() >= 2);
        assert!(!r.checks[1].details["found"].is_null());
    }
}
