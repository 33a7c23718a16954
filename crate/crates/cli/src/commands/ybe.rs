use clap::ValueEnum;
use serde_json::{json, Value};
use superbracket::exact::{Matrix, Parity, Poly};
use superbracket::report::CheckLimits;
use superbracket::ybe::{
    build_r, check_classical_ybe, check_commutation, check_eq_3_5, check_eq_3_8, check_ybe, lie_family, prop3_1,
    prop3_2, pure_g, remark3_2, remark3_3, FamilyKind, GridFailure, GridVerdict, LieProduct, RMatrix,
    ThetaTripleFamily,
};
use superbracket::GradedBasis;

use crate::input::{base_algebra, diagonal_list, poly_matrix, required_poly, CliError, CliResult};
use crate::report::{names, q, Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum YbeCheck {
    /// Yang–Baxter equation on the spectral grid.
    Ybe,
    /// R12(θ) commuting with R13, R23 at independent parameters.
    Commute,
    /// Classical Yang–Baxter equation.
    Classical,
    /// Triple-product form of the Yang–Baxter equation.
    #[value(name = "eq3_5")]
    Eq35,
    /// Commutation of the triple products at independent parameters.
    #[value(name = "eq3_8")]
    Eq38,
}

impl YbeCheck {
    fn name(self) -> &'static str {
        match self {
            YbeCheck::Ybe => "ybe",
            YbeCheck::Commute => "commute",
            YbeCheck::Classical => "classical",
            YbeCheck::Eq35 => "eq3_5",
            YbeCheck::Eq38 => "eq3_8",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct FamilyArgs {
    pub base: Option<String>,
    pub f: Option<String>,
    pub g: Option<String>,
    pub f1: Option<String>,
    pub f2: Option<String>,
    pub diagonals: Option<String>,
    pub coeffs: Option<String>,
}

/// The R-matrix of a catalog family, the triple family behind it when
/// there is one, and whether the family's hypotheses were met.
pub struct BuiltFamily {
    pub family: Option<ThetaTripleFamily>,
    pub r: RMatrix,
    pub basis: GradedBasis,
    pub hypotheses: Check,
}

fn base(args: &FamilyArgs) -> CliResult<(superbracket::lie::GradedAlgebra, superbracket::lie::BilinearForm)> {
    let name = args
        .base
        .as_deref()
        .ok_or_else(|| CliError::Usage("this family needs --base".into()))?;
    base_algebra(name)
}

/// Builds the family. A Lie family whose hypotheses are refused is still
/// built, without them, so that its R-matrix can be checked; the refusal
/// is recorded as a failed `hypotheses` check.
pub fn build(kind: FamilyKind, args: &FamilyArgs) -> CliResult<BuiltFamily> {
    if kind == FamilyKind::Remark3_2 {
        let diagonals = diagonal_list(
            args.diagonals
                .as_deref()
                .ok_or_else(|| CliError::Usage("remark3_2 needs --diagonals".into()))?,
        )?;
        let coeffs = poly_matrix(
            args.coeffs
                .as_deref()
                .ok_or_else(|| CliError::Usage("remark3_2 needs --coeffs".into()))?,
        )?;
        let js: Vec<Matrix> = diagonals.iter().map(|d| Matrix::diagonal(d)).collect();
        let r = remark3_2(&js, &coeffs)?;
        let basis = GradedBasis::numbered(vec![Parity::Even; r.dim()]);
        return Ok(BuiltFamily {
            family: None,
            r,
            basis,
            hypotheses: Check::new("hypotheses", true, json!({ "commuting": js.len() })),
        });
    }
    let (a, form) = base(args)?;
    let (strict, terms, metric) = match kind {
        FamilyKind::PureG => {
            let g = required_poly("g", &args.g)?;
            (pure_g(a.basis().clone(), &form, &g), Vec::new(), Some(g))
        }
        FamilyKind::Prop3_1 => {
            let (f, g) = (required_poly("f", &args.f)?, required_poly("g", &args.g)?);
            (prop3_1(&a, &form, &f, &g), vec![(LieProduct::LeftNested, f)], Some(g))
        }
        FamilyKind::Prop3_2 => {
            let (f1, f2, g) = (
                required_poly("f1", &args.f1)?,
                required_poly("f2", &args.f2)?,
                required_poly("g", &args.g)?,
            );
            (
                prop3_2(&a, &form, &f1, &f2, &g),
                vec![(LieProduct::LeftNested, f1), (LieProduct::RightNested, f2)],
                Some(g),
            )
        }
        FamilyKind::Remark3_3 => {
            let (f1, f2) = (required_poly("f1", &args.f1)?, required_poly("f2", &args.f2)?);
            (
                remark3_3(&a, &form, &f1, &f2),
                vec![(LieProduct::RightNested, f1), (LieProduct::LeftNested, f2)],
                None::<Poly>,
            )
        }
        FamilyKind::Remark3_2 => unreachable!("handled above"),
    };
    let (family, hypotheses) = match strict {
        Ok(f) => (f, Check::new("hypotheses", true, json!({ "base": a.name() }))),
        Err(e) if kind != FamilyKind::PureG => {
            let f = lie_family(format!("{kind}({})", a.name()), &a, &form, &terms, metric.as_ref())?;
            (f, Check::new("hypotheses", false, json!({ "base": a.name(), "reason": e.to_string() })))
        }
        Err(e) => return Err(e.into()),
    };
    let r = build_r(&family)?;
    Ok(BuiltFamily {
        basis: family.basis().clone(),
        family: Some(family),
        r,
        hypotheses,
    })
}

/// Operator relations report the basis tensor column and row; the
/// triple-product relation reports `x, y, z, u, v` and the component.
fn failure_json(basis: &GradedBasis, f: &GridFailure, operator: bool) -> Value {
    let mut out = json!({
        "relation": f.relation,
        "point": f.point.iter().map(q).collect::<Vec<_>>(),
        "lhs": q(&f.lhs),
        "rhs": q(&f.rhs),
    });
    if operator {
        out["column"] = names(basis, &f.indices[..3]);
        out["row"] = names(basis, &f.indices[3..]);
    } else {
        out["at"] = names(basis, &f.indices[..5]);
        out["component"] = names(basis, &f.indices[5..]);
    }
    out
}

fn grid_check(name: &str, basis: &GradedBasis, v: &GridVerdict, operator: bool) -> Check {
    Check::new(
        name,
        v.passes(),
        json!({
            "grid": format!("0..={}", v.grid_bound),
            "points_checked": v.points_checked,
            "first_failure": v.failure.as_ref().map(|f| failure_json(basis, f, operator)),
        }),
    )
}

pub fn run(
    kind: FamilyKind,
    built: &BuiltFamily,
    checks: &[YbeCheck],
    grid_degree: Option<usize>,
    limits: &CheckLimits,
) -> CliResult<Report> {
    let subject = built
        .family
        .as_ref()
        .map(|f| f.name().to_string())
        .unwrap_or_else(|| kind.as_str().to_string());
    let mut report = Report::new("ybe", subject);
    let r = &built.r;
    report.push(Check::info(
        "r_matrix",
        json!({ "dimension": r.dim(), "size": r.dim() * r.dim(), "degree": r.degree(), "components": r.components().len() }),
    ));
    report.push(built.hypotheses.clone());
    let requested: Vec<YbeCheck> = if checks.is_empty() { vec![YbeCheck::Ybe] } else { checks.to_vec() };
    let family = || {
        built
            .family
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("{kind} defines no triple product")))
    };
    for c in requested {
        let check = match c {
            YbeCheck::Ybe => grid_check(c.name(), &built.basis, &check_ybe(r, grid_degree), true),
            YbeCheck::Commute => grid_check(c.name(), &built.basis, &check_commutation(r, grid_degree), true),
            YbeCheck::Classical => grid_check(c.name(), &built.basis, &check_classical_ybe(r, grid_degree), true),
            YbeCheck::Eq35 => {
                let f = family()?;
                limits.admit(f.dim())?;
                let rep = check_eq_3_5(f, grid_degree)?;
                let mut ch = grid_check(c.name(), &built.basis, &rep.verdict, false);
                ch.details["both_sides_vanish"] = json!(rep.both_sides_vanish);
                ch
            }
            YbeCheck::Eq38 => {
                let f = family()?;
                limits.admit(f.dim())?;
                let rep = check_eq_3_8(f);
                let first: Vec<Value> = rep
                    .polynomial
                    .samples
                    .iter()
                    .take(3)
                    .map(|r| json!({
                        "powers": &r.indices[..2],
                        "at": names(&built.basis, &r.indices[2..]),
                        "residual": crate::report::q_vec(&r.residual),
                    }))
                    .collect();
                let mut d = json!({ "count": rep.polynomial.count, "first": first });
                d["component_pairs"] = json!(rep
                    .pairs
                    .iter()
                    .map(|((i, j), ok)| json!({ "pair": [i, j], "holds": ok }))
                    .collect::<Vec<_>>());
                Check::new(c.name(), rep.passes(), d)
            }
        };
        report.push(check);
    }
    Ok(report)
}
