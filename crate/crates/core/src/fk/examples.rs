use std::fmt;
use std::str::FromStr;

use super::system::{FkKind, GeneralTripleSystem};
use crate::basis::{GradedBasis, Sign};
use crate::error::{Error, Result};
use crate::exact::{vector, Matrix, Rational};
use crate::lie::{lower_central_series, BilinearForm, GradedAlgebra};
use crate::tables::accumulate;
use crate::triple::{check_p_operator, check_symmetric_form};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum FkExampleKind {
    Ex2_4,
    Ex2_5,
    Ex2_6,
}

impl FkExampleKind {
    pub const ALL: [FkExampleKind; 3] = [FkExampleKind::Ex2_4, FkExampleKind::Ex2_5, FkExampleKind::Ex2_6];

    pub fn as_str(self) -> &'static str {
        match self {
            FkExampleKind::Ex2_4 => "ex2_4",
            FkExampleKind::Ex2_5 => "ex2_5",
            FkExampleKind::Ex2_6 => "ex2_6",
        }
    }
}

impl fmt::Display for FkExampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FkExampleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FkExampleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Format(format!("unknown example {s:?}")))
    }
}

/// `xyz = <x|y>Pz + <x|Py>z + <y|Pz>x + <y|z>Px`, a δ Jordan product
/// (ε = -δ). `p` has `P e_j` as column `j`.
pub fn example_2_4(
    basis: GradedBasis,
    form: BilinearForm,
    delta: Sign,
    p: &Matrix,
    c: &Rational,
) -> Result<GeneralTripleSystem> {
    check_symmetric_form(&form, delta)?;
    check_p_operator(&form, p, c)?;
    let n = basis.len();
    let g = form.gram().clone();
    let gp = &g * p;
    let system = GeneralTripleSystem::from_fn("ex2_4", FkKind::Jordan, basis, -delta, delta, Some(form), |j, k, l| {
        let mut out = vector::zeros(n);
        vector::add_scaled(&mut out, g.get(j, k), &p.column(l));
        out[l] += gp.get(j, k);
        out[j] += gp.get(k, l);
        vector::add_scaled(&mut out, g.get(k, l), &p.column(j));
        out
    })?;
    system.with_p_operator(p.clone(), c.clone())
}

/// `xyz = c₁[x,[y,z]] + c₂[[x,y],z]` on an algebra with `L₅ = 0`.
pub fn example_2_5(
    a: &GradedAlgebra,
    form: Option<BilinearForm>,
    c1: &Rational,
    c2: &Rational,
    epsilon: Sign,
    delta: Sign,
) -> Result<GeneralTripleSystem> {
    if !lower_central_series(a).term(5).is_zero() {
        return Err(Error::Precondition(format!("L5 ≠ 0 for {}", a.name())));
    }
    let n = a.dim();
    let kind = if c1 == c2 && epsilon == -delta {
        FkKind::Jordan
    } else {
        FkKind::GeneralizedFk
    };
    let t = a.table();
    GeneralTripleSystem::from_fn(format!("ex2_5({})", a.name()), kind, a.basis().clone(), epsilon, delta, form, |j, k, l| {
        let mut out = vector::zeros(n);
        for (m, c) in t.get(k, l) {
            accumulate(&mut out, &(c1 * c), t.get(j, *m));
        }
        for (m, c) in t.get(j, k) {
            accumulate(&mut out, &(c2 * c), t.get(*m, l));
        }
        out
    })
}

/// `xyz = <y|Pz>x` for a form with `<x|y> = -ε(-1)^{xy}<y|x>` and a
/// self-adjoint, grade-preserving `P`.
pub fn example_2_6(
    basis: GradedBasis,
    form: BilinearForm,
    p: &Matrix,
    epsilon: Sign,
    delta: Sign,
) -> Result<GeneralTripleSystem> {
    let n = basis.len();
    if form.dim() != n || p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch("form, P and basis sizes differ".into()));
    }
    if let Some((j, k)) = form.symmetry_violation(-epsilon) {
        return Err(Error::FormViolation(format!(
            "<e{}|e{}> breaks <x|y> = -ε(-1)^(xy)<y|x>",
            j + 1,
            k + 1
        )));
    }
    let parities = basis.parities();
    for r in 0..n {
        for c in 0..n {
            if !num_traits::Zero::is_zero(p.get(r, c)) && parities[r] != parities[c] {
                return Err(Error::Precondition("P must preserve the grading".into()));
            }
        }
    }
    let g = form.gram();
    let gp = g * p;
    if &p.transpose() * g != gp {
        return Err(Error::Precondition("P must satisfy <Px|y> = <x|Py>".into()));
    }
    GeneralTripleSystem::from_fn("ex2_6", FkKind::GeneralizedFk, basis, epsilon, delta, Some(form.clone()), |j, k, l| {
        let mut out = vector::zeros(n);
        out[j] += gp.get(k, l);
        out
    })
}
