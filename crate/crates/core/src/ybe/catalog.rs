use std::fmt;
use std::str::FromStr;

use super::checks::check_eq_3_8;
use super::family::ThetaTripleFamily;
use super::rmatrix::RMatrix;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly};
use crate::lie::{certify_quasi_classical, lower_central_series, BilinearForm, GradedAlgebra};
use crate::tables::{accumulate, TrilinearTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum FamilyKind {
    Prop3_1,
    Prop3_2,
    Remark3_2,
    Remark3_3,
    PureG,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Prop3_1,
        FamilyKind::Prop3_2,
        FamilyKind::Remark3_2,
        FamilyKind::Remark3_3,
        FamilyKind::PureG,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Prop3_1 => "prop3_1",
            FamilyKind::Prop3_2 => "prop3_2",
            FamilyKind::Remark3_2 => "remark3_2",
            FamilyKind::Remark3_3 => "remark3_3",
            FamilyKind::PureG => "pure_g",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Format(format!("unknown family {s:?}")))
    }
}

/// Triple products built from a Lie bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieProduct {
    /// `[[x,y],z]`
    LeftNested,
    /// `[x,[y,z]]`
    RightNested,
}

fn lie_product(a: &GradedAlgebra, kind: LieProduct) -> TrilinearTable {
    let n = a.dim();
    let t = a.table();
    TrilinearTable::from_fn(n, |j, k, l| {
        let mut out = vec![num_traits::Zero::zero(); n];
        match kind {
            LieProduct::LeftNested => {
                for (m, c) in t.get(j, k) {
                    accumulate(&mut out, c, t.get(*m, l));
                }
            }
            LieProduct::RightNested => {
                for (m, c) in t.get(k, l) {
                    accumulate(&mut out, c, t.get(j, *m));
                }
            }
        }
        out
    })
}

/// `<x|y>z`.
fn metric_product(form: &BilinearForm) -> TrilinearTable {
    let n = form.dim();
    let mut t = TrilinearTable::zero(n);
    for j in 0..n {
        for k in 0..n {
            let g = form.get(j, k);
            if !num_traits::Zero::is_zero(g) {
                for l in 0..n {
                    t.set(j, k, l, vec![(l, g.clone())]);
                }
            }
        }
    }
    t
}

/// `Σ p_i(θ)·product_i + g(θ)<x|y>z` on an even Lie algebra with its form,
/// without checking any hypothesis beyond those of the family type.
pub fn lie_family(
    name: impl Into<String>,
    a: &GradedAlgebra,
    form: &BilinearForm,
    terms: &[(LieProduct, Poly)],
    metric: Option<&Poly>,
) -> Result<ThetaTripleFamily> {
    let mut components: Vec<(TrilinearTable, Poly)> =
        terms.iter().map(|(kind, p)| (lie_product(a, *kind), p.clone())).collect();
    if let Some(g) = metric {
        components.push((metric_product(form), g.clone()));
    }
    ThetaTripleFamily::new(name, a.basis().clone(), form.clone(), components)
}

fn require_central_series_zero(a: &GradedAlgebra, k: usize) -> Result<()> {
    if lower_central_series(a).term(k).is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("L{k} ≠ 0 for {}", a.name())))
    }
}

/// `[x,y,z]_θ = f(θ)[[x,y],z] + g(θ)<x|y>z`, requiring a quasi-classical
/// algebra whose triple product satisfies `[u,v,[x,y,z]] = [x,y,[u,v,z]]`.
pub fn prop3_1(a: &GradedAlgebra, form: &BilinearForm, f: &Poly, g: &Poly) -> Result<ThetaTripleFamily> {
    certify_quasi_classical(a, form)?;
    let bare = lie_family("commuting", a, form, &[(LieProduct::LeftNested, Poly::from_ints(&[1]))], None)?;
    if let Some(r) = check_eq_3_8(&bare).polynomial.first() {
        return Err(Error::Precondition(format!(
            "[u,v,[x,y,z]] = [x,y,[u,v,z]] fails at (u,v,x,y,z) = {:?}",
            &r.indices[2..]
        )));
    }
    lie_family(format!("prop3_1({})", a.name()), a, form, &[(LieProduct::LeftNested, f.clone())], Some(g))
}

/// `f₁(θ)[[x,y],z] + f₂(θ)[x,[y,z]] + g(θ)<x|y>z` on a quasi-classical
/// algebra with `L₅ = 0`.
pub fn prop3_2(a: &GradedAlgebra, form: &BilinearForm, f1: &Poly, f2: &Poly, g: &Poly) -> Result<ThetaTripleFamily> {
    certify_quasi_classical(a, form)?;
    require_central_series_zero(a, 5)?;
    lie_family(
        format!("prop3_2({})", a.name()),
        a,
        form,
        &[(LieProduct::LeftNested, f1.clone()), (LieProduct::RightNested, f2.clone())],
        Some(g),
    )
}

/// `f₁(θ)[x,[y,z]] + f₂(θ)[[x,y],z]` on a quasi-classical algebra with
/// `L₇ = 0`.
pub fn remark3_3(a: &GradedAlgebra, form: &BilinearForm, f1: &Poly, f2: &Poly) -> Result<ThetaTripleFamily> {
    certify_quasi_classical(a, form)?;
    require_central_series_zero(a, 7)?;
    lie_family(
        format!("remark3_3({})", a.name()),
        a,
        form,
        &[(LieProduct::RightNested, f1.clone()), (LieProduct::LeftNested, f2.clone())],
        None,
    )
}

/// `[x,y,z]_θ = g(θ)<x|y>z`.
pub fn pure_g(basis: crate::GradedBasis, form: &BilinearForm, g: &Poly) -> Result<ThetaTripleFamily> {
    let t = metric_product(form);
    ThetaTripleFamily::new("pure_g", basis, form.clone(), vec![(t, g.clone())])
}

/// `R(θ) = Σ f_{μν}(θ) J_μ ⊗ J_ν` for pairwise commuting `J_μ`.
pub fn remark3_2(js: &[Matrix], f: &[Vec<Poly>]) -> Result<RMatrix> {
    let n = js.first().map(Matrix::rows).unwrap_or(0);
    if js.iter().any(|j| j.rows() != n || j.cols() != n) {
        return Err(Error::DimensionMismatch("J matrices must share one square size".into()));
    }
    if f.len() != js.len() || f.iter().any(|row| row.len() != js.len()) {
        return Err(Error::DimensionMismatch("f must be an m×m array of polynomials".into()));
    }
    for (mu, a) in js.iter().enumerate() {
        for (nu, b) in js.iter().enumerate().skip(mu + 1) {
            if &(a * b) != &(b * a) {
                return Err(Error::Precondition(format!("[J{}, J{}] ≠ 0", mu + 1, nu + 1)));
            }
        }
    }
    let mut components = Vec::new();
    for (mu, a) in js.iter().enumerate() {
        for (nu, b) in js.iter().enumerate() {
            if !f[mu][nu].is_zero() {
                components.push((a.kron(b), f[mu][nu].clone()));
            }
        }
    }
    RMatrix::new(n, components)
}
