use num_traits::Zero;

use super::system::TripleSystem;
use crate::basis::{GradedBasis, Sign};
use crate::error::{Error, Result};
use crate::exact::{signed, vector, Matrix, Rational};
use crate::lie::{certify_quasi_classical, BilinearForm, GradedAlgebra};

pub(crate) fn check_symmetric_form(form: &BilinearForm, delta: Sign) -> Result<()> {
    if let Some((j, k)) = form.grade_block_violation() {
        return Err(Error::FormViolation(format!("<e{}|e{}> pairs different grades", j + 1, k + 1)));
    }
    if let Some((j, k)) = form.symmetry_violation(delta) {
        return Err(Error::FormViolation(format!(
            "<e{}|e{}> breaks <y|x> = δ(-1)^(xy)<x|y>",
            j + 1,
            k + 1
        )));
    }
    if !form.is_nondegenerate() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// `[x,y,z] = <y|z>x - δ(-1)^{xy}<x|z>y`.
pub fn example_2_1(basis: GradedBasis, form: BilinearForm, delta: Sign) -> Result<TripleSystem> {
    check_symmetric_form(&form, delta)?;
    let n = basis.len();
    let p: Vec<bool> = basis.parities().iter().map(|q| q.is_odd()).collect();
    let g = form.clone();
    TripleSystem::from_fn("ex2_1", basis, delta, Some(form), |j, k, l| {
        let mut out = vector::zeros(n);
        out[j] += g.get(k, l);
        let neg = !delta.negative_with(p[j] && p[k]);
        out[k] += signed(neg, g.get(j, l).clone());
        out
    })
}

/// Checks that `p` is grade-preserving, self-adjoint for `form` and squares
/// to `c·Id`.
pub fn check_p_operator(form: &BilinearForm, p: &Matrix, c: &Rational) -> Result<()> {
    let n = form.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch(format!("P must be {n}x{n}")));
    }
    let parity = form.parities();
    for r in 0..n {
        for col in 0..n {
            if parity[r] != parity[col] && !p.get(r, col).is_zero() {
                return Err(Error::Precondition("P must preserve the grading".into()));
            }
        }
    }
    if form.gram() * p != &p.transpose() * form.gram() {
        return Err(Error::Precondition("P must satisfy <x|Py> = <Px|y>".into()));
    }
    if p * p != Matrix::identity(n).scale(c) {
        return Err(Error::Precondition(format!("P² must equal {c}·Id")));
    }
    Ok(())
}

/// `[x,y,z] = <y|z>Px + <y|Pz>x - δ(-1)^{xy}{<x|z>Py + <x|Pz>y}`.
///
/// `p` acts on column vectors: its column `j` is `P e_j`.
pub fn example_2_2(
    basis: GradedBasis,
    form: BilinearForm,
    delta: Sign,
    p: &Matrix,
    c: &Rational,
) -> Result<TripleSystem> {
    check_symmetric_form(&form, delta)?;
    check_p_operator(&form, p, c)?;
    let n = basis.len();
    let odd: Vec<bool> = basis.parities().iter().map(|q| q.is_odd()).collect();
    let g = form.gram().clone();
    let gp = &g * p;
    let t = TripleSystem::from_fn("ex2_2", basis, delta, Some(form), |j, k, l| {
        let mut out = vector::zeros(n);
        let neg = !delta.negative_with(odd[j] && odd[k]);
        vector::add_scaled(&mut out, g.get(k, l), &p.column(j));
        out[j] += gp.get(k, l);
        vector::add_scaled(&mut out, &signed(neg, g.get(j, l).clone()), &p.column(k));
        out[k] += signed(neg, gp.get(j, l).clone());
        out
    })?;
    if !p_homomorphism_holds(&t, p, c) {
        return Err(Error::Closure("[Px,Py,Pz] = cP[x,y,z] fails".into()));
    }
    Ok(t)
}

/// `[Pe_j, Pe_k, Pe_l] = c P[e_j, e_k, e_l]` for all basis triples.
pub fn p_homomorphism_holds(t: &TripleSystem, p: &Matrix, c: &Rational) -> bool {
    let n = t.dim();
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
    let cp = p.scale(c);
    (0..n).all(|j| {
        (0..n).all(|k| {
            (0..n).all(|l| {
                let lhs = t.product(&cols[j], &cols[k], &cols[l]);
                let rhs = cp.mul_vec(&t.product_basis(j, k, l)).expect("square");
                lhs == rhs
            })
        })
    })
}

/// `[x,y,z] = [[x,y],z]` on a certified quasi-classical Lie superalgebra,
/// carrying the same form.
pub fn triple_from_lie(a: &GradedAlgebra, g: &BilinearForm) -> Result<TripleSystem> {
    certify_quasi_classical(a, g)?;
    let n = a.dim();
    TripleSystem::from_fn(
        format!("lie({})", a.name()),
        a.basis().clone(),
        Sign::Plus,
        Some(g.clone()),
        |j, k, l| {
            let mut out = vector::zeros(n);
            for (m, c) in a.table().get(j, k) {
                for (r, d) in a.table().get(*m, l) {
                    out[*r] += c * d;
                }
            }
            out
        },
    )
}
