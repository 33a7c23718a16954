use num_traits::Zero;

use super::algebra::GradedAlgebra;
use crate::basis::Sign;
use crate::error::{Error, Result};
use crate::exact::{signed, vector, Matrix, Parity, Rational};

/// Gram matrix `g_{jk} = <e_j|e_k>` of a bilinear form on a graded space.
///
/// The container itself only requires a square matrix matching the grades;
/// block structure and (super)symmetry are checked through
/// [`BilinearForm::new`] or the predicate methods, because triple systems
/// use the δ-twisted symmetry `<y|x> = δ(-1)^{xy}<x|y>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    parities: Vec<Parity>,
}

impl BilinearForm {
    /// A grade-block, supersymmetric form (the Lie superalgebra case).
    pub fn new(gram: Matrix, parities: Vec<Parity>) -> Result<Self> {
        BilinearForm::with_symmetry(gram, parities, Sign::Plus)
    }

    /// A grade-block form with `<y|x> = δ(-1)^{xy}<x|y>`.
    pub fn with_symmetry(gram: Matrix, parities: Vec<Parity>, delta: Sign) -> Result<Self> {
        let form = BilinearForm::unchecked(gram, parities)?;
        if let Some((j, k)) = form.grade_block_violation() {
            return Err(Error::FormViolation(format!(
                "<e{}|e{}> pairs elements of different grade",
                j + 1,
                k + 1
            )));
        }
        if let Some((j, k)) = form.symmetry_violation(delta) {
            return Err(Error::FormViolation(format!(
                "<e{}|e{}> breaks the required symmetry",
                j + 1,
                k + 1
            )));
        }
        Ok(form)
    }

    /// Only checks the shape.
    pub fn unchecked(gram: Matrix, parities: Vec<Parity>) -> Result<Self> {
        if !gram.is_square() || gram.rows() != parities.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} Gram matrix for {} basis elements",
                gram.rows(),
                gram.cols(),
                parities.len()
            )));
        }
        Ok(BilinearForm { gram, parities })
    }

    pub fn zero(parities: Vec<Parity>) -> Self {
        let n = parities.len();
        BilinearForm {
            gram: Matrix::zeros(n, n),
            parities,
        }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn get(&self, j: usize, k: usize) -> &Rational {
        self.gram.get(j, k)
    }

    /// `<x|y>` for arbitrary coordinate vectors.
    pub fn value(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (k, yk) in y.iter().enumerate() {
                if yk.is_zero() {
                    continue;
                }
                let g = self.gram.get(j, k);
                if !g.is_zero() {
                    acc += xj * g * yk;
                }
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> BilinearForm {
        BilinearForm {
            gram: self.gram.scale(c),
            parities: self.parities.clone(),
        }
    }

    /// First pair `(j, k)` with `g_{jk} ≠ 0` across different grades.
    pub fn grade_block_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .find(|&(j, k)| self.parities[j] != self.parities[k] && !self.gram.get(j, k).is_zero())
    }

    /// First pair violating `g_{kj} = δ(-1)^{σ_jσ_k} g_{jk}`.
    pub fn symmetry_violation(&self, delta: Sign) -> Option<(usize, usize)> {
        let n = self.dim();
        for j in 0..n {
            for k in j..n {
                let neg = delta.negative_with(self.parities[j].both_odd(self.parities[k]));
                if *self.gram.get(k, j) != signed(neg, self.gram.get(j, k).clone()) {
                    return Some((j, k));
                }
            }
        }
        None
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    /// Direct sum with zero cross terms.
    pub fn direct_sum(&self, other: &BilinearForm) -> BilinearForm {
        let n = self.dim();
        let m = other.dim();
        let mut gram = Matrix::zeros(n + m, n + m);
        for j in 0..n {
            for k in 0..n {
                gram.set(j, k, self.gram.get(j, k).clone());
            }
        }
        for j in 0..m {
            for k in 0..m {
                gram.set(n + j, n + k, other.gram.get(j, k).clone());
            }
        }
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        BilinearForm { gram, parities }
    }
}

/// Coefficients `g^{jk}` of the quadratic Casimir `I₂ = Σ g^{jk} e_j e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Casimir {
    g_upper: Matrix,
    parities: Vec<Parity>,
}

impl Casimir {
    pub fn g_upper(&self) -> &Matrix {
        &self.g_upper
    }

    pub fn get(&self, j: usize, k: usize) -> &Rational {
        self.g_upper.get(j, k)
    }

    /// Checks `g^{jk} = (-1)^{σ_jσ_k} g^{kj}` and the grade-block condition.
    pub fn is_graded_symmetric(&self) -> bool {
        let form = BilinearForm {
            gram: self.g_upper.clone(),
            parities: self.parities.clone(),
        };
        form.grade_block_violation().is_none() && form.symmetry_violation(Sign::Plus).is_none()
    }

    /// `Σ_m g^{jm} C^k_{mℓ} = Σ_m C^j_{ℓm} g^{mk}` for all `(j, k, ℓ)`, i.e.
    /// `[I₂, e_ℓ] = 0`. Returns the first failing triple.
    pub fn commutation_violation(&self, a: &GradedAlgebra) -> Option<(usize, usize, usize)> {
        let n = a.dim();
        // ad e_ℓ as matrices: (ad e_ℓ)_{km} = C^k_{ℓm}.
        for l in 0..n {
            let ad = a.ad_matrix(l).expect("index in range");
            // left side: Σ_m g^{jm} C^k_{mℓ}; C^k_{mℓ} is the k-component of [e_m, e_ℓ].
            let mut right_mult = Matrix::zeros(n, n); // (m, k) -> C^k_{mℓ}
            for m in 0..n {
                for (k, c) in a.table().get(m, l) {
                    right_mult.set(m, *k, c.clone());
                }
            }
            let lhs = &self.g_upper * &right_mult;
            let rhs = &ad * &self.g_upper;
            if lhs != rhs {
                for j in 0..n {
                    for k in 0..n {
                        if lhs.get(j, k) != rhs.get(j, k) {
                            return Some((j, k, l));
                        }
                    }
                }
            }
        }
        None
    }
}

/// `κ(e_j, e_k) = Str(ad e_j ∘ ad e_k)`.
pub fn killing_form(a: &GradedAlgebra) -> BilinearForm {
    let n = a.dim();
    let ads: Vec<Matrix> = (0..n).map(|j| a.ad_matrix(j).expect("in range")).collect();
    let mut gram = Matrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let v = (&ads[j] * &ads[k])
                .supertrace(a.parities())
                .expect("square ad matrices");
            gram.set(j, k, v);
        }
    }
    BilinearForm {
        gram,
        parities: a.parities().to_vec(),
    }
}

/// First basis triple violating `<[e_j,e_k]|e_l> = <e_j|[e_k,e_l]>`.
pub fn invariance_violation(a: &GradedAlgebra, g: &BilinearForm) -> Option<(usize, usize, usize)> {
    let n = a.dim();
    for j in 0..n {
        for k in 0..n {
            let jk = a.table().get(j, k);
            for l in 0..n {
                let lhs: Rational = jk.iter().map(|(m, c)| c * g.get(*m, l)).sum();
                let rhs: Rational = a.table().get(k, l).iter().map(|(m, c)| c * g.get(j, *m)).sum();
                if lhs != rhs {
                    return Some((j, k, l));
                }
            }
        }
    }
    None
}

/// Basis of every grade-block, supersymmetric, invariant form on `a`.
///
/// Unknowns are the entries `g_{jk}` with `j ≤ k` and equal grades (odd
/// diagonal entries vanish by supersymmetry); the invariance conditions are
/// a homogeneous linear system in them. Degenerate solutions are included.
pub fn invariant_form_space(a: &GradedAlgebra) -> Vec<BilinearForm> {
    let n = a.dim();
    let p = a.parities();
    // Column index of each free unknown, and how g_{jk} is expressed in it.
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut slot: Vec<Option<(usize, bool)>> = vec![None; n * n];
    for j in 0..n {
        for k in j..n {
            if p[j] != p[k] || (j == k && p[j].is_odd()) {
                continue;
            }
            let col = unknowns.len();
            unknowns.push((j, k));
            slot[j * n + k] = Some((col, false));
            // g_{kj} = (-1)^{σ_jσ_k} g_{jk}
            slot[k * n + j] = Some((col, p[j].both_odd(p[k])));
        }
    }
    let u = unknowns.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                let mut row = vector::zeros(u);
                for (m, c) in a.table().get(j, k) {
                    if let Some((col, neg)) = slot[m * n + l] {
                        row[col] += signed(neg, c.clone());
                    }
                }
                for (m, c) in a.table().get(k, l) {
                    if let Some((col, neg)) = slot[j * n + m] {
                        row[col] -= signed(neg, c.clone());
                    }
                }
                if !vector::is_zero(&row) && !rows.contains(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        (0..u).map(|i| vector::unit(u, i)).collect()
    } else {
        Matrix::from_rows(rows).expect("uniform rows").nullspace()
    };
    solutions
        .into_iter()
        .map(|sol| {
            let mut gram = Matrix::zeros(n, n);
            for j in 0..n {
                for k in 0..n {
                    if let Some((col, neg)) = slot[j * n + k] {
                        gram.set(j, k, signed(neg, sol[col].clone()));
                    }
                }
            }
            BilinearForm {
                gram,
                parities: p.to_vec(),
            }
        })
        .collect()
}

/// Certifies `(a, g)` as quasi-classical and returns the Casimir
/// coefficients `g^{jk}`, the inverse of the Gram matrix.
///
/// The returned coefficients are verified to commute with every basis
/// element and to invert back to the Gram matrix.
pub fn certify_quasi_classical(a: &GradedAlgebra, g: &BilinearForm) -> Result<Casimir> {
    if g.parities() != a.parities() {
        return Err(Error::DimensionMismatch("form grades differ from algebra grades".into()));
    }
    if let Some((j, k)) = g.grade_block_violation() {
        return Err(Error::FormViolation(format!(
            "<{}|{}> pairs elements of different grade",
            a.basis().name(j),
            a.basis().name(k)
        )));
    }
    if let Some((j, k)) = g.symmetry_violation(Sign::Plus) {
        return Err(Error::FormViolation(format!(
            "<{}|{}> is not supersymmetric",
            a.basis().name(j),
            a.basis().name(k)
        )));
    }
    if let Some((j, k, l)) = invariance_violation(a, g) {
        return Err(Error::InvarianceViolation(j, k, l));
    }
    let g_upper = g.gram().invert()?;
    let casimir = Casimir {
        g_upper,
        parities: a.parities().to_vec(),
    };
    if let Some((j, k, l)) = casimir.commutation_violation(a) {
        return Err(Error::Closure(format!(
            "Casimir fails to commute at ({}, {}, {})",
            a.basis().name(j),
            a.basis().name(k),
            a.basis().name(l)
        )));
    }
    debug_assert_eq!(&casimir.g_upper.invert()?, g.gram());
    Ok(casimir)
}

/// True when the invariant forms on `a` form a single line, the conclusion
/// of the uniqueness-up-to-scale theorem for irreducible adjoint action.
/// `g` must certify.
pub fn uniqueness_up_to_scale(a: &GradedAlgebra, g: &BilinearForm) -> Result<bool> {
    certify_quasi_classical(a, g)?;
    Ok(invariant_form_space(a).len() == 1)
}
