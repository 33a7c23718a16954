use num_traits::Zero;

use crate::basis::{GradedBasis, Sign};
use crate::error::{Error, Result};
use crate::exact::{signed, Matrix, Parity, Rational};
use crate::lie::BilinearForm;
use crate::tables::{normalize, SparseVec, TrilinearTable};

/// One user-supplied product `[e_a, e_b, e_c] = Σ coeff·e_result`.
pub type TripleEntry = ((usize, usize, usize), Vec<(usize, Rational)>);

/// A graded space with a triple product `[e_j, e_k, e_l] = Σ T^m_{jkl} e_m`,
/// a sign δ and an optional bilinear form.
///
/// [`TripleSystem::new`] enforces grade compatibility and fills every
/// missing `(k, j, l)` from `(j, k, l)` by `[y,x,z] = -δ(-1)^{xy}[x,y,z]`.
/// Triples supplied in both orders are kept as given so that faulty
/// tables can be diagnosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem {
    name: String,
    basis: GradedBasis,
    delta: Sign,
    table: TrilinearTable,
    form: Option<BilinearForm>,
}

fn check_form_shape(basis: &GradedBasis, form: &Option<BilinearForm>) -> Result<()> {
    if let Some(g) = form {
        if g.parities() != basis.parities() {
            return Err(Error::DimensionMismatch(
                "form grades differ from basis grades".into(),
            ));
        }
    }
    Ok(())
}

impl TripleSystem {
    pub fn new(
        name: impl Into<String>,
        basis: GradedBasis,
        delta: Sign,
        entries: impl IntoIterator<Item = TripleEntry>,
        form: Option<BilinearForm>,
    ) -> Result<Self> {
        check_form_shape(&basis, &form)?;
        let n = basis.len();
        let mut given = TrilinearTable::zero(n);
        let mut supplied = vec![false; n * n * n];
        let idx = |j: usize, k: usize, l: usize| (j * n + k) * n + l;
        for ((j, k, l), result) in entries {
            for i in [j, k, l] {
                basis.check_index(i)?;
            }
            for (m, _) in &result {
                basis.check_index(*m)?;
            }
            if supplied[idx(j, k, l)] {
                return Err(Error::Format(format!(
                    "product [{}, {}, {}] given twice",
                    basis.name(j),
                    basis.name(k),
                    basis.name(l)
                )));
            }
            supplied[idx(j, k, l)] = true;
            let result = normalize(result);
            let target = basis.parity(j) + basis.parity(k) + basis.parity(l);
            if let Some((m, _)) = result.iter().find(|(m, _)| basis.parity(*m) != target) {
                return Err(Error::GradeViolation(format!(
                    "[{}, {}, {}] has a component along {} of the wrong grade",
                    basis.name(j),
                    basis.name(k),
                    basis.name(l),
                    basis.name(*m)
                )));
            }
            given.set(j, k, l, result);
        }
        let mut table = given.clone();
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if supplied[idx(j, k, l)] && !supplied[idx(k, j, l)] {
                        let flip = !delta.negative_with(basis.parity(j).both_odd(basis.parity(k)));
                        let mirrored: SparseVec = given
                            .get(j, k, l)
                            .iter()
                            .map(|(m, c)| (*m, signed(flip, c.clone())))
                            .collect();
                        table.set(k, j, l, mirrored);
                    }
                }
            }
        }
        Ok(TripleSystem {
            name: name.into(),
            basis,
            delta,
            table,
            form,
        })
    }

    /// Tabulates a product given on every basis triple, without completion.
    pub fn from_fn<F>(
        name: impl Into<String>,
        basis: GradedBasis,
        delta: Sign,
        form: Option<BilinearForm>,
        f: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Vec<Rational>,
    {
        check_form_shape(&basis, &form)?;
        let table = TrilinearTable::from_fn(basis.len(), f);
        Ok(TripleSystem {
            name: name.into(),
            basis,
            delta,
            table,
            form,
        })
    }

    pub fn from_table(
        name: impl Into<String>,
        basis: GradedBasis,
        delta: Sign,
        table: TrilinearTable,
        form: Option<BilinearForm>,
    ) -> Result<Self> {
        check_form_shape(&basis, &form)?;
        if table.dim() != basis.len() {
            return Err(Error::DimensionMismatch("table and basis sizes differ".into()));
        }
        Ok(TripleSystem {
            name: name.into(),
            basis,
            delta,
            table,
            form,
        })
    }

    pub fn zero(name: impl Into<String>, basis: GradedBasis, delta: Sign, form: Option<BilinearForm>) -> Result<Self> {
        let n = basis.len();
        TripleSystem::from_table(name, basis, delta, TrilinearTable::zero(n), form)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn parities(&self) -> &[Parity] {
        self.basis.parities()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn delta(&self) -> Sign {
        self.delta
    }

    pub fn table(&self) -> &TrilinearTable {
        &self.table
    }

    pub fn form(&self) -> Option<&BilinearForm> {
        self.form.as_ref()
    }

    pub fn with_form(mut self, form: Option<BilinearForm>) -> Result<Self> {
        check_form_shape(&self.basis, &form)?;
        self.form = form;
        Ok(self)
    }

    pub(crate) fn require_form(&self) -> Result<&BilinearForm> {
        self.form
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("triple system `{}` carries no form", self.name)))
    }

    pub fn product(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.table.eval(x, y, z)
    }

    pub fn product_basis(&self, j: usize, k: usize, l: usize) -> Vec<Rational> {
        self.table.eval_basis(j, k, l)
    }

    /// Matrix of `L(e_j, e_k): z ↦ [e_j, e_k, z]`.
    pub fn left_matrix(&self, j: usize, k: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for l in 0..n {
            for (r, c) in self.table.get(j, k, l) {
                m.set(*r, l, c.clone());
            }
        }
        m
    }

    /// Matrix of `R(e_j, e_k): z ↦ (-1)^{z(j+k)} [z, e_j, e_k]`.
    pub fn right_matrix(&self, j: usize, k: usize) -> Matrix {
        let n = self.dim();
        let p = self.basis.parity(j) + self.basis.parity(k);
        let mut m = Matrix::zeros(n, n);
        for l in 0..n {
            let odd = p.both_odd(self.basis.parity(l));
            for (r, c) in self.table.get(l, j, k) {
                m.set(*r, l, signed(odd, c.clone()));
            }
        }
        m
    }

    fn homogeneous(&self, v: &[Rational]) -> Result<Parity> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {}-dimensional space",
                v.len(),
                self.dim()
            )));
        }
        self.basis.vector_parity(v).ok_or(Error::NonHomogeneous)
    }

    fn combine(&self, x: &[Rational], y: &[Rational], op: impl Fn(usize, usize) -> Matrix) -> Matrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(n, n);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (k, yk) in y.iter().enumerate() {
                if yk.is_zero() {
                    continue;
                }
                acc = &acc + &op(j, k).scale(&(xj * yk));
            }
        }
        acc
    }

    pub fn left_op(&self, x: &[Rational], y: &[Rational]) -> Result<MultOperator> {
        let parity = self.homogeneous(x)? + self.homogeneous(y)?;
        Ok(MultOperator {
            matrix: self.combine(x, y, |j, k| self.left_matrix(j, k)),
            parity,
            kind: OperatorKind::Left,
            generators: None,
        })
    }

    pub fn right_op(&self, x: &[Rational], y: &[Rational]) -> Result<MultOperator> {
        let parity = self.homogeneous(x)? + self.homogeneous(y)?;
        Ok(MultOperator {
            matrix: self.combine(x, y, |j, k| self.right_matrix(j, k)),
            parity,
            kind: OperatorKind::Right,
            generators: None,
        })
    }

    pub fn left_basis_op(&self, j: usize, k: usize) -> Result<MultOperator> {
        self.basis.check_index(j)?;
        self.basis.check_index(k)?;
        Ok(MultOperator {
            matrix: self.left_matrix(j, k),
            parity: self.basis.parity(j) + self.basis.parity(k),
            kind: OperatorKind::Left,
            generators: Some((j, k)),
        })
    }

    pub fn right_basis_op(&self, j: usize, k: usize) -> Result<MultOperator> {
        self.basis.check_index(j)?;
        self.basis.check_index(k)?;
        Ok(MultOperator {
            matrix: self.right_matrix(j, k),
            parity: self.basis.parity(j) + self.basis.parity(k),
            kind: OperatorKind::Right,
            generators: Some((j, k)),
        })
    }

    /// Block direct sum with vanishing mixed products.
    pub fn direct_sum(&self, other: &TripleSystem) -> Result<TripleSystem> {
        if self.delta != other.delta {
            return Err(Error::Precondition("summands have different δ".into()));
        }
        let n = self.dim();
        let m = other.dim();
        let mut table = TrilinearTable::zero(n + m);
        for ((j, k, l), v) in self.table.iter() {
            table.set(j, k, l, v.to_vec());
        }
        for ((j, k, l), v) in other.table.iter() {
            table.set(n + j, n + k, n + l, v.iter().map(|(r, c)| (n + r, c.clone())).collect());
        }
        let form = match (&self.form, &other.form) {
            (Some(a), Some(b)) => Some(a.direct_sum(b)),
            _ => None,
        };
        TripleSystem::from_table(
            format!("{}+{}", self.name, other.name),
            self.basis.direct_sum(&other.basis, "'"),
            self.delta,
            table,
            form,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Left,
    Right,
    K,
}

/// A multiplication operator together with its grade and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultOperator {
    pub matrix: Matrix,
    pub parity: Parity,
    pub kind: OperatorKind,
    /// Basis generators `(j, k)` when built from `e_j, e_k`.
    pub generators: Option<(usize, usize)>,
}

impl MultOperator {
    /// Checks that the matrix maps each grade into `grade + parity`.
    pub fn is_homogeneous(&self, parities: &[Parity]) -> bool {
        let n = parities.len();
        (0..n).all(|r| {
            (0..n).all(|c| self.matrix.get(r, c).is_zero() || parities[r] == parities[c] + self.parity)
        })
    }
}
