use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::basis::{GradedBasis, Sign};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Parity, Rational};
use crate::lie::BilinearForm;
use crate::tables::{normalize, TrilinearTable};
use crate::triple::{MultOperator, OperatorKind, TripleEntry, TripleSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FkKind {
    GeneralizedFk,
    Jordan,
}

impl FkKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FkKind::GeneralizedFk => "generalized-fk",
            FkKind::Jordan => "jordan",
        }
    }
}

impl fmt::Display for FkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FkKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generalized-fk" | "fk" => Ok(FkKind::GeneralizedFk),
            "jordan" => Ok(FkKind::Jordan),
            _ => Err(Error::Format(format!("unknown triple-system kind {s:?}"))),
        }
    }
}

/// A graded space with an arbitrary triple product `xyz`, signs ε and δ,
/// an optional form and an optional operator `P` with `P² = c·Id`.
///
/// Only grade compatibility is enforced; no symmetry of the product is
/// assumed or completed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralTripleSystem {
    name: String,
    kind: FkKind,
    basis: GradedBasis,
    epsilon: Sign,
    delta: Sign,
    table: TrilinearTable,
    form: Option<BilinearForm>,
    p_operator: Option<(Matrix, Rational)>,
}

impl GeneralTripleSystem {
    pub fn new(
        name: impl Into<String>,
        kind: FkKind,
        basis: GradedBasis,
        epsilon: Sign,
        delta: Sign,
        entries: impl IntoIterator<Item = TripleEntry>,
        form: Option<BilinearForm>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut table = TrilinearTable::zero(n);
        for ((j, k, l), result) in entries {
            for i in [j, k, l] {
                basis.check_index(i)?;
            }
            for (m, _) in &result {
                basis.check_index(*m)?;
            }
            if table.is_set(j, k, l) {
                return Err(Error::Format(format!(
                    "product {}{}{} given twice",
                    basis.name(j),
                    basis.name(k),
                    basis.name(l)
                )));
            }
            table.set(j, k, l, normalize(result));
        }
        GeneralTripleSystem::from_table(name, kind, basis, epsilon, delta, table, form)
    }

    pub fn from_table(
        name: impl Into<String>,
        kind: FkKind,
        basis: GradedBasis,
        epsilon: Sign,
        delta: Sign,
        table: TrilinearTable,
        form: Option<BilinearForm>,
    ) -> Result<Self> {
        if table.dim() != basis.len() {
            return Err(Error::DimensionMismatch("table and basis sizes differ".into()));
        }
        if let Some(g) = &form {
            if g.parities() != basis.parities() {
                return Err(Error::DimensionMismatch("form grades differ from basis grades".into()));
            }
        }
        for ((j, k, l), v) in table.iter() {
            let target = basis.parity(j) + basis.parity(k) + basis.parity(l);
            if let Some((m, _)) = v.iter().find(|(m, _)| basis.parity(*m) != target) {
                return Err(Error::GradeViolation(format!(
                    "{}{}{} has a component along {} of the wrong grade",
                    basis.name(j),
                    basis.name(k),
                    basis.name(l),
                    basis.name(*m)
                )));
            }
        }
        Ok(GeneralTripleSystem {
            name: name.into(),
            kind,
            basis,
            epsilon,
            delta,
            table,
            form,
            p_operator: None,
        })
    }

    pub fn from_fn<F>(
        name: impl Into<String>,
        kind: FkKind,
        basis: GradedBasis,
        epsilon: Sign,
        delta: Sign,
        form: Option<BilinearForm>,
        f: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> Vec<Rational>,
    {
        let table = TrilinearTable::from_fn(basis.len(), f);
        GeneralTripleSystem::from_table(name, kind, basis, epsilon, delta, table, form)
    }

    /// The product `xyz = [x,y,z]` of a triple system with the given ε.
    pub fn from_triple(t: &TripleSystem, epsilon: Sign) -> Self {
        GeneralTripleSystem {
            name: t.name().to_string(),
            kind: FkKind::GeneralizedFk,
            basis: t.basis().clone(),
            epsilon,
            delta: t.delta(),
            table: t.table().clone(),
            form: t.form().cloned(),
            p_operator: None,
        }
    }

    pub fn with_p_operator(mut self, p: Matrix, c: Rational) -> Result<Self> {
        if p.rows() != self.dim() || p.cols() != self.dim() {
            return Err(Error::DimensionMismatch("P must be square of the space dimension".into()));
        }
        self.p_operator = Some((p, c));
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> FkKind {
        self.kind
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

    pub fn epsilon(&self) -> Sign {
        self.epsilon
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

    pub fn p_operator(&self) -> Option<(&Matrix, &Rational)> {
        self.p_operator.as_ref().map(|(p, c)| (p, c))
    }

    pub(crate) fn require_form(&self) -> Result<&BilinearForm> {
        self.form
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{} carries no bilinear form", self.name)))
    }

    pub(crate) fn odd(&self) -> Vec<bool> {
        self.parities().iter().map(|p| p.is_odd()).collect()
    }

    pub fn product_basis(&self, j: usize, k: usize, l: usize) -> Vec<Rational> {
        self.table.eval_basis(j, k, l)
    }

    pub fn product(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        self.table.eval(x, y, z)
    }

    /// Matrix of `L(e_j, e_k): z ↦ e_j e_k z`.
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

    /// Matrix of `K(e_j, e_k): z ↦ (-1)^{kz} e_j z e_k − δ(-1)^{j(k+z)} e_k z e_j`.
    pub fn k_matrix(&self, j: usize, k: usize) -> Matrix {
        let n = self.dim();
        let p = self.odd();
        let mut m = Matrix::zeros(n, n);
        for l in 0..n {
            let mut col = crate::exact::vector::zeros(n);
            let first = crate::exact::sign(p[k] && p[l]);
            crate::tables::accumulate(&mut col, &first, self.table.get(j, l, k));
            let second = -self.delta.to_rational() * crate::exact::sign(p[j] && (p[k] ^ p[l]));
            crate::tables::accumulate(&mut col, &second, self.table.get(k, l, j));
            for (r, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(r, l, c);
                }
            }
        }
        m
    }

    /// `K(x, y)` for homogeneous `x, y`.
    pub fn k_operator(&self, x: &[Rational], y: &[Rational]) -> Result<MultOperator> {
        let n = self.dim();
        let grade = |v: &[Rational]| -> Result<Parity> {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in a {n}-dimensional space",
                    v.len()
                )));
            }
            self.basis.vector_parity(v).ok_or(Error::NonHomogeneous)
        };
        let parity = grade(x)? + grade(y)?;
        let mut matrix = Matrix::zeros(n, n);
        for (j, xj) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                matrix = &matrix + &self.k_matrix(j, k).scale(&(xj * yk));
            }
        }
        Ok(MultOperator {
            matrix,
            parity,
            kind: OperatorKind::K,
            generators: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, vector};

    fn swap_system(delta: Sign) -> GeneralTripleSystem {
        // e1 e2 e1 = e2, everything else zero
        let basis = GradedBasis::even(["e1", "e2"]);
        GeneralTripleSystem::new(
            "swap",
            FkKind::GeneralizedFk,
            basis,
            -delta,
            delta,
            [((0, 1, 0), vec![(1, int(1))])],
            None,
        )
        .unwrap()
    }

    #[test]
    fn k_matrix_by_hand() {
        let s = swap_system(Sign::Plus);
        // K(e1,e1) e2 = e1 e2 e1 − e1 e2 e1 = 0
        assert!(s.k_matrix(0, 0).column(1).iter().all(Zero::is_zero));
        let anti = swap_system(Sign::Minus);
        assert_eq!(anti.k_matrix(0, 0).column(1), vec![int(0), int(2)]);
        // K(e1,e2) e1 = e1 e1 e2 − e2 e1 e1 = 0; K(e2,e1) e2 = e2 e2 e1 − e1 e2 e2 = 0
        assert_eq!(s.k_matrix(0, 1), Matrix::zeros(2, 2));
        assert_eq!(s.k_matrix(1, 0), Matrix::zeros(2, 2));
        let op = s.k_operator(&vector::unit(2, 0), &vector::unit(2, 0)).unwrap();
        assert_eq!(op.parity, Parity::Even);
    }

    #[test]
    fn grade_checked() {
        let basis = GradedBasis::numbered(vec![Parity::Even, Parity::Odd]);
        let bad = GeneralTripleSystem::new(
            "bad",
            FkKind::GeneralizedFk,
            basis,
            Sign::Minus,
            Sign::Plus,
            [((0, 0, 0), vec![(1, int(1))])],
            None,
        );
        assert!(matches!(bad, Err(Error::GradeViolation(_))));
    }

    #[test]
    fn kind_round_trip() {
        for k in [FkKind::GeneralizedFk, FkKind::Jordan] {
            assert_eq!(k.as_str().parse::<FkKind>().unwrap(), k);
        }
        assert!("lie".parse::<FkKind>().is_err());
    }
}
