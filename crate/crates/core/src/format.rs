//! JSON file formats for algebras, triple systems and R-matrices.
//!
//! Rationals are written as `"p/q"` strings; bare JSON integers are
//! accepted on input. Basis elements are referenced by name.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::basis::{GradedBasis, Sign};
use crate::error::{Error, Result};
use crate::exact::{rational_str, signed, Matrix, Parity, Poly, Rational};
use crate::fk::{FkKind, GeneralTripleSystem};
use crate::lie::{BilinearForm, GradedAlgebra};
use crate::tables::{normalize, SparseVec};
use crate::triple::TripleSystem;
use crate::ybe::RMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub name: String,
    pub grade: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "rational_str")]
    pub coeff: Rational,
    pub basis: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRecord {
    pub left: String,
    pub right: String,
    #[serde(with = "rational_str")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub a: String,
    pub b: String,
    pub c: String,
    pub result: Vec<Term>,
}

/// Algebra file: `name`, `basis`, `brackets` and an optional `form`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<BasisRecord>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<FormRecord>>,
}

/// Triple-system file. Without `kind` it describes a δ Lie-super triple
/// system; with `kind` a generalized FK or Jordan triple system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub delta: Sign,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Sign>,
    pub basis: Vec<BasisRecord>,
    #[serde(default)]
    pub triples: Vec<TripleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<FormRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_operator: Option<Vec<Vec<RationalText>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<RationalText>,
}

/// A rational in its string encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalText(#[serde(with = "rational_str")] pub Rational);

/// Either kind of triple system held by a [`TripleFile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadedTriple {
    Lie(TripleSystem),
    General(GeneralTripleSystem),
}

impl LoadedTriple {
    pub fn name(&self) -> &str {
        match self {
            LoadedTriple::Lie(t) => t.name(),
            LoadedTriple::General(g) => g.name(),
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file records serialize");
    s.push('\n');
    s
}

fn basis_from_records(records: &[BasisRecord]) -> Result<GradedBasis> {
    GradedBasis::new(
        records.iter().map(|r| r.name.clone()).collect(),
        records.iter().map(|r| r.grade).collect(),
    )
}

fn basis_records(basis: &GradedBasis) -> Vec<BasisRecord> {
    basis
        .names()
        .iter()
        .zip(basis.parities())
        .map(|(name, grade)| BasisRecord {
            name: name.clone(),
            grade: *grade,
        })
        .collect()
}

fn lookup(basis: &GradedBasis, name: &str) -> Result<usize> {
    basis
        .index_of(name)
        .ok_or_else(|| Error::Format(format!("unknown basis element {name:?}")))
}

fn terms_to_sparse(basis: &GradedBasis, terms: &[Term]) -> Result<SparseVec> {
    terms
        .iter()
        .map(|t| Ok((lookup(basis, &t.basis)?, t.coeff.clone())))
        .collect()
}

fn sparse_to_terms(basis: &GradedBasis, v: &[(usize, Rational)]) -> Vec<Term> {
    v.iter()
        .map(|(i, c)| Term {
            coeff: c.clone(),
            basis: basis.name(*i).to_string(),
        })
        .collect()
}

/// Gram matrix from form records. A pair given in one order only is
/// mirrored with `<y|x> = s(-1)^{xy}<x|y>`.
fn form_from_records(basis: &GradedBasis, records: &[FormRecord], symmetry: Sign) -> Result<BilinearForm> {
    let n = basis.len();
    let mut gram = Matrix::zeros(n, n);
    let mut supplied = vec![false; n * n];
    for r in records {
        let (j, k) = (lookup(basis, &r.left)?, lookup(basis, &r.right)?);
        if supplied[j * n + k] {
            return Err(Error::Format(format!("form entry <{}|{}> given twice", r.left, r.right)));
        }
        supplied[j * n + k] = true;
        gram.set(j, k, r.value.clone());
    }
    for j in 0..n {
        for k in 0..n {
            if supplied[j * n + k] && !supplied[k * n + j] {
                let neg = symmetry.negative_with(basis.parity(j).both_odd(basis.parity(k)));
                let v = signed(neg, gram.get(j, k).clone());
                gram.set(k, j, v);
            }
        }
    }
    BilinearForm::unchecked(gram, basis.parities().to_vec())
}

fn form_records(basis: &GradedBasis, g: &BilinearForm) -> Vec<FormRecord> {
    let n = basis.len();
    (0..n)
        .flat_map(|j| (0..n).map(move |k| (j, k)))
        .filter(|&(j, k)| !g.get(j, k).is_zero())
        .map(|(j, k)| FormRecord {
            left: basis.name(j).to_string(),
            right: basis.name(k).to_string(),
            value: g.get(j, k).clone(),
        })
        .collect()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    /// Builds the algebra; the form, if present, is only shape-checked.
    pub fn build(&self) -> Result<(GradedAlgebra, Option<BilinearForm>)> {
        let basis = basis_from_records(&self.basis)?;
        let entries = self
            .brackets
            .iter()
            .map(|b| {
                let j = lookup(&basis, &b.left)?;
                let k = lookup(&basis, &b.right)?;
                Ok(((j, k), terms_to_sparse(&basis, &b.result)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let form = self
            .form
            .as_ref()
            .map(|f| form_from_records(&basis, f, Sign::Plus))
            .transpose()?;
        let algebra = GradedAlgebra::new(self.name.clone(), basis, entries)?;
        Ok((algebra, form))
    }

    /// Records every nonzero bracket in both orders.
    pub fn from_algebra(a: &GradedAlgebra, form: Option<&BilinearForm>) -> Self {
        let basis = a.basis();
        let brackets = a
            .table()
            .iter()
            .map(|((j, k), v)| BracketRecord {
                left: basis.name(j).to_string(),
                right: basis.name(k).to_string(),
                result: sparse_to_terms(basis, v),
            })
            .collect();
        AlgebraFile {
            name: a.name().to_string(),
            basis: basis_records(basis),
            brackets,
            form: form.map(|g| form_records(basis, g)),
        }
    }
}

pub fn load_algebra(text: &str) -> Result<(GradedAlgebra, Option<BilinearForm>)> {
    AlgebraFile::parse(text)?.build()
}

pub fn algebra_to_json(a: &GradedAlgebra, form: Option<&BilinearForm>) -> String {
    AlgebraFile::from_algebra(a, form).to_json()
}

impl TripleFile {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    /// Builds the system. Lie-super triple systems get their missing
    /// `(b, a, c)` products and form mirrors completed with δ; general
    /// systems are taken as given, with form mirrors completed with -ε.
    pub fn build(&self) -> Result<LoadedTriple> {
        let basis = basis_from_records(&self.basis)?;
        let entries = self
            .triples
            .iter()
            .map(|t| {
                let a = lookup(&basis, &t.a)?;
                let b = lookup(&basis, &t.b)?;
                let c = lookup(&basis, &t.c)?;
                Ok(((a, b, c), normalize(terms_to_sparse(&basis, &t.result)?)))
            })
            .collect::<Result<Vec<_>>>()?;
        match &self.kind {
            None => {
                if self.epsilon.is_some() || self.p_operator.is_some() || self.c.is_some() {
                    return Err(Error::Format(
                        "epsilon, p_operator and c require a kind field".into(),
                    ));
                }
                let form = self
                    .form
                    .as_ref()
                    .map(|f| form_from_records(&basis, f, self.delta))
                    .transpose()?;
                let t = TripleSystem::new(self.name.clone(), basis, self.delta, entries, form)?;
                Ok(LoadedTriple::Lie(t))
            }
            Some(kind) => {
                let kind: FkKind = kind.parse()?;
                let epsilon = match (kind, self.epsilon) {
                    (_, Some(e)) => e,
                    (FkKind::Jordan, None) => -self.delta,
                    (FkKind::GeneralizedFk, None) => {
                        return Err(Error::Format("generalized-fk systems need an epsilon field".into()))
                    }
                };
                let form = self
                    .form
                    .as_ref()
                    .map(|f| form_from_records(&basis, f, -epsilon))
                    .transpose()?;
                let n = basis.len();
                let mut g =
                    GeneralTripleSystem::new(self.name.clone(), kind, basis, epsilon, self.delta, entries, form)?;
                match (&self.p_operator, &self.c) {
                    (Some(rows), Some(c)) => {
                        let rows: Vec<Vec<Rational>> =
                            rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
                        if rows.len() != n {
                            return Err(Error::Format(format!("p_operator must have {n} rows")));
                        }
                        g = g.with_p_operator(Matrix::from_rows(rows)?, c.0.clone())?;
                    }
                    (None, None) => {}
                    _ => return Err(Error::Format("p_operator and c must be given together".into())),
                }
                Ok(LoadedTriple::General(g))
            }
        }
    }

    pub fn from_triple(t: &TripleSystem) -> Self {
        let basis = t.basis();
        TripleFile {
            name: t.name().to_string(),
            kind: None,
            delta: t.delta(),
            epsilon: None,
            basis: basis_records(basis),
            triples: triple_records(basis, t.table().iter()),
            form: t.form().map(|g| form_records(basis, g)),
            p_operator: None,
            c: None,
        }
    }

    pub fn from_general(g: &GeneralTripleSystem) -> Self {
        let basis = g.basis();
        let (p_operator, c) = match g.p_operator() {
            Some((p, c)) => (
                Some(
                    p.to_rows()
                        .into_iter()
                        .map(|r| r.into_iter().map(RationalText).collect())
                        .collect(),
                ),
                Some(RationalText(c.clone())),
            ),
            None => (None, None),
        };
        TripleFile {
            name: g.name().to_string(),
            kind: Some(g.kind().as_str().to_string()),
            delta: g.delta(),
            epsilon: Some(g.epsilon()),
            basis: basis_records(basis),
            triples: triple_records(basis, g.table().iter()),
            form: g.form().map(|f| form_records(basis, f)),
            p_operator,
            c,
        }
    }
}

fn triple_records<'a>(
    basis: &GradedBasis,
    entries: impl Iterator<Item = ((usize, usize, usize), &'a [(usize, Rational)])>,
) -> Vec<TripleRecord> {
    entries
        .map(|((a, b, c), v)| TripleRecord {
            a: basis.name(a).to_string(),
            b: basis.name(b).to_string(),
            c: basis.name(c).to_string(),
            result: sparse_to_terms(basis, v),
        })
        .collect()
}

pub fn load_triple(text: &str) -> Result<LoadedTriple> {
    TripleFile::parse(text)?.build()
}

pub fn triple_to_json(t: &TripleSystem) -> String {
    TripleFile::from_triple(t).to_json()
}

pub fn general_to_json(g: &GeneralTripleSystem) -> String {
    TripleFile::from_general(g).to_json()
}

/// Row and column index of the basis pair `(a, b)` is `a·N + b`.
pub const PAIR_INDEX_ORDER: &str = "row-major (a,b) -> a*N+b";

/// R-matrix with polynomial entries, each an ascending coefficient array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixFile {
    pub dimension: usize,
    pub index_order: String,
    pub entries: Vec<Vec<Poly>>,
}

/// R(θ) at one rational θ as a flat row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvaluatedRMatrixFile {
    pub dimension: usize,
    pub index_order: String,
    #[serde(with = "rational_str")]
    pub theta: Rational,
    pub matrix: Vec<RationalText>,
}

impl RMatrixFile {
    pub fn from_rmatrix(r: &RMatrix) -> Self {
        RMatrixFile {
            dimension: r.dim(),
            index_order: PAIR_INDEX_ORDER.to_string(),
            entries: r.poly_entries(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    /// One component `θ^k · R_k` per power of θ.
    pub fn build(&self) -> Result<RMatrix> {
        let size = self.dimension * self.dimension;
        if self.entries.len() != size || self.entries.iter().any(|r| r.len() != size) {
            return Err(Error::Format(format!("entries must be {size}x{size}")));
        }
        let degree = self
            .entries
            .iter()
            .flatten()
            .map(|p| p.coeffs().len())
            .max()
            .unwrap_or(0);
        let mut components = Vec::with_capacity(degree);
        for k in 0..degree {
            let rows = self
                .entries
                .iter()
                .map(|r| r.iter().map(|p| p.coeff(k)).collect())
                .collect();
            let mut monomial = vec![Rational::zero(); k + 1];
            monomial[k] = crate::exact::int(1);
            components.push((Matrix::from_rows(rows)?, Poly::new(monomial)));
        }
        RMatrix::new(self.dimension, components)
    }
}

impl EvaluatedRMatrixFile {
    pub fn from_rmatrix(r: &RMatrix, theta: &Rational) -> Self {
        EvaluatedRMatrixFile {
            dimension: r.dim(),
            index_order: PAIR_INDEX_ORDER.to_string(),
            theta: theta.clone(),
            matrix: r.eval(theta).data().iter().cloned().map(RationalText).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn matrix(&self) -> Result<Matrix> {
        let size = self.dimension * self.dimension;
        Matrix::new(size, size, self.matrix.iter().map(|x| x.0.clone()).collect())
    }
}
