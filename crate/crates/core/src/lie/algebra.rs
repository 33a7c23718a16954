use num_traits::Zero;

use crate::basis::GradedBasis;
use crate::error::{Error, Result};
use crate::exact::{signed, vector, Matrix, Parity, Rational};
use crate::report::Violations;
use crate::tables::{normalize, BilinearTable, SparseVec};

/// One user-supplied bracket `[e_left, e_right] = Σ coeff·e_result`.
pub type BracketEntry = ((usize, usize), Vec<(usize, Rational)>);

/// Z₂-graded algebra given by structure constants `[e_j, e_k] = Σ C^l_{jk} e_l`.
///
/// Construction enforces grade compatibility and fills every missing
/// mirrored pair `(k, j)` by super-antisymmetry. Pairs supplied in both
/// orders are kept verbatim even when they disagree, so that tables which
/// are not Lie superalgebras can still be loaded and diagnosed by
/// [`check_lie_super`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    name: String,
    basis: GradedBasis,
    table: BilinearTable,
}

impl GradedAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis: GradedBasis,
        entries: impl IntoIterator<Item = BracketEntry>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut given = BilinearTable::zero(n);
        let mut supplied = vec![false; n * n];
        for ((j, k), result) in entries {
            basis.check_index(j)?;
            basis.check_index(k)?;
            for (l, _) in &result {
                basis.check_index(*l)?;
            }
            if supplied[j * n + k] {
                return Err(Error::Format(format!(
                    "bracket [{}, {}] given twice",
                    basis.name(j),
                    basis.name(k)
                )));
            }
            supplied[j * n + k] = true;
            let result = normalize(result);
            let target = basis.parity(j) + basis.parity(k);
            if let Some((l, _)) = result.iter().find(|(l, _)| basis.parity(*l) != target) {
                return Err(Error::GradeViolation(format!(
                    "[{}, {}] has a component along {} of the wrong grade",
                    basis.name(j),
                    basis.name(k),
                    basis.name(*l)
                )));
            }
            given.set(j, k, result);
        }
        let mut table = given.clone();
        for j in 0..n {
            for k in 0..n {
                if supplied[j * n + k] && !supplied[k * n + j] {
                    let flip = !basis.parity(j).both_odd(basis.parity(k));
                    let mirrored: SparseVec = given
                        .get(j, k)
                        .iter()
                        .map(|(l, c)| (*l, signed(flip, c.clone())))
                        .collect();
                    table.set(k, j, mirrored);
                }
            }
        }
        Ok(GradedAlgebra {
            name: name.into(),
            basis,
            table,
        })
    }

    /// Abelian algebra on the given basis.
    pub fn abelian(name: impl Into<String>, basis: GradedBasis) -> Self {
        let n = basis.len();
        GradedAlgebra {
            name: name.into(),
            basis,
            table: BilinearTable::zero(n),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn parities(&self) -> &[Parity] {
        self.basis.parities()
    }

    pub fn table(&self) -> &BilinearTable {
        &self.table
    }

    /// `C^l_{jk}`.
    pub fn structure_constant(&self, l: usize, j: usize, k: usize) -> Rational {
        self.table.coefficient(l, j, k)
    }

    pub fn bracket_basis(&self, j: usize, k: usize) -> Vec<Rational> {
        self.table.eval_basis(j, k)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.table.eval(x, y)
    }

    /// Matrix of `ad e_j`, with `(ad e_j)_{lk} = C^l_{jk}`.
    pub fn ad_matrix(&self, j: usize) -> Result<Matrix> {
        self.basis.check_index(j)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            for (l, c) in self.table.get(j, k) {
                m.set(*l, k, c.clone());
            }
        }
        Ok(m)
    }

    /// Matrix of `ad x` for an arbitrary vector `x`.
    pub fn ad_vector(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            let col = self.bracket(x, &vector::unit(n, k));
            for (l, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(l, k, c);
                }
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_zero()
    }

    /// Block direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &GradedAlgebra) -> GradedAlgebra {
        let n = self.dim();
        let m = other.dim();
        let basis = self.basis.direct_sum(&other.basis, "'");
        let mut table = BilinearTable::zero(n + m);
        for ((j, k), v) in self.table.iter() {
            table.set(j, k, v.to_vec());
        }
        for ((j, k), v) in other.table.iter() {
            table.set(n + j, n + k, v.iter().map(|(l, c)| (n + l, c.clone())).collect());
        }
        GradedAlgebra {
            name: format!("{}+{}", self.name, other.name),
            basis,
            table,
        }
    }

    /// Assembles an algebra from an already completed table.
    pub fn from_table(name: impl Into<String>, basis: GradedBasis, table: BilinearTable) -> Self {
        GradedAlgebra {
            name: name.into(),
            basis,
            table,
        }
    }
}

/// A basis triple on which the graded Jacobi identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

/// Outcome of [`check_lie_super`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieCheckReport {
    /// Pairs `(j, k)` with `[e_k, e_j] ≠ -(-1)^{σ_jσ_k}[e_j, e_k]`, `j ≤ k`.
    pub antisymmetry: Violations<(usize, usize)>,
    pub jacobi: Violations<JacobiViolation>,
}

impl LieCheckReport {
    pub fn passes(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

/// Verifies super-antisymmetry and the graded Jacobi identity
/// `(-1)^{xy}[[x,z],y] + (-1)^{yz}[[y,x],z] + (-1)^{zx}[[z,y],x] = 0`
/// on every basis triple.
pub fn check_lie_super(a: &GradedAlgebra) -> LieCheckReport {
    let n = a.dim();
    let p = a.parities();
    let mut report = LieCheckReport::default();
    for j in 0..n {
        for k in j..n {
            let jk = a.bracket_basis(j, k);
            let kj = a.bracket_basis(k, j);
            let expected = jk
                .iter()
                .map(|c| signed(!p[j].both_odd(p[k]), c.clone()))
                .collect::<Vec<_>>();
            report.antisymmetry.record(kj == expected, || (j, k));
        }
    }
    // [[e_a, e_b], e_c] for every basis triple, computed once.
    let nested = |a_: usize, b: usize, c: usize| -> Vec<Rational> {
        let mut out = vector::zeros(n);
        for (m, coeff) in a.table().get(a_, b) {
            for (l, c2) in a.table().get(*m, c) {
                out[*l] += coeff * c2;
            }
        }
        out
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut r = vector::zeros(n);
                let t1 = nested(x, z, y);
                let t2 = nested(y, x, z);
                let t3 = nested(z, y, x);
                vector::add_scaled(&mut r, &p[x].koszul(p[y]), &t1);
                vector::add_scaled(&mut r, &p[y].koszul(p[z]), &t2);
                vector::add_scaled(&mut r, &p[z].koszul(p[x]), &t3);
                if !vector::is_zero(&r) {
                    report.jacobi.push(JacobiViolation {
                        triple: (x, y, z),
                        residual: r,
                    });
                }
            }
        }
    }
    report
}

/// Verifies that every bracket of basis elements is homogeneous of the
/// summed grade. Always true for values built through [`GradedAlgebra::new`].
pub fn check_grading(a: &GradedAlgebra) -> bool {
    let p = a.parities();
    a.table()
        .iter()
        .all(|((j, k), v)| v.iter().all(|(l, _)| p[*l] == p[j] + p[k]))
}
