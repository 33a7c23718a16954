use num_traits::Zero;

use super::family::{dual_basis, ThetaTripleFamily};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly, Rational};

/// `R(θ) = Σ_i p_i(θ) R_i` acting on `V ⊗ V`, rows and columns indexed by
/// basis pairs `(a, b) ↦ a·N + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    n: usize,
    components: Vec<(Matrix, Poly)>,
}

impl RMatrix {
    pub fn new(n: usize, components: Vec<(Matrix, Poly)>) -> Result<Self> {
        if components.iter().any(|(m, _)| m.rows() != n * n || m.cols() != n * n) {
            return Err(Error::DimensionMismatch(format!("R-matrix components must be {0}x{0}", n * n)));
        }
        Ok(RMatrix { n, components })
    }

    /// Dimension `N` of `V`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[(Matrix, Poly)] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(|(_, p)| p.degree()).max().unwrap_or(0)
    }

    pub fn eval(&self, theta: &Rational) -> Matrix {
        let size = self.n * self.n;
        let mut acc = Matrix::zeros(size, size);
        for (m, p) in &self.components {
            let c = p.eval(theta);
            if !c.is_zero() {
                acc = &acc + &m.scale(&c);
            }
        }
        acc
    }

    pub fn entry(&self, row: usize, col: usize) -> Poly {
        self.components
            .iter()
            .fold(Poly::zero(), |acc, (m, p)| &acc + &p.scale(m.get(row, col)))
    }

    /// Entries as polynomials, row-major.
    pub fn poly_entries(&self) -> Vec<Vec<Poly>> {
        let size = self.n * self.n;
        (0..size).map(|r| (0..size).map(|c| self.entry(r, c)).collect()).collect()
    }
}

/// `R(θ)(x⊗y) = Σ_j e_j ⊗ [e^j,x,y]_θ`, checked against the second
/// expression `Σ_j [e^j,y,x]_θ ⊗ e_j`.
pub fn build_r(f: &ThetaTripleFamily) -> Result<RMatrix> {
    let n = f.dim();
    let dual = dual_basis(f.form())?;
    let size = n * n;
    let mut first_components = Vec::new();
    let mut second_components = Vec::new();
    for (t, p) in f.components() {
        let mut first = Matrix::zeros(size, size);
        let mut second = Matrix::zeros(size, size);
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    // R[(c,d),(a,b)] = Σ_k D_ck T^d_{kab}
                    for (d, v) in t.get(k, a, b) {
                        for c in 0..n {
                            let dck = dual.d.get(c, k);
                            if !dck.is_zero() {
                                let idx = (c * n + d, a * n + b);
                                let cur = first.get(idx.0, idx.1) + dck * v;
                                first.set(idx.0, idx.1, cur);
                            }
                        }
                    }
                    // R[(c,d),(a,b)] = Σ_k D_dk T^c_{kba}
                    for (c, v) in t.get(k, b, a) {
                        for d in 0..n {
                            let ddk = dual.d.get(d, k);
                            if !ddk.is_zero() {
                                let idx = (c * n + d, a * n + b);
                                let cur = second.get(idx.0, idx.1) + ddk * v;
                                second.set(idx.0, idx.1, cur);
                            }
                        }
                    }
                }
            }
        }
        first_components.push((first, p.clone()));
        second_components.push((second, p.clone()));
    }
    let r = RMatrix::new(n, first_components)?;
    let other = RMatrix::new(n, second_components)?;
    for row in 0..size {
        for col in 0..size {
            if r.entry(row, col) != other.entry(row, col) {
                return Err(Error::FormViolation(format!(
                    "the two expressions of R differ at entry ({row}, {col})"
                )));
            }
        }
    }
    Ok(r)
}
