use crate::basis::GradedBasis;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Poly, Rational};
use crate::lie::BilinearForm;
use crate::report::{Residual, Violations};
use crate::tables::TrilinearTable;
use crate::triple::Pairings;

/// `e^j = Σ_k D_{jk} e_k`, so that `D·G = Id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBasis {
    pub d: Matrix,
}

impl DualBasis {
    pub fn vector(&self, j: usize) -> Vec<Rational> {
        self.d.row(j).to_vec()
    }
}

pub fn dual_basis(form: &BilinearForm) -> Result<DualBasis> {
    Ok(DualBasis {
        d: form.gram().invert()?,
    })
}

/// `[x,y,z]_θ = Σ_i p_i(θ) T_i(x,y,z)` on an even space with a symmetric
/// non-degenerate form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTripleFamily {
    name: String,
    basis: GradedBasis,
    form: BilinearForm,
    components: Vec<(TrilinearTable, Poly)>,
}

impl ThetaTripleFamily {
    /// Validates the grading, the form and `<y|[x,v,u]_θ> = <x|[y,u,v]_θ>`
    /// for every component.
    pub fn new(
        name: impl Into<String>,
        basis: GradedBasis,
        form: BilinearForm,
        components: Vec<(TrilinearTable, Poly)>,
    ) -> Result<Self> {
        let family = ThetaTripleFamily::new_unchecked(name, basis, form, components)?;
        if let Some((i, r)) = verify_condition_3_6(&family)
            .iter()
            .enumerate()
            .find_map(|(i, v)| v.first().map(|r| (i, r.clone())))
        {
            return Err(Error::FormViolation(format!(
                "component {i} breaks <y|[x,v,u]> = <x|[y,u,v]> at {:?}",
                r.indices
            )));
        }
        Ok(family)
    }

    /// Validates only the grading, the form and the shapes.
    pub fn new_unchecked(
        name: impl Into<String>,
        basis: GradedBasis,
        form: BilinearForm,
        components: Vec<(TrilinearTable, Poly)>,
    ) -> Result<Self> {
        if !basis.is_all_even() {
            return Err(Error::Precondition("R-matrix families are built on even spaces only".into()));
        }
        if form.dim() != basis.len() || components.iter().any(|(t, _)| t.dim() != basis.len()) {
            return Err(Error::DimensionMismatch("form, products and basis sizes differ".into()));
        }
        if let Some((j, k)) = form.symmetry_violation(crate::basis::Sign::Plus) {
            return Err(Error::FormViolation(format!("<e{}|e{}> is not symmetric", j + 1, k + 1)));
        }
        if !form.is_nondegenerate() {
            return Err(Error::Singular);
        }
        Ok(ThetaTripleFamily {
            name: name.into(),
            basis,
            form,
            components,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn components(&self) -> &[(TrilinearTable, Poly)] {
        &self.components
    }

    /// Largest degree among the coefficient polynomials.
    pub fn degree(&self) -> usize {
        self.components.iter().map(|(_, p)| p.degree()).max().unwrap_or(0)
    }

    /// Structure constants of `[x,y,z]_θ` at a point.
    pub fn at(&self, theta: &Rational) -> TrilinearTable {
        let terms: Vec<(&TrilinearTable, Rational)> =
            self.components.iter().map(|(t, p)| (t, p.eval(theta))).collect();
        TrilinearTable::linear_combination(self.dim(), &terms)
    }
}

/// Per component, the basis quadruples `(x, y, u, v)` violating
/// `<y|T(x,v,u)> = <x|T(y,u,v)>`.
pub fn verify_condition_3_6(f: &ThetaTripleFamily) -> Vec<Violations<Residual>> {
    let n = f.dim();
    f.components
        .iter()
        .map(|(t, _)| {
            let pr = Pairings::new(t, &f.form);
            let mut out = Violations::new();
            for x in 0..n {
                for y in 0..n {
                    for u in 0..n {
                        for v in 0..n {
                            let lhs = pr.right(y, x, v, u);
                            let rhs = pr.right(x, y, u, v);
                            if lhs != rhs {
                                out.push(Residual::new([x, y, u, v], vec![lhs - rhs]));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect()
}
