use num_traits::{One, Zero};

use super::system::GeneralTripleSystem;
use crate::basis::GradedBasis;
use crate::canonical::LeftSpan;
use crate::error::{Error, Result};
use crate::exact::{sign, vector, Matrix, Rational};
use crate::lie::{certify_quasi_classical, check_lie_super, BilinearForm, GradedAlgebra, LieCheckReport};
use crate::report::{Residual, Violations};
use crate::tables::{to_sparse, BilinearTable};
use crate::triple::TripleSystem;

/// The Lie superalgebra spanned by the left multiplications of a Jordan
/// triple system, with its induced form and certification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanLieAlgebra {
    pub m: LeftSpan,
    pub algebra: GradedAlgebra,
    pub form: BilinearForm,
    /// Generator quadruples `(u, v, x, y)` where
    /// `[L(u,v),L(x,y)] = L(uvx,y) − δ(-1)^{(u+v)x+uv}L(x,vuy)` differs from
    /// the graded commutator; residuals are flattened matrices.
    pub bracket_mismatches: Violations<Residual>,
    /// `<L(x,y)|L(u,v)> = <xyu|v>` is independent of the decomposition.
    pub form_well_defined: bool,
    pub lie: LieCheckReport,
    /// Basis of the kernel of the induced form; empty when non-degenerate.
    pub form_kernel: Vec<Vec<Rational>>,
    /// Refusal of the quasi-classical certification, when attempted and
    /// failed. Not attempted for a degenerate form.
    pub refusal: Option<Error>,
}

impl JordanLieAlgebra {
    pub fn is_certified(&self) -> bool {
        self.bracket_mismatches.is_empty()
            && self.form_well_defined
            && self.lie.passes()
            && self.form_kernel.is_empty()
            && self.refusal.is_none()
    }
}

pub fn jordan_lie_algebra(g: &GeneralTripleSystem) -> Result<JordanLieAlgebra> {
    let form = g.require_form()?;
    let n = g.dim();
    let p = g.odd();
    let parities = g.parities();
    let generators: Vec<Matrix> = (0..n * n).map(|i| g.left_matrix(i / n, i % n)).collect();
    let m = LeftSpan::from_generators(parities, generators);
    let d = m.span.dim();

    // L(a, e_y) and L(e_x, a) for sparse a
    let left_of = |a: &[(usize, Rational)], y: usize, scale: &Rational, acc: &mut Matrix| {
        for (i, c) in a {
            *acc = &*acc + &m.generators[i * n + y].scale(&(scale * c));
        }
    };
    let mut bracket_mismatches = Violations::new();
    for u in 0..n {
        for v in 0..n {
            let luv = &m.generators[u * n + v];
            let puv = parities[u] + parities[v];
            for x in 0..n {
                let s = -g.delta().to_rational() * sign(((p[u] ^ p[v]) && p[x]) ^ (p[u] && p[v]));
                for y in 0..n {
                    let lxy = &m.generators[x * n + y];
                    let commutator = luv.graded_commutator(puv, lxy, parities[x] + parities[y]);
                    let mut closed = Matrix::zeros(n, n);
                    left_of(g.table().get(u, v, x), y, &Rational::one(), &mut closed);
                    for (i, c) in g.table().get(v, u, y) {
                        closed = &closed + &m.generators[x * n + i].scale(&(&s * c));
                    }
                    if closed != commutator {
                        let diff = &closed - &commutator;
                        bracket_mismatches.push(Residual::new([u, v, x, y], diff.data().to_vec()));
                    }
                }
            }
        }
    }

    let mp = m.span.parities().to_vec();
    let mut table = BilinearTable::zero(d);
    for a in 0..d {
        for b in 0..d {
            let comm = m.span.basis()[a].graded_commutator(mp[a], &m.span.basis()[b], mp[b]);
            let coords = m.span.coordinates(&comm).ok_or_else(|| {
                Error::Closure(format!("[M{}, M{}] leaves the span of left multiplications", a + 1, b + 1))
            })?;
            table.set(a, b, to_sparse(&coords));
        }
    }

    // <Y|L(u,v)> = <Y e_u|e_v>, summed over two decompositions of the right argument
    let pair_with_generator =
        |y: &Matrix, u: usize, v: usize| -> Rational { (0..n).map(|r| y.get(r, u) * form.get(r, v)).sum() };
    let mut gram = Matrix::zeros(d, d);
    let mut form_well_defined = true;
    for b in 0..d {
        let (first, kernel) = m.decompose(&m.span.basis()[b]).expect("basis element lies in M");
        let mut second = first.clone();
        for k in &kernel {
            vector::add_scaled(&mut second, &Rational::one(), k);
        }
        for a in 0..d {
            let ya = &m.span.basis()[a];
            let eval = |c: &[Rational]| -> Rational {
                c.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| c * pair_with_generator(ya, idx / n, idx % n))
                    .sum()
            };
            let value = eval(&first);
            if value != eval(&second) {
                form_well_defined = false;
            }
            gram.set(a, b, value);
        }
    }

    let names: Vec<String> = (1..=d).map(|i| format!("M{i}")).collect();
    let basis = GradedBasis::new(names, mp.clone())?;
    let algebra = GradedAlgebra::from_table(format!("M({})", g.name()), basis, table);
    let induced = BilinearForm::unchecked(gram, mp)?;
    let form_kernel = induced.gram().nullspace();
    let refusal = if form_kernel.is_empty() && d > 0 {
        certify_quasi_classical(&algebra, &induced).err()
    } else {
        None
    };
    Ok(JordanLieAlgebra {
        lie: check_lie_super(&algebra),
        m,
        algebra,
        form: induced,
        bracket_mismatches,
        form_well_defined,
        form_kernel,
        refusal,
    })
}

/// `[x,y,z] = xyz − δ(-1)^{xy} yxz`, carrying the same δ and form.
pub fn jordan_to_lie_triple(g: &GeneralTripleSystem) -> Result<TripleSystem> {
    let p = g.odd();
    let t = g.table();
    TripleSystem::from_fn(format!("lie-triple({})", g.name()), g.basis().clone(), g.delta(), g.form().cloned(), |j, k, l| {
        let mut out = g.product_basis(j, k, l);
        let s = -g.delta().to_rational() * sign(p[j] && p[k]);
        crate::tables::accumulate(&mut out, &s, t.get(k, j, l));
        out
    })
}
