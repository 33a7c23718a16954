//! The Lie superalgebras `M = span{L(x,y)}` and `L₀ = V ⊕ M` built from a
//! quasi-classical Lie-super triple system.

use num_traits::{One, Zero};

use crate::basis::{GradedBasis, Sign};
use crate::error::{Error, Result};
use crate::exact::{signed, vector, Matrix, Parity, Rational, Subspace};
use crate::lie::{
    certify_quasi_classical, check_lie_super, verify_ideal, BilinearForm, GradedAlgebra, LieCheckReport,
};
use crate::report::{Residual, Violations};
use crate::tables::{to_sparse, BilinearTable};
use crate::triple::{verify_triple_ideal, TripleSystem};

/// Span of a family of homogeneous operators on an `n`-dimensional graded
/// space, with the reduced echelon basis of their flattened matrices.
///
/// Each echelon basis element is itself homogeneous because operators of
/// different parity occupy disjoint matrix positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSpan {
    n: usize,
    space: Subspace,
    basis: Vec<Matrix>,
    parities: Vec<Parity>,
}

impl OperatorSpan {
    pub fn new(v_parities: &[Parity], generators: impl IntoIterator<Item = Matrix>) -> Self {
        let n = v_parities.len();
        let space = Subspace::span(n * n, generators.into_iter().map(|m| m.data().to_vec()));
        let basis: Vec<Matrix> = space
            .basis()
            .iter()
            .map(|row| Matrix::new(n, n, row.clone()).expect("n² entries"))
            .collect();
        let parities = space
            .pivots()
            .iter()
            .map(|&p| v_parities[p / n] + v_parities[p % n])
            .collect();
        OperatorSpan {
            n,
            space,
            basis,
            parities,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn coordinates(&self, op: &Matrix) -> Option<Vec<Rational>> {
        if op.rows() != self.n || op.cols() != self.n {
            return None;
        }
        self.space.coordinates(op.data())
    }

    pub fn element(&self, coords: &[Rational]) -> Matrix {
        let mut acc = Matrix::zeros(self.n, self.n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = &acc + &b.scale(c);
            }
        }
        acc
    }
}

/// `M` with the coordinates of every `L(e_j, e_k)` in its echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftSpan {
    pub span: OperatorSpan,
    /// `L(e_j, e_k)` at index `j·N + k`.
    pub generators: Vec<Matrix>,
    /// Coordinates of `L(e_j, e_k)` at index `j·N + k`.
    pub coords: Vec<Vec<Rational>>,
}

impl LeftSpan {
    pub fn of(t: &TripleSystem) -> Self {
        let n = t.dim();
        let generators = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| t.left_matrix(j, k))
            .collect();
        LeftSpan::from_generators(t.parities(), generators)
    }

    /// `generators` holds `L(e_j, e_k)` at index `j·N + k`.
    pub fn from_generators(parities: &[Parity], generators: Vec<Matrix>) -> Self {
        let span = OperatorSpan::new(parities, generators.iter().cloned());
        let coords = generators
            .iter()
            .map(|g| span.coordinates(g).expect("generator lies in its span"))
            .collect();
        LeftSpan {
            span,
            generators,
            coords,
        }
    }

    /// Some decomposition `op = Σ c_{jk} L(e_j, e_k)` together with a basis
    /// of the relations among the generators.
    pub fn decompose(&self, op: &Matrix) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
        let size = self.span.n * self.span.n;
        let mut columns = Matrix::zeros(size, self.generators.len());
        for (c, g) in self.generators.iter().enumerate() {
            for (i, v) in g.data().iter().enumerate() {
                columns.set(i, c, v.clone());
            }
        }
        let particular = columns.solve(op.data()).expect("dimensions agree")?;
        Some((particular, columns.nullspace()))
    }

    pub fn coord(&self, j: usize, k: usize) -> &[Rational] {
        &self.coords[j * (self.span.n) + k]
    }
}

/// Echelon basis of `M` and coordinates of each `L(e_j, e_k)`.
pub fn build_m(t: &TripleSystem) -> Result<LeftSpan> {
    require_lie_type(t)?;
    Ok(LeftSpan::of(t))
}

fn require_lie_type(t: &TripleSystem) -> Result<()> {
    if t.delta() == Sign::Minus {
        return Err(Error::Precondition(
            "the canonical construction does not work for δ = -1".into(),
        ));
    }
    Ok(())
}

/// The canonical `L₀ = V ⊕ M` with its form, basis ordered `V` then `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalEmbedding {
    source: TripleSystem,
    m: LeftSpan,
    l0: GradedAlgebra,
    l0_form: BilinearForm,
}

fn m_names(v: &GradedBasis, d: usize) -> Vec<String> {
    let mut prefix = String::from("M");
    while (1..=d).any(|i| v.index_of(&format!("{prefix}{i}")).is_some()) {
        prefix.push('_');
    }
    (1..=d).map(|i| format!("{prefix}{i}")).collect()
}

pub fn build_l0(t: &TripleSystem) -> Result<CanonicalEmbedding> {
    require_lie_type(t)?;
    let g = t.require_form()?;
    let n = t.dim();
    let m = LeftSpan::of(t);
    let d = m.span.dim();
    let total = n + d;
    let mp = m.span.parities();
    let vp = t.parities();

    let mut table = BilinearTable::zero(total);
    for j in 0..n {
        for k in 0..n {
            let c = m.coord(j, k);
            table.set(j, k, to_sparse(c).into_iter().map(|(i, v)| (n + i, v)).collect());
        }
    }
    for a in 0..d {
        let op = &m.span.basis()[a];
        for k in 0..n {
            let image = op.column(k);
            table.set(n + a, k, to_sparse(&image));
            let flip = !mp[a].both_odd(vp[k]);
            let mirrored = to_sparse(&image)
                .into_iter()
                .map(|(i, v)| (i, signed(flip, v)))
                .collect();
            table.set(k, n + a, mirrored);
        }
        for b in 0..d {
            let comm = op.graded_commutator(mp[a], &m.span.basis()[b], mp[b]);
            let coords = m.span.coordinates(&comm).ok_or_else(|| {
                Error::Closure(format!(
                    "[M{}, M{}] leaves the span of left multiplications",
                    a + 1,
                    b + 1
                ))
            })?;
            table.set(n + a, n + b, to_sparse(&coords).into_iter().map(|(i, v)| (n + i, v)).collect());
        }
    }

    let mut gram = Matrix::zeros(total, total);
    for j in 0..n {
        for k in 0..n {
            gram.set(j, k, g.get(j, k).clone());
        }
    }
    // <Y|L(u,v)> = <Y e_u|e_v>
    let pair_with_generator = |y: &Matrix, u: usize, v: usize| -> Rational {
        (0..n).map(|r| y.get(r, u) * g.get(r, v)).sum()
    };
    for a in 0..d {
        for b in 0..d {
            let ya = &m.span.basis()[a];
            let yb = &m.span.basis()[b];
            let (cb, _) = m.decompose(yb).expect("basis element lies in M");
            let mut first = Rational::zero();
            for (idx, c) in cb.iter().enumerate() {
                if !c.is_zero() {
                    first += c * pair_with_generator(ya, idx / n, idx % n);
                }
            }
            // Second route: decompose Y_a differently and use
            // <L(x,y)|Z> = -(-1)^{σ(Z) y}<x|Z y>.
            let (mut ca, kernel) = m.decompose(ya).expect("basis element lies in M");
            for k in &kernel {
                vector::add_scaled(&mut ca, &Rational::one(), k);
            }
            let mut second = Rational::zero();
            for (idx, c) in ca.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (x, y) = (idx / n, idx % n);
                let zy = yb.column(y);
                let pair: Rational = (0..n).map(|r| g.get(x, r) * &zy[r]).sum();
                second += signed(!mp[b].both_odd(vp[y]), c * pair);
            }
            if first != second {
                return Err(Error::Closure(format!(
                    "<M{}|M{}> depends on the chosen representative",
                    a + 1,
                    b + 1
                )));
            }
            gram.set(n + a, n + b, first);
        }
    }

    let mut names = t.basis().names().to_vec();
    names.extend(m_names(t.basis(), d));
    let mut parities = vp.to_vec();
    parities.extend_from_slice(mp);
    let basis = GradedBasis::new(names, parities.clone())?;
    let l0 = GradedAlgebra::from_table(format!("L0({})", t.name()), basis, table);
    let l0_form = BilinearForm::unchecked(gram, parities)?;
    Ok(CanonicalEmbedding {
        source: t.clone(),
        m,
        l0,
        l0_form,
    })
}

impl CanonicalEmbedding {
    pub fn source(&self) -> &TripleSystem {
        &self.source
    }

    pub fn m(&self) -> &LeftSpan {
        &self.m
    }

    pub fn m_dim(&self) -> usize {
        self.m.span.dim()
    }

    pub fn l0(&self) -> &GradedAlgebra {
        &self.l0
    }

    pub fn l0_form(&self) -> &BilinearForm {
        &self.l0_form
    }

    fn v_dim(&self) -> usize {
        self.source.dim()
    }

    /// `M` as a Lie superalgebra in its echelon basis.
    pub fn m_algebra(&self) -> GradedAlgebra {
        let n = self.v_dim();
        let d = self.m_dim();
        let mut table = BilinearTable::zero(d);
        for a in 0..d {
            for b in 0..d {
                table.set(a, b, self.l0.table().get(n + a, n + b).iter().map(|(i, v)| (i - n, v.clone())).collect());
            }
        }
        let names = self.l0.basis().names()[n..].to_vec();
        let basis = GradedBasis::new(names, self.m.span.parities().to_vec()).expect("distinct names");
        GradedAlgebra::from_table(format!("M({})", self.source.name()), basis, table)
    }

    pub fn m_form(&self) -> BilinearForm {
        let n = self.v_dim();
        let d = self.m_dim();
        let mut gram = Matrix::zeros(d, d);
        for a in 0..d {
            for b in 0..d {
                gram.set(a, b, self.l0_form.get(n + a, n + b).clone());
            }
        }
        BilinearForm::unchecked(gram, self.m.span.parities().to_vec()).expect("square")
    }

    /// Lifts a triple ideal `B` to `L(B, V) ⊆ M` and `B ⊕ L(B, V) ⊆ L₀`.
    pub fn lift_ideal(&self, b: &Subspace) -> Result<LiftedIdeal> {
        let n = self.v_dim();
        let d = self.m_dim();
        if b.ambient() != n {
            return Err(Error::DimensionMismatch("subspace of the wrong ambient space".into()));
        }
        if !verify_triple_ideal(&self.source, b) {
            return Err(Error::Precondition("B is not an ideal of the triple system".into()));
        }
        let mut in_m = Vec::new();
        for x in b.basis() {
            for k in 0..n {
                let mut c = vector::zeros(d);
                for (j, xj) in x.iter().enumerate() {
                    if !xj.is_zero() {
                        vector::add_scaled(&mut c, xj, self.m.coord(j, k));
                    }
                }
                in_m.push(c);
            }
        }
        let in_m = Subspace::span(d, in_m);
        let lifted = b
            .basis()
            .iter()
            .map(|x| {
                let mut v = x.clone();
                v.extend(vector::zeros(d));
                v
            })
            .chain(in_m.basis().iter().map(|c| {
                let mut v = vector::zeros(n);
                v.extend(c.iter().cloned());
                v
            }));
        let in_l0 = Subspace::span(n + d, lifted);
        Ok(LiftedIdeal {
            m_ideal: verify_ideal(&self.m_algebra(), &in_m),
            l0_ideal: verify_ideal(&self.l0, &in_l0),
            in_m,
            in_l0,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedIdeal {
    pub in_m: Subspace,
    pub in_l0: Subspace,
    pub m_ideal: bool,
    pub l0_ideal: bool,
}

/// Checks of the invariance of the `M` form on generator sextuples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorInvarianceReport {
    /// `<[L(x,y),L(z,w)]|L(u,v)> = <L(x,y)|[L(z,w),L(u,v)]>`.
    pub invariance: Violations<Residual>,
    /// The left side equals
    /// `-(-1)^{(u+v)w}<[x,y,z]|[u,v,w]> + (-1)^{z(w+u+v)}<[x,y,w]|[u,v,z]>`.
    pub expansion: Violations<Residual>,
}

impl GeneratorInvarianceReport {
    pub fn passes(&self) -> bool {
        self.invariance.is_empty() && self.expansion.is_empty()
    }
}

pub fn check_eq_2_14(e: &CanonicalEmbedding) -> GeneratorInvarianceReport {
    let t = &e.source;
    let n = t.dim();
    let g = t.form().expect("embedding sources carry a form");
    let p: Vec<bool> = t.parities().iter().map(|q| q.is_odd()).collect();
    let m_alg = e.m_algebra();
    let m_form = e.m_form();
    let coords: Vec<Vec<Rational>> = e.m.coords.clone();
    let pairs = n * n;
    let mut brackets = Vec::with_capacity(pairs * pairs);
    for a in 0..pairs {
        for b in 0..pairs {
            brackets.push(m_alg.bracket(&coords[a], &coords[b]));
        }
    }
    // G·[u,v,w] for every basis triple.
    let g_products: Vec<Vec<Rational>> = (0..n * n * n)
        .map(|i| {
            let prod = t.product_basis(i / (n * n), (i / n) % n, i % n);
            g.gram().mul_vec(&prod).expect("square")
        })
        .collect();
    let triple_pair = |a: (usize, usize, usize), b: (usize, usize, usize)| -> Rational {
        let gb = &g_products[(b.0 * n + b.1) * n + b.2];
        t.table().get(a.0, a.1, a.2).iter().map(|(m, c)| c * &gb[*m]).sum()
    };
    let mut report = GeneratorInvarianceReport::default();
    for xy in 0..pairs {
        for zw in 0..pairs {
            let left_bracket = &brackets[xy * pairs + zw];
            for uv in 0..pairs {
                let lhs = m_form.value(left_bracket, &coords[uv]);
                let rhs = m_form.value(&coords[xy], &brackets[zw * pairs + uv]);
                let (x, y, z, w, u, v) = (xy / n, xy % n, zw / n, zw % n, uv / n, uv % n);
                let idx = [x, y, z, w, u, v];
                if lhs != rhs {
                    report.invariance.push(Residual::new(idx, vec![&lhs - &rhs]));
                }
                let first = signed(!((p[u] ^ p[v]) && p[w]), triple_pair((x, y, z), (u, v, w)));
                let second = signed(p[z] && (p[w] ^ p[u] ^ p[v]), triple_pair((x, y, w), (u, v, z)));
                let expanded = first + second;
                if lhs != expanded {
                    report.expansion.push(Residual::new(idx, vec![&lhs - &expanded]));
                }
            }
        }
    }
    report
}

/// Everything asserted about a canonical embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub l0_lie: LieCheckReport,
    /// `None` when `L₀` with its form certifies, else the refusal.
    pub l0_refusal: Option<Error>,
    pub m_lie: LieCheckReport,
    pub m_refusal: Option<Error>,
    /// `<M|V> = 0` and the `V`-`V` block equals the source form.
    pub block_structure: bool,
    /// `[[x,y],z]` in `L₀` equals `[x,y,z]` on basis triples.
    pub representation: bool,
    pub generator_invariance: GeneratorInvarianceReport,
}

impl EmbeddingReport {
    pub fn passes(&self) -> bool {
        self.l0_lie.passes()
            && self.l0_refusal.is_none()
            && self.m_lie.passes()
            && self.m_refusal.is_none()
            && self.block_structure
            && self.representation
            && self.generator_invariance.passes()
    }
}

pub fn verify_embedding(e: &CanonicalEmbedding) -> EmbeddingReport {
    let n = e.v_dim();
    let total = e.l0.dim();
    let g = e.source.form().expect("embedding sources carry a form");
    let block_structure = (0..total).all(|j| {
        (0..total).all(|k| {
            let value = e.l0_form.get(j, k);
            match (j < n, k < n) {
                (true, true) => value == g.get(j, k),
                (false, false) => true,
                _ => value.is_zero(),
            }
        })
    });
    let representation = (0..n).all(|x| {
        (0..n).all(|y| {
            let xy = e.l0.bracket_basis(x, y);
            (0..n).all(|z| {
                let lifted = e.l0.bracket(&xy, &vector::unit(total, z));
                let mut expected = e.source.product_basis(x, y, z);
                expected.extend(vector::zeros(total - n));
                lifted == expected
            })
        })
    });
    let m_alg = e.m_algebra();
    EmbeddingReport {
        l0_lie: check_lie_super(&e.l0),
        l0_refusal: certify_quasi_classical(&e.l0, &e.l0_form).err(),
        m_lie: check_lie_super(&m_alg),
        m_refusal: if m_alg.dim() == 0 {
            None
        } else {
            certify_quasi_classical(&m_alg, &e.m_form()).err()
        },
        block_structure,
        representation,
        generator_invariance: check_eq_2_14(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn operator_span_rows_are_homogeneous() {
        let parities = [Parity::Even, Parity::Odd];
        let even = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
        let odd = Matrix::from_ints(&[&[0, 1], &[3, 0]]);
        let span = OperatorSpan::new(&parities, [(&even + &odd), even.clone(), Matrix::zeros(2, 2)]);
        assert_eq!(span.dim(), 2);
        assert_eq!(span.parities(), &[Parity::Even, Parity::Odd]);
        assert_eq!(span.coordinates(&odd), Some(vec![int(0), int(1)]));
        assert_eq!(span.element(&[int(1), int(1)]), &even + &odd);
        assert!(span.coordinates(&Matrix::identity(2)).is_none());
    }

    #[test]
    fn anti_lie_refused() {
        let t = TripleSystem::zero("z", GradedBasis::even(["a", "b"]), Sign::Minus, None).unwrap();
        assert!(matches!(build_m(&t), Err(Error::Precondition(_))));
        assert!(matches!(build_l0(&t), Err(Error::Precondition(_))));
    }
}
