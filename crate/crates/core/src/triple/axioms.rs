use num_traits::{One, Zero};

use super::system::TripleSystem;
use crate::error::Result;
use crate::exact::{frac, signed, vector, Matrix, Rational};
use crate::lie::BilinearForm;
use crate::report::{CheckLimits, Residual, Violations};
use crate::tables::{accumulate, TrilinearTable};

/// Outcome of [`check_triple_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TripleAxiomReport {
    /// Triples `(j, k, l)` whose product leaves the grade `σ_j+σ_k+σ_l`.
    pub grading: Violations<(usize, usize, usize)>,
    /// `[y,x,z] = -δ(-1)^{xy}[x,y,z]`.
    pub skew: Violations<Residual>,
    /// `(-1)^{xz}[x,y,z] + (-1)^{yx}[y,z,x] + (-1)^{zy}[z,x,y] = 0`.
    pub cyclic: Violations<Residual>,
    /// Each `L(u,v)` acts as a graded derivation of the product.
    pub derivation: Violations<Residual>,
}

impl TripleAxiomReport {
    pub fn passes(&self) -> bool {
        self.grading.is_empty() && self.skew.is_empty() && self.cyclic.is_empty() && self.derivation.is_empty()
    }
}

pub(crate) fn odd_bits(t: &TripleSystem) -> Vec<bool> {
    t.parities().iter().map(|p| p.is_odd()).collect()
}

/// Checks the four defining identities on every basis tuple.
pub fn check_triple_axioms(t: &TripleSystem, limits: &CheckLimits) -> Result<TripleAxiomReport> {
    limits.admit(t.dim())?;
    let n = t.dim();
    let p = odd_bits(t);
    let table = t.table();
    let mut report = TripleAxiomReport::default();
    let minus_delta_flip = |a: usize, b: usize| !t.delta().negative_with(p[a] && p[b]);

    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                let target = p[j] ^ p[k] ^ p[l];
                report
                    .grading
                    .record(table.get(j, k, l).iter().all(|(m, _)| p[*m] == target), || (j, k, l));

                if j <= k {
                    let mut res = t.product_basis(k, j, l);
                    let flip = minus_delta_flip(j, k);
                    accumulate(&mut res, &signed(!flip, Rational::one()), table.get(j, k, l));
                    if !vector::is_zero(&res) {
                        report.skew.push(Residual::new([j, k, l], res));
                    }
                }

                let mut res = vector::zeros(n);
                accumulate(&mut res, &signed(p[j] && p[l], Rational::one()), table.get(j, k, l));
                accumulate(&mut res, &signed(p[k] && p[j], Rational::one()), table.get(k, l, j));
                accumulate(&mut res, &signed(p[l] && p[k], Rational::one()), table.get(l, j, k));
                if !vector::is_zero(&res) {
                    report.cyclic.push(Residual::new([j, k, l], res));
                }
            }
        }
    }

    for u in 0..n {
        for v in 0..n {
            let acts = (0..n).any(|x| !table.get(u, v, x).is_empty());
            if !acts {
                continue;
            }
            let pd = p[u] ^ p[v];
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut res = vector::zeros(n);
                        for (m, c) in table.get(x, y, z) {
                            accumulate(&mut res, c, table.get(u, v, *m));
                        }
                        for (a, c) in table.get(u, v, x) {
                            accumulate(&mut res, &-c, table.get(*a, y, z));
                        }
                        let s1 = signed(pd && p[x], Rational::one());
                        for (a, c) in table.get(u, v, y) {
                            accumulate(&mut res, &-(&s1 * c), table.get(x, *a, z));
                        }
                        let s2 = signed(pd && (p[x] ^ p[y]), Rational::one());
                        for (a, c) in table.get(u, v, z) {
                            accumulate(&mut res, &-(&s2 * c), table.get(x, y, *a));
                        }
                        if !vector::is_zero(&res) {
                            report.derivation.push(Residual::new([u, v, x, y, z], res));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `<[x,y,u]|v>` and `<u|[x,y,v]>` tabulated on the basis.
pub(crate) struct Pairings {
    n: usize,
    /// `<[x,y,u]|v>` at `((x n + y) n + u) n + v`.
    product_left: Vec<Rational>,
    /// `<u|[x,y,v]>` at `((u n + x) n + y) n + v`.
    product_right: Vec<Rational>,
}

impl Pairings {
    pub(crate) fn new(table: &TrilinearTable, g: &BilinearForm) -> Self {
        let n = table.dim();
        let mut product_left = vec![Rational::zero(); n * n * n * n];
        let mut product_right = vec![Rational::zero(); n * n * n * n];
        for x in 0..n {
            for y in 0..n {
                for u in 0..n {
                    for (m, c) in table.get(x, y, u) {
                        for w in 0..n {
                            let gl = g.get(*m, w);
                            if !gl.is_zero() {
                                product_left[((x * n + y) * n + u) * n + w] += c * gl;
                            }
                            let gr = g.get(w, *m);
                            if !gr.is_zero() {
                                product_right[((w * n + x) * n + y) * n + u] += gr * c;
                            }
                        }
                    }
                }
            }
        }
        Pairings {
            n,
            product_left,
            product_right,
        }
    }

    /// `<[x,y,u]|v>`.
    pub(crate) fn left(&self, x: usize, y: usize, u: usize, v: usize) -> &Rational {
        &self.product_left[((x * self.n + y) * self.n + u) * self.n + v]
    }

    /// `<u|[x,y,v]>`.
    pub(crate) fn right(&self, u: usize, x: usize, y: usize, v: usize) -> &Rational {
        &self.product_right[((u * self.n + x) * self.n + y) * self.n + v]
    }
}

fn scalar_check(
    out: &mut Violations<Residual>,
    indices: [usize; 4],
    lhs: &Rational,
    rhs_sign_negative: bool,
    rhs: &Rational,
) {
    let rhs = signed(rhs_sign_negative, rhs.clone());
    if *lhs != rhs {
        out.push(Residual::new(indices, vec![lhs - rhs]));
    }
}

/// Outcome of [`check_form_conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormConditionReport {
    /// First pair pairing different grades.
    pub grade_block: Option<(usize, usize)>,
    /// First pair violating `<y|x> = δ(-1)^{xy}<x|y>`.
    pub symmetry: Option<(usize, usize)>,
    /// `<[x,y,u]|v> = -(-1)^{(x+y)u}<u|[x,y,v]>`.
    pub invariance: Violations<Residual>,
    pub nondegenerate: bool,
}

impl FormConditionReport {
    pub fn passes(&self) -> bool {
        self.grade_block.is_none() && self.symmetry.is_none() && self.invariance.is_empty() && self.nondegenerate
    }
}

/// Checks that the attached form makes the system quasi-classical.
pub fn check_form_conditions(t: &TripleSystem) -> Result<FormConditionReport> {
    let g = t.require_form()?;
    let eq = equivalences(t)?;
    Ok(FormConditionReport {
        grade_block: g.grade_block_violation(),
        symmetry: g.symmetry_violation(t.delta()),
        invariance: eq.invariance_a,
        nondegenerate: g.is_nondegenerate(),
    })
}

/// The three equivalent forms of invariance, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// `<[x,y,u]|v> = -(-1)^{(x+y)u}<u|[x,y,v]>`.
    pub invariance_a: Violations<Residual>,
    /// `<[x,y,u]|v> = -(-1)^{(u+v)y}<x|[u,v,y]>`.
    pub invariance_b: Violations<Residual>,
    /// `<x|[y,u,v]> = (-1)^{xy+uv}<y|[x,v,u]>`.
    pub invariance_c: Violations<Residual>,
    /// `<[x,y,u]|v> = -δ(-1)^{uv}<[x,y,v]|u>`.
    pub last_pair_skew: Violations<Residual>,
}

impl EquivalenceReport {
    pub fn verdicts(&self) -> [bool; 3] {
        [
            self.invariance_a.is_empty(),
            self.invariance_b.is_empty(),
            self.invariance_c.is_empty(),
        ]
    }

    /// The three verdicts coincide.
    pub fn agree(&self) -> bool {
        let [a, b, c] = self.verdicts();
        a == b && b == c
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts().iter().all(|&v| v) && self.last_pair_skew.is_empty()
    }
}

pub fn equivalences(t: &TripleSystem) -> Result<EquivalenceReport> {
    let g = t.require_form()?;
    let n = t.dim();
    let p = odd_bits(t);
    let pr = Pairings::new(t.table(), g);
    let mut a = Violations::new();
    let mut b = Violations::new();
    let mut c = Violations::new();
    let mut skew = Violations::new();
    for x in 0..n {
        for y in 0..n {
            for u in 0..n {
                for v in 0..n {
                    let idx = [x, y, u, v];
                    let lhs = pr.left(x, y, u, v);
                    scalar_check(&mut a, idx, lhs, !((p[x] ^ p[y]) && p[u]), pr.right(u, x, y, v));
                    scalar_check(&mut b, idx, lhs, !((p[u] ^ p[v]) && p[y]), pr.right(x, u, v, y));
                    let odd_c = (p[x] && p[y]) ^ (p[u] && p[v]);
                    scalar_check(&mut c, idx, pr.right(x, y, u, v), odd_c, pr.right(y, x, v, u));
                    let neg_d = !t.delta().negative_with(p[u] && p[v]);
                    scalar_check(&mut skew, idx, lhs, neg_d, pr.left(x, y, v, u));
                }
            }
        }
    }
    Ok(EquivalenceReport {
        invariance_a: a,
        invariance_b: b,
        invariance_c: c,
        last_pair_skew: skew,
    })
}

/// Outcome of [`check_lemma_2_1`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorIdentityReport {
    /// `L(y,x) = -δ(-1)^{xy}L(x,y)`.
    pub left_skew: Violations<Residual>,
    /// `[L(u,v), L(x,y)] = L([u,v,x],y) + (-1)^{(u+v)x}L(x,[u,v,y])`.
    pub left_left: Violations<Residual>,
    /// `[L(u,v), R(x,y)] = R([u,v,x],y) + (-1)^{(u+v)x}R(x,[u,v,y])`.
    pub left_right: Violations<Residual>,
}

impl OperatorIdentityReport {
    pub fn passes(&self) -> bool {
        self.left_skew.is_empty() && self.left_left.is_empty() && self.left_right.is_empty()
    }
}

pub(crate) fn operator_tables(t: &TripleSystem) -> (Vec<Matrix>, Vec<Matrix>) {
    let n = t.dim();
    let mut left = Vec::with_capacity(n * n);
    let mut right = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            left.push(t.left_matrix(j, k));
            right.push(t.right_matrix(j, k));
        }
    }
    (left, right)
}

/// Operator identities relating left and right multiplications.
pub fn check_lemma_2_1(t: &TripleSystem, limits: &CheckLimits) -> Result<OperatorIdentityReport> {
    limits.admit(t.dim())?;
    let n = t.dim();
    let p = odd_bits(t);
    let parity = t.parities();
    let (left, right) = operator_tables(t);
    let op = |ops: &[Matrix], j: usize, k: usize| ops[j * n + k].clone();
    let mut report = OperatorIdentityReport::default();
    for x in 0..n {
        for y in 0..n {
            let neg = !t.delta().negative_with(p[x] && p[y]);
            let expected = op(&left, x, y).scale(&signed(neg, Rational::one()));
            let diff = &op(&left, y, x) - &expected;
            if !diff.is_zero() {
                report.left_skew.push(Residual::new([x, y], diff.data().to_vec()));
            }
        }
    }
    // Σ_m c_m Op(e_m, e_y) and Σ_m c_m Op(e_x, e_m)
    let first_slot = |ops: &[Matrix], coeffs: &[(usize, Rational)], y: usize| {
        coeffs
            .iter()
            .fold(Matrix::zeros(n, n), |acc, (m, c)| &acc + &ops[m * n + y].scale(c))
    };
    let second_slot = |ops: &[Matrix], x: usize, coeffs: &[(usize, Rational)]| {
        coeffs
            .iter()
            .fold(Matrix::zeros(n, n), |acc, (m, c)| &acc + &ops[x * n + m].scale(c))
    };
    for u in 0..n {
        for v in 0..n {
            let luv = &left[u * n + v];
            let puv = parity[u] + parity[v];
            for x in 0..n {
                let uvx = t.table().get(u, v, x);
                let s = signed(puv.is_odd() && p[x], Rational::one());
                for y in 0..n {
                    let uvy = t.table().get(u, v, y);
                    let pxy = parity[x] + parity[y];
                    for (ops, out) in [(&left, &mut report.left_left), (&right, &mut report.left_right)] {
                        let lhs = luv.graded_commutator(puv, &ops[x * n + y], pxy);
                        let rhs = &first_slot(ops, uvx, y) + &second_slot(ops, x, uvy).scale(&s);
                        let diff = &lhs - &rhs;
                        if !diff.is_zero() {
                            out.push(Residual::new([u, v, x, y], diff.data().to_vec()));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The trace form `½ Str{R(x,y) + δ(-1)^{xy}R(y,x)}` and related data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFormReport {
    pub form: BilinearForm,
    pub nondegenerate: bool,
    /// Pairs `(j, k)` with `Str L(e_j, e_k) ≠ 0`.
    pub left_supertrace: Violations<Residual>,
}

pub fn trace_form(t: &TripleSystem) -> TraceFormReport {
    let n = t.dim();
    let p = odd_bits(t);
    let parity = t.parities();
    let (left, right) = operator_tables(t);
    let str_of = |m: &Matrix| m.supertrace(parity).expect("square operator");
    let half = frac(1, 2);
    let mut gram = Matrix::zeros(n, n);
    let mut left_supertrace = Violations::new();
    for j in 0..n {
        for k in 0..n {
            let neg = t.delta().negative_with(p[j] && p[k]);
            let v = &half * (str_of(&right[j * n + k]) + signed(neg, str_of(&right[k * n + j])));
            gram.set(j, k, v);
            let sl = str_of(&left[j * n + k]);
            if !sl.is_zero() {
                left_supertrace.push(Residual::new([j, k], vec![sl]));
            }
        }
    }
    let form = BilinearForm::unchecked(gram, parity.to_vec()).expect("square gram");
    TraceFormReport {
        nondegenerate: form.is_nondegenerate(),
        form,
        left_supertrace,
    }
}
