use std::fmt;

use num_traits::Zero;

use super::family::{dual_basis, ThetaTripleFamily};
use super::rmatrix::RMatrix;
use super::tensor::{add_scaled, basis_tensor, first_difference, PointOperator, Tensor3};
use crate::error::Result;
use crate::exact::{int, vector, Rational};
use crate::report::{Residual, Violations};
use crate::tables::{accumulate, TrilinearTable};

/// Embedding of `R` into `End(V⊗V⊗V)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    R12,
    R13,
    R23,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::R12, Slot::R13, Slot::R23];
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::R12 => "R12",
            Slot::R13 => "R13",
            Slot::R23 => "R23",
        })
    }
}

/// First failing point of a grid check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFailure {
    pub relation: String,
    /// Values of the spectral parameters, in the order the relation names them.
    pub point: Vec<Rational>,
    /// Basis indices: column then row for operator identities.
    pub indices: Vec<usize>,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridVerdict {
    /// Each parameter ranges over `0..=grid_bound`.
    pub grid_bound: usize,
    pub points_checked: usize,
    pub failure: Option<GridFailure>,
}

impl GridVerdict {
    pub fn passes(&self) -> bool {
        self.failure.is_none()
    }
}

fn grid(bound: usize) -> impl Iterator<Item = Rational> + Clone {
    (0..=bound as i64).map(int)
}

fn unpack(n: usize, key: usize) -> [usize; 3] {
    [key / (n * n), (key / n) % n, key % n]
}

fn operator_failure(
    n: usize,
    relation: String,
    point: Vec<Rational>,
    column: usize,
    lhs: &Tensor3,
    rhs: &Tensor3,
) -> Option<GridFailure> {
    first_difference(lhs, rhs).map(|(row, l, r)| {
        let mut indices = unpack(n, column).to_vec();
        indices.extend(unpack(n, row));
        GridFailure {
            relation,
            point,
            indices,
            lhs: l,
            rhs: r,
        }
    })
}

/// `R₁₂(θ)R₁₃(θ′)R₂₃(θ″) = R₂₃(θ″)R₁₃(θ′)R₁₂(θ)` with `θ′ = θ + θ″`.
pub fn check_ybe_at(r: &RMatrix, theta: &Rational, theta2: &Rational) -> Option<GridFailure> {
    let n = r.dim();
    let theta1 = theta + theta2;
    let a = PointOperator::from_matrix(n, &r.eval(theta));
    let b = PointOperator::from_matrix(n, &r.eval(&theta1));
    let c = PointOperator::from_matrix(n, &r.eval(theta2));
    for col in 0..n * n * n {
        let e = basis_tensor(col);
        let lhs = a.apply(Slot::R12, &b.apply(Slot::R13, &c.apply(Slot::R23, &e)));
        let rhs = c.apply(Slot::R23, &b.apply(Slot::R13, &a.apply(Slot::R12, &e)));
        if let Some(f) = operator_failure(
            n,
            "R12(θ)R13(θ')R23(θ'') = R23(θ'')R13(θ')R12(θ)".into(),
            vec![theta.clone(), theta1.clone(), theta2.clone()],
            col,
            &lhs,
            &rhs,
        ) {
            return Some(f);
        }
    }
    None
}

/// Certifies the Yang–Baxter equation as a polynomial identity in
/// `(θ, θ″)` by exact evaluation on `{0, …, 3D}²`, `D` the degree of `R`
/// unless overridden.
pub fn check_ybe(r: &RMatrix, grid_degree: Option<usize>) -> GridVerdict {
    let bound = 3 * grid_degree.unwrap_or_else(|| r.degree());
    let mut points = 0;
    for theta in grid(bound) {
        for theta2 in grid(bound) {
            points += 1;
            if let Some(f) = check_ybe_at(r, &theta, &theta2) {
                return GridVerdict {
                    grid_bound: bound,
                    points_checked: points,
                    failure: Some(f),
                };
            }
        }
    }
    GridVerdict {
        grid_bound: bound,
        points_checked: points,
        failure: None,
    }
}

/// `[R_ij(θ), R_kℓ(θ′)] = 0` for all nine pairs of embeddings, with θ and θ′
/// independent, on `{0, …, 3D}²`.
pub fn check_commutation(r: &RMatrix, grid_degree: Option<usize>) -> GridVerdict {
    let n = r.dim();
    let bound = 3 * grid_degree.unwrap_or_else(|| r.degree());
    let mut points = 0;
    for theta in grid(bound) {
        let a = PointOperator::from_matrix(n, &r.eval(&theta));
        for theta1 in grid(bound) {
            points += 1;
            let b = PointOperator::from_matrix(n, &r.eval(&theta1));
            for s1 in Slot::ALL {
                for s2 in Slot::ALL {
                    for col in 0..n * n * n {
                        let e = basis_tensor(col);
                        let lhs = a.apply(s1, &b.apply(s2, &e));
                        let rhs = b.apply(s2, &a.apply(s1, &e));
                        if let Some(f) = operator_failure(
                            n,
                            format!("[{s1}(θ), {s2}(θ')] = 0"),
                            vec![theta.clone(), theta1.clone()],
                            col,
                            &lhs,
                            &rhs,
                        ) {
                            return GridVerdict {
                                grid_bound: bound,
                                points_checked: points,
                                failure: Some(f),
                            };
                        }
                    }
                }
            }
        }
    }
    GridVerdict {
        grid_bound: bound,
        points_checked: points,
        failure: None,
    }
}

/// `[R₁₂(θ),R₁₃(θ′)] + [R₁₂(θ),R₂₃(θ″)] + [R₁₃(θ′),R₂₃(θ″)] = 0` with
/// independent parameters. Each term has degree at most `D` in each
/// parameter, so the grid `{0, …, D}³` certifies it.
pub fn check_classical_ybe(r: &RMatrix, grid_degree: Option<usize>) -> GridVerdict {
    let n = r.dim();
    let bound = grid_degree.unwrap_or_else(|| r.degree());
    let ops: Vec<PointOperator> = grid(bound).map(|t| PointOperator::from_matrix(n, &r.eval(&t))).collect();
    let one = Rational::from_integer(1.into());
    let minus = -one.clone();
    let mut points = 0;
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate() {
            for (k, c) in ops.iter().enumerate() {
                points += 1;
                for col in 0..n * n * n {
                    let e = basis_tensor(col);
                    let mut total = Tensor3::new();
                    let terms = [(a, Slot::R12, b, Slot::R13), (a, Slot::R12, c, Slot::R23), (b, Slot::R13, c, Slot::R23)];
                    for (x, sx, y, sy) in terms {
                        add_scaled(&mut total, &one, &x.apply(sx, &y.apply(sy, &e)));
                        add_scaled(&mut total, &minus, &y.apply(sy, &x.apply(sx, &e)));
                    }
                    if let Some(f) = operator_failure(
                        n,
                        "classical Yang–Baxter equation".into(),
                        vec![int(i as i64), int(j as i64), int(k as i64)],
                        col,
                        &total,
                        &Tensor3::new(),
                    ) {
                        return GridVerdict {
                            grid_bound: bound,
                            points_checked: points,
                            failure: Some(f),
                        };
                    }
                }
            }
        }
    }
    GridVerdict {
        grid_bound: bound,
        points_checked: points,
        failure: None,
    }
}

/// Outcome of [`check_eq_3_8`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eq38Report {
    /// `((i, j), holds)`: `T_j(u,v,T_i(x,y,z)) = T_i(x,y,T_j(u,v,z))` for the
    /// component pair, a sufficient condition.
    pub pairs: Vec<((usize, usize), bool)>,
    /// Coefficients of `θ^a θ′^b` of `[u,v,[x,y,z]_θ]_θ′ − [x,y,[u,v,z]_θ′]_θ`
    /// that fail to vanish, indexed `[a, b, u, v, x, y, z]`.
    pub polynomial: Violations<Residual>,
}

impl Eq38Report {
    pub fn passes(&self) -> bool {
        self.polynomial.is_empty()
    }
}

/// `[u,v,[x,y,z]_θ]_θ′ = [x,y,[u,v,z]_θ′]_θ` as an identity of polynomials
/// in independent `θ, θ′`, on every basis quintuple.
pub fn check_eq_3_8(f: &ThetaTripleFamily) -> Eq38Report {
    let n = f.dim();
    let comps = f.components();
    let k = comps.len();
    let mut pair_ok = vec![true; k * k];
    let mut polynomial = Violations::new();
    let deg = f.degree();
    for u in 0..n {
        for v in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut diffs: Vec<Vec<Rational>> = Vec::with_capacity(k * k);
                        for (ti, _) in comps {
                            for (tj, _) in comps {
                                let mut res = vector::zeros(n);
                                for (m, c) in ti.get(x, y, z) {
                                    accumulate(&mut res, c, tj.get(u, v, *m));
                                }
                                for (m, c) in tj.get(u, v, z) {
                                    accumulate(&mut res, &-c, ti.get(x, y, *m));
                                }
                                diffs.push(res);
                            }
                        }
                        for (slot, d) in diffs.iter().enumerate() {
                            if !vector::is_zero(d) {
                                pair_ok[slot] = false;
                            }
                        }
                        if diffs.iter().all(|d| vector::is_zero(d)) {
                            continue;
                        }
                        for a in 0..=deg {
                            for b in 0..=deg {
                                let mut res = vector::zeros(n);
                                for i in 0..k {
                                    for j in 0..k {
                                        let c = comps[i].1.coeff(a) * comps[j].1.coeff(b);
                                        if !c.is_zero() {
                                            vector::add_scaled(&mut res, &c, &diffs[i * k + j]);
                                        }
                                    }
                                }
                                if !vector::is_zero(&res) {
                                    polynomial.push(Residual::new([a, b, u, v, x, y, z], res));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Eq38Report {
        pairs: (0..k * k).map(|s| ((s / k, s % k), pair_ok[s])).collect(),
        polynomial,
    }
}

/// Outcome of [`check_eq_3_5`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eq35Report {
    pub verdict: GridVerdict,
    /// Both sides vanished at every checked point.
    pub both_sides_vanish: bool,
}

impl Eq35Report {
    pub fn passes(&self) -> bool {
        self.verdict.passes()
    }
}

/// Dense `T(e_j, e_k, e_l)` for all triples.
fn dense_products(t: &TrilinearTable) -> Vec<Vec<Rational>> {
    let n = t.dim();
    (0..n * n * n).map(|i| t.eval_basis(i / (n * n), (i / n) % n, i % n)).collect()
}

/// `Σ_j [v,[u,e_j,z]_θ′,[e^j,x,y]_θ]_θ″ = Σ_j [u,[v,e_j,x]_θ′,[e^j,z,y]_θ″]_θ`
/// with `θ′ = θ + θ″`, on every basis quintuple and the grid `{0, …, 3D}²`.
pub fn check_eq_3_5(f: &ThetaTripleFamily, grid_degree: Option<usize>) -> Result<Eq35Report> {
    let n = f.dim();
    let dual = dual_basis(f.form())?;
    let bound = 3 * grid_degree.unwrap_or_else(|| f.degree());
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut both_sides_vanish = true;
    let mut points = 0;
    for theta in grid(bound) {
        for theta2 in grid(bound) {
            points += 1;
            let theta1 = &theta + &theta2;
            let t0 = f.at(&theta);
            let t1 = f.at(&theta1);
            let t2 = f.at(&theta2);
            let (d0, d1, d2) = (dense_products(&t0), dense_products(&t1), dense_products(&t2));
            // T(e^j, a, b) = Σ_k D_jk T(e_k, a, b)
            let upper = |d: &Vec<Vec<Rational>>, j: usize, a: usize, b: usize| -> Vec<Rational> {
                let mut out = vector::zeros(n);
                for k in 0..n {
                    let c = dual.d.get(j, k);
                    if !c.is_zero() {
                        vector::add_scaled(&mut out, c, &d[idx(k, a, b)]);
                    }
                }
                out
            };
            let upper0: Vec<Vec<Rational>> = (0..n * n * n).map(|i| upper(&d0, i / (n * n), (i / n) % n, i % n)).collect();
            let upper2: Vec<Vec<Rational>> = (0..n * n * n).map(|i| upper(&d2, i / (n * n), (i / n) % n, i % n)).collect();
            // Σ_j p ⊗ q contracted with an outer product
            let contract = |outer: &[(usize, usize, Rational)], t: &TrilinearTable, w: usize| -> Vec<Rational> {
                let mut out = vector::zeros(n);
                for (p, q, c) in outer {
                    accumulate(&mut out, c, t.get(w, *p, *q));
                }
                out
            };
            let outer_sum = |pairs: &mut dyn Iterator<Item = (&Vec<Rational>, &Vec<Rational>)>| {
                let mut acc = vec![Rational::zero(); n * n];
                for (left, right) in pairs {
                    for (p, lp) in left.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        for (q, rq) in right.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            acc[p * n + q] += lp * rq;
                        }
                    }
                }
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i / n, i % n, c))
                    .collect::<Vec<_>>()
            };
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        // Σ_j [u,e_j,z]_θ′ ⊗ [e^j,x,y]_θ and Σ_j [v,e_j,x]_θ′ ⊗ [e^j,z,y]_θ″
                        let lefts: Vec<_> = (0..n)
                            .map(|u| outer_sum(&mut (0..n).map(|j| (&d1[idx(u, j, z)], &upper0[idx(j, x, y)]))))
                            .collect();
                        let rights: Vec<_> = (0..n)
                            .map(|v| outer_sum(&mut (0..n).map(|j| (&d1[idx(v, j, x)], &upper2[idx(j, z, y)]))))
                            .collect();
                        for u in 0..n {
                            for v in 0..n {
                                let lhs = contract(&lefts[u], &t2, v);
                                let rhs = contract(&rights[v], &t0, u);
                                if !vector::is_zero(&lhs) || !vector::is_zero(&rhs) {
                                    both_sides_vanish = false;
                                }
                                if let Some(m) = (0..n).find(|&m| lhs[m] != rhs[m]) {
                                    return Ok(Eq35Report {
                                        verdict: GridVerdict {
                                            grid_bound: bound,
                                            points_checked: points,
                                            failure: Some(GridFailure {
                                                relation: "Σ_j [v,[u,e_j,z]_θ',[e^j,x,y]_θ]_θ'' = Σ_j [u,[v,e_j,x]_θ',[e^j,z,y]_θ'']_θ".into(),
                                                point: vec![theta.clone(), theta1.clone(), theta2.clone()],
                                                indices: vec![x, y, z, u, v, m],
                                                lhs: lhs[m].clone(),
                                                rhs: rhs[m].clone(),
                                            }),
                                        },
                                        both_sides_vanish: false,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Eq35Report {
        verdict: GridVerdict {
            grid_bound: bound,
            points_checked: points,
            failure: None,
        },
        both_sides_vanish,
    })
}
