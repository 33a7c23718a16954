use num_traits::{One, Zero};

use super::system::GeneralTripleSystem;
use crate::basis::Sign;
use crate::error::Result;
use crate::exact::{sign, signed, vector, Matrix, Rational};
use crate::report::{CheckLimits, Residual, Violations};
use crate::tables::accumulate;
use crate::triple::Pairings;

/// Outcome of [`check_generalized_fk`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FkReport {
    /// `uv(xyz) = (uvx)yz + ε(-1)^{(u+v)x+uv} x(vuy)z + (-1)^{(u+v)(x+y)} xy(uvz)`.
    pub identity: Violations<Residual>,
}

impl FkReport {
    pub fn passes(&self) -> bool {
        self.identity.is_empty()
    }
}

fn fk_identity(g: &GeneralTripleSystem, epsilon: Sign, limits: &CheckLimits) -> Result<FkReport> {
    limits.admit(g.dim())?;
    let n = g.dim();
    let p = g.odd();
    let t = g.table();
    let mut report = FkReport::default();
    for u in 0..n {
        for v in 0..n {
            let acts = (0..n).any(|x| t.is_set(u, v, x) || t.is_set(v, u, x));
            if !acts {
                continue;
            }
            let puv = p[u] ^ p[v];
            for x in 0..n {
                let middle_sign = -epsilon.to_rational() * sign((puv && p[x]) ^ (p[u] && p[v]));
                for y in 0..n {
                    let last_sign = -sign(puv && (p[x] ^ p[y]));
                    for z in 0..n {
                        let mut res = vector::zeros(n);
                        for (m, c) in t.get(x, y, z) {
                            accumulate(&mut res, c, t.get(u, v, *m));
                        }
                        for (a, c) in t.get(u, v, x) {
                            accumulate(&mut res, &-c, t.get(*a, y, z));
                        }
                        for (a, c) in t.get(v, u, y) {
                            accumulate(&mut res, &(&middle_sign * c), t.get(x, *a, z));
                        }
                        for (a, c) in t.get(u, v, z) {
                            accumulate(&mut res, &(&last_sign * c), t.get(x, y, *a));
                        }
                        if !vector::is_zero(&res) {
                            report.identity.push(Residual::new([u, v, x, y, z], res));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Checks the generalized Freudenthal–Kantor identity with the stored ε on
/// every basis quintuple.
pub fn check_generalized_fk(g: &GeneralTripleSystem, limits: &CheckLimits) -> Result<FkReport> {
    fk_identity(g, g.epsilon(), limits)
}

/// Outcome of [`check_jordan`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JordanReport {
    /// `xyz = δ(-1)^{xy+yz+zx} zyx`.
    pub outer_symmetry: Violations<Residual>,
    /// The generalized Freudenthal–Kantor identity with ε = -δ.
    pub fk: FkReport,
    /// The stored ε equals -δ.
    pub epsilon_is_minus_delta: bool,
}

impl JordanReport {
    pub fn passes(&self) -> bool {
        self.outer_symmetry.is_empty() && self.fk.passes() && self.epsilon_is_minus_delta
    }
}

pub fn check_jordan(g: &GeneralTripleSystem, limits: &CheckLimits) -> Result<JordanReport> {
    let n = g.dim();
    let p = g.odd();
    let fk = fk_identity(g, -g.delta(), limits)?;
    let mut outer_symmetry = Violations::new();
    for x in 0..n {
        for y in 0..n {
            for z in x..n {
                let mut res = g.product_basis(x, y, z);
                let odd = (p[x] && p[y]) ^ (p[y] && p[z]) ^ (p[z] && p[x]);
                let s = -g.delta().to_rational() * sign(odd);
                accumulate(&mut res, &s, g.table().get(z, y, x));
                if !vector::is_zero(&res) {
                    outer_symmetry.push(Residual::new([x, y, z], res));
                }
            }
        }
    }
    Ok(JordanReport {
        outer_symmetry,
        fk,
        epsilon_is_minus_delta: g.epsilon() == -g.delta(),
    })
}

/// Outcome of [`check_fk_condition`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FkConditionReport {
    /// `K(xyz,w) + (-1)^{z(x+y)}K(z,xyw) + δ(-1)^{y(z+w)}K(x,K(z,w)y) = 0`,
    /// residuals are flattened matrices.
    pub k_identity: Violations<Residual>,
    /// Every `K(e_j, e_k)` vanishes.
    pub k_vanishes: bool,
}

impl FkConditionReport {
    pub fn passes(&self) -> bool {
        self.k_identity.is_empty()
    }
}

/// Checks the (ε, δ) Freudenthal–Kantor condition on basis quadruples;
/// vector arguments of `K` are expanded bilinearly.
pub fn check_fk_condition(g: &GeneralTripleSystem, limits: &CheckLimits) -> Result<FkConditionReport> {
    limits.admit(g.dim())?;
    let n = g.dim();
    let p = g.odd();
    let ks: Vec<Matrix> = (0..n * n).map(|i| g.k_matrix(i / n, i % n)).collect();
    let k_vanishes = ks.iter().all(|k| k.data().iter().all(Zero::is_zero));
    let mut report = FkConditionReport {
        k_identity: Violations::new(),
        k_vanishes,
    };
    if k_vanishes {
        return Ok(report);
    }
    // K(a, e_w) and K(e_x, a) for a sparse vector a
    let k_left = |a: &[(usize, Rational)], w: usize, acc: &mut Matrix, scale: &Rational| {
        for (i, c) in a {
            *acc = &*acc + &ks[i * n + w].scale(&(scale * c));
        }
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let mut acc = Matrix::zeros(n, n);
                    k_left(g.table().get(x, y, z), w, &mut acc, &Rational::one());
                    let s1 = sign(p[z] && (p[x] ^ p[y]));
                    for (i, c) in g.table().get(x, y, w) {
                        acc = &acc + &ks[z * n + i].scale(&(&s1 * c));
                    }
                    let s2 = g.delta().to_rational() * sign(p[y] && (p[z] ^ p[w]));
                    let kzw_y = ks[z * n + w].column(y);
                    for (i, c) in kzw_y.iter().enumerate() {
                        if !c.is_zero() {
                            acc = &acc + &ks[x * n + i].scale(&(&s2 * c));
                        }
                    }
                    if acc.data().iter().any(|c| !c.is_zero()) {
                        report.k_identity.push(Residual::new([x, y, z, w], acc.data().to_vec()));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Outcome of [`check_jordan_quasi_classical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanFormReport {
    /// First pair pairing different grades.
    pub grade_block: Option<(usize, usize)>,
    /// First pair violating `<y|x> = δ(-1)^{xy}<x|y>`.
    pub symmetry: Option<(usize, usize)>,
    /// `<xyu|v> = <x|yuv>`.
    pub invariance: Violations<Residual>,
    /// `<xyu|v> = (-1)^{(x+y)(u+v)}<uvx|y>`.
    pub exchange: Violations<Residual>,
    pub nondegenerate: bool,
}

impl JordanFormReport {
    pub fn passes(&self) -> bool {
        self.grade_block.is_none()
            && self.symmetry.is_none()
            && self.invariance.is_empty()
            && self.exchange.is_empty()
            && self.nondegenerate
    }
}

pub fn check_jordan_quasi_classical(g: &GeneralTripleSystem) -> Result<JordanFormReport> {
    let form = g.require_form()?;
    let n = g.dim();
    let p = g.odd();
    let pr = Pairings::new(g.table(), form);
    let mut invariance = Violations::new();
    let mut exchange = Violations::new();
    for x in 0..n {
        for y in 0..n {
            for u in 0..n {
                for v in 0..n {
                    let lhs = pr.left(x, y, u, v);
                    let inner = pr.right(x, y, u, v);
                    if lhs != inner {
                        invariance.push(Residual::new([x, y, u, v], vec![lhs - inner]));
                    }
                    let swapped = signed((p[x] ^ p[y]) && (p[u] ^ p[v]), pr.left(u, v, x, y).clone());
                    if *lhs != swapped {
                        exchange.push(Residual::new([x, y, u, v], vec![lhs - swapped]));
                    }
                }
            }
        }
    }
    Ok(JordanFormReport {
        grade_block: form.grade_block_violation(),
        symmetry: form.symmetry_violation(g.delta()),
        invariance,
        exchange,
        nondegenerate: form.is_nondegenerate(),
    })
}
