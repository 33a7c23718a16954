use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::algebra::{BracketEntry, GradedAlgebra};
use super::form::BilinearForm;
use crate::basis::GradedBasis;
use crate::error::{Error, Result};
use crate::exact::{int, Matrix, Parity, Rational};

/// The quasi-classical example families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleKind {
    /// Solvable Lie algebra on `e, f, x_j, y_j`.
    Ex1_1,
    /// Super version of [`ExampleKind::Ex1_1`] with odd `x_j, y_j`.
    Ex1_2,
    /// Nilpotent Lie algebra on `x_j, u_j, y_A, v_A, Y_{jA}`.
    Ex1_3,
    /// Super version of [`ExampleKind::Ex1_3`] with odd `y_A, v_A, Y_{jA}`.
    Ex1_4,
}

impl ExampleKind {
    pub const ALL: [ExampleKind; 4] = [
        ExampleKind::Ex1_1,
        ExampleKind::Ex1_2,
        ExampleKind::Ex1_3,
        ExampleKind::Ex1_4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleKind::Ex1_1 => "ex1_1",
            ExampleKind::Ex1_2 => "ex1_2",
            ExampleKind::Ex1_3 => "ex1_3",
            ExampleKind::Ex1_4 => "ex1_4",
        }
    }

    pub fn uses_m(self) -> bool {
        matches!(self, ExampleKind::Ex1_3 | ExampleKind::Ex1_4)
    }
}

impl fmt::Display for ExampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown algebra example `{s}`")))
    }
}

/// `k × k` symplectic matrix built from `[[0, 1], [-1, 0]]` blocks.
pub fn standard_symplectic(k: usize) -> Result<Matrix> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::Precondition(format!(
            "a symplectic matrix needs even positive size, got {k}"
        )));
    }
    let mut eps = Matrix::zeros(k, k);
    for i in (0..k).step_by(2) {
        eps.set(i, i + 1, int(1));
        eps.set(i + 1, i, int(-1));
    }
    Ok(eps)
}

fn check_epsilon(eps: &Matrix, size: usize) -> Result<()> {
    if eps.rows() != size || eps.cols() != size {
        return Err(Error::DimensionMismatch(format!(
            "epsilon must be {size}x{size}, got {}x{}",
            eps.rows(),
            eps.cols()
        )));
    }
    if eps.transpose() != -eps {
        return Err(Error::Precondition("epsilon must be antisymmetric".into()));
    }
    if eps.rank() != size {
        return Err(Error::Precondition("epsilon must be invertible".into()));
    }
    Ok(())
}

struct Builder {
    names: Vec<String>,
    parities: Vec<Parity>,
    brackets: Vec<BracketEntry>,
    gram: Vec<((usize, usize), Rational)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            parities: Vec::new(),
            brackets: Vec::new(),
            gram: Vec::new(),
        }
    }

    fn add(&mut self, name: String, parity: Parity) -> usize {
        self.names.push(name);
        self.parities.push(parity);
        self.names.len() - 1
    }

    fn bracket(&mut self, j: usize, k: usize, l: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.brackets.iter_mut().find(|(pair, _)| *pair == (j, k)) {
            Some((_, v)) => v.push((l, c)),
            None => self.brackets.push(((j, k), vec![(l, c)])),
        }
    }

    fn pair(&mut self, j: usize, k: usize, v: Rational) {
        self.gram.push(((j, k), v));
    }

    fn finish(self, name: String) -> Result<(GradedAlgebra, BilinearForm)> {
        let n = self.names.len();
        let basis = GradedBasis::new(self.names, self.parities)?;
        let mut gram = Matrix::zeros(n, n);
        for ((j, k), v) in self.gram {
            gram.set(j, k, v);
        }
        let form = BilinearForm::new(gram, basis.parities().to_vec())?;
        let algebra = GradedAlgebra::new(name, basis, self.brackets)?;
        Ok((algebra, form))
    }
}

/// Builds one of the example algebras together with its invariant form.
///
/// `lambda` enters only the Gram matrix (`<f|f> = -λ`) of the first two
/// families. `epsilon` is the antisymmetric matrix of `Ex1_2` (size `n`)
/// or `Ex1_4` (size `m`); it defaults to [`standard_symplectic`] and is
/// ignored by the other families.
pub fn example_algebra(
    kind: ExampleKind,
    n: usize,
    m: usize,
    lambda: &Rational,
    epsilon: Option<&Matrix>,
) -> Result<(GradedAlgebra, BilinearForm)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if kind.uses_m() && m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let eps = match kind {
        ExampleKind::Ex1_2 | ExampleKind::Ex1_4 => {
            let size = if kind == ExampleKind::Ex1_2 { n } else { m };
            let which = if kind == ExampleKind::Ex1_2 { "n" } else { "m" };
            if size % 2 == 1 {
                return Err(Error::Precondition(format!("{kind} needs even {which}, got {size}")));
            }
            let eps = match epsilon {
                Some(e) => e.clone(),
                None => standard_symplectic(size)?,
            };
            check_epsilon(&eps, size)?;
            Some(eps)
        }
        _ => None,
    };
    let name = if kind.uses_m() {
        format!("{kind}(n={n},m={m})")
    } else {
        format!("{kind}(n={n})")
    };
    match kind {
        ExampleKind::Ex1_1 | ExampleKind::Ex1_2 => {
            let odd = if kind == ExampleKind::Ex1_2 { Parity::Odd } else { Parity::Even };
            solvable(n, lambda, eps.as_ref(), odd).finish(name)
        }
        ExampleKind::Ex1_3 | ExampleKind::Ex1_4 => {
            let odd = if kind == ExampleKind::Ex1_4 { Parity::Odd } else { Parity::Even };
            nilpotent(n, m, eps.as_ref(), odd).finish(name)
        }
    }
}

fn solvable(n: usize, lambda: &Rational, eps: Option<&Matrix>, odd: Parity) -> Builder {
    let mut b = Builder::new();
    let e = b.add("e".into(), Parity::Even);
    let f = b.add("f".into(), Parity::Even);
    let xs: Vec<usize> = (1..=n).map(|j| b.add(format!("x{j}"), odd)).collect();
    let ys: Vec<usize> = (1..=n).map(|j| b.add(format!("y{j}"), odd)).collect();
    for j in 0..n {
        b.bracket(xs[j], f, xs[j], int(1));
        b.bracket(ys[j], f, ys[j], int(-1));
        for k in 0..n {
            let c = match eps {
                Some(eps) => eps.get(j, k).clone(),
                None if j == k => int(1),
                None => Rational::zero(),
            };
            b.bracket(xs[j], ys[k], e, c.clone());
            // <x_j|y_k> = -c, <y_k|x_j> = ±c by (super)symmetry.
            if !c.is_zero() {
                b.pair(xs[j], ys[k], -c.clone());
                b.pair(ys[k], xs[j], if odd.is_odd() { c } else { -c });
            }
        }
    }
    b.pair(e, f, Rational::one());
    b.pair(f, e, Rational::one());
    b.pair(f, f, -lambda.clone());
    b
}

fn nilpotent(n: usize, m: usize, eps: Option<&Matrix>, odd: Parity) -> Builder {
    let mut b = Builder::new();
    let xs: Vec<usize> = (1..=n).map(|j| b.add(format!("x{j}"), Parity::Even)).collect();
    let us: Vec<usize> = (1..=n).map(|j| b.add(format!("u{j}"), Parity::Even)).collect();
    let ys: Vec<usize> = (1..=m).map(|a| b.add(format!("y{a}"), odd)).collect();
    let vs: Vec<usize> = (1..=m).map(|a| b.add(format!("v{a}"), odd)).collect();
    let mut big_y = vec![vec![0; m]; n];
    for (j, row) in big_y.iter_mut().enumerate() {
        for (a, slot) in row.iter_mut().enumerate() {
            *slot = b.add(format!("Y{}_{}", j + 1, a + 1), odd);
        }
    }
    let pairing = |a: usize, c: usize| -> Rational {
        match eps {
            Some(eps) => eps.get(a, c).clone(),
            None if a == c => int(1),
            None => Rational::zero(),
        }
    };
    for j in 0..n {
        for a in 0..m {
            b.bracket(xs[j], big_y[j][a], vs[a], int(1));
            b.bracket(xs[j], ys[a], big_y[j][a], int(-1));
            for c in 0..m {
                b.bracket(ys[a], big_y[j][c], us[j], -pairing(a, c));
            }
        }
    }
    for j in 0..n {
        b.pair(xs[j], us[j], int(1));
        b.pair(us[j], xs[j], int(1));
        for a in 0..m {
            for c in 0..m {
                let p = pairing(a, c);
                if !p.is_zero() {
                    b.pair(big_y[j][a], big_y[j][c], p);
                }
            }
        }
    }
    for a in 0..m {
        for c in 0..m {
            let p = pairing(a, c);
            if !p.is_zero() {
                b.pair(vs[a], ys[c], p.clone());
                b.pair(ys[c], vs[a], if odd.is_odd() { -p } else { p });
            }
        }
    }
    b
}

/// The 3-dimensional simple algebra `[e1,e2] = e3`, `[e2,e3] = e1`,
/// `[e3,e1] = e2` with the identity form.
pub fn simple3() -> (GradedAlgebra, BilinearForm) {
    let basis = GradedBasis::even(["e1", "e2", "e3"]);
    let a = GradedAlgebra::new(
        "simple3",
        basis,
        vec![
            ((0, 1), vec![(2, int(1))]),
            ((1, 2), vec![(0, int(1))]),
            ((2, 0), vec![(1, int(1))]),
        ],
    )
    .expect("valid table");
    let g = BilinearForm::new(Matrix::identity(3), vec![Parity::Even; 3]).expect("symmetric");
    (a, g)
}
