//! Sparse storage for bilinear and trilinear structure constants.
//!
//! Each basis tuple maps to a short list of `(index, coefficient)` pairs,
//! sorted by index with zero coefficients removed. Evaluation on dense
//! vectors skips zero coordinates, so contraction cost follows the number
//! of nonzero constants rather than the cube or fourth power of the
//! dimension.

use num_traits::Zero;

use crate::exact::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

/// Sorts, merges repeated indices and drops zeros.
pub fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Rational)], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `acc += scale · v` for a sparse `v`.
pub fn accumulate(acc: &mut [Rational], scale: &Rational, v: &[(usize, Rational)]) {
    for (i, c) in v {
        acc[*i] += scale * c;
    }
}

/// Constants `C^l_{jk}` of a bilinear product `e_j · e_k = Σ_l C^l_{jk} e_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearTable {
    dim: usize,
    entries: Vec<SparseVec>,
}

impl BilinearTable {
    pub fn zero(dim: usize) -> Self {
        BilinearTable {
            dim,
            entries: vec![Vec::new(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, k: usize) -> &[(usize, Rational)] {
        &self.entries[j * self.dim + k]
    }

    pub fn set(&mut self, j: usize, k: usize, v: SparseVec) {
        self.entries[j * self.dim + k] = normalize(v);
    }

    pub fn is_set(&self, j: usize, k: usize) -> bool {
        !self.entries[j * self.dim + k].is_empty()
    }

    pub fn coefficient(&self, l: usize, j: usize, k: usize) -> Rational {
        self.get(j, k)
            .iter()
            .find(|(i, _)| *i == l)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn eval_basis(&self, j: usize, k: usize) -> Vec<Rational> {
        to_dense(self.get(j, k), self.dim)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (j, xj) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let entry = self.get(j, k);
                if !entry.is_empty() {
                    accumulate(&mut out, &(xj * yk), entry);
                }
            }
        }
        out
    }

    /// Nonzero entries as `((j, k), constants)`, in index order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &[(usize, Rational)])> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(move |(i, v)| ((i / self.dim, i % self.dim), v.as_slice()))
    }
}

/// Constants `T^m_{jkl}` of a trilinear product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrilinearTable {
    dim: usize,
    entries: Vec<SparseVec>,
}

impl TrilinearTable {
    pub fn zero(dim: usize) -> Self {
        TrilinearTable {
            dim,
            entries: vec![Vec::new(); dim * dim * dim],
        }
    }

    /// Tabulates a product given on basis triples as dense vectors.
    pub fn from_fn<F>(dim: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize, usize) -> Vec<Rational>,
    {
        let mut t = TrilinearTable::zero(dim);
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    t.entries[(j * dim + k) * dim + l] = to_sparse(&f(j, k, l));
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, j: usize, k: usize, l: usize) -> usize {
        (j * self.dim + k) * self.dim + l
    }

    pub fn get(&self, j: usize, k: usize, l: usize) -> &[(usize, Rational)] {
        &self.entries[self.idx(j, k, l)]
    }

    pub fn set(&mut self, j: usize, k: usize, l: usize, v: SparseVec) {
        let i = self.idx(j, k, l);
        self.entries[i] = normalize(v);
    }

    pub fn is_set(&self, j: usize, k: usize, l: usize) -> bool {
        !self.entries[self.idx(j, k, l)].is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn eval_basis(&self, j: usize, k: usize, l: usize) -> Vec<Rational> {
        to_dense(self.get(j, k, l), self.dim)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        let nz = |v: &[Rational]| -> Vec<(usize, Rational)> { to_sparse(v) };
        let (xs, ys, zs) = (nz(x), nz(y), nz(z));
        for (j, xj) in &xs {
            for (k, yk) in &ys {
                let xy = xj * yk;
                for (l, zl) in &zs {
                    let entry = self.get(*j, *k, *l);
                    if !entry.is_empty() {
                        accumulate(&mut out, &(&xy * zl), entry);
                    }
                }
            }
        }
        out
    }

    /// `Σ c_i T_i`, all tables sharing one dimension.
    pub fn linear_combination(dim: usize, terms: &[(&TrilinearTable, Rational)]) -> Self {
        let mut out = TrilinearTable::zero(dim);
        for (i, slot) in out.entries.iter_mut().enumerate() {
            let mut acc: SparseVec = Vec::new();
            for (t, c) in terms {
                if c.is_zero() {
                    continue;
                }
                acc.extend(t.entries[i].iter().map(|(m, v)| (*m, c * v)));
            }
            *slot = normalize(acc);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &[(usize, Rational)])> {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(move |(i, v)| ((i / (d * d), (i / d) % d, i % d), v.as_slice()))
    }
}
