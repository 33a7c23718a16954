//! Sparse action of `R₁₂`, `R₁₃`, `R₂₃` on `V ⊗ V ⊗ V`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::checks::Slot;
use crate::exact::{Matrix, Rational};

/// Vector in `V⊗V⊗V` keyed by `(a·N + b)·N + c`.
pub(crate) type Tensor3 = BTreeMap<usize, Rational>;

pub(crate) fn basis_tensor(index: usize) -> Tensor3 {
    let mut t = Tensor3::new();
    t.insert(index, num_traits::One::one());
    t
}

fn add_into(out: &mut Tensor3, key: usize, value: Rational) {
    let slot = out.entry(key).or_insert_with(Rational::zero);
    *slot += value;
    if slot.is_zero() {
        out.remove(&key);
    }
}

pub(crate) fn add_scaled(out: &mut Tensor3, scale: &Rational, v: &Tensor3) {
    for (k, c) in v {
        add_into(out, *k, scale * c);
    }
}

/// `R` at one point, stored by columns: column `a·N + b` lists
/// `(c·N + d, R[(c,d),(a,b)])`.
#[derive(Debug, Clone)]
pub(crate) struct PointOperator {
    n: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl PointOperator {
    pub(crate) fn from_matrix(n: usize, m: &Matrix) -> Self {
        let size = n * n;
        let mut columns = vec![Vec::new(); size];
        for r in 0..size {
            for (c, v) in m.row(r).iter().enumerate() {
                if !v.is_zero() {
                    columns[c].push((r, v.clone()));
                }
            }
        }
        PointOperator { n, columns }
    }

    pub(crate) fn apply(&self, slot: Slot, v: &Tensor3) -> Tensor3 {
        let n = self.n;
        let mut out = Tensor3::new();
        for (key, coeff) in v {
            let (a, b, c) = (key / (n * n), (key / n) % n, key % n);
            match slot {
                Slot::R12 => {
                    for (cd, r) in &self.columns[a * n + b] {
                        add_into(&mut out, cd * n + c, coeff * r);
                    }
                }
                Slot::R23 => {
                    for (cd, r) in &self.columns[b * n + c] {
                        add_into(&mut out, a * n * n + cd, coeff * r);
                    }
                }
                Slot::R13 => {
                    for (cd, r) in &self.columns[a * n + c] {
                        let (x, z) = (cd / n, cd % n);
                        add_into(&mut out, (x * n + b) * n + z, coeff * r);
                    }
                }
            }
        }
        out
    }
}

/// First key where `lhs` and `rhs` differ, with both values.
pub(crate) fn first_difference(lhs: &Tensor3, rhs: &Tensor3) -> Option<(usize, Rational, Rational)> {
    let zero = Rational::zero();
    lhs.keys()
        .chain(rhs.keys())
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .find_map(|k| {
            let l = lhs.get(&k).unwrap_or(&zero);
            let r = rhs.get(&k).unwrap_or(&zero);
            (l != r).then(|| (k, l.clone(), r.clone()))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    /// Dense embeddings as an independent oracle.
    fn dense(n: usize, m: &Matrix, slot: Slot) -> Matrix {
        let id = Matrix::identity(n);
        match slot {
            Slot::R12 => m.kron(&id),
            Slot::R23 => id.kron(m),
            Slot::R13 => {
                let mut swap = Matrix::zeros(n * n * n, n * n * n);
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            swap.set((a * n + c) * n + b, (a * n + b) * n + c, int(1));
                        }
                    }
                }
                &(&swap * &m.kron(&id)) * &swap
            }
        }
    }

    #[test]
    fn sparse_embeddings_match_dense() {
        let n = 2;
        let m = Matrix::from_ints(&[&[1, 2, 0, 0], &[0, 3, 0, 4], &[5, 0, 0, 6], &[0, 0, 7, 8]]);
        let op = PointOperator::from_matrix(n, &m);
        for slot in [Slot::R12, Slot::R13, Slot::R23] {
            let d = dense(n, &m, slot);
            for col in 0..8 {
                let got = op.apply(slot, &basis_tensor(col));
                for row in 0..8 {
                    let expected = d.get(row, col);
                    assert_eq!(got.get(&row).cloned().unwrap_or_else(Rational::zero), *expected, "{slot:?}");
                }
            }
        }
    }
}
