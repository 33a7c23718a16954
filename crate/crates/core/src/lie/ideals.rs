use num_traits::Zero;

use super::algebra::GradedAlgebra;
use super::form::BilinearForm;
use super::series::bracket_subspaces;
use crate::exact::Subspace;

/// `[B, L] ⊆ B`.
pub fn verify_ideal(a: &GradedAlgebra, b: &Subspace) -> bool {
    let whole = Subspace::full(a.dim());
    b.contains_subspace(&bracket_subspaces(a, b, &whole))
}

/// Per-part and pairwise outcome of [`verify_orthogonal_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// `[B, L] ⊆ B` for each part.
    pub ideal: Vec<bool>,
    /// `[B, B] ≠ 0` for each part.
    pub nonabelian: Vec<bool>,
    /// Pairs `(i, j)`, `i < j`, with `<B_i|B_j> ≠ 0`.
    pub non_orthogonal: Vec<(usize, usize)>,
    /// Dimensions add up to the dimension of the sum.
    pub direct: bool,
    /// The parts span the whole algebra.
    pub spans_whole: bool,
}

impl DecompositionReport {
    pub fn passes(&self) -> bool {
        self.ideal.iter().all(|&b| b)
            && self.nonabelian.iter().all(|&b| b)
            && self.non_orthogonal.is_empty()
            && self.direct
            && self.spans_whole
    }
}

pub(crate) fn orthogonal(g: &BilinearForm, left: &Subspace, right: &Subspace) -> bool {
    left.basis()
        .iter()
        .all(|x| right.basis().iter().all(|y| g.value(x, y).is_zero()))
}

pub(crate) fn direct_and_total(ambient: usize, parts: &[Subspace]) -> (bool, bool) {
    let total = parts
        .iter()
        .fold(Subspace::zero(ambient), |acc, p| acc.sum(p));
    let direct = total.dim() == parts.iter().map(Subspace::dim).sum::<usize>();
    (direct, total.dim() == ambient)
}

/// Checks a proposed decomposition `L = B_1 ⊕ … ⊕ B_t` into mutually
/// orthogonal ideals with `[B_i, B_i] ≠ 0`.
pub fn verify_orthogonal_decomposition(
    a: &GradedAlgebra,
    g: &BilinearForm,
    parts: &[Subspace],
) -> DecompositionReport {
    let ideal = parts.iter().map(|b| verify_ideal(a, b)).collect();
    let nonabelian = parts
        .iter()
        .map(|b| !bracket_subspaces(a, b, b).is_zero())
        .collect();
    let mut non_orthogonal = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !orthogonal(g, &parts[i], &parts[j]) {
                non_orthogonal.push((i, j));
            }
        }
    }
    let (direct, spans_whole) = direct_and_total(a.dim(), parts);
    DecompositionReport {
        ideal,
        nonabelian,
        non_orthogonal,
        direct,
        spans_whole,
    }
}
