use super::system::TripleSystem;
use crate::error::Result;
use crate::exact::{vector, Subspace};
use crate::lie::{direct_and_total, orthogonal};

/// `[B, V, V] ⊆ B`.
pub fn verify_triple_ideal(t: &TripleSystem, b: &Subspace) -> bool {
    let n = t.dim();
    b.basis().iter().all(|x| {
        (0..n).all(|j| {
            (0..n).all(|k| b.contains(&t.product(x, &vector::unit(n, j), &vector::unit(n, k))))
        })
    })
}

/// `[A, B, V]` as a subspace.
pub fn triple_span(t: &TripleSystem, a: &Subspace, b: &Subspace) -> Subspace {
    let n = t.dim();
    let mut out = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            for k in 0..n {
                out.push(t.product(x, y, &vector::unit(n, k)));
            }
        }
    }
    Subspace::span(n, out)
}

/// Outcome of [`verify_triple_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleDecompositionReport {
    pub ideal: Vec<bool>,
    /// `[B, B, V] ≠ 0` for each part.
    pub nondegenerate_product: Vec<bool>,
    /// Pairs `(i, j)` with `<B_i|B_j> ≠ 0`.
    pub non_orthogonal: Vec<(usize, usize)>,
    /// Pairs `(i, j)`, `i ≠ j`, with `[B_i, B_j, V] ≠ 0`.
    pub cross_products: Vec<(usize, usize)>,
    pub direct: bool,
    pub spans_whole: bool,
}

impl TripleDecompositionReport {
    pub fn passes(&self) -> bool {
        self.ideal.iter().all(|&b| b)
            && self.nondegenerate_product.iter().all(|&b| b)
            && self.non_orthogonal.is_empty()
            && self.cross_products.is_empty()
            && self.direct
            && self.spans_whole
    }
}

/// Checks a proposed decomposition `V = B_1 ⊕ … ⊕ B_t` into orthogonal
/// ideals with `[B_i, B_i, V] ≠ 0` and `[B_i, B_j, V] = 0` for `i ≠ j`.
pub fn verify_triple_decomposition(t: &TripleSystem, parts: &[Subspace]) -> Result<TripleDecompositionReport> {
    let g = t.require_form()?;
    let ideal = parts.iter().map(|b| verify_triple_ideal(t, b)).collect();
    let nondegenerate_product = parts.iter().map(|b| !triple_span(t, b, b).is_zero()).collect();
    let mut non_orthogonal = Vec::new();
    let mut cross_products = Vec::new();
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            if i == j {
                continue;
            }
            if i < j && !orthogonal(g, &parts[i], &parts[j]) {
                non_orthogonal.push((i, j));
            }
            if !triple_span(t, &parts[i], &parts[j]).is_zero() {
                cross_products.push((i, j));
            }
        }
    }
    let (direct, spans_whole) = direct_and_total(t.dim(), parts);
    Ok(TripleDecompositionReport {
        ideal,
        nondegenerate_product,
        non_orthogonal,
        cross_products,
        direct,
        spans_whole,
    })
}
