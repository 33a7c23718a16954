use super::algebra::GradedAlgebra;
use crate::exact::Subspace;

/// `[A, B]` as the span of brackets of basis vectors.
pub fn bracket_subspaces(a: &GradedAlgebra, left: &Subspace, right: &Subspace) -> Subspace {
    let mut products = Vec::with_capacity(left.dim() * right.dim());
    for x in left.basis() {
        for y in right.basis() {
            products.push(a.bracket(x, y));
        }
    }
    Subspace::span(a.dim(), products)
}

/// Lower central series `L_1 = L`, `L_{k+1} = [L, L_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralSeries {
    /// `terms[i]` is `L_{i+1}`. The last term is either zero or equal to
    /// its predecessor (stabilized).
    pub terms: Vec<Subspace>,
}

impl CentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// `L_k` for `k ≥ 1`, extended past the computed terms by the limit.
    pub fn term(&self, k: usize) -> &Subspace {
        assert!(k >= 1, "series terms start at L_1");
        let idx = (k - 1).min(self.terms.len() - 1);
        &self.terms[idx]
    }

    pub fn reaches_zero(&self) -> bool {
        self.terms.last().map_or(true, Subspace::is_zero)
    }

    /// Nilpotency length `n` with `L_n ≠ 0`, `L_{n+1} = 0`, when nilpotent.
    /// The zero algebra has length 0.
    pub fn nilpotency_length(&self) -> Option<usize> {
        if !self.reaches_zero() {
            return None;
        }
        Some(self.terms.iter().filter(|t| !t.is_zero()).count())
    }
}

pub fn lower_central_series(a: &GradedAlgebra) -> CentralSeries {
    let whole = Subspace::full(a.dim());
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().expect("series is nonempty");
        if last.is_zero() {
            break;
        }
        let next = bracket_subspaces(a, &whole, last);
        let stable = &next == last;
        terms.push(next);
        if stable {
            break;
        }
    }
    CentralSeries { terms }
}

/// `(nilpotent, length)`; the length is `0` when not nilpotent.
pub fn is_nilpotent(a: &GradedAlgebra) -> (bool, usize) {
    match lower_central_series(a).nilpotency_length() {
        Some(len) => (true, len),
        None => (false, 0),
    }
}

/// `[L, [[L,L],[L,L]]] = 0`.
pub fn derived_test(a: &GradedAlgebra) -> bool {
    let whole = Subspace::full(a.dim());
    let derived = bracket_subspaces(a, &whole, &whole);
    let second = bracket_subspaces(a, &derived, &derived);
    bracket_subspaces(a, &whole, &second).is_zero()
}
