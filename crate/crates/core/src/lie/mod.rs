//! Lie superalgebras given by structure constants, their invariant forms
//! and the example catalog.

mod algebra;
mod examples;
mod form;
mod ideals;
mod series;

pub use algebra::{check_grading, check_lie_super, BracketEntry, GradedAlgebra, JacobiViolation, LieCheckReport};
pub use examples::{example_algebra, simple3, standard_symplectic, ExampleKind};
pub use form::{
    certify_quasi_classical, invariance_violation, invariant_form_space, killing_form,
    uniqueness_up_to_scale, BilinearForm, Casimir,
};
pub use ideals::{verify_ideal, verify_orthogonal_decomposition, DecompositionReport};
pub(crate) use ideals::{direct_and_total, orthogonal};
pub use series::{bracket_subspaces, derived_test, is_nilpotent, lower_central_series, CentralSeries};
