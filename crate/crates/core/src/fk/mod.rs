//! Generalized and (ε, δ) Freudenthal–Kantor triple systems, δ Jordan-super
//! triple systems and the Lie structures derived from them.

mod algebra;
mod checks;
mod examples;
mod system;

pub use algebra::{jordan_lie_algebra, jordan_to_lie_triple, JordanLieAlgebra};
pub use checks::{
    check_fk_condition, check_generalized_fk, check_jordan, check_jordan_quasi_classical, FkConditionReport,
    FkReport, JordanFormReport, JordanReport,
};
pub use examples::{example_2_4, example_2_5, example_2_6, FkExampleKind};
pub use system::{FkKind, GeneralTripleSystem};
