//! θ-dependent triple products on even spaces, the R-matrices they define
//! and exact certification of the Yang–Baxter equation and its variants.

mod catalog;
mod checks;
mod family;
mod rmatrix;
mod tensor;

pub use catalog::{lie_family, prop3_1, prop3_2, pure_g, remark3_2, remark3_3, FamilyKind, LieProduct};
pub use checks::{
    check_classical_ybe, check_commutation, check_eq_3_5, check_eq_3_8, check_ybe, check_ybe_at, Eq35Report,
    Eq38Report, GridFailure, GridVerdict, Slot,
};
pub use family::{dual_basis, verify_condition_3_6, DualBasis, ThetaTripleFamily};
pub use rmatrix::{build_r, RMatrix};
