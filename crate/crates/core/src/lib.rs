//! Exact computations with Lie superalgebras, Lie-super triple systems,
//! Freudenthal–Kantor triple systems and the Yang–Baxter R-matrices they
//! produce.

pub mod basis;
pub mod canonical;
pub mod error;
pub mod exact;
pub mod fk;
pub mod format;
pub mod lie;
pub mod report;
pub mod tables;
pub mod triple;
pub mod ybe;

pub use basis::{GradedBasis, Sign};
pub use error::{Error, Result};
pub use exact::{Matrix, Parity, Poly, Rational, Subspace};
