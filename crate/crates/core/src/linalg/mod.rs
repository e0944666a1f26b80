//! Exact integer linear algebra.

pub mod modp;
pub mod qz;
pub mod smith;

pub use qz::{normalize_row, FiniteQuotient, Reduced, SparseRow};
pub use smith::{smith_normal_form, IntMatrix, Smith};
