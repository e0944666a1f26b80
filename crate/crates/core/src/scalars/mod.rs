//! Exact coefficient domains: ℚ/ℤ phases and cyclotomic numbers.

pub mod cyclotomic;
pub mod display;
pub mod phase;

pub use cyclotomic::{cyclotomic_polynomial, totient, Coefficient, Cyclotomic};
pub use display::pretty;
pub use phase::{common_root_order, Phase};
