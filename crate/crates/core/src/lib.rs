//! Exact computations for twisted Drinfeld doubles Z(G, α) of finite groups:
//! cohomology, projective characters, simple-object characters, étale and
//! Lagrangian algebras, and modular invariants.

pub mod centre;
pub mod cochain;
pub mod error;
pub mod etale;
pub mod group;
pub mod linalg;
pub mod modular;
pub mod projective;
pub mod scalars;

pub use cochain::Cochain;
pub use error::{Error, Result};
pub use group::{GroupTable, Subgroup};
pub use scalars::{Cyclotomic, Phase};

/// Cyclotomic numbers with exact rational coefficients.
pub type Cyc = Cyclotomic<num_rational::BigRational>;
