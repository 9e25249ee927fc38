//! Exact computations around the weak Lefschetz property of monomial almost
//! complete intersections `(x^a, y^b, z^c, x^alpha y^beta z^gamma)` in three
//! variables.
//!
//! The twin-peak multiplication map is decided by two integer matrices: a
//! zero-one divisibility matrix and a small binomial matrix. Both are
//! determinants of signed enumerations of lozenge tilings of a punctured
//! hexagon. The crate builds both matrices, enumerates the tilings and their
//! lattice-path and perfect-matching encodings, evaluates the known closed
//! product formulas and computes generic splitting types of the syzygy
//! bundle.

pub mod error;
pub mod formulas;
pub mod hilbert;
pub mod linalg;
pub mod matrices;
pub mod params;
pub mod splitting;
pub mod tilings;

pub use error::{Error, Result};
pub use params::AciParams;
