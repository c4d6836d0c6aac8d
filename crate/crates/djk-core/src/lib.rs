//! Exact-arithmetic structure theory of dialgebras and Leibniz-Jordan algebras.
//!
//! Everything is computed over arbitrary-precision rationals: structure-constant
//! algebras, polynomial identity suites, degree-truncated current conformal
//! algebras and their endomorphisms, Pierce decompositions, and the
//! Tits-Kantor-Koecher (TKK) construction producing graded Leibniz algebras.

pub mod algebra;
pub mod conformal;
pub mod error;
pub mod gallery;
pub mod identities;
pub mod linalg;
pub mod structure;
pub mod tkk;

pub use algebra::{AlgebraTable, Element, Kind, Side};
pub use error::Error;
pub use linalg::{Matrix, Subspace, Q};
