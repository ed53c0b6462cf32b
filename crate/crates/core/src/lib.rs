//! Exact computations with Grassmannian BGG complexes of graded form
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`], [`basis`], [`exterior`], [`symmetric`], [`matrix`] and
//!   [`random`]: exact scalars over `Q` or `F_p`, multilinear algebra in
//!   lexicographic bases, and dense exact linear algebra.
//! * [`algebra`]: form algebras given by structure constants, the maps
//!   `ψ_n`, fixtures and the text file format.
//! * [`bgg`]: the complexes `C_{r,n,W}` at a point `W`, exactness and
//!   sampling over the Grassmannian.
//! * [`bivector`]: ranks, Pfaffians, skew normal forms, minimal-rank search
//!   and pencil witnesses for elements of `Λ^2 V`.
//! * [`bounds`] and [`verify`]: lower bounds on `h^{2,0}` and the end-to-end
//!   verification report.

pub mod algebra;
pub mod basis;
pub mod bgg;
pub mod bivector;
pub mod bounds;
pub mod error;
pub mod exterior;
pub mod matrix;
pub mod random;
pub mod report;
pub mod scalar;
pub mod symmetric;
pub mod verify;

pub use algebra::{FormAlgebra, PsiMap};
pub use bivector::{Bivector, RankCertificate};
pub use error::{Error, Result};
pub use exterior::ExteriorElement;
pub use matrix::ExactMatrix;
pub use scalar::{Field, FieldScalar};
pub use symmetric::SymmetricElement;
