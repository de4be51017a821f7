//! Exact, degree-truncated model of differential linear logic over
//! finite-dimensional weak spaces.
//!
//! Everything is computed over ℚ. Spaces are structural expressions with
//! canonical bases ([`SpaceExpr`]); morphisms are matrices ([`LinMap`],
//! [`SparseMap`]); non-linear morphisms out of the exponential are sequences
//! of homogeneous monomials ([`MonomialSeq`]).

pub mod combinat;
pub mod error;
pub mod exponential;
pub mod laws;
pub mod linalg;
pub mod linmap;
pub mod mall;
pub mod monomial;
pub mod nonunit;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod space;

pub use error::{Error, Result};
pub use linalg::{Matrix, SparseMatrix, SparseVec};
pub use linmap::{LinMap, SparseMap};
pub use monomial::{Monomial, MonomialSeq, SeqVariant};
pub use scalar::Scalar;
pub use space::SpaceExpr;
