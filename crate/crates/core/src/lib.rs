//! Exact computations in extended affine Weyl groups and affine Hecke
//! algebras.

// Matrix code indexes several arrays with one loop variable.
#![allow(clippy::needless_range_loop)]

pub mod affine_weyl;
pub mod antispherical;
pub mod budget;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod root_datum;
mod terms;
pub mod verify;
pub mod whittaker;

pub use affine_weyl::{AffineWeylElement, AffineWeylGroup, ReducedWord};
pub use antispherical::{AntisphericalElement, AntisphericalModule, FreenessMatrix};
pub use budget::Budget;
pub use error::{Error, Result};
pub use hecke::{GroupAlgebraElement, HeckeAlgebra, HeckeElement};
pub use laurent::LaurentPoly;
pub use root_datum::{build_root_datum, CartanType, LatticeKind, RootDatum, Weight};
