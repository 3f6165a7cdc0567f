//! Exact algebra for deciding complete-intersection properties of
//! zero-dimensional polynomial ideals.

pub mod border;
pub mod ci;
pub mod corpus;
pub mod error;
pub mod factor;
pub mod field;
pub mod groebner;
pub mod kahler;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod primdec;
pub mod quotient;
pub mod upoly;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use poly::{Polynomial, PowerProduct, Ring, TermOrdering};
