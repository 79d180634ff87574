//! Exact computer algebra for ideals generated by minors of a generic
//! matrix: sparse polynomial arithmetic over Q and prime fields, a
//! Buchberger engine with the usual ideal operations, constructors for
//! principal-minor and determinantal ideals, toric primality certificates,
//! finite-field point sampling, and a registry of machine checks tying it
//! all together.

pub mod error;
pub mod groebner;
pub mod ideal;
pub mod minors;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod strata;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{Budget, GroebnerBasis};
pub use ideal::Ideal;
pub use monomial::{cmp_monomials, Monomial, TermOrder};
pub use poly::{multidegree, poly_arith, poly_det, Multidegree, PolyOp, Polynomial};
pub use ring::Ring;
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
