//! Buchberger engine and the ideal-theoretic operations built on it:
//! normal forms, membership, elimination, intersection, colon, saturation,
//! codimension, radical membership, and the singular-locus check.

mod dim;
mod engine;
mod ops;

pub use dim::{codim, dimension, is_complete_intersection, singular_locus_codim, subsets};
pub use engine::{buchberger, Budget, GroebnerBasis};
pub use ops::{
    colon_ideal, colon_poly, eliminate, eq_ideal, exact_div, ideal_member, intersect,
    normal_form, radical_member, saturate,
};
