//! Seifert matrices of braid closures and the invariants they carry.

pub mod certified;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod signature;

pub use matrix::{seifert_matrix, SeifertMatrix, SurfaceLoop};
pub use poly::LaurentPoly;
pub use signature::{
    format_rational, lt_signature, lt_signature_word, profile_csv, ratio, sigma_hat,
    sigma_hat_matrix, signature_arcs, Arc, LTValue,
};

pub fn alexander_poly(v: &SeifertMatrix) -> LaurentPoly {
    v.alexander_poly()
}
