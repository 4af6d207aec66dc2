//! Exact arithmetic in cyclotomic fields and their Galois automorphisms.

mod field;
mod galois;
mod number;

pub use field::{cyclotomic_polynomial, normalize_conductor};
pub use galois::{sigma_exponent, GaloisMap};
pub use number::Cyclotomic;
