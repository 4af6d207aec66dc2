pub mod arith;
pub mod blocks;
pub mod bounds;
pub mod chartab;
pub mod cyclicdefect;
pub mod cyclo;
pub mod error;
pub mod ff;
pub mod harness;
pub mod permcore;
pub mod scalar;

pub use chartab::{character_table, CharacterTable, ClassFunction};
pub use cyclo::{Cyclotomic, GaloisMap};
pub use error::{Error, Result};
pub use permcore::{construct_named, Construct, Limits, PermGroup, Permutation};

/// Exact cyclotomic numbers; the coefficient type used throughout the crate.
pub type Cyc = Cyclotomic<num_rational::BigRational>;
/// Machine-word rational coefficients; overflow panics.
pub type Cyc64 = Cyclotomic<num_rational::Rational64>;
/// Floating coefficients; equality is exact float equality, so conductor
/// minimization is unreliable.
pub type CycF64 = Cyclotomic<f64>;
