//! Permutations, permutation groups and the subgroup machinery built on them.

mod bsgs;
mod classes;
mod group;
mod named;
mod perm;
pub mod subgroups;

pub use bsgs::StabChain;
pub use classes::{ConjugacyClass, ConjugacyClassSet};
pub use group::{ElementSet, Limits, PermGroup};
pub use named::{construct_named, Construct};
pub use perm::{Permutation, MAX_DEGREE};
