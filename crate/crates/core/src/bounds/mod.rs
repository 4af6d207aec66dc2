//! The `k_{0,σ}` lower bound, its equality conditions, and orbit-count bounds on modules.

mod module;
mod verdict;

pub use module::{
    binomial, irreducible_cyclic_module, monomial_module, monomial_orbit_bound, multiplication_matrix, class_count_checks,
    ModuleAction, ClassCountReport, VECTOR_CAP,
};
pub use verdict::{
    ceil_bound, condition_i, condition_iii_shape, frobenius_quotient, frobenius_shape, normalizer_equality_check, sp_set,
    bound_verdict, FrobeniusQuotient, NormalizerComparison, BoundReport, Verdict,
};
