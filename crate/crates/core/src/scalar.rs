//! Coefficient fields for cyclotomic arithmetic.
//!
//! Cyclotomic numbers are stored as coefficient vectors over a field `T`.
//! The authoritative computations use arbitrary-precision rationals; a
//! machine-word rational and plain floats also satisfy the bound and are
//! handy for quick experiments.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, ToPrimitive};

pub trait Coefficient:
    Clone + PartialEq + Num + Neg<Output = Self> + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient type cannot represent a small integer")
    }

    /// `true` when the coefficient is known to be an exact integer.
    fn is_integral(&self) -> bool;
}

impl Coefficient for num_rational::BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Coefficient for num_rational::Rational64 {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Coefficient for f64 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }
}

impl Coefficient for f32 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }
}
