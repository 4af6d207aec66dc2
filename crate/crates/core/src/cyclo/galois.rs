use super::field::normalize_conductor;
use super::number::Cyclotomic;
use crate::arith::{crt, gcd, multiplicative_order, pow_mod, split_part};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// The automorphism `ξ_N ↦ ξ_N^j` of `ℚ(ξ_N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisMap {
    modulus: u64,
    exponent: u64,
}

impl GaloisMap {
    pub fn new(modulus: u64, exponent: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidMap("modulus must be positive".into()));
        }
        let j = exponent.rem_euclid(modulus as i64) as u64;
        if gcd(j, modulus) != 1 && modulus > 1 {
            return Err(Error::InvalidMap(format!(
                "exponent {exponent} is not coprime to the modulus {modulus}"
            )));
        }
        Ok(GaloisMap {
            modulus,
            exponent: j % modulus.max(1),
        })
    }

    pub fn identity(modulus: u64) -> Self {
        GaloisMap {
            modulus,
            exponent: 1 % modulus,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_identity(&self) -> bool {
        self.modulus == 1 || self.exponent == 1
    }

    /// `self` applied `k` times.
    pub fn pow(&self, k: u64) -> Self {
        GaloisMap {
            modulus: self.modulus,
            exponent: pow_mod(self.exponent, k as u128, self.modulus),
        }
    }

    /// Multiplicative order of the exponent modulo `N`.
    pub fn order(&self) -> u64 {
        if self.modulus == 1 {
            1
        } else {
            multiplicative_order(self.exponent, self.modulus)
        }
    }

    /// Applies the map; the value must lie in `ℚ(ξ_N)`.
    pub fn apply<T: Coefficient>(&self, a: &Cyclotomic<T>) -> Result<Cyclotomic<T>> {
        let n = normalize_conductor(self.modulus);
        let a = if n.is_multiple_of(a.conductor_bound()) {
            a.clone()
        } else {
            let r = a.reduced();
            if !n.is_multiple_of(r.conductor_bound()) {
                return Err(Error::InvalidMap(format!(
                    "value of conductor {} does not lie in the field of modulus {}",
                    r.conductor_bound(),
                    self.modulus
                )));
            }
            r
        };
        let c = a.conductor_bound();
        Ok(a.galois_raw((self.exponent % c) as i64))
    }
}

/// The map fixing `p'`-roots of unity and raising `p`-power roots to the
/// `(1+p)`-th power, on `ℚ(ξ_N)`. Identity when `p² ∤ N`.
pub fn sigma_exponent(p: u64, modulus: u64) -> GaloisMap {
    let (pa, m) = split_part(modulus, p);
    if pa <= p {
        return GaloisMap::identity(modulus);
    }
    GaloisMap {
        modulus,
        exponent: crt((1 + p) % pa, pa, 1 % m, m),
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    type C = Cyclotomic<BigRational>;

    #[test]
    fn sigma_examples() {
        assert!(sigma_exponent(5, 60).is_identity());
        assert_eq!(sigma_exponent(5, 300).exponent(), 181);
        assert_eq!(sigma_exponent(3, 36).exponent(), 13);
    }

    #[test]
    fn sigma_negates_sqrt_two() {
        let s = C::root_of_unity(8, 1) + C::root_of_unity(8, 7);
        let img = sigma_exponent(2, 8).apply(&s).unwrap();
        assert_eq!(img, -s);
    }

    #[test]
    fn sigma_on_root_of_order_25() {
        let img = sigma_exponent(5, 25).apply(&C::root_of_unity(25, 1)).unwrap();
        assert_eq!(img, C::root_of_unity(25, 6));
    }

    #[test]
    fn invalid_maps() {
        assert!(matches!(GaloisMap::new(12, 3), Err(Error::InvalidMap(_))));
        let m = GaloisMap::new(5, 2).unwrap();
        assert!(m.apply(&C::root_of_unity(7, 1)).is_err());
        assert_eq!(m.apply(&C::from_int(4)).unwrap(), C::from_int(4));
    }
}
