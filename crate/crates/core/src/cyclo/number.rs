use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{field, normalize_conductor};
use crate::arith::{gcd, lcm, prime_divisors};
use crate::scalar::Coefficient;

/// An element of `ℚ(ξ_n)` in the power basis modulo `Φ_n`.
///
/// The stored conductor is only an upper bound; [`Cyclotomic::reduced`]
/// moves the value to its least field. Equality lifts both sides to a
/// common conductor, so it does not depend on which bound is stored.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    conductor: u64,
    coeffs: Vec<T>,
}

impl<T: Coefficient> Cyclotomic<T> {
    pub fn zero() -> Self {
        Self::from_coefficient(T::zero())
    }

    pub fn one() -> Self {
        Self::from_coefficient(T::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_coefficient(T::from_int(v))
    }

    pub fn from_coefficient(c: T) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![c],
        }
    }

    /// `ξ_n^k`, where `ξ_n = exp(2πi/n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(n as i64) as u64;
        if n % 4 == 2 {
            // ξ_n = -ξ_m^{(m+1)/2} with m = n/2 odd
            let m = n / 2;
            let v = Self::root_of_unity(m, ((e * (m + 1) / 2) % m) as i64);
            return if e % 2 == 1 { -v } else { v };
        }
        let f = field(n);
        let mut coeffs = vec![T::zero(); f.phi];
        for &(i, c) in &f.powers[e as usize] {
            coeffs[i] = T::from_int(c);
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// Builds `Σ c_i ξ_n^i` from coefficients on arbitrary exponents `0 <= i < n`.
    pub fn from_exponent_sum(n: u64, terms: impl IntoIterator<Item = (u64, T)>) -> Self {
        let mut acc = Self::zero();
        let mut by_exp: Vec<T> = vec![T::zero(); n as usize];
        for (e, c) in terms {
            let slot = &mut by_exp[(e % n) as usize];
            *slot = slot.clone() + c;
        }
        if n % 4 == 2 {
            for (e, c) in by_exp.into_iter().enumerate() {
                if !c.is_zero() {
                    acc = acc + Self::root_of_unity(n, e as i64).scale(&c);
                }
            }
            return acc;
        }
        let f = field(n);
        let mut coeffs = vec![T::zero(); f.phi];
        for (e, c) in by_exp.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, k) in &f.powers[e] {
                coeffs[i] = coeffs[i].clone() + c.clone() * T::from_int(k);
            }
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// Builds from power-basis coefficients at a normalized conductor.
    pub fn from_coefficients(n: u64, coeffs: Vec<T>) -> Option<Self> {
        if n == 0 || normalize_conductor(n) != n || field(n).phi != coeffs.len() {
            return None;
        }
        Some(Cyclotomic { conductor: n, coeffs })
    }

    /// The stored conductor bound (normalized, not necessarily minimal).
    pub fn conductor_bound(&self) -> u64 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-expresses the value in `ℚ(ξ_m)` for a multiple `m` of the stored conductor.
    pub fn lift_to(&self, m: u64) -> Self {
        let m = normalize_conductor(m);
        assert!(m.is_multiple_of(self.conductor), "conductor {} does not divide {m}", self.conductor);
        if m == self.conductor {
            return self.clone();
        }
        let step = m / self.conductor;
        let f = field(m);
        let mut coeffs = vec![T::zero(); f.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(j, k) in &f.powers[(i as u64 * step % m) as usize] {
                coeffs[j] = coeffs[j].clone() + c.clone() * T::from_int(k);
            }
        }
        Cyclotomic { conductor: m, coeffs }
    }

    fn binary(&self, other: &Self, op: impl Fn(T, T) -> T) -> Self {
        let n = lcm(self.conductor, other.conductor);
        let a = self.lift_to(n);
        let b = other.lift_to(n);
        Cyclotomic {
            conductor: n,
            coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| op(x, y)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    fn multiply(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.conductor == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let n = lcm(self.conductor, other.conductor);
        let a = self.lift_to(n);
        let b = other.lift_to(n);
        let f = field(n);
        let mut by_exp = vec![T::zero(); n as usize];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let e = (i + j) % n as usize;
                by_exp[e] = by_exp[e].clone() + x.clone() * y.clone();
            }
        }
        let mut coeffs = vec![T::zero(); f.phi];
        for (e, c) in by_exp.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, k) in &f.powers[e] {
                coeffs[i] = coeffs[i].clone() + c.clone() * T::from_int(k);
            }
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// `ξ ↦ ξ^j` on the stored field; `j` must be coprime to the stored conductor.
    pub(crate) fn galois_raw(&self, j: i64) -> Self {
        let n = self.conductor;
        let j = j.rem_euclid(n as i64) as u64;
        debug_assert_eq!(gcd(j.max(1), n), 1);
        if n == 1 || j == 1 {
            return self.clone();
        }
        let f = field(n);
        let mut coeffs = vec![T::zero(); f.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(t, k) in &f.powers[(i as u64 * j % n) as usize] {
                coeffs[t] = coeffs[t].clone() + c.clone() * T::from_int(k);
            }
        }
        Cyclotomic { conductor: n, coeffs }
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois_raw(-1)
    }

    /// Fixed by every `j ≡ 1 (mod d)` in `(ℤ/n)^×`, i.e. lies in `ℚ(ξ_d)`.
    fn fixed_mod(&self, d: u64) -> bool {
        let n = self.conductor;
        (0..n / d)
            .map(|t| 1 + t * d)
            .filter(|&j| gcd(j, n) == 1 && j != 1)
            .all(|j| self.galois_raw(j as i64) == *self)
    }

    /// The least `n` with the value in `ℚ(ξ_n)`, never `≡ 2 (mod 4)`.
    ///
    /// Meaningful for exact coefficient types only.
    pub fn conductor(&self) -> u64 {
        self.reduced().conductor
    }

    /// The same value stored at its least conductor.
    pub fn reduced(&self) -> Self {
        let mut cur = self.clone();
        if cur.coeffs[1..].iter().all(|c| c.is_zero()) {
            return Cyclotomic {
                conductor: 1,
                coeffs: vec![cur.coeffs[0].clone()],
            };
        }
        'descend: loop {
            for r in prime_divisors(cur.conductor) {
                let d = cur.conductor / r;
                if cur.fixed_mod(d) {
                    cur = cur.restrict_to(normalize_conductor(d));
                    continue 'descend;
                }
            }
            return cur;
        }
    }

    /// Re-expresses at a divisor `d` of the stored conductor, assuming the value lies in `ℚ(ξ_d)`.
    fn restrict_to(&self, d: u64) -> Self {
        let n = self.conductor;
        let step = n / d;
        let fd = field(d);
        let fnn = field(n);
        // columns: lifts of the basis of ℚ(ξ_d); solve L b = a by elimination
        let rows = fnn.phi;
        let cols = fd.phi;
        let mut m: Vec<Vec<T>> = vec![vec![T::zero(); cols + 1]; rows];
        for i in 0..cols {
            for &(j, k) in &fnn.powers[(i as u64 * step % n) as usize] {
                m[j][i] = T::from_int(k);
            }
        }
        for (j, row) in m.iter_mut().enumerate() {
            row[cols] = self.coeffs[j].clone();
        }
        let mut pivot_row = 0;
        let mut pivots = Vec::with_capacity(cols);
        for col in 0..cols {
            let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, p);
            let inv = T::one() / m[pivot_row][col].clone();
            for x in m[pivot_row].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for r in 0..rows {
                if r != pivot_row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..=cols {
                        let v = m[pivot_row][c].clone() * factor.clone();
                        m[r][c] = m[r][c].clone() - v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let mut coeffs = vec![T::zero(); cols];
        for (r, &col) in pivots.iter().enumerate() {
            coeffs[col] = m[r][cols].clone();
        }
        Cyclotomic { conductor: d, coeffs }
    }

    pub fn is_rational(&self) -> bool {
        self.conductor() == 1
    }

    /// The rational value, if the number is rational.
    pub fn to_rational(&self) -> Option<T> {
        let r = self.reduced();
        (r.conductor == 1).then(|| r.coeffs[0].clone())
    }

    /// Floating approximation `(re, im)`; for display only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::TAU * i as f64 / n;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    /// `true` iff all power-basis coefficients are integers (an algebraic integer).
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integral())
    }

    /// `true` iff the `p`-part of the conductor divides `p`.
    pub fn is_almost_p_rational(&self, p: u64) -> bool {
        let c = self.conductor();
        !c.is_multiple_of(p * p)
    }
}

impl<T: Coefficient> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let n = lcm(self.conductor, other.conductor);
        self.lift_to(n).coeffs == other.lift_to(n).coeffs
    }
}

impl<T: Coefficient + Eq> Eq for Cyclotomic<T> {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<T: Coefficient> $trait<&Cyclotomic<T>> for &Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &Cyclotomic<T>) -> Cyclotomic<T> {
                let f: fn(&Cyclotomic<T>, &Cyclotomic<T>) -> Cyclotomic<T> = $body;
                f(self, rhs)
            }
        }
        impl<T: Coefficient> $trait<Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Coefficient> $trait<&Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.binary(b, |x, y| x + y));
forward_binop!(Sub, sub, |a, b| a.binary(b, |x, y| x - y));
forward_binop!(Mul, mul, |a, b| a.multiply(b));

impl<T: Coefficient> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Coefficient> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -self.clone()
    }
}

impl<T: Coefficient> std::iter::Sum for Cyclotomic<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

/// Rationals print as `a/b`; anything else as `Cyc(n)[c0,c1,...]` at the least conductor.
impl<T: Coefficient> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.conductor == 1 {
            return write!(f, "{}", r.coeffs[0]);
        }
        write!(f, "Cyc({})[", r.conductor)?;
        for (i, c) in r.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    type C = Cyclotomic<BigRational>;

    fn z(n: u64, k: i64) -> C {
        C::root_of_unity(n, k)
    }

    #[test]
    fn root_sums() {
        assert!((z(4, 1) + z(4, 3)).is_zero());
        assert_eq!(z(3, 1) + z(3, 2), C::from_int(-1));
        assert_eq!(z(5, 1) * z(5, 4), C::one());
    }

    #[test]
    fn sqrt_two_squared() {
        let s = z(8, 1) + z(8, 7);
        assert_eq!(&s * &s, C::from_int(2));
        assert_eq!(s.conductor(), 8);
    }

    #[test]
    fn conductors() {
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!((z(5, 1) + z(5, 4)).conductor(), 5);
        assert_eq!(z(12, 3).conductor(), 4);
        assert_eq!((z(12, 1) + z(12, 11)).conductor(), 12); // √3
        assert_eq!(z(2, 1), C::from_int(-1));
    }

    #[test]
    fn sqrt_five_almost_rational() {
        let s5 = (z(5, 1) + z(5, 4)).scale(&BigRational::from_integer(2.into())) + C::one();
        assert_eq!(&s5 * &s5, C::from_int(5));
        assert!(s5.is_almost_p_rational(5));
        assert!(!z(25, 1).is_almost_p_rational(5));
        assert!(!(z(8, 1) + z(8, 7)).is_almost_p_rational(2));
    }

    #[test]
    fn mixed_conductor_equality() {
        // ξ_3 expressed at conductor 12
        let a = z(12, 4);
        assert_eq!(a, z(3, 1));
        assert_eq!(a.reduced().conductor_bound(), 3);
    }

    #[test]
    fn display_forms() {
        assert_eq!(C::from_int(-3).to_string(), "-3");
        assert_eq!(z(3, 1).to_string(), "Cyc(3)[0,1]");
        let half = C::from_coefficient(BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "1/2");
    }
}
