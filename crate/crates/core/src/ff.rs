//! Prime fields, dense linear algebra over them, and extension fields `F_{p^d}`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{inv_mod, is_prime, mul_mod, prime_divisors};
use crate::error::{Error, Result};

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

/// Row-reduces in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p).expect("nonzero element of a prime field");
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in c..cols {
                    let v = mul_mod(m[r][j], f, p);
                    m[i][j] = sub_mod(m[i][j], v, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : M v = 0}` as rows, from the reduced row echelon form.
pub fn nullspace(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let pivots = rref(&mut a, p);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = sub_mod(0, a[r][free], p);
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial of a square matrix (lowest degree first, monic)
/// via reduction to upper Hessenberg form.
pub fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(pr) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if pr != c + 1 {
            h.swap(pr, c + 1);
            for row in h.iter_mut() {
                row.swap(pr, c + 1);
            }
        }
        let inv = inv_mod(h[c + 1][c], p).unwrap();
        for i in c + 2..n {
            if h[i][c] == 0 {
                continue;
            }
            let f = mul_mod(h[i][c], inv, p);
            for j in 0..n {
                let v = mul_mod(f, h[c + 1][j], p);
                h[i][j] = sub_mod(h[i][j], v, p);
            }
            for row in h.iter_mut() {
                let v = mul_mod(f, row[i], p);
                row[c + 1] = add_mod(row[c + 1], v, p);
            }
        }
    }
    // p_k = charpoly of leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x - h_kk) p_k - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_i
        let mut next = vec![0u64; k + 2];
        for (d, &c) in polys[k].iter().enumerate() {
            next[d + 1] = add_mod(next[d + 1], c, p);
            next[d] = sub_mod(next[d], mul_mod(c, h[k][k], p), p);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(prod, h[i][k], p);
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p).unwrap();
    while r.len() >= b.len() && !(r.len() == 1 && r[0] == 0) {
        let shift = r.len() - b.len();
        let f = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(f, c, p), p);
        }
        r = trim(r);
        if r.len() < b.len() {
            break;
        }
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
        }
    }
    poly_rem(&prod, f, p)
}

fn poly_powmod(base: &[u64], exp: &BigUint, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let base = poly_rem(base, f, p);
    for i in (0..exp.bits()).rev() {
        result = poly_mulmod(&result, &result, f, p);
        if exp.bit(i) {
            result = poly_mulmod(&result, &base, f, p);
        }
    }
    result
}

/// Rabin's irreducibility test for a monic polynomial of degree `d`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let frob = |k: usize| -> Vec<u64> {
        let e = BigUint::from(p).pow(k as u32);
        poly_powmod(&x, &e, f, p)
    };
    let full = frob(d);
    if trim(full) != x {
        return false;
    }
    for r in prime_divisors(d as u64) {
        let mut t = frob(d / r as usize);
        t.resize(t.len().max(2), 0);
        t[1] = sub_mod(t[1], 1, p);
        let g = poly_gcd(f, &t, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The least monic irreducible polynomial of degree `d` over `F_p` in
/// lexicographic order of coefficients (constant term least significant).
pub fn least_irreducible(p: u64, d: usize) -> Vec<u64> {
    let mut f = vec![0u64; d + 1];
    f[d] = 1;
    loop {
        if is_irreducible(&f, p) {
            return f;
        }
        // increment the coefficient vector below the leading term as a base-p counter
        let mut i = 0;
        loop {
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
            i += 1;
            assert!(i < d, "no irreducible polynomial found");
        }
    }
}

/// `F_{p^d}` as `F_p[x]/(f)` with `f` the least irreducible of degree `d`.
#[derive(Clone, Debug)]
pub struct ExtField {
    p: u64,
    d: usize,
    modulus: Vec<u64>,
}

pub type ExtElem = Vec<u64>;

impl ExtField {
    pub fn new(p: u64, d: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(Error::Domain("extension degree must be positive".into()));
        }
        Ok(ExtField {
            p,
            d,
            modulus: least_irreducible(p, d),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.d as u32)
    }

    pub fn zero(&self) -> ExtElem {
        vec![0; self.d]
    }

    pub fn one(&self) -> ExtElem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> ExtElem {
        let mut e = self.zero();
        e[0] = v.rem_euclid(self.p as i64) as u64;
        e
    }

    fn pad(&self, mut v: Vec<u64>) -> ExtElem {
        v.resize(self.d, 0);
        v
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter().zip(b).map(|(&x, &y)| add_mod(x, y, self.p)).collect()
    }

    pub fn scale(&self, a: &ExtElem, c: u64) -> ExtElem {
        a.iter().map(|&x| mul_mod(x, c % self.p, self.p)).collect()
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        self.pad(poly_mulmod(a, b, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &ExtElem, e: &BigUint) -> ExtElem {
        self.pad(poly_powmod(a, e, &self.modulus, self.p))
    }

    pub fn pow_u64(&self, a: &ExtElem, e: u64) -> ExtElem {
        self.pow(a, &BigUint::from(e))
    }

    /// The first element of exact multiplicative order `n` obtained as
    /// `c^((q-1)/n)` with `c` running through the field in lexicographic order.
    pub fn element_of_order(&self, n: u64) -> Result<ExtElem> {
        let q1 = self.size() - BigUint::one();
        if !(&q1 % n).is_zero() {
            return Err(Error::Domain(format!("{n} does not divide |F^×| = {q1}")));
        }
        let cofactor = &q1 / n;
        let one = self.one();
        let primes = prime_divisors(n);
        let mut c = self.zero();
        loop {
            // advance c through the nonzero elements
            let mut i = 0;
            loop {
                c[i] += 1;
                if c[i] < self.p {
                    break;
                }
                c[i] = 0;
                i += 1;
                if i == self.d {
                    return Err(Error::Consistency(format!("no element of order {n} found")));
                }
            }
            let b = self.pow(&c, &cofactor);
            if primes.iter().all(|&r| self.pow_u64(&b, n / r) != one) {
                return Ok(b);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, 3, 7);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = (v[0] + 2 * v[1] + 3 * v[2]) % 7;
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn charpoly_of_companion() {
        // companion of x^3 - 2x - 5 over F_11
        let p = 11;
        let m = vec![vec![0, 0, 5], vec![1, 0, 2], vec![0, 1, 0]];
        assert_eq!(charpoly(&m, p), vec![p - 5, p - 2, 0, 1]);
    }

    #[test]
    fn charpoly_of_dense_matrix() {
        let p = 101;
        let m = vec![vec![2, 7, 1], vec![3, 5, 9], vec![4, 4, 8]];
        let cp = charpoly(&m, p);
        // trace 15, det = 2(40-36) - 7(24-36) + 1(12-20) = 8 + 84 - 8 = 84
        assert_eq!(cp[3], 1);
        assert_eq!(cp[2], p - 15);
        assert_eq!(cp[0], p - 84);
    }

    #[test]
    fn irreducible_search() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn element_orders_in_extension() {
        let f = ExtField::new(2, 4).unwrap();
        let b = f.element_of_order(15).unwrap();
        assert_eq!(f.pow_u64(&b, 15), f.one());
        assert_ne!(f.pow_u64(&b, 5), f.one());
        assert_ne!(f.pow_u64(&b, 3), f.one());
        assert!(f.element_of_order(7).is_err());
    }
}
