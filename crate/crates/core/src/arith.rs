//! Small integer number theory used across the crate.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Exponent of `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Splits `n = p^a * m` with `p ∤ m`, returning `(p^a, m)`.
pub fn split_part(n: u64, p: u64) -> (u64, u64) {
    let mut pp = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        pp *= p;
    }
    (pp, m)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u128, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Solves `x ≡ a (mod m)`, `x ≡ b (mod n)` for coprime `m`, `n`; result in `[0, mn)`.
pub fn crt(a: u64, m: u64, b: u64, n: u64) -> u64 {
    debug_assert_eq!(m.gcd(&n), 1);
    let mn = m as u128 * n as u128;
    let inv = inv_mod(m % n.max(1), n).unwrap_or(0) as u128;
    // x = a + m * ((b - a) * m^{-1} mod n)
    let diff = ((b as i128 - a as i128).rem_euclid(n as i128)) as u128;
    let t = (diff * inv) % n as u128;
    ((a as u128 + m as u128 * t) % mn) as u64
}

/// Multiplicative order of `a` modulo `m` (requires `gcd(a, m) = 1`).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let phi = euler_phi(m);
    let mut ord = phi;
    for (q, _) in factorize(phi) {
        while ord.is_multiple_of(q) && pow_mod(a, (ord / q) as u128, m) == 1 {
            ord /= q;
        }
    }
    ord
}

/// Least primitive root modulo the prime `l`.
pub fn primitive_root(l: u64) -> u64 {
    if l == 2 {
        return 1;
    }
    let qs = prime_divisors(l - 1);
    (2..l)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, ((l - 1) / q) as u128, l) != 1))
        .expect("prime modulus has a primitive root")
}

/// Least `c` with `c^2 >= n`.
pub fn ceil_sqrt(n: u64) -> u64 {
    let mut c = (n as f64).sqrt() as u64;
    while c * c < n {
        c += 1;
    }
    while c > 0 && (c - 1) * (c - 1) >= n {
        c -= 1;
    }
    c
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_examples() {
        assert_eq!(crt(6, 25, 1, 12), 181);
        assert_eq!(crt(4, 9, 1, 4), 13);
        assert_eq!(crt(0, 1, 3, 7), 3);
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(multiplicative_order(2, 15), 4);
        assert_eq!(multiplicative_order(3, 16), 4);
        assert_eq!(primitive_root(31), 3);
        assert_eq!(ceil_sqrt(48), 7);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(0), 0);
    }

    #[test]
    fn factor_helpers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(split_part(300, 5), (25, 12));
        assert_eq!(valuation(7200, 5), 2);
    }
}
