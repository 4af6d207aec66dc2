//! Per-conductor data: the cyclotomic polynomial and reductions of `x^e`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{divisors, euler_phi};

/// `ℚ(ξ_n) = ℚ[x]/Φ_n` with the power basis `1, x, .., x^{φ(n)-1}`.
#[derive(Debug)]
pub(crate) struct FieldData {
    pub phi: usize,
    /// `powers[e]` is `x^e mod Φ_n` as sparse `(index, coefficient)` pairs, `0 <= e < n`.
    pub powers: Vec<Vec<(usize, i64)>>,
}

/// Maps `n ≡ 2 (mod 4)` to `n/2`; `ℚ(ξ_{2m}) = ℚ(ξ_m)` for odd `m`.
pub fn normalize_conductor(n: u64) -> u64 {
    assert!(n >= 1, "conductor must be positive");
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        num = divide_monic(&num, &cyclotomic_polynomial_cached(d));
    }
    num
}

fn cyclotomic_polynomial_cached(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = cyclotomic_polynomial(n);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

impl FieldData {
    fn build(n: u64) -> FieldData {
        let phi = euler_phi(n) as usize;
        let poly = cyclotomic_polynomial_cached(n);
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for e in 0..n as usize {
            if e > 0 {
                // multiply by x and fold x^phi back with Φ_n
                let top = cur[phi - 1];
                for i in (1..phi).rev() {
                    cur[i] = cur[i - 1];
                }
                cur[0] = 0;
                if top != 0 {
                    for i in 0..phi {
                        cur[i] = cur[i]
                            .checked_sub(top.checked_mul(poly[i]).expect("power reduction overflow"))
                            .expect("power reduction overflow");
                    }
                }
            }
            powers.push(cur.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect());
        }
        FieldData { phi, powers }
    }
}

/// Shared field data for a normalized conductor.
pub(crate) fn field(n: u64) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(FieldData::build(n));
    cache.lock().unwrap().entry(n).or_insert(f).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient -2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn power_table_wraps() {
        let f = field(5);
        assert_eq!(f.phi, 4);
        assert_eq!(f.powers[4], vec![(0, -1), (1, -1), (2, -1), (3, -1)]);
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_conductor(6), 3);
        assert_eq!(normalize_conductor(2), 1);
        assert_eq!(normalize_conductor(8), 8);
    }
}
