//! Dixon–Schneider: common eigenvectors of the class matrices over `F_ℓ`,
//! then exact lifting of each character column to cyclotomic values.

use num_rational::BigRational;

use crate::arith::{inv_mod, is_prime, mul_mod, pow_mod, primitive_root};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::ff::{add_mod, charpoly, nullspace, poly_eval, rref, sub_mod};
use crate::permcore::{ConjugacyClassSet, PermGroup};

type Cyc = Cyclotomic<BigRational>;

/// Residue data of the computation, kept for inspection and tests.
#[derive(Clone, Debug)]
pub struct DixonData {
    /// The prime `ℓ`, least with `ℓ ≡ 1 (mod exponent)` and `ℓ² > 4|G|`.
    pub ell: u64,
    /// Primitive `exponent`-th root of unity in `F_ℓ` standing for `exp(2πi/exponent)`.
    pub zeta: u64,
    /// Central characters `ω_χ(K)` modulo `ℓ`, one row per character.
    pub omega: Vec<Vec<u64>>,
}

pub fn dixon_prime(order: u128, exponent: u64) -> u64 {
    let mut l = exponent + 1;
    loop {
        if (l as u128) * (l as u128) > 4 * order && is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

/// `power[l][t]` = class of `g_l^t` for `0 <= t < |g_l|`.
pub fn power_maps(classes: &ConjugacyClassSet) -> Vec<Vec<usize>> {
    classes
        .classes()
        .iter()
        .map(|c| {
            let rep = &c.representative;
            let mut out = Vec::with_capacity(c.element_order as usize);
            let mut acc = rep.pow(0);
            for _ in 0..c.element_order {
                out.push(classes.class_of(&acc).expect("power of an element lies in the group"));
                acc = acc.mul(rep);
            }
            out
        })
        .collect()
}

fn inverse_classes(classes: &ConjugacyClassSet) -> Vec<usize> {
    classes
        .classes()
        .iter()
        .map(|c| classes.class_of(&c.representative.inverse()).unwrap())
        .collect()
}

/// `(A_j)_{l,k} = #{x ∈ C_j : x⁻¹ z_k ∈ C_l}` reduced mod `ℓ`, so that
/// `A_j ω = ω_j ω` for every central character `ω`.
fn class_matrix(classes: &ConjugacyClassSet, j: usize, ell: u64) -> Vec<Vec<u64>> {
    let r = classes.len();
    let mut a = vec![vec![0u64; r]; r];
    let members: Vec<_> = classes.members(j).map(|x| x.inverse()).collect();
    for (k, c) in classes.classes().iter().enumerate() {
        let z = &c.representative;
        for xi in &members {
            let l = classes.class_of(&xi.mul(z)).unwrap();
            a[l][k] += 1;
        }
    }
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= ell;
        }
    }
    a
}

fn mat_vec(a: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&x, &y)| add_mod(acc, mul_mod(x, y, p), p)))
        .collect()
}

/// Splits `basis` (rows in reduced echelon form) into eigenspaces of `a`.
fn split_space(a: &[Vec<u64>], basis: Vec<Vec<u64>>, ell: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let mut echelon = basis;
    let pivots = rref(&mut echelon, ell);
    // restricted matrix: column i holds the coordinates of A b_i
    let images: Vec<Vec<u64>> = echelon.iter().map(|b| mat_vec(a, b, ell)).collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|row| (0..d).map(|col| images[col][pivots[row]]).collect())
        .collect();
    let cp = charpoly(&restricted, ell);
    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..ell {
        if poly_eval(&cp, lambda, ell) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { sub_mod(x, lambda, ell) } else { x })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&shifted, d, ell);
        found += kernel.len();
        let mut vectors: Vec<Vec<u64>> = kernel
            .iter()
            .map(|coords| {
                let mut v = vec![0u64; echelon[0].len()];
                for (c, b) in coords.iter().zip(&echelon) {
                    if *c == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = add_mod(*x, mul_mod(*c, y, ell), ell);
                    }
                }
                v
            })
            .collect();
        rref(&mut vectors, ell);
        pieces.push(vectors);
        if found == d {
            break;
        }
    }
    if found != d {
        return Err(Error::Consistency(format!(
            "class matrix restricted to a {d}-dimensional space is not diagonalizable over F_{ell}"
        )));
    }
    Ok(pieces)
}

/// Computes the irreducible characters, unsorted, as exact class-value rows.
pub fn irreducible_characters(group: &PermGroup, classes: &ConjugacyClassSet, exponent: u64) -> Result<(Vec<Vec<Cyc>>, DixonData)> {
    let r = classes.len();
    let order = group.order();
    let ell = dixon_prime(order, exponent);
    let sizes = classes.sizes();

    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut pending: Vec<Vec<Vec<u64>>> = Vec::new();
    let full: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    if r == 1 {
        done.push(vec![1]);
    } else {
        pending.push(full);
    }
    for j in 1..r {
        if pending.is_empty() {
            break;
        }
        let a = class_matrix(classes, j, ell);
        let mut next = Vec::new();
        for space in pending {
            for piece in split_space(&a, space, ell)? {
                if piece.len() == 1 {
                    done.push(piece.into_iter().next().unwrap());
                } else {
                    next.push(piece);
                }
            }
        }
        pending = next;
    }
    if !pending.is_empty() {
        return Err(Error::Consistency("class matrices left a common eigenspace of dimension > 1".into()));
    }
    if done.len() != r {
        return Err(Error::Consistency(format!("found {} central characters for {r} classes", done.len())));
    }

    let inverse = inverse_classes(classes);
    let powers = power_maps(classes);
    let root = primitive_root(ell);
    let zeta = pow_mod(root, ((ell - 1) / exponent) as u128, ell);
    let order_mod = (order % ell as u128) as u64;
    let max_degree = (1..).take_while(|d: &u64| (*d as u128) * (*d as u128) <= order).last().unwrap_or(1);

    let mut omega_rows = Vec::with_capacity(r);
    let mut rows = Vec::with_capacity(r);
    for v in done {
        let lead = inv_mod(v[0], ell).ok_or_else(|| Error::Consistency("central character vanishes at the identity".into()))?;
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, lead, ell)).collect();
        // Σ_l ω_l ω_{l*} / |C_l| = |G| / χ(1)²
        let mut s = 0u64;
        for l in 0..r {
            let term = mul_mod(mul_mod(omega[l], omega[inverse[l]], ell), inv_mod(sizes[l] % ell, ell).unwrap(), ell);
            s = add_mod(s, term, ell);
        }
        let s_inv = inv_mod(s, ell).ok_or_else(|| Error::Consistency("degree equation degenerate".into()))?;
        let d2 = mul_mod(order_mod, s_inv, ell);
        let degree = (1..=max_degree)
            .find(|&d| mul_mod(d, d, ell) == d2 && order.is_multiple_of(d as u128))
            .ok_or_else(|| Error::Consistency("no integral degree matches the central character".into()))?;
        let chi: Vec<u64> = (0..r)
            .map(|l| mul_mod(mul_mod(omega[l], degree % ell, ell), inv_mod(sizes[l] % ell, ell).unwrap(), ell))
            .collect();
        let mut values = Vec::with_capacity(r);
        for l in 0..r {
            let m = classes.get(l).element_order;
            let zm = pow_mod(zeta, (exponent / m) as u128, ell);
            let zm_inv = inv_mod(zm, ell).unwrap();
            let m_inv = inv_mod(m % ell, ell).unwrap();
            let mut terms = Vec::new();
            let mut total = 0u64;
            for k in 0..m {
                // μ_k = m⁻¹ Σ_t χ(g^t) ζ_m^{-kt}
                let step = pow_mod(zm_inv, k as u128, ell);
                let mut w = 1u64;
                let mut acc = 0u64;
                for t in 0..m as usize {
                    acc = add_mod(acc, mul_mod(chi[powers[l][t]], w, ell), ell);
                    w = mul_mod(w, step, ell);
                }
                let mu = mul_mod(acc, m_inv, ell);
                if mu > degree {
                    return Err(Error::Consistency(format!(
                        "eigenvalue multiplicity {mu} exceeds the degree {degree}"
                    )));
                }
                total += mu;
                if mu != 0 {
                    terms.push((k, BigRational::from_integer((mu as i64).into())));
                }
            }
            if total != degree {
                return Err(Error::Consistency("eigenvalue multiplicities do not sum to the degree".into()));
            }
            values.push(Cyc::from_exponent_sum(m, terms).reduced());
        }
        omega_rows.push(omega);
        rows.push(values);
    }
    Ok((
        rows,
        DixonData {
            ell,
            zeta,
            omega: omega_rows,
        },
    ))
}
