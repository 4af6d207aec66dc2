//! Centralizers, normalizers, Sylow subgroups, Frattini subgroups, p'-cores
//! and quotients. All by element scans below the element cap.

use std::collections::HashMap;

use super::group::PermGroup;
use super::perm::Permutation;
use crate::arith::{crt, is_prime, split_part};
use crate::error::{Error, Result};

/// `C_G(g)`.
pub fn centralizer(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    if !g.contains(x) {
        return Err(Error::Domain(format!("{x} is not an element of the group")));
    }
    let elems: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|y| y.mul(x) == x.mul(y))
        .cloned()
        .collect();
    g.subgroup_from_elements(elems)
}

/// `C_G(H)`: elements commuting with every generator of `H`.
pub fn centralizer_of_subgroup(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Domain("not a subgroup of the group".into()));
    }
    let elems: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|y| h.generators().iter().all(|x| y.mul(x) == x.mul(y)))
        .cloned()
        .collect();
    g.subgroup_from_elements(elems)
}

/// `N_G(H)`.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Domain("not a subgroup of the group".into()));
    }
    let elems: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|y| h.generators().iter().all(|x| h.contains(&x.conjugate_by(y))))
        .cloned()
        .collect();
    g.subgroup_from_elements(elems)
}

pub fn p_part_of_order(order: u128, p: u64) -> u128 {
    let mut pp = 1u128;
    let mut m = order;
    while m.is_multiple_of(p as u128) {
        m /= p as u128;
        pp *= p as u128;
    }
    pp
}

/// A Sylow `p`-subgroup built by climbing normalizers from the cyclic
/// subgroup generated by the least element of order `p`.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let target = p_part_of_order(g.order(), p);
    let elements = g.elements()?;
    let mut q = PermGroup::with_limits(g.degree(), Vec::new(), g.limits())?;
    if target == 1 {
        return Ok(q);
    }
    if let Some(x) = elements.iter().find(|x| x.order() == p) {
        q = g.subgroup(vec![x.clone()])?;
    }
    while q.order() < target {
        let n = normalizer(g, &q)?;
        let mut grown = None;
        for y in n.elements()?.iter() {
            if q.contains(y) {
                continue;
            }
            // order of y modulo q
            let mut m = 1u64;
            let mut acc = y.clone();
            while !q.contains(&acc) {
                acc = acc.mul(y);
                m += 1;
            }
            if m.is_multiple_of(p) {
                let x = y.pow(m / p);
                let mut gens = q.generators().to_vec();
                gens.push(x);
                grown = Some(g.subgroup(gens)?);
                break;
            }
        }
        q = grown.ok_or_else(|| {
            Error::Consistency("normalizer climb stalled below the Sylow order".into())
        })?;
    }
    Ok(q)
}

/// True iff some element has order `|H|`.
pub fn is_cyclic(h: &PermGroup) -> Result<bool> {
    if h.is_trivial() {
        return Ok(true);
    }
    let n = h.order_u64();
    Ok(h.elements()?.iter().any(|x| x.order() == n))
}

/// An element of order `|H|` if the group is cyclic, least in element order.
pub fn cyclic_generator(h: &PermGroup) -> Result<Option<Permutation>> {
    let n = h.order_u64();
    Ok(h.elements()?.iter().find(|x| x.order() == n).cloned())
}

pub fn is_p_group(h: &PermGroup, p: u64) -> bool {
    p_part_of_order(h.order(), p) == h.order()
}

/// `Φ(P) = ⟨[P,P], P^p⟩` for a `p`-group `P`.
pub fn frattini_of_p_group(pg: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_p_group(pg, p) {
        return Err(Error::Domain(format!("group of order {} is not a {p}-group", pg.order())));
    }
    let elems = pg.elements()?.as_slice();
    let mut gens: Vec<Permutation> = elems.iter().map(|x| x.pow(p)).collect();
    for a in elems {
        for b in elems {
            gens.push(a.commutator(b));
        }
    }
    pg.subgroup_generated_by(&gens)
}

/// `O_{p'}(G)`: join of the normal closures of `p'`-classes whose normal closure is a `p'`-group.
pub fn p_prime_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let classes = g.conjugacy_classes()?;
    let mut gens: Vec<Permutation> = Vec::new();
    for (i, c) in classes.classes().iter().enumerate() {
        if c.element_order == 1 || c.element_order % p == 0 {
            continue;
        }
        let members: Vec<Permutation> = classes.members(i).cloned().collect();
        let closure = g.subgroup_generated_by(&members)?;
        if closure.order() % p as u128 != 0 {
            gens.extend(closure.generators().iter().cloned());
        }
    }
    g.subgroup_generated_by(&gens)
}

/// The coset action `G -> Sym(G/N)` on right cosets of a normal subgroup.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub quotient: PermGroup,
    coset_of: HashMap<Permutation, usize>,
    representatives: Vec<Permutation>,
}

impl QuotientMap {
    /// Image of `g ∈ G` in the quotient.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        let images: Vec<usize> = self
            .representatives
            .iter()
            .map(|r| {
                self.coset_of
                    .get(&r.mul(g))
                    .copied()
                    .ok_or_else(|| Error::Domain(format!("{g} is not in the group")))
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(images)
    }

    pub fn index(&self) -> usize {
        self.representatives.len()
    }
}

pub fn quotient_with_map(g: &PermGroup, n: &PermGroup) -> Result<QuotientMap> {
    if !n.is_normal_in(g) {
        return Err(Error::Domain("subgroup is not normal".into()));
    }
    let index = g.order() / n.order();
    if index > g.limits().quotient_degree_cap as u128 {
        return Err(Error::Resource(format!(
            "quotient degree {index} exceeds the cap {}",
            g.limits().quotient_degree_cap
        )));
    }
    let nel = n.elements()?;
    let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
    let mut representatives = Vec::new();
    for x in g.elements()?.iter() {
        if coset_of.contains_key(x) {
            continue;
        }
        let id = representatives.len();
        representatives.push(x.clone());
        for m in nel.iter() {
            coset_of.insert(m.mul(x), id);
        }
    }
    let mut map = QuotientMap {
        quotient: PermGroup::trivial(representatives.len()),
        coset_of,
        representatives,
    };
    let mut gens = Vec::new();
    for s in g.generators() {
        let img = map.image(s)?;
        if !img.is_identity() && !gens.contains(&img) {
            gens.push(img);
        }
    }
    let mut limits = g.limits();
    limits.element_cap = limits.element_cap.max(index as u64);
    map.quotient = PermGroup::with_limits(map.representatives.len(), gens, limits)?;
    if map.quotient.order() != index {
        return Err(Error::Consistency("coset action kernel differs from N".into()));
    }
    Ok(map)
}

/// `G/N` acting on right cosets of `N`.
pub fn quotient_group(g: &PermGroup, n: &PermGroup) -> Result<PermGroup> {
    Ok(quotient_with_map(g, n)?.quotient)
}

/// Splits `g` into commuting `p`-part and `p'`-part.
pub fn p_decomposition(g: &Permutation, p: u64) -> (Permutation, Permutation) {
    let m = g.order();
    let (pk, mprime) = split_part(m, p);
    let a = crt(1 % pk.max(1), pk, 0, mprime);
    let b = crt(0, pk, 1 % mprime.max(1), mprime);
    (g.pow(a), g.pow(b))
}

/// Exponents `(a, b)` with `g_p = g^a`, `g_{p'} = g^b` for an element of order `m`.
pub fn p_decomposition_exponents(m: u64, p: u64) -> (u64, u64) {
    let (pk, mprime) = split_part(m, p);
    (crt(1 % pk, pk, 0, mprime), crt(0, pk, 1 % mprime, mprime))
}

/// Order of `Φ(P) O_{p'}(N)` products etc.: subgroup generated by two subgroups.
pub fn join(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    g.subgroup_generated_by(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn decomposition_exponents() {
        assert_eq!(p_decomposition_exponents(6, 2), (3, 4));
        assert_eq!(p_decomposition_exponents(5, 5), (1, 0));
        assert_eq!(p_decomposition_exponents(12, 3), (4, 9));
    }

    #[test]
    fn decomposition_parts_multiply_back() {
        let g = Permutation::from_cycles(7, &[vec![1, 2, 3, 4], vec![5, 6, 7]]).unwrap();
        for p in [2, 3, 5] {
            let (a, b) = p_decomposition(&g, p);
            assert_eq!(a.mul(&b), g);
            assert_eq!(a.mul(&b), b.mul(&a));
        }
    }

    #[test]
    fn centralizer_of_three_cycle_in_s3() {
        let s3 = PermGroup::new(3, vec![cyc(3, &[1, 2]), cyc(3, &[1, 2, 3])]).unwrap();
        assert_eq!(centralizer(&s3, &cyc(3, &[1, 2, 3])).unwrap().order(), 3);
        assert!(centralizer(&s3, &cyc(3, &[1, 2])).is_ok());
    }
}
