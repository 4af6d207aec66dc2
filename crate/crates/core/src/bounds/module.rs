//! Matrix actions on `F_p^n` and the orbit-count inequalities built on them.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::{multiplicative_order, valuation};
use crate::error::{Error, Result};
use crate::ff::{add_mod, rref, ExtField};
use crate::permcore::subgroups::quotient_group;
use crate::permcore::{PermGroup, Permutation};

/// Largest `p^n` enumerated by the orbit counter.
pub const VECTOR_CAP: u64 = 1_000_000;

/// `H` acting on row vectors of `F_p^n` by `v ↦ vA`, one matrix per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    pub p: u64,
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<u64>>>,
}

impl ModuleAction {
    pub fn new(p: u64, dim: usize, matrices: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Input("module dimension must be positive".into()));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(Error::Input(format!("matrix {i} is not {dim}x{dim}")));
            }
            let mut red: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
            if rref(&mut red, p).len() != dim {
                return Err(Error::Input(format!("matrix {i} is singular over F_{p}")));
            }
        }
        let matrices = matrices
            .into_iter()
            .map(|m| m.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect())
            .collect();
        Ok(ModuleAction { p, dim, matrices })
    }

    /// `p^n`, or a resource error past [`VECTOR_CAP`].
    pub fn vector_count(&self) -> Result<u64> {
        let mut n = 1u64;
        for _ in 0..self.dim {
            n = n.saturating_mul(self.p);
            if n > VECTOR_CAP {
                return Err(Error::Resource(format!("|V| = {}^{} exceeds {VECTOR_CAP}", self.p, self.dim)));
            }
        }
        Ok(n)
    }

    fn decode(&self, mut x: u64) -> Vec<u64> {
        (0..self.dim)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, v: &[u64]) -> u64 {
        v.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn apply(&self, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        let p = self.p;
        (0..self.dim)
            .map(|j| v.iter().zip(m).fold(0, |acc, (&x, row)| add_mod(acc, x * row[j] % p, p)))
            .collect()
    }

    /// Image table of each generator on encoded vectors.
    fn image_tables(&self) -> Result<Vec<Vec<u32>>> {
        let count = self.vector_count()?;
        Ok(self
            .matrices
            .iter()
            .map(|m| (0..count).map(|x| self.encode(&self.apply(m, &self.decode(x))) as u32).collect())
            .collect())
    }

    /// Orbits of the generated group on `V`, the zero vector included.
    pub fn orbit_count(&self) -> Result<u64> {
        let count = self.vector_count()? as usize;
        let tables = self.image_tables()?;
        let mut seen = vec![false; count];
        let mut orbits = 0;
        let mut stack = Vec::new();
        for start in 0..count {
            if seen[start] {
                continue;
            }
            orbits += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for t in &tables {
                    let y = t[x] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        Ok(orbits)
    }

    pub fn nonzero_orbit_count(&self) -> Result<u64> {
        Ok(self.orbit_count()? - 1)
    }

    /// The acting matrix group as permutations of the `p^n` vectors.
    pub fn linear_group(&self) -> Result<PermGroup> {
        let count = self.vector_count()? as usize;
        let gens = self
            .image_tables()?
            .into_iter()
            .map(|t| Permutation::from_images(t.into_iter().map(|x| x as usize).collect()))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(count, gens)
    }

    /// `V ⋊ H` on the `p^n` vectors, together with its translation subgroup.
    pub fn affine_group(&self) -> Result<(PermGroup, PermGroup)> {
        let count = self.vector_count()? as usize;
        let mut translations = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let images = (0..count as u64)
                .map(|x| {
                    let mut v = self.decode(x);
                    v[i] = (v[i] + 1) % self.p;
                    self.encode(&v) as usize
                })
                .collect();
            translations.push(Permutation::from_images(images)?);
        }
        let mut gens = translations.clone();
        gens.extend(self.linear_group()?.generators().iter().cloned());
        let g = PermGroup::new(count, gens)?;
        let v = g.subgroup(translations)?;
        Ok((g, v))
    }

    /// Checks that `generators[i] ↦ matrices[i]` extends to a homomorphism
    /// from the group they generate, by walking every element of the group.
    pub fn check_homomorphism(&self, group: &PermGroup, generators: &[Permutation]) -> Result<()> {
        if generators.len() != self.matrices.len() {
            return Err(Error::Input(format!(
                "{} generators for {} matrices",
                generators.len(),
                self.matrices.len()
            )));
        }
        group.check_cap()?;
        let identity = group.identity();
        let eye: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| u64::from(i == j)).collect())
            .collect();
        let mut image: HashMap<Permutation, Vec<Vec<u64>>> = HashMap::new();
        image.insert(identity.clone(), eye);
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            let mx = image[&x].clone();
            for (g, m) in generators.iter().zip(&self.matrices) {
                let y = x.mul(g);
                let my: Vec<Vec<u64>> = mx.iter().map(|row| self.apply(m, row)).collect();
                match image.get(&y) {
                    Some(existing) if *existing != my => {
                        return Err(Error::Domain("generator assignment is not a homomorphism".into()));
                    }
                    Some(_) => {}
                    None => {
                        image.insert(y.clone(), my);
                        frontier.push(y);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Matrix of multiplication by an element of order `e` in `F_{p^d}`, in a
/// polynomial basis. Irreducible over `F_p` exactly when `d` is the order of `p` mod `e`.
pub fn multiplication_matrix(p: u64, d: usize, e: u64) -> Result<Vec<Vec<u64>>> {
    let field = ExtField::new(p, d)?;
    let beta = field.element_of_order(e)?;
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut basis = field.zero();
        basis[i] = 1;
        rows.push(field.mul(&basis, &beta));
    }
    Ok(rows)
}

/// The `e`-cyclic irreducible action on `F_p^d` with `d = ord_e(p)`.
pub fn irreducible_cyclic_module(p: u64, e: u64) -> Result<ModuleAction> {
    let d = multiplicative_order(p % e, e) as usize;
    ModuleAction::new(p, d, vec![multiplication_matrix(p, d, e)?])
}

/// `C_e ≀ S_t` acting monomially on `F_p^t`, `e | p - 1`.
pub fn monomial_module(p: u64, e: u64, t: usize) -> Result<ModuleAction> {
    if !(p - 1).is_multiple_of(e) {
        return Err(Error::Domain(format!("{e} does not divide {p} - 1")));
    }
    let w = multiplication_matrix(p, 1, e)?[0][0];
    let mut diag = vec![vec![0u64; t]; t];
    for (i, row) in diag.iter_mut().enumerate() {
        row[i] = if i == 0 { w } else { 1 };
    }
    let mut mats = vec![diag];
    if t > 1 {
        let perm_matrix = |images: &dyn Fn(usize) -> usize| {
            let mut m = vec![vec![0u64; t]; t];
            for (i, row) in m.iter_mut().enumerate() {
                row[images(i)] = 1;
            }
            m
        };
        mats.push(perm_matrix(&|i| if i < 2 { 1 - i } else { i }));
        mats.push(perm_matrix(&|i| (i + 1) % t));
    }
    ModuleAction::new(p, t, mats)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(t+k-1, k-1)`: orbits of `C_e ≀ S_t` on `F_p^t` when `k = 1 + (p-1)/e`.
pub fn monomial_orbit_bound(t: u64, k: u64) -> u64 {
    binomial(t + k - 1, k - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCountReport {
    pub p: u64,
    pub rank: u32,
    pub group_order: u64,
    pub class_count: u64,
    pub quotient_class_count: u64,
    /// Conjugation orbits of `G` on `V`, identity included.
    pub orbits_on_v: u64,
    pub minimal_normal: bool,
    /// `k(G) ≥ k(G/V) + n(G,V) - 1`.
    pub class_count_inequality: bool,
    /// `n(G,V)·|G/V| ≥ |V|`.
    pub orbit_lower_bound: bool,
    /// `k(G) ≥ 2√(p-1) + 1`; `None` when the rank is 1.
    pub rank_two_bound: Option<bool>,
}

impl ClassCountReport {
    pub fn holds(&self) -> bool {
        self.class_count_inequality && self.orbit_lower_bound && self.rank_two_bound != Some(false)
    }
}

/// Class-count inequalities for `G` with an elementary abelian normal `p`-subgroup `V`
/// of `p'`-index.
pub fn class_count_checks(g: &PermGroup, v: &PermGroup, p: u64) -> Result<ClassCountReport> {
    if !v.is_subgroup_of(g) {
        return Err(Error::Domain("precondition failed: V is not a subgroup of G".into()));
    }
    if !v.is_normal_in(g) {
        return Err(Error::Domain("precondition failed: V is not normal in G".into()));
    }
    let v_order = v.order_u64();
    let rank = valuation(v_order, p);
    if v_order != p.pow(rank) || v_order == 1 {
        return Err(Error::Domain(format!("precondition failed: |V| = {v_order} is not a nontrivial power of {p}")));
    }
    if !v.is_abelian() || v.generators().iter().any(|x| x.order() > 1 && x.order() != p) {
        return Err(Error::Domain("precondition failed: V is not elementary abelian".into()));
    }
    let index = g.order_u64() / v_order;
    if index.is_multiple_of(p) {
        return Err(Error::Domain(format!("precondition failed: {p} divides |G/V| = {index}")));
    }
    let classes = g.conjugacy_classes()?;
    let k = classes.len() as u64;
    let inside: Vec<usize> = (0..classes.len())
        .filter(|&i| v.contains(&classes.get(i).representative))
        .collect();
    let n = inside.len() as u64;
    let kq = quotient_group(g, v)?.class_count()? as u64;
    let mut minimal_normal = true;
    for &i in &inside {
        if classes.get(i).representative.is_identity() {
            continue;
        }
        let members: Vec<Permutation> = classes.members(i).cloned().collect();
        if g.subgroup_generated_by(&members)?.order() != v.order() {
            minimal_normal = false;
            break;
        }
    }
    let rank_two_bound = (rank >= 2).then(|| k >= 1 && (k - 1) * (k - 1) >= 4 * (p - 1));
    Ok(ClassCountReport {
        p,
        rank,
        group_order: g.order_u64(),
        class_count: k,
        quotient_class_count: kq,
        orbits_on_v: n,
        minimal_normal,
        class_count_inequality: k + 1 >= kq + n,
        orbit_lower_bound: n * index >= v_order,
        rank_two_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::subgroups::sylow_subgroup;
    use crate::permcore::Construct;

    #[test]
    fn trivial_action_orbits() {
        let m = ModuleAction::new(5, 2, vec![vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert_eq!(m.orbit_count().unwrap(), 25);
    }

    #[test]
    fn order_three_on_f5_squared() {
        let m = irreducible_cyclic_module(5, 3).unwrap();
        assert_eq!(m.dim, 2);
        assert_eq!(m.orbit_count().unwrap(), 9);
        assert_eq!(m.linear_group().unwrap().order(), 3);
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(ModuleAction::new(3, 2, vec![vec![vec![1, 2], vec![2, 1]]]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let m = ModuleAction::new(101, 3, vec![vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]]).unwrap();
        assert!(m.orbit_count().unwrap_err().is_resource());
    }

    #[test]
    fn affine_section_checks() {
        let m = irreducible_cyclic_module(5, 3).unwrap();
        let (g, v) = m.affine_group().unwrap();
        assert_eq!(g.order(), 75);
        let r = class_count_checks(&g, &v, 5).unwrap();
        assert_eq!(r.orbits_on_v, 9);
        assert_eq!(r.quotient_class_count, 3);
        assert!(r.class_count >= 11);
        assert!(r.minimal_normal);
        assert_eq!(r.rank_two_bound, Some(true));
        assert!(r.holds());
    }

    #[test]
    fn frobenius_rank_one() {
        let g = Construct::parse("Frobenius(13,3)").unwrap().build().unwrap();
        let v = sylow_subgroup(&g, 13).unwrap();
        let r = class_count_checks(&g, &v, 13).unwrap();
        assert_eq!((r.class_count, r.quotient_class_count, r.orbits_on_v), (7, 3, 5));
        assert_eq!(r.rank_two_bound, None);
        assert!(r.class_count_inequality);
    }

    #[test]
    fn elementary_abelian_alone() {
        let g = Construct::parse("DirectProduct(Cyclic(3),Cyclic(3))").unwrap().build().unwrap();
        let r = class_count_checks(&g, &g, 3).unwrap();
        assert_eq!(r.class_count, 9);
        assert_eq!(r.orbits_on_v, 9);
        assert_eq!(r.class_count + 1, r.quotient_class_count + r.orbits_on_v);
    }

    #[test]
    fn preconditions_named() {
        let g = Construct::parse("Sym(4)").unwrap().build().unwrap();
        let s = sylow_subgroup(&g, 3).unwrap();
        let e = class_count_checks(&g, &s, 3).unwrap_err();
        assert!(e.to_string().contains("not normal"));
    }

    #[test]
    fn monomial_orbits_match_binomial() {
        for (p, e, t) in [(5u64, 2u64, 2usize), (7, 3, 3), (5, 4, 3)] {
            let m = monomial_module(p, e, t).unwrap();
            let k = 1 + (p - 1) / e;
            assert_eq!(m.orbit_count().unwrap(), monomial_orbit_bound(t as u64, k));
        }
    }

    #[test]
    fn homomorphism_walk() {
        let c3 = Construct::parse("Cyclic(3)").unwrap().build().unwrap();
        let gens = c3.generators().to_vec();
        let m = irreducible_cyclic_module(5, 3).unwrap();
        m.check_homomorphism(&c3, &gens).unwrap();
        let bad = ModuleAction::new(5, 2, vec![vec![vec![0, 1], vec![1, 0]]]).unwrap();
        assert!(bad.check_homomorphism(&c3, &gens).is_err());
    }
}
