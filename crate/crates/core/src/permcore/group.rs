use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use super::bsgs::StabChain;
use super::classes::ConjugacyClassSet;
use super::perm::{Permutation, MAX_DEGREE};
use crate::error::{Error, Result};

/// Size caps for the enumerative algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group whose elements may be listed.
    pub element_cap: u64,
    /// Largest coset-action degree for quotients.
    pub quotient_degree_cap: usize,
    /// Largest class count accepted by the character-table builder.
    pub class_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            element_cap: 20_000,
            quotient_degree_cap: 5_000,
            class_cap: 300,
        }
    }
}

/// All elements of a group, sorted by image list, with reverse lookup.
#[derive(Debug)]
pub struct ElementSet {
    list: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl ElementSet {
    fn from_sorted(list: Vec<Permutation>) -> Self {
        let index = list.iter().enumerate().map(|(i, g)| (g.clone(), i as u32)).collect();
        ElementSet { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.list
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.list.iter()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }
}

/// A permutation group given by generators, with its order certified by a
/// stabilizer chain. Element lists and conjugacy classes are computed on
/// first use and shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: u128,
    chain: Arc<StabChain>,
    limits: Limits,
    elements: Arc<OnceLock<Arc<ElementSet>>>,
    classes: Arc<OnceLock<Arc<ConjugacyClassSet>>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Pointwise closure of `gens` under multiplication, sorted.
pub(crate) fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut list: Vec<Permutation> = seen.into_iter().collect();
    list.sort();
    list
}

/// Picks generators greedily (in the given order) until they generate all of `elements`.
pub(crate) fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for e in elements {
        if current.len() >= elements.len() {
            break;
        }
        if !current.contains(e) {
            gens.push(e.clone());
            current = closure(degree, &gens).into_iter().collect();
        }
    }
    gens
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_limits(degree, generators, Limits::default())
    }

    pub fn with_limits(degree: usize, generators: Vec<Permutation>, limits: Limits) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::Resource(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Input(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain
            .order()
            .ok_or_else(|| Error::Resource("group order overflows 128 bits".into()))?;
        Ok(PermGroup {
            degree,
            generators,
            order,
            chain: Arc::new(chain),
            limits,
            elements: Arc::new(OnceLock::new()),
            classes: Arc::new(OnceLock::new()),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Order as `u64`; every group that passes the element cap fits.
    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order).unwrap_or(u64::MAX)
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn check_cap(&self) -> Result<()> {
        if self.order > self.limits.element_cap as u128 {
            return Err(Error::Resource(format!(
                "group of order {} exceeds the element cap {}",
                self.order, self.limits.element_cap
            )));
        }
        Ok(())
    }

    pub fn elements(&self) -> Result<&ElementSet> {
        self.elements_cell().map(|e| &**e)
    }

    pub(crate) fn elements_arc(&self) -> Result<Arc<ElementSet>> {
        self.elements_cell().cloned()
    }

    fn elements_cell(&self) -> Result<&Arc<ElementSet>> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        self.check_cap()?;
        let list = closure(self.degree, &self.generators);
        if list.len() as u128 != self.order {
            return Err(Error::Consistency(format!(
                "enumerated {} elements but the stabilizer chain gives order {}",
                list.len(),
                self.order
            )));
        }
        Ok(self.elements.get_or_init(|| Arc::new(ElementSet::from_sorted(list))))
    }

    pub(crate) fn classes_cell(&self) -> &OnceLock<Arc<ConjugacyClassSet>> {
        &self.classes
    }

    /// Subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::Domain(format!("{g} is not an element of the group")));
            }
        }
        PermGroup::with_limits(self.degree, gens, self.limits)
    }

    /// Subgroup whose full (sorted) element list is already known.
    pub(crate) fn subgroup_from_elements(&self, mut elements: Vec<Permutation>) -> Result<PermGroup> {
        elements.sort();
        elements.dedup();
        let gens = greedy_generators(self.degree, &elements);
        let sub = self.subgroup(gens)?;
        if sub.order != elements.len() as u128 {
            return Err(Error::Domain("element list is not closed under multiplication".into()));
        }
        let _ = sub.elements.set(Arc::new(ElementSet::from_sorted(elements)));
        Ok(sub)
    }

    /// Subgroup generated by an arbitrary collection of elements, with a
    /// small deterministic generating set.
    pub fn subgroup_generated_by(&self, elements: &[Permutation]) -> Result<PermGroup> {
        let mut cands: Vec<Permutation> = elements.iter().filter(|g| !g.is_identity()).cloned().collect();
        cands.sort();
        cands.dedup();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::with_limits(self.degree, Vec::new(), self.limits)?;
        for c in cands {
            if !current.contains(&c) {
                gens.push(c);
                current = self.subgroup(gens.clone())?;
            }
        }
        Ok(current)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// `self` normal in `other`: every generator of `self` conjugated by every
    /// generator of `other` stays in `self`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|x| self.generators.iter().all(|h| self.contains(&h.conjugate_by(x))))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Content hash of `(degree, generator images)`.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.degree as u64).to_le_bytes());
        for g in &self.generators {
            h.update(b"|");
            for &x in g.images() {
                h.update(x.to_le_bytes());
            }
        }
        hex::encode(h.finalize())
    }

    pub fn exponent(&self) -> Result<u64> {
        Ok(self.elements()?.iter().fold(1u64, |acc, g| crate::arith::lcm(acc, g.order())))
    }
}
