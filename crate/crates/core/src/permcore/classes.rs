use std::sync::Arc;

use super::group::{ElementSet, PermGroup};
use super::perm::Permutation;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically least element of the class.
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
}

/// Conjugacy classes in canonical order: identity first, then by
/// (element order, class size, representative images).
#[derive(Debug)]
pub struct ConjugacyClassSet {
    classes: Vec<ConjugacyClass>,
    members: Vec<Vec<u32>>,
    class_of: Vec<u32>,
    elements: Arc<ElementSet>,
}

impl ConjugacyClassSet {
    pub(crate) fn compute(group: &PermGroup) -> Result<Self> {
        let elements = group.elements_arc()?;
        let n = elements.len();
        let mut assigned = vec![u32::MAX; n];
        let mut raw: Vec<(ConjugacyClass, Vec<u32>)> = Vec::new();
        for start in 0..n {
            if assigned[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            let rep = elements.as_slice()[start].clone();
            let mut members = vec![start as u32];
            assigned[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = &elements.as_slice()[members[head] as usize];
                head += 1;
                for s in group.generators() {
                    let y = x.conjugate_by(s);
                    let yi = elements.index_of(&y).expect("conjugate lies in the group");
                    if assigned[yi] == u32::MAX {
                        assigned[yi] = id;
                        members.push(yi as u32);
                    }
                }
            }
            members.sort_unstable();
            let class = ConjugacyClass {
                element_order: rep.order(),
                size: members.len() as u64,
                representative: rep,
            };
            raw.push((class, members));
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&raw[a].0, &raw[b].0);
            (!ca.representative.is_identity(), ca.element_order, ca.size, &ca.representative).cmp(&(
                !cb.representative.is_identity(),
                cb.element_order,
                cb.size,
                &cb.representative,
            ))
        });
        let mut remap = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        let class_of = assigned.into_iter().map(|c| remap[c as usize]).collect();
        let mut slots: Vec<Option<(ConjugacyClass, Vec<u32>)>> = raw.into_iter().map(Some).collect();
        let (classes, members) = order.iter().map(|&old| slots[old].take().unwrap()).unzip();
        Ok(ConjugacyClassSet {
            classes,
            members,
            class_of,
            elements,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn get(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// Class index of an element; `None` if `g` is not in the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.class_of[i] as usize)
    }

    pub fn class_of_index(&self, element_index: usize) -> usize {
        self.class_of[element_index] as usize
    }

    pub fn members(&self, class: usize) -> impl Iterator<Item = &Permutation> {
        self.members[class].iter().map(|&i| &self.elements.as_slice()[i as usize])
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }
}

impl PermGroup {
    /// Conjugacy classes, computed once and cached on the group.
    pub fn conjugacy_classes(&self) -> Result<Arc<ConjugacyClassSet>> {
        if let Some(c) = self.classes_cell().get() {
            return Ok(c.clone());
        }
        let computed = Arc::new(ConjugacyClassSet::compute(self)?);
        Ok(self.classes_cell().get_or_init(|| computed).clone())
    }

    /// Number of conjugacy classes `k(G)`.
    pub fn class_count(&self) -> Result<usize> {
        Ok(self.conjugacy_classes()?.len())
    }
}
