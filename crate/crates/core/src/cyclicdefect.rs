//! Principal blocks with cyclic Sylow `p`-subgroup: orbit sums `η_λ` of
//! characters of `P`, the section-wise product `χ * η_λ`, and the split of
//! the principal block into exceptional and non-exceptional characters.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::is_prime;
use crate::blocks::{block_partition, k0_sigma};
use crate::chartab::{character_table, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::permcore::subgroups::{centralizer_of_subgroup, cyclic_generator, normalizer, p_decomposition_exponents, sylow_subgroup};
use crate::permcore::{PermGroup, Permutation};
use crate::Cyc;

/// Data attached to a cyclic Sylow subgroup `P = ⟨x⟩` of `G`.
#[derive(Clone, Debug)]
pub struct CyclicSylow {
    pub p: u64,
    /// `|P| = p^a`.
    pub order: u64,
    pub sylow: PermGroup,
    /// Least element of `P` of order `|P|`.
    pub generator: Permutation,
    pub normalizer: PermGroup,
    pub centralizer: PermGroup,
    /// Exponents `r` with `x^y = x^r` for `y ∈ N_G(P)`, sorted; a subgroup of `(ℤ/|P|)^×`.
    pub action: Vec<u64>,
}

impl CyclicSylow {
    pub fn new(g: &PermGroup, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        let sylow = sylow_subgroup(g, p)?;
        if sylow.is_trivial() {
            return Err(Error::Domain(format!("{p} does not divide the group order")));
        }
        let generator = cyclic_generator(&sylow)?
            .ok_or_else(|| Error::Domain(format!("the Sylow {p}-subgroup is not cyclic")))?;
        let order = sylow.order_u64();
        let normalizer = normalizer(g, &sylow)?;
        let centralizer = centralizer_of_subgroup(g, &sylow)?;
        let powers: Vec<Permutation> = (0..order).map(|i| generator.pow(i)).collect();
        let mut action = BTreeSet::new();
        for y in normalizer.elements()?.iter() {
            let c = generator.conjugate_by(y);
            let r = powers.iter().position(|z| *z == c).ok_or_else(|| {
                Error::Consistency("normalizer element does not preserve the Sylow subgroup".into())
            })?;
            action.insert(r as u64);
        }
        Ok(CyclicSylow {
            p,
            order,
            sylow,
            generator,
            normalizer,
            centralizer,
            action: action.into_iter().collect(),
        })
    }

    /// `e = |N_G(P) : C_G(P)|`.
    pub fn inertial_index(&self) -> u64 {
        self.action.len() as u64
    }

    /// Orbits of `N_G(P)` on the nontrivial characters `λ_k: x^i ↦ ξ^{ki}` of `P`,
    /// each sorted, ordered by least label.
    pub fn lambda_orbits(&self) -> Vec<Vec<u64>> {
        let mut seen = vec![false; self.order as usize];
        let mut orbits = Vec::new();
        for k in 1..self.order {
            if seen[k as usize] {
                continue;
            }
            let mut orbit: Vec<u64> = self.action.iter().map(|&r| k * r % self.order).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &m in &orbit {
                seen[m as usize] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// `η_λ(x^i) = Σ_{r} ξ_{|P|}^{k r i}` for `λ = λ_k`.
    pub fn eta(&self, k: u64, i: u64) -> Result<Cyc> {
        if k.is_multiple_of(self.order) {
            return Err(Error::Domain("η is defined for nontrivial characters of P only".into()));
        }
        Ok(Cyc::from_exponent_sum(
            self.order,
            self.action
                .iter()
                .map(|&r| (k * r % self.order * i % self.order, BigRational::from_integer(1.into()))),
        ))
    }

    /// All values `η_λ(x^i)`, `0 <= i < |P|`.
    pub fn eta_values(&self, k: u64) -> Result<Vec<Cyc>> {
        (0..self.order).map(|i| self.eta(k, i)).collect()
    }
}

/// `G`-classes of `p`-elements with representatives `x^i ∈ P`, and the section of each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionDecomposition {
    /// `(class index, exponent i)` with `x^i` the representative, by increasing `i`.
    pub transversal: Vec<(usize, u64)>,
    /// For every class, the transversal entry conjugate to the `p`-part of its elements.
    pub section_of: Vec<usize>,
}

pub fn section_decomposition(table: &CharacterTable, cs: &CyclicSylow) -> Result<SectionDecomposition> {
    let classes = table.classes();
    let mut transversal: Vec<(usize, u64)> = Vec::new();
    let mut acc = table.group().identity();
    for i in 0..cs.order {
        let k = classes.class_of(&acc).ok_or_else(|| Error::Consistency("Sylow element outside the group".into()))?;
        if !transversal.iter().any(|&(c, _)| c == k) {
            transversal.push((k, i));
        }
        acc = acc.mul(&cs.generator);
    }
    let section_of = classes
        .classes()
        .iter()
        .enumerate()
        .map(|(l, c)| {
            let (a, _) = p_decomposition_exponents(c.element_order, cs.p);
            let k = table.power_class(l, a as i64);
            transversal
                .iter()
                .position(|&(c, _)| c == k)
                .ok_or_else(|| Error::Consistency(format!("p-part of class {l} is not conjugate into P")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SectionDecomposition { transversal, section_of })
}

/// `χ * η_λ = Σ_{x ∈ 𝕊} η_λ(x) 1_{S(x)} χ`.
pub fn star_with_eta(table: &CharacterTable, cs: &CyclicSylow, sections: &SectionDecomposition, chi: &ClassFunction, k: u64) -> Result<ClassFunction> {
    let eta_at: Vec<Cyc> = sections
        .transversal
        .iter()
        .map(|&(_, i)| cs.eta(k, i))
        .collect::<Result<_>>()?;
    let values = chi
        .values()
        .iter()
        .enumerate()
        .map(|(l, v)| v * &eta_at[sections.section_of[l]])
        .collect();
    table.class_function(values)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExNexSplit {
    /// `p`-rational members of the principal block.
    pub nex: Vec<usize>,
    pub ex: Vec<usize>,
    pub lambda_orbits: Vec<Vec<u64>>,
}

/// The exceptional / non-exceptional split of the principal block.
///
/// With a single `λ`-orbit the exceptional character is itself `p`-rational and
/// the rationality criterion cannot separate it, so that case is rejected.
pub fn split_ex_nex(table: &CharacterTable, cs: &CyclicSylow) -> Result<ExNexSplit> {
    let orbits = cs.lambda_orbits();
    if orbits.len() < 2 {
        return Err(Error::Domain(format!(
            "N_G(P) is transitive on the nontrivial characters of P (e = {}); exceptional characters are p-rational",
            cs.inertial_index()
        )));
    }
    let blocks = block_partition(table, cs.p)?;
    let mut nex = Vec::new();
    let mut ex = Vec::new();
    for &m in &blocks.principal().members {
        if table.rationality_flags(m, cs.p)?.p_rational {
            nex.push(m);
        } else {
            ex.push(m);
        }
    }
    Ok(ExNexSplit {
        nex,
        ex,
        lambda_orbits: orbits,
    })
}

/// The unique non-`p`-rational constituent of `χ * η_λ` for a `p`-rational `χ`.
pub fn exceptional_for_label(table: &CharacterTable, cs: &CyclicSylow, sections: &SectionDecomposition, chi: usize, k: u64) -> Result<usize> {
    if !table.rationality_flags(chi, cs.p)?.p_rational {
        return Err(Error::Domain(format!("character {chi} is not {}-rational", cs.p)));
    }
    let star = star_with_eta(table, cs, sections, table.character(chi), k)?;
    let mult = table.decompose(&star)?;
    let mut found = Vec::new();
    for (i, m) in mult.iter().enumerate() {
        let r = m
            .to_rational()
            .filter(|r| r.is_integer())
            .ok_or_else(|| Error::Consistency(format!("χ*η has non-integral multiplicity {m}")))?;
        if r != BigRational::from_integer(BigInt::from(0)) && !table.rationality_flags(i, cs.p)?.p_rational {
            found.push(i);
        }
    }
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Consistency(format!("χ{chi} * η_λ{k} has no non-p-rational constituent"))),
        many => Err(Error::Consistency(format!(
            "χ{chi} * η_λ{k} has {} non-p-rational constituents",
            many.len()
        ))),
    }
}

/// Counts on one side of the local-global comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSide {
    pub block_size: usize,
    pub k0_sigma: usize,
    pub ex: usize,
    pub nex: usize,
    pub all_almost_p_rational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalGlobalReport {
    pub p: u64,
    pub sylow_order: u64,
    pub inertial_index: u64,
    pub global: BlockSide,
    pub local: BlockSide,
    /// Base character of the labelling (row index, the trivial character by default).
    pub base: usize,
    /// `(λ label, exceptional row)` for the least label in every orbit.
    pub labels: Vec<(u64, usize)>,
    /// All of `B_0(G)` almost `p`-rational iff `|P| = p`.
    pub rationality_matches_order: bool,
    pub consistent: bool,
}

fn block_side(table: &CharacterTable, cs: &CyclicSylow) -> Result<BlockSide> {
    let split = split_ex_nex(table, cs)?;
    let members: Vec<usize> = split.nex.iter().chain(&split.ex).copied().collect();
    let mut all_almost = true;
    for &m in &members {
        all_almost &= table.rationality_flags(m, cs.p)?.almost_p_rational;
    }
    Ok(BlockSide {
        block_size: members.len(),
        k0_sigma: k0_sigma(table, cs.p)?.count,
        ex: split.ex.len(),
        nex: split.nex.len(),
        all_almost_p_rational: all_almost,
    })
}

pub fn local_global_report(table: &CharacterTable, p: u64, base: usize) -> Result<LocalGlobalReport> {
    let cs = CyclicSylow::new(table.group(), p)?;
    let global = block_side(table, &cs)?;
    let n_table = character_table(&cs.normalizer)?;
    let cs_local = CyclicSylow::new(&cs.normalizer, p)?;
    let local = block_side(&n_table, &cs_local)?;
    let sections = section_decomposition(table, &cs)?;
    let orbits = cs.lambda_orbits();
    let mut labels = Vec::new();
    for orbit in &orbits {
        let k = orbit[0];
        labels.push((k, exceptional_for_label(table, &cs, &sections, base, k)?));
    }
    let distinct: BTreeSet<usize> = labels.iter().map(|&(_, c)| c).collect();
    let rationality_matches_order = global.all_almost_p_rational == (cs.order == p);
    let consistent = global.block_size == local.block_size
        && global.k0_sigma == local.k0_sigma
        && global.ex == orbits.len()
        && distinct.len() == orbits.len()
        && rationality_matches_order;
    Ok(LocalGlobalReport {
        p,
        sylow_order: cs.order,
        inertial_index: cs.inertial_index(),
        global,
        local,
        base,
        labels,
        rationality_matches_order,
        consistent,
    })
}

/// `k` with `λ_k^σ = λ_{k'}`: multiplication by the `σ` exponent modulo `|P|`.
pub fn sigma_on_label(cs: &CyclicSylow, table: &CharacterTable, k: u64) -> u64 {
    let j = table.sigma(cs.p).exponent() % cs.order;
    k * j % cs.order
}
