//! `p`-blocks of characters by central-character linkage in `F_{p^d}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::arith::{inv_mod, is_prime, multiplicative_order, split_part, valuation};
use crate::chartab::{degree_of, CharacterTable};
use crate::error::{Error, Result};
use crate::ff::{ExtElem, ExtField};
use crate::Cyc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Character indices, increasing.
    pub members: Vec<usize>,
    pub defect: u32,
    pub height_zero: Vec<usize>,
    pub is_principal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub p: u64,
    /// Block 0 is the principal block.
    pub blocks: Vec<Block>,
    pub block_of: Vec<usize>,
}

impl BlockPartition {
    pub fn principal(&self) -> &Block {
        &self.blocks[0]
    }
}

/// Reduction of cyclotomic integers modulo a fixed prime over `p`.
struct Reducer {
    field: ExtField,
    /// Fixed element of order `E'`.
    beta: ExtElem,
    e_prime: u64,
}

impl Reducer {
    fn new(p: u64, exponent: u64) -> Result<Self> {
        let (_, e_prime) = split_part(exponent, p);
        let d = if e_prime == 1 { 1 } else { multiplicative_order(p % e_prime, e_prime) as usize };
        let field = ExtField::new(p, d)?;
        let beta = field.element_of_order(e_prime)?;
        Ok(Reducer { field, beta, e_prime })
    }

    fn reduce(&self, v: &Cyc) -> Result<ExtElem> {
        if !v.is_algebraic_integer() {
            return Err(Error::Consistency(format!("central character value {v} is not an algebraic integer")));
        }
        let p = self.field.characteristic();
        let c = v.conductor_bound();
        let (cp, c_prime) = split_part(c, p);
        if !self.e_prime.is_multiple_of(c_prime) {
            return Err(Error::Consistency(format!("value conductor {c} outside the table field")));
        }
        // ξ_c = ξ_{c_p}^u ξ_{c'}^v with v ≡ c_p⁻¹ (mod c'); ξ_{c_p} ↦ 1
        let v_exp = if c_prime == 1 { 0 } else { inv_mod(cp % c_prime, c_prime).unwrap() };
        let root = self.field.pow_u64(&self.beta, self.e_prime / c_prime);
        let image_of_xi = self.field.pow_u64(&root, v_exp);
        let mut acc = self.field.zero();
        let mut power = self.field.one();
        for coeff in v.coefficients() {
            let k = coeff.to_integer() % BigInt::from(p);
            let k = ((k + BigInt::from(p)) % BigInt::from(p)).to_u64().unwrap();
            if k != 0 {
                acc = self.field.add(&acc, &self.field.scale(&power, k));
            }
            power = self.field.mul(&power, &image_of_xi);
        }
        Ok(acc)
    }
}

/// `ω_χ(K) = |K| χ(x_K) / χ(1)`.
pub fn central_character(table: &CharacterTable, chi: usize) -> Vec<Cyc> {
    let row = table.character(chi);
    let deg = BigRational::from_integer(degree_of(row).into());
    table
        .classes()
        .classes()
        .iter()
        .zip(row.values())
        .map(|(c, v)| v.scale(&(BigRational::from_integer(c.size.into()) / &deg)))
        .collect()
}

pub fn block_partition(table: &CharacterTable, p: u64) -> Result<BlockPartition> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let order = table.group().order_u64();
    let a = valuation(order, p);
    let r = table.len();
    let degrees = table.degrees();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    if a == 0 {
        groups = (0..r).map(|i| vec![i]).collect();
    } else {
        let reducer = Reducer::new(p, table.exponent())?;
        let mut index: HashMap<Vec<ExtElem>, usize> = HashMap::new();
        for chi in 0..r {
            let key = central_character(table, chi)
                .iter()
                .map(|w| reducer.reduce(w))
                .collect::<Result<Vec<_>>>()?;
            let next = groups.len();
            let b = *index.entry(key).or_insert(next);
            if b == next {
                groups.push(Vec::new());
            }
            groups[b].push(chi);
        }
    }
    // the trivial character is row 0, so the first group found is principal
    let mut block_of = vec![0usize; r];
    let blocks: Vec<Block> = groups
        .into_iter()
        .enumerate()
        .map(|(bi, members)| {
            for &m in &members {
                block_of[m] = bi;
            }
            let min_h = members.iter().map(|&m| valuation(degrees[m], p)).min().unwrap();
            Block {
                defect: a - min_h,
                height_zero: members.iter().copied().filter(|&m| valuation(degrees[m], p) == min_h).collect(),
                is_principal: members.contains(&0),
                members,
            }
        })
        .collect();
    if !blocks[0].is_principal {
        return Err(Error::Consistency("trivial character is not in block 0".into()));
    }
    Ok(BlockPartition { p, blocks, block_of })
}

/// `Σ_{p-regular K} |K| χ(x_K) ≠ 0`, the principal-block criterion.
pub fn principal_membership_sum(table: &CharacterTable, chi: usize, p: u64) -> bool {
    let row = table.character(chi);
    let total: Cyc = table
        .classes()
        .classes()
        .iter()
        .zip(row.values())
        .filter(|(c, _)| c.element_order % p != 0)
        .map(|(c, v)| v.scale(&BigRational::from_integer(c.size.into())))
        .sum();
    !total.is_zero()
}

/// `k_{0,σ}(B_0)`: principal-block characters of `p'`-degree fixed by `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K0Sigma {
    pub count: usize,
    /// `p ∤ |G|`; the count is 1 by convention.
    pub degenerate: bool,
}

pub fn k0_sigma(table: &CharacterTable, p: u64) -> Result<K0Sigma> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if !table.group().order_u64().is_multiple_of(p) {
        return Ok(K0Sigma {
            count: 1,
            degenerate: true,
        });
    }
    let blocks = block_partition(table, p)?;
    Ok(K0Sigma {
        count: k0_sigma_in(table, &blocks.blocks[0], p)?,
        degenerate: false,
    })
}

/// Members of `block` with `p ∤ χ(1)` and `χ^σ = χ`.
pub fn k0_sigma_in(table: &CharacterTable, block: &Block, p: u64) -> Result<usize> {
    let perm = table.galois_permutation(&table.sigma(p))?;
    let degrees = table.degrees();
    Ok(block
        .members
        .iter()
        .filter(|&&m| !degrees[m].is_multiple_of(p) && perm[m] == m)
        .count())
}

/// Orbits of `σ` on the members of a block.
pub fn sigma_orbits(table: &CharacterTable, block: &Block, p: u64) -> Result<Vec<Vec<usize>>> {
    let perm = table.galois_permutation(&table.sigma(p))?;
    let mut seen = vec![false; table.len()];
    let mut orbits = Vec::new();
    for &m in &block.members {
        if seen[m] {
            continue;
        }
        let mut orbit = vec![m];
        seen[m] = true;
        let mut x = perm[m];
        while x != m {
            seen[x] = true;
            orbit.push(x);
            x = perm[x];
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// `Σ_{χ∈B} χ(x) conj(χ(y)) = 0` for every block, `x` p-regular, `y` p-singular.
pub fn verify_block_orthogonality(table: &CharacterTable, blocks: &BlockPartition) -> Result<()> {
    let p = blocks.p;
    let classes = table.classes().classes();
    for (bi, b) in blocks.blocks.iter().enumerate() {
        for (x, cx) in classes.iter().enumerate() {
            if cx.element_order % p == 0 {
                continue;
            }
            for (y, cy) in classes.iter().enumerate() {
                if cy.element_order % p != 0 {
                    continue;
                }
                let ybar = table.inverse_class(y);
                let s: Cyc = b
                    .members
                    .iter()
                    .map(|&m| table.character(m).value(x) * table.character(m).value(ybar))
                    .sum();
                if !s.is_zero() {
                    return Err(Error::Consistency(format!(
                        "block {bi} fails orthogonality at classes {x}, {y}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Plain-text block report.
pub fn render_blocks(table: &CharacterTable, blocks: &BlockPartition) -> Result<String> {
    use std::fmt::Write;
    let degrees = table.degrees();
    let mut out = String::new();
    for (i, b) in blocks.blocks.iter().enumerate() {
        let degs: Vec<String> = b.members.iter().map(|&m| degrees[m].to_string()).collect();
        let orbits = sigma_orbits(table, b, blocks.p)?;
        let orbit_text: Vec<String> = orbits
            .iter()
            .map(|o| format!("({})", o.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        let _ = writeln!(
            out,
            "block {i}{}: defect {}, members {:?}, degrees [{}], sigma orbits {}",
            if b.is_principal { " (principal)" } else { "" },
            b.defect,
            b.members,
            degs.join(", "),
            orbit_text.join("")
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::permcore::Construct;

    fn table(text: &str) -> CharacterTable {
        character_table(&Construct::parse(text).unwrap().build().unwrap()).unwrap()
    }

    fn block_degrees(t: &CharacterTable, b: &Block) -> Vec<u64> {
        let d = t.degrees();
        b.members.iter().map(|&m| d[m]).collect()
    }

    #[test]
    fn alt5_blocks() {
        let t = table("Alt(5)");
        let b5 = block_partition(&t, 5).unwrap();
        assert_eq!(b5.blocks.len(), 2);
        assert_eq!(block_degrees(&t, &b5.blocks[0]), vec![1, 3, 3, 4]);
        assert_eq!(b5.blocks[0].defect, 1);
        assert_eq!(b5.blocks[0].height_zero.len(), 4);
        assert_eq!(block_degrees(&t, &b5.blocks[1]), vec![5]);
        assert_eq!(b5.blocks[1].defect, 0);

        let b2 = block_partition(&t, 2).unwrap();
        assert_eq!(block_degrees(&t, &b2.blocks[0]), vec![1, 3, 3, 5]);
        assert_eq!(block_degrees(&t, &b2.blocks[1]), vec![4]);
        assert_eq!(b2.blocks[1].defect, 0);
        assert_eq!(k0_sigma(&t, 5).unwrap().count, 4);
    }

    #[test]
    fn membership_sum_agrees() {
        let t = table("Alt(5)");
        let five = t.degrees().iter().position(|&d| d == 5).unwrap();
        let four = t.degrees().iter().position(|&d| d == 4).unwrap();
        assert!(principal_membership_sum(&t, 0, 3));
        assert!(!principal_membership_sum(&t, five, 5));
        assert!(!principal_membership_sum(&t, four, 2));
    }

    #[test]
    fn cyclic_single_block() {
        let t = table("Cyclic(9)");
        let b = block_partition(&t, 3).unwrap();
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.blocks[0].defect, 2);
        assert_eq!(b.blocks[0].height_zero.len(), 9);
    }

    #[test]
    fn coprime_prime_is_degenerate() {
        let t = table("Sym(3)");
        let b = block_partition(&t, 5).unwrap();
        assert_eq!(b.blocks.len(), 3);
        assert!(k0_sigma(&t, 5).unwrap().degenerate);
    }
}
