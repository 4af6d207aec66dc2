use serde::Serialize;

use crate::arith::{divisors, is_prime};
use crate::blocks::k0_sigma;
use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::permcore::subgroups::{
    centralizer_of_subgroup, frattini_of_p_group, is_cyclic, join, normalizer, p_part_of_order, p_prime_core, quotient_group,
    sylow_subgroup,
};
use crate::permcore::PermGroup;

/// Least `c` with `c² ≥ 4(p - 1)`, i.e. `⌈2√(p-1)⌉`.
pub fn ceil_bound(p: u64) -> u64 {
    let target = 4 * (p as u128 - 1);
    let mut c = (2.0 * ((p - 1) as f64).sqrt()) as u64;
    while c > 0 && (c as u128 - 1) * (c as u128 - 1) >= target {
        c -= 1;
    }
    while (c as u128) * (c as u128) < target {
        c += 1;
    }
    c
}

/// `{e + (p-1)/e : e | p-1}` sorted, and its minimum.
pub fn sp_set(p: u64) -> (Vec<u64>, u64) {
    let mut s: Vec<u64> = divisors(p - 1).into_iter().map(|e| e + (p - 1) / e).collect();
    s.sort_unstable();
    s.dedup();
    let min = s[0];
    (s, min)
}

/// The divisor pair `(e, (p-1)/e)` with `e <= (p-1)/e` realizing the bound, if any.
pub fn condition_i(p: u64) -> Option<(u64, u64)> {
    let b = ceil_bound(p);
    divisors(p - 1)
        .into_iter()
        .filter(|&e| e * e < p)
        .find(|&e| e + (p - 1) / e == b)
        .map(|e| (e, (p - 1) / e))
}

/// Shape data of `N_G(P) / Φ(P) O_{p'}(N_G(P))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusQuotient {
    pub order: u64,
    /// The Sylow `p`-subgroup of the quotient is normal of order `p`.
    pub normal_p: bool,
    /// `|Q| / p` when the quotient is `C_p ⋊ C_f` acting faithfully.
    pub complement_order: Option<u64>,
}

/// `N / Φ(P) O_{p'}(N)` with `N = N_G(P)`, as a permutation group.
pub fn frobenius_quotient(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let sylow = sylow_subgroup(g, p)?;
    if sylow.is_trivial() {
        return Err(Error::Domain(format!("{p} does not divide |G| = {}", g.order())));
    }
    let n = normalizer(g, &sylow)?;
    let phi = frattini_of_p_group(&sylow, p)?;
    let core = p_prime_core(&n, p)?;
    let m = join(&n, &phi, &core)?;
    if !m.is_normal_in(&n) {
        return Err(Error::Consistency("Φ(P)·O_{p'}(N) is not normal in N".into()));
    }
    quotient_group(&n, &m)
}

/// `Q ≅ C_p ⋊ C_f` with faithful action; returns `f`.
pub fn frobenius_shape(q: &PermGroup, p: u64) -> Result<Option<u64>> {
    let order = q.order_u64();
    if !order.is_multiple_of(p) || (order / p).is_multiple_of(p) {
        return Ok(None);
    }
    let f = order / p;
    let sylow = sylow_subgroup(q, p)?;
    if sylow.order_u64() != p || !sylow.is_normal_in(q) {
        return Ok(None);
    }
    if !q.elements()?.iter().any(|x| x.order() == f) {
        return Ok(None);
    }
    if centralizer_of_subgroup(q, &sylow)?.order() != sylow.order() {
        return Ok(None);
    }
    Ok(Some(f))
}

/// Third equality condition: `Q ≅ C_p ⋊ C_e` or `C_p ⋊ C_{(p-1)/e}`, Frobenius.
pub fn condition_iii_shape(q: &PermGroup, p: u64, e: u64) -> Result<(bool, Option<u64>)> {
    let f = frobenius_shape(q, p)?;
    let ok = matches!(f, Some(f) if f == e || f * e == p - 1);
    Ok((ok, f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Strict,
    Equality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub group: String,
    pub p: u64,
    pub sylow_order: u64,
    pub sylow_cyclic: bool,
    pub k0_sigma: u64,
    pub bound: u64,
    pub verdict: Verdict,
    pub inequality_holds: bool,
    pub cond_i: bool,
    pub cond_i_e: Option<u64>,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub frobenius_quotient: FrobeniusQuotient,
    /// `verdict == equality` iff `cond_i && cond_ii && cond_iii`.
    pub consistent: bool,
    /// `k0_sigma ∈ S_p` with a non-cyclic Sylow subgroup.
    pub sp_probe_hit: bool,
}

/// The `k_{0,σ}` bound, the three equality conditions and the verdict for `(G, p)`, `p | |G|`.
pub fn bound_verdict(name: &str, table: &CharacterTable, p: u64) -> Result<BoundReport> {
    let g = table.group();
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let sylow_order = p_part_of_order(g.order(), p) as u64;
    if sylow_order == 1 {
        return Err(Error::Domain(format!("{p} does not divide |G| = {}", g.order())));
    }
    let k = k0_sigma(table, p)?.count as u64;
    let bound = ceil_bound(p);
    let sylow = sylow_subgroup(g, p)?;
    let cond_ii = is_cyclic(&sylow)?;
    let ci = condition_i(p);
    let q = frobenius_quotient(g, p)?;
    let shape = frobenius_shape(&q, p)?;
    let fq = FrobeniusQuotient {
        order: q.order_u64(),
        normal_p: {
            let s = sylow_subgroup(&q, p)?;
            s.order_u64() == p && s.is_normal_in(&q)
        },
        complement_order: shape,
    };
    let cond_iii = match (ci, shape) {
        (Some((e, f)), Some(c)) => c == e || c == f,
        _ => false,
    };
    let verdict = if k == bound { Verdict::Equality } else { Verdict::Strict };
    let all = ci.is_some() && cond_ii && cond_iii;
    let (sp, _) = sp_set(p);
    Ok(BoundReport {
        group: name.to_string(),
        p,
        sylow_order,
        sylow_cyclic: cond_ii,
        k0_sigma: k,
        bound,
        verdict,
        inequality_holds: k >= bound,
        cond_i: ci.is_some(),
        cond_i_e: ci.map(|(e, _)| e),
        cond_ii,
        cond_iii,
        frobenius_quotient: fq,
        consistent: (verdict == Verdict::Equality) == all,
        sp_probe_hit: sp.contains(&k) && !cond_ii,
    })
}

/// `k_{0,σ}(B_0(G))` against `k_{0,σ}(B_0(N_G(P)))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizerComparison {
    pub p: u64,
    pub global: u64,
    pub local: u64,
    pub normalizer_order: u64,
    pub equal: bool,
}

pub fn normalizer_equality_check(table: &CharacterTable, p: u64) -> Result<NormalizerComparison> {
    let g = table.group();
    let sylow = sylow_subgroup(g, p)?;
    if sylow.is_trivial() {
        return Err(Error::Domain(format!("{p} does not divide |G| = {}", g.order())));
    }
    let n = normalizer(g, &sylow)?;
    let nt = character_table(&n)?;
    let global = k0_sigma(table, p)?.count as u64;
    let local = k0_sigma(&nt, p)?.count as u64;
    Ok(NormalizerComparison {
        p,
        global,
        local,
        normalizer_order: n.order_u64(),
        equal: global == local,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Construct;

    #[test]
    fn bounds_by_hand() {
        assert_eq!(ceil_bound(2), 2);
        assert_eq!(ceil_bound(5), 4);
        assert_eq!(ceil_bound(13), 7);
        assert_eq!(ceil_bound(3), 3);
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(sp_set(5), (vec![4, 5], 4));
        assert_eq!(sp_set(11), (vec![7, 11], 7));
        assert_eq!(sp_set(23), (vec![13, 23], 13));
    }

    #[test]
    fn condition_one() {
        assert_eq!(condition_i(5), Some((2, 2)));
        assert_eq!(condition_i(17), Some((4, 4)));
        assert_eq!(condition_i(23), None);
        assert_eq!(condition_i(7), Some((2, 3)));
    }

    #[test]
    fn quotients() {
        let a5 = Construct::parse("Alt(5)").unwrap().build().unwrap();
        let q = frobenius_quotient(&a5, 5).unwrap();
        assert_eq!(q.order(), 10);
        assert_eq!(condition_iii_shape(&q, 5, 2).unwrap(), (true, Some(2)));

        let sd = Construct::parse("SemidirectCyclic(25,4,7)").unwrap().build().unwrap();
        let q = frobenius_quotient(&sd, 5).unwrap();
        assert_eq!(q.order(), 20);
        assert!(!condition_iii_shape(&q, 5, 2).unwrap().0);

        let c10 = Construct::parse("Cyclic(10)").unwrap().build().unwrap();
        assert!(!condition_iii_shape(&c10, 5, 2).unwrap().0);
    }

    fn verdict(text: &str, p: u64) -> BoundReport {
        let g = Construct::parse(text).unwrap().build().unwrap();
        bound_verdict(text, &character_table(&g).unwrap(), p).unwrap()
    }

    #[test]
    fn equality_instances() {
        let r = verdict("Alt(5)", 5);
        assert_eq!((r.k0_sigma, r.bound, r.verdict), (4, 4, Verdict::Equality));
        assert!(r.cond_i && r.cond_ii && r.cond_iii && r.consistent);
        assert_eq!(r.cond_i_e, Some(2));

        let r = verdict("PSL2(7)", 7);
        assert_eq!((r.k0_sigma, r.bound, r.verdict), (5, 5, Verdict::Equality));
        assert_eq!(r.frobenius_quotient.order, 21);
        assert!(r.consistent);
    }

    #[test]
    fn strict_instances() {
        let r = verdict("Sym(4)", 2);
        assert_eq!((r.k0_sigma, r.bound, r.verdict), (4, 2, Verdict::Strict));
        assert!(!r.cond_ii && r.consistent);

        let r = verdict("SemidirectCyclic(25,4,7)", 5);
        assert_eq!((r.k0_sigma, r.verdict), (5, Verdict::Strict));
        assert!(r.cond_ii && !r.cond_iii && r.consistent);
        assert_eq!(r.frobenius_quotient.order, 20);

        let r = verdict("DirectProduct(Cyclic(5),Cyclic(5))", 5);
        assert_eq!(r.k0_sigma, 25);
        assert!(r.consistent && !r.sp_probe_hit);
    }

    #[test]
    fn normalizer_comparison() {
        let g = Construct::parse("Alt(5)").unwrap().build().unwrap();
        let c = normalizer_equality_check(&character_table(&g).unwrap(), 5).unwrap();
        assert_eq!((c.global, c.local, c.normalizer_order), (4, 4, 10));
        assert!(c.equal);
    }
}
