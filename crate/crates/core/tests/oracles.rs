//! Values computed by deliberately naive methods, compared with the library.

use std::collections::HashSet;
use std::path::PathBuf;

use blocklab::arith::prime_divisors;
use blocklab::blocks::{k0_sigma, principal_membership_sum};
use blocklab::bounds::{condition_i, frobenius_quotient, ModuleAction};
use blocklab::harness::load_corpus;
use blocklab::{character_table, Construct, PermGroup, Permutation};

fn corpus() -> Vec<(String, PermGroup)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    load_corpus(&dir)
        .unwrap()
        .into_iter()
        .map(|s| (s.name.clone(), s.build().unwrap()))
        .collect()
}

fn build(text: &str) -> PermGroup {
    Construct::parse(text).unwrap().build().unwrap()
}

/// `k(G) = #{(x, y) : xy = yx} / |G|`.
fn commuting_class_count(g: &PermGroup) -> u64 {
    let els: Vec<&Permutation> = g.elements().unwrap().iter().collect();
    let mut pairs = 0u64;
    for x in &els {
        for y in &els {
            if x.mul(y) == y.mul(x) {
                pairs += 1;
            }
        }
    }
    pairs / els.len() as u64
}

#[test]
fn class_numbers_match_commuting_pairs() {
    for (name, g) in corpus() {
        if g.order() > 1500 {
            continue;
        }
        assert_eq!(g.class_count().unwrap() as u64, commuting_class_count(&g), "{name}");
    }
}

#[test]
fn degree_squares_sum_to_order() {
    for (name, g) in corpus() {
        let t = character_table(&g).unwrap();
        let s: u128 = t.degrees().iter().map(|&d| (d as u128) * (d as u128)).sum();
        assert_eq!(s, g.order(), "{name}");
    }
}

/// Principal-block membership by the `p`-regular sum and `σ`-invariance
/// by applying the Galois map value by value.
#[test]
fn k0_sigma_by_membership_sums() {
    for (name, g) in corpus() {
        let t = character_table(&g).unwrap();
        for p in prime_divisors(g.order() as u64) {
            let sigma = t.sigma(p);
            let degrees = t.degrees();
            let naive = (0..t.len())
                .filter(|&chi| {
                    !degrees[chi].is_multiple_of(p)
                        && principal_membership_sum(&t, chi, p)
                        && t.apply_galois(t.character(chi), &sigma).unwrap().values() == t.character(chi).values()
                })
                .count();
            assert_eq!(k0_sigma(&t, p).unwrap().count, naive, "{name} p={p}");
        }
    }
}

fn isqrt_ceil_bound(p: u64) -> u64 {
    let mut c = 0;
    while c * c < 4 * (p - 1) {
        c += 1;
    }
    c
}

#[test]
fn condition_one_count_below_1000() {
    let primes: Vec<u64> = (2..1000u64).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect();
    let naive: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| (1..p).filter(|e| (p - 1) % e == 0).any(|e| e + (p - 1) / e == isqrt_ceil_bound(p)))
        .collect();
    let lib: Vec<u64> = primes.iter().copied().filter(|&p| condition_i(p).is_some()).collect();
    assert_eq!(lib, naive);
    assert_eq!(primes.len(), 168);
    assert_eq!(lib.len(), 78);
    assert_eq!(lib.iter().filter(|&&p| p != 2).count(), 77);
}

/// Orbits by enumerating the matrix group and applying every element.
fn naive_orbits(m: &ModuleAction) -> usize {
    let p = m.p;
    let n = m.dim;
    let mul = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p).collect())
            .collect()
    };
    let eye: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut group = vec![eye.clone()];
    let mut seen: HashSet<Vec<Vec<u64>>> = HashSet::from([eye]);
    let mut i = 0;
    while i < group.len() {
        for g in &m.matrices {
            let y = mul(&group[i], g);
            if seen.insert(y.clone()) {
                group.push(y);
            }
        }
        i += 1;
    }
    let vectors: Vec<Vec<u64>> = (0..p.pow(n as u32))
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        })
        .collect();
    let mut reps: HashSet<Vec<u64>> = HashSet::new();
    for v in &vectors {
        let orbit_min = group
            .iter()
            .map(|a| (0..n).map(|j| (0..n).map(|k| v[k] * a[k][j]).sum::<u64>() % p).collect::<Vec<u64>>())
            .min()
            .unwrap();
        reps.insert(orbit_min);
    }
    reps.len()
}

#[test]
fn module_orbits_by_enumeration() {
    let cases = [ModuleAction::new(5, 2, vec![vec![vec![0, 1], vec![4, 4]]]).unwrap(),
        ModuleAction::new(5, 2, vec![vec![vec![1, 0], vec![0, 1]]]).unwrap(),
        ModuleAction::new(3, 2, vec![vec![vec![0, 1], vec![1, 0]], vec![vec![2, 0], vec![0, 1]]]).unwrap(),
        ModuleAction::new(7, 2, vec![vec![vec![2, 0], vec![0, 4]], vec![vec![0, 1], vec![1, 0]]]).unwrap()];
    let frozen = [9u64, 25, 3, 12];
    for (m, want) in cases.iter().zip(frozen) {
        assert_eq!(naive_orbits(m) as u64, want);
        assert_eq!(m.orbit_count().unwrap(), want);
    }
}

#[test]
fn local_quotient_orders() {
    for (text, p, order) in [
        ("Alt(5)", 5, 10u128),
        ("Frobenius(13,4)", 13, 52),
        ("SemidirectCyclic(25,4,7)", 5, 20),
        ("PSL2(7)", 7, 21),
        ("Sym(4)", 2, 4),
    ] {
        assert_eq!(frobenius_quotient(&build(text), p).unwrap().order(), order, "{text}");
    }
}

/// Dihedral 2-groups: σ fixes no character with irrational 2-power values.
#[test]
fn dihedral_two_groups() {
    for n in [4, 8, 16] {
        let t = character_table(&build(&format!("Dihedral({n})"))).unwrap();
        assert_eq!(k0_sigma(&t, 2).unwrap().count, 4);
        for chi in 0..t.len() {
            let f = t.rationality_flags(chi, 2).unwrap();
            assert!(!f.sigma_fixed || f.p_rational, "D{} χ{chi}", 2 * n);
        }
    }
}
