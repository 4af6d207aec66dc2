//! Base and strong generating set via deterministic Schreier–Sims.

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[point] = Some(Permutation::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            transversal,
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let b = self.orbit[head];
            head += 1;
            for s in &self.gens {
                let c = s.image(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().mul(s);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
        }
    }
}

/// Stabilizer chain certifying the order of a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.point) == l.point) {
                let pt = g.first_moved_point().unwrap();
                chain.levels.push(Level::new(pt, degree));
            }
        }
        for i in 0..chain.levels.len() {
            let fixes_prefix = |g: &&Permutation| chain.levels[..i].iter().all(|l| g.image(l.point) == l.point);
            let level_gens: Vec<Permutation> = gens.iter().filter(fixes_prefix).cloned().collect();
            chain.levels[i].gens = level_gens;
            chain.levels[i].rebuild_orbit(degree);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let mut jumped = None;
            'scan: for bi in 0..self.levels[iu].orbit.len() {
                let b = self.levels[iu].orbit[bi];
                for si in 0..self.levels[iu].gens.len() {
                    let s = &self.levels[iu].gens[si];
                    let c = s.image(b);
                    let ub = self.levels[iu].transversal[b].as_ref().unwrap();
                    let uc = self.levels[iu].transversal[c].as_ref().unwrap();
                    let h = ub.mul(s).mul(&uc.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.strip(h, iu + 1);
                    if j < self.levels.len() || !residue.is_identity() {
                        if j == self.levels.len() {
                            let pt = residue.first_moved_point().unwrap();
                            self.levels.push(Level::new(pt, self.degree));
                        }
                        for l in iu + 1..=j {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild_orbit(self.degree);
                        }
                        jumped = Some(j);
                        break 'scan;
                    }
                }
            }
            match jumped {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts `g` through the levels starting at `from`; returns the residue and the level reached.
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.image(level.point);
            match &level.transversal[b] {
                None => return (g, l),
                Some(u) => g = g.mul(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c.to_vec()]).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..=9usize {
            let chain = StabChain::new(n, &[cyc(n, &[1, 2]), cyc(n, &(1..=n).collect::<Vec<_>>())]);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), Some(fact));
        }
    }

    #[test]
    fn alternating_five() {
        let chain = StabChain::new(5, &[cyc(5, &[1, 2, 3, 4, 5]), cyc(5, &[3, 4, 5])]);
        assert_eq!(chain.order(), Some(60));
        assert!(chain.contains(&cyc(5, &[1, 2, 3])));
        assert!(!chain.contains(&cyc(5, &[1, 2])));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(3, &[]);
        assert_eq!(chain.order(), Some(1));
        assert!(chain.contains(&Permutation::identity(3)));
    }
}
