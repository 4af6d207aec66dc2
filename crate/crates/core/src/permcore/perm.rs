use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored as its image list.
///
/// Points are 0-based internally; cycle notation and the public
/// constructors taking `one_based` images use 1-based points.
/// Permutations act on the right: `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

pub const MAX_DEGREE: usize = u16::MAX as usize;

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::Input(format!("degree {n} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::Input(format!("image {} out of range 1..{}", i + 1, n)));
            }
            if seen[i] {
                return Err(Error::Input(format!("image {} repeated", i + 1)));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Input("point 0 in 1-based image list".into()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Builds from disjoint cycles given with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::Input(format!("point {pt} outside 1..{degree}")));
                }
                if used[pt - 1] {
                    return Err(Error::Input(format!("point {pt} repeated in cycle notation")));
                }
                used[pt - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = next - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`: first `self`, then `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv.into() }
    }

    /// `x^-1 * self * x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        // point a -> x^-1 -> self -> x
        let mut out = vec![0u16; self.images.len()];
        for (a, &xa) in x.images.iter().enumerate() {
            out[xa as usize] = x.images[self.images[a] as usize];
        }
        Permutation { images: out.into() }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Signed power; negative exponents use the inverse.
    pub fn pow_i(&self, e: i64) -> Permutation {
        if e < 0 {
            self.inverse().pow(e.unsigned_abs())
        } else {
            self.pow(e as u64)
        }
    }

    pub fn commutator(&self, other: &Permutation) -> Permutation {
        // [a, b] = a^-1 b^-1 a b
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Element order: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    /// Non-trivial cycles with 0-based points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i != x as usize).map(|(i, _)| i)
    }

    /// Acts on a disjoint union of blocks: `self` applied to block `b` of width `width`.
    pub(crate) fn embed(&self, degree: usize, offset: usize) -> Permutation {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset + x as usize) as u16;
        }
        Permutation { images: images.into() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_action() {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(a.mul(&b).to_string(), "(1 3 2)");
    }

    #[test]
    fn conjugation_matches_product() {
        let g = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        let x = Permutation::from_cycles(5, &[vec![3, 4, 5]]).unwrap();
        assert_eq!(g.conjugate_by(&x), x.inverse().mul(&g).mul(&x));
    }

    #[test]
    fn repeated_point_rejected() {
        assert!(Permutation::from_cycles(3, &[vec![1, 2, 2]]).is_err());
        assert!(Permutation::from_one_based(&[1, 1, 2]).is_err());
    }

    #[test]
    fn order_is_cycle_lcm() {
        let g = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.pow(6), Permutation::identity(5));
        assert_eq!(g.pow_i(-1), g.inverse());
    }
}
