//! Named group families as permutation groups.

use std::fmt;

use super::group::PermGroup;
use super::perm::Permutation;
use crate::arith::{gcd, is_prime, multiplicative_order};
use crate::error::{Error, Result};

/// A constructor expression such as `Frobenius(13,3)` or `Wreath(Alt(5),2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construct {
    Cyclic(usize),
    Sym(usize),
    Alt(usize),
    /// Dihedral group of order `2n` acting on `n` points.
    Dihedral(usize),
    /// `C_p ⋊ C_e` on `p` points.
    Frobenius(u64, u64),
    /// `C_n ⋊ ⟨x ↦ jx⟩` with `j` of multiplicative order `e`.
    SemidirectCyclic(u64, u64, u64),
    DirectProduct(Vec<Construct>),
    /// Imprimitive wreath product `base ≀ Sym(k)`.
    Wreath(Box<Construct>, usize),
    /// `PSL(2, q)` on the `q + 1` points of the projective line.
    Psl2(u64),
}

impl fmt::Display for Construct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construct::Cyclic(n) => write!(f, "Cyclic({n})"),
            Construct::Sym(n) => write!(f, "Sym({n})"),
            Construct::Alt(n) => write!(f, "Alt({n})"),
            Construct::Dihedral(n) => write!(f, "Dihedral({n})"),
            Construct::Frobenius(p, e) => write!(f, "Frobenius({p},{e})"),
            Construct::SemidirectCyclic(n, e, j) => write!(f, "SemidirectCyclic({n},{e},{j})"),
            Construct::DirectProduct(parts) => {
                write!(f, "DirectProduct(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            Construct::Wreath(b, k) => write!(f, "Wreath({b},{k})"),
            Construct::Psl2(q) => write!(f, "PSL2({q})"),
        }
    }
}

fn cycle(n: usize, pts: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = pts.into_iter().collect();
    Permutation::from_cycles(n, &[c]).expect("valid cycle")
}

fn affine(n: u64, mult: u64, add: u64) -> Permutation {
    // x -> mult*x + add on Z/n, point i <-> residue i-1
    let images = (0..n).map(|x| ((mult * x + add) % n) as usize).collect();
    Permutation::from_images(images).expect("affine map is a bijection")
}

impl Construct {
    /// Builds the constructor from a tag and a flat integer parameter list.
    /// Composite tags (`DirectProduct`, `Wreath`) need nested expressions; use
    /// [`Construct::parse`] for those.
    pub fn from_tag(tag: &str, params: &[u64]) -> Result<Construct> {
        let want = |k: usize| -> Result<()> {
            if params.len() != k {
                return Err(Error::Constructor(format!("{tag} takes {k} parameter(s), got {}", params.len())));
            }
            Ok(())
        };
        let c = match tag {
            "Cyclic" => {
                want(1)?;
                Construct::Cyclic(params[0] as usize)
            }
            "Sym" => {
                want(1)?;
                Construct::Sym(params[0] as usize)
            }
            "Alt" => {
                want(1)?;
                Construct::Alt(params[0] as usize)
            }
            "Dihedral" => {
                want(1)?;
                Construct::Dihedral(params[0] as usize)
            }
            "Frobenius" => {
                want(2)?;
                Construct::Frobenius(params[0], params[1])
            }
            "SemidirectCyclic" => {
                want(3)?;
                Construct::SemidirectCyclic(params[0], params[1], params[2])
            }
            "PSL2" => {
                want(1)?;
                Construct::Psl2(params[0])
            }
            _ => return Err(Error::Constructor(format!("unknown or composite constructor tag '{tag}'"))),
        };
        c.validate()?;
        Ok(c)
    }

    /// Checks the parameter constraints without building the group.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Construct::Cyclic(n) | Construct::Sym(n) | Construct::Alt(n) if n == 0 => {
                Err(Error::Constructor(format!("{self}: degree must be at least 1")))
            }
            Construct::Dihedral(n) if n < 3 => Err(Error::Constructor(format!("{self}: requires n >= 3"))),
            Construct::Frobenius(p, e) => {
                if !is_prime(p) {
                    return Err(Error::Constructor(format!("{self}: p = {p} is not prime")));
                }
                if e == 0 || (p - 1) % e != 0 {
                    return Err(Error::Constructor(format!("{self}: e = {e} does not divide p - 1 = {}", p - 1)));
                }
                Ok(())
            }
            Construct::SemidirectCyclic(n, e, j) => {
                if n < 2 {
                    return Err(Error::Constructor(format!("{self}: requires n >= 2")));
                }
                if gcd(j % n, n) != 1 {
                    return Err(Error::Constructor(format!("{self}: j = {j} is not a unit modulo {n}")));
                }
                if e == 0 || multiplicative_order(j % n, n) != e {
                    return Err(Error::Constructor(format!(
                        "{self}: j = {j} has multiplicative order {} modulo {n}, not e = {e}",
                        multiplicative_order(j % n, n)
                    )));
                }
                Ok(())
            }
            Construct::Psl2(q) if !is_prime(q) => Err(Error::Constructor(format!("{self}: q = {q} is not prime"))),
            Construct::DirectProduct(ref parts) => {
                if parts.is_empty() {
                    return Err(Error::Constructor("DirectProduct needs at least one factor".into()));
                }
                parts.iter().try_for_each(Construct::validate)
            }
            Construct::Wreath(ref b, k) => {
                if k == 0 {
                    return Err(Error::Constructor(format!("{self}: k must be at least 1")));
                }
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Parses a constructor expression, e.g. `Wreath(Alt(5),2)`.
    pub fn parse(text: &str) -> Result<Construct> {
        let mut parser = ExprParser {
            chars: text.char_indices().peekable(),
            text,
        };
        let c = parser.construct()?;
        parser.skip_ws();
        if let Some(&(i, ch)) = parser.chars.peek() {
            return Err(Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("unexpected '{ch}' after constructor"),
            });
        }
        c.validate()?;
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        match self {
            Construct::Cyclic(n) | Construct::Sym(n) | Construct::Alt(n) | Construct::Dihedral(n) => *n,
            Construct::Frobenius(p, _) => *p as usize,
            Construct::SemidirectCyclic(n, _, _) => *n as usize,
            Construct::DirectProduct(parts) => parts.iter().map(Construct::degree).sum(),
            Construct::Wreath(b, k) => b.degree() * k,
            Construct::Psl2(q) => *q as usize + 1,
        }
    }

    fn generators(&self) -> Vec<Permutation> {
        match *self {
            Construct::Cyclic(n) => {
                if n == 1 {
                    vec![]
                } else {
                    vec![cycle(n, 1..=n)]
                }
            }
            Construct::Sym(n) => {
                if n < 2 {
                    vec![]
                } else if n == 2 {
                    vec![cycle(2, [1, 2])]
                } else {
                    vec![cycle(n, [1, 2]), cycle(n, 1..=n)]
                }
            }
            Construct::Alt(n) => (1..n.saturating_sub(1)).map(|i| cycle(n, [i, i + 1, i + 2])).collect(),
            Construct::Dihedral(n) => {
                let refl = Permutation::from_images((0..n).map(|i| n - 1 - i).collect()).unwrap();
                vec![cycle(n, 1..=n), refl]
            }
            Construct::Frobenius(p, e) => {
                let a = (1..p).find(|&a| multiplicative_order(a, p) == e).unwrap();
                let mut gens = vec![affine(p, 1, 1)];
                if e > 1 {
                    gens.push(affine(p, a, 0));
                }
                gens
            }
            Construct::SemidirectCyclic(n, e, j) => {
                let mut gens = vec![affine(n, 1, 1)];
                if e > 1 {
                    gens.push(affine(n, j % n, 0));
                }
                gens
            }
            Construct::DirectProduct(ref parts) => {
                let total = self.degree();
                let mut offset = 0;
                let mut gens = Vec::new();
                for part in parts {
                    for g in part.generators() {
                        gens.push(g.embed(total, offset));
                    }
                    offset += part.degree();
                }
                gens
            }
            Construct::Wreath(ref base, k) => {
                let m = base.degree();
                let total = m * k;
                let mut gens: Vec<Permutation> = base.generators().iter().map(|g| g.embed(total, 0)).collect();
                let block_perm = |top: &Permutation| {
                    let images = (0..total).map(|x| top.image(x / m) * m + x % m).collect();
                    Permutation::from_images(images).unwrap()
                };
                for t in Construct::Sym(k).generators() {
                    gens.push(block_perm(&t));
                }
                gens
            }
            Construct::Psl2(q) => {
                // points 0..q-1 are residues, q is infinity
                let inf = q as usize;
                let translate: Vec<usize> = (0..=q).map(|z| if z == q { inf } else { ((z + 1) % q) as usize }).collect();
                let invert: Vec<usize> = (0..=q)
                    .map(|z| {
                        if z == q {
                            0
                        } else if z == 0 {
                            inf
                        } else {
                            // -1/z
                            let inv = crate::arith::inv_mod(z, q).unwrap();
                            ((q - inv) % q) as usize
                        }
                    })
                    .collect();
                vec![
                    Permutation::from_images(translate).unwrap(),
                    Permutation::from_images(invert).unwrap(),
                ]
            }
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        self.validate()?;
        PermGroup::new(self.degree(), self.generators())
    }
}

/// Builds a named group from a tag and integer parameters.
pub fn construct_named(tag: &str, params: &[u64]) -> Result<PermGroup> {
    Construct::from_tag(tag, params)?.build()
}

struct ExprParser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn err(&mut self, msg: &str) -> Error {
        let column = self.chars.peek().map(|&(i, _)| i + 1).unwrap_or(self.text.len() + 1);
        Error::Parse {
            line: 1,
            column,
            message: msg.to_string(),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_alphanumeric() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        self.skip_ws();
        match self.chars.peek() {
            Some(&(_, c)) if c == ch => {
                self.chars.next();
                Ok(())
            }
            _ => Err(self.err(&format!("expected '{ch}'"))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(self.err("expected an integer"));
        }
        s.parse().map_err(|_| self.err("integer out of range"))
    }

    fn construct(&mut self) -> Result<Construct> {
        self.skip_ws();
        let tag = self.ident();
        if tag.is_empty() {
            return Err(self.err("expected a constructor name"));
        }
        self.expect('(')?;
        let c = match tag.as_str() {
            "DirectProduct" => {
                let mut parts = vec![self.construct()?];
                loop {
                    self.skip_ws();
                    if matches!(self.chars.peek(), Some((_, ','))) {
                        self.chars.next();
                        parts.push(self.construct()?);
                    } else {
                        break;
                    }
                }
                Construct::DirectProduct(parts)
            }
            "Wreath" => {
                let base = self.construct()?;
                self.expect(',')?;
                let k = self.number()?;
                Construct::Wreath(Box::new(base), k as usize)
            }
            _ => {
                let mut params = Vec::new();
                self.skip_ws();
                if !matches!(self.chars.peek(), Some((_, ')'))) {
                    params.push(self.number()?);
                    loop {
                        self.skip_ws();
                        if matches!(self.chars.peek(), Some((_, ','))) {
                            self.chars.next();
                            params.push(self.number()?);
                        } else {
                            break;
                        }
                    }
                }
                self.expect(')')?;
                return Construct::from_tag(&tag, &params);
            }
        };
        self.expect(')')?;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        let cases: &[(&str, u128)] = &[
            ("Sym(4)", 24),
            ("Alt(5)", 60),
            ("Alt(3)", 3),
            ("Cyclic(1)", 1),
            ("Dihedral(4)", 8),
            ("Frobenius(13,3)", 39),
            ("Frobenius(5,1)", 5),
            ("SemidirectCyclic(25,4,7)", 100),
            ("PSL2(7)", 168),
            ("PSL2(11)", 660),
            ("PSL2(2)", 6),
            ("DirectProduct(Cyclic(5),Cyclic(5))", 25),
            ("Wreath(Alt(5),2)", 7200),
            ("Wreath(Cyclic(2),2)", 8),
        ];
        for (text, order) in cases {
            let g = Construct::parse(text).unwrap().build().unwrap();
            assert_eq!(g.order(), *order, "{text}");
        }
    }

    #[test]
    fn psl2_7_degree() {
        assert_eq!(construct_named("PSL2", &[7]).unwrap().degree(), 8);
    }

    #[test]
    fn constraint_violations_named() {
        let e = Construct::parse("Frobenius(13,5)").unwrap_err();
        assert!(e.to_string().contains("does not divide"), "{e}");
        let e = Construct::parse("PSL2(9)").unwrap_err();
        assert!(e.to_string().contains("not prime"), "{e}");
        let e = Construct::parse("SemidirectCyclic(25,4,6)").unwrap_err();
        assert!(e.to_string().contains("multiplicative order"), "{e}");
        assert!(Construct::parse("Frobenius(13,3) x").is_err());
    }

    #[test]
    fn display_round_trips() {
        for t in ["Wreath(Alt(5),2)", "DirectProduct(Cyclic(3),Sym(3))", "SemidirectCyclic(25,4,7)"] {
            assert_eq!(Construct::parse(t).unwrap().to_string(), t);
        }
    }
}
