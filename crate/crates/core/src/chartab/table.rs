use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dixon::{irreducible_characters, power_maps, DixonData};
use crate::arith::lcm;
use crate::cyclo::{sigma_exponent, GaloisMap};
use crate::error::{Error, Result};
use crate::permcore::{ConjugacyClassSet, PermGroup, Permutation};
use crate::Cyc;

/// A class function on a group, tied to the table it was built against.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    context: u64,
    values: Vec<Cyc>,
}

impl ClassFunction {
    pub fn values(&self) -> &[Cyc] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyc {
        &self.values[class]
    }

    /// Value on the identity class.
    pub fn degree(&self) -> &Cyc {
        &self.values[0]
    }

    pub fn context(&self) -> u64 {
        self.context
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.context != other.context || self.values.len() != other.values.len() {
            return Err(Error::Domain("class functions belong to different tables".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            context: self.context,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            context: self.context,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    /// Pointwise product (tensor product for characters).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        Ok(ClassFunction {
            context: self.context,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn scale(&self, c: &Cyc) -> ClassFunction {
        ClassFunction {
            context: self.context,
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }

    /// Value-wise image under a Galois automorphism.
    pub fn apply_galois(&self, map: &GaloisMap) -> Result<ClassFunction> {
        Ok(ClassFunction {
            context: self.context,
            values: self.values.iter().map(|v| map.apply(v)).collect::<Result<_>>()?,
        })
    }

    /// Least common conductor of the values.
    pub fn conductor(&self) -> u64 {
        self.values.iter().fold(1, |acc, v| lcm(acc, v.conductor()))
    }
}

/// `(p-rational, almost p-rational, σ-fixed)` for a character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalityFlags {
    pub p_rational: bool,
    pub almost_p_rational: bool,
    pub sigma_fixed: bool,
}

/// The ordinary character table of a permutation group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: PermGroup,
    classes: Arc<ConjugacyClassSet>,
    exponent: u64,
    context: u64,
    characters: Vec<ClassFunction>,
    power_maps: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
    dixon: Option<DixonData>,
}

fn value_key(v: &Cyc) -> (u64, Vec<BigRational>) {
    let r = v.reduced();
    (r.conductor_bound(), r.coefficients().to_vec())
}

fn compare_rows(a: &[Cyc], b: &[Cyc]) -> Ordering {
    let trivial = |row: &[Cyc]| row.iter().all(|v| *v == Cyc::one());
    let da = value_key(&a[0]);
    let db = value_key(&b[0]);
    da.cmp(&db)
        .then_with(|| (!trivial(a)).cmp(&!trivial(b)))
        .then_with(|| {
            for (x, y) in a.iter().zip(b) {
                let o = value_key(x).cmp(&value_key(y));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
}

fn context_of(group: &PermGroup) -> u64 {
    u64::from_str_radix(&group.fingerprint()[..16], 16).unwrap()
}

impl CharacterTable {
    /// Computes the table by Dixon–Schneider.
    pub fn compute(group: &PermGroup) -> Result<CharacterTable> {
        let classes = group.conjugacy_classes()?;
        if classes.len() > group.limits().class_cap {
            return Err(Error::Resource(format!(
                "{} classes exceed the class cap {}",
                classes.len(),
                group.limits().class_cap
            )));
        }
        let exponent = classes.classes().iter().fold(1, |acc, c| lcm(acc, c.element_order));
        let (rows, dixon) = irreducible_characters(group, &classes, exponent)?;
        Self::assemble(group.clone(), classes, exponent, rows, Some(dixon))
    }

    /// Rebuilds a table from stored rows (already in canonical class order),
    /// re-checking the cheap invariants.
    pub fn from_rows(group: &PermGroup, rows: Vec<Vec<Cyc>>) -> Result<CharacterTable> {
        let classes = group.conjugacy_classes()?;
        let exponent = classes.classes().iter().fold(1, |acc, c| lcm(acc, c.element_order));
        if rows.len() != classes.len() || rows.iter().any(|r| r.len() != classes.len()) {
            return Err(Error::Consistency("stored table does not match the class count".into()));
        }
        let t = Self::assemble(group.clone(), classes, exponent, rows, None)?;
        t.verify_orthogonality()?;
        Ok(t)
    }

    fn assemble(
        group: PermGroup,
        classes: Arc<ConjugacyClassSet>,
        exponent: u64,
        mut rows: Vec<Vec<Cyc>>,
        dixon: Option<DixonData>,
    ) -> Result<CharacterTable> {
        let context = context_of(&group);
        let mut dixon = dixon;
        if let Some(d) = dixon.as_mut() {
            let mut idx: Vec<usize> = (0..rows.len()).collect();
            idx.sort_by(|&a, &b| compare_rows(&rows[a], &rows[b]));
            let mut taken: Vec<Option<Vec<Cyc>>> = rows.into_iter().map(Some).collect();
            rows = idx.iter().map(|&i| taken[i].take().unwrap()).collect();
            d.omega = idx.iter().map(|&i| d.omega[i].clone()).collect();
        }
        let mut sum_sq = BigRational::zero();
        for row in &rows {
            let d = row[0]
                .to_rational()
                .filter(|d| d.is_integer() && d.is_positive())
                .ok_or_else(|| Error::Consistency("character degree is not a positive integer".into()))?;
            sum_sq += &d * &d;
        }
        if sum_sq != BigRational::from_integer(BigInt::from(group.order())) {
            return Err(Error::Consistency(format!(
                "squared degrees sum to {sum_sq}, not |G| = {}",
                group.order()
            )));
        }
        let inverse_class = classes
            .classes()
            .iter()
            .map(|c| classes.class_of(&c.representative.inverse()).unwrap())
            .collect();
        let power_maps = power_maps(&classes);
        let characters = rows
            .into_iter()
            .map(|values| ClassFunction { context, values })
            .collect();
        Ok(CharacterTable {
            group,
            classes,
            exponent,
            context,
            characters,
            power_maps,
            inverse_class,
            dixon,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassSet {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Least common conductor of all character values.
    pub fn conductor(&self) -> u64 {
        self.characters.iter().fold(1, |acc, c| lcm(acc, c.conductor()))
    }

    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.characters[i]
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(degree_of).collect()
    }

    pub fn dixon_data(&self) -> Option<&DixonData> {
        self.dixon.as_ref()
    }

    pub fn context(&self) -> u64 {
        self.context
    }

    /// Class of `g_l^t`.
    pub fn power_class(&self, class: usize, t: i64) -> usize {
        let m = self.power_maps[class].len() as i64;
        self.power_maps[class][t.rem_euclid(m) as usize]
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    /// A class function from explicit values in class order.
    pub fn class_function(&self, values: Vec<Cyc>) -> Result<ClassFunction> {
        if values.len() != self.class_count() {
            return Err(Error::Domain(format!(
                "{} values given for {} classes",
                values.len(),
                self.class_count()
            )));
        }
        Ok(ClassFunction {
            context: self.context,
            values,
        })
    }

    /// The class function with value `f(g)` computed from a representative.
    pub fn class_function_from(&self, f: impl Fn(&Permutation) -> Cyc) -> ClassFunction {
        ClassFunction {
            context: self.context,
            values: self.classes.classes().iter().map(|c| f(&c.representative)).collect(),
        }
    }

    pub fn trivial_character(&self) -> ClassFunction {
        self.class_function_from(|_| Cyc::one())
    }

    /// Number of fixed points on the natural permutation domain.
    pub fn permutation_character(&self) -> ClassFunction {
        self.class_function_from(|g| {
            Cyc::from_int((0..g.degree()).filter(|&x| g.image(x) == x).count() as i64)
        })
    }

    pub fn regular_character(&self) -> ClassFunction {
        self.class_function_from(|g| {
            if g.is_identity() {
                Cyc::from_int(self.group.order() as i64)
            } else {
                Cyc::zero()
            }
        })
    }

    fn check_context(&self, f: &ClassFunction) -> Result<()> {
        if f.context != self.context || f.values.len() != self.class_count() {
            return Err(Error::Domain("class function belongs to a different table".into()));
        }
        Ok(())
    }

    /// `⟨f, g⟩ = |G|⁻¹ Σ_x f(x) conj(g(x))`.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Result<Cyc> {
        self.check_context(f)?;
        self.check_context(g)?;
        let mut total = Cyc::zero();
        for (l, c) in self.classes.classes().iter().enumerate() {
            let fv = &f.values[l];
            let gv = &g.values[self.inverse_class[l]];
            if fv.is_zero() || gv.is_zero() {
                continue;
            }
            total = total + (fv * gv).scale(&BigRational::from_integer(c.size.into()));
        }
        let inv = BigRational::new(BigInt::one(), BigInt::from(self.group.order()));
        Ok(total.scale(&inv).reduced())
    }

    /// Inner products with every irreducible character, in row order.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<Cyc>> {
        self.characters.iter().map(|chi| self.inner_product(f, chi)).collect()
    }

    /// `true` iff all inner products with the irreducibles are rational integers.
    pub fn is_generalized_character(&self, f: &ClassFunction) -> Result<bool> {
        Ok(self
            .decompose(f)?
            .iter()
            .all(|c| c.to_rational().is_some_and(|r| r.is_integer())))
    }

    /// `f↓H` for a subgroup `H` with table `sub`.
    pub fn restrict(&self, f: &ClassFunction, sub: &CharacterTable) -> Result<ClassFunction> {
        self.check_context(f)?;
        if !sub.group.is_subgroup_of(&self.group) {
            return Err(Error::Domain("not a subgroup".into()));
        }
        let values = sub
            .classes
            .classes()
            .iter()
            .map(|c| {
                let k = self.classes.class_of(&c.representative).unwrap();
                f.values[k].clone()
            })
            .collect();
        sub.class_function(values)
    }

    /// `θ↑G` for a class function `θ` of a subgroup with table `sub`.
    pub fn induce(&self, theta: &ClassFunction, sub: &CharacterTable) -> Result<ClassFunction> {
        sub.check_context(theta)?;
        if !sub.group.is_subgroup_of(&self.group) {
            return Err(Error::Domain("not a subgroup".into()));
        }
        // θ↑(g_K) = |G| / (|H| |K|) Σ_{H-classes L ⊆ K} |L| θ(L)
        let mut sums = vec![Cyc::zero(); self.class_count()];
        for (l, c) in sub.classes.classes().iter().enumerate() {
            let k = self.classes.class_of(&c.representative).unwrap();
            sums[k] = &sums[k] + &theta.values[l].scale(&BigRational::from_integer(c.size.into()));
        }
        let values = sums
            .into_iter()
            .zip(self.classes.classes())
            .map(|(s, c)| {
                let factor = BigRational::new(
                    BigInt::from(self.group.order()),
                    BigInt::from(sub.group.order()) * BigInt::from(c.size),
                );
                s.scale(&factor).reduced()
            })
            .collect();
        self.class_function(values)
    }

    /// Value-wise Galois image; the modulus must be a multiple of the exponent.
    pub fn apply_galois(&self, f: &ClassFunction, map: &GaloisMap) -> Result<ClassFunction> {
        self.check_context(f)?;
        if !map.modulus().is_multiple_of(self.exponent) {
            return Err(Error::InvalidMap(format!(
                "modulus {} is not a multiple of the exponent {}",
                map.modulus(),
                self.exponent
            )));
        }
        f.apply_galois(map)
    }

    /// Row permutation induced by a Galois map: `χ^σ = row[perm[χ]]`.
    /// Uses `χ^{σ_j}(g) = χ(g^j)`.
    pub fn galois_permutation(&self, map: &GaloisMap) -> Result<Vec<usize>> {
        if !map.modulus().is_multiple_of(self.exponent) {
            return Err(Error::InvalidMap(format!(
                "modulus {} is not a multiple of the exponent {}",
                map.modulus(),
                self.exponent
            )));
        }
        let j = map.exponent() as i64;
        let cls: Vec<usize> = (0..self.class_count()).map(|l| self.power_class(l, j)).collect();
        self.characters
            .iter()
            .map(|chi| {
                let image: Vec<&Cyc> = cls.iter().map(|&k| &chi.values[k]).collect();
                self.characters
                    .iter()
                    .position(|psi| psi.values.iter().zip(&image).all(|(a, b)| a == *b))
                    .ok_or_else(|| Error::Consistency("Galois image of a row is not a row".into()))
            })
            .collect()
    }

    /// The map `σ` for `p` on `ℚ(ξ_exponent)`.
    pub fn sigma(&self, p: u64) -> GaloisMap {
        sigma_exponent(p, self.exponent)
    }

    pub fn rationality_flags(&self, chi: usize, p: u64) -> Result<RationalityFlags> {
        let c = &self.characters[chi];
        let conductors: Vec<u64> = c.values.iter().map(|v| v.conductor()).collect();
        let perm = self.galois_permutation(&self.sigma(p))?;
        Ok(RationalityFlags {
            p_rational: conductors.iter().all(|&n| n % p != 0),
            almost_p_rational: conductors.iter().all(|&n| n % (p * p) != 0),
            sigma_fixed: perm[chi] == chi,
        })
    }

    /// Exact check of both orthogonality relations.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let r = self.class_count();
        for i in 0..r {
            for j in i..r {
                let ip = self.inner_product(&self.characters[i], &self.characters[j])?;
                let want = if i == j { Cyc::one() } else { Cyc::zero() };
                if ip != want {
                    return Err(Error::Consistency(format!("⟨χ{i}, χ{j}⟩ = {ip}")));
                }
            }
        }
        let order = BigRational::from_integer(BigInt::from(self.group.order()));
        for k in 0..r {
            for l in k..r {
                let s: Cyc = self
                    .characters
                    .iter()
                    .map(|c| &c.values[k] * &c.values[self.inverse_class[l]])
                    .sum();
                let size = BigRational::from_integer(self.classes.get(k).size.into());
                let want = if k == l { Cyc::from_coefficient(&order / size) } else { Cyc::zero() };
                if s != want {
                    return Err(Error::Consistency(format!("column relation fails for classes {k}, {l}")));
                }
            }
        }
        Ok(())
    }

    /// Index of a row equal to `f`, if any.
    pub fn find_row(&self, f: &ClassFunction) -> Option<usize> {
        self.characters.iter().position(|c| c.values == f.values)
    }
}

/// Integer degree `χ(1)` of a character row.
pub fn degree_of(chi: &ClassFunction) -> u64 {
    chi.values[0]
        .to_rational()
        .and_then(|d| d.to_integer().to_u64())
        .expect("character degree is a non-negative integer")
}
