//! Ordinary character tables with exact cyclotomic values.

mod dixon;
mod render;
mod table;

pub use dixon::{dixon_prime, DixonData};
pub use render::render_table;
pub use table::{degree_of, CharacterTable, ClassFunction, RationalityFlags};

use crate::error::Result;
use crate::permcore::PermGroup;

pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    CharacterTable::compute(g)
}

/// `k(G)`, the number of conjugacy classes.
pub fn k_classcount(g: &PermGroup) -> Result<usize> {
    g.class_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Construct;
    use crate::Cyc;

    fn table(text: &str) -> CharacterTable {
        character_table(&Construct::parse(text).unwrap().build().unwrap()).unwrap()
    }

    #[test]
    fn alt5_degrees() {
        let t = table("Alt(5)");
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn small_tables_are_orthogonal() {
        for g in ["Sym(3)", "Sym(4)", "Cyclic(6)", "Dihedral(8)", "Frobenius(13,3)", "PSL2(7)", "Cyclic(1)"] {
            let t = table(g);
            t.verify_orthogonality().unwrap_or_else(|e| panic!("{g}: {e}"));
        }
    }

    #[test]
    fn cyclic_linear_characters() {
        let t = table("Cyclic(5)");
        assert_eq!(t.degrees(), vec![1; 5]);
        assert!(t.characters()[0].values().iter().all(|v| *v == Cyc::one()));
    }

    #[test]
    fn class_counts() {
        assert_eq!(k_classcount(&Construct::parse("Frobenius(13,3)").unwrap().build().unwrap()).unwrap(), 7);
        assert_eq!(k_classcount(&Construct::parse("Sym(4)").unwrap().build().unwrap()).unwrap(), 5);
    }

    #[test]
    fn permutation_character_of_alt5() {
        let t = table("Alt(5)");
        let pi = t.permutation_character();
        assert_eq!(t.inner_product(&pi, &t.trivial_character()).unwrap(), Cyc::one());
        let mult = t.decompose(&pi).unwrap();
        assert_eq!(mult, vec![Cyc::one(), Cyc::zero(), Cyc::zero(), Cyc::one(), Cyc::zero()]);
    }
}
