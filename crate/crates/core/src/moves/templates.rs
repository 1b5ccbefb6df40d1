//! Catalog of twist templates: rewrites of whole twist regions with a fixed cost.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braid::{parse_word, torus_braid, BraidWord};
use crate::error::{Error, Result};
use crate::moves::{apply_move_in, Move};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Backward,
}

/// A twist template `lhs → rhs` on `strands` strands.
///
/// A template with a non-empty `derivation` is a macro: replaying those moves
/// from `lhs` must land exactly on `rhs` at exactly `cost`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateTwist {
    pub id: String,
    pub strands: usize,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
    pub cost: u32,
    pub exponent_delta: i64,
    pub description: String,
    pub derivation: Vec<Move>,
}

impl TemplateTwist {
    pub fn primitive(
        id: &str,
        lhs: BraidWord,
        rhs: BraidWord,
        cost: u32,
        description: &str,
    ) -> TemplateTwist {
        TemplateTwist {
            id: id.to_string(),
            strands: lhs.strands(),
            exponent_delta: rhs.exponent_sum() - lhs.exponent_sum(),
            lhs,
            rhs,
            cost,
            description: description.to_string(),
            derivation: Vec::new(),
        }
    }

    pub fn is_macro(&self) -> bool {
        !self.derivation.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct TemplateCatalog {
    templates: BTreeMap<String, TemplateTwist>,
}

impl TemplateCatalog {
    pub fn get(&self, id: &str) -> Result<&TemplateTwist> {
        self.templates
            .get(id)
            .ok_or_else(|| Error::Template(format!("unknown template {id}")))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.templates.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &TemplateTwist> {
        self.templates.values()
    }

    pub fn len(&self) -> usize {
        self.templates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }
}

/// Adds a template after checking it: stored exponent change, strand counts,
/// component count, and for macros a full replay of the derivation.
pub fn register_template(cat: &mut TemplateCatalog, t: TemplateTwist) -> Result<()> {
    let fail = |msg: String| Err(Error::Template(format!("{}: {msg}", t.id)));
    if cat.templates.contains_key(&t.id) {
        return fail("already registered".into());
    }
    if t.lhs.strands() != t.strands || t.rhs.strands() != t.strands {
        return fail("sides live on different strand counts".into());
    }
    if t.rhs.exponent_sum() - t.lhs.exponent_sum() != t.exponent_delta {
        return fail(format!(
            "exponent change is {}, stored {}",
            t.rhs.exponent_sum() - t.lhs.exponent_sum(),
            t.exponent_delta
        ));
    }
    if t.lhs.closure_components() != t.rhs.closure_components() {
        return fail("sides have different numbers of components".into());
    }
    if t.lhs.is_empty() {
        return fail("empty left-hand side".into());
    }
    if t.is_macro() {
        let mut w = t.lhs.clone();
        let mut cost = 0;
        for (i, m) in t.derivation.iter().enumerate() {
            let (next, c) = apply_move_in(cat, &w, m)
                .map_err(|e| Error::Template(format!("{}: derivation step {i}: {e}", t.id)))?;
            w = next;
            cost += c;
        }
        if w != t.rhs {
            return fail(format!(
                "derivation ends at {}, expected {}",
                w.to_compact_text(),
                t.rhs.to_compact_text()
            ));
        }
        if cost != t.cost {
            return fail(format!("derivation costs {cost}, stored {}", t.cost));
        }
    }
    cat.templates.insert(t.id.clone(), t);
    Ok(())
}

fn word(text: &str, n: usize) -> BraidWord {
    parse_word(text, n).expect("built-in template word")
}

/// `(σ_{lo}⋯σ_{hi-1})^reps` on `n` strands: a twist row on strands `lo..=hi`.
fn row_power(n: usize, lo: usize, hi: usize, reps: usize) -> BraidWord {
    torus_braid(hi - lo + 1, reps)
        .shifted(lo - 1, n)
        .expect("row fits")
}

/// Largest `n` for which `T5_n` is built in.
pub const MAX_SPLIT_HALF: usize = 16;

fn builtin() -> Result<TemplateCatalog> {
    let mut cat = TemplateCatalog::default();
    register_template(
        &mut cat,
        TemplateTwist::primitive(
            "T1",
            word("abbaabba", 3),
            word("bb", 3),
            2,
            "two crossing changes turning a band wrapped twice around a twist into a single twist",
        ),
    )?;
    let mut t2a = TemplateTwist::primitive(
        "T2a",
        word("(ab)^6", 3),
        word("b^6", 3),
        2,
        "two full twists on three strands untwisted onto the right pair",
    );
    t2a.derivation = vec![
        Move::relation(0, 12, "abbaabbab^4"),
        Move::template(0, "T1", Direction::Forward, 0),
    ];
    register_template(&mut cat, t2a)?;
    let mut t2b = TemplateTwist::primitive(
        "T2b",
        word("(ab)^6", 3),
        word("a^6", 3),
        2,
        "two full twists on three strands untwisted onto the left pair",
    );
    t2b.derivation = vec![
        Move::relation(0, 12, "aba abbaabba b^4 ABA"),
        Move::template(3, "T1", Direction::Forward, 0),
        Move::relation(0, 12, "a^6"),
    ];
    register_template(&mut cat, t2b)?;
    register_template(
        &mut cat,
        TemplateTwist::primitive(
            "T3a",
            word("(abc)^12", 4),
            word("(bc)^12", 4),
            4,
            "three full twists on four strands untwisted onto the right three strands",
        ),
    )?;
    register_template(
        &mut cat,
        TemplateTwist::primitive(
            "T3b",
            word("(abc)^12", 4),
            word("(ab)^12", 4),
            4,
            "three full twists on four strands untwisted onto the left three strands",
        ),
    )?;
    for half in 2..=MAX_SPLIT_HALF {
        let n = 2 * half;
        let lhs = row_power(n, 1, n, n);
        let rhs = &row_power(n, 1, half, n) * &row_power(n, half + 1, n, n);
        register_template(
            &mut cat,
            TemplateTwist::primitive(
                &format!("T5_{half}"),
                lhs,
                rhs,
                1,
                "one crossing change splitting a full twist on an even number of strands into full twists on the two halves",
            ),
        )?;
    }
    let t53 = cat.get("T5_3")?.clone();
    let mut t4 = TemplateTwist::primitive(
        "T4",
        t53.lhs,
        t53.rhs,
        1,
        "a full twist on six strands split into full twists on the outer pairs of three",
    );
    t4.derivation = vec![Move::template(0, "T5_3", Direction::Forward, 0)];
    register_template(&mut cat, t4)?;
    Ok(cat)
}

/// The built-in catalog (T1, T2a, T2b, T3a, T3b, T4, T5_2..T5_16).
pub fn catalog() -> &'static TemplateCatalog {
    static CATALOG: OnceLock<TemplateCatalog> = OnceLock::new();
    CATALOG.get_or_init(|| builtin().expect("built-in templates verify"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_verifies() {
        let cat = catalog();
        assert_eq!(cat.len(), 6 + (MAX_SPLIT_HALF - 1));
        assert!(cat.get("T2b").unwrap().is_macro());
        assert!(!cat.get("T1").unwrap().is_macro());
    }

    #[test]
    fn stored_exponent_changes() {
        let cat = catalog();
        assert_eq!(cat.get("T1").unwrap().exponent_delta, -6);
        assert_eq!(cat.get("T2a").unwrap().exponent_delta, -6);
        assert_eq!(cat.get("T3a").unwrap().exponent_delta, -12);
        for half in 2..=MAX_SPLIT_HALF {
            let t = cat.get(&format!("T5_{half}")).unwrap();
            assert_eq!(t.exponent_delta, -2 * half as i64);
            assert_eq!(t.lhs.closure_components(), t.strands);
        }
    }

    #[test]
    fn split_template_shape() {
        let t = catalog().get("T5_2").unwrap();
        assert_eq!(t.lhs, word("(abc)^4", 4));
        assert_eq!(t.rhs, word("a^4c^4", 4));
        assert_eq!(catalog().get("T4").unwrap().rhs, word("(ab)^6(de)^6", 6));
    }

    #[test]
    fn bad_templates_are_rejected() {
        let mut cat = catalog().clone();
        let mut bad = TemplateTwist::primitive("X", word("ab", 3), word("a", 3), 1, "");
        bad.exponent_delta = 0;
        assert!(register_template(&mut cat, bad).is_err());
        let comp = TemplateTwist::primitive("Y", word("aa", 3), word("a", 3), 1, "");
        assert!(register_template(&mut cat, comp).is_err());
        let mut wrong = TemplateTwist::primitive("Z", word("(ab)^6", 3), word("b^6", 3), 1, "");
        wrong.derivation = vec![Move::template(0, "T2a", Direction::Forward, 0)];
        assert!(register_template(&mut cat, wrong).is_err());
        assert!(register_template(&mut cat, catalog().get("T1").unwrap().clone()).is_err());
    }

    #[test]
    fn derived_macro_registers() {
        let mut cat = catalog().clone();
        let mut t = TemplateTwist::primitive(
            "T2x",
            word("(ab)^6", 3),
            word("A b^6 a", 3),
            2,
            "conjugated",
        );
        t.derivation = vec![
            Move::template(0, "T2a", Direction::Forward, 0),
            Move::conjugate("a"),
        ];
        register_template(&mut cat, t).unwrap();
        assert!(cat.get("T2x").unwrap().is_macro());
    }
}
