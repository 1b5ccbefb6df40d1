//! Bounded decision procedure for "do these braids have the same closure".

use std::collections::HashSet;

use serde::Serialize;

use crate::braid::garside::{normal_form, GarsideNF, PermBraid};
use crate::braid::word::BraidWord;
use crate::error::{Error, Result};
use crate::seifert::seifert_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualBy {
    /// Equal as elements of `B_n`.
    Identical,
    /// A cyclic rotation of the first word equals the second.
    Rotation,
    /// Conjugate by an explicit element found in the bounded search.
    Conjugate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistinctBy {
    Components,
    ExponentSum,
    Alexander,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum ClosureRelation {
    Equal {
        by: EqualBy,
        /// Signed letters of `c` with `c⁻¹ w₁ c = w₂` (empty unless `by` is `conjugate`).
        conjugator: Vec<i32>,
    },
    DistinctByInvariant {
        invariant: DistinctBy,
    },
    Unknown,
}

impl ClosureRelation {
    pub fn is_equal(&self) -> bool {
        matches!(self, ClosureRelation::Equal { .. })
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, ClosureRelation::DistinctByInvariant { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjugacyOptions {
    /// Maximum number of conjugator factors.
    pub depth: usize,
    /// Hard cap on the number of conjugators tried.
    pub max_candidates: usize,
}

impl Default for ConjugacyOptions {
    fn default() -> Self {
        ConjugacyOptions {
            depth: 3,
            max_candidates: 50_000,
        }
    }
}

/// Building blocks for conjugators: all simple elements and their inverses for
/// `n ≤ 4`, otherwise the Artin generators and their inverses.
fn conjugator_atoms(n: usize) -> Vec<BraidWord> {
    let mut atoms = Vec::new();
    if n <= 4 {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        loop {
            let p = PermBraid::from_images(perm.clone()).expect("valid permutation");
            if !p.is_identity() {
                let w = BraidWord::new(n, p.to_letters()).expect("in range");
                atoms.push(w.inverse());
                atoms.push(w);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    } else {
        for i in 1..n {
            let w = BraidWord::from_signed(n, &[i as i32]).expect("in range");
            atoms.push(w.inverse());
            atoms.push(w);
        }
    }
    atoms
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn alexander_of(w: &BraidWord) -> Option<crate::seifert::LaurentPoly> {
    if w.closure_components() != 1 {
        return None;
    }
    seifert_matrix(w).ok().map(|v| v.alexander_poly())
}

/// Compares the closures of two braids on the same number of strands.
///
/// `Equal` is always sound (it exhibits rotation or conjugation);
/// `DistinctByInvariant` names an invariant that differs; otherwise `Unknown`.
pub fn equal_closures_upto_conjugacy(
    w1: &BraidWord,
    w2: &BraidWord,
    opts: &ConjugacyOptions,
) -> Result<ClosureRelation> {
    if w1.strands() != w2.strands() {
        return Err(Error::Move(format!(
            "cannot compare braids on {} and {} strands",
            w1.strands(),
            w2.strands()
        )));
    }
    let target = normal_form(w2);
    if normal_form(w1) == target {
        return Ok(ClosureRelation::Equal {
            by: EqualBy::Identical,
            conjugator: Vec::new(),
        });
    }
    if w1.closure_components() != w2.closure_components() {
        return Ok(ClosureRelation::DistinctByInvariant {
            invariant: DistinctBy::Components,
        });
    }
    if w1.exponent_sum() != w2.exponent_sum() {
        return Ok(ClosureRelation::DistinctByInvariant {
            invariant: DistinctBy::ExponentSum,
        });
    }
    if let (Some(a), Some(b)) = (alexander_of(w1), alexander_of(w2)) {
        if a != b {
            return Ok(ClosureRelation::DistinctByInvariant {
                invariant: DistinctBy::Alexander,
            });
        }
    }
    for k in 1..w1.len() {
        if normal_form(&w1.rotate(k)) == target {
            return Ok(ClosureRelation::Equal {
                by: EqualBy::Rotation,
                conjugator: Vec::new(),
            });
        }
    }
    if let Some(c) = search_conjugator(w1, &target, opts) {
        return Ok(ClosureRelation::Equal {
            by: EqualBy::Conjugate,
            conjugator: c.signed_letters(),
        });
    }
    Ok(ClosureRelation::Unknown)
}

fn search_conjugator(
    w: &BraidWord,
    target: &GarsideNF,
    opts: &ConjugacyOptions,
) -> Option<BraidWord> {
    let n = w.strands();
    let atoms = conjugator_atoms(n);
    let mut seen: HashSet<GarsideNF> = HashSet::new();
    seen.insert(GarsideNF::identity(n));
    let mut frontier = vec![BraidWord::identity(n)];
    let mut tried = 0usize;
    for _ in 0..opts.depth {
        let mut next = Vec::new();
        for c in &frontier {
            for a in &atoms {
                let cand = (c * a).free_reduce();
                let nf = normal_form(&cand);
                if !seen.insert(nf) {
                    continue;
                }
                tried += 1;
                if tried > opts.max_candidates {
                    return None;
                }
                let conj = &(&cand.inverse() * w) * &cand;
                if normal_form(&conj) == *target {
                    return Some(cand);
                }
                next.push(cand);
            }
        }
        frontier = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::parse_word;
    use crate::braid::BracketForm;

    fn rel(a: &str, b: &str, n: usize) -> ClosureRelation {
        equal_closures_upto_conjugacy(
            &parse_word(a, n).unwrap(),
            &parse_word(b, n).unwrap(),
            &ConjugacyOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn triple_full_twist_bracket() {
        let b: BracketForm = "[3,4,3,4]".parse().unwrap();
        let r = equal_closures_upto_conjugacy(
            &parse_word("(ab)^9", 3).unwrap(),
            &b.to_word(),
            &ConjugacyOptions::default(),
        )
        .unwrap();
        assert!(r.is_equal());
    }

    #[test]
    fn exponent_sum_separates() {
        assert_eq!(
            rel("(ab)^7", "(ab)^8", 3),
            ClosureRelation::DistinctByInvariant {
                invariant: DistinctBy::ExponentSum
            }
        );
    }

    #[test]
    fn negative_torus_presentations() {
        assert!(rel("(AB)^5", "A^3BA^3BA^2", 3).is_equal());
    }

    #[test]
    fn rotation_is_found() {
        assert_eq!(
            rel("aabab", "ababa", 3),
            ClosureRelation::Equal {
                by: EqualBy::Rotation,
                conjugator: Vec::new()
            }
        );
    }

    #[test]
    fn conjugator_is_a_witness() {
        let w = parse_word("aab", 3).unwrap();
        let c = parse_word("ba", 3).unwrap();
        let w2 = &(&c.inverse() * &w) * &c;
        match equal_closures_upto_conjugacy(&w, &w2, &ConjugacyOptions::default()).unwrap() {
            ClosureRelation::Equal { conjugator, .. } => {
                if !conjugator.is_empty() {
                    let c = BraidWord::from_signed(3, &conjugator).unwrap();
                    let back = &(&c.inverse() * &w) * &c;
                    assert_eq!(normal_form(&back), normal_form(&w2));
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn alexander_separates_same_writhe_knots() {
        // T(2,5) against the granny knot, both with writhe 6
        assert_eq!(
            rel("aaaaab", "aaabbb", 3),
            ClosureRelation::DistinctByInvariant {
                invariant: DistinctBy::Alexander
            }
        );
    }
}
