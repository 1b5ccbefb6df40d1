//! Braid words, bracket calculus, Garside normal form and closure equality.

pub mod bracket;
pub mod conjugacy;
pub mod garside;
pub mod word;

pub use bracket::BracketForm;
pub use conjugacy::{equal_closures_upto_conjugacy, ClosureRelation, ConjugacyOptions};
pub use garside::{equal_in_group, normal_form, GarsideNF, PermBraid};
pub use word::{full_twist, parse_word, torus_braid, BraidWord, ClosurePermutation, Letter};

pub fn bracket_to_word(b: &BracketForm) -> BraidWord {
    b.to_word()
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

pub fn closure_components(w: &BraidWord) -> usize {
    w.closure_components()
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.exponent_sum()
}
