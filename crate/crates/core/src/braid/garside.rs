//! Garside left normal form in `B_n`.
//!
//! A permutation braid is stored as the permutation `π` sending the start
//! position of each strand to its end position. Products compose as
//! `π_{AB} = π_B ∘ π_A`.

use std::fmt;

use serde::Serialize;

use crate::braid::word::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PermBraid(Vec<u8>);

impl PermBraid {
    pub fn identity(n: usize) -> PermBraid {
        PermBraid((0..n as u8).collect())
    }

    pub fn delta(n: usize) -> PermBraid {
        PermBraid((0..n as u8).rev().collect())
    }

    pub fn generator(n: usize, i: usize) -> PermBraid {
        let mut p = PermBraid::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    /// From the images `π(0), …, π(n−1)`; `None` unless a permutation.
    pub fn from_images(images: Vec<u8>) -> Option<PermBraid> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let v = v as usize;
            if v >= images.len() || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(PermBraid(images))
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == n - 1 - k)
    }

    fn inverse_images(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v as usize] = k as u8;
        }
        inv
    }

    /// 0-based `i` such that `A = A'σ_i` with `A'` a permutation braid.
    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.inverse_images();
        (0..inv.len().saturating_sub(1))
            .filter(|&i| inv[i] > inv[i + 1])
            .collect()
    }

    /// 0-based `i` such that `B = σ_i B'` with `B'` a permutation braid.
    pub fn starting_set(&self) -> Vec<usize> {
        (0..self.0.len().saturating_sub(1))
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect()
    }

    fn in_finishing_set(&self, i: usize) -> bool {
        let a = self.0.iter().position(|&v| v as usize == i).unwrap();
        let b = self.0.iter().position(|&v| v as usize == i + 1).unwrap();
        a > b
    }

    fn in_starting_set(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    /// `A ↦ A σ_i` (caller guarantees `i ∉ F(A)`).
    fn push_right(&mut self, i: usize) {
        for v in self.0.iter_mut() {
            if *v as usize == i {
                *v = (i + 1) as u8;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
    }

    /// `σ_i B' ↦ B'` (caller guarantees `i ∈ S(B)`).
    fn pop_left(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// Conjugation by Δ: `τ(π)(k) = n-1-π(n-1-k)`.
    pub fn flip(&self) -> PermBraid {
        let n = self.0.len();
        PermBraid(
            (0..n)
                .map(|k| (n - 1 - self.0[n - 1 - k] as usize) as u8)
                .collect(),
        )
    }

    /// `Δ σ_i⁻¹` (the complement of σ_i).
    fn delta_over_generator(n: usize, i: usize) -> PermBraid {
        let mut d = PermBraid::delta(n);
        d.push_right_unchecked(i);
        d
    }

    fn push_right_unchecked(&mut self, i: usize) {
        for v in self.0.iter_mut() {
            if *v as usize == i {
                *v = (i + 1) as u8;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
    }

    /// A positive word representing this permutation braid.
    pub fn to_letters(&self) -> Vec<Letter> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while let Some(&i) = rest.starting_set().first() {
            out.push(Letter::pos(i + 1));
            rest.pop_left(i);
        }
        out
    }
}

/// Make `(a, b)` left-weighted: `S(b) ⊆ F(a)`. Returns whether anything moved.
fn left_weight(a: &mut PermBraid, b: &mut PermBraid) -> bool {
    let n = a.strands();
    let mut changed = false;
    loop {
        let next = (0..n - 1).find(|&i| b.in_starting_set(i) && !a.in_finishing_set(i));
        match next {
            Some(i) => {
                a.push_right(i);
                b.pop_left(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// `Δ^infimum · A₁ ⋯ A_r` in left-greedy form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GarsideNF {
    strands: usize,
    infimum: i64,
    factors: Vec<PermBraid>,
}

impl GarsideNF {
    pub fn identity(strands: usize) -> GarsideNF {
        GarsideNF {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[PermBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    fn multiply_generator(&mut self, i: usize) {
        if self.strands < 2 {
            return;
        }
        self.factors.push(PermBraid::generator(self.strands, i));
        self.renormalize();
    }

    fn multiply_inverse_generator(&mut self, i: usize) {
        if self.strands < 2 {
            return;
        }
        // X Δ⁻¹ = Δ⁻¹ τ(X)
        self.infimum -= 1;
        for f in self.factors.iter_mut() {
            *f = f.flip();
        }
        self.factors
            .push(PermBraid::delta_over_generator(self.strands, i));
        self.renormalize();
    }

    fn renormalize(&mut self) {
        loop {
            let mut changed = false;
            for j in (0..self.factors.len().saturating_sub(1)).rev() {
                let (left, right) = self.factors.split_at_mut(j + 1);
                changed |= left_weight(&mut left[j], &mut right[0]);
            }
            if !changed {
                break;
            }
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    /// Reassemble a word: `Δ^k` spelled out, then each factor as a positive word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = PermBraid::delta(n).to_letters();
        let mut letters = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<Letter> = delta.iter().rev().map(|l| l.inverse()).collect();
            for _ in 0..(-self.infimum) {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }

    /// Consecutive factors satisfy `S(A_{j+1}) ⊆ F(A_j)`, none is Δ or trivial.
    pub fn is_left_weighted(&self) -> bool {
        if self.factors.iter().any(|f| f.is_delta() || f.is_identity()) {
            return false;
        }
        self.factors.windows(2).all(|w| {
            let f = w[0].finishing_set();
            w[1].starting_set().iter().all(|i| f.contains(i))
        })
    }
}

impl fmt::Display for GarsideNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for factor in &self.factors {
            let w = BraidWord::new(self.strands, factor.to_letters()).unwrap();
            write!(f, " . {}", w)?;
        }
        Ok(())
    }
}

pub fn normal_form(w: &BraidWord) -> GarsideNF {
    let mut nf = GarsideNF::identity(w.strands());
    for l in w.letters() {
        if l.is_positive() {
            nf.multiply_generator(l.index() - 1);
        } else {
            nf.multiply_inverse_generator(l.index() - 1);
        }
    }
    nf
}

/// Equality in `B_n` (decided by normal forms).
pub fn equal_in_group(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && normal_form(a) == normal_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::parse_word;

    fn nf(s: &str, n: usize) -> GarsideNF {
        normal_form(&parse_word(s, n).unwrap())
    }

    #[test]
    fn full_twist_presentations_agree() {
        assert_eq!(nf("ababab", 3), nf("aabaab", 3));
        assert_eq!(nf("aab(abaaba)aab", 3), nf("aaabaaabaaab", 3));
        assert_eq!(nf("ababab", 3).infimum(), 2);
        assert!(nf("ababab", 3).factors().is_empty());
        assert_ne!(nf("a", 3), nf("b", 3));
    }

    #[test]
    fn inverses_cancel() {
        assert!(nf("abAB", 3) != GarsideNF::identity(3));
        assert!(nf("abBA", 3).is_identity());
        assert!(nf("(AB)^5(ba)^5", 3).is_identity());
        assert_eq!(nf("(AB)^5", 3), nf("A^3BA^3BA^2", 3));
    }

    #[test]
    fn distant_generators_commute() {
        assert_eq!(nf("ac", 4), nf("ca", 4));
        assert_ne!(nf("ab", 4), nf("ba", 4));
        assert_eq!(nf("aCbc", 4), nf("Cabc", 4));
    }

    #[test]
    fn round_trip_and_shape() {
        for s in ["", "a", "AbAbcaB", "(abc)^5CBA", "aBcAbC(ab)^3"] {
            let w = parse_word(s, 4).unwrap();
            let f = normal_form(&w);
            assert!(f.is_left_weighted(), "{s}");
            assert_eq!(normal_form(&f.to_word()), f, "{s}");
        }
    }

    #[test]
    fn one_strand_group_is_trivial() {
        assert!(nf("", 1).is_identity());
    }
}
