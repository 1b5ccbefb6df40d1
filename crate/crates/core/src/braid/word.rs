use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest generator index expressible in the letter alphabet (`a..y`).
pub const MAX_TEXT_GENERATOR: usize = 25;

/// A signed Artin generator: `+i` is σ_i, `-i` is σ_i⁻¹ (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Letter {
        assert!(index >= 1, "generator indices are 1-based");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Letter {
        Letter::new(index, true)
    }

    pub fn neg(index: usize) -> Letter {
        Letter::new(index, false)
    }

    pub fn from_signed(v: i32) -> Option<Letter> {
        (v != 0).then_some(Letter(v))
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn shifted(self, by: usize) -> Letter {
        let i = (self.index() + by) as i32;
        Letter(if self.0 > 0 { i } else { -i })
    }

    pub fn to_char(self) -> Option<char> {
        let i = self.index();
        if i > MAX_TEXT_GENERATOR {
            return None;
        }
        let c = (b'a' + (i as u8 - 1)) as char;
        Some(if self.is_positive() {
            c
        } else {
            c.to_ascii_uppercase()
        })
    }

    pub fn from_char(c: char) -> Option<Letter> {
        if !c.is_ascii_alphabetic() {
            return None;
        }
        let lower = c.to_ascii_lowercase();
        if lower == 'z' {
            return None;
        }
        let index = (lower as u8 - b'a') as usize + 1;
        Some(Letter::new(index, c.is_ascii_lowercase()))
    }
}

/// A braid word in `B_n`. Immutable: every operation returns a new word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<BraidWord> {
        let mut out = Vec::with_capacity(letters.len());
        for &v in letters {
            match Letter::from_signed(v) {
                Some(l) => out.push(l),
                None => {
                    return Err(Error::IndexOutOfRange { index: 0, strands });
                }
            }
        }
        BraidWord::new(strands, out)
    }

    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands >= 1);
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed_letters(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Same letters viewed in a braid group with more strands.
    pub fn widen(&self, strands: usize) -> BraidWord {
        assert!(strands >= self.strands);
        BraidWord {
            strands,
            letters: self.letters.clone(),
        }
    }

    /// Shift every generator index by `by`, landing in `B_strands`.
    pub fn shifted(&self, by: usize, strands: usize) -> Result<BraidWord> {
        BraidWord::new(
            strands,
            self.letters.iter().map(|l| l.shifted(by)).collect(),
        )
    }

    /// Conjugation by the half twist: σ_i ↦ σ_{n-i}.
    pub fn flip(&self) -> BraidWord {
        let n = self.strands;
        BraidWord {
            strands: n,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(n - l.index(), l.is_positive()))
                .collect(),
        }
    }

    /// Cyclic rotation making the letter at `start` (mod len) the first letter.
    pub fn rotate(&self, start: usize) -> BraidWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = start % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// Replace `letters[start..start + len]` by `replacement`.
    pub fn splice(&self, start: usize, len: usize, replacement: &[Letter]) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() - len + replacement.len());
        letters.extend_from_slice(&self.letters[..start]);
        letters.extend_from_slice(replacement);
        letters.extend_from_slice(&self.letters[start + len..]);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Free reduction of the cyclic word (also cancels across the seam).
    pub fn cyclic_reduce(&self) -> BraidWord {
        let reduced = self.free_reduce();
        let l = &reduced.letters;
        let mut lo = 0;
        let mut hi = l.len();
        while hi - lo >= 2 && l[lo] == l[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        reduced.slice(lo, hi)
    }

    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands];
        for l in &self.letters {
            counts[l.index()] += 1;
        }
        counts
    }

    /// Permutation of strand positions (0-based) induced by the word.
    pub fn permutation(&self) -> ClosurePermutation {
        // mapping[k] = final position of the strand starting at position k
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.index() - 1;
            at.swap(i, i + 1);
        }
        let mut mapping = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            mapping[strand] = pos;
        }
        ClosurePermutation { mapping }
    }

    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Text form using `a..y` / `A..Y`; falls back to a signed list for wide braids.
    pub fn to_text(&self) -> String {
        if self.strands > MAX_TEXT_GENERATOR + 1 {
            return format!("{:?}", self.signed_letters());
        }
        self.letters
            .iter()
            .map(|l| l.to_char().expect("index within text alphabet"))
            .collect()
    }

    /// Compact text with run-length exponents, e.g. `a^7b`; signed list for wide braids.
    pub fn to_compact_text(&self) -> String {
        if self.strands > MAX_TEXT_GENERATOR + 1 {
            return format!("{:?}", self.signed_letters());
        }
        let mut out = String::new();
        let mut i = 0;
        let l = &self.letters;
        while i < l.len() {
            let mut j = i + 1;
            while j < l.len() && l[j] == l[i] {
                j += 1;
            }
            let c = l[i].to_char().unwrap_or('?');
            out.push(c);
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.to_text())
        }
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, rhs.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }
}

impl Mul for BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: BraidWord) -> BraidWord {
        &self * &rhs
    }
}

/// Permutation of `{0..n-1}` induced by a braid on its strand positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClosurePermutation {
    pub mapping: Vec<usize>,
}

impl ClosurePermutation {
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.mapping.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.mapping[k];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }
}

/// Parse a word such as `abAB`, `a^7b` or `(ab)^6BA` in `B_strands`.
///
/// Lowercase letters are positive generators (`a` = σ₁), uppercase their
/// inverses. `^k` repeats the preceding letter or parenthesised group.
/// A bracketed signed list such as `[1, -2, 3]` is accepted for wide braids.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(Error::TooFewStrands { min: 1, got: 0 });
    }
    if let Some(list) = text.trim().strip_prefix('[') {
        return parse_signed_list(list, strands);
    }
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let letters = parse_sequence(&chars, &mut pos, 0)?;
    if pos < chars.len() {
        return Err(Error::UnknownCharacter {
            ch: chars[pos],
            offset: pos,
        });
    }
    BraidWord::new(strands, letters)
}

fn parse_signed_list(body: &str, strands: usize) -> Result<BraidWord> {
    let offset = |ch: char| Error::UnknownCharacter {
        ch,
        offset: body.find(ch).map_or(0, |i| i + 1),
    };
    let inner = body
        .trim_end()
        .strip_suffix(']')
        .ok_or_else(|| offset('['))?;
    let mut letters = Vec::new();
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: i32 = item
            .parse()
            .map_err(|_| offset(item.chars().next().unwrap_or(',')))?;
        letters.push(Letter::from_signed(v).ok_or(Error::IndexOutOfRange { index: 0, strands })?);
    }
    BraidWord::new(strands, letters)
}

fn parse_sequence(chars: &[char], pos: &mut usize, depth: usize) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        let item = if c.is_whitespace() {
            *pos += 1;
            continue;
        } else if c == '(' {
            *pos += 1;
            let inner = parse_sequence(chars, pos, depth + 1)?;
            if *pos >= chars.len() || chars[*pos] != ')' {
                return Err(Error::UnknownCharacter {
                    ch: chars.get(*pos).copied().unwrap_or('\0'),
                    offset: *pos,
                });
            }
            *pos += 1;
            inner
        } else if c == ')' {
            if depth == 0 {
                return Err(Error::UnknownCharacter {
                    ch: c,
                    offset: *pos,
                });
            }
            return Ok(out);
        } else if let Some(l) = Letter::from_char(c) {
            *pos += 1;
            vec![l]
        } else {
            return Err(Error::UnknownCharacter {
                ch: c,
                offset: *pos,
            });
        };
        let reps = parse_exponent(chars, pos)?;
        for _ in 0..reps {
            out.extend_from_slice(&item);
        }
    }
    Ok(out)
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<usize> {
    if *pos >= chars.len() || chars[*pos] != '^' {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::UnknownCharacter {
            ch: chars.get(*pos).copied().unwrap_or('^'),
            offset: *pos,
        });
    }
    let digits: String = chars[start..*pos].iter().collect();
    digits.parse().map_err(|_| Error::UnknownCharacter {
        ch: chars[start],
        offset: start,
    })
}

/// `(σ₁σ₂⋯σ_{n-1})^{n·count}`, i.e. `count` full twists on `strands` strands.
pub fn full_twist(strands: usize, count: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands {
            min: 2,
            got: strands,
        });
    }
    Ok(torus_braid(strands, strands * count))
}

/// The standard torus braid `(σ₁⋯σ_{p-1})^q`.
pub fn torus_braid(p: usize, q: usize) -> BraidWord {
    let row: Vec<Letter> = (1..p).map(Letter::pos).collect();
    BraidWord {
        strands: p,
        letters: row.repeat(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> BraidWord {
        parse_word(s, n).unwrap()
    }

    #[test]
    fn parses_letters_in_order() {
        assert_eq!(w("abAB", 3).signed_letters(), vec![1, 2, -1, -2]);
        assert!(w("", 3).is_empty());
        assert_eq!(w("abcde", 6).signed_letters(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn parses_powers_and_groups() {
        assert_eq!(w("a^7b", 3).to_text(), "aaaaaaab");
        assert_eq!(w("(ab)^3", 3).to_text(), "ababab");
        assert_eq!(w("A^3B(A^5B)^0A^4B", 3).to_text(), "AAABAAAAB");
        assert_eq!(w("a^0", 2).len(), 0);
    }

    #[test]
    fn signed_lists() {
        assert_eq!(parse_word("[1, -2,3]", 4).unwrap(), w("aBc", 4));
        assert_eq!(parse_word("[]", 2).unwrap(), BraidWord::identity(2));
        assert!(parse_word("[1,0]", 3).is_err());
        assert!(parse_word("[1,2", 3).is_err());
        let wide = BraidWord::from_signed(30, &[29, -1]).unwrap();
        assert_eq!(parse_word(&wide.to_compact_text(), 30).unwrap(), wide);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_word("ab#", 3),
            Err(Error::UnknownCharacter { ch: '#', offset: 2 })
        ));
        assert!(matches!(
            parse_word("abc", 3),
            Err(Error::IndexOutOfRange {
                index: 3,
                strands: 3
            })
        ));
        assert!(parse_word("z", 30).is_err());
        assert!(parse_word("(ab", 3).is_err());
        assert!(parse_word("ab)", 3).is_err());
        assert!(parse_word("a^", 3).is_err());
    }

    #[test]
    fn free_reduction() {
        assert!(w("aA", 2).free_reduce().is_empty());
        assert!(w("abBA", 3).free_reduce().is_empty());
        assert_eq!(w("aab", 3).free_reduce(), w("aab", 3));
        assert_eq!(w("AbaB", 3).cyclic_reduce().to_text(), "AbaB");
        assert_eq!(w("bAaaB", 3).cyclic_reduce().to_text(), "a");
    }

    #[test]
    fn closure_components_of_three_strand_torus_braids() {
        assert_eq!(w("(ab)^7", 3).closure_components(), 1);
        assert_eq!(w("(ab)^3", 3).closure_components(), 3);
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("(ab)^6", 3).exponent_sum(), 12);
        assert_eq!(w("abbaabba", 3).exponent_sum(), 8);
        assert_eq!(w("ABb^6a^6AA", 3).exponent_sum(), 8);
    }

    #[test]
    fn full_twists() {
        assert_eq!(full_twist(3, 1).unwrap(), w("(ab)^3", 3));
        assert_eq!(full_twist(3, 2).unwrap(), w("(ab)^6", 3));
        assert_eq!(full_twist(2, 1).unwrap(), w("aa", 2));
        assert!(full_twist(1, 1).is_err());
    }

    #[test]
    fn flip_and_rotate() {
        assert_eq!(w("abc", 4).flip().to_text(), "cba");
        assert_eq!(w("abcA", 4).rotate(2).to_text(), "cAab");
        assert_eq!(w("abcA", 4).rotate(6).to_text(), "cAab");
    }
}
