use std::fmt;
use std::str::FromStr;

use crate::braid::word::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Positive 3-braid `[k₁,…,k_n] = a^{k₁} b a^{k₂} b ⋯ a^{k_n} b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketForm {
    exponents: Vec<u32>,
}

impl BracketForm {
    pub fn new(exponents: Vec<u32>) -> Result<BracketForm> {
        if exponents.is_empty() {
            return Err(Error::Bracket("bracket must be nonempty".into()));
        }
        if exponents.contains(&0) {
            return Err(Error::Bracket("entries must be positive".into()));
        }
        Ok(BracketForm { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.total() as usize + self.len());
        for &k in &self.exponents {
            letters.extend(std::iter::repeat(Letter::pos(1)).take(k as usize));
            letters.push(Letter::pos(2));
        }
        BraidWord::new(3, letters).expect("bracket letters live in B_3")
    }

    /// `[…,x,y,…] → […,x+1,3,y+1,…]` at the cyclic pair `(pos, pos+1)`.
    ///
    /// On a one-entry bracket the pair is `(x, x)` and the result is `[x+2, 3]`.
    pub fn insert_full_twist(&self, pos: usize) -> BracketForm {
        let n = self.exponents.len();
        let i = pos % n;
        let mut e = self.exponents.clone();
        if n == 1 {
            return BracketForm {
                exponents: vec![e[0] + 2, 3],
            };
        }
        if i + 1 < n {
            e[i] += 1;
            e[i + 1] += 1;
            e.insert(i + 1, 3);
        } else {
            // wrap-around pair (last, first); read cyclically from the last entry
            e[n - 1] += 1;
            e[0] += 1;
            e.push(3);
        }
        BracketForm { exponents: e }
    }
}

impl fmt::Display for BracketForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for BracketForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<BracketForm> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Bracket(format!("expected [k1,...,kn], got {s:?}")))?;
        let mut out = Vec::new();
        for part in inner.split(',') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Bracket(format!("bad entry {part:?}")))?;
            out.push(v);
        }
        BracketForm::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BracketForm {
        s.parse().unwrap()
    }

    #[test]
    fn bracket_words() {
        assert_eq!(b("[1,1,1]").to_word().to_text(), "ababab");
        assert_eq!(b("[2,2]").to_word().to_text(), "aabaab");
        assert_eq!(b("[3,3,3]").to_word().to_text(), "aaabaaabaaab");
        let w = b("[3,5,5,4]").to_word();
        assert_eq!(w.len(), 17 + 4);
    }

    #[test]
    fn bracket_parse_errors() {
        assert!("[]".parse::<BracketForm>().is_err());
        assert!("[1,0]".parse::<BracketForm>().is_err());
        assert!("1,2".parse::<BracketForm>().is_err());
        assert!("[1,x]".parse::<BracketForm>().is_err());
        assert_eq!(b(" [3, 5,4] ").to_string(), "[3,5,4]");
    }

    #[test]
    fn insertion_move() {
        assert_eq!(b("[2,2]").insert_full_twist(0), b("[3,3,3]"));
        assert_eq!(b("[3,3,3]").insert_full_twist(0), b("[4,3,4,3]"));
        assert_eq!(b("[3,3,3]").insert_full_twist(1), b("[3,4,3,4]"));
        assert_eq!(b("[3,3,3]").insert_full_twist(2), b("[4,3,4,3]"));
        assert_eq!(b("[3,4,3,4]").insert_full_twist(1), b("[3,5,3,4,4]"));
        assert_eq!(b("[1]").insert_full_twist(0), b("[3,3]"));
    }
}
