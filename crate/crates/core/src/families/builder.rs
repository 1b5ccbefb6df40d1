//! Incremental script construction: every move is applied as it is recorded,
//! so a generator that produces a bad move fails immediately.

use crate::braid::{parse_word, BraidWord};
use crate::error::{Error, Result};
use crate::moves::{apply_move, is_unknot, Claim, Direction, Move, MoveScript, UnknotVerdict};

pub(crate) struct Builder {
    start: String,
    strands: usize,
    word: BraidWord,
    moves: Vec<Move>,
    cost: u32,
}

impl Builder {
    pub fn new(start: &str, strands: usize) -> Result<Builder> {
        let word = parse_word(start, strands)?;
        Ok(Builder {
            start: start.to_string(),
            strands,
            word,
            moves: Vec::new(),
            cost: 0,
        })
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    #[cfg(test)]
    pub fn cost(&self) -> u32 {
        self.cost
    }

    pub fn push(&mut self, m: Move) -> Result<()> {
        let (w, c) = apply_move(&self.word, &m)?;
        self.word = w;
        self.cost += c;
        self.moves.push(m);
        Ok(())
    }

    /// `text` read on the generators above `shift`.
    pub fn shifted(&self, text: &str, shift: usize) -> Result<BraidWord> {
        let n = self.word.strands();
        parse_word(text, n - shift)?.shifted(shift, n)
    }

    /// Replaces `len` letters at `off` by `text` (shifted); returns the new length.
    pub fn rewrite(&mut self, off: usize, len: usize, text: &str, shift: usize) -> Result<usize> {
        let w = self.shifted(text, shift)?;
        self.push(Move::relation(off, len, &w.to_compact_text()))?;
        Ok(w.len())
    }

    pub fn template(&mut self, off: usize, id: &str, shift: usize) -> Result<()> {
        self.push(Move::template(off, id, Direction::Forward, shift))
    }

    pub fn cc(&mut self, pos: usize) -> Result<()> {
        self.push(Move::crossing_change(pos))
    }

    /// Free reduction of a window; returns the new window length.
    pub fn reduce(&mut self, off: usize, len: usize) -> Result<usize> {
        let before = self.word.len();
        self.push(Move::reduce(off, Some(len)))?;
        Ok(len - (before - self.word.len()))
    }

    pub fn destabilize(&mut self, pos: usize) -> Result<()> {
        self.push(Move::destabilize(pos))
    }

    /// First literal occurrence of `pat` at or after `from`.
    pub fn find(&self, pat: &BraidWord, from: usize) -> Option<usize> {
        let l = self.word.letters();
        let p = pat.letters();
        (from..=l.len().saturating_sub(p.len())).find(|&i| l[i..i + p.len()] == *p)
    }

    /// Applies `count` crossing changes inside the window, choosing the first
    /// position set (lexicographically) whose result is accepted, then reduces.
    /// Returns the reduced window length.
    pub fn changes_until(
        &mut self,
        off: usize,
        len: usize,
        count: usize,
        accept: impl Fn(&BraidWord) -> bool,
    ) -> Result<usize> {
        let window = self.word.slice(off, off + len);
        let mut idx: Vec<usize> = (0..count).collect();
        loop {
            let mut w = window.clone();
            for &p in &idx {
                w = w.splice(p, 1, &[w.letters()[p].inverse()]);
            }
            if accept(&w.free_reduce()) {
                for &p in &idx {
                    self.cc(off + p)?;
                }
                return self.reduce(off, len);
            }
            if !next_combination(&mut idx, len) {
                return Err(Error::FamilyParam(format!(
                    "no {count} crossing changes finish the window {}",
                    window.to_compact_text()
                )));
            }
        }
    }

    pub fn finish(self, cost_bound: u32) -> MoveScript {
        MoveScript {
            strands: self.strands,
            start: self.start,
            moves: self.moves,
            claim: Claim {
                target: crate::moves::script::UNKNOT.to_string(),
                cost_bound,
            },
        }
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A 3-strand block read back on generators 1 and 2.
pub(crate) fn unshift(w: &BraidWord, shift: usize, strands: usize) -> BraidWord {
    BraidWord::from_signed(
        strands,
        &w.signed_letters()
            .iter()
            .map(|&v| v.signum() * (v.abs() - shift as i32))
            .collect::<Vec<_>>(),
    )
    .expect("block generators")
}

pub(crate) fn closes_to_unknot(w: &BraidWord, shift: usize, strands: usize) -> bool {
    is_unknot(&unshift(w, shift, strands)) == UnknotVerdict::Yes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn builder_tracks_cost() {
        let mut b = Builder::new("a^3", 2).unwrap();
        b.cc(0).unwrap();
        assert_eq!(b.reduce(0, 3).unwrap(), 1);
        assert_eq!(b.cost(), 1);
        assert_eq!(b.find(&parse_word("a", 2).unwrap(), 0), Some(0));
    }
}
