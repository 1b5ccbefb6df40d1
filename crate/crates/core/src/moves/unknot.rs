//! Bounded unknot recognition for braid closures.
//!
//! The answer is three-valued. `Yes` comes with an implicit certificate (every
//! step is an isotopy of the closure), `No` is backed by an invariant, and
//! anything the bounded search cannot settle is `Unknown`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::seifert::{seifert_matrix, sigma_hat, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnknotVerdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknotOptions {
    /// Length-preserving rewrites tried before giving up on a block.
    pub depth: usize,
    /// Cap on the number of words visited per block.
    pub max_nodes: usize,
    /// Skip the σ̂ test (it dominates the cost on long words).
    pub use_sigma_hat: bool,
}

impl Default for UnknotOptions {
    fn default() -> Self {
        UnknotOptions {
            depth: 8,
            max_nodes: 200_000,
            use_sigma_hat: true,
        }
    }
}

pub fn is_unknot(w: &BraidWord) -> UnknotVerdict {
    is_unknot_with(w, &UnknotOptions::default())
}

pub fn is_unknot_with(w: &BraidWord, opts: &UnknotOptions) -> UnknotVerdict {
    if w.closure_components() != 1 {
        return UnknotVerdict::No;
    }
    let mut todo = simplify(w.clone());
    if todo.is_empty() {
        return UnknotVerdict::Yes;
    }
    match seifert_matrix(w) {
        Ok(v) if v.alexander_poly() != LaurentPoly::one() => return UnknotVerdict::No,
        Ok(_) => {}
        Err(_) => return UnknotVerdict::Unknown,
    }
    if opts.use_sigma_hat {
        match sigma_hat(w) {
            Ok(0) => {}
            Ok(_) => return UnknotVerdict::No,
            Err(_) => return UnknotVerdict::Unknown,
        }
    }
    while let Some(block) = todo.pop() {
        match search(&block, opts) {
            Some(next) => todo.extend(simplify(next)),
            None => return UnknotVerdict::Unknown,
        }
    }
    UnknotVerdict::Yes
}

/// Cyclic reduction, Markov destabilisation at either end, and splitting at a
/// generator that occurs once (the closure is then a connected sum).
/// Returns the blocks still to be untangled; an empty list means the unknot.
pub(crate) fn simplify(w: BraidWord) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut todo = vec![w];
    while let Some(mut x) = todo.pop() {
        loop {
            x = x.cyclic_reduce();
            let n = x.strands();
            if n == 1 {
                break;
            }
            let counts = x.generator_counts();
            if counts[n - 1] <= 1 {
                let letters = x
                    .letters()
                    .iter()
                    .copied()
                    .filter(|l| l.index() != n - 1)
                    .collect();
                x = BraidWord::new(n - 1, letters).expect("indices below n-1");
                continue;
            }
            if counts[1] <= 1 {
                x = x.flip();
                continue;
            }
            if let Some(i) = (2..n - 1).find(|&i| counts[i] <= 1) {
                let lower = x
                    .letters()
                    .iter()
                    .copied()
                    .filter(|l| l.index() < i)
                    .collect();
                let upper = x
                    .letters()
                    .iter()
                    .filter(|l| l.index() > i)
                    .map(|l| Letter::new(l.index() - i, l.is_positive()))
                    .collect();
                todo.push(BraidWord::new(i, lower).expect("lower block"));
                todo.push(BraidWord::new(n - i, upper).expect("upper block"));
                break;
            }
            out.push(x);
            break;
        }
    }
    out
}

fn canonical(w: &BraidWord) -> (usize, Vec<i32>) {
    let s = w.signed_letters();
    let best = (0..s.len().max(1))
        .map(|k| {
            let mut r = s[k.min(s.len())..].to_vec();
            r.extend_from_slice(&s[..k.min(s.len())]);
            r
        })
        .min()
        .unwrap_or_default();
    (w.strands(), best)
}

fn makes_progress(x: &BraidWord, from: &BraidWord) -> bool {
    let r = x.cyclic_reduce();
    r.len() < from.len() || r.generator_counts().iter().skip(1).any(|&c| c <= 1)
}

/// Length-preserving rewrites at every cyclic position: far commutation,
/// `xyx = yxy` for equal signs, and `x^e y^f x^-e = y^-e x^f y^e`.
fn neighbours(w: &BraidWord) -> Vec<BraidWord> {
    let l = w.letters();
    let len = l.len();
    let mut out = Vec::new();
    if len < 2 {
        return out;
    }
    for p in 0..len {
        let r = w.rotate(p);
        let rl = r.letters();
        let (x, y) = (rl[0], rl[1]);
        if x.index().abs_diff(y.index()) >= 2 {
            out.push(r.splice(0, 2, &[y, x]));
        }
        if len < 3 {
            continue;
        }
        let z = rl[2];
        if x.index().abs_diff(y.index()) != 1 {
            continue;
        }
        if x == z && x.is_positive() == y.is_positive() {
            out.push(r.splice(0, 3, &[y, x, y]));
        }
        if z == x.inverse() {
            let e = x.is_positive();
            let repl = [
                Letter::new(y.index(), !e),
                Letter::new(x.index(), y.is_positive()),
                Letter::new(y.index(), e),
            ];
            out.push(r.splice(0, 3, &repl));
        }
    }
    out
}

fn search(start: &BraidWord, opts: &UnknotOptions) -> Option<BraidWord> {
    let mut seen = HashSet::new();
    seen.insert(canonical(start));
    let mut queue = VecDeque::from([(start.clone(), 0usize)]);
    while let Some((w, d)) = queue.pop_front() {
        if d >= opts.depth {
            continue;
        }
        for next in neighbours(&w) {
            if makes_progress(&next, start) {
                return Some(next);
            }
            if seen.len() >= opts.max_nodes {
                return None;
            }
            if seen.insert(canonical(&next)) {
                queue.push_back((next, d + 1));
            }
        }
    }
    None
}
