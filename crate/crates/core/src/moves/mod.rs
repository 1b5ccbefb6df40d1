//! Moves on closed braids: cost-0 isotopies, crossing changes and template twists.

pub mod script;
pub mod templates;
pub mod unknot;

use serde::{Deserialize, Serialize};

use crate::braid::{equal_in_group, parse_word, BraidWord, Letter};
use crate::error::{Error, Result};

pub use script::{verify_script, Certificate, Claim, MoveScript, StepFailure, StepRecord};
pub use templates::{catalog, register_template, Direction, TemplateCatalog, TemplateTwist};
pub use unknot::{is_unknot, is_unknot_with, UnknotOptions, UnknotVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    BraidRelation,
    FreeInsertReduce,
    Commutation,
    CyclicRotate,
    Conjugate,
    Stabilize,
    Destabilize,
    CrossingChange,
    Template,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreeOp {
    /// Insert `w·w⁻¹` at the position.
    Insert,
    /// Remove the inverse pair starting at the position.
    Cancel,
    /// Freely reduce `length` letters from the position, or the whole cyclic word.
    Reduce,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replacement: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op: Option<FreeOp>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Direction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<usize>,
}

impl MoveParams {
    pub fn is_empty(&self) -> bool {
        *self == MoveParams::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Move {
    pub kind: MoveKind,
    #[serde(default)]
    pub position: usize,
    #[serde(default, skip_serializing_if = "MoveParams::is_empty")]
    pub params: MoveParams,
}

impl Move {
    fn with(kind: MoveKind, position: usize, params: MoveParams) -> Move {
        Move {
            kind,
            position,
            params,
        }
    }

    /// Replace `length` letters at `position` by a word equal to them in `B_n`.
    pub fn relation(position: usize, length: usize, replacement: &str) -> Move {
        Move::with(
            MoveKind::BraidRelation,
            position,
            MoveParams {
                length: Some(length),
                replacement: Some(replacement.to_string()),
                ..Default::default()
            },
        )
    }

    pub fn insert(position: usize, word: &str) -> Move {
        Move::with(
            MoveKind::FreeInsertReduce,
            position,
            MoveParams {
                op: Some(FreeOp::Insert),
                word: Some(word.to_string()),
                ..Default::default()
            },
        )
    }

    pub fn cancel(position: usize) -> Move {
        Move::with(
            MoveKind::FreeInsertReduce,
            position,
            MoveParams {
                op: Some(FreeOp::Cancel),
                ..Default::default()
            },
        )
    }

    /// Free reduction of a window, or of the whole cyclic word when `length` is `None`.
    pub fn reduce(position: usize, length: Option<usize>) -> Move {
        Move::with(
            MoveKind::FreeInsertReduce,
            position,
            MoveParams {
                op: Some(FreeOp::Reduce),
                length,
                ..Default::default()
            },
        )
    }

    pub fn commute(position: usize) -> Move {
        Move::with(MoveKind::Commutation, position, MoveParams::default())
    }

    pub fn rotate(position: usize) -> Move {
        Move::with(MoveKind::CyclicRotate, position, MoveParams::default())
    }

    pub fn conjugate(conjugator: &str) -> Move {
        Move::with(
            MoveKind::Conjugate,
            0,
            MoveParams {
                conjugator: Some(conjugator.to_string()),
                ..Default::default()
            },
        )
    }

    pub fn stabilize(sign: i32) -> Move {
        Move::with(
            MoveKind::Stabilize,
            0,
            MoveParams {
                sign: Some(sign),
                ..Default::default()
            },
        )
    }

    pub fn destabilize(position: usize) -> Move {
        Move::with(MoveKind::Destabilize, position, MoveParams::default())
    }

    pub fn crossing_change(position: usize) -> Move {
        Move::with(MoveKind::CrossingChange, position, MoveParams::default())
    }

    pub fn template(position: usize, id: &str, direction: Direction, shift: usize) -> Move {
        Move::with(
            MoveKind::Template,
            position,
            MoveParams {
                id: Some(id.to_string()),
                direction: Some(direction),
                shift: Some(shift),
                ..Default::default()
            },
        )
    }
}

fn missing(kind: MoveKind, what: &str) -> Error {
    Error::Move(format!("{kind:?} needs parameter `{what}`"))
}

/// `len` letters of the cyclic word starting at `pos`, as `(word, start)` where
/// the window is `word[start..start+len]`; wrapping windows rotate the word first.
fn window(w: &BraidWord, pos: usize, len: usize) -> Result<(BraidWord, usize)> {
    let n = w.len();
    if len > n || (n > 0 && pos >= n) || (n == 0 && pos > 0) {
        return Err(Error::Move(format!(
            "window of length {len} at {pos} does not fit a word of length {n}"
        )));
    }
    if pos + len <= n {
        Ok((w.clone(), pos))
    } else {
        Ok((w.rotate(pos), 0))
    }
}

/// Applies one move, returning the new word and the move's cost.
pub fn apply_move(w: &BraidWord, m: &Move) -> Result<(BraidWord, u32)> {
    apply_move_in(catalog(), w, m)
}

pub fn apply_move_in(cat: &TemplateCatalog, w: &BraidWord, m: &Move) -> Result<(BraidWord, u32)> {
    let n = w.strands();
    let p = &m.params;
    let pos = m.position;
    let (out, cost) = match m.kind {
        MoveKind::BraidRelation => {
            let len = p.length.ok_or_else(|| missing(m.kind, "length"))?;
            let text = p
                .replacement
                .as_deref()
                .ok_or_else(|| missing(m.kind, "replacement"))?;
            let repl = parse_word(text, n)?;
            let (base, start) = window(w, pos, len)?;
            let old = base.slice(start, start + len);
            if !equal_in_group(&old, &repl) {
                return Err(Error::Move(format!(
                    "relation at {pos}: expected a word equal to {repl}, found {old}"
                )));
            }
            (base.splice(start, len, repl.letters()), 0)
        }
        MoveKind::FreeInsertReduce => match p.op.ok_or_else(|| missing(m.kind, "op"))? {
            FreeOp::Insert => {
                let text = p.word.as_deref().ok_or_else(|| missing(m.kind, "word"))?;
                let x = parse_word(text, n)?;
                if pos > w.len() {
                    return Err(Error::Move(format!("insert position {pos} past end")));
                }
                let mut ins = x.letters().to_vec();
                ins.extend(x.inverse().letters());
                (w.splice(pos, 0, &ins), 0)
            }
            FreeOp::Cancel => {
                let (base, start) = window(w, pos, 2)?;
                let l = base.letters();
                if l[start] != l[start + 1].inverse() {
                    return Err(Error::Move(format!(
                        "cancel at {pos}: letters {} are not inverse",
                        base.slice(start, start + 2)
                    )));
                }
                (base.splice(start, 2, &[]), 0)
            }
            FreeOp::Reduce => match p.length {
                None => (w.cyclic_reduce(), 0),
                Some(len) => {
                    let (base, start) = window(w, pos, len)?;
                    let red = base.slice(start, start + len).free_reduce();
                    (base.splice(start, len, red.letters()), 0)
                }
            },
        },
        MoveKind::Commutation => {
            let (base, start) = window(w, pos, 2)?;
            let l = base.letters();
            let (x, y) = (l[start], l[start + 1]);
            if x.index().abs_diff(y.index()) < 2 {
                return Err(Error::Move(format!(
                    "commutation at {pos}: {} do not commute",
                    base.slice(start, start + 2)
                )));
            }
            (base.splice(start, 2, &[y, x]), 0)
        }
        MoveKind::CyclicRotate => {
            if pos > 0 && pos >= w.len() {
                return Err(Error::Move(format!("rotation {pos} past end")));
            }
            (w.rotate(pos), 0)
        }
        MoveKind::Conjugate => {
            let text = p
                .conjugator
                .as_deref()
                .ok_or_else(|| missing(m.kind, "conjugator"))?;
            let c = parse_word(text, n)?;
            (&(&c.inverse() * w) * &c, 0)
        }
        MoveKind::Stabilize => {
            let sign = p.sign.ok_or_else(|| missing(m.kind, "sign"))?;
            if sign != 1 && sign != -1 {
                return Err(Error::Move(format!(
                    "stabilisation sign must be ±1, got {sign}"
                )));
            }
            let mut letters = w.letters().to_vec();
            letters.push(Letter::new(n, sign > 0));
            (BraidWord::new(n + 1, letters)?, 0)
        }
        MoveKind::Destabilize => {
            if n < 2 {
                return Err(Error::Move(
                    "cannot destabilize a braid on one strand".into(),
                ));
            }
            let l = w.letters();
            if pos >= l.len() || l[pos].index() != n - 1 {
                return Err(Error::Move(format!(
                    "destabilize at {pos}: expected σ_{} or its inverse",
                    n - 1
                )));
            }
            if w.generator_counts()[n - 1] != 1 {
                return Err(Error::Move(format!(
                    "destabilize: σ_{} occurs more than once",
                    n - 1
                )));
            }
            let rest = w.splice(pos, 1, &[]);
            (BraidWord::new(n - 1, rest.letters().to_vec())?, 0)
        }
        MoveKind::CrossingChange => {
            if pos >= w.len() {
                return Err(Error::Move(format!("crossing change at {pos} past end")));
            }
            let flipped = w.letters()[pos].inverse();
            (w.splice(pos, 1, &[flipped]), 1)
        }
        MoveKind::Template => {
            let id = p.id.as_deref().ok_or_else(|| missing(m.kind, "id"))?;
            let t = cat.get(id)?;
            let dir = p.direction.unwrap_or(Direction::Forward);
            let shift = p.shift.unwrap_or(0);
            if shift + t.strands > n {
                return Err(Error::Template(format!(
                    "{id} on {} strands shifted by {shift} does not fit {n} strands",
                    t.strands
                )));
            }
            let (from, to) = match dir {
                Direction::Forward => (&t.lhs, &t.rhs),
                Direction::Backward => (&t.rhs, &t.lhs),
            };
            let from = from.shifted(shift, n)?;
            let to = to.shifted(shift, n)?;
            let (base, start) = window(w, pos, from.len())?;
            let found = base.slice(start, start + from.len());
            if found.letters() != from.letters() {
                return Err(Error::Template(format!(
                    "{id} at {pos}: expected {}, found {}",
                    from.to_compact_text(),
                    found.to_compact_text()
                )));
            }
            let delta = to.exponent_sum() - from.exponent_sum();
            let stored = match dir {
                Direction::Forward => t.exponent_delta,
                Direction::Backward => -t.exponent_delta,
            };
            if delta != stored {
                return Err(Error::Template(format!(
                    "{id}: exponent-sum change {delta} differs from stored {stored}"
                )));
            }
            (base.splice(start, from.len(), to.letters()), t.cost)
        }
    };
    if cost > 0 && out.closure_components() != w.closure_components() {
        return Err(Error::Move(format!(
            "{:?} at {pos} changed the number of components",
            m.kind
        )));
    }
    Ok((out, cost))
}
