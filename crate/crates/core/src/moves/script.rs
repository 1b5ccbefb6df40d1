//! Move scripts and their replay into certificates.

use serde::{Deserialize, Serialize};

use crate::braid::{equal_closures_upto_conjugacy, parse_word, BraidWord, ConjugacyOptions};
use crate::error::{Error, Result};
use crate::moves::{
    apply_move_in, catalog, is_unknot, Move, MoveKind, TemplateCatalog, UnknotVerdict,
};

/// Target value meaning "the closure of the final word is the unknot".
pub const UNKNOT: &str = "unknot";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claim {
    /// `"unknot"` or a braid word on the final strand count.
    pub target: String,
    pub cost_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveScript {
    pub strands: usize,
    pub start: String,
    pub moves: Vec<Move>,
    pub claim: Claim,
}

impl MoveScript {
    pub fn from_json(text: &str) -> Result<MoveScript> {
        serde_json::from_str(text).map_err(|e| Error::Script(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scripts serialise")
    }

    pub fn start_word(&self) -> Result<BraidWord> {
        parse_word(&self.start, self.strands)
    }

    /// Sum of the costs of crossing changes and templates, without replaying.
    pub fn nominal_cost(&self) -> u32 {
        self.moves
            .iter()
            .map(|m| match m.kind {
                MoveKind::CrossingChange => 1,
                MoveKind::Template => m
                    .params
                    .id
                    .as_deref()
                    .and_then(|id| catalog().get(id).ok())
                    .map_or(0, |t| t.cost),
                _ => 0,
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub index: usize,
    pub kind: MoveKind,
    pub position: usize,
    pub cost: u32,
    pub cumulative_cost: u32,
    pub strands: usize,
    pub length: usize,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepFailure {
    pub index: usize,
    pub kind: MoveKind,
    pub position: usize,
    pub word_before: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub start: String,
    pub strands_start: usize,
    pub end: String,
    pub strands_end: usize,
    pub target: String,
    pub total_cost: u32,
    pub cost_bound: u32,
    pub steps_applied: usize,
    pub target_reached: bool,
    pub within_bound: bool,
    pub verified: bool,
    pub failure: Option<StepFailure>,
    pub log: Vec<StepRecord>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let status = if self.verified { "VERIFIED" } else { "FAILED" };
        let mut line = format!(
            "{status}: {} steps, cost {} (bound {}), target {} {}",
            self.steps_applied,
            self.total_cost,
            self.cost_bound,
            self.target,
            if self.target_reached {
                "reached"
            } else {
                "not reached"
            }
        );
        if let Some(f) = &self.failure {
            line.push_str(&format!(
                "; step {} ({:?}) failed: {}",
                f.index, f.kind, f.error
            ));
        }
        line
    }
}

fn target_reached(end: &BraidWord, target: &str) -> bool {
    if target == UNKNOT {
        return is_unknot(end) == UnknotVerdict::Yes;
    }
    match parse_word(target, end.strands()) {
        Ok(t) => equal_closures_upto_conjugacy(end, &t, &ConjugacyOptions::default())
            .map(|r| r.is_equal())
            .unwrap_or(false),
        Err(_) => false,
    }
}

/// Replays every move of `script`, recording the word after each step.
///
/// Malformed start words are an error; a failing step is reported in the
/// certificate together with the word it was applied to.
pub fn verify_script(script: &MoveScript) -> Result<Certificate> {
    verify_script_with(catalog(), script)
}

pub fn verify_script_with(cat: &TemplateCatalog, script: &MoveScript) -> Result<Certificate> {
    let start = script
        .start_word()
        .map_err(|e| Error::Script(format!("start word: {e}")))?;
    let mut w = start.clone();
    let mut total = 0u32;
    let mut log = Vec::with_capacity(script.moves.len());
    let mut failure = None;
    for (index, m) in script.moves.iter().enumerate() {
        match apply_move_in(cat, &w, m) {
            Ok((next, cost)) => {
                w = next;
                total += cost;
                log.push(StepRecord {
                    index,
                    kind: m.kind,
                    position: m.position,
                    cost,
                    cumulative_cost: total,
                    strands: w.strands(),
                    length: w.len(),
                    word: w.to_compact_text(),
                });
            }
            Err(e) => {
                failure = Some(StepFailure {
                    index,
                    kind: m.kind,
                    position: m.position,
                    word_before: w.to_compact_text(),
                    error: e.to_string(),
                });
                break;
            }
        }
    }
    let steps_applied = log.len();
    let reached = failure.is_none() && target_reached(&w, &script.claim.target);
    let within = total <= script.claim.cost_bound;
    Ok(Certificate {
        start: start.to_compact_text(),
        strands_start: start.strands(),
        end: w.to_compact_text(),
        strands_end: w.strands(),
        target: script.claim.target.clone(),
        total_cost: total,
        cost_bound: script.claim.cost_bound,
        steps_applied,
        target_reached: reached,
        within_bound: within,
        verified: failure.is_none() && reached && within,
        failure,
        log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_script(bound: u32) -> MoveScript {
        MoveScript {
            strands: 2,
            start: "aaa".into(),
            moves: vec![
                Move::crossing_change(0),
                Move::reduce(0, None),
                Move::destabilize(0),
            ],
            claim: Claim {
                target: UNKNOT.into(),
                cost_bound: bound,
            },
        }
    }

    #[test]
    fn trefoil_unknots_with_one_change() {
        let cert = verify_script(&trefoil_script(1)).unwrap();
        assert!(cert.verified, "{}", cert.summary());
        assert_eq!(cert.total_cost, 1);
        assert_eq!(cert.strands_end, 1);
        assert_eq!(cert.log.len(), 3);
        assert_eq!(cert.log[1].word, "a");
    }

    #[test]
    fn bound_violation_is_not_verified() {
        let cert = verify_script(&trefoil_script(0)).unwrap();
        assert!(cert.target_reached);
        assert!(!cert.within_bound);
        assert!(!cert.verified);
    }

    #[test]
    fn failing_step_is_located() {
        let mut s = trefoil_script(1);
        s.moves.insert(0, Move::commute(0));
        let cert = verify_script(&s).unwrap();
        let f = cert.failure.expect("failure recorded");
        assert_eq!(f.index, 0);
        assert_eq!(f.word_before, "a^3");
        assert!(!cert.verified);
    }

    #[test]
    fn word_targets_compare_closures() {
        let s = MoveScript {
            strands: 3,
            start: "(ab)^6ab".into(),
            moves: vec![Move::template(
                0,
                "T2b",
                crate::moves::Direction::Forward,
                0,
            )],
            claim: Claim {
                target: "ba^7".into(),
                cost_bound: 2,
            },
        };
        let cert = verify_script(&s).unwrap();
        assert!(cert.verified, "{}", cert.summary());
    }

    #[test]
    fn json_round_trip_is_stable() {
        let s = trefoil_script(1);
        let text = s.to_json();
        let back = MoveScript::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
        assert!(MoveScript::from_json(r#"{"strands":2}"#).is_err());
    }
}
