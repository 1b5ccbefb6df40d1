//! Generators for the untwisting scripts of torus knot families.

mod asymptotics;
mod builder;
pub mod three;
pub mod wide;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braid::BracketForm;
use crate::error::{Error, Result};
use crate::moves::MoveScript;

pub use asymptotics::{
    asymptotic_csv, asymptotic_row, asymptotic_table, doubling_twists, limit_ratio, AsymptoticRow,
};
pub use three::t3_cost;
pub use wide::{
    doubling_cost, doubling_script, t4_claim, t4_cost, t4_script, t6_claim, t6_cost, t6_script,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyId {
    T3_7,
    T3_10,
    T3_13,
    T3_6k16,
    T3_6k19,
    T3BridgeChange,
    T4Eps,
    T6Split,
    Doubling,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::T3_7,
        FamilyId::T3_10,
        FamilyId::T3_13,
        FamilyId::T3_6k16,
        FamilyId::T3_6k19,
        FamilyId::T3BridgeChange,
        FamilyId::T4Eps,
        FamilyId::T6Split,
        FamilyId::Doubling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::T3_7 => "T3_7",
            FamilyId::T3_10 => "T3_10",
            FamilyId::T3_13 => "T3_13",
            FamilyId::T3_6k16 => "T3_6k16",
            FamilyId::T3_6k19 => "T3_6k19",
            FamilyId::T3BridgeChange => "T3_bridge_change",
            FamilyId::T4Eps => "T4_eps",
            FamilyId::T6Split => "T6_split",
            FamilyId::Doubling => "Doubling",
        }
    }

    /// Whether the family is indexed by `n` rather than `k`.
    pub fn takes_n(self) -> bool {
        matches!(self, FamilyId::T4Eps | FamilyId::T6Split)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyId> {
        let id = match s {
            "T4" => FamilyId::T4Eps,
            "T6" => FamilyId::T6Split,
            _ => *FamilyId::ALL
                .iter()
                .find(|f| f.name().eq_ignore_ascii_case(s))
                .ok_or_else(|| Error::FamilyParam(format!("unknown family {s:?}")))?,
        };
        Ok(id)
    }
}

/// Bracket presentations of `T(3, 6k+9)` and `T(3, 6k+12)`.
pub fn lemma1_bracket(k: usize, variant: u32) -> Result<BracketForm> {
    let fives = |n: usize| std::iter::repeat(5).take(n);
    let e: Vec<u32> = match variant {
        9 => std::iter::once(3)
            .chain(fives(k))
            .chain([4, 3])
            .chain(fives(k))
            .chain([4])
            .collect(),
        12 => std::iter::once(3)
            .chain(fives(k + 1))
            .chain([3, 4])
            .chain(fives(k))
            .chain([4])
            .collect(),
        _ => {
            return Err(Error::FamilyParam(format!(
                "bracket variant must be 9 or 12, got {variant}"
            )))
        }
    };
    BracketForm::new(e)
}

/// Adds one full twist to the closure of a bracket at the cyclic pair `(pos, pos+1)`.
pub fn fulltwist_insert(b: &BracketForm, pos: usize) -> Result<BracketForm> {
    if pos >= b.len() {
        return Err(Error::Bracket(format!(
            "pair index {pos} out of range for a bracket of length {}",
            b.len()
        )));
    }
    Ok(b.insert_full_twist(pos))
}

/// Torus parameter `m` of `T(3, m)` for the three-strand families.
pub fn three_strand_parameter(family: FamilyId, k: usize) -> Result<usize> {
    Ok(match family {
        FamilyId::T3_7 => 7,
        FamilyId::T3_10 => 10,
        FamilyId::T3_13 => 13,
        FamilyId::T3_6k16 => 6 * k + 16,
        FamilyId::T3_6k19 => 6 * k + 19,
        FamilyId::T3BridgeChange => 3 * k + 5,
        other => {
            return Err(Error::FamilyParam(format!(
                "{other} is not a three-strand family"
            )))
        }
    })
}

/// Untwisting script for `T(3, m)`, `3 ∤ m`, claiming cost `⌈2m/3⌉`.
pub fn t3_script(m: usize) -> Result<MoveScript> {
    if m == 0 || m % 3 == 0 {
        return Err(Error::FamilyParam(format!("T(3,{m}) is not a knot")));
    }
    let mut b = builder::Builder::new(&format!("(ab)^{m}"), 3)?;
    three::t3_block(&mut b, 0, m, 0)?;
    Ok(b.finish(t3_cost(m)))
}

pub fn lemma4_script(k: usize, family: FamilyId) -> Result<MoveScript> {
    match family {
        FamilyId::T3BridgeChange => {
            return Err(Error::FamilyParam(
                "use bridge_change_script for the bridge family".into(),
            ))
        }
        FamilyId::T3_7
        | FamilyId::T3_10
        | FamilyId::T3_13
        | FamilyId::T3_6k16
        | FamilyId::T3_6k19 => {}
        other => {
            return Err(Error::FamilyParam(format!(
                "{other} is not a three-strand family"
            )))
        }
    }
    t3_script(three_strand_parameter(family, k)?)
}

/// `T(3, 3k+5)`: one crossing change down to `T(3, 3k+4)`, then its script.
pub fn bridge_change_script(k: usize) -> Result<MoveScript> {
    t3_script(3 * k + 5)
}

/// Any family by name; `param` is `k` or `n` as the family requires.
pub fn family_script(family: FamilyId, param: usize) -> Result<MoveScript> {
    match family {
        FamilyId::T3BridgeChange => bridge_change_script(param),
        FamilyId::T4Eps => t4_script(param),
        FamilyId::T6Split => t6_script(param),
        FamilyId::Doubling => doubling_script(param),
        _ => lemma4_script(param, family),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{equal_closures_upto_conjugacy, parse_word, ConjugacyOptions};

    #[test]
    fn bracket_examples() {
        assert_eq!(lemma1_bracket(0, 9).unwrap().to_string(), "[3,4,3,4]");
        assert_eq!(lemma1_bracket(0, 12).unwrap().to_string(), "[3,5,3,4,4]");
        assert_eq!(lemma1_bracket(1, 9).unwrap().to_string(), "[3,5,4,3,5,4]");
        assert!(lemma1_bracket(0, 10).is_err());
    }

    #[test]
    fn brackets_close_to_torus_knots() {
        for k in 0..3 {
            for v in [9, 12] {
                let w = lemma1_bracket(k, v).unwrap().to_word();
                let t = parse_word(&format!("(ab)^{}", 6 * k + v as usize), 3).unwrap();
                let r =
                    equal_closures_upto_conjugacy(&w, &t, &ConjugacyOptions::default()).unwrap();
                assert!(r.is_equal(), "k={k} v={v}: {r:?}");
            }
        }
    }

    #[test]
    fn full_twist_insertion_examples() {
        let b: BracketForm = "[2,2]".parse().unwrap();
        let b = fulltwist_insert(&b, 0).unwrap();
        assert_eq!(b.to_string(), "[3,3,3]");
        let b = fulltwist_insert(&b, 0).unwrap();
        assert_eq!(b.to_string(), "[4,3,4,3]");
        let b: BracketForm = "[3,4,3,4]".parse().unwrap();
        assert_eq!(fulltwist_insert(&b, 0).unwrap().to_string(), "[4,3,5,3,4]");
        assert_eq!(fulltwist_insert(&b, 1).unwrap().to_string(), "[3,5,3,4,4]");
        assert_eq!(fulltwist_insert(&b, 3).unwrap().to_string(), "[4,4,3,5,3]");
        assert!(fulltwist_insert(&b, 4).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert_eq!("T4".parse::<FamilyId>().unwrap(), FamilyId::T4Eps);
        assert!("T5".parse::<FamilyId>().is_err());
    }

    #[test]
    fn three_strand_costs() {
        assert_eq!(
            lemma4_script(0, FamilyId::T3_7).unwrap().claim.cost_bound,
            5
        );
        assert_eq!(
            lemma4_script(0, FamilyId::T3_6k16)
                .unwrap()
                .claim
                .cost_bound,
            11
        );
        assert_eq!(
            lemma4_script(1, FamilyId::T3_6k19)
                .unwrap()
                .claim
                .cost_bound,
            17
        );
        assert_eq!(bridge_change_script(1).unwrap().claim.cost_bound, 6);
        assert_eq!(bridge_change_script(2).unwrap().claim.cost_bound, 8);
    }
}
