//! Shipped move scripts, embedded so the binary can replay them anywhere.

use crate::families::FamilyId;

pub const BAD_BOUND_NAME: &str = "t3_7_bad_bound";

/// File stem, family and parameter of every committed fixture.
pub fn fixture_plan() -> Vec<(String, FamilyId, usize)> {
    let mut plan = vec![
        ("t3_7".to_string(), FamilyId::T3_7, 0),
        ("t3_10".to_string(), FamilyId::T3_10, 0),
        ("t3_13".to_string(), FamilyId::T3_13, 0),
    ];
    for k in 0..=8 {
        plan.push((format!("t3_6k16_k{k}"), FamilyId::T3_6k16, k));
        plan.push((format!("t3_6k19_k{k}"), FamilyId::T3_6k19, k));
    }
    for k in 0..=2 {
        plan.push((format!("t3_bridge_k{k}"), FamilyId::T3BridgeChange, k));
    }
    for n in (5..=49).step_by(2) {
        plan.push((format!("t4_n{n}"), FamilyId::T4Eps, n));
    }
    for n in [5, 7, 11, 13, 17, 19, 23, 25] {
        plan.push((format!("t6_n{n}"), FamilyId::T6Split, n));
    }
    for k in 1..=3 {
        plan.push((format!("doubling_k{k}"), FamilyId::Doubling, k));
    }
    plan
}

macro_rules! shipped {
    ($name:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name, ".json")))
    };
}

/// Three-strand fixtures compiled into the library, as `(stem, json)`.
pub const SHIPPED: &[(&str, &str)] = &[
    shipped!("t3_7"),
    shipped!("t3_10"),
    shipped!("t3_13"),
    shipped!("t3_6k16_k0"),
    shipped!("t3_6k19_k0"),
    shipped!("t3_6k16_k1"),
    shipped!("t3_6k19_k1"),
    shipped!("t3_6k16_k2"),
    shipped!("t3_6k19_k2"),
    shipped!("t3_6k16_k3"),
    shipped!("t3_6k19_k3"),
    shipped!("t3_6k16_k4"),
    shipped!("t3_6k19_k4"),
    shipped!("t3_6k16_k5"),
    shipped!("t3_6k19_k5"),
    shipped!("t3_6k16_k6"),
    shipped!("t3_6k19_k6"),
    shipped!("t3_6k16_k7"),
    shipped!("t3_6k19_k7"),
    shipped!("t3_6k16_k8"),
    shipped!("t3_6k19_k8"),
    shipped!("t3_bridge_k0"),
    shipped!("t3_bridge_k1"),
    shipped!("t3_bridge_k2"),
    shipped!("t3_7_bad_bound"),
];

pub fn shipped(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, j)| *j)
}
