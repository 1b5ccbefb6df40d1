use proptest::prelude::*;

use twistlab::braid::{
    equal_closures_upto_conjugacy, equal_in_group, full_twist, normal_form, parse_word,
    BracketForm, BraidWord, ConjugacyOptions,
};
use twistlab::moves::{apply_move, Move};
use twistlab::seifert::{lt_signature, ratio, seifert_matrix, sigma_hat};
use twistlab::torus::{torus_jumps, TorusParams};

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let signed: Vec<i32> = v.into_iter().map(|(i, p)| if p { i } else { -i }).collect();
        BraidWord::from_signed(strands, &signed).unwrap()
    })
}

fn knot_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(strands, max_len).prop_filter("closure is a knot", |w| w.closure_components() == 1)
}

fn samples(w: &BraidWord) -> (String, Vec<Option<i64>>) {
    let v = seifert_matrix(w).unwrap();
    let sig = [(1, 3), (2, 5), (3, 7)]
        .iter()
        .map(|&(a, b)| lt_signature(&v, &ratio(a, b)).ok().map(|x| x.sigma))
        .collect();
    (v.alexander_poly().to_string(), sig)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(w in word(5, 20)) {
        prop_assert_eq!(parse_word(&w.to_text(), 5).unwrap(), w.clone());
        prop_assert_eq!(parse_word(&w.to_compact_text(), 5).unwrap(), w);
    }

    #[test]
    fn normal_form_is_a_fixed_point(w in word(4, 16)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_left_weighted());
        prop_assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn inverse_pairs_do_not_change_the_element(w in word(4, 12), at in 0usize..13, g in 1i32..4) {
        let at = at.min(w.len());
        let x = BraidWord::from_signed(4, &[g, -g]).unwrap();
        let longer = w.splice(at, 0, x.letters());
        prop_assert!(equal_in_group(&w, &longer));
        prop_assert!(normal_form(&(&w * &w.inverse())).is_identity());
    }

    #[test]
    fn isotopy_keeps_invariants(w in knot_word(3, 10), c in word(3, 3), rot in 0usize..10, sign in prop::bool::ANY) {
        let base = samples(&w);
        let rotated = w.rotate(rot % w.len().max(1));
        prop_assert_eq!(samples(&rotated), base.clone());
        let (conj, cost) = apply_move(&w, &Move::conjugate(&c.to_text())).unwrap();
        prop_assert_eq!(cost, 0);
        prop_assert_eq!(samples(&conj), base.clone());
        let (stab, _) = apply_move(&w, &Move::stabilize(if sign { 1 } else { -1 })).unwrap();
        prop_assert_eq!(samples(&stab), base);
    }

    #[test]
    fn crossing_change_moves_exponent_sum_by_two(w in knot_word(3, 10), at in 0usize..10) {
        prop_assume!(!w.is_empty());
        let (changed, cost) = apply_move(&w, &Move::crossing_change(at % w.len())).unwrap();
        prop_assert_eq!(cost, 1);
        prop_assert_eq!((changed.exponent_sum() - w.exponent_sum()).abs(), 2);
        let (_, before) = samples(&w);
        let (_, after) = samples(&changed);
        for (x, y) in before.iter().zip(&after) {
            if let (Some(x), Some(y)) = (x, y) {
                prop_assert!((x - y).abs() <= 2);
            }
        }
    }

    #[test]
    fn sigma_hat_is_even_and_non_negative(w in knot_word(4, 9)) {
        let s = sigma_hat(&w).unwrap();
        prop_assert!(s >= 0 && s % 2 == 0);
        prop_assert!(s <= seifert_matrix(&w).unwrap().size() as i64);
    }

    #[test]
    fn torus_jump_count(p in 2i64..9, q in 2i64..30) {
        prop_assume!(p != q);
        if let Ok(t) = TorusParams::new(p, q) {
            let prof = torus_jumps(&t);
            prop_assert_eq!(prof.jumps.len() as i64, (p - 1) * (q - 1));
            prop_assert_eq!(*prof.cumulative.last().unwrap(), 0);
        }
    }

    #[test]
    fn moves_round_trip_through_json(pos in 0usize..40, len in 1usize..6, id in 0usize..3) {
        let m = match id {
            0 => Move::reduce(pos, Some(len)),
            1 => Move::crossing_change(pos),
            _ => Move::rotate(pos),
        };
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Move>(&text).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn full_twist_insertion_adds_one_full_twist(e in prop::collection::vec(2u32..6, 2..5), pos in 0usize..5) {
        let b = BracketForm::new(e).unwrap();
        let pos = pos % b.len();
        let twisted = b.insert_full_twist(pos).to_word();
        let expected = full_twist(3, 1).unwrap() * b.to_word();
        let rel = equal_closures_upto_conjugacy(&twisted, &expected, &ConjugacyOptions::default()).unwrap();
        prop_assert!(rel.is_equal(), "{} at {}: {:?}", b, pos, rel);
    }
}
