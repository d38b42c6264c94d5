mod common;

use std::collections::BTreeSet;

use epigroup::terms::{Factor, Length, Variable, Word};
use proptest::prelude::*;

fn var() -> impl Strategy<Value = Word> {
    prop::sample::select(vec!["x", "y", "z", "t", "x1", "x12"]).prop_map(|v| Word::var(Variable::new(v).unwrap()))
}

fn word() -> impl Strategy<Value = Word> {
    var().prop_recursive(4, 8, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Word::inv),
            (inner.clone(), inner).prop_map(|(a, b)| a.concat(b)),
        ]
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(w in word()) {
        let text = w.to_string();
        prop_assert_eq!(text.parse::<Word>().unwrap(), w);
    }

    #[test]
    fn content_is_a_homomorphism(u in word(), v in word()) {
        let mut both: BTreeSet<Variable> = u.content();
        both.extend(v.content());
        prop_assert_eq!(u.clone().concat(v.clone()).content(), both);
        prop_assert_eq!(u.clone().inv().content(), u.content());
    }

    #[test]
    fn length_adds_on_semigroup_words(u in word(), v in word()) {
        let uv = u.clone().concat(v.clone());
        match (u.length(), v.length()) {
            (Length::Finite(a), Length::Finite(b)) => prop_assert_eq!(uv.length(), Length::Finite(a + b)),
            _ => prop_assert_eq!(uv.length(), Length::Infinite),
        }
    }

    #[test]
    fn products_are_flat(u in word(), v in word()) {
        let uv = u.clone().concat(v.clone());
        prop_assert_eq!(uv.flatten().len(), u.flatten().len() + v.flatten().len());
        prop_assert_eq!(uv.size(), u.size() + v.size());
    }

    #[test]
    fn full_substitution_replaces_every_variable(u in word(), img in word()) {
        let map = u.content().into_iter().map(|v| (v, img.clone())).collect();
        let s = u.substitute(&map).unwrap();
        prop_assert_eq!(s.content(), img.content());
    }
}

#[test]
fn exhaustive_round_trip_for_small_words() {
    let ws = common::words_up_to(&["x", "y"], 5);
    assert_eq!(ws.len(), 514);
    for w in ws {
        assert_eq!(w.to_string().parse::<Word>().unwrap(), w, "{w}");
        assert!(w.flatten().iter().all(|f| !matches!(f, Factor::Inv(u) if u.flatten().is_empty())));
    }
}
