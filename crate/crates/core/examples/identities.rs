//! Identities, the `w = 0` shorthand, the semilattice word problem and the
//! degree identities.
//!
//! cargo run --example identities

use epigroup::identity::{make_deg_identity, matches_deg_condition_ii, parse_presentation, sl_holds, Identity};

fn main() {
    let pres = parse_presentation(include_str!("../data/identities/nil_commutative.id")).unwrap();
    for e in &pres.entries {
        println!("line {}: {}", e.line, e.source);
        for id in &e.expanded {
            println!("    {id}");
        }
    }

    for src in ["x y = y x", "x^2 = x~", "x y = x", "x~~ y = (y x)~"] {
        let id: Identity = src.parse().unwrap();
        println!("{src:<16} holds in SL: {}", sl_holds(&id));
    }

    for (i, j) in [(1, 1), (1, 2), (2, 3), (1, 3)] {
        let id = make_deg_identity(3, i, j).unwrap();
        println!("deg(3, {i}, {j}): {id}   shape ok: {}", matches_deg_condition_ii(&id, 3));
    }
}
