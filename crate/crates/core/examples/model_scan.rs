//! Exhaustive search for small models of an identity system.
//!
//! cargo run --release --example model_scan

use std::collections::HashSet;

use epigroup::engine::{enumerate, enumerate_with_jobs, oracle};
use epigroup::identity::parse_presentation;

fn main() {
    let all = enumerate(3, None).unwrap();
    println!("order 3: {} associative tables", all.len());

    let sys = parse_presentation(include_str!("../data/identities/nil_commutative.id")).unwrap().system();
    let models = enumerate_with_jobs(3, Some(&sys), 4).unwrap();
    let mut classes = HashSet::new();
    println!("{} tables satisfy x^2 y = 0, x y = y x", models.len());
    for s in &models {
        if !classes.insert(s.canonical_table()) {
            continue;
        }
        let nil = oracle::is_nil_by_search(s);
        println!(
            "{:?}  nil {nil}  index {:?}  group elements {:?}",
            s.rows(),
            s.nilpotency_index().ok(),
            s.group_elements()
        );
    }
    println!("{} up to isomorphism", classes.len());
}
