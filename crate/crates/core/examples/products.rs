//! Building epigroups from rows, direct products and identity checks with
//! witnesses.
//!
//! cargo run --example products

use epigroup::engine::{fixture, FiniteEpigroup};
use epigroup::identity::{parse_presentation, IdentitySystem};

fn main() {
    let z2 = FiniteEpigroup::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap().named("Z2");
    let n2 = fixture("n2").unwrap();
    let p = z2.direct_product(&n2);
    println!("Z2 x N2:\n{p}");
    println!("group elements {:?}, idempotents {:?}", p.group_elements(), p.idempotents());

    let laws: IdentitySystem = parse_presentation(include_str!("../data/identities/epigroup_laws.id")).unwrap().system();
    println!("epigroup laws hold: {}", p.satisfies(&laws));

    let zero = parse_presentation(include_str!("../data/identities/pinv_zero.id")).unwrap().system();
    for s in [&n2, &z2, &p] {
        match s.find_violation(&zero) {
            None => println!("{}: x~ = 0 holds", s.name().unwrap_or("product")),
            Some(v) => println!("{}: {v}", s.name().unwrap_or("product")),
        }
    }

    match FiniteEpigroup::from_rows(&[vec![1, 0], vec![0, 0]]) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
