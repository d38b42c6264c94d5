//! Pseudoinverses, idempotent powers and group elements of the shipped
//! Cayley tables.
//!
//! cargo run --example inspect_epigroup [fixture-name]

use epigroup::engine::{catalog, fixture};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "mono_i2_p2".into());
    let s = fixture(&name).unwrap_or_else(|| panic!("unknown fixture {name}"));
    println!("{s}");
    for x in s.elements() {
        let m = s.monogenic(x);
        println!(
            "x={x}: index {} period {}  x~={}  x^w={}  group element: {}",
            m.index,
            m.period,
            s.pseudoinverse(x),
            s.omega(x),
            s.is_group_element(x)
        );
    }

    println!("\n{:<16} {:>5} {:>4} {:>6} {:>5}", "fixture", "order", "nil", "index", "|Gr|");
    for s in catalog() {
        let index = s.nilpotency_index().map_or("-".to_string(), |n| n.to_string());
        println!("{:<16} {:>5} {:>4} {:>6} {:>5}", s.name().unwrap(), s.order(), s.is_nil(), index, s.group_elements().len());
    }
}
