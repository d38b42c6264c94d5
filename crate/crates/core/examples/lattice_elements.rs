//! Neutral, modular and cancellable elements of the shipped lattices.
//!
//! cargo run --example lattice_elements

use epigroup::lattice::lattice_catalog;

fn main() {
    for l in lattice_catalog() {
        println!("{} (size {}, atoms {:?})", l.name().unwrap(), l.size(), l.atoms());
        for x in l.elements() {
            let p = l.profile(x);
            let mut flags = Vec::new();
            for (on, label) in [(p.neutral, "neutral"), (p.modular, "modular"), (p.cancellable, "cancellable"), (p.atom, "atom")] {
                if on {
                    flags.push(label);
                }
            }
            print!("  {x}: {}", flags.join(" "));
            if let Some((y, z)) = p.modular_witness {
                print!("  [modular law fails for {y} <= {z}]");
            }
            if let Some((y, z)) = p.cancellable_witness {
                print!("  [does not separate {y}, {z}]");
            }
            println!();
        }
    }
}
