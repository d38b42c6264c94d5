//! Special-element facts checked on every lattice with at most 7 elements.
//!
//! cargo run --release --example lattice_lemmas

use epigroup::lattice::{enumerate_lattices, MAX_LATTICE_SIZE};
use rayon::prelude::*;

fn main() {
    for n in 1..=MAX_LATTICE_SIZE {
        let ls = enumerate_lattices(n, true).unwrap();
        let with_neutral_atom = ls.iter().filter(|l| !l.neutral_atoms().is_empty()).count();
        let failures: usize = ls
            .par_iter()
            .map(|l| {
                let mut bad = l.check_lemmas().iter().filter(|r| r.is_err()).count();
                for x in l.elements() {
                    if l.is_cancellable_element(x) && !l.is_modular_element(x) {
                        bad += 1;
                    }
                    if l.is_neutral_median(x) != l.is_neutral_sublattice(x) {
                        bad += 1;
                    }
                }
                bad
            })
            .sum();
        let modular_noncancellable: usize = ls
            .iter()
            .map(|l| l.elements().filter(|&x| l.is_modular_element(x) && !l.is_cancellable_element(x)).count())
            .sum();
        println!(
            "size {n}: {:>3} lattices, {with_neutral_atom:>3} with a neutral atom, {modular_noncancellable:>3} modular non-cancellable elements, {failures} failures",
            ls.len()
        );
    }
}
