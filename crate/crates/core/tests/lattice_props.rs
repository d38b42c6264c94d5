use epigroup::lattice::{enumerate_lattices, lattice_catalog, FiniteLattice};

fn lattices() -> Vec<FiniteLattice> {
    (1..=6).flat_map(|n| enumerate_lattices(n, false).unwrap()).chain(lattice_catalog()).collect()
}

#[test]
fn tables_satisfy_the_lattice_axioms() {
    for l in lattices() {
        let e: Vec<usize> = l.elements().collect();
        for &a in &e {
            assert_eq!(l.join(a, a), a);
            for &b in &e {
                assert_eq!(l.join(a, b), l.join(b, a));
                assert_eq!(l.meet(a, b), l.meet(b, a));
                assert_eq!(l.join(a, l.meet(a, b)), a);
                assert_eq!(l.meet(a, l.join(a, b)), a);
                assert_eq!(l.leq(a, b), l.join(a, b) == b);
                for &c in &e {
                    assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
                    assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
                }
            }
        }
    }
}

#[test]
fn element_implications() {
    for l in lattices() {
        for x in l.elements() {
            let p = l.profile(x);
            assert!(!p.cancellable || p.modular);
            assert!(!p.neutral || p.cancellable);
            assert_eq!(p.neutral, l.is_neutral_sublattice(x));
            if x == l.bottom() || x == l.top() {
                assert!(p.neutral && p.cancellable);
            }
        }
        if l.is_distributive() {
            assert!(l.elements().all(|x| l.is_neutral_element(x) && l.is_cancellable_element(x)));
        }
    }
}

#[test]
fn witnesses_are_genuine() {
    for l in lattices() {
        for x in l.elements() {
            if let Some((y, z)) = l.modular_witness(x) {
                assert!(l.leq(y, z));
                assert_ne!(l.meet(l.join(x, y), z), l.join(l.meet(x, z), y));
            }
            if let Some((y, z)) = l.cancellable_witness(x) {
                assert_ne!(y, z);
                assert_eq!((l.join(x, y), l.meet(x, y)), (l.join(x, z), l.meet(x, z)));
            }
        }
    }
}

#[test]
fn relabeled_lattices_are_isomorphic() {
    for l in enumerate_lattices(6, true).unwrap() {
        let n = l.size();
        let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 2) % n).collect();
        let r = l.relabel(&perm).unwrap();
        assert!(r.is_isomorphic(&l));
        for x in l.elements() {
            assert_eq!(r.is_modular_element(perm[x]), l.is_modular_element(x));
            assert_eq!(r.is_cancellable_element(perm[x]), l.is_cancellable_element(x));
            assert_eq!(r.is_neutral_element(perm[x]), l.is_neutral_element(x));
        }
    }
}
