//! Brute-force characterisations used to cross-check the engine.
//!
//! Nothing here goes through the pseudoinverse map; each function searches
//! the Cayley table directly.

use super::{Element, FiniteEpigroup};

/// First idempotent among `x, x^2, x^3, ...`.
pub fn idempotent_power_by_search(s: &FiniteEpigroup, x: Element) -> Element {
    let mut p = x;
    loop {
        if s.mul(p, p) == p {
            return p;
        }
        p = s.mul(p, x);
    }
}

/// `x` is a unit of some local monoid `fSf`: there are an idempotent `f`
/// and an element `y` with `fx = xf = x`, `fy = yf = y` and `xy = yx = f`.
pub fn in_maximal_subgroup(s: &FiniteEpigroup, x: Element) -> bool {
    s.elements().filter(|&f| s.mul(f, f) == f).any(|f| {
        s.mul(f, x) == x
            && s.mul(x, f) == x
            && s.elements().any(|y| {
                s.mul(f, y) == y && s.mul(y, f) == y && s.mul(x, y) == f && s.mul(y, x) == f
            })
    })
}

/// Largest order accepted by [`in_subgroup_by_subsets`].
pub const SUBSET_SEARCH_MAX: usize = 10;

/// `x` belongs to a subset of `s` that is a group under the table product.
/// Exhaustive over all subsets containing `x`.
pub fn in_subgroup_by_subsets(s: &FiniteEpigroup, x: Element) -> bool {
    let n = s.order();
    assert!(n <= SUBSET_SEARCH_MAX, "subset search is exponential in the order");
    (1u32..(1 << n)).filter(|m| m & (1 << x) != 0).any(|mask| {
        let members: Vec<Element> = (0..n).filter(|&a| mask & (1 << a) != 0).collect();
        let closed = members.iter().all(|&a| members.iter().all(|&b| mask & (1 << s.mul(a, b)) != 0));
        if !closed {
            return false;
        }
        members.iter().any(|&e| {
            members.iter().all(|&a| s.mul(e, a) == a && s.mul(a, e) == a)
                && members.iter().all(|&a| members.iter().any(|&b| s.mul(a, b) == e && s.mul(b, a) == e))
        })
    })
}

/// Group membership with the exhaustive subset search for small tables
/// and the local-monoid test otherwise.
pub fn is_group_element_by_search(s: &FiniteEpigroup, x: Element) -> bool {
    if s.order() <= SUBSET_SEARCH_MAX {
        in_subgroup_by_subsets(s, x)
    } else {
        in_maximal_subgroup(s, x)
    }
}

/// Zero element found by scanning rows and columns.
pub fn zero_by_search(s: &FiniteEpigroup) -> Option<Element> {
    s.elements().find(|&z| s.elements().all(|x| s.mul(z, x) == z && s.mul(x, z) == z))
}

/// A zero exists and some power of every element reaches it.
pub fn is_nil_by_search(s: &FiniteEpigroup) -> bool {
    let Some(z) = zero_by_search(s) else { return false };
    s.elements().all(|x| {
        let mut p = x;
        for _ in 0..=s.order() {
            if p == z {
                return true;
            }
            p = s.mul(p, x);
        }
        false
    })
}

/// Least `n` with every product of `n` elements equal to zero, found by
/// evaluating all `order^n` products. `None` if `s` is not nil.
pub fn nilpotency_index_by_products(s: &FiniteEpigroup) -> Option<usize> {
    if !is_nil_by_search(s) {
        return None;
    }
    let z = zero_by_search(s)?;
    let order = s.order();
    (1..=order).find(|&n| {
        let mut tuple = vec![0; n];
        loop {
            let p = tuple[1..].iter().fold(tuple[0], |acc, &b| s.mul(acc, b));
            if p != z {
                return false;
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < order {
                    break;
                }
                tuple[i] = 0;
            }
        }
    })
}

/// All product-closed subsets whose restriction is a nil semigroup.
pub fn nil_subsemigroups(s: &FiniteEpigroup) -> Vec<FiniteEpigroup> {
    s.subsemigroups()
        .expect("small table")
        .into_iter()
        .map(|sub| s.restrict(&sub).expect("closed subset"))
        .filter(is_nil_by_search)
        .collect()
}
