use std::collections::HashSet;

use super::{FiniteLattice, LatticeError};

pub const MAX_LATTICE_SIZE: usize = 7;

/// Every lattice on `size` elements whose order matrix is upper triangular
/// with bottom 0 and top `size - 1`. Each isomorphism class appears at
/// least once; with `dedupe` only its first member is kept.
pub fn enumerate_lattices(size: usize, dedupe: bool) -> Result<Vec<FiniteLattice>, LatticeError> {
    if size > MAX_LATTICE_SIZE {
        return Err(LatticeError::SizeTooLarge { size, max: MAX_LATTICE_SIZE });
    }
    if size == 0 {
        return Ok(Vec::new());
    }
    if size == 1 {
        return Ok(vec![FiniteLattice::from_leq(vec![vec![true]])?]);
    }
    let m = size - 2;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut below: Vec<u32> = Vec::with_capacity(m);
    middle_posets(m, &mut below, &mut |below| {
        let mut leq = vec![vec![false; size]; size];
        for i in 0..size {
            leq[0][i] = true;
            leq[i][size - 1] = true;
            leq[i][i] = true;
        }
        for (k, &down) in below.iter().enumerate() {
            for j in 0..k {
                if down >> j & 1 == 1 {
                    leq[j + 1][k + 1] = true;
                }
            }
        }
        if let Ok(l) = FiniteLattice::from_leq(leq) {
            if !dedupe || seen.insert(l.canonical_key()) {
                out.push(l);
            }
        }
    });
    Ok(out)
}

/// `below[k]` is the bit set of elements strictly below `k`; it must be an
/// order ideal of the poset on `0..k`.
fn middle_posets(m: usize, below: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    let k = below.len();
    if k == m {
        emit(below);
        return;
    }
    for down in 0u32..(1 << k) {
        let is_ideal = (0..k).filter(|&j| down >> j & 1 == 1).all(|j| below[j] & !down == 0);
        if is_ideal {
            below.push(down);
            middle_posets(m, below, emit);
            below.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::lattice_fixture;
    use super::*;

    // Oracle: every reflexive 0/1 matrix, validated, classes by brute force.
    fn brute_force_classes(n: usize) -> Vec<FiniteLattice> {
        let free: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        let mut classes: Vec<FiniteLattice> = Vec::new();
        for mask in 0u32..(1 << free.len()) {
            let mut leq = vec![vec![false; n]; n];
            for i in 0..n {
                leq[i][i] = true;
            }
            for (bit, &(a, b)) in free.iter().enumerate() {
                leq[a][b] = mask >> bit & 1 == 1;
            }
            let Ok(l) = FiniteLattice::from_leq(leq) else { continue };
            let mut iso = false;
            crate::engine::for_each_permutation(n, |p| {
                if !iso {
                    iso = classes.iter().any(|c| c.relabel(p).map(|r| r.leq_matrix() == l.leq_matrix()).unwrap_or(false));
                }
            });
            if !iso {
                classes.push(l);
            }
        }
        classes
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=4 {
            assert_eq!(enumerate_lattices(n, true).unwrap().len(), brute_force_classes(n).len(), "size {n}");
        }
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_lattices(n, true).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn size_five_contains_m3_and_n5() {
        let all = enumerate_lattices(5, true).unwrap();
        for name in ["M3", "N5"] {
            let f = lattice_fixture(name).unwrap();
            assert_eq!(all.iter().filter(|l| l.is_isomorphic(&f)).count(), 1, "{name}");
        }
    }

    #[test]
    fn deterministic_and_bounded() {
        assert_eq!(enumerate_lattices(6, false).unwrap(), enumerate_lattices(6, false).unwrap());
        assert!(enumerate_lattices(6, false).unwrap().len() > 15);
        assert_eq!(enumerate_lattices(8, false), Err(LatticeError::SizeTooLarge { size: 8, max: 7 }));
    }
}
