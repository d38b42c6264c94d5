//! Finite lattices given by their order matrix, and special elements.

mod enumerate;
mod file;
mod lemmas;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use enumerate::{enumerate_lattices, MAX_LATTICE_SIZE};
pub use file::{lattice_catalog, lattice_fixture, parse_lattice, to_lattice_string, LATTICE_FIXTURE_NAMES};
pub use lemmas::LemmaViolation;

pub type Element = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderAxiom {
    Reflexive,
    Antisymmetric,
    Transitive,
}

impl fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderAxiom::Reflexive => "reflexivity",
            OrderAxiom::Antisymmetric => "antisymmetry",
            OrderAxiom::Transitive => "transitivity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Join,
    Meet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("order matrix must be square and nonempty")]
    BadShape,
    #[error("not a partial order: {axiom} fails at {witness:?}")]
    NotPoset { axiom: OrderAxiom, witness: Vec<Element> },
    #[error("not a lattice: {a} and {b} have no {}", match bound { Bound::Join => "least upper bound", Bound::Meet => "greatest lower bound" })]
    NotLattice { a: Element, b: Element, bound: Bound },
    #[error("lattice size {size} exceeds the enumeration limit {max}")]
    SizeTooLarge { size: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown lattice fixture `{0}`")]
    UnknownFixture(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    name: Option<String>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<Element>>,
    meet: Vec<Vec<Element>>,
    bottom: Element,
    top: Element,
}

impl FiniteLattice {
    /// Checks the order axioms and the existence of all joins and meets.
    pub fn from_leq(leq: Vec<Vec<bool>>) -> Result<Self, LatticeError> {
        let n = leq.len();
        if n == 0 || leq.iter().any(|r| r.len() != n) {
            return Err(LatticeError::BadShape);
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(LatticeError::NotPoset { axiom: OrderAxiom::Reflexive, witness: vec![a] });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    return Err(LatticeError::NotPoset { axiom: OrderAxiom::Antisymmetric, witness: vec![a, b] });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(LatticeError::NotPoset { axiom: OrderAxiom::Transitive, witness: vec![a, b, c] });
                    }
                }
            }
        }

        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let ub: Vec<Element> = (0..n).filter(|&u| leq[a][u] && leq[b][u]).collect();
                join[a][b] = *ub
                    .iter()
                    .find(|&&u| ub.iter().all(|&v| leq[u][v]))
                    .ok_or(LatticeError::NotLattice { a, b, bound: Bound::Join })?;
                let lb: Vec<Element> = (0..n).filter(|&l| leq[l][a] && leq[l][b]).collect();
                meet[a][b] = *lb
                    .iter()
                    .find(|&&l| lb.iter().all(|&v| leq[v][l]))
                    .ok_or(LatticeError::NotLattice { a, b, bound: Bound::Meet })?;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc][x]);
        let top = (0..n).fold(0, |acc, x| join[acc][x]);
        Ok(FiniteLattice { name: None, leq, join, meet, bottom, top })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size()
    }

    pub fn leq_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.leq[a][b]
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        self.join[a][b]
    }

    pub fn meet(&self, a: Element, b: Element) -> Element {
        self.meet[a][b]
    }

    pub fn join_table(&self) -> &[Vec<Element>] {
        &self.join
    }

    pub fn meet_table(&self) -> &[Vec<Element>] {
        &self.meet
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// `b` covers `a`.
    pub fn covers(&self, a: Element, b: Element) -> bool {
        a != b && self.leq[a][b] && self.elements().all(|c| c == a || c == b || !(self.leq[a][c] && self.leq[c][b]))
    }

    pub fn is_atom(&self, x: Element) -> bool {
        self.covers(self.bottom, x)
    }

    pub fn atoms(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.is_atom(x)).collect()
    }

    pub fn is_distributive(&self) -> bool {
        let all: Vec<Element> = self.elements().collect();
        distributive_on(self, &all)
    }

    /// First pair `y <= z` with `(x v y) ^ z != (x ^ z) v y`.
    pub fn modular_witness(&self, x: Element) -> Option<(Element, Element)> {
        self.pairs()
            .filter(|&(y, z)| self.leq[y][z])
            .find(|&(y, z)| self.meet(self.join(x, y), z) != self.join(self.meet(x, z), y))
    }

    pub fn is_modular_element(&self, x: Element) -> bool {
        self.modular_witness(x).is_none()
    }

    /// All pairs `y != z` that `x` fails to separate by join and meet.
    pub fn cancellation_witnesses(&self, x: Element) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.pairs().filter(move |&(y, z)| {
            y != z && self.join(x, y) == self.join(x, z) && self.meet(x, y) == self.meet(x, z)
        })
    }

    pub fn cancellable_witness(&self, x: Element) -> Option<(Element, Element)> {
        self.cancellation_witnesses(x).next()
    }

    pub fn is_cancellable_element(&self, x: Element) -> bool {
        self.cancellable_witness(x).is_none()
    }

    /// First pair `(y, z)` breaking the median identity for `x`.
    pub fn median_witness(&self, x: Element) -> Option<(Element, Element)> {
        self.pairs().find(|&(y, z)| {
            let (j, m) = (|a, b| self.join(a, b), |a, b| self.meet(a, b));
            let lhs = m(m(j(x, y), j(y, z)), j(z, x));
            let rhs = j(j(m(x, y), m(y, z)), m(z, x));
            lhs != rhs
        })
    }

    pub fn is_neutral_median(&self, x: Element) -> bool {
        self.median_witness(x).is_none()
    }

    /// First pair `(y, z)` for which `{x, y, z}` generates a
    /// non-distributive sublattice.
    pub fn sublattice_witness(&self, x: Element) -> Option<(Element, Element)> {
        self.pairs().find(|&(y, z)| !distributive_on(self, &self.generated(&[x, y, z])))
    }

    pub fn is_neutral_sublattice(&self, x: Element) -> bool {
        self.sublattice_witness(x).is_none()
    }

    pub fn is_neutral_element(&self, x: Element) -> bool {
        self.is_neutral_median(x)
    }

    /// Closure of `gens` under join and meet, sorted.
    pub fn generated(&self, gens: &[Element]) -> Vec<Element> {
        let mut inside = vec![false; self.size()];
        let mut set: Vec<Element> = Vec::new();
        for &g in gens {
            if !inside[g] {
                inside[g] = true;
                set.push(g);
            }
        }
        // Each round either adds an element or stops, so at most `size` rounds.
        for _ in 0..self.size() {
            let mut added = Vec::new();
            for &a in &set {
                for &b in &set {
                    for c in [self.join(a, b), self.meet(a, b)] {
                        if !inside[c] {
                            inside[c] = true;
                            added.push(c);
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        set.sort_unstable();
        set
    }

    pub fn neutral_atoms(&self) -> Vec<Element> {
        self.atoms().into_iter().filter(|&a| self.is_neutral_element(a)).collect()
    }

    pub fn relabel(&self, perm: &[Element]) -> Result<FiniteLattice, LatticeError> {
        let n = self.size();
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                leq[perm[a]][perm[b]] = self.leq[a][b];
            }
        }
        FiniteLattice::from_leq(leq)
    }

    /// Isomorphism invariant: the least order-matrix bit string over all
    /// labelings that send bottom to 0 and top to the last element.
    pub fn canonical_key(&self) -> Vec<u64> {
        let n = self.size();
        let middle: Vec<Element> = self.elements().filter(|&x| x != self.bottom && x != self.top).collect();
        let mut order: Vec<Element> = Vec::with_capacity(n);
        order.push(self.bottom);
        if n > 1 {
            order.extend(&middle);
            order.push(self.top);
        }
        let encode = |ord: &[Element]| -> Vec<u64> {
            let mut words = vec![0u64; (n * n).div_ceil(64)];
            for i in 0..n {
                for j in 0..n {
                    if self.leq[ord[i]][ord[j]] {
                        let k = i * n + j;
                        words[k / 64] |= 1 << (k % 64);
                    }
                }
            }
            words
        };
        let mut best = encode(&order);
        if middle.len() > 1 {
            crate::engine::for_each_permutation(middle.len(), |p| {
                for (slot, &i) in order[1..n - 1].iter_mut().zip(p) {
                    *slot = middle[i];
                }
                let k = encode(&order);
                if k < best {
                    best = k;
                }
            });
        }
        best
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.size() == other.size() && self.canonical_key() == other.canonical_key()
    }

    fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        let n = self.size();
        (0..n).flat_map(move |y| (0..n).map(move |z| (y, z)))
    }
}

fn distributive_on(l: &FiniteLattice, set: &[Element]) -> bool {
    set.iter().all(|&a| {
        set.iter().all(|&b| {
            set.iter().all(|&c| {
                l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c))
                    && l.join(a, l.meet(b, c)) == l.meet(l.join(a, b), l.join(a, c))
            })
        })
    })
}

/// Per-element classification used by reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    pub element: Element,
    pub neutral: bool,
    pub modular: bool,
    pub cancellable: bool,
    pub atom: bool,
    pub median_witness: Option<(Element, Element)>,
    pub modular_witness: Option<(Element, Element)>,
    pub cancellable_witness: Option<(Element, Element)>,
}

impl FiniteLattice {
    pub fn profile(&self, x: Element) -> ElementProfile {
        let median_witness = self.median_witness(x);
        let modular_witness = self.modular_witness(x);
        let cancellable_witness = self.cancellable_witness(x);
        ElementProfile {
            element: x,
            neutral: median_witness.is_none(),
            modular: modular_witness.is_none(),
            cancellable: cancellable_witness.is_none(),
            atom: self.is_atom(x),
            median_witness,
            modular_witness,
            cancellable_witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> FiniteLattice {
        lattice_fixture("M3").unwrap()
    }

    #[test]
    fn validation_errors_carry_witnesses() {
        let bowtie = parse_lattice(include_str!("../../data/lattices/bowtie.lattice")).unwrap_err();
        assert_eq!(bowtie, LatticeError::NotLattice { a: 0, b: 1, bound: Bound::Join });
        let cyc = vec![vec![true, true], vec![true, true]];
        assert_eq!(
            FiniteLattice::from_leq(cyc),
            Err(LatticeError::NotPoset { axiom: OrderAxiom::Antisymmetric, witness: vec![0, 1] })
        );
        let irreflexive = vec![vec![false]];
        assert!(matches!(FiniteLattice::from_leq(irreflexive), Err(LatticeError::NotPoset { axiom: OrderAxiom::Reflexive, .. })));
        let intransitive = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        assert_eq!(
            FiniteLattice::from_leq(intransitive),
            Err(LatticeError::NotPoset { axiom: OrderAxiom::Transitive, witness: vec![0, 1, 2] })
        );
        assert_eq!(FiniteLattice::from_leq(vec![]), Err(LatticeError::BadShape));
    }

    #[test]
    fn m3_elements() {
        let l = m3();
        assert_eq!((l.bottom(), l.top()), (0, 4));
        assert_eq!(l.atoms(), vec![1, 2, 3]);
        assert!(l.elements().all(|x| l.is_modular_element(x)));
        assert_eq!(l.cancellable_witness(1), Some((2, 3)));
        assert_eq!(l.cancellable_witness(3), Some((1, 2)));
        assert!(!l.is_neutral_element(1) && !l.is_neutral_sublattice(1));
        assert!(l.is_neutral_element(0) && l.is_neutral_element(4));
        assert!(l.neutral_atoms().is_empty());
        assert!(!l.is_atom(0) && !l.is_atom(4));
    }

    #[test]
    fn n5_b_is_not_modular() {
        let l = lattice_fixture("N5").unwrap();
        let non_modular: Vec<_> = l.elements().filter(|&x| !l.is_modular_element(x)).collect();
        assert_eq!(non_modular, vec![2]);
        assert_eq!(l.modular_witness(2), Some((1, 3)));
    }

    #[test]
    fn chains_and_grids_are_distributive() {
        for name in ["chain2", "chain3", "chain4", "chain5", "chain6", "grid2x2", "B3"] {
            let l = lattice_fixture(name).unwrap();
            assert!(l.is_distributive(), "{name}");
            for x in l.elements() {
                let p = l.profile(x);
                assert!(p.neutral && p.modular && p.cancellable, "{name} {x}");
                assert!(l.is_neutral_sublattice(x));
            }
        }
        assert!(!m3().is_distributive());
        let c = lattice_fixture("chain3").unwrap();
        assert!(!c.is_atom(c.top()) && c.is_atom(1));
    }

    #[test]
    fn generated_sublattices() {
        let l = lattice_fixture("B3").unwrap();
        assert_eq!(l.generated(&[1, 2]), vec![0, 1, 2, 3]);
        assert_eq!(l.generated(&[5]), vec![5]);
        assert_eq!(m3().generated(&[1, 2, 3]), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn canonical_key_sees_through_relabeling() {
        let l = lattice_fixture("N5").unwrap();
        let r = l.relabel(&[4, 2, 0, 1, 3]).unwrap();
        assert_ne!(l.leq_matrix(), r.leq_matrix());
        assert!(l.is_isomorphic(&r));
        assert!(!l.is_isomorphic(&m3()));
    }
}
