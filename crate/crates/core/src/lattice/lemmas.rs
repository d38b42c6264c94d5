//! Brute-force checks of three facts about special elements, stated for a
//! single finite lattice. A violation would mean a bug in this crate.

use std::fmt;

use serde::Serialize;

use super::{Element, FiniteLattice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum LemmaViolation {
    /// `x` and `x v a` disagree on cancellability for the neutral atom `a`.
    JoinWithNeutralAtom { atom: Element, x: Element, x_cancellable: bool },
    /// `x` satisfies the hypothesis over the neutral atom `a` but has the
    /// cancellation witness `(y, z)`.
    OverNeutralAtom { atom: Element, x: Element, y: Element, z: Element },
    /// No `x' <= x` works for the modular, non-cancellable `x` and its
    /// witness pair `(y, z)`.
    ModularNonCancellable { x: Element, y: Element, z: Element },
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaViolation::JoinWithNeutralAtom { atom, x, x_cancellable } => write!(
                f,
                "neutral atom {atom}: {x} is{} cancellable but its join with the atom is{}",
                if *x_cancellable { "" } else { " not" },
                if *x_cancellable { " not" } else { "" }
            ),
            LemmaViolation::OverNeutralAtom { atom, x, y, z } => {
                write!(f, "neutral atom {atom}: {x} meets the hypothesis yet does not cancel ({y}, {z})")
            }
            LemmaViolation::ModularNonCancellable { x, y, z } => {
                write!(f, "modular {x} with witness ({y}, {z}) has no suitable element below it")
            }
        }
    }
}

impl FiniteLattice {
    /// For every neutral atom `a` and every `x`: `x` is cancellable iff
    /// `x v a` is.
    pub fn check_lemma_2_1(&self) -> Result<(), LemmaViolation> {
        for a in self.neutral_atoms() {
            for x in self.elements() {
                let c = self.is_cancellable_element(x);
                if c != self.is_cancellable_element(self.join(x, a)) {
                    return Err(LemmaViolation::JoinWithNeutralAtom { atom: a, x, x_cancellable: c });
                }
            }
        }
        Ok(())
    }

    /// For every neutral atom `a` and every `x`: if for all `y, z` the
    /// equalities `x v (y v a) = x v (z v a)` and `x ^ (y v a) = x ^ (z v a)`
    /// imply `y v a = z v a`, then `x` is cancellable.
    pub fn check_lemma_2_2(&self) -> Result<(), LemmaViolation> {
        for a in self.neutral_atoms() {
            for x in self.elements() {
                let hypothesis = self.elements().all(|y| {
                    self.elements().all(|z| {
                        let (ya, za) = (self.join(y, a), self.join(z, a));
                        let premise = self.join(x, ya) == self.join(x, za) && self.meet(x, ya) == self.meet(x, za);
                        !premise || ya == za
                    })
                });
                if hypothesis {
                    if let Some((y, z)) = self.cancellable_witness(x) {
                        return Err(LemmaViolation::OverNeutralAtom { atom: a, x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// For every modular non-cancellable `x` and every pair `y != z` with
    /// `x v y = x v z`, `x ^ y = x ^ z`: some `x' <= x` has
    /// `x' v y = x' v z`, `x' ^ y = x' ^ z` and `y v z = x' v y`.
    pub fn check_lemma_2_3(&self) -> Result<(), LemmaViolation> {
        for x in self.elements() {
            if !self.is_modular_element(x) {
                continue;
            }
            for (y, z) in self.cancellation_witnesses(x) {
                let found = self.elements().any(|x1| {
                    self.leq(x1, x)
                        && self.join(x1, y) == self.join(x1, z)
                        && self.meet(x1, y) == self.meet(x1, z)
                        && self.join(y, z) == self.join(x1, y)
                });
                if !found {
                    return Err(LemmaViolation::ModularNonCancellable { x, y, z });
                }
            }
        }
        Ok(())
    }

    pub fn check_lemmas(&self) -> [Result<(), LemmaViolation>; 3] {
        [self.check_lemma_2_1(), self.check_lemma_2_2(), self.check_lemma_2_3()]
    }
}
