//! Identities `u = v`, the `w = 0` shorthand and finite presentations.

mod file;
pub mod random;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::terms::{Length, TermError, Variable, Word};

pub use file::{parse_presentation, Presentation, PresentationEntry, PresentationKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("variable `{fresh}` already occurs in `{word}`")]
    FreshNotFresh { fresh: Variable, word: Word },
    #[error("indices need 1 <= i <= j <= n, got n={n}, i={i}, j={j}")]
    BadIndices { n: usize, i: usize, j: usize },
    #[error("line {line}: {source}")]
    Term {
        line: usize,
        #[source]
        source: TermError,
    },
    #[error("line {line}: expected `LHS = RHS` or `LHS = 0`")]
    MissingEquals { line: usize },
    #[error("presentation has no identities")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Word,
    pub rhs: Word,
}

impl Identity {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Identity { lhs, rhs }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn reversed(&self) -> Identity {
        Identity { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    pub fn content(&self) -> BTreeSet<Variable> {
        let mut c = self.lhs.content();
        c.extend(self.rhs.content());
        c
    }

    /// `u = v` and `v = u` denote the same constraint.
    pub fn same_constraint(&self, other: &Identity) -> bool {
        self == other || (self.lhs == other.rhs && self.rhs == other.lhs)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = TermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (l, r) = s.split_once('=').ok_or(TermError::Parse { column: 1, message: "missing `=`".into() })?;
        Ok(Identity { lhs: l.parse()?, rhs: r.parse()? })
    }
}

/// The shorthand `w = 0`, meaning `w x = x w = w` for a fresh variable `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroIdentity {
    pub word: Word,
}

impl ZeroIdentity {
    pub fn new(word: Word) -> Self {
        ZeroIdentity { word }
    }

    /// Expands with the first variable of the sequence `x, y, z, t, x1, x2, ...`
    /// not occurring in the word.
    pub fn expand(&self) -> IdentitySystem {
        let fresh = fresh_variable(&self.word.content());
        self.expand_with(fresh).expect("fresh variable is unused")
    }

    pub fn expand_with(&self, fresh: Variable) -> Result<IdentitySystem, IdentityError> {
        expand_zero(self, fresh)
    }
}

impl fmt::Display for ZeroIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.word)
    }
}

pub fn expand_zero(z: &ZeroIdentity, fresh: Variable) -> Result<IdentitySystem, IdentityError> {
    if z.word.content().contains(&fresh) {
        return Err(IdentityError::FreshNotFresh { fresh, word: z.word.clone() });
    }
    let x = Word::var(fresh);
    Ok(IdentitySystem::from(vec![
        Identity::new(z.word.clone().concat(x.clone()), z.word.clone()),
        Identity::new(x.concat(z.word.clone()), z.word.clone()),
    ]))
}

/// Lowest unused variable in the order `x, y, z, t, x1, x2, ...`.
pub fn fresh_variable(avoid: &BTreeSet<Variable>) -> Variable {
    ["x", "y", "z", "t"]
        .iter()
        .map(|n| Variable::new(*n).unwrap())
        .chain((1..).map(|i| Variable::indexed('x', i)))
        .find(|v| !avoid.contains(v))
        .unwrap()
}

/// A finite list of identities. Zero identities are stored expanded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentitySystem {
    items: Vec<Identity>,
}

impl IdentitySystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(id: Identity) -> Self {
        IdentitySystem { items: vec![id] }
    }

    pub fn push(&mut self, id: Identity) {
        self.items.push(id);
    }

    pub fn extend(&mut self, other: IdentitySystem) {
        self.items.extend(other.items);
    }

    pub fn push_zero(&mut self, z: &ZeroIdentity) {
        self.extend(z.expand());
    }

    pub fn items(&self) -> &[Identity] {
        &self.items
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Identity> {
        self.items.iter()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Index pairs `(earlier, later)` of identities stating the same constraint.
    pub fn duplicates(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, b) in self.items.iter().enumerate() {
            if let Some(i) = self.items[..j].iter().position(|a| a.same_constraint(b)) {
                out.push((i, j));
            }
        }
        out
    }
}

impl From<Vec<Identity>> for IdentitySystem {
    fn from(items: Vec<Identity>) -> Self {
        IdentitySystem { items }
    }
}

impl FromIterator<Identity> for IdentitySystem {
    fn from_iter<I: IntoIterator<Item = Identity>>(iter: I) -> Self {
        IdentitySystem { items: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a IdentitySystem {
    type Item = &'a Identity;
    type IntoIter = std::slice::Iter<'a, Identity>;
    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Whether the identity holds in all semilattices: both sides have the same content.
pub fn sl_holds(id: &Identity) -> bool {
    id.lhs.content() == id.rhs.content()
}

/// `x1 ... xn = x1 ... x(i-1) · (xi ... xj)~~ · x(j+1) ... xn`.
pub fn make_deg_identity(n: usize, i: usize, j: usize) -> Result<Identity, IdentityError> {
    if !(1 <= i && i <= j && j <= n) {
        return Err(IdentityError::BadIndices { n, i, j });
    }
    let mut parts = Vec::new();
    if i > 1 {
        parts.push(Word::linear('x', 1, i - 1));
    }
    parts.push(Word::linear('x', i, j).inv().inv());
    if j < n {
        parts.push(Word::linear('x', j + 1, n));
    }
    Ok(Identity::new(Word::linear('x', 1, n), Word::product(parts).unwrap()))
}

/// The identity has the shape `x1 ... xn = v` with a linear left side of
/// length `n`, `con(v)` equal to its content and `len(v) > n`.
pub fn matches_deg_condition_ii(id: &Identity, n: usize) -> bool {
    id.lhs.length() == Length::Finite(n)
        && id.lhs.is_linear() == Some(true)
        && id.rhs.content() == id.lhs.content()
        && id.rhs.length() > Length::Finite(n)
}
