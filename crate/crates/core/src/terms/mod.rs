//! Words of the free unary semigroup: products of variables and pseudoinverses.
//!
//! A [`Word`] is kept in flattened form, a nonempty sequence of [`Factor`]s.
//! A factor is either a variable or the pseudoinverse of a nested word, so
//! associativity of concatenation is built into the representation and two
//! words are equal exactly when their factor sequences agree node-wise.

mod normal;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use normal::{normalize_one_variable, OneVariableForm, P_MAX, Q_MAX};
pub use parse::parse_word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("invalid variable name `{0}`")]
    BadVariable(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("variable `{0}` has no image under the substitution")]
    UnmappedVariable(Variable),
    #[error("word `{0}` does not contain exactly one variable")]
    NotOneVariable(Word),
    #[error("normal form of `{word}` needs exponents beyond p,q <= 8")]
    ExponentOutOfRange { word: Word },
    #[error("position {0} does not address a factor range of the word")]
    BadPosition(String),
}

/// A variable: a lowercase letter followed by optional decimal digits.
///
/// Variables order by letter first and then by numeric suffix, so that
/// `x2 < x10` and a bare letter precedes its indexed forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable(String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Result<Self, TermError> {
        let name = name.into();
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_lowercase() => {}
            _ => return Err(TermError::BadVariable(name)),
        }
        if !chars.all(|c| c.is_ascii_digit()) {
            return Err(TermError::BadVariable(name));
        }
        Ok(Variable(name))
    }

    /// `x_i` in the indexed alphabet `x1, x2, ...`.
    pub fn indexed(letter: char, index: usize) -> Self {
        assert!(letter.is_ascii_lowercase(), "variables start with a lowercase letter");
        Variable(format!("{letter}{index}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn letter(&self) -> char {
        self.0.as_bytes()[0] as char
    }

    fn suffix(&self) -> &str {
        &self.0[1..]
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |v: &Variable| {
            let digits = v.suffix().trim_start_matches('0');
            (v.letter(), !v.suffix().is_empty(), digits.len(), digits.to_owned())
        };
        key(self).cmp(&key(other)).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Variable {
    type Err = TermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variable::new(s)
    }
}

/// One atomic factor of a flattened word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Var(Variable),
    Inv(Word),
}

/// Element of the free unary semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    factors: Vec<Factor>,
}

/// Length of a word: the number of variable occurrences for semigroup words,
/// infinite as soon as a pseudoinverse occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

/// Addresses a range of factors inside a word. `path` descends through
/// pseudoinverse factors: each entry selects an `Inv` factor of the current
/// word and moves into its argument. `start..end` is then a factor range of
/// the word reached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Position {
    pub path: Vec<usize>,
    pub start: usize,
    pub end: usize,
}

impl Position {
    pub fn top(start: usize, end: usize) -> Self {
        Position { path: Vec::new(), start, end }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.path.is_empty() {
            let path: Vec<String> = self.path.iter().map(ToString::to_string).collect();
            write!(f, "{}:", path.join("."))?;
        }
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for Position {
    type Err = TermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TermError::BadPosition(s.to_owned());
        let (path, range) = match s.split_once(':') {
            Some((p, r)) => (p, r),
            None => ("", s),
        };
        let path = if path.is_empty() {
            Vec::new()
        } else {
            path.split('.').map(|p| p.parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        };
        let (start, end) = range.split_once("..").ok_or_else(bad)?;
        Ok(Position {
            path,
            start: start.parse().map_err(|_| bad())?,
            end: end.parse().map_err(|_| bad())?,
        })
    }
}

impl Word {
    pub fn var(v: Variable) -> Self {
        Word { factors: vec![Factor::Var(v)] }
    }

    /// Builds a word from a factor sequence; `None` for an empty sequence.
    pub fn from_factors(factors: Vec<Factor>) -> Option<Self> {
        (!factors.is_empty()).then_some(Word { factors })
    }

    /// `x1 x2 ... xn` over the indexed alphabet.
    pub fn linear(letter: char, from: usize, to: usize) -> Self {
        assert!(from <= to, "empty linear word");
        Word { factors: (from..=to).map(|i| Factor::Var(Variable::indexed(letter, i))).collect() }
    }

    pub fn product<I: IntoIterator<Item = Word>>(words: I) -> Option<Word> {
        let factors: Vec<Factor> = words.into_iter().flat_map(|w| w.factors).collect();
        Word::from_factors(factors)
    }

    pub fn concat(mut self, other: Word) -> Word {
        self.factors.extend(other.factors);
        self
    }

    /// The pseudoinverse of this word.
    pub fn inv(self) -> Word {
        Word { factors: vec![Factor::Inv(self)] }
    }

    /// `w^ω`, stored as `w · inv(w)`.
    pub fn omega(self) -> Word {
        let bar = self.clone().inv();
        self.concat(bar)
    }

    pub fn pow(&self, k: usize) -> Word {
        assert!(k >= 1, "powers start at 1");
        let mut factors = Vec::with_capacity(self.factors.len() * k);
        for _ in 0..k {
            factors.extend(self.factors.iter().cloned());
        }
        Word { factors }
    }

    /// The flattened factor sequence.
    pub fn flatten(&self) -> &[Factor] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Factor> {
        self.factors
    }

    pub fn content(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_content(&mut out);
        out
    }

    fn collect_content(&self, out: &mut BTreeSet<Variable>) {
        for f in &self.factors {
            match f {
                Factor::Var(v) => {
                    out.insert(v.clone());
                }
                Factor::Inv(w) => w.collect_content(out),
            }
        }
    }

    pub fn is_semigroup_word(&self) -> bool {
        self.factors.iter().all(|f| matches!(f, Factor::Var(_)))
    }

    pub fn length(&self) -> Length {
        if self.is_semigroup_word() {
            Length::Finite(self.factors.len())
        } else {
            Length::Infinite
        }
    }

    /// Every variable occurs at most once. Only defined for semigroup words.
    pub fn is_linear(&self) -> Option<bool> {
        if !self.is_semigroup_word() {
            return None;
        }
        Some(self.content().len() == self.factors.len())
    }

    /// Number of variable occurrences plus number of pseudoinversions.
    pub fn size(&self) -> usize {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Var(_) => 1,
                Factor::Inv(w) => 1 + w.size(),
            })
            .sum()
    }

    /// Nesting depth of pseudoinversion.
    pub fn depth(&self) -> usize {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Var(_) => 0,
                Factor::Inv(w) => 1 + w.depth(),
            })
            .max()
            .unwrap_or(0)
    }

    /// Homomorphic replacement of every variable by its image.
    pub fn substitute(&self, map: &BTreeMap<Variable, Word>) -> Result<Word, TermError> {
        self.substitute_with(&|v| map.get(v).cloned())
    }

    /// Like [`Word::substitute`], leaving variables without an image in place.
    pub fn substitute_partial(&self, map: &BTreeMap<Variable, Word>) -> Word {
        self.substitute_with(&|v| Some(map.get(v).cloned().unwrap_or_else(|| Word::var(v.clone()))))
            .expect("partial substitution is total")
    }

    fn substitute_with(&self, image: &dyn Fn(&Variable) -> Option<Word>) -> Result<Word, TermError> {
        let mut factors = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            match f {
                Factor::Var(v) => {
                    let w = image(v).ok_or_else(|| TermError::UnmappedVariable(v.clone()))?;
                    factors.extend(w.factors);
                }
                Factor::Inv(w) => factors.push(Factor::Inv(w.substitute_with(image)?)),
            }
        }
        Ok(Word { factors })
    }

    /// The word reached by following `path` through pseudoinverse factors.
    pub fn at_path(&self, path: &[usize]) -> Option<&Word> {
        let mut cur = self;
        for &i in path {
            match cur.factors.get(i) {
                Some(Factor::Inv(w)) => cur = w,
                _ => return None,
            }
        }
        Some(cur)
    }

    /// The factors addressed by `pos`, if the position is valid.
    pub fn slice_at(&self, pos: &Position) -> Option<&[Factor]> {
        let w = self.at_path(&pos.path)?;
        (pos.start < pos.end && pos.end <= w.factors.len()).then(|| &w.factors[pos.start..pos.end])
    }

    /// Replaces the factors addressed by `pos` with `replacement`.
    pub fn replace_at(&self, pos: &Position, replacement: &Word) -> Result<Word, TermError> {
        self.replace_inner(&pos.path, pos.start, pos.end, replacement)
            .ok_or_else(|| TermError::BadPosition(pos.to_string()))
    }

    fn replace_inner(&self, path: &[usize], start: usize, end: usize, with: &Word) -> Option<Word> {
        match path.split_first() {
            None => {
                if start >= end || end > self.factors.len() {
                    return None;
                }
                let mut factors = Vec::with_capacity(self.factors.len() - (end - start) + with.factors.len());
                factors.extend_from_slice(&self.factors[..start]);
                factors.extend(with.factors.iter().cloned());
                factors.extend_from_slice(&self.factors[end..]);
                Some(Word { factors })
            }
            Some((&i, rest)) => {
                let inner = match self.factors.get(i)? {
                    Factor::Inv(w) => w.replace_inner(rest, start, end, with)?,
                    Factor::Var(_) => return None,
                };
                let mut factors = self.factors.clone();
                factors[i] = Factor::Inv(inner);
                Some(Word { factors })
            }
        }
    }
}

impl From<Variable> for Word {
    fn from(v: Variable) -> Self {
        Word::var(v)
    }
}

impl FromStr for Word {
    type Err = TermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Var(v) => write!(f, "{v}"),
            Factor::Inv(w) => {
                if w.factors.len() == 1 {
                    write!(f, "{}~", w.factors[0])
                } else {
                    write!(f, "({w})~")
                }
            }
        }
    }
}

impl fmt::Display for Word {
    /// Renders in the term grammar, collapsing runs of equal factors to `^k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        let mut first = true;
        while i < self.factors.len() {
            let mut run = 1;
            while i + run < self.factors.len() && self.factors[i + run] == self.factors[i] {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", self.factors[i])?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}
