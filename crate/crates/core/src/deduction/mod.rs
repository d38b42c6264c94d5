//! Equational derivation chains.
//!
//! A chain starts from a word and applies rewrite steps. Each step
//! instantiates one side of an identity by a substitution, checks that the
//! instance occurs at the given [`Position`], and replaces it by the
//! instance of the other side. A chain is verified when the last word
//! reached is the declared end word.

mod chain_file;
pub mod corpus;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::engine::{catalog, enumerate, FiniteEpigroup, MAX_ENUMERATION_ORDER};
use crate::identity::{Identity, IdentitySystem};
use crate::terms::{Position, TermError, Variable, Word};

pub use chain_file::{parse_chain_file, ChainFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("no match: expected `{expected}`, found `{}`", found.as_ref().map_or("<nothing>".to_string(), ToString::to_string))]
    NoMatch { expected: Word, found: Option<Word> },
    #[error("position {0} is outside the word")]
    BadPosition(Position),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("rule `{0}` is declared twice")]
    DuplicateRule(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Term {
        line: usize,
        #[source]
        source: TermError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LeftToRight => "LR",
            Direction::RightToLeft => "RL",
        })
    }
}

/// An identity used in one direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub identity: Identity,
    pub direction: Direction,
}

impl RewriteRule {
    pub fn new(name: impl Into<String>, identity: Identity, direction: Direction) -> Self {
        RewriteRule { name: name.into(), identity, direction }
    }

    pub fn source(&self) -> &Word {
        match self.direction {
            Direction::LeftToRight => &self.identity.lhs,
            Direction::RightToLeft => &self.identity.rhs,
        }
    }

    pub fn target(&self) -> &Word {
        match self.direction {
            Direction::LeftToRight => &self.identity.rhs,
            Direction::RightToLeft => &self.identity.lhs,
        }
    }

    pub fn is_builtin(&self) -> bool {
        builtin_rule(&self.name).is_some_and(|id| id == self.identity)
    }
}

/// One rewrite. Variables of the rule without an entry in `substitution`
/// are mapped to themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub rule: RewriteRule,
    pub position: Position,
    pub substitution: BTreeMap<Variable, Word>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationChain {
    pub name: String,
    /// Name of a declared rule this chain derives, if any.
    pub proves: Option<String>,
    pub start: Word,
    pub steps: Vec<DerivationStep>,
    pub end: Word,
}

impl DerivationChain {
    /// The non-builtin identities the chain relies on, without repeats.
    pub fn hypotheses(&self) -> Vec<(String, Identity)> {
        let mut out: Vec<(String, Identity)> = Vec::new();
        for s in &self.steps {
            if !s.rule.is_builtin() && !out.iter().any(|(n, _)| *n == s.rule.name) {
                out.push((s.rule.name.clone(), s.rule.identity.clone()));
            }
        }
        out
    }

    /// The identity `start = end` established by the chain.
    pub fn conclusion(&self) -> Identity {
        Identity::new(self.start.clone(), self.end.clone())
    }
}

pub fn apply_step(current: &Word, step: &DerivationStep) -> Result<Word, DeductionError> {
    let source = step.rule.source().substitute_partial(&step.substitution);
    let found = current
        .slice_at(&step.position)
        .ok_or_else(|| DeductionError::BadPosition(step.position.clone()))?;
    if found != source.flatten() {
        return Err(DeductionError::NoMatch { expected: source, found: Word::from_factors(found.to_vec()) });
    }
    let target = step.rule.target().substitute_partial(&step.substitution);
    current
        .replace_at(&step.position, &target)
        .map_err(|_| DeductionError::BadPosition(step.position.clone()))
}

/// Result of replaying a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainVerdict {
    Verified,
    /// Step `step` (counted from 1) could not be applied to `before`.
    StepFailed { step: usize, before: Word, error: DeductionError },
    /// All steps applied but the final word is not the declared end.
    EndMismatch { reached: Word, expected: Word },
}

impl ChainVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, ChainVerdict::Verified)
    }

    pub fn failing_step(&self) -> Option<usize> {
        match self {
            ChainVerdict::StepFailed { step, .. } => Some(*step),
            _ => None,
        }
    }
}

impl fmt::Display for ChainVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainVerdict::Verified => f.write_str("verified"),
            ChainVerdict::StepFailed { step, before, error } => {
                write!(f, "step {step} fails on `{before}`: {error}")
            }
            ChainVerdict::EndMismatch { reached, expected } => {
                write!(f, "chain ends at `{reached}`, expected `{expected}`")
            }
        }
    }
}

/// The sequence of words visited, starting with `chain.start`, up to the
/// first failing step.
pub fn replay(chain: &DerivationChain) -> (Vec<Word>, ChainVerdict) {
    let mut words = vec![chain.start.clone()];
    for (i, step) in chain.steps.iter().enumerate() {
        let cur = words.last().unwrap();
        match apply_step(cur, step) {
            Ok(next) => words.push(next),
            Err(error) => {
                let before = cur.clone();
                return (words, ChainVerdict::StepFailed { step: i + 1, before, error });
            }
        }
    }
    let reached = words.last().unwrap().clone();
    let verdict = if reached == chain.end {
        ChainVerdict::Verified
    } else {
        ChainVerdict::EndMismatch { reached, expected: chain.end.clone() }
    };
    (words, verdict)
}

pub fn verify_chain(chain: &DerivationChain) -> ChainVerdict {
    replay(chain).1
}

/// Outcome for one chain of a [`ChainFile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub name: String,
    pub verdict: ChainVerdict,
    /// For a `proves` chain: whether `start = end` is the declared rule,
    /// in either orientation.
    pub proves_rule: Option<bool>,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_verified() && self.proves_rule != Some(false)
    }
}

pub fn check_chain_file(file: &ChainFile) -> Vec<ChainReport> {
    file.chains
        .iter()
        .map(|c| {
            let proves_rule = c.proves.as_ref().map(|r| {
                let concl = c.conclusion();
                file.rule(r).is_some_and(|id| *id == concl || *id == concl.reversed())
            });
            ChainReport { name: c.name.clone(), verdict: verify_chain(c), proves_rule }
        })
        .collect()
}

const BUILTIN_SOURCES: &[(&str, &str)] = &[
    ("omega-comm", "x^w x = x x^w"),
    ("omega-dbl", "x x^w = x~~"),
    ("dbl-omega", "x~~ = x^w x~~"),
    ("omega-dbl-comm", "x^w x~~ = x~~ x^w"),
    ("inv-comm", "x x~ = x~ x"),
    ("omega-idem", "x^w x^w = x^w"),
    ("omega-inv", "x^w x~ = x~"),
    ("inv-omega", "x~ x^w = x~"),
];

pub type NamedIdentity = (String, Identity);

/// Splits candidates into admitted rules and rules refused because they
/// fail in some model.
pub fn admit(candidates: &[NamedIdentity], models: &[FiniteEpigroup]) -> (Vec<NamedIdentity>, Vec<NamedIdentity>) {
    candidates
        .iter()
        .cloned()
        .partition(|(_, id)| models.iter().all(|s| s.satisfies_identity(id)))
}

/// All associative tables of order at most 3 plus the fixture catalog.
pub fn gate_models() -> Vec<FiniteEpigroup> {
    let mut models: Vec<FiniteEpigroup> =
        (1..=MAX_ENUMERATION_ORDER).flat_map(|n| enumerate(n, None).expect("small order")).collect();
    models.extend(catalog());
    models
}

fn admitted() -> &'static [(String, Identity)] {
    static RULES: OnceLock<Vec<(String, Identity)>> = OnceLock::new();
    RULES.get_or_init(|| {
        let candidates: Vec<(String, Identity)> = BUILTIN_SOURCES
            .iter()
            .map(|(n, s)| (n.to_string(), s.parse().expect("builtin rule parses")))
            .collect();
        let (ok, refused) = admit(&candidates, &gate_models());
        assert!(refused.is_empty(), "builtin rules refused by the semantic gate: {refused:?}");
        ok
    })
}

/// The always-valid rule set: the equalities `x^w x = x x^w = x~~ =
/// x^w x~~ = x~~ x^w` as consecutive pairs, commutation of `x` with `x~`,
/// idempotency of `x^w` and absorption of `x~` by `x^w`. Every rule has
/// passed the semantic gate over all models of order at most 3 and the
/// fixture catalog.
pub fn builtin_rules() -> IdentitySystem {
    admitted().iter().map(|(_, id)| id.clone()).collect()
}

/// Names and identities of [`builtin_rules`].
pub fn builtin_rule_book() -> &'static [(String, Identity)] {
    admitted()
}

pub fn builtin_rule(name: &str) -> Option<Identity> {
    admitted().iter().find(|(n, _)| n == name).map(|(_, id)| id.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::make_deg_identity;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn rule(name: &str, dir: Direction) -> RewriteRule {
        RewriteRule::new(name, builtin_rule(name).unwrap(), dir)
    }

    fn step(rule: RewriteRule, pos: Position) -> DerivationStep {
        DerivationStep { rule, position: pos, substitution: BTreeMap::new() }
    }

    #[test]
    fn apply_step_examples() {
        let s = step(rule("inv-comm", Direction::LeftToRight), Position::top(0, 2));
        assert!(matches!(apply_step(&w("x^2"), &s), Err(DeductionError::NoMatch { .. })));

        let deg = RewriteRule::new("deg", make_deg_identity(3, 2, 2).unwrap(), Direction::LeftToRight);
        assert_eq!(apply_step(&w("x1 x2 x3"), &step(deg, Position::top(0, 3))).unwrap(), w("x1 x2~~ x3"));

        let s = step(rule("omega-dbl", Direction::LeftToRight), Position::top(0, 3));
        assert_eq!(apply_step(&w("x x x~"), &s).unwrap(), w("x~~"));
    }

    #[test]
    fn bad_positions_are_reported() {
        let s = step(rule("inv-comm", Direction::LeftToRight), Position::top(1, 4));
        assert_eq!(apply_step(&w("x x~"), &s), Err(DeductionError::BadPosition(Position::top(1, 4))));
    }

    #[test]
    fn substitution_instantiates_rule_variables() {
        let mut s = step(rule("omega-dbl", Direction::RightToLeft), Position::top(1, 2));
        s.substitution.insert(Variable::new("x").unwrap(), w("y z"));
        assert_eq!(apply_step(&w("t (y z)~~ t"), &s).unwrap(), w("t y z y z (y z)~ t"));
    }

    #[test]
    fn steps_are_local() {
        let s = DerivationStep {
            rule: rule("inv-comm", Direction::LeftToRight),
            position: "1:1..3".parse().unwrap(),
            substitution: BTreeMap::new(),
        };
        assert_eq!(apply_step(&w("y (z x x~ z)~ y"), &s).unwrap(), w("y (z x~ x z)~ y"));
    }

    #[test]
    fn empty_chain() {
        let c = DerivationChain { name: "c".into(), proves: None, start: w("x"), steps: vec![], end: w("x") };
        assert!(verify_chain(&c).is_verified());
        let c = DerivationChain { end: w("y"), ..c };
        assert!(matches!(verify_chain(&c), ChainVerdict::EndMismatch { .. }));
    }

    #[test]
    fn builtin_rule_contents() {
        let rules = builtin_rules();
        assert!(rules.iter().any(|id| *id == "x x^w = x~~".parse().unwrap()));
        assert!(rules.iter().any(|id| *id == "x x~ = x~ x".parse().unwrap()));
        assert!(!rules.iter().any(|id| id.same_constraint(&"x^2 = x".parse().unwrap())));
        assert_eq!(rules.len(), BUILTIN_SOURCES.len());
    }

    #[test]
    fn gate_refuses_invalid_rules() {
        let candidates = vec![("idem".to_string(), "x^2 = x".parse().unwrap())];
        let (ok, refused) = admit(&candidates, &gate_models());
        assert!(ok.is_empty());
        assert_eq!(refused.len(), 1);
    }
}
