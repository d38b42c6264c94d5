//! Text format for derivation chains.
//!
//! ```text
//! # comment
//! rule <name>: <lhs> = <rhs>
//! chain <name> [proves <rule>]
//! start: <term>
//! step: <rule | [lhs = rhs]> dir=<LR|RL> at=<position> [sub=<var>=<term>, ...]
//! end: <term>
//! ```
//!
//! Rules are declared before use and are visible to every later chain in
//! the file; builtin rule names are always visible and cannot be redeclared.
//! A position is `start..end` or `p1.p2...:start..end`, where the dotted
//! path descends into pseudoinverse factors. `sub=` runs to the end of the
//! line. A chain without a `chain` header is named by its ordinal.

use std::collections::BTreeMap;

use super::{builtin_rule, DeductionError, DerivationChain, DerivationStep, Direction, RewriteRule};
use crate::identity::Identity;
use crate::terms::{Position, Variable, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFile {
    pub rules: Vec<(String, Identity)>,
    pub chains: Vec<DerivationChain>,
}

impl ChainFile {
    pub fn rule(&self, name: &str) -> Option<&Identity> {
        self.rules.iter().find(|(n, _)| n == name).map(|(_, id)| id)
    }
}

#[derive(Default)]
struct Pending {
    name: Option<String>,
    proves: Option<String>,
    start: Option<Word>,
    steps: Vec<DerivationStep>,
}

pub fn parse_chain_file(text: &str) -> Result<ChainFile, DeductionError> {
    let mut rules: Vec<(String, Identity)> = Vec::new();
    let mut chains = Vec::new();
    let mut pending: Option<Pending> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let perr = |message: String| DeductionError::Parse { line, message };
        let term = |s: &str| s.parse::<Word>().map_err(|source| DeductionError::Term { line, source });

        if let Some(rest) = body.strip_prefix("rule ") {
            let (name, id) = rest.split_once(':').ok_or_else(|| perr("expected `rule <name>: <lhs> = <rhs>`".into()))?;
            let name = name.trim().to_owned();
            if builtin_rule(&name).is_some() || rules.iter().any(|(n, _)| *n == name) {
                return Err(DeductionError::DuplicateRule(name));
            }
            rules.push((name, parse_identity(id, line)?));
        } else if let Some(rest) = body.strip_prefix("chain ") {
            if pending.is_some() {
                return Err(perr("previous chain has no `end:`".into()));
            }
            let mut words = rest.split_whitespace();
            let name = words.next().ok_or_else(|| perr("chain needs a name".into()))?.to_owned();
            let proves = match (words.next(), words.next(), words.next()) {
                (None, _, _) => None,
                (Some("proves"), Some(r), None) => Some(r.to_owned()),
                _ => return Err(perr("expected `chain <name> [proves <rule>]`".into())),
            };
            pending = Some(Pending { name: Some(name), proves, ..Pending::default() });
        } else if let Some(rest) = body.strip_prefix("start:") {
            let p = pending.get_or_insert_with(Pending::default);
            if p.start.is_some() {
                return Err(perr("chain already has a start".into()));
            }
            p.start = Some(term(rest)?);
        } else if let Some(rest) = body.strip_prefix("step:") {
            let p = pending.as_mut().filter(|p| p.start.is_some()).ok_or_else(|| perr("step before `start:`".into()))?;
            let step = parse_step(rest.trim(), line, &rules)?;
            p.steps.push(step);
        } else if let Some(rest) = body.strip_prefix("end:") {
            let p = pending.take().filter(|p| p.start.is_some()).ok_or_else(|| perr("`end:` before `start:`".into()))?;
            let name = p.name.unwrap_or_else(|| format!("chain{}", chains.len() + 1));
            if let Some(r) = &p.proves {
                if !rules.iter().any(|(n, _)| n == r) {
                    return Err(DeductionError::UnknownRule(r.clone()));
                }
            }
            chains.push(DerivationChain { name, proves: p.proves, start: p.start.unwrap(), steps: p.steps, end: term(rest)? });
        } else {
            return Err(perr(format!("unrecognised line `{body}`")));
        }
    }
    if pending.is_some() {
        return Err(DeductionError::Parse { line: text.lines().count(), message: "chain has no `end:`".into() });
    }
    Ok(ChainFile { rules, chains })
}

fn parse_identity(s: &str, line: usize) -> Result<Identity, DeductionError> {
    let (l, r) = s
        .split_once('=')
        .ok_or(DeductionError::Parse { line, message: "identity needs `=`".into() })?;
    let term = |s: &str| s.parse::<Word>().map_err(|source| DeductionError::Term { line, source });
    Ok(Identity::new(term(l)?, term(r)?))
}

fn parse_step(s: &str, line: usize, rules: &[(String, Identity)]) -> Result<DerivationStep, DeductionError> {
    let perr = |message: String| DeductionError::Parse { line, message };
    let (name, identity, rest) = if let Some(inner) = s.strip_prefix('[') {
        let (id, rest) = inner.split_once(']').ok_or_else(|| perr("unclosed `[`".into()))?;
        ("inline".to_owned(), parse_identity(id, line)?, rest)
    } else {
        let (name, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        let id = rules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, id)| id.clone())
            .or_else(|| builtin_rule(name))
            .ok_or_else(|| DeductionError::UnknownRule(name.to_owned()))?;
        (name.to_owned(), id, rest)
    };

    let (fields, sub) = match rest.split_once("sub=") {
        Some((f, s)) => (f, Some(s)),
        None => (rest, None),
    };
    let mut direction = None;
    let mut position = None;
    for field in fields.split_whitespace() {
        if let Some(d) = field.strip_prefix("dir=") {
            direction = Some(match d {
                "LR" => Direction::LeftToRight,
                "RL" => Direction::RightToLeft,
                other => return Err(perr(format!("bad direction `{other}`"))),
            });
        } else if let Some(p) = field.strip_prefix("at=") {
            position = Some(p.parse::<Position>().map_err(|source| DeductionError::Term { line, source })?);
        } else {
            return Err(perr(format!("unexpected `{field}`")));
        }
    }
    let direction = direction.ok_or_else(|| perr("missing `dir=`".into()))?;
    let position = position.ok_or_else(|| perr("missing `at=`".into()))?;

    let mut substitution = BTreeMap::new();
    for binding in sub.into_iter().flat_map(|s| s.split(',')).map(str::trim).filter(|b| !b.is_empty()) {
        let (v, t) = binding.split_once('=').ok_or_else(|| perr(format!("bad binding `{binding}`")))?;
        let v = Variable::new(v.trim()).map_err(|source| DeductionError::Term { line, source })?;
        let t = t.parse::<Word>().map_err(|source| DeductionError::Term { line, source })?;
        substitution.insert(v, t);
    }
    Ok(DerivationStep { rule: RewriteRule::new(name, identity, direction), position, substitution })
}
