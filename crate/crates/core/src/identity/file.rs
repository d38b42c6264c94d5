use super::{Identity, IdentityError, IdentitySystem, ZeroIdentity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationKind {
    Plain(Identity),
    Zero(ZeroIdentity),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationEntry {
    /// 1-based line in the source text.
    pub line: usize,
    pub source: String,
    pub kind: PresentationKind,
    pub expanded: IdentitySystem,
}

/// A parsed identity file. `= 0` lines are expanded on load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub entries: Vec<PresentationEntry>,
}

impl Presentation {
    pub fn system(&self) -> IdentitySystem {
        let mut sys = IdentitySystem::new();
        for e in &self.entries {
            sys.extend(e.expanded.clone());
        }
        sys
    }
}

/// Parses the identity file format: one `LHS = RHS` or `LHS = 0` per line,
/// blank lines ignored, `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<Presentation, IdentityError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let (lhs, rhs) = body.split_once('=').ok_or(IdentityError::MissingEquals { line })?;
        let lhs = lhs.parse().map_err(|source| IdentityError::Term { line, source })?;
        let (kind, expanded) = if rhs.trim() == "0" {
            let z = ZeroIdentity::new(lhs);
            let sys = z.expand();
            (PresentationKind::Zero(z), sys)
        } else {
            let rhs = rhs.parse().map_err(|source| IdentityError::Term { line, source })?;
            let id = Identity::new(lhs, rhs);
            (PresentationKind::Plain(id.clone()), IdentitySystem::single(id))
        };
        entries.push(PresentationEntry { line, source: body.to_owned(), kind, expanded });
    }
    if entries.is_empty() {
        return Err(IdentityError::Empty);
    }
    Ok(Presentation { entries })
}
