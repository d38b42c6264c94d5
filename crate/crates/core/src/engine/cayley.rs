use super::{EngineError, FiniteEpigroup};

/// Parses the Cayley file format: the order `n` on the first content line,
/// then `n` rows of `n` space-separated 0-based products. Lines starting with
/// `#` are comments; a `# name: <name>` comment names the table.
pub fn parse_cayley(text: &str) -> Result<FiniteEpigroup, EngineError> {
    let mut name = None;
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = Some(n.trim().to_owned());
            }
            continue;
        }
        if !line.is_empty() {
            lines.push((idx + 1, line));
        }
    }
    let mut it = lines.into_iter();
    let (first, order_line) = it.next().ok_or(EngineError::Parse { line: 1, message: "missing order".into() })?;
    let order: usize = order_line
        .parse()
        .map_err(|_| EngineError::Parse { line: first, message: format!("bad order `{order_line}`") })?;
    let mut rows = Vec::with_capacity(order);
    for (line, row) in it {
        let entries = row
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| EngineError::Parse { line, message: e.to_string() })?;
        if entries.len() != order {
            return Err(EngineError::Parse { line, message: format!("expected {order} entries, got {}", entries.len()) });
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= order) {
            return Err(EngineError::Parse { line, message: format!("entry {e} out of range") });
        }
        rows.push(entries);
    }
    if rows.len() != order {
        return Err(EngineError::Parse {
            line: text.lines().count(),
            message: format!("expected {order} rows, got {}", rows.len()),
        });
    }
    let s = FiniteEpigroup::from_rows(&rows)?;
    Ok(match name {
        Some(n) => s.named(n),
        None => s,
    })
}

pub fn to_cayley_string(s: &FiniteEpigroup) -> String {
    let mut out = String::new();
    if let Some(n) = s.name() {
        out.push_str(&format!("# name: {n}\n"));
    }
    out.push_str(&format!("{}\n", s.order()));
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = parse_cayley("# name: sl2\n2\n0 0\n0 1\n").unwrap();
        assert_eq!(s.name(), Some("sl2"));
        assert_eq!(parse_cayley(&to_cayley_string(&s)).unwrap(), s);
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_cayley("2\n0 0\n0\n"),
            Err(EngineError::Parse { line: 3, message: "expected 2 entries, got 1".into() })
        );
        assert!(matches!(parse_cayley("two\n"), Err(EngineError::Parse { line: 1, .. })));
        assert!(matches!(parse_cayley("2\n0 0\n0 5\n"), Err(EngineError::Parse { line: 3, .. })));
        assert!(matches!(parse_cayley("2\n1 0\n0 0\n"), Err(EngineError::NotAssociative { .. })));
        assert!(matches!(parse_cayley("2\n0 0\n"), Err(EngineError::Parse { .. })));
    }
}
