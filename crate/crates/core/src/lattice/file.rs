//! Lattice text format.
//!
//! ```text
//! # comment
//! 4
//! 1 1 1 1
//! 0 1 0 1
//! 0 0 1 1
//! 0 0 0 1
//! ```
//!
//! Row `a` column `b` is 1 when `a <= b`. Instead of the matrix, the size
//! line may be followed by `covers:` and pairs `a<b`; the order is their
//! reflexive-transitive closure.

use super::{FiniteLattice, LatticeError};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        pub const LATTICE_FIXTURE_NAMES: &[&str] = &[$($name),*];
        const FIXTURE_SOURCES: &[(&str, &str)] =
            &[$(($name, include_str!(concat!("../../data/lattices/", $name, ".lattice")))),*];
    };
}

fixtures!("chain2", "chain3", "chain4", "chain5", "chain6", "M3", "N5", "grid2x2", "B3");

pub fn lattice_fixture(name: &str) -> Result<FiniteLattice, LatticeError> {
    let (_, text) = FIXTURE_SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| LatticeError::UnknownFixture(name.to_owned()))?;
    Ok(parse_lattice(text)?.named(name))
}

pub fn lattice_catalog() -> Vec<FiniteLattice> {
    LATTICE_FIXTURE_NAMES.iter().map(|n| lattice_fixture(n).expect("fixture is valid")).collect()
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice, LatticeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let perr = |line: usize, message: String| LatticeError::Parse { line, message };

    let (line, first) = lines.next().ok_or_else(|| perr(1, "missing size line".into()))?;
    let n: usize = first.parse().map_err(|_| perr(line, format!("expected a size, found `{first}`")))?;
    if n == 0 {
        return Err(perr(line, "size must be positive".into()));
    }

    let mut leq = vec![vec![false; n]; n];
    let rest: Vec<(usize, &str)> = lines.collect();
    if rest.first().is_some_and(|(_, l)| *l == "covers:") {
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(line, body) in &rest[1..] {
            for pair in body.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                let (a, b) = pair.split_once('<').ok_or_else(|| perr(line, format!("expected `a<b`, found `{pair}`")))?;
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .ok()
                        .filter(|&v| v < n)
                        .ok_or_else(|| perr(line, format!("bad element `{s}` in `{pair}`")))
                };
                leq[parse(a)?][parse(b)?] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
    } else {
        if rest.len() != n {
            let line = rest.last().map_or(line, |(l, _)| *l);
            return Err(perr(line, format!("expected {n} matrix rows, found {}", rest.len())));
        }
        for (a, &(line, body)) in rest.iter().enumerate() {
            let cells: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
            if cells.len() != n {
                return Err(perr(line, format!("expected {n} entries, found {}", cells.len())));
            }
            for (b, c) in cells.into_iter().enumerate() {
                leq[a][b] = match c {
                    '0' => false,
                    '1' => true,
                    other => return Err(perr(line, format!("unexpected `{other}`"))),
                };
            }
        }
    }
    FiniteLattice::from_leq(leq)
}

pub fn to_lattice_string(l: &FiniteLattice) -> String {
    let mut out = String::new();
    if let Some(name) = l.name() {
        out.push_str(&format!("# {name}\n"));
    }
    out.push_str(&format!("{}\n", l.size()));
    for row in l.leq_matrix() {
        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
