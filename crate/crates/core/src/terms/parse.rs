use super::{Factor, TermError, Variable, Word};

/// Parses a word in the term grammar.
///
/// ```text
/// word    := factor ( '*'? factor )*
/// factor  := atom postfix*
/// atom    := variable | '(' word ')'
/// postfix := '~' | '^' digits | '^' 'w'
/// ```
///
/// `~` is pseudoinversion, `^k` repeats the factor `k >= 1` times and `^w`
/// is the omega shorthand `a^w = a a~`. Postfix operators bind tighter than
/// multiplication and apply left to right, so `x~^3` is `x~ x~ x~`.
pub fn parse_word(input: &str) -> Result<Word, TermError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> TermError {
        TermError::Parse { column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word, TermError> {
        let mut factors: Vec<Factor> = Vec::new();
        loop {
            match self.peek() {
                Some(b'*') if !factors.is_empty() => {
                    self.pos += 1;
                    factors.extend(self.factor()?.into_factors());
                }
                Some(c) if c == b'(' || c.is_ascii_lowercase() => {
                    factors.extend(self.factor()?.into_factors());
                }
                _ => break,
            }
        }
        Word::from_factors(factors).ok_or_else(|| self.error("expected a term"))
    }

    fn factor(&mut self) -> Result<Word, TermError> {
        let mut w = self.atom()?;
        loop {
            match self.peek() {
                Some(b'~') => {
                    self.pos += 1;
                    w = w.inv();
                }
                Some(b'^') => {
                    self.pos += 1;
                    self.skip_ws();
                    if self.src.get(self.pos) == Some(&b'w') {
                        self.pos += 1;
                        w = w.omega();
                        continue;
                    }
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let k: usize = digits.parse().map_err(|_| self.error("expected exponent after `^`"))?;
                    if k == 0 {
                        return Err(self.error("exponent must be at least 1"));
                    }
                    w = w.pow(k);
                }
                _ => return Ok(w),
            }
        }
    }

    fn atom(&mut self) -> Result<Word, TermError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Word::var(Variable::new(name)?))
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let w = parse_word("x1 x2 (x3 x4)~~ x5").unwrap();
        assert_eq!(w.flatten().len(), 4);
        assert_eq!(w.to_string(), "x1 x2 (x3 x4)~~ x5");

        let w = parse_word("x^2 x~^3").unwrap();
        assert_eq!(w.flatten().len(), 5);
        assert_eq!(w.to_string(), "x^2 x~^3");
    }

    #[test]
    fn star_and_juxtaposition_agree() {
        assert_eq!(parse_word("x*y*z").unwrap(), parse_word("x y z").unwrap());
        assert_eq!(parse_word("(x*y)~").unwrap(), parse_word("(x y)~").unwrap());
    }

    #[test]
    fn omega_shorthand() {
        assert_eq!(parse_word("(x1 x2)^w x3").unwrap(), parse_word("x1 x2 (x1 x2)~ x3").unwrap());
    }

    #[test]
    fn postfix_applies_left_to_right() {
        assert_eq!(parse_word("x^2~").unwrap(), parse_word("(x x)~").unwrap());
        assert_eq!(parse_word("x~^2").unwrap(), parse_word("x~ x~").unwrap());
    }

    #[test]
    fn errors_carry_columns() {
        assert!(matches!(parse_word(""), Err(TermError::Parse { column: 1, .. })));
        assert!(matches!(parse_word("x )"), Err(TermError::Parse { column: 3, .. })));
        assert!(matches!(parse_word("(x y"), Err(TermError::Parse { .. })));
        assert!(matches!(parse_word("x^0"), Err(TermError::Parse { .. })));
        assert!(matches!(parse_word("* x"), Err(TermError::Parse { .. })));
        assert!(matches!(parse_word("x + y"), Err(TermError::Parse { column: 3, .. })));
    }
}
