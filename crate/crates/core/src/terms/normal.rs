use std::fmt;

use super::{Factor, TermError, Variable, Word};

pub const P_MAX: u32 = 8;
pub const Q_MAX: u32 = 8;

/// The word `x^p x~^q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneVariableForm {
    pub var: Variable,
    pub p: u32,
    pub q: u32,
}

impl OneVariableForm {
    pub fn to_word(&self) -> Word {
        let x = Word::var(self.var.clone());
        let mut parts = Vec::new();
        if self.p > 0 {
            parts.push(x.pow(self.p as usize));
        }
        if self.q > 0 {
            parts.push(x.inv().pow(self.q as usize));
        }
        Word::product(parts).expect("p + q >= 1")
    }
}

impl fmt::Display for OneVariableForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Value of a one-variable word inside the monogenic unary subsemigroup:
/// either a plain power `x^k`, or the element `g^m` of the cyclic group
/// around `x^ω`, where `g = x x^ω` and `x~ = g^-1`.
#[derive(Clone, Copy)]
enum Shape {
    Power(u64),
    Group(i64),
}

impl Shape {
    fn mul(self, other: Shape) -> Shape {
        match (self, other) {
            (Shape::Power(a), Shape::Power(b)) => Shape::Power(a + b),
            // x^a g^m = x^a x^ω g^m = g^(a+m), on either side.
            (Shape::Power(a), Shape::Group(m)) | (Shape::Group(m), Shape::Power(a)) => Shape::Group(a as i64 + m),
            (Shape::Group(m), Shape::Group(k)) => Shape::Group(m + k),
        }
    }

    fn inv(self) -> Shape {
        match self {
            // x^k has idempotent x^ω and x^k x^ω = g^k.
            Shape::Power(k) => Shape::Group(-(k as i64)),
            Shape::Group(m) => Shape::Group(-m),
        }
    }
}

fn shape(w: &Word) -> Shape {
    w.flatten()
        .iter()
        .map(|f| match f {
            Factor::Var(_) => Shape::Power(1),
            Factor::Inv(u) => shape(u).inv(),
        })
        .reduce(Shape::mul)
        .expect("words are nonempty")
}

/// Reduces a one-variable word to the form `x^p x~^q`.
///
/// Semigroup words give `(len, 0)`. Any other word is pushed into the group
/// part by the always-valid rewrites `x x~ -> x~ x`, `x~~ -> x x^ω`,
/// `(x^k)~ -> x~^k`, and cancellation of `x` against `x~` next to `x^ω`;
/// what remains is a signed exponent `m` of `g = x x^ω`, returned as the
/// lexicographically least pair with `p - q = m` and `q >= 1`.
pub fn normalize_one_variable(w: &Word) -> Result<OneVariableForm, TermError> {
    let content = w.content();
    if content.len() != 1 {
        return Err(TermError::NotOneVariable(w.clone()));
    }
    let var = content.into_iter().next().unwrap();
    let (p, q) = match shape(w) {
        Shape::Power(k) => (k, 0),
        Shape::Group(m) if m >= 0 => (m as u64 + 1, 1),
        Shape::Group(m) => (0, m.unsigned_abs()),
    };
    if q > 0 && (p > P_MAX as u64 || q > Q_MAX as u64) {
        return Err(TermError::ExponentOutOfRange { word: w.clone() });
    }
    Ok(OneVariableForm { var, p: p as u32, q: q as u32 })
}
