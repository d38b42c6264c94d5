//! Finite epigroups given by Cayley tables.
//!
//! Every finite semigroup is an epigroup, so validation only checks the
//! table shape and associativity; the pseudoinverse of each element is then
//! read off its monogenic subsemigroup.

mod cayley;
mod catalog;
mod enumerate;
pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::identity::{Identity, IdentitySystem};
use crate::terms::{Factor, Variable, Word};

pub use cayley::{parse_cayley, to_cayley_string};
pub use catalog::{catalog, fixture, FIXTURE_NAMES};
pub use enumerate::{candidate_count, enumerate, enumerate_with_jobs, is_associative_table, MAX_ENUMERATION_ORDER};

pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("bad table shape: {0}")]
    BadShape(String),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Element, b: Element, c: Element },
    #[error("more than one zero element: {0} and {1}")]
    MultipleZeros(Element, Element),
    #[error("variable `{0}` is not assigned")]
    UnassignedVariable(Variable),
    #[error("semigroup is not nil")]
    NotNil,
    #[error("order {order} exceeds the limit {max} for exhaustive search")]
    OrderTooLarge { order: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A variable-to-element map.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<Variable, Element>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Variable, e: Element) -> Self {
        self.0.insert(v, e);
        self
    }

    pub fn insert(&mut self, v: Variable, e: Element) {
        self.0.insert(v, e);
    }

    pub fn get(&self, v: &Variable) -> Option<Element> {
        self.0.get(v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Element)> {
        self.0.iter()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("{v}={e}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// First failing instance found by [`FiniteEpigroup::find_violation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the identity within the system.
    pub index: usize,
    pub identity: Identity,
    pub assignment: Assignment,
    pub lhs_value: Element,
    pub rhs_value: Element,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "`{}` fails at {}: {} != {}",
            self.identity, self.assignment, self.lhs_value, self.rhs_value
        )
    }
}

/// Index and period of the monogenic subsemigroup `<x>`: the powers
/// `x^index .. x^(index+period-1)` form its cyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monogenic {
    pub index: usize,
    pub period: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteEpigroup {
    name: Option<String>,
    order: usize,
    table: Vec<Element>,
    pinv: Vec<Element>,
    idempotent_power: Vec<Element>,
    zero: Option<Element>,
}

impl FiniteEpigroup {
    /// Validates a table given as rows: `rows[a][b] = a*b`.
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self, EngineError> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(EngineError::BadShape(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Self::from_flat(n, rows.concat())
    }

    /// Validates a row-major table of `order * order` entries.
    pub fn from_flat(order: usize, table: Vec<Element>) -> Result<Self, EngineError> {
        if order == 0 {
            return Err(EngineError::BadShape("order must be at least 1".into()));
        }
        if table.len() != order * order {
            return Err(EngineError::BadShape(format!("{} entries for order {order}", table.len())));
        }
        if let Some(&e) = table.iter().find(|&&e| e >= order) {
            return Err(EngineError::BadShape(format!("entry {e} out of range for order {order}")));
        }
        if let Some((a, b, c)) = first_nonassociative(order, &table) {
            return Err(EngineError::NotAssociative { a, b, c });
        }
        Self::build(order, table)
    }

    fn build(order: usize, table: Vec<Element>) -> Result<Self, EngineError> {
        let mut s = FiniteEpigroup {
            name: None,
            order,
            table,
            pinv: Vec::new(),
            idempotent_power: Vec::new(),
            zero: None,
        };
        for x in 0..order {
            let (e, bar) = s.compute_pseudoinverse(x);
            s.idempotent_power.push(e);
            s.pinv.push(bar);
        }
        let zeros: Vec<Element> =
            (0..order).filter(|&z| (0..order).all(|x| s.mul(z, x) == z && s.mul(x, z) == z)).collect();
        if zeros.len() > 1 {
            return Err(EngineError::MultipleZeros(zeros[0], zeros[1]));
        }
        s.zero = zeros.first().copied();
        Ok(s)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[Element]>::to_vec).collect()
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    pub fn power(&self, x: Element, k: usize) -> Element {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn monogenic(&self, x: Element) -> Monogenic {
        let mut seen = vec![usize::MAX; self.order];
        let mut p = x;
        let mut k = 1;
        loop {
            if seen[p] != usize::MAX {
                return Monogenic { index: seen[p], period: k - seen[p] };
            }
            seen[p] = k;
            p = self.mul(p, x);
            k += 1;
        }
    }

    /// Returns `(e_x, x~)`: the idempotent of `<x>` and the inverse of
    /// `x e_x` in the cyclic group of `<x>`.
    fn compute_pseudoinverse(&self, x: Element) -> (Element, Element) {
        let Monogenic { index, period } = self.monogenic(x);
        let t = index.div_ceil(period) * period;
        let e = self.power(x, t);
        let g = self.mul(x, e);
        let bar = (index..index + period)
            .map(|k| self.power(x, k))
            .find(|&y| self.mul(y, g) == e)
            .expect("cyclic group contains the inverse");
        (e, bar)
    }

    pub fn pseudoinverse(&self, x: Element) -> Element {
        self.pinv[x]
    }

    /// The idempotent power `e_x` of `x`.
    pub fn idempotent_power(&self, x: Element) -> Element {
        self.idempotent_power[x]
    }

    /// `x^ω = x x~`.
    pub fn omega(&self, x: Element) -> Element {
        self.mul(x, self.pinv[x])
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn zero(&self) -> Option<Element> {
        self.zero
    }

    /// `x` lies in a subgroup, tested as `x = x~~`.
    pub fn is_group_element(&self, x: Element) -> bool {
        self.pinv[self.pinv[x]] == x
    }

    pub fn group_elements(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.is_group_element(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_commutative() && self.elements().all(|x| self.is_idempotent(x))
    }

    /// A zero exists and is a power of every element.
    pub fn is_nil(&self) -> bool {
        match self.zero {
            Some(z) => self.idempotent_power.iter().all(|&e| e == z),
            None => false,
        }
    }

    /// Least `n` such that every product of `n` elements is zero.
    pub fn nilpotency_index(&self) -> Result<usize, EngineError> {
        if !self.is_nil() {
            return Err(EngineError::NotNil);
        }
        let zero = self.zero.unwrap();
        let mut current = vec![true; self.order];
        let mut n = 1;
        while current.iter().enumerate().any(|(x, &present)| present && x != zero) {
            let mut next = vec![false; self.order];
            for a in (0..self.order).filter(|&a| current[a]) {
                for b in self.elements() {
                    next[self.mul(a, b)] = true;
                }
            }
            current = next;
            n += 1;
        }
        Ok(n)
    }

    pub fn evaluate(&self, w: &Word, asg: &Assignment) -> Result<Element, EngineError> {
        let mut acc: Option<Element> = None;
        for f in w.flatten() {
            let v = match f {
                Factor::Var(x) => asg.get(x).ok_or_else(|| EngineError::UnassignedVariable(x.clone()))?,
                Factor::Inv(u) => self.pinv[self.evaluate(u, asg)?],
            };
            acc = Some(match acc {
                None => v,
                Some(a) => self.mul(a, v),
            });
        }
        Ok(acc.expect("words are nonempty"))
    }

    /// The first identity and assignment at which the system fails.
    ///
    /// Assignments are visited in mixed-radix order over the identity's
    /// variables sorted ascending, the first variable varying slowest.
    pub fn find_violation(&self, sys: &IdentitySystem) -> Option<Violation> {
        sys.iter().enumerate().find_map(|(index, id)| {
            let compiled = CompiledIdentity::new(id);
            compiled.first_failure(self).map(|(vals, l, r)| Violation {
                index,
                identity: id.clone(),
                assignment: compiled.assignment(&vals),
                lhs_value: l,
                rhs_value: r,
            })
        })
    }

    pub fn satisfies(&self, sys: &IdentitySystem) -> bool {
        sys.iter().all(|id| self.satisfies_identity(id))
    }

    pub fn satisfies_identity(&self, id: &Identity) -> bool {
        CompiledIdentity::new(id).first_failure(self).is_none()
    }

    /// Componentwise product; the pair `(a, b)` is element `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteEpigroup) -> FiniteEpigroup {
        let m = other.order;
        let n = self.order * m;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table.push(self.mul(a1, b1) * m + other.mul(a2, b2));
            }
        }
        let s = Self::build(n, table).expect("products of semigroups are semigroups");
        match (&self.name, &other.name) {
            (Some(x), Some(y)) => s.named(format!("{x}_x_{y}")),
            _ => s,
        }
    }

    /// The copy of `self` in which element `x` is renamed `perm[x]`.
    pub fn relabel(&self, perm: &[Element]) -> FiniteEpigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let s = Self::build(n, table).expect("relabelling preserves associativity");
        FiniteEpigroup { name: self.name.clone(), ..s }
    }

    /// Subtable on a product-closed subset, elements renumbered in increasing order.
    pub fn restrict(&self, subset: &[Element]) -> Result<FiniteEpigroup, EngineError> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &x) in subset.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = Vec::with_capacity(subset.len() * subset.len());
        for &a in subset {
            for &b in subset {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(EngineError::BadShape(format!("subset not closed: {a}*{b}")));
                }
                table.push(p);
            }
        }
        Self::build(subset.len(), table)
    }

    /// All nonempty product-closed subsets, as sorted element lists.
    pub fn subsemigroups(&self) -> Result<Vec<Vec<Element>>, EngineError> {
        const MAX: usize = 12;
        if self.order > MAX {
            return Err(EngineError::OrderTooLarge { order: self.order, max: MAX });
        }
        let mut out = Vec::new();
        for mask in 1u32..(1 << self.order) {
            let members: Vec<Element> = self.elements().filter(|&x| mask & (1 << x) != 0).collect();
            let closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask & (1 << self.mul(a, b)) != 0));
            if closed {
                out.push(members);
            }
        }
        Ok(out)
    }

    /// Lexicographically least table over all relabellings.
    pub fn canonical_table(&self) -> Vec<Element> {
        let n = self.order;
        let mut best: Option<Vec<Element>> = None;
        for_each_permutation(n, |perm| {
            let mut table = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
                }
            }
            if best.as_ref().is_none_or(|b| table < *b) {
                best = Some(table);
            }
        });
        best.unwrap()
    }
}

impl fmt::Display for FiniteEpigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_cayley_string(self))
    }
}

pub(crate) fn first_nonassociative(n: usize, t: &[Element]) -> Option<(Element, Element, Element)> {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            for c in 0..n {
                if t[ab * n + c] != t[a * n + t[b * n + c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

enum CFactor {
    Var(usize),
    Inv(Vec<CFactor>),
}

/// An identity with its variables replaced by slots `0..k`.
struct CompiledIdentity {
    vars: Vec<Variable>,
    lhs: Vec<CFactor>,
    rhs: Vec<CFactor>,
}

impl CompiledIdentity {
    fn new(id: &Identity) -> Self {
        let vars: Vec<Variable> = id.content().into_iter().collect();
        let lhs = compile(&id.lhs, &vars);
        let rhs = compile(&id.rhs, &vars);
        CompiledIdentity { vars, lhs, rhs }
    }

    fn assignment(&self, vals: &[Element]) -> Assignment {
        Assignment(self.vars.iter().cloned().zip(vals.iter().copied()).collect())
    }

    fn first_failure(&self, s: &FiniteEpigroup) -> Option<(Vec<Element>, Element, Element)> {
        let k = self.vars.len();
        let mut vals = vec![0; k];
        loop {
            let l = eval_compiled(s, &self.lhs, &vals);
            let r = eval_compiled(s, &self.rhs, &vals);
            if l != r {
                return Some((vals, l, r));
            }
            // mixed-radix increment, last variable fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                vals[i] += 1;
                if vals[i] < s.order {
                    break;
                }
                vals[i] = 0;
            }
        }
    }
}

fn compile(w: &Word, vars: &[Variable]) -> Vec<CFactor> {
    w.flatten()
        .iter()
        .map(|f| match f {
            Factor::Var(v) => CFactor::Var(vars.binary_search(v).expect("variable collected")),
            Factor::Inv(u) => CFactor::Inv(compile(u, vars)),
        })
        .collect()
}

fn eval_compiled(s: &FiniteEpigroup, w: &[CFactor], vals: &[Element]) -> Element {
    let value = |f: &CFactor| match f {
        CFactor::Var(i) => vals[*i],
        CFactor::Inv(u) => s.pinv[eval_compiled(s, u, vals)],
    };
    let mut acc = value(&w[0]);
    for f in &w[1..] {
        acc = s.mul(acc, value(f));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::ZeroIdentity;

    fn sl2() -> FiniteEpigroup {
        FiniteEpigroup::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap()
    }

    fn z2() -> FiniteEpigroup {
        FiniteEpigroup::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn n2() -> FiniteEpigroup {
        FiniteEpigroup::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap()
    }

    /// `a, a^2, a^3` with `a^4 = a^2`.
    fn mono22() -> FiniteEpigroup {
        FiniteEpigroup::from_rows(&[vec![1, 2, 1], vec![2, 1, 2], vec![1, 2, 1]]).unwrap()
    }

    fn x() -> Variable {
        Variable::new("x").unwrap()
    }

    fn sys(lines: &[&str]) -> IdentitySystem {
        lines.iter().map(|l| l.parse::<Identity>().unwrap()).collect()
    }

    #[test]
    fn validate_examples() {
        let s = sl2();
        assert_eq!(s.idempotents(), vec![0, 1]);
        // 0*0 = 1, everything else 0: (0*0)*1 = 0 but 0*(0*1) = 1
        assert_eq!(
            FiniteEpigroup::from_rows(&[vec![1, 0], vec![0, 0]]),
            Err(EngineError::NotAssociative { a: 0, b: 0, c: 1 })
        );
        assert_eq!(z2().idempotents(), vec![0]);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(FiniteEpigroup::from_rows(&[]), Err(EngineError::BadShape(_))));
        assert!(matches!(FiniteEpigroup::from_rows(&[vec![0, 0], vec![0]]), Err(EngineError::BadShape(_))));
        assert!(matches!(FiniteEpigroup::from_rows(&[vec![0, 2], vec![0, 0]]), Err(EngineError::BadShape(_))));
    }

    #[test]
    fn pseudoinverse_examples() {
        let s = sl2();
        assert_eq!((s.pseudoinverse(0), s.pseudoinverse(1)), (0, 1));
        assert_eq!(z2().pseudoinverse(1), 1);

        let m = mono22();
        let (a, a2, a3) = (0, 1, 2);
        assert_eq!(m.idempotent_power(a), a2);
        assert_eq!(m.pseudoinverse(a), a3);
        assert_eq!(m.omega(a), a2);
        assert_eq!(m.pseudoinverse(m.pseudoinverse(a)), a3);
        assert_eq!(m.mul(m.pseudoinverse(a), m.mul(a, a2)), a2);
        assert_eq!(m.monogenic(a), Monogenic { index: 2, period: 2 });
    }

    #[test]
    fn group_element_examples() {
        assert!(z2().elements().all(|x| z2().is_group_element(x)));
        assert!(!mono22().is_group_element(0));
        assert_eq!(mono22().group_elements(), vec![1, 2]);
        // N2: 0 is the zero, 1 = a with a*a = 0
        assert!(n2().is_group_element(0));
        assert!(!n2().is_group_element(1));
    }

    #[test]
    fn evaluate_examples() {
        let m = mono22();
        let xw: Word = "x x~".parse().unwrap();
        for a in m.elements() {
            let asg = Assignment::new().with(x(), a);
            assert_eq!(m.evaluate(&xw, &asg).unwrap(), m.idempotent_power(a));
        }
        let n = n2();
        let bar: Word = "x~".parse().unwrap();
        for a in n.elements() {
            assert_eq!(n.evaluate(&bar, &Assignment::new().with(x(), a)).unwrap(), n.zero().unwrap());
        }
        let dbl: Word = "x~~".parse().unwrap();
        assert_eq!(m.evaluate(&dbl, &Assignment::new().with(x(), 0)).unwrap(), 2);
        let y: Word = "x y".parse().unwrap();
        assert_eq!(
            m.evaluate(&y, &Assignment::new().with(x(), 0)),
            Err(EngineError::UnassignedVariable(Variable::new("y").unwrap()))
        );
    }

    #[test]
    fn satisfies_examples() {
        assert!(sl2().satisfies(&sys(&["x y = y x", "x^2 = x"])));

        let mut nilcomm = IdentitySystem::new();
        nilcomm.push_zero(&ZeroIdentity::new("x^2 y".parse().unwrap()));
        nilcomm.push("x y = y x".parse().unwrap());
        assert!(n2().satisfies(&nilcomm));

        let v = z2().find_violation(&sys(&["x^2 = x"])).unwrap();
        assert_eq!(v.assignment, Assignment::new().with(x(), 1));
        assert_eq!((v.lhs_value, v.rhs_value), (0, 1));
    }

    #[test]
    fn witness_order_is_mixed_radix() {
        // In the left-zero semigroup xy = x, `x y = y x` first fails at x=0, y=1.
        let lz = FiniteEpigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        let v = lz.find_violation(&sys(&["x = x", "x y = y x"])).unwrap();
        assert_eq!(v.index, 1);
        assert_eq!(v.assignment.to_string(), "x=0, y=1");
    }

    #[test]
    fn nil_examples() {
        assert!(n2().is_nil());
        assert_eq!(n2().nilpotency_index(), Ok(2));
        let n3 = FiniteEpigroup::from_rows(&[vec![0, 0, 0], vec![0, 2, 0], vec![0, 0, 0]]).unwrap();
        assert!(n3.is_nil());
        assert_eq!(n3.nilpotency_index(), Ok(3));
        assert!(!z2().is_nil());
        assert_eq!(z2().nilpotency_index(), Err(EngineError::NotNil));
        let trivial = FiniteEpigroup::from_rows(&[vec![0]]).unwrap();
        assert_eq!(trivial.nilpotency_index(), Ok(1));
    }

    #[test]
    fn structural_predicates() {
        assert!(sl2().is_semilattice());
        assert!(z2().is_commutative() && !z2().is_semilattice());
        let lz = FiniteEpigroup::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(!lz.is_commutative());
        assert_eq!(lz.zero(), None);
    }

    #[test]
    fn direct_product_examples() {
        let p = sl2().direct_product(&n2());
        assert_eq!(p.order(), 4);
        assert!(p.is_commutative());
        assert!(p.satisfies(&sys(&["x y = y x"])));

        let trivial = FiniteEpigroup::from_rows(&[vec![0]]).unwrap();
        assert_eq!(mono22().direct_product(&trivial).table(), mono22().table());

        let nn = n2().direct_product(&n2());
        assert_eq!(nn.nilpotency_index(), Ok(2));
    }

    #[test]
    fn pseudoinverse_is_componentwise() {
        let (s, t) = (mono22(), z2());
        let p = s.direct_product(&t);
        for a in s.elements() {
            for b in t.elements() {
                let bar = p.pseudoinverse(a * t.order() + b);
                assert_eq!(bar, s.pseudoinverse(a) * t.order() + t.pseudoinverse(b));
            }
        }
    }

    #[test]
    fn subsemigroups_and_restriction() {
        let m = mono22();
        let subs = m.subsemigroups().unwrap();
        assert!(subs.contains(&vec![1]));
        assert!(subs.contains(&vec![1, 2]));
        assert!(!subs.contains(&vec![0]));
        let g = m.restrict(&[1, 2]).unwrap();
        assert_eq!(g.table(), z2().table());
        assert!(m.restrict(&[0]).is_err());
    }

    #[test]
    fn canonical_tables_identify_isomorphic_copies() {
        let m = mono22();
        let r = m.relabel(&[2, 0, 1]);
        assert_ne!(r.table(), m.table());
        assert_eq!(r.canonical_table(), m.canonical_table());
        assert_eq!(r.pseudoinverse(2), 1);
    }

    #[test]
    fn permutations_are_complete() {
        let mut seen = std::collections::BTreeSet::new();
        for_each_permutation(4, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }
}
