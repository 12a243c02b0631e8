//! Variable contexts, exponent vectors, monomial orders, and ring descriptors.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

/// Ordered, unique variable names shared between a polynomial ring and the
/// field-independent monomial layer.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<VarSet>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!(
                    "invalid variable name {name:?}"
                )));
            }
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!(
                    "duplicate variable name {name:?}"
                )));
            }
        }
        Ok(Arc::new(VarSet { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Renders `e` in input syntax, e.g. `a^2*b`; the unit monomial is `1`.
    pub fn format_monomial(&self, e: &ExponentVec) -> String {
        debug_assert_eq!(e.len(), self.len());
        let mut parts = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], k)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector of a monomial; entry `i` is the power of variable `i`.
///
/// The derived `Ord` is plain lexicographic on the raw entries and is used
/// only as a canonical tiebreaker; monomial comparisons for division and
/// Groebner purposes go through [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVec(Vec<u32>);

impl ExponentVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVec(exps)
    }

    /// The monomial 1.
    pub fn unit(len: usize) -> Self {
        ExponentVec(vec![0; len])
    }

    /// The monomial `x_i^power`.
    pub fn var(len: usize, i: usize, power: u32) -> Self {
        debug_assert!(i < len);
        let mut e = vec![0; len];
        e[i] = power;
        ExponentVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of monomials: componentwise sum.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        ExponentVec(
            self.0
                .iter()
                .map(|&e| e.checked_mul(n).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise min.
    pub fn gcd(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn coprime_with(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exact quotient `self / other`; errors unless `other` divides `self`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        if !other.divides(self) {
            return Err(Error::NonDivisible);
        }
        Ok(ExponentVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Componentwise `max(self - other, 0)`; the monomial-colon building block.
    pub fn saturating_quotient(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Exponents clamped to 1; the squarefree part.
    pub fn squarefree(&self) -> Self {
        ExponentVec(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Inserts a zero exponent at position 0 (for the internal auxiliary ring).
    pub fn prepend_zero(&self) -> Self {
        let mut e = Vec::with_capacity(self.len() + 1);
        e.push(0);
        e.extend_from_slice(&self.0);
        ExponentVec(e)
    }

    /// Drops position 0; the entry must be zero.
    pub fn strip_first(&self) -> Self {
        debug_assert_eq!(self.0[0], 0);
        ExponentVec(self.0[1..].to_vec())
    }
}

/// Total, multiplicative well-orders on monomials.
///
/// `Elimination(k)` compares the first `k` comparison positions as a grevlex
/// block before the rest; any monomial involving the leading block beats any
/// monomial that avoids it, which is what elimination needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
    Elimination(usize),
}

/// A monomial order: a kind plus an optional variable permutation giving the
/// significance of each comparison position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            perm: None,
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            perm: None,
        }
    }

    pub fn elimination(block: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Elimination(block),
            perm: None,
        }
    }

    /// Reorders comparison positions: position `i` reads variable `perm[i]`.
    pub fn with_permutation(mut self, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &v in &perm {
            if v >= perm.len() || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        self.perm = Some(perm);
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn cmp(&self, a: &ExponentVec, b: &ExponentVec) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        if let Some(p) = &self.perm {
            debug_assert_eq!(p.len(), a.len());
        }
        let n = a.len();
        match self.kind {
            OrderKind::Lex => {
                for i in 0..n {
                    let (x, y) = (self.at(a, i), self.at(b, i));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => self.grevlex_range(a, b, 0, n),
            OrderKind::Elimination(k) => {
                let k = k.min(n);
                self.grevlex_range(a, b, 0, k)
                    .then_with(|| self.grevlex_range(a, b, k, n))
            }
        }
    }

    fn at(&self, v: &ExponentVec, i: usize) -> u32 {
        match &self.perm {
            Some(p) => v.exponent(p[i]),
            None => v.exponent(i),
        }
    }

    fn grevlex_range(&self, a: &ExponentVec, b: &ExponentVec, lo: usize, hi: usize) -> Ordering {
        let deg = |v: &ExponentVec| -> u64 { (lo..hi).map(|i| self.at(v, i) as u64).sum() };
        match deg(a).cmp(&deg(b)) {
            Ordering::Equal => {}
            other => return other,
        }
        for i in (lo..hi).rev() {
            let (x, y) = (self.at(a, i), self.at(b, i));
            if x != y {
                // Equal degree: the smaller trailing exponent wins.
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, a: &'a ExponentVec, b: &'a ExponentVec) -> &'a ExponentVec {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Descriptor of a polynomial ring: a variable context plus a coefficient
/// field. Shared by reference; two descriptors are compatible when they
/// compare equal by value.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    vars: Arc<VarSet>,
    field: F,
}

impl<F: Field> PartialEq for PolyRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && *self.vars == *other.vars
    }
}

impl<F: Field> Eq for PolyRing<F> {}

impl<F: Field> PolyRing<F> {
    pub fn new<S: Into<String>>(
        field: F,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>> {
        Ok(Arc::new(PolyRing {
            vars: VarSet::new(names)?,
            field,
        }))
    }

    pub fn with_vars(field: F, vars: Arc<VarSet>) -> Arc<Self> {
        Arc::new(PolyRing { vars, field })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn same_ring(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl<F: Field> fmt::Display for PolyRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field.name(), self.vars.names().join(","))
    }
}
