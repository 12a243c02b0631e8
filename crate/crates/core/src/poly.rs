//! Sparse exact multivariate polynomials in canonical form.
//!
//! Terms are stored sorted descending under the ring's canonical grevlex
//! order, with no zero coefficients and pairwise-distinct monomials, so the
//! stored representation is a function of the mathematical polynomial alone.
//! The zero polynomial is the empty term list.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ring::{ExponentVec, MonomialOrder, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<F: Field> {
    pub coeff: F::Elem,
    pub exps: ExponentVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F::Elem) -> Self {
        let mut terms = Vec::new();
        if !ring.field().is_zero(&c) {
            terms.push(Term {
                coeff: c,
                exps: ExponentVec::unit(ring.num_vars()),
            });
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Result<Self> {
        if i >= ring.num_vars() {
            return Err(Error::InvalidInput(format!("no variable with index {i}")));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: ring.field().one(),
                exps: ExponentVec::var(ring.num_vars(), i, 1),
            }],
        })
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, coeff: F::Elem, exps: ExponentVec) -> Result<Self> {
        Self::from_terms(ring, [(coeff, exps)])
    }

    /// Builds the canonical form from an arbitrary term list: combines equal
    /// monomials, drops zeros, sorts.
    pub fn from_terms(
        ring: &Arc<PolyRing<F>>,
        terms: impl IntoIterator<Item = (F::Elem, ExponentVec)>,
    ) -> Result<Self> {
        let mut raw = Vec::new();
        for (coeff, exps) in terms {
            if exps.len() != ring.num_vars() {
                return Err(Error::LengthMismatch {
                    expected: ring.num_vars(),
                    got: exps.len(),
                });
            }
            raw.push(Term { coeff, exps });
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: canonicalize(ring.field(), raw),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// A nonzero constant: a unit of the polynomial ring.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exps.is_unit()
    }

    /// The single term of a monomial polynomial, if it is one.
    pub fn as_monomial(&self) -> Option<&Term<F>> {
        match self.terms.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.exps.total_degree()).max()
    }

    /// Maximal term under `ord`; the zero polynomial has none.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<&Term<F>> {
        if self.terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if *ord == MonomialOrder::grevlex() {
            return Ok(&self.terms[0]);
        }
        Ok(self
            .terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.exps, &b.exps))
            .expect("nonempty"))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if !PolyRing::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let ord = MonomialOrder::grevlex();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ord.cmp(&a.exps, &b.exps) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(&a.coeff, &b.coeff);
                    if !field.is_zero(&c) {
                        out.push(Term {
                            coeff: c,
                            exps: a.exps.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    exps: t.exps.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push(Term {
                    coeff: field.mul(&a.coeff, &b.coeff),
                    exps: a.exps.mul(&b.exps),
                });
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: canonicalize(field, raw),
        })
    }

    /// Multiplies by the term `c * x^m`; same-ring data assumed.
    pub fn mul_term(&self, c: &F::Elem, m: &ExponentVec) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(&t.coeff, c),
                    exps: t.exps.mul(m),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(c, &ExponentVec::unit(self.ring.num_vars()))
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Result<Self> {
        let lc = self.leading_term(ord)?.coeff.clone();
        let inv = self.ring.field().inv(&lc);
        Ok(self.scale(&inv))
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

/// Sort descending under canonical grevlex, merge equal monomials, drop zeros.
fn canonicalize<F: Field>(field: &F, mut raw: Vec<Term<F>>) -> Vec<Term<F>> {
    let ord = MonomialOrder::grevlex();
    raw.sort_by(|a, b| ord.cmp(&b.exps, &a.exps));
    let mut out: Vec<Term<F>> = Vec::with_capacity(raw.len());
    for t in raw {
        match out.last_mut() {
            Some(last) if last.exps == t.exps => {
                last.coeff = field.add(&last.coeff, &t.coeff);
            }
            _ => out.push(t),
        }
    }
    out.retain(|t| !field.is_zero(&t.coeff));
    out
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, t) in self.terms.iter().enumerate() {
            let (neg, mag) = field.display_parts(&t.coeff);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = self.ring.vars().format_monomial(&t.exps);
            let coeff_is_one = mag == "1";
            if t.exps.is_unit() {
                write!(f, "{mag}")?;
            } else if coeff_is_one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
