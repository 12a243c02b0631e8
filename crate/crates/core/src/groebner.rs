//! Buchberger engine: multivariate division and reduced Groebner bases.
//!
//! Pair selection follows the normal strategy (smallest lcm first) with the
//! coprime-leading-term and chain criteria. The number of S-pairs taken off
//! the queue is capped by an explicit budget, so a runaway computation is an
//! error, never a wrong answer.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Polynomial, Term};
use crate::ring::{ExponentVec, MonomialOrder, PolyRing};

/// Division with cofactor bookkeeping: returns `(quotients, remainder)` with
/// `f = sum(quotients[i] * divisors[i]) + remainder` and no remainder term
/// divisible by any divisor's leading term.
pub fn divide<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    for d in divisors {
        if d.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if !PolyRing::same_ring(f.ring(), d.ring()) {
            return Err(Error::RingMismatch(format!("{} vs {}", f.ring(), d.ring())));
        }
    }
    let engine = Engine::new(f.ring(), ord);
    let basis: Vec<Vec<Term<F>>> = divisors.iter().map(|d| engine.sorted(d)).collect();
    let (cofactors, rem) = engine.divide(engine.sorted(f), &basis);
    let cofactors = cofactors
        .into_iter()
        .map(|terms| engine.rebuild(terms))
        .collect();
    Ok((cofactors, engine.rebuild(rem)))
}

/// Remainder of `f` on division by `basis` under `ord`.
pub(crate) fn remainder<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Polynomial<F> {
    let engine = Engine::new(f.ring(), ord);
    let sorted_basis: Vec<Vec<Term<F>>> = basis.iter().map(|b| engine.sorted(b)).collect();
    let rem = engine.normal_form(engine.sorted(f), &sorted_basis);
    engine.rebuild(rem)
}

/// The unique reduced Groebner basis of the ideal generated by `gens`.
pub(crate) fn reduced_basis<F: Field>(
    ring: &Arc<PolyRing<F>>,
    ord: &MonomialOrder,
    gens: &[Polynomial<F>],
    budget: u64,
) -> Result<Vec<Polynomial<F>>> {
    let engine = Engine::new(ring, ord);
    let seed: Vec<Vec<Term<F>>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.monic(engine.sorted(g)))
        .collect();
    if seed.is_empty() {
        return Ok(Vec::new());
    }
    let basis = engine.buchberger(seed, budget)?;
    let basis = engine.reduce_basis(basis);
    Ok(basis.into_iter().map(|b| engine.rebuild(b)).collect())
}

/// Working state: term lists sorted descending under one fixed order.
struct Engine<'a, F: Field> {
    ring: &'a Arc<PolyRing<F>>,
    ord: &'a MonomialOrder,
}

impl<'a, F: Field> Engine<'a, F> {
    fn new(ring: &'a Arc<PolyRing<F>>, ord: &'a MonomialOrder) -> Self {
        Engine { ring, ord }
    }

    fn field(&self) -> &F {
        self.ring.field()
    }

    fn sorted(&self, p: &Polynomial<F>) -> Vec<Term<F>> {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| self.ord.cmp(&b.exps, &a.exps));
        terms
    }

    fn rebuild(&self, terms: Vec<Term<F>>) -> Polynomial<F> {
        Polynomial::from_terms(self.ring, terms.into_iter().map(|t| (t.coeff, t.exps)))
            .expect("terms come from this ring")
    }

    fn monic(&self, terms: Vec<Term<F>>) -> Vec<Term<F>> {
        if terms.is_empty() {
            return terms;
        }
        let field = self.field();
        if field.is_one(&terms[0].coeff) {
            return terms;
        }
        let inv = field.inv(&terms[0].coeff);
        terms
            .into_iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, &inv),
                exps: t.exps,
            })
            .collect()
    }

    /// `a - c * x^m * b`, all term lists sorted descending.
    fn sub_scaled(
        &self,
        a: &[Term<F>],
        b: &[Term<F>],
        c: &F::Elem,
        m: &ExponentVec,
    ) -> Vec<Term<F>> {
        let field = self.field();
        let neg_c = field.neg(c);
        let shifted: Vec<Term<F>> = b
            .iter()
            .map(|t| Term {
                coeff: field.mul(&t.coeff, &neg_c),
                exps: t.exps.mul(m),
            })
            .collect();
        let mut out = Vec::with_capacity(a.len() + shifted.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < shifted.len() {
            match self.ord.cmp(&a[i].exps, &shifted[j].exps) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(shifted[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = field.add(&a[i].coeff, &shifted[j].coeff);
                    if !field.is_zero(&coeff) {
                        out.push(Term {
                            coeff,
                            exps: a[i].exps.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&shifted[j..]);
        out
    }

    /// Full normal form of `g` against `basis`.
    fn normal_form(&self, mut g: Vec<Term<F>>, basis: &[Vec<Term<F>>]) -> Vec<Term<F>> {
        let field = self.field();
        let mut rem = Vec::new();
        'outer: while !g.is_empty() {
            for b in basis {
                if b.is_empty() {
                    continue;
                }
                let lt = &b[0];
                if lt.exps.divides(&g[0].exps) {
                    let q = g[0].exps.quotient(&lt.exps).expect("divides");
                    let factor = field.div(&g[0].coeff, &lt.coeff);
                    g = self.sub_scaled(&g, b, &factor, &q);
                    continue 'outer;
                }
            }
            rem.push(g.remove(0));
        }
        rem
    }

    /// Normal form plus the cofactors applied to each divisor.
    fn divide(
        &self,
        mut g: Vec<Term<F>>,
        basis: &[Vec<Term<F>>],
    ) -> (Vec<Vec<Term<F>>>, Vec<Term<F>>) {
        let field = self.field();
        let mut cofactors: Vec<Vec<Term<F>>> = vec![Vec::new(); basis.len()];
        let mut rem = Vec::new();
        'outer: while !g.is_empty() {
            for (bi, b) in basis.iter().enumerate() {
                let lt = &b[0];
                if lt.exps.divides(&g[0].exps) {
                    let q = g[0].exps.quotient(&lt.exps).expect("divides");
                    let factor = field.div(&g[0].coeff, &lt.coeff);
                    cofactors[bi].push(Term {
                        coeff: factor.clone(),
                        exps: q.clone(),
                    });
                    g = self.sub_scaled(&g, b, &factor, &q);
                    continue 'outer;
                }
            }
            rem.push(g.remove(0));
        }
        (cofactors, rem)
    }

    /// S-polynomial; the leading terms cancel by construction.
    fn spoly(&self, f: &[Term<F>], g: &[Term<F>]) -> Vec<Term<F>> {
        let field = self.field();
        let l = f[0].exps.lcm(&g[0].exps);
        let uf = l.quotient(&f[0].exps).expect("lcm multiple");
        let ug = l.quotient(&g[0].exps).expect("lcm multiple");
        let a: Vec<Term<F>> = f
            .iter()
            .map(|t| Term {
                coeff: field.div(&t.coeff, &f[0].coeff),
                exps: t.exps.mul(&uf),
            })
            .collect();
        self.sub_scaled(&a, g, &field.inv(&g[0].coeff), &ug)
    }

    fn buchberger(&self, mut basis: Vec<Vec<Term<F>>>, budget: u64) -> Result<Vec<Vec<Term<F>>>> {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                pairs.push((i, j));
                pending.insert((i, j));
            }
        }
        let mut processed: u64 = 0;
        while !pairs.is_empty() {
            processed += 1;
            if processed > budget {
                return Err(Error::BudgetExceeded { spairs: budget });
            }
            // Normal strategy: smallest pair lcm first, index order on ties.
            let mut best = 0;
            let mut best_lcm = basis[pairs[0].0][0].exps.lcm(&basis[pairs[0].1][0].exps);
            for idx in 1..pairs.len() {
                let l = basis[pairs[idx].0][0].exps.lcm(&basis[pairs[idx].1][0].exps);
                match self.ord.cmp(&l, &best_lcm) {
                    std::cmp::Ordering::Less => {
                        best = idx;
                        best_lcm = l;
                    }
                    std::cmp::Ordering::Equal if pairs[idx] < pairs[best] => {
                        best = idx;
                        best_lcm = l;
                    }
                    _ => {}
                }
            }
            let (i, j) = pairs.swap_remove(best);
            pending.remove(&(i, j));

            let li = &basis[i][0].exps;
            let lj = &basis[j][0].exps;
            if li.coprime_with(lj) {
                continue;
            }
            let l = li.lcm(lj);
            let chain_skip = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].exps.divides(&l)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain_skip {
                continue;
            }

            let s = self.spoly(&basis[i], &basis[j]);
            let r = self.normal_form(s, &basis);
            if !r.is_empty() {
                let r = self.monic(r);
                let t = basis.len();
                for k in 0..t {
                    pairs.push((k, t));
                    pending.insert((k, t));
                }
                basis.push(r);
            }
        }
        Ok(basis)
    }

    /// Minimalizes and autoreduces a Groebner basis into the reduced basis,
    /// sorted ascending by leading term.
    fn reduce_basis(&self, basis: Vec<Vec<Term<F>>>) -> Vec<Vec<Term<F>>> {
        let mut basis: Vec<Vec<Term<F>>> = basis.into_iter().map(|b| self.monic(b)).collect();
        basis.sort_by(|a, b| self.ord.cmp(&a[0].exps, &b[0].exps));
        // Minimal: ascending scan keeps an antichain of leading terms, since a
        // proper divisor always sorts strictly earlier in a multiplicative order.
        let mut minimal: Vec<Vec<Term<F>>> = Vec::new();
        for b in basis {
            if !minimal.iter().any(|m| m[0].exps.divides(&b[0].exps)) {
                minimal.push(b);
            }
        }
        // Autoreduce tails to a fixpoint; leading terms never change.
        loop {
            let mut changed = false;
            for i in 0..minimal.len() {
                let current = std::mem::take(&mut minimal[i]);
                let reduced = self.normal_form(current.clone(), &minimal);
                debug_assert!(!reduced.is_empty());
                if reduced != current {
                    changed = true;
                }
                minimal[i] = reduced;
            }
            if !changed {
                break;
            }
        }
        minimal.sort_by(|a, b| self.ord.cmp(&a[0].exps, &b[0].exps));
        minimal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    type QPoly = Polynomial<Rationals>;

    fn setup() -> (Arc<PolyRing<Rationals>>, QPoly, QPoly) {
        let r = PolyRing::new(Rationals, ["x", "y"]).unwrap();
        let x = QPoly::var(&r, 0).unwrap();
        let y = QPoly::var(&r, 1).unwrap();
        (r, x, y)
    }

    #[test]
    fn reduced_basis_of_lex_example() {
        // (x^2 - y, x*y - 1) under lex(x > y) has basis {x - y^2, y^3 - 1}
        let (r, x, y) = setup();
        let g1 = x.pow(2).unwrap().sub(&y).unwrap();
        let g2 = x.mul(&y).unwrap().sub(&QPoly::one(&r)).unwrap();
        let gb = reduced_basis(&r, &MonomialOrder::lex(), &[g1, g2], 1_000_000).unwrap();
        let expected_a = y.pow(3).unwrap().sub(&QPoly::one(&r)).unwrap();
        let expected_b = x.sub(&y.pow(2).unwrap()).unwrap();
        assert_eq!(gb, vec![expected_a, expected_b]);
    }

    #[test]
    fn already_reduced_and_redundant_inputs() {
        let (r, x, _) = setup();
        let gb = reduced_basis(&r, &MonomialOrder::lex(), &[x.clone()], 1_000).unwrap();
        assert_eq!(gb, vec![x.clone()]);
        let gb2 = reduced_basis(
            &r,
            &MonomialOrder::lex(),
            &[x.clone(), x.pow(2).unwrap()],
            1_000,
        )
        .unwrap();
        assert_eq!(gb2, vec![x.clone()]);
    }

    #[test]
    fn division_reconstructs_input() {
        let (r, x, y) = setup();
        let f = x.pow(3).unwrap().add(&x.mul(&y).unwrap()).unwrap();
        let d1 = x.pow(2).unwrap().sub(&y).unwrap();
        let d2 = x.mul(&y).unwrap().sub(&QPoly::one(&r)).unwrap();
        let ord = MonomialOrder::lex();
        let (cof, rem) = divide(&f, &[d1.clone(), d2.clone()], &ord).unwrap();
        let mut recon = rem.clone();
        recon = recon.add(&cof[0].mul(&d1).unwrap()).unwrap();
        recon = recon.add(&cof[1].mul(&d2).unwrap()).unwrap();
        assert_eq!(recon, f);
        // no remainder term divisible by a leading term of a divisor
        for t in rem.terms() {
            assert!(!d1.leading_term(&ord).unwrap().exps.divides(&t.exps));
            assert!(!d2.leading_term(&ord).unwrap().exps.divides(&t.exps));
        }
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let (r, x, y) = setup();
        let g1 = x.pow(2).unwrap().sub(&y).unwrap();
        let g2 = x.mul(&y).unwrap().sub(&QPoly::one(&r)).unwrap();
        let err = reduced_basis(&r, &MonomialOrder::lex(), &[g1, g2], 1).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let (r, _, _) = setup();
        let gb = reduced_basis(&r, &MonomialOrder::lex(), &[QPoly::zero(&r)], 10).unwrap();
        assert!(gb.is_empty());
    }
}
