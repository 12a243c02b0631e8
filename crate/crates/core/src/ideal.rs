//! Polynomial ideals and their Groebner-backed operations: membership,
//! equality, intersection, colon, elimination, and powers.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, PolyRing, VarSet};

/// Process-wide cap on S-pairs per basis computation.
static COMPUTATION_BUDGET: AtomicU64 = AtomicU64::new(1_000_000);

pub fn set_computation_budget(max_spairs: u64) {
    COMPUTATION_BUDGET.store(max_spairs, AtomicOrdering::Relaxed);
}

pub fn computation_budget() -> u64 {
    COMPUTATION_BUDGET.load(AtomicOrdering::Relaxed)
}

/// An ideal given by generators, with a write-once reduced-basis cache per
/// monomial order. The zero ideal has no generators.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial<F>>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> Ideal<F> {
    /// Builds an ideal, dropping zero generators.
    pub fn new(
        ring: &Arc<PolyRing<F>>,
        gens: impl IntoIterator<Item = Polynomial<F>>,
    ) -> Result<Self> {
        let mut kept = Vec::new();
        for g in gens {
            if !PolyRing::same_ring(ring, g.ring()) {
                return Err(Error::RingMismatch(format!("{} vs {}", ring, g.ring())));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn unit(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn principal(f: Polynomial<F>) -> Self {
        let ring = f.ring().clone();
        Ideal {
            gens: if f.is_zero() { Vec::new() } else { vec![f] },
            ring,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
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

    /// The unique reduced Groebner basis under `ord`, cached per order.
    /// Concurrent callers may race to compute the same value; the first
    /// finished result wins and all callers observe it.
    pub fn reduced_groebner_basis(&self, ord: &MonomialOrder) -> Result<Arc<Vec<Polynomial<F>>>> {
        self.reduced_groebner_basis_with_budget(ord, computation_budget())
    }

    /// Like [`Self::reduced_groebner_basis`] with an explicit S-pair budget.
    pub fn reduced_groebner_basis_with_budget(
        &self,
        ord: &MonomialOrder,
        budget: u64,
    ) -> Result<Arc<Vec<Polynomial<F>>>> {
        if let Some(b) = self.cache.lock().unwrap().get(ord) {
            return Ok(b.clone());
        }
        let basis = Arc::new(groebner::reduced_basis(&self.ring, ord, &self.gens, budget)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(ord.clone()).or_insert(basis).clone())
    }

    /// Canonical coset representative: the division remainder of `f` by the
    /// reduced basis. `normal_form(f) = 0` exactly when `f` is a member.
    pub fn normal_form(&self, f: &Polynomial<F>, ord: &MonomialOrder) -> Result<Polynomial<F>> {
        if !PolyRing::same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, f.ring())));
        }
        let basis = self.reduced_groebner_basis(ord)?;
        Ok(groebner::remainder(f, &basis, ord))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f, &MonomialOrder::grevlex())?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        let basis = self.reduced_groebner_basis(&MonomialOrder::grevlex())?;
        Ok(basis.len() == 1 && basis[0].is_unit_constant())
    }

    /// Equality via the canonical reduced basis under grevlex.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        let ord = MonomialOrder::grevlex();
        Ok(*self.reduced_groebner_basis(&ord)? == *other.reduced_groebner_basis(&ord)?)
    }

    /// Intersection via a single auxiliary variable: `I ∩ J` is the
    /// elimination of `w` from `w·I + (1-w)·J`. The extended ring is internal
    /// and never escapes.
    pub fn intersect(&self, other: &Self) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let aux = self.auxiliary_ring();
        let w = Polynomial::var(&aux, 0).expect("aux ring has a variable");
        let one_minus_w = Polynomial::one(&aux).sub(&w).expect("same ring");
        let mut aux_gens = Vec::new();
        for f in &self.gens {
            aux_gens.push(w.mul(&lift(&aux, f)).expect("same ring"));
        }
        for g in &other.gens {
            aux_gens.push(one_minus_w.mul(&lift(&aux, g)).expect("same ring"));
        }
        let aux_ideal = Ideal::new(&aux, aux_gens)?;
        let basis = aux_ideal.reduced_groebner_basis(&MonomialOrder::elimination(1))?;
        let mut gens = Vec::new();
        for b in basis.iter() {
            if b.terms().iter().all(|t| t.exps.exponent(0) == 0) {
                gens.push(lower(&self.ring, b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// The colon ideal `(I : f)`. Every generator of `I ∩ (f)` divides
    /// exactly by `f`; a nonzero remainder would be an internal bug and is
    /// surfaced as such.
    pub fn colon_poly(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::InvalidInput("colon by the zero polynomial".into()));
        }
        if !PolyRing::same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, f.ring())));
        }
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let meet = self.intersect(&Ideal::principal(f.clone()))?;
        let ord = MonomialOrder::grevlex();
        let mut gens = Vec::new();
        for g in meet.generators() {
            let (cofactors, rem) = groebner::divide(g, std::slice::from_ref(f), &ord)?;
            if !rem.is_zero() {
                return Err(Error::Internal(format!(
                    "generator {g} of an intersection with ({f}) is not divisible by {f}"
                )));
            }
            gens.push(cofactors.into_iter().next().expect("one divisor"));
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J)` as the intersection of `(I : g)` over generators of `J`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let q = self.colon_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => prev.intersect(&q)?,
            });
        }
        // (I : (0)) is the whole ring.
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I ∩ k[keep]`, returned as an ideal of the same ring.
    pub fn elimination(&self, keep: &[usize]) -> Result<Ideal<F>> {
        let n = self.ring.num_vars();
        if keep.is_empty() {
            return Err(Error::InvalidInput("empty keep set".into()));
        }
        let mut keep_mask = vec![false; n];
        for &i in keep {
            if i >= n {
                return Err(Error::InvalidInput(format!("no variable with index {i}")));
            }
            keep_mask[i] = true;
        }
        let eliminated: Vec<usize> = (0..n).filter(|&i| !keep_mask[i]).collect();
        if eliminated.is_empty() {
            return Ok(self.clone());
        }
        let mut perm = eliminated.clone();
        perm.extend((0..n).filter(|&i| keep_mask[i]));
        let ord = MonomialOrder::elimination(eliminated.len()).with_permutation(perm)?;
        let basis = self.reduced_groebner_basis(&ord)?;
        let gens: Vec<Polynomial<F>> = basis
            .iter()
            .filter(|b| {
                b.terms()
                    .iter()
                    .all(|t| eliminated.iter().all(|&i| t.exps.exponent(i) == 0))
            })
            .cloned()
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I^n`, generated by all n-fold products of generators; `I^0 = (1)`.
    pub fn power(&self, n: u32) -> Result<Ideal<F>> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut gens = Vec::new();
        for combo in self
            .gens
            .iter()
            .combinations_with_replacement(n as usize)
        {
            let mut prod = Polynomial::one(&self.ring);
            for g in combo {
                prod = prod.mul(g)?;
            }
            gens.push(prod);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Fresh one-extra-variable ring for the intersection trick.
    fn auxiliary_ring(&self) -> Arc<PolyRing<F>> {
        let mut w = String::from("w_");
        while self.ring.vars().index_of(&w).is_some() {
            w.push('_');
        }
        let mut names = vec![w];
        names.extend(self.ring.vars().names().iter().cloned());
        let vars = VarSet::new(names).expect("derived names are valid");
        PolyRing::with_vars(self.ring.field().clone(), vars)
    }
}

/// Maps a polynomial into the auxiliary ring (variables shifted right by one).
fn lift<F: Field>(aux: &Arc<PolyRing<F>>, f: &Polynomial<F>) -> Polynomial<F> {
    Polynomial::from_terms(
        aux,
        f.terms()
            .iter()
            .map(|t| (t.coeff.clone(), t.exps.prepend_zero())),
    )
    .expect("lengths match by construction")
}

/// Maps a `w`-free auxiliary polynomial back to the base ring.
fn lower<F: Field>(ring: &Arc<PolyRing<F>>, f: &Polynomial<F>) -> Polynomial<F> {
    Polynomial::from_terms(
        ring,
        f.terms()
            .iter()
            .map(|t| (t.coeff.clone(), t.exps.strip_first())),
    )
    .expect("lengths match by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    type QPoly = Polynomial<Rationals>;

    fn ring2() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, ["x", "y"]).unwrap()
    }

    fn xy(r: &Arc<PolyRing<Rationals>>) -> (QPoly, QPoly) {
        (QPoly::var(r, 0).unwrap(), QPoly::var(r, 1).unwrap())
    }

    #[test]
    fn membership_by_normal_form() {
        let r = ring2();
        let (x, y) = xy(&r);
        let i = Ideal::new(&r, [x.clone()]).unwrap();
        // x^2 in (x); x^2 + y has normal form y
        assert!(i.contains(&x.pow(2).unwrap()).unwrap());
        let nf = i
            .normal_form(
                &x.pow(2).unwrap().add(&y).unwrap(),
                &MonomialOrder::grevlex(),
            )
            .unwrap();
        assert_eq!(nf, y);
    }

    #[test]
    fn equality_ignores_generator_presentation() {
        let r = ring2();
        let (x, y) = xy(&r);
        let a = Ideal::new(&r, [x.clone(), y.clone()]).unwrap();
        let b = Ideal::new(&r, [y.clone(), x.clone()]).unwrap();
        assert!(a.equal(&b).unwrap());
        let c = Ideal::new(&r, [x.add(&y).unwrap(), y.clone()]).unwrap();
        assert!(a.equal(&c).unwrap());
        let d = Ideal::new(&r, [x.pow(2).unwrap()]).unwrap();
        assert!(!Ideal::new(&r, [x.clone()]).unwrap().equal(&d).unwrap());
    }

    #[test]
    fn intersect_coprime_principals() {
        let r = ring2();
        let (x, y) = xy(&r);
        let meet = Ideal::principal(x.clone())
            .intersect(&Ideal::principal(y.clone()))
            .unwrap();
        assert!(meet.equal(&Ideal::principal(x.mul(&y).unwrap())).unwrap());
    }

    #[test]
    fn intersect_is_idempotent() {
        let r = ring2();
        let (x, y) = xy(&r);
        let i = Ideal::new(&r, [x.pow(2).unwrap(), x.mul(&y).unwrap()]).unwrap();
        assert!(i.intersect(&i).unwrap().equal(&i).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring2();
        let (x, y) = xy(&r);
        // (x^2) : x = (x)
        let q = Ideal::principal(x.pow(2).unwrap())
            .colon_poly(&x)
            .unwrap();
        assert!(q.equal(&Ideal::principal(x.clone())).unwrap());
        // (x^2, xy) : x = (x, y)
        let q2 = Ideal::new(&r, [x.pow(2).unwrap(), x.mul(&y).unwrap()])
            .unwrap()
            .colon_poly(&x)
            .unwrap();
        assert!(q2
            .equal(&Ideal::new(&r, [x.clone(), y.clone()]).unwrap())
            .unwrap());
        // (x^3, y^2) : y^2 = (1)
        let q3 = Ideal::new(&r, [x.pow(3).unwrap(), y.pow(2).unwrap()])
            .unwrap()
            .colon_poly(&y.pow(2).unwrap())
            .unwrap();
        assert!(q3.is_unit_ideal().unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring2();
        let (x, y) = xy(&r);
        // (x - y^2): eliminating x leaves nothing
        let i = Ideal::new(&r, [x.sub(&y.pow(2).unwrap()).unwrap()]).unwrap();
        let e = i.elimination(&[1]).unwrap();
        assert!(e.is_zero_ideal());
        // (x - y^2, x): eliminating x gives (y^2)
        let j = Ideal::new(&r, [x.sub(&y.pow(2).unwrap()).unwrap(), x.clone()]).unwrap();
        let e2 = j.elimination(&[1]).unwrap();
        assert!(e2.equal(&Ideal::principal(y.pow(2).unwrap())).unwrap());
    }

    #[test]
    fn powers() {
        let r = ring2();
        let (x, y) = xy(&r);
        let m = Ideal::new(&r, [x.clone(), y.clone()]).unwrap();
        let sq = m.power(2).unwrap();
        let expected = Ideal::new(
            &r,
            [
                x.pow(2).unwrap(),
                x.mul(&y).unwrap(),
                y.pow(2).unwrap(),
            ],
        )
        .unwrap();
        assert!(sq.equal(&expected).unwrap());
        assert!(m.power(1).unwrap().equal(&m).unwrap());
        assert!(m.power(0).unwrap().is_unit_ideal().unwrap());
    }

    #[test]
    fn zero_ideal_behaviour() {
        let r = ring2();
        let (x, _) = xy(&r);
        let z = Ideal::<Rationals>::zero(&r);
        assert!(z.reduced_groebner_basis(&MonomialOrder::grevlex()).unwrap().is_empty());
        assert!(z.intersect(&Ideal::principal(x.clone())).unwrap().is_zero_ideal());
        assert!(z.colon_poly(&x).unwrap().is_zero_ideal());
        assert!(z.contains(&QPoly::zero(&r)).unwrap());
        assert!(!z.contains(&x).unwrap());
    }
}
