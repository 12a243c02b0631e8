//! Field-independent combinatorics of monomial ideals: minimal generators,
//! membership, intersection, quotient, radical, irreducible and primary
//! decomposition, and containment exponents.
//!
//! Everything here works on exponent vectors over a shared [`VarSet`];
//! coefficients never enter, so results are identical over every field.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{ExponentVec, MonomialOrder, PolyRing, VarSet};

/// A monomial ideal held as its divisibility-minimal generating antichain,
/// canonically sorted. The unit ideal is the single generator 1; the zero
/// ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Arc<VarSet>,
    gens: Vec<ExponentVec>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generator list into an antichain.
    pub fn new(vars: &Arc<VarSet>, gens: impl IntoIterator<Item = ExponentVec>) -> Result<Self> {
        let mut raw = Vec::new();
        for g in gens {
            if g.len() != vars.len() {
                return Err(Error::LengthMismatch {
                    expected: vars.len(),
                    got: g.len(),
                });
            }
            raw.push(g);
        }
        Ok(MonomialIdeal {
            vars: vars.clone(),
            gens: minimalize(raw),
        })
    }

    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MonomialIdeal {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: &Arc<VarSet>) -> Self {
        MonomialIdeal {
            vars: vars.clone(),
            gens: vec![ExponentVec::unit(vars.len())],
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn min_gens(&self) -> &[ExponentVec] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if *self.vars != *other.vars {
            return Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.vars.names().join(","),
                other.vars.names().join(",")
            )));
        }
        Ok(())
    }

    /// Membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &ExponentVec) -> Result<bool> {
        if m.len() != self.vars.len() {
            return Err(Error::LengthMismatch {
                expected: self.vars.len(),
                got: m.len(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_vars(other)?;
        Ok(other.gens.iter().all(|g| self.divides_some(g)))
    }

    fn divides_some(&self, m: &ExponentVec) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ∩ J`: minimalized pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<MonomialIdeal> {
        self.check_vars(other)?;
        let gens: Vec<ExponentVec> = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(a, b)| a.lcm(b))
            .collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(gens),
        })
    }

    /// `(I : m)`: each generator divided by as much of `m` as it carries.
    pub fn quotient_monomial(&self, m: &ExponentVec) -> Result<MonomialIdeal> {
        if m.len() != self.vars.len() {
            return Err(Error::LengthMismatch {
                expected: self.vars.len(),
                got: m.len(),
            });
        }
        let gens: Vec<ExponentVec> = self
            .gens
            .iter()
            .map(|g| g.saturating_quotient(m))
            .collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(gens),
        })
    }

    /// The radical: minimalized squarefree parts of the generators.
    pub fn radical(&self) -> Result<MonomialIdeal> {
        self.require_proper_nonzero("radical")?;
        let gens: Vec<ExponentVec> = self.gens.iter().map(|g| g.squarefree()).collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(gens),
        })
    }

    /// `I^n`: minimalized n-fold products of generators; `I^0 = (1)`.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        if n == 0 {
            return MonomialIdeal::unit(&self.vars);
        }
        if n == 1 {
            return self.clone();
        }
        let mut gens = Vec::new();
        for combo in self.gens.iter().combinations_with_replacement(n as usize) {
            let mut prod = ExponentVec::unit(self.vars.len());
            for g in combo {
                prod = prod.mul(g);
            }
            gens.push(prod);
        }
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(gens),
        }
    }

    /// Primality test for monomial ideals: primary exactly when every
    /// variable occurring in a minimal generator also occurs as a pure
    /// power. Returns the radical prime on success.
    pub fn is_primary(&self) -> Result<Option<MonomialPrime>> {
        self.require_proper_nonzero("primality test")?;
        let mut occurring = vec![false; self.vars.len()];
        let mut pure = vec![false; self.vars.len()];
        for g in &self.gens {
            let support = g.support();
            if support.len() == 1 {
                pure[support[0]] = true;
            }
            for v in support {
                occurring[v] = true;
            }
        }
        for i in 0..self.vars.len() {
            if occurring[i] && !pure[i] {
                return Ok(None);
            }
        }
        let support: Vec<usize> = (0..self.vars.len()).filter(|&i| occurring[i]).collect();
        Ok(Some(MonomialPrime::new(&self.vars, support)?))
    }

    fn require_proper_nonzero(&self, what: &'static str) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal(what));
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal(what));
        }
        Ok(())
    }

    /// True when every minimal generator is a pure variable power.
    pub fn is_irreducible_form(&self) -> bool {
        !self.is_zero() && self.gens.iter().all(|g| g.support().len() <= 1)
    }

    /// Irredundant decomposition into irreducible monomial ideals (each
    /// generated by pure variable powers). Splits the lexicographically
    /// first mixed generator `m = u·v` into `I + (u)` and `I + (v)` with
    /// `u` the full power of the first variable of `m`.
    pub fn irreducible_decomposition(&self) -> Result<Vec<MonomialIdeal>> {
        self.require_proper_nonzero("irreducible decomposition")?;
        let mut out: Vec<MonomialIdeal> = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(ideal) = stack.pop() {
            let mixed = ideal
                .gens
                .iter()
                .filter(|g| g.support().len() > 1)
                .min()
                .cloned();
            match mixed {
                None => out.push(ideal),
                Some(m) => {
                    let first_var = m.support()[0];
                    let u = ExponentVec::var(self.vars.len(), first_var, m.exponent(first_var));
                    let v = m.saturating_quotient(&u);
                    for piece in [u, v] {
                        let mut gens = ideal.gens.clone();
                        gens.push(piece);
                        stack.push(MonomialIdeal {
                            vars: self.vars.clone(),
                            gens: minimalize(gens),
                        });
                    }
                }
            }
        }
        out.sort_by(|a, b| a.gens.cmp(&b.gens));
        Ok(remove_redundant(out))
    }

    /// Minimal primary decomposition: irreducible components grouped by
    /// radical and intersected, one primary component per associated prime,
    /// with its containment exponent and a witness that the exponent is
    /// minimal.
    pub fn primary_decomposition(&self) -> Result<Vec<PrimaryComponent>> {
        self.require_proper_nonzero("primary decomposition")?;
        let irreducibles = self.irreducible_decomposition()?;
        let mut groups: BTreeMap<Vec<usize>, MonomialIdeal> = BTreeMap::new();
        for piece in irreducibles {
            let support: Vec<usize> = (0..self.vars.len())
                .filter(|&i| piece.gens.iter().any(|g| g.exponent(i) > 0))
                .collect();
            match groups.entry(support) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(piece);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let merged = e.get().intersect(&piece)?;
                    e.insert(merged);
                }
            }
        }
        let mut components = Vec::new();
        for (support, component) in groups {
            let radical = MonomialPrime::new(&self.vars, support)?;
            debug_assert_eq!(component.is_primary()?, Some(radical.clone()));
            let cap = pigeonhole_cap(&component, &radical);
            let containment = containment_exponent(&radical, &component, cap)?;
            components.push(PrimaryComponent {
                component,
                radical,
                containment_exponent: containment.exponent,
                shortfall_witness: containment.shortfall,
            });
        }
        Ok(components)
    }

    pub fn to_ideal<F: Field>(&self, ring: &Arc<PolyRing<F>>) -> Result<Ideal<F>> {
        if **ring.vars() != *self.vars {
            return Err(Error::RingMismatch(format!(
                "[{}] vs {}",
                self.vars.names().join(","),
                ring
            )));
        }
        let gens: Result<Vec<Polynomial<F>>> = self
            .gens
            .iter()
            .map(|g| Polynomial::monomial(ring, ring.field().one(), g.clone()))
            .collect();
        Ideal::new(ring, gens?)
    }

    /// Reads a monomial ideal off a polynomial ideal whose generators are
    /// all single terms; coefficients are units and drop away.
    pub fn from_ideal<F: Field>(ideal: &Ideal<F>) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for g in ideal.generators() {
            match g.as_monomial() {
                Some(t) => gens.push(t.exps.clone()),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "generator {g} is not a monomial"
                    )))
                }
            }
        }
        MonomialIdeal::new(ideal.ring().vars(), gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| self.vars.format_monomial(g))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A monomial prime: the ideal generated by a nonempty set of variables.
#[derive(Debug, Clone)]
pub struct MonomialPrime {
    vars: Arc<VarSet>,
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(vars: &Arc<VarSet>, mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::InvalidInput("a monomial prime needs a variable".into()));
        }
        if support.iter().any(|&i| i >= vars.len()) {
            return Err(Error::InvalidInput("variable index out of range".into()));
        }
        Ok(MonomialPrime {
            vars: vars.clone(),
            support,
        })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn to_monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(
                self.support
                    .iter()
                    .map(|&i| ExponentVec::var(self.vars.len(), i, 1))
                    .collect(),
            ),
        }
    }

    /// `P^k` as a monomial ideal; its minimal generators are exactly the
    /// degree-`k` monomials on the support.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        if k == 0 {
            return MonomialIdeal::unit(&self.vars);
        }
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: minimalize(monomials_of_degree(self.vars.len(), &self.support, k)),
        }
    }
}

impl PartialEq for MonomialPrime {
    fn eq(&self, other: &Self) -> bool {
        *self.vars == *other.vars && self.support == other.support
    }
}

impl Eq for MonomialPrime {}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(*self.vars, *other.vars);
        self.support.cmp(&other.support)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.support.iter().map(|&i| self.vars.name(i)).collect();
        write!(f, "({})", names.join(","))
    }
}

/// One primary piece of a decomposition, with the minimal exponent `k`
/// satisfying `radical^k ⊆ component` and a monomial witnessing that
/// `radical^(k-1)` is not contained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub component: MonomialIdeal,
    pub radical: MonomialPrime,
    pub containment_exponent: u32,
    pub shortfall_witness: ExponentVec,
}

/// Outcome of a containment-exponent search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    /// Minimal `k` with `P^k ⊆ Q`.
    pub exponent: u32,
    /// A degree-`k-1` monomial on the support of `P` outside `Q`.
    pub shortfall: ExponentVec,
}

/// Minimal `k ≤ k_max` with `P^k ⊆ Q`, searched by increasing `k` with the
/// first failing monomial of each level recorded. Requires `√Q = P`.
pub fn containment_exponent(
    prime: &MonomialPrime,
    ideal: &MonomialIdeal,
    k_max: u32,
) -> Result<Containment> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidInput(
            "containment exponent needs a proper nonzero ideal".into(),
        ));
    }
    if ideal.radical()? != prime.to_monomial_ideal() {
        return Err(Error::InvalidInput(format!(
            "radical of {ideal} is not {prime}"
        )));
    }
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be at least 1".into()));
    }
    // P^0 = (1) is never inside a proper ideal; the unit monomial witnesses it.
    let mut shortfall = ExponentVec::unit(ideal.vars().len());
    for k in 1..=k_max {
        let level = monomials_of_degree(ideal.vars().len(), prime.support(), k);
        match level.into_iter().find(|m| !ideal.divides_some(m)) {
            None => {
                return Ok(Containment {
                    exponent: k,
                    shortfall,
                })
            }
            Some(miss) => shortfall = miss,
        }
    }
    Err(Error::ExponentCapExceeded { cap: k_max })
}

/// Containment exponent cap that always suffices: once the degree reaches
/// `sum(a_i - 1) + 1` over the pure powers `x_i^(a_i)` of `Q`, some variable
/// exponent meets its pure power.
fn pigeonhole_cap(ideal: &MonomialIdeal, prime: &MonomialPrime) -> u32 {
    let mut cap: u32 = 1;
    for &v in prime.support() {
        let pure = ideal
            .min_gens()
            .iter()
            .filter(|g| g.support() == [v])
            .map(|g| g.exponent(v))
            .min()
            .expect("primary ideal has a pure power per support variable");
        cap += pure - 1;
    }
    cap
}

/// All exponent vectors of total degree exactly `k` supported on `support`.
pub fn monomials_of_degree(len: usize, support: &[usize], k: u32) -> Vec<ExponentVec> {
    let mut out = Vec::new();
    let mut current = vec![0u32; len];
    fill_degrees(&mut out, &mut current, support, k);
    out
}

fn fill_degrees(
    out: &mut Vec<ExponentVec>,
    current: &mut Vec<u32>,
    support: &[usize],
    remaining: u32,
) {
    match support {
        [] => {
            if remaining == 0 {
                out.push(ExponentVec::new(current.clone()));
            }
        }
        [last] => {
            current[*last] = remaining;
            out.push(ExponentVec::new(current.clone()));
            current[*last] = 0;
        }
        [first, rest @ ..] => {
            for d in (0..=remaining).rev() {
                current[*first] = d;
                fill_degrees(out, current, rest, remaining - d);
            }
            current[*first] = 0;
        }
    }
}

/// Divisibility-minimal antichain generating the same ideal.
fn minimalize(gens: Vec<ExponentVec>) -> Vec<ExponentVec> {
    let mut kept: Vec<ExponentVec> = Vec::new();
    for g in &gens {
        let strictly_dominated = gens.iter().any(|h| h != g && h.divides(g));
        if !strictly_dominated && !kept.contains(g) {
            kept.push(g.clone());
        }
    }
    let ord = MonomialOrder::grevlex();
    kept.sort_by(|a, b| ord.cmp(a, b).then_with(|| a.cmp(b)));
    kept
}

/// Drops components containing the intersection of the others. A single
/// greedy pass is enough: a component that survives against a larger pool
/// also survives against any subset of it.
fn remove_redundant(components: Vec<MonomialIdeal>) -> Vec<MonomialIdeal> {
    if components.len() <= 1 {
        return components;
    }
    let mut kept: Vec<bool> = vec![true; components.len()];
    for j in 0..components.len() {
        let mut meet: Option<MonomialIdeal> = None;
        for (i, c) in components.iter().enumerate() {
            if i == j || !kept[i] {
                continue;
            }
            meet = Some(match meet {
                None => c.clone(),
                Some(m) => m.intersect(c).expect("same vars"),
            });
        }
        if let Some(m) = meet {
            if components[j].contains_ideal(&m).expect("same vars") {
                kept[j] = false;
            }
        }
    }
    components
        .into_iter()
        .zip(kept)
        .filter_map(|(c, keep)| keep.then_some(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Arc<VarSet> {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn e(v: &[u32]) -> ExponentVec {
        ExponentVec::new(v.to_vec())
    }

    fn ideal(vs: &Arc<VarSet>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(vs, gens.iter().map(|g| e(g))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let vs = vars(&["x", "y"]);
        // {x, x^2, xy} -> {x}
        assert_eq!(
            ideal(&vs, &[&[1, 0], &[2, 0], &[1, 1]]).min_gens(),
            &[e(&[1, 0])]
        );
        // {} -> zero ideal
        assert!(MonomialIdeal::new(&vs, []).unwrap().is_zero());
        // {x^2 y, x y^2, x^2 y^2} -> {x^2 y, x y^2}
        let i = ideal(&vs, &[&[2, 1], &[1, 2], &[2, 2]]);
        assert_eq!(i.min_gens().len(), 2);
        assert!(i.min_gens().contains(&e(&[2, 1])));
        assert!(i.min_gens().contains(&e(&[1, 2])));
    }

    #[test]
    fn membership() {
        let vs = vars(&["x", "y"]);
        assert!(ideal(&vs, &[&[1, 1]]).contains(&e(&[2, 1])).unwrap());
        assert!(!ideal(&vs, &[&[2, 0]]).contains(&e(&[1, 0])).unwrap());
        // x y^3 in (x^2, y^3)
        assert!(ideal(&vs, &[&[2, 0], &[0, 3]])
            .contains(&e(&[1, 3]))
            .unwrap());
        assert!(ideal(&vs, &[&[1, 0]]).contains(&e(&[1])).is_err());
    }

    #[test]
    fn intersect_examples() {
        let vs = vars(&["x", "y"]);
        // (x) ∩ (y) = (xy)
        assert_eq!(
            ideal(&vs, &[&[1, 0]])
                .intersect(&ideal(&vs, &[&[0, 1]]))
                .unwrap()
                .min_gens(),
            &[e(&[1, 1])]
        );
        // (x^2, y) ∩ (x, y^3) = (x^2, xy, y^3)
        let meet = ideal(&vs, &[&[2, 0], &[0, 1]])
            .intersect(&ideal(&vs, &[&[1, 0], &[0, 3]]))
            .unwrap();
        assert_eq!(
            meet,
            ideal(&vs, &[&[2, 0], &[1, 1], &[0, 3]])
        );
        // I ∩ (1) = I
        let i = ideal(&vs, &[&[2, 1], &[0, 3]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(&vs)).unwrap(), i);
    }

    #[test]
    fn quotient_examples() {
        let vs = vars(&["x", "y", "z"]);
        // (x^2) : x = (x)
        assert_eq!(
            ideal(&vs, &[&[2, 0, 0]])
                .quotient_monomial(&e(&[1, 0, 0]))
                .unwrap()
                .min_gens(),
            &[e(&[1, 0, 0])]
        );
        // (x^2, xy) : x = (x, y)
        assert_eq!(
            ideal(&vs, &[&[2, 0, 0], &[1, 1, 0]])
                .quotient_monomial(&e(&[1, 0, 0]))
                .unwrap(),
            ideal(&vs, &[&[1, 0, 0], &[0, 1, 0]])
        );
        // (xy) : z = (xy)
        let i = ideal(&vs, &[&[1, 1, 0]]);
        assert_eq!(i.quotient_monomial(&e(&[0, 0, 1])).unwrap(), i);
    }

    #[test]
    fn radical_examples() {
        let vs = vars(&["x", "y", "z"]);
        // sqrt(x^2, y^3) = (x, y)
        assert_eq!(
            ideal(&vs, &[&[2, 0, 0], &[0, 3, 0]]).radical().unwrap(),
            ideal(&vs, &[&[1, 0, 0], &[0, 1, 0]])
        );
        // sqrt(x^2 y) = (xy)
        assert_eq!(
            ideal(&vs, &[&[2, 1, 0]]).radical().unwrap(),
            ideal(&vs, &[&[1, 1, 0]])
        );
        // sqrt(x^2 y, z^3) = (xy, z)
        assert_eq!(
            ideal(&vs, &[&[2, 1, 0], &[0, 0, 3]]).radical().unwrap(),
            ideal(&vs, &[&[1, 1, 0], &[0, 0, 1]])
        );
        assert!(MonomialIdeal::unit(&vs).radical().is_err());
        assert!(MonomialIdeal::zero(&vs).radical().is_err());
    }

    #[test]
    fn primary_criterion() {
        let vs = vars(&["x", "y"]);
        // (x^2, xy, y^3) primary with radical (x, y)
        let p = ideal(&vs, &[&[2, 0], &[1, 1], &[0, 3]])
            .is_primary()
            .unwrap()
            .unwrap();
        assert_eq!(p.support(), &[0, 1]);
        // (xy) not primary
        assert!(ideal(&vs, &[&[1, 1]]).is_primary().unwrap().is_none());
        // (x^3) primary with radical (x)
        let p2 = ideal(&vs, &[&[3, 0]]).is_primary().unwrap().unwrap();
        assert_eq!(p2.support(), &[0]);
    }

    #[test]
    fn irreducible_decomposition_examples() {
        let vs = vars(&["x", "y"]);
        // (x^2, xy) = (x) ∩ (x^2, y)
        let comps = ideal(&vs, &[&[2, 0], &[1, 1]])
            .irreducible_decomposition()
            .unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&ideal(&vs, &[&[1, 0]])));
        assert!(comps.contains(&ideal(&vs, &[&[2, 0], &[0, 1]])));
        // already irreducible
        let irr = ideal(&vs, &[&[2, 0], &[0, 3]]);
        assert_eq!(irr.irreducible_decomposition().unwrap(), vec![irr.clone()]);
    }

    #[test]
    fn irreducible_decomposition_two_squarefree_gens() {
        // (ab, cd) = (a,c) ∩ (a,d) ∩ (b,c) ∩ (b,d)
        let vs = vars(&["a", "b", "c", "d"]);
        let comps = ideal(&vs, &[&[1, 1, 0, 0], &[0, 0, 1, 1]])
            .irreducible_decomposition()
            .unwrap();
        assert_eq!(comps.len(), 4);
        for pair in [[0usize, 2], [0, 3], [1, 2], [1, 3]] {
            let expected = MonomialIdeal::new(
                &vs,
                pair.iter().map(|&i| ExponentVec::var(4, i, 1)),
            )
            .unwrap();
            assert!(comps.contains(&expected));
        }
    }

    #[test]
    fn primary_decomposition_examples() {
        let vs = vars(&["x", "y"]);
        // (x^2, xy) = (x) ∩ (x^2, xy, y^2)-like; primary parts (x) and (x^2, y)
        let comps = ideal(&vs, &[&[2, 0], &[1, 1]])
            .primary_decomposition()
            .unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].radical.support(), &[0]);
        assert_eq!(comps[0].component, ideal(&vs, &[&[1, 0]]));
        assert_eq!(comps[0].containment_exponent, 1);
        assert_eq!(comps[1].radical.support(), &[0, 1]);
        assert_eq!(comps[1].component, ideal(&vs, &[&[2, 0], &[0, 1]]));
        assert_eq!(comps[1].containment_exponent, 2);
    }

    #[test]
    fn containment_exponent_examples() {
        let vs = vars(&["x", "y"]);
        let p = MonomialPrime::new(&vs, vec![0, 1]).unwrap();
        // (x^2, y^3) needs k = 4
        let c =
            containment_exponent(&p, &ideal(&vs, &[&[2, 0], &[0, 3]]), 10).unwrap();
        assert_eq!(c.exponent, 4);
        assert_eq!(c.shortfall.total_degree(), 3);
        // (x^5) against (x) is 5
        let px = MonomialPrime::new(&vs, vec![0]).unwrap();
        assert_eq!(
            containment_exponent(&px, &ideal(&vs, &[&[5, 0]]), 10)
                .unwrap()
                .exponent,
            5
        );
        // P^2 against P is 2
        assert_eq!(
            containment_exponent(&p, &p.power(2), 10).unwrap().exponent,
            2
        );
        // cap exceeded is reported, not fabricated
        assert!(matches!(
            containment_exponent(&px, &ideal(&vs, &[&[5, 0]]), 3),
            Err(Error::ExponentCapExceeded { cap: 3 })
        ));
    }

    #[test]
    fn powers_of_monomial_ideals() {
        let vs = vars(&["x", "y", "z"]);
        // (x, y)^3 has the four cubics
        let m = ideal(&vs, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(m.power(3).min_gens().len(), 4);
        assert!(m.power(0).is_unit());
        // (xy, yz, zx)^2: all six pairwise products survive minimalization
        let edges = ideal(&vs, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(edges.power(2).min_gens().len(), 6);
    }

    #[test]
    fn prime_powers_enumerate_degree_levels() {
        let vs = vars(&["x", "y", "z"]);
        let p = MonomialPrime::new(&vs, vec![0, 2]).unwrap();
        let p3 = p.power(3);
        assert_eq!(p3.min_gens().len(), 4);
        assert!(p3.min_gens().iter().all(|g| g.total_degree() == 3));
        assert_eq!(p.to_string(), "(x,z)");
    }
}
