//! Shared brute-force oracles for the integration suites. Everything here is
//! deliberately naive and independent of the library's algorithms: membership
//! is checked by divisibility over enumerated monomials, never by the code
//! under test.

#![allow(dead_code)]

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::Rng;

use regdecomp_core::{ExponentVec, MonomialIdeal, VarSet};

/// All exponent vectors in `nvars` variables with total degree at most `max_deg`.
pub fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<ExponentVec> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, max_deg);
    out
}

fn fill(out: &mut Vec<ExponentVec>, current: &mut Vec<u32>, pos: usize, budget: u32) {
    if pos == current.len() {
        out.push(ExponentVec::new(current.clone()));
        return;
    }
    for d in 0..=budget {
        current[pos] = d;
        fill(out, current, pos + 1, budget - d);
        current[pos] = 0;
    }
}

/// Divisibility-by-some-generator membership, straight from the definition.
pub fn member(gens: &[ExponentVec], m: &ExponentVec) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Equality of monomial ideals by comparing membership over every monomial
/// of degree at most `deg`. Sound when `deg` covers both generator degrees.
pub fn equal_up_to(a: &MonomialIdeal, b: &MonomialIdeal, deg: u32) -> bool {
    monomials_up_to(a.vars().len(), deg)
        .iter()
        .all(|m| member(a.min_gens(), m) == member(b.min_gens(), m))
}

/// Degree that makes membership comparison against `ideals` conclusive.
pub fn safe_degree(ideals: &[&MonomialIdeal]) -> u32 {
    ideals
        .iter()
        .flat_map(|i| i.min_gens().iter().map(|g| g.total_degree() as u32))
        .max()
        .unwrap_or(0)
}

/// The primary condition checked literally on monomials up to `deg`:
/// `f*g` in Q and `f` outside Q forces `g` in the radical of Q.
pub fn primary_oracle(q: &MonomialIdeal, deg: u32) -> bool {
    let nvars = q.vars().len();
    let radical_gens: Vec<ExponentVec> = q
        .min_gens()
        .iter()
        .map(|g| g.squarefree())
        .collect();
    let monos = monomials_up_to(nvars, deg);
    let in_q: Vec<bool> = monos.iter().map(|m| member(q.min_gens(), m)).collect();
    let in_rad: Vec<bool> = monos.iter().map(|m| member(&radical_gens, m)).collect();
    for (i, f) in monos.iter().enumerate() {
        if in_q[i] {
            continue;
        }
        for (j, g) in monos.iter().enumerate() {
            if in_rad[j] {
                continue;
            }
            if member(q.min_gens(), &f.mul(g)) {
                return false;
            }
        }
    }
    true
}

/// Random monomial ideal: up to `max_gens` generators of degree ≤ `max_deg`,
/// discarding the occasional all-zero generator draw.
pub fn random_monomial_ideal(
    rng: &mut StdRng,
    vars: &Arc<VarSet>,
    max_gens: usize,
    max_deg: u32,
) -> MonomialIdeal {
    let nvars = vars.len();
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::new();
    for _ in 0..count {
        let mut exps = vec![0u32; nvars];
        let deg = rng.gen_range(1..=max_deg);
        for _ in 0..deg {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        gens.push(ExponentVec::new(exps));
    }
    MonomialIdeal::new(vars, gens).unwrap()
}
