//! Cross-checks the Groebner engine against an unoptimized textbook
//! implementation: FIFO pair processing, no selection strategy, no skip
//! criteria, naive reduction. The two must agree on the reduced basis.

use std::collections::VecDeque;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use regdecomp_core::{
    groebner, ExponentVec, Field, Ideal, MonomialOrder, PolyRing, Polynomial, QPolynomial,
    Rationals,
};

type QRing = Arc<PolyRing<Rationals>>;

fn ring2() -> QRing {
    PolyRing::new(Rationals, ["x", "y"]).unwrap()
}

/// Naive complete reduction: peel the leading term, divide when possible.
fn oracle_reduce(f: &QPolynomial, basis: &[QPolynomial], ord: &MonomialOrder) -> QPolynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut g = f.clone();
    let mut rem = Polynomial::zero(&ring);
    'outer: while !g.is_zero() {
        let lt = g.leading_term(ord).unwrap().clone();
        for b in basis {
            let bt = b.leading_term(ord).unwrap();
            if bt.exps.divides(&lt.exps) {
                let q = lt.exps.quotient(&bt.exps).unwrap();
                let c = field.div(&lt.coeff, &bt.coeff);
                g = g.sub(&b.mul_term(&c, &q)).unwrap();
                continue 'outer;
            }
        }
        let m = Polynomial::monomial(&ring, lt.coeff.clone(), lt.exps.clone()).unwrap();
        rem = rem.add(&m).unwrap();
        g = g.sub(&m).unwrap();
    }
    rem
}

fn oracle_spoly(f: &QPolynomial, g: &QPolynomial, ord: &MonomialOrder) -> QPolynomial {
    let field = *f.ring().field();
    let (ltf, ltg) = (
        f.leading_term(ord).unwrap().clone(),
        g.leading_term(ord).unwrap().clone(),
    );
    let l = ltf.exps.lcm(&ltg.exps);
    let a = f.mul_term(
        &field.inv(&ltf.coeff),
        &l.quotient(&ltf.exps).unwrap(),
    );
    let b = g.mul_term(
        &field.inv(&ltg.coeff),
        &l.quotient(&ltg.exps).unwrap(),
    );
    a.sub(&b).unwrap()
}

/// Textbook Buchberger: every pair, first-in-first-out, then minimalize and
/// autoreduce. Quadratic everything; only suitable for tiny inputs.
fn oracle_reduced_basis(gens: &[QPolynomial], ord: &MonomialOrder) -> Vec<QPolynomial> {
    let mut basis: Vec<QPolynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let ring = basis[0].ring().clone();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.push_back((i, j));
        }
    }
    let mut steps = 0;
    while let Some((i, j)) = queue.pop_front() {
        steps += 1;
        assert!(steps < 20_000, "oracle runaway");
        let s = oracle_spoly(&basis[i], &basis[j], ord);
        let r = oracle_reduce(&s, &basis, ord);
        if !r.is_zero() {
            let t = basis.len();
            for k in 0..t {
                queue.push_back((k, t));
            }
            basis.push(r);
        }
    }
    // minimalize
    let mut minimal: Vec<QPolynomial> = Vec::new();
    for i in 0..basis.len() {
        let lt = basis[i].leading_term(ord).unwrap().exps.clone();
        let dominated = basis.iter().enumerate().any(|(j, other)| {
            if i == j {
                return false;
            }
            let olt = &other.leading_term(ord).unwrap().exps;
            olt.divides(&lt) && (*olt != lt || j < i)
        });
        if !dominated {
            minimal.push(basis[i].clone());
        }
    }
    // autoreduce to fixpoint and normalize
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<QPolynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let reduced = oracle_reduce(&minimal[i], &others, ord);
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut minimal: Vec<QPolynomial> = minimal
        .into_iter()
        .map(|p| p.monic(ord).unwrap())
        .collect();
    minimal.sort_by(|a, b| {
        ord.cmp(
            &a.leading_term(ord).unwrap().exps,
            &b.leading_term(ord).unwrap().exps,
        )
    });
    let _ = ring;
    minimal
}

fn random_poly(rng: &mut StdRng, ring: &QRing, max_terms: usize, max_deg: u32) -> QPolynomial {
    let n = ring.num_vars();
    let terms = (0..rng.gen_range(1..=max_terms)).map(|_| {
        let mut exps = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            exps[rng.gen_range(0..n)] += 1;
        }
        (
            Rationals.from_i64(rng.gen_range(-4i64..=4)),
            ExponentVec::new(exps),
        )
    });
    Polynomial::from_terms(ring, terms.collect::<Vec<_>>()).unwrap()
}

#[test]
fn lex_example_matches_oracle_and_frozen_value() {
    let r = ring2();
    let x = QPolynomial::var(&r, 0).unwrap();
    let y = QPolynomial::var(&r, 1).unwrap();
    let g1 = x.pow(2).unwrap().sub(&y).unwrap();
    let g2 = x.mul(&y).unwrap().sub(&Polynomial::one(&r)).unwrap();
    let ord = MonomialOrder::lex();

    let ideal = Ideal::new(&r, [g1.clone(), g2.clone()]).unwrap();
    let engine = ideal.reduced_groebner_basis(&ord).unwrap();
    let oracle = oracle_reduced_basis(&[g1, g2], &ord);
    assert_eq!(*engine, oracle);

    // frozen: {y^3 - 1, x - y^2} in ascending leading-term order
    let expected = vec![
        y.pow(3).unwrap().sub(&Polynomial::one(&r)).unwrap(),
        x.sub(&y.pow(2).unwrap()).unwrap(),
    ];
    assert_eq!(*engine, expected);
}

#[test]
fn engine_matches_oracle_on_random_ideals() {
    let mut rng = StdRng::seed_from_u64(2024);
    let r = ring2();
    let orders = [MonomialOrder::lex(), MonomialOrder::grevlex()];
    for case in 0..25 {
        let gens: Vec<QPolynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &r, 3, 3))
            .collect();
        let ord = &orders[case % 2];
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let engine = ideal.reduced_groebner_basis(ord).unwrap();
        let oracle = oracle_reduced_basis(&gens, ord);
        assert_eq!(*engine, oracle, "case {case}: gens {gens:?}");
    }
}

#[test]
fn reduced_basis_is_presentation_independent() {
    let mut rng = StdRng::seed_from_u64(7);
    let r = ring2();
    for _ in 0..15 {
        let gens: Vec<QPolynomial> = (0..rng.gen_range(2..=3))
            .map(|_| random_poly(&mut rng, &r, 3, 3))
            .collect();
        let base = Ideal::new(&r, gens.clone())
            .unwrap()
            .reduced_groebner_basis(&MonomialOrder::grevlex())
            .unwrap();
        // permuted
        let mut permuted = gens.clone();
        permuted.reverse();
        // duplicated
        let mut duplicated = gens.clone();
        duplicated.extend(gens.iter().cloned());
        for variant in [permuted, duplicated] {
            let other = Ideal::new(&r, variant)
                .unwrap()
                .reduced_groebner_basis(&MonomialOrder::grevlex())
                .unwrap();
            assert_eq!(*base, *other);
        }
    }
}

#[test]
fn membership_soundness_on_random_combinations() {
    let mut rng = StdRng::seed_from_u64(99);
    let r = ring2();
    for _ in 0..20 {
        let gens: Vec<QPolynomial> = (0..2).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        // f = sum h_i g_i reduces to zero
        let mut f = Polynomial::zero(&r);
        for g in &gens {
            let h = random_poly(&mut rng, &r, 2, 2);
            f = f.add(&h.mul(g).unwrap()).unwrap();
        }
        assert!(ideal.contains(&f).unwrap());
        // f - nf(f) always lies in the ideal
        let probe = random_poly(&mut rng, &r, 3, 3);
        let nf = ideal
            .normal_form(&probe, &MonomialOrder::grevlex())
            .unwrap();
        assert!(ideal.contains(&probe.sub(&nf).unwrap()).unwrap());
    }
}

#[test]
fn normal_form_of_cube_with_cofactor_reconstruction() {
    // x^3 modulo (x^2 - y, x*y - 1) under lex reduces to 1, and division
    // bookkeeping reconstructs the input exactly.
    let r = ring2();
    let x = QPolynomial::var(&r, 0).unwrap();
    let y = QPolynomial::var(&r, 1).unwrap();
    let g1 = x.pow(2).unwrap().sub(&y).unwrap();
    let g2 = x.mul(&y).unwrap().sub(&Polynomial::one(&r)).unwrap();
    let ord = MonomialOrder::lex();
    let ideal = Ideal::new(&r, [g1, g2]).unwrap();

    let f = x.pow(3).unwrap();
    let nf = ideal.normal_form(&f, &ord).unwrap();
    assert_eq!(nf, Polynomial::one(&r));

    let basis = ideal.reduced_groebner_basis(&ord).unwrap();
    let (cofactors, rem) = groebner::divide(&f, &basis, &ord).unwrap();
    assert_eq!(rem, nf);
    let mut recon = rem;
    for (q, b) in cofactors.iter().zip(basis.iter()) {
        recon = recon.add(&q.mul(b).unwrap()).unwrap();
    }
    assert_eq!(recon, f);
}
