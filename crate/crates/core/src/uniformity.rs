//! Experiment harness for uniform containment bounds: decomposes powers of a
//! permutable regular monomial sequence (or powers of a monomial ideal)
//! across a range of exponents, accumulates the associated primes, and
//! estimates the uniform linear constant. Also measures the per-element
//! uniform constants `(x) ∩ P^(h+C) ⊆ x·P^h` empirically.

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::{MonomialIdeal, MonomialPrime, PrimaryComponent};
use crate::poly::Polynomial;
use crate::regseq::{PowerVector, RegularSequence};
use crate::ring::ExponentVec;

/// Per-`h` minimal constants for `(x) ∩ P^(h+C) ⊆ x·P^h`, and the stabilized
/// value when the tail of the list settles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinReesReport {
    /// Display form of the element `x`.
    pub element: String,
    /// Display form of the prime `P`.
    pub prime: String,
    pub h_max: u32,
    /// Entry `h-1` is the minimal `C` for exponent `h`.
    pub c_per_h: Vec<u32>,
    /// The common tail value when the last `ceil(h_max/2)` entries agree.
    pub stabilized_c: Option<u32>,
}

/// The prime input for the uniform-constant measurement: combinatorial for
/// monomial primes, Groebner-backed for arbitrary prime ideals.
#[derive(Debug, Clone)]
pub enum PrimeInput<F: Field> {
    Monomial(MonomialPrime),
    Ideal(Ideal<F>),
}

/// One decomposed power `(x^n)`: its minimal primary decomposition with
/// containment data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionRow {
    pub powers: PowerVector,
    /// `|n| = n_1 + ... + n_t` (or the power `n` in a power sweep).
    pub total: u32,
    pub components: Vec<PrimaryComponent>,
    /// Max containment exponent over the components.
    pub k_max: u32,
    /// Exact `k_max / total`.
    pub ratio: Ratio<u64>,
}

/// A full sweep: rows in enumeration order, the accumulated prime set, and
/// the empirical linear constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    /// Display forms of the sequence elements (or ideal generators).
    pub subject: Vec<String>,
    pub rows: Vec<DecompositionRow>,
    /// Union of component radicals over all rows, sorted.
    pub lambda: Vec<MonomialPrime>,
    /// Smallest total after which the prime set stops growing in this sweep.
    pub lambda_stable_from: u32,
    /// Ceiling of the maximal ratio: the least integer constant consistent
    /// with every swept row.
    pub c_estimate: u32,
    /// Whether `k_max ≤ c_estimate * total` holds on every row.
    pub bound_holds: bool,
}

/// Decomposes `(x_1^{n_1}, ..., x_t^{n_t})` for a monomial sequence and
/// assembles the row. The decomposition is re-validated before returning:
/// the components must intersect back to the input and be primary.
pub fn decompose_power<F: Field>(
    sequence: &RegularSequence<F>,
    powers: &PowerVector,
) -> Result<DecompositionRow> {
    let ideal = monomial_power_ideal(sequence, powers)?;
    let components = ideal.primary_decomposition()?;
    validate_decomposition(&ideal, &components)?;
    let k_max = components
        .iter()
        .map(|c| c.containment_exponent)
        .max()
        .expect("proper nonzero ideal decomposes into at least one component");
    let total = powers.total();
    Ok(DecompositionRow {
        powers: powers.clone(),
        total,
        k_max,
        ratio: Ratio::new(k_max as u64, total as u64),
        components,
    })
}

/// Decomposes `(x^n)` for every `n` with entries ≥ 1 and `|n| ≤ max_total`,
/// in increasing-total then lexicographic order. Rows are computed by a
/// worker pool and merged back in enumeration order.
pub fn sweep<F: Field>(sequence: &RegularSequence<F>, max_total: u32) -> Result<SweepReport> {
    let t = sequence.len() as u32;
    if max_total < t {
        return Err(Error::InvalidInput(format!(
            "max_total {max_total} is below the sequence length {t}"
        )));
    }
    let vectors: Vec<PowerVector> = (t..=max_total)
        .flat_map(|s| compositions(s, sequence.len()))
        .collect();
    let rows: Result<Vec<DecompositionRow>> = vectors
        .par_iter()
        .map(|n| decompose_power(sequence, n))
        .collect();
    let subject = sequence.elements().iter().map(|x| x.to_string()).collect();
    assemble(subject, rows?)
}

/// Decomposes `I^n` for `n = 1..=n_max`.
pub fn power_sweep(ideal: &MonomialIdeal, n_max: u32) -> Result<SweepReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("power sweep"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("power sweep"));
    }
    if n_max < 1 {
        return Err(Error::InvalidInput("n_max must be at least 1".into()));
    }
    let rows: Result<Vec<DecompositionRow>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let power = ideal.power(n);
            let components = power.primary_decomposition()?;
            validate_decomposition(&power, &components)?;
            let k_max = components
                .iter()
                .map(|c| c.containment_exponent)
                .max()
                .expect("nonempty decomposition");
            Ok(DecompositionRow {
                powers: PowerVector::new(vec![n]).expect("positive"),
                total: n,
                k_max,
                ratio: Ratio::new(k_max as u64, n as u64),
                components,
            })
        })
        .collect();
    let subject = ideal
        .min_gens()
        .iter()
        .map(|g| ideal.vars().format_monomial(g))
        .collect();
    assemble(subject, rows?)
}

/// For each `h ≤ h_max`, the minimal `C ≤ c_cap` with
/// `(x) ∩ P^(h+C) ⊆ x·P^h`. Single-term `x` against a monomial prime runs
/// combinatorially; anything else goes through Groebner bases.
pub fn artin_rees_constant<F: Field>(
    x: &Polynomial<F>,
    prime: &PrimeInput<F>,
    h_max: u32,
    c_cap: u32,
) -> Result<ArtinReesReport> {
    if x.is_zero() {
        return Err(Error::InvalidInput("x must be nonzero".into()));
    }
    if x.is_unit_constant() {
        return Err(Error::InvalidInput("x must be a non-unit".into()));
    }
    if h_max < 1 {
        return Err(Error::InvalidInput("h_max must be at least 1".into()));
    }
    let (prime_display, c_per_h) = match (prime, x.as_monomial()) {
        (PrimeInput::Monomial(p), Some(term)) => {
            (p.to_string(), monomial_constants(&term.exps, p, h_max, c_cap)?)
        }
        (PrimeInput::Monomial(p), None) => {
            let ideal = p.to_monomial_ideal().to_ideal(x.ring())?;
            (p.to_string(), ideal_constants(x, &ideal, h_max, c_cap)?)
        }
        (PrimeInput::Ideal(p), _) => {
            let display = format!(
                "({})",
                p.generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            (display, ideal_constants(x, p, h_max, c_cap)?)
        }
    };
    let stabilized_c = stabilized_tail(&c_per_h);
    Ok(ArtinReesReport {
        element: x.to_string(),
        prime: prime_display,
        h_max,
        c_per_h,
        stabilized_c,
    })
}

fn monomial_constants(
    x: &ExponentVec,
    prime: &MonomialPrime,
    h_max: u32,
    c_cap: u32,
) -> Result<Vec<u32>> {
    let vars = prime.vars().clone();
    let principal = MonomialIdeal::new(&vars, [x.clone()])?;
    let mut out = Vec::with_capacity(h_max as usize);
    for h in 1..=h_max {
        let target = multiply_ideal(x, &prime.power(h));
        let mut found = None;
        for c in 0..=c_cap {
            let lhs = principal.intersect(&prime.power(h + c))?;
            if target.contains_ideal(&lhs)? {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => out.push(c),
            None => return Err(Error::ArtinReesCapExceeded { h, cap: c_cap }),
        }
    }
    Ok(out)
}

/// `x·J` for a monomial `x`: shift every generator.
fn multiply_ideal(x: &ExponentVec, ideal: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::new(
        ideal.vars(),
        ideal.min_gens().iter().map(|g| g.mul(x)),
    )
    .expect("same vars")
}

fn ideal_constants<F: Field>(
    x: &Polynomial<F>,
    prime: &Ideal<F>,
    h_max: u32,
    c_cap: u32,
) -> Result<Vec<u32>> {
    let ring = x.ring();
    let principal = Ideal::principal(x.clone());
    // Powers of P up to h_max + c_cap, computed once.
    let mut powers: Vec<Ideal<F>> = Vec::with_capacity((h_max + c_cap + 1) as usize);
    for m in 0..=(h_max + c_cap) {
        powers.push(prime.power(m)?);
    }
    let mut out = Vec::with_capacity(h_max as usize);
    for h in 1..=h_max {
        let target_gens: Result<Vec<Polynomial<F>>> = powers[h as usize]
            .generators()
            .iter()
            .map(|g| g.mul(x))
            .collect();
        let target = Ideal::new(ring, target_gens?)?;
        let mut found = None;
        for c in 0..=c_cap {
            let lhs = principal.intersect(&powers[(h + c) as usize])?;
            if target.contains_ideal(&lhs)? {
                found = Some(c);
                break;
            }
        }
        match found {
            Some(c) => out.push(c),
            None => return Err(Error::ArtinReesCapExceeded { h, cap: c_cap }),
        }
    }
    Ok(out)
}

/// The tail value when the last `ceil(len/2)` entries coincide.
fn stabilized_tail(c_per_h: &[u32]) -> Option<u32> {
    if c_per_h.is_empty() {
        return None;
    }
    let tail_len = c_per_h.len().div_ceil(2);
    let tail = &c_per_h[c_per_h.len() - tail_len..];
    let first = tail[0];
    tail.iter().all(|&c| c == first).then_some(first)
}

/// Builds the monomial ideal `(x_1^{n_1}, ..., x_t^{n_t})`; rejects
/// non-monomial sequence elements.
pub fn monomial_power_ideal<F: Field>(
    sequence: &RegularSequence<F>,
    powers: &PowerVector,
) -> Result<MonomialIdeal> {
    if !sequence.is_permutable() {
        return Err(Error::InvalidInput(
            "decomposition needs a permutable sequence".into(),
        ));
    }
    if powers.len() != sequence.len() {
        return Err(Error::LengthMismatch {
            expected: sequence.len(),
            got: powers.len(),
        });
    }
    let mut gens = Vec::with_capacity(sequence.len());
    for (i, x) in sequence.elements().iter().enumerate() {
        match x.as_monomial() {
            Some(term) => gens.push(term.exps.pow(powers.get(i))),
            None => return Err(Error::NonMonomialSequence { index: i + 1 }),
        }
    }
    MonomialIdeal::new(sequence.ring().vars(), gens)
}

fn validate_decomposition(
    ideal: &MonomialIdeal,
    components: &[PrimaryComponent],
) -> Result<()> {
    let mut meet = MonomialIdeal::unit(ideal.vars());
    for c in components {
        meet = meet.intersect(&c.component)?;
        if c.component.is_primary()? != Some(c.radical.clone()) {
            return Err(Error::Internal(format!(
                "component {} is not primary with radical {}",
                c.component, c.radical
            )));
        }
        // The recorded shortfall really lies outside the component.
        if c.component.contains(&c.shortfall_witness)? {
            return Err(Error::Internal(format!(
                "shortfall witness of {} is not a witness",
                c.component
            )));
        }
    }
    if meet != *ideal {
        return Err(Error::Internal(format!(
            "components intersect to {meet}, expected {ideal}"
        )));
    }
    Ok(())
}

fn assemble(subject: Vec<String>, rows: Vec<DecompositionRow>) -> Result<SweepReport> {
    let mut lambda: Vec<MonomialPrime> = Vec::new();
    for row in &rows {
        for c in &row.components {
            if !lambda.contains(&c.radical) {
                lambda.push(c.radical.clone());
            }
        }
    }
    lambda.sort();
    // Smallest total whose prefix already carries the full prime set.
    let mut lambda_stable_from = rows.last().map(|r| r.total).unwrap_or(0);
    'outer: for candidate in rows.iter().map(|r| r.total) {
        let mut seen: Vec<&MonomialPrime> = Vec::new();
        for row in rows.iter().filter(|r| r.total <= candidate) {
            for c in &row.components {
                if !seen.contains(&&c.radical) {
                    seen.push(&c.radical);
                }
            }
        }
        if seen.len() == lambda.len() {
            lambda_stable_from = candidate;
            break 'outer;
        }
    }
    let max_ratio = rows
        .iter()
        .map(|r| r.ratio)
        .max()
        .ok_or_else(|| Error::InvalidInput("empty sweep".into()))?;
    let c_estimate = max_ratio.ceil().to_integer() as u32;
    let bound_holds = rows
        .iter()
        .all(|r| r.k_max as u64 <= c_estimate as u64 * r.total as u64);
    Ok(SweepReport {
        subject,
        rows,
        lambda,
        lambda_stable_from,
        c_estimate,
        bound_holds,
    })
}

/// All positive compositions of `total` into `parts` entries, lexicographic.
pub fn compositions(total: u32, parts: usize) -> Vec<PowerVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fill_compositions(&mut out, &mut current, 0, total);
    out
}

fn fill_compositions(out: &mut Vec<PowerVector>, current: &mut Vec<u32>, pos: usize, left: u32) {
    let parts = current.len();
    if pos + 1 == parts {
        if left >= 1 {
            current[pos] = left;
            out.push(PowerVector::new(current.clone()).expect("positive entries"));
        }
        return;
    }
    let reserve = (parts - pos - 1) as u32;
    for v in 1..=left.saturating_sub(reserve) {
        current[pos] = v;
        fill_compositions(out, current, pos + 1, left - v);
    }
}
