//! Regular-sequence validation: regularity, permutability under every
//! ordering, and the colon identity on powers that the decomposition
//! experiments rely on.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::{MonomialOrder, PolyRing};

/// Default cap on the sequence length for the factorial permutation test.
pub const DEFAULT_PERMUTATION_BOUND: usize = 6;

/// Outcome of a regularity check. Indices and permutations are 1-based, as
/// they appear in reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityVerdict<F: Field> {
    Regular,
    /// The generated ideal is the whole ring.
    NotProper,
    /// `witness * x_index` lies in the prefix ideal but `witness` does not.
    NotRegularAt {
        index: usize,
        witness: Polynomial<F>,
    },
}

impl<F: Field> RegularityVerdict<F> {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularityVerdict::Regular)
    }
}

/// Outcome of the all-permutations test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermutabilityVerdict<F: Field> {
    Permutable,
    /// The generated ideal is the whole ring; no ordering can be regular.
    NotProper,
    /// `permutation` lists 1-based positions of the original elements in the
    /// failing order; `index`/`witness` localize the failure within it.
    NotPermutable {
        permutation: Vec<usize>,
        index: usize,
        witness: Polynomial<F>,
    },
}

impl<F: Field> PermutabilityVerdict<F> {
    pub fn is_permutable(&self) -> bool {
        matches!(self, PermutabilityVerdict::Permutable)
    }
}

/// A validated permutable regular sequence.
#[derive(Debug, Clone)]
pub struct RegularSequence<F: Field> {
    ring: Arc<PolyRing<F>>,
    elements: Vec<Polynomial<F>>,
    permutable: bool,
}

impl<F: Field> RegularSequence<F> {
    /// Validates regularity of every permutation (up to `bound` elements)
    /// and returns the sequence; failures carry the offending witness.
    pub fn new(
        ring: &Arc<PolyRing<F>>,
        elements: Vec<Polynomial<F>>,
        bound: usize,
    ) -> Result<Self> {
        match is_permutable_regular_sequence(ring, &elements, bound)? {
            PermutabilityVerdict::Permutable => Ok(RegularSequence {
                ring: ring.clone(),
                elements,
                permutable: true,
            }),
            PermutabilityVerdict::NotProper => Err(Error::InvalidInput(
                "the sequence generates the unit ideal".into(),
            )),
            PermutabilityVerdict::NotPermutable {
                permutation,
                index,
                witness,
            } => {
                if permutation.iter().enumerate().all(|(i, &p)| p == i + 1) {
                    Err(Error::NotRegular {
                        index,
                        witness: witness.to_string(),
                    })
                } else {
                    Err(Error::NotPermutable {
                        permutation: format!(
                            "({})",
                            permutation
                                .iter()
                                .map(|p| p.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ),
                        index,
                        witness: witness.to_string(),
                    })
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_permutable(&self) -> bool {
        self.permutable
    }

    /// The ideal `(x_1^{n_1}, ..., x_t^{n_t})`.
    pub fn power_ideal(&self, powers: &PowerVector) -> Result<Ideal<F>> {
        if powers.len() != self.elements.len() {
            return Err(Error::LengthMismatch {
                expected: self.elements.len(),
                got: powers.len(),
            });
        }
        let gens: Result<Vec<Polynomial<F>>> = self
            .elements
            .iter()
            .zip(powers.entries())
            .map(|(x, &n)| x.pow(n))
            .collect();
        Ideal::new(&self.ring, gens?)
    }
}

/// A vector of strictly positive exponents, one per sequence element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerVector(Vec<u32>);

impl PowerVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("empty power vector".into()));
        }
        if entries.iter().any(|&n| n == 0) {
            return Err(Error::InvalidInput(
                "power vector entries must be at least 1".into(),
            ));
        }
        Ok(PowerVector(entries))
    }

    pub fn ones(len: usize) -> Self {
        PowerVector(vec![1; len])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|n| = n_1 + ... + n_t`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `n + e_i` for a 0-based `i`.
    pub fn plus_unit(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        PowerVector(v)
    }
}

impl std::fmt::Display for PowerVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Checks that `(x_1, ..., x_t)` is proper and each `x_i` is a nonzerodivisor
/// modulo its predecessors, i.e. `((x_1..x_{i-1}) : x_i) = (x_1..x_{i-1})`.
pub fn is_regular_sequence<F: Field>(
    ring: &Arc<PolyRing<F>>,
    elements: &[Polynomial<F>],
) -> Result<RegularityVerdict<F>> {
    check_elements(ring, elements)?;
    let full = Ideal::new(ring, elements.iter().cloned())?;
    if full.is_unit_ideal()? {
        return Ok(RegularityVerdict::NotProper);
    }
    for i in 0..elements.len() {
        if let Some(witness) = regularity_failure(ring, &elements[..i], &elements[i])? {
            return Ok(RegularityVerdict::NotRegularAt {
                index: i + 1,
                witness,
            });
        }
    }
    Ok(RegularityVerdict::Regular)
}

/// Runs the regularity check for every permutation of the sequence, in
/// lexicographic order, reporting the first failure. Colon checks are
/// memoized on (prefix set, element), which permutations share freely.
pub fn is_permutable_regular_sequence<F: Field>(
    ring: &Arc<PolyRing<F>>,
    elements: &[Polynomial<F>],
    bound: usize,
) -> Result<PermutabilityVerdict<F>> {
    check_elements(ring, elements)?;
    let t = elements.len();
    if t > bound {
        return Err(Error::PermutationBoundExceeded { len: t, bound });
    }
    let full = Ideal::new(ring, elements.iter().cloned())?;
    if full.is_unit_ideal()? {
        return Ok(PermutabilityVerdict::NotProper);
    }
    let mut memo: HashMap<(BTreeSet<usize>, usize), Option<Polynomial<F>>> = HashMap::new();
    let mut order: Vec<usize> = (0..t).collect();
    loop {
        for pos in 0..t {
            let prefix: BTreeSet<usize> = order[..pos].iter().copied().collect();
            let elem = order[pos];
            let failure = match memo.entry((prefix.clone(), elem)) {
                std::collections::hash_map::Entry::Occupied(e) => e.get().clone(),
                std::collections::hash_map::Entry::Vacant(slot) => {
                    let prefix_polys: Vec<Polynomial<F>> =
                        prefix.iter().map(|&k| elements[k].clone()).collect();
                    let result = regularity_failure(ring, &prefix_polys, &elements[elem])?;
                    slot.insert(result.clone());
                    result
                }
            };
            if let Some(witness) = failure {
                return Ok(PermutabilityVerdict::NotPermutable {
                    permutation: order.iter().map(|&k| k + 1).collect(),
                    index: pos + 1,
                    witness,
                });
            }
        }
        if !next_permutation(&mut order) {
            return Ok(PermutabilityVerdict::Permutable);
        }
    }
}

/// The colon identity `((x^{n+e_i}) : x_i) = (x^n)`, checked by Groebner
/// bases. `index` is 1-based.
pub fn colon_identity_check<F: Field>(
    sequence: &RegularSequence<F>,
    powers: &PowerVector,
    index: usize,
) -> Result<bool> {
    if index == 0 || index > sequence.len() {
        return Err(Error::InvalidInput(format!(
            "index {index} out of range 1..={}",
            sequence.len()
        )));
    }
    let bumped = sequence.power_ideal(&powers.plus_unit(index - 1))?;
    let colon = bumped.colon_poly(&sequence.elements()[index - 1])?;
    colon.equal(&sequence.power_ideal(powers)?)
}

fn check_elements<F: Field>(
    ring: &Arc<PolyRing<F>>,
    elements: &[Polynomial<F>],
) -> Result<()> {
    if elements.is_empty() {
        return Err(Error::InvalidInput("empty sequence".into()));
    }
    for x in elements {
        if !PolyRing::same_ring(ring, x.ring()) {
            return Err(Error::RingMismatch(format!("{} vs {}", ring, x.ring())));
        }
    }
    Ok(())
}

/// `None` when `x` is a nonzerodivisor modulo `(prefix)`, otherwise a witness
/// `w` with `w*x` in the prefix ideal but `w` outside it. The witness is the
/// first reduced-basis element of the colon not reducing to zero.
fn regularity_failure<F: Field>(
    ring: &Arc<PolyRing<F>>,
    prefix: &[Polynomial<F>],
    x: &Polynomial<F>,
) -> Result<Option<Polynomial<F>>> {
    let base = Ideal::new(ring, prefix.iter().cloned())?;
    if x.is_zero() {
        // Zero annihilates everything; 1 witnesses unless the prefix is unit.
        return Ok(Some(Polynomial::one(ring)));
    }
    let colon = base.colon_poly(x)?;
    let basis = colon.reduced_groebner_basis(&MonomialOrder::grevlex())?;
    for g in basis.iter() {
        if !base.contains(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(order: &mut [usize]) -> bool {
    let n = order.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && order[i - 1] >= order[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while order[j] <= order[i - 1] {
        j -= 1;
    }
    order.swap(i - 1, j);
    order[i..].reverse();
    true
}
