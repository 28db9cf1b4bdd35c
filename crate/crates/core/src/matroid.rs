//! Matroid axioms on `[n]^k_<` (exchange and quasi-exchange), the maximality
//! test for Coxeter matroids, shifts and underlying flag matroids.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::bruhat::{prefix_projection, unique_maximum, BruhatElement, OrderKind};
use crate::error::{Error, Result};
use crate::shelling::MAX_SWEEP_UNIVERSE;
use crate::types::{FlagTuple, KSubset, PureComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Exchange,
    QuasiExchange,
}

/// Counterexample to an exchange axiom: `element ∈ a ∖ b` has no partner in
/// `b ∖ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub axiom: Axiom,
    pub a: KSubset,
    pub b: KSubset,
    pub element: usize,
}

impl ExchangeWitness {
    /// Whether the witness really violates its axiom in `x`.
    pub fn replay(&self, x: &PureComplex<KSubset>) -> bool {
        let members: HashSet<u64> = x.facets().iter().map(KSubset::mask).collect();
        if !x.contains(&self.a) || !x.contains(&self.b) {
            return false;
        }
        if !self.a.contains(self.element) || self.b.contains(self.element) {
            return false;
        }
        let others = self.b.difference(&self.a);
        if self.axiom == Axiom::QuasiExchange
            && others.max_member().is_some_and(|m| self.element < m)
        {
            return false;
        }
        !has_partner(&members, &self.a, self.element, &others)
    }
}

impl fmt::Display for ExchangeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={} a={}", self.a, self.b, self.element)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidVerdict {
    pub holds: bool,
    pub witness: Option<ExchangeWitness>,
}

impl MatroidVerdict {
    fn holds() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn fails(witness: ExchangeWitness) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}

fn has_partner(members: &HashSet<u64>, a: &KSubset, element: usize, candidates: &KSubset) -> bool {
    candidates
        .iter()
        .any(|b| members.contains(&(a.mask() & !(1 << (element - 1)) | 1 << (b - 1))))
}

fn check_exchange(x: &PureComplex<KSubset>, axiom: Axiom) -> MatroidVerdict {
    let members: HashSet<u64> = x.facets().iter().map(KSubset::mask).collect();
    for a in x.facets() {
        for b in x.facets() {
            let others = b.difference(a);
            let threshold = match axiom {
                Axiom::Exchange => 0,
                Axiom::QuasiExchange => others.max_member().unwrap_or(0),
            };
            for element in a.difference(b).iter().filter(|&e| e > threshold) {
                if !has_partner(&members, a, element, &others) {
                    return MatroidVerdict::fails(ExchangeWitness {
                        axiom,
                        a: *a,
                        b: *b,
                        element,
                    });
                }
            }
        }
    }
    MatroidVerdict::holds()
}

/// Basis exchange: for all `A, B ∈ X` and `a ∈ A ∖ B` some `b ∈ B ∖ A` has
/// `A + {a, b} ∈ X`.
pub fn is_matroid(x: &PureComplex<KSubset>) -> MatroidVerdict {
    check_exchange(x, Axiom::Exchange)
}

/// Exchange required only for `i ∈ x ∖ y` exceeding `max(y ∖ x)`.
pub fn has_quasi_exchange(x: &PureComplex<KSubset>) -> MatroidVerdict {
    check_exchange(x, Axiom::QuasiExchange)
}

/// A permutation `w` whose image `{P^J(w x)}` of `y` has no unique maximum,
/// or `None` when `y` is a Coxeter matroid.
pub fn coxeter_violation<T: BruhatElement>(
    y: &PureComplex<T>,
    kind: OrderKind,
) -> Result<Option<FlagTuple>> {
    let n = y.universe();
    if n > MAX_SWEEP_UNIVERSE {
        return Err(Error::SweepTooLarge {
            n,
            limit: MAX_SWEEP_UNIVERSE,
        });
    }
    for p in (1..=n).permutations(n) {
        let w = FlagTuple::new(n, &p)?;
        let image = y
            .facets()
            .iter()
            .map(|x| x.act(&w))
            .collect::<Result<Vec<_>>>()?;
        if unique_maximum(&image, kind)?.is_none() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Maximality property over all of `S_n`. Subsets use the Gale quotient,
/// tuples of length `k` the quotient `Conf_k([n])`.
pub fn is_coxeter_matroid<T: BruhatElement>(y: &PureComplex<T>, kind: OrderKind) -> Result<bool> {
    Ok(coxeter_violation(y, kind)?.is_none())
}

/// The permutation whose first `k` entries are the members of `x` and whose
/// tail is the complement, both increasing.
pub fn completion(x: &KSubset) -> FlagTuple {
    let entries: Vec<usize> = x.iter().chain(x.complement()).collect();
    FlagTuple::new(x.universe(), &entries).expect("a subset and its complement form a permutation")
}

/// `{P^(i)(y) : y ∈ Y}` for tuples of length at least `i`.
pub fn shift_tuples(y: &PureComplex<FlagTuple>, i: usize) -> Result<PureComplex<KSubset>> {
    PureComplex::from_iter_dedup(
        y.facets()
            .iter()
            .map(|t| prefix_projection(t, i))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Shift of a subset complex to `[n]^i_<`, reading each facet as its
/// completion to a permutation; `1 ≤ i ≤ n`.
pub fn shift(m: &PureComplex<KSubset>, i: usize) -> Result<PureComplex<KSubset>> {
    let n = m.universe();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n,
        });
    }
    PureComplex::from_iter_dedup(
        m.facets()
            .iter()
            .map(|x| prefix_projection(&completion(x), i))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Shift through the whole underlying flag matroid: `{P^(i)(w)}` over every
/// `w` whose first `k` entries form a basis. Unlike [`shift`], which reads
/// each basis as one permutation, this always yields a matroid (the
/// truncation for `i < k`, the sets containing a basis for `i > k`).
pub fn coset_shift(m: &PureComplex<KSubset>, i: usize) -> Result<PureComplex<KSubset>> {
    let n = m.universe();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n,
        });
    }
    let flags = underlying_flag_matroid(m)?;
    PureComplex::from_iter_dedup(
        flags
            .iter()
            .map(|w| prefix_projection(w, i))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Union of the cosets `x (S_n)_{S ∖ {s_k}}` over `x ∈ M`: every
/// permutation whose first `k` entries form a basis.
pub fn underlying_flag_matroid(m: &PureComplex<KSubset>) -> Result<BTreeSet<FlagTuple>> {
    let n = m.universe();
    let k = m.rank();
    let mut out = BTreeSet::new();
    for x in m.facets() {
        let head = x.members();
        let tail: Vec<usize> = x.complement().collect();
        for h in head.iter().copied().permutations(k) {
            for t in tail.iter().copied().permutations(n - k) {
                out.insert(FlagTuple::new(n, &[h.as_slice(), t.as_slice()].concat())?);
            }
        }
    }
    Ok(out)
}
