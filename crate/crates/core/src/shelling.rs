//! Shelling orders: verification with certificates, exhaustive and
//! first-found search, dual graphs, relabelling and isomorphism.
//!
//! A sequence `C` is a shelling order when for all `i < j` some `z < j`
//! satisfies `|C_z ∩ C_j| = k - 1` and `C_i ∩ C_j ⊆ C_z ∩ C_j`. The checks
//! are written against the [`Facet`] trait so that subsets and flags share one
//! implementation.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::types::{Facet, FacetSequence, FlagTuple, KSubset, LabeledGraph, PureComplex};

/// Largest `n` for which an `S_n` sweep is attempted.
pub const MAX_SWEEP_UNIVERSE: usize = 8;

/// One certificate `(i, j, z)` per pair `i < j` (1-based positions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingWitness {
    pub certificates: Vec<(usize, usize, usize)>,
}

impl ShellingWitness {
    /// Re-checks every certificate against `c`.
    pub fn replay<F: Facet>(&self, c: &FacetSequence<F>) -> bool {
        let k = c.rank();
        let h = c.len();
        self.certificates.len() == h * (h - 1) / 2
            && self.certificates.iter().all(|&(i, j, z)| {
                i < j && z < j && {
                    let (ci, cj, cz) = (c.get(i), c.get(j), c.get(z));
                    cz.common(cj) + 1 == k && ci.meet_within(cj, cz)
                }
            })
    }
}

/// The least failing `j` and the least `i < j` without a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShellingFailure {
    pub i: usize,
    pub j: usize,
}

/// Finds `z < j` certifying the pair `(i, j)`, scanning downwards (0-based).
fn certify<F: Facet>(items: &[F], i: usize, j: usize, k: usize) -> Option<usize> {
    let (ci, cj) = (&items[i], &items[j]);
    (0..j)
        .rev()
        .find(|&z| items[z].common(cj) + 1 == k && ci.meet_within(cj, &items[z]))
}

/// Whether `new` can be appended to the shelling order `prefix`.
pub fn attaches<F: Facet>(prefix: &[F], new: &F) -> bool {
    let k = new.rank();
    let anchors: Vec<&F> = prefix.iter().filter(|z| z.common(new) + 1 == k).collect();
    if prefix.is_empty() {
        return true;
    }
    if anchors.is_empty() {
        return false;
    }
    prefix
        .iter()
        .all(|ci| anchors.iter().any(|z| ci.meet_within(new, z)))
}

/// Full verification returning a certificate for every pair, or the first
/// failure in `(j, i)` order.
pub fn shelling_witness<F: Facet>(
    c: &FacetSequence<F>,
) -> std::result::Result<ShellingWitness, ShellingFailure> {
    let items = c.items();
    let k = c.rank();
    let mut certificates = Vec::with_capacity(items.len() * items.len().saturating_sub(1) / 2);
    for j in 1..items.len() {
        for i in 0..j {
            match certify(items, i, j, k) {
                Some(z) => certificates.push((i + 1, j + 1, z + 1)),
                None => return Err(ShellingFailure { i: i + 1, j: j + 1 }),
            }
        }
    }
    Ok(ShellingWitness { certificates })
}

/// Boolean shelling check on a raw slice of facets.
pub fn is_shelling_slice<F: Facet>(items: &[F]) -> bool {
    (1..items.len()).all(|j| attaches(&items[..j], &items[j]))
}

pub fn is_shelling_order<F: Facet>(c: &FacetSequence<F>) -> bool {
    is_shelling_slice(c.items())
}

struct Search<'a, F> {
    facets: &'a [F],
    used: Vec<bool>,
    order: Vec<usize>,
    dead: HashSet<Vec<bool>>,
}

impl<F: Facet> Search<'_, F> {
    fn prefix(&self) -> Vec<F> {
        self.order.iter().map(|&i| self.facets[i].clone()).collect()
    }

    fn first(&mut self) -> bool {
        if self.order.len() == self.facets.len() {
            return true;
        }
        // whether a facet attaches depends only on the set already placed
        if self.dead.contains(&self.used) {
            return false;
        }
        let prefix = self.prefix();
        for c in 0..self.facets.len() {
            if self.used[c] || !attaches(&prefix, &self.facets[c]) {
                continue;
            }
            self.used[c] = true;
            self.order.push(c);
            if self.first() {
                return true;
            }
            self.order.pop();
            self.used[c] = false;
        }
        self.dead.insert(self.used.clone());
        false
    }

    fn all(&mut self, out: &mut Vec<Vec<usize>>) {
        if self.order.len() == self.facets.len() {
            out.push(self.order.clone());
            return;
        }
        let prefix = self.prefix();
        for c in 0..self.facets.len() {
            if self.used[c] || !attaches(&prefix, &self.facets[c]) {
                continue;
            }
            self.used[c] = true;
            self.order.push(c);
            self.all(out);
            self.order.pop();
            self.used[c] = false;
        }
    }
}

fn search<F: Facet>(facets: &[F]) -> Search<'_, F> {
    Search {
        facets,
        used: vec![false; facets.len()],
        order: Vec::new(),
        dead: HashSet::new(),
    }
}

/// Some shelling order of `x`, trying facets in canonical order and pruning
/// as soon as a placed facet fails to attach.
pub fn find_shelling_order<F: Facet>(x: &PureComplex<F>) -> Option<FacetSequence<F>> {
    let mut s = search(x.facets());
    s.first().then(|| FacetSequence::new_unchecked(s.prefix()))
}

/// Every shelling order of `x`, in lexicographic order of facet positions.
pub fn all_shelling_orders<F: Facet>(x: &PureComplex<F>) -> Vec<FacetSequence<F>> {
    let mut s = search(x.facets());
    let mut out = Vec::new();
    s.all(&mut out);
    out.into_iter()
        .map(|o| {
            FacetSequence::new_unchecked(o.into_iter().map(|i| x.facets()[i].clone()).collect())
        })
        .collect()
}

/// `D(C)`: positions `i, j` are adjacent when `|C_i ∩ C_j| = k - 1`.
pub fn dual_graph<F: Facet>(c: &FacetSequence<F>) -> LabeledGraph {
    let k = c.rank();
    LabeledGraph::from_predicate(c.len(), |a, b| c.get(a).common(c.get(b)) + 1 == k)
}

/// Applies `sigma` to every vertex of every facet and re-sorts each facet.
pub fn relabel(sigma: &FlagTuple, c: &FacetSequence<KSubset>) -> Result<FacetSequence<KSubset>> {
    if !sigma.is_permutation() || sigma.universe() != c.universe() {
        return Err(Error::NotPermutation(sigma.to_string()));
    }
    let items = c
        .items()
        .iter()
        .map(|x| {
            KSubset::from_mask(
                x.universe(),
                x.iter().fold(0u64, |m, v| m | 1 << (sigma.get(v) - 1)),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FacetSequence::new_unchecked(items))
}

/// A permutation `sigma` with `relabel(sigma, a) == b`, if one exists.
pub fn isomorphism(
    a: &FacetSequence<KSubset>,
    b: &FacetSequence<KSubset>,
) -> Result<Option<FlagTuple>> {
    if a.universe() != b.universe() || a.len() != b.len() || a.rank() != b.rank() {
        return Err(Error::ShapeMismatch(format!(
            "sequences {a} and {b} differ in universe, length or facet size"
        )));
    }
    let n = a.universe();
    if n > MAX_SWEEP_UNIVERSE {
        return Err(Error::SweepTooLarge {
            n,
            limit: MAX_SWEEP_UNIVERSE,
        });
    }
    for p in (1..=n).permutations(n) {
        let sigma = FlagTuple::new(n, &p)?;
        if relabel(&sigma, a)? == *b {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

/// Whether some relabelling maps `a` onto `b`, order included.
pub fn are_isomorphic(a: &FacetSequence<KSubset>, b: &FacetSequence<KSubset>) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, ds: &[&str]) -> FacetSequence<KSubset> {
        FacetSequence::new(
            ds.iter()
                .map(|d| KSubset::from_digits(n, d).unwrap())
                .collect(),
        )
        .unwrap()
    }

    const SPHERE: [&str; 11] = [
        "123", "125", "126", "234", "235", "134", "136", "145", "246", "356", "456",
    ];

    #[test]
    fn shelling_examples() {
        let c = seq(4, &["12", "23", "13", "14", "24"]);
        let w = shelling_witness(&c).unwrap();
        assert!(w.replay(&c));
        let b = seq(6, &SPHERE);
        assert!(shelling_witness(&b).unwrap().replay(&b));
        let bad = seq(6, &["235", "246", "234"]);
        assert_eq!(shelling_witness(&bad), Err(ShellingFailure { i: 1, j: 2 }));
        assert!(!is_shelling_order(&bad));
        let one = seq(6, &["235"]);
        assert!(shelling_witness(&one).unwrap().certificates.is_empty());
    }

    #[test]
    fn failure_reports_least_j() {
        // 45 shares no vertex with 12 or 13
        let c = seq(5, &["12", "13", "45", "34"]);
        assert_eq!(shelling_witness(&c), Err(ShellingFailure { i: 1, j: 3 }));
    }

    #[test]
    fn find_examples() {
        let x = PureComplex::new(vec![
            KSubset::from_digits(6, "123").unwrap(),
            KSubset::from_digits(6, "456").unwrap(),
        ])
        .unwrap();
        assert!(find_shelling_order(&x).is_none());
        let b = seq(6, &SPHERE).support();
        let found = find_shelling_order(&b).unwrap();
        assert_eq!(found.support(), b);
        assert!(is_shelling_order(&found));
        let single = seq(6, &["123"]).support();
        assert_eq!(find_shelling_order(&single).unwrap(), seq(6, &["123"]));
    }

    #[test]
    fn all_orders_of_a_path() {
        // 12 - 23 - 34: a path of three edges in the dual graph
        let x = seq(4, &["12", "23", "34"]).support();
        let shown: Vec<String> = all_shelling_orders(&x)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            shown,
            ["(12,23,34)", "(23,12,34)", "(23,34,12)", "(34,23,12)"]
        );
    }

    #[test]
    fn dual_graph_examples() {
        let g = dual_graph(&seq(6, &SPHERE));
        assert_eq!(g.edge_count(), 21);
        for j in 2..=7 {
            assert!(g.has_edge(1, j));
        }
        let g = dual_graph(&seq(6, &["235", "234", "246"]));
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(dual_graph(&seq(6, &["235"])).edge_count(), 0);
    }

    #[test]
    fn relabel_examples() {
        let c = seq(4, &["12", "13"]);
        assert_eq!(relabel(&FlagTuple::identity(4).unwrap(), &c).unwrap(), c);
        let sigma = FlagTuple::from_digits(4, "2134").unwrap();
        assert_eq!(relabel(&sigma, &c).unwrap(), seq(4, &["12", "23"]));
        assert!(relabel(&FlagTuple::from_digits(4, "213").unwrap(), &c).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let a1 = seq(5, &["123", "124", "125"]);
        let a2 = seq(5, &["123", "124", "135"]);
        let a3 = seq(5, &["123", "124", "145"]);
        assert!(!are_isomorphic(&a1, &a2).unwrap());
        assert!(!are_isomorphic(&a2, &a3).unwrap());
        assert!(!are_isomorphic(&a1, &a3).unwrap());
        assert!(are_isomorphic(&a1, &a1).unwrap());
        assert!(are_isomorphic(&seq(5, &["123", "124"]), &seq(5, &["345", "235"])).unwrap());
        assert!(are_isomorphic(&a1, &seq(5, &["123", "124"])).is_err());
        let big = seq(9, &["123"]);
        assert_eq!(
            are_isomorphic(&big, &big),
            Err(Error::SweepTooLarge { n: 9, limit: 8 })
        );
    }
}
