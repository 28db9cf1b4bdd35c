//! Value types shared by every module: subsets and tuples of `[n]`, pure
//! complexes, facet sequences and labelled graphs.
//!
//! Vertices are 1-based. Universes are capped at 64 so that a subset fits in
//! one machine word.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Largest supported universe size `n`.
pub const MAX_UNIVERSE: usize = 64;

fn check_universe(n: usize) -> Result<()> {
    if n == 0 || n > MAX_UNIVERSE {
        return Err(Error::UniverseSize(n));
    }
    Ok(())
}

fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Writes members as concatenated digits when all are single-digit, and as a
/// comma list otherwise.
fn write_members(
    f: &mut fmt::Formatter<'_>,
    members: impl Iterator<Item = usize> + Clone,
) -> fmt::Result {
    if members.clone().all(|v| v <= 9) {
        for v in members {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = members.map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A subset of `[n]`, stored as a bitmask. Iteration yields members in
/// increasing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KSubset {
    n: u8,
    bits: u64,
}

impl KSubset {
    /// Builds a nonempty subset. Members may be given in any order.
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        check_universe(n)?;
        if members.is_empty() {
            return Err(Error::EmptyMembers);
        }
        let mut bits = 0u64;
        for &v in members {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if bits & bit(v) != 0 {
                return Err(Error::RepeatedVertex(v));
            }
            bits |= bit(v);
        }
        Ok(Self { n: n as u8, bits })
    }

    /// The distinguished empty subset, the single element of `[n]^0`.
    pub fn empty(n: usize) -> Result<Self> {
        check_universe(n)?;
        Ok(Self {
            n: n as u8,
            bits: 0,
        })
    }

    /// Builds a subset from its bitmask (bit `v - 1` marks vertex `v`).
    pub fn from_mask(n: usize, bits: u64) -> Result<Self> {
        check_universe(n)?;
        if bits & !full_mask(n) != 0 {
            let vertex = 64 - bits.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Self { n: n as u8, bits })
    }

    /// Parses compact digit strings such as `"135"`.
    pub fn from_digits(n: usize, digits: &str) -> Result<Self> {
        Self::new(n, &parse_digits(digits)?)
    }

    /// All of `[n]`.
    pub fn full(n: usize) -> Result<Self> {
        check_universe(n)?;
        Ok(Self {
            n: n as u8,
            bits: full_mask(n),
        })
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.universe() && self.bits & bit(v) != 0
    }

    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The members of `[n]` outside this subset, increasing.
    pub fn complement(&self) -> Members {
        Members(!self.bits & full_mask(self.universe()))
    }

    pub fn max_member(&self) -> Option<usize> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros() as usize)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    /// `self + {drop, add}`: removes `drop` and inserts `add`.
    pub fn symmetric_difference_update(&self, drop: usize, add: usize) -> Result<Self> {
        if !self.contains(drop) {
            return Err(Error::NotMember(drop, self.to_string()));
        }
        if add == 0 || add > self.universe() {
            return Err(Error::VertexOutOfRange {
                vertex: add,
                n: self.universe(),
            });
        }
        if self.contains(add) {
            return Err(Error::AlreadyMember(add, self.to_string()));
        }
        Ok(Self {
            n: self.n,
            bits: (self.bits & !bit(drop)) | bit(add),
        })
    }

    /// Every `k`-subset of `[n]`, in lexicographic order.
    pub fn all(n: usize, k: usize) -> Result<Vec<Self>> {
        check_universe(n)?;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                lo: 1,
                hi: n,
            });
        }
        let mut out: Vec<Self> = itertools::Itertools::combinations(1..=n, k)
            .map(|c| Self::new(n, &c).expect("valid combination"))
            .collect();
        out.sort();
        Ok(out)
    }
}

/// Increasing iterator over the members of a bitmask.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

impl Ord for KSubset {
    /// Lexicographic order of the increasing member lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write_members(f, self.iter())
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

fn parse_digits(digits: &str) -> Result<Vec<usize>> {
    digits
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::ShapeMismatch(format!("'{c}' is not a digit")))
        })
        .collect()
}

/// A tuple of distinct values of `[n]`: an element of `Conf_k([n])`. With
/// `k = n` it is a permutation in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagTuple {
    entries: Vec<u8>,
    n: u8,
}

impl FlagTuple {
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        check_universe(n)?;
        if entries.is_empty() {
            return Err(Error::EmptyMembers);
        }
        let mut seen = 0u64;
        for &v in entries {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen & bit(v) != 0 {
                return Err(Error::RepeatedVertex(v));
            }
            seen |= bit(v);
        }
        Ok(Self {
            entries: entries.iter().map(|&v| v as u8).collect(),
            n: n as u8,
        })
    }

    pub fn from_digits(n: usize, digits: &str) -> Result<Self> {
        Self::new(n, &parse_digits(digits)?)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, &(1..=n).collect::<Vec<_>>())
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_permutation(&self) -> bool {
        self.entries.len() == self.universe()
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    pub fn entries(&self) -> Vec<usize> {
        self.entries.iter().map(|&v| v as usize).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + Clone + '_ {
        self.entries.iter().map(|&v| v as usize)
    }

    /// The entries as a set.
    pub fn support(&self) -> KSubset {
        KSubset {
            n: self.n,
            bits: self.iter().fold(0, |acc, v| acc | bit(v)),
        }
    }

    /// The members of the tuple in increasing order.
    pub fn sort_to_ksubset(&self) -> KSubset {
        self.support()
    }

    /// Bitmasks of the prefixes of length `1..=k`.
    pub fn prefix_masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.iter().scan(0u64, |acc, v| {
            *acc |= bit(v);
            Some(*acc)
        })
    }

    /// Applies the permutation `w` to every entry: `(w(x_1), ..., w(x_k))`.
    pub fn apply(&self, w: &FlagTuple) -> Result<Self> {
        if !w.is_permutation() || w.universe() != self.universe() {
            return Err(Error::NotPermutation(w.to_string()));
        }
        Ok(Self {
            entries: self
                .entries
                .iter()
                .map(|&v| w.entries[v as usize - 1])
                .collect(),
            n: self.n,
        })
    }

    pub fn reversed(&self) -> Self {
        Self {
            entries: self.entries.iter().rev().copied().collect(),
            n: self.n,
        }
    }

    /// Every element of `Conf_k([n])`, in lexicographic order.
    pub fn all(n: usize, k: usize) -> Result<Vec<Self>> {
        check_universe(n)?;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                index: k,
                lo: 1,
                hi: n,
            });
        }
        Ok(itertools::Itertools::permutations(1..=n, k)
            .map(|p| Self::new(n, &p).expect("valid arrangement"))
            .collect())
    }

    /// Every permutation of `[n]`, in lexicographic order.
    pub fn permutations(n: usize) -> Result<Vec<Self>> {
        Self::all(n, n)
    }
}

impl fmt::Display for FlagTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_members(f, self.iter())
    }
}

impl fmt::Debug for FlagTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Something that can be a facet of a pure complex: a finite vertex set
/// compared by intersection.
pub trait Facet: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    /// Number of vertices.
    fn rank(&self) -> usize;

    /// Size of the ground set `[n]` the facet lives over.
    fn universe(&self) -> usize;

    /// `|self ∩ other|`.
    fn common(&self, other: &Self) -> usize;

    /// Whether `self ∩ j ⊆ z ∩ j`.
    fn meet_within(&self, j: &Self, z: &Self) -> bool;
}

impl Facet for KSubset {
    fn rank(&self) -> usize {
        self.len()
    }

    fn universe(&self) -> usize {
        self.universe()
    }

    fn common(&self, other: &Self) -> usize {
        self.intersection_len(other)
    }

    fn meet_within(&self, j: &Self, z: &Self) -> bool {
        self.bits & j.bits & !z.bits == 0
    }
}

/// A tuple `y` is read as the flag `{P^(1)(y), ..., P^(k)(y)}` of its sorted
/// prefixes; two such flags share exactly the levels where the prefix sets
/// agree.
impl Facet for FlagTuple {
    fn rank(&self) -> usize {
        self.len()
    }

    fn universe(&self) -> usize {
        self.universe()
    }

    fn common(&self, other: &Self) -> usize {
        self.prefix_masks()
            .zip(other.prefix_masks())
            .filter(|(a, b)| a == b)
            .count()
    }

    fn meet_within(&self, j: &Self, z: &Self) -> bool {
        self.prefix_masks()
            .zip(j.prefix_masks())
            .zip(z.prefix_masks())
            .all(|((i, j), z)| i != j || z == j)
    }
}

fn check_facets<F: Facet>(facets: &[F]) -> Result<()> {
    let Some(first) = facets.first() else {
        return Err(Error::EmptyComplex);
    };
    let mut seen = HashSet::with_capacity(facets.len());
    for f in facets {
        if f.rank() != first.rank() {
            return Err(Error::RaggedFacets {
                facet: f.to_string(),
                expected: first.rank(),
                found: f.rank(),
            });
        }
        if f.universe() != first.universe() {
            return Err(Error::ShapeMismatch(format!(
                "facet {f} lives over [{}], expected [{}]",
                f.universe(),
                first.universe()
            )));
        }
        if !seen.insert(f) {
            return Err(Error::DuplicateFacet(f.to_string()));
        }
    }
    Ok(())
}

/// A pure complex identified with its set of facets, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PureComplex<F> {
    facets: Vec<F>,
}

impl<F: Facet> PureComplex<F> {
    /// Rejects empty input, duplicate facets and facets of unequal size.
    pub fn new(facets: Vec<F>) -> Result<Self> {
        check_facets(&facets)?;
        let mut facets = facets;
        facets.sort();
        Ok(Self { facets })
    }

    /// Collapses duplicates instead of rejecting them.
    pub fn from_iter_dedup(facets: impl IntoIterator<Item = F>) -> Result<Self> {
        let mut facets: Vec<F> = facets.into_iter().collect();
        facets.sort();
        facets.dedup();
        Self::new(facets)
    }

    pub fn facets(&self) -> &[F] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facet size `k` (the dimension is `k - 1`).
    pub fn rank(&self) -> usize {
        self.facets[0].rank()
    }

    pub fn universe(&self) -> usize {
        self.facets[0].universe()
    }

    pub fn contains(&self, f: &F) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    pub fn into_facets(self) -> Vec<F> {
        self.facets
    }

    /// The facets in canonical order as a sequence.
    pub fn to_sequence(&self) -> FacetSequence<F> {
        FacetSequence {
            items: self.facets.clone(),
        }
    }
}

impl<F: Facet> fmt::Display for PureComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An ordered, duplicate-free, nonempty tuple of equal-size facets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FacetSequence<F> {
    items: Vec<F>,
}

impl<F: Facet> FacetSequence<F> {
    pub fn new(items: Vec<F>) -> Result<Self> {
        check_facets(&items)?;
        Ok(Self { items })
    }

    pub(crate) fn new_unchecked(items: Vec<F>) -> Self {
        Self { items }
    }

    pub fn items(&self) -> &[F] {
        &self.items
    }

    pub fn into_items(self) -> Vec<F> {
        self.items
    }

    /// `N(C)`.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.items[0].rank()
    }

    pub fn universe(&self) -> usize {
        self.items[0].universe()
    }

    /// Facet at 1-based position `i`.
    pub fn get(&self, i: usize) -> &F {
        &self.items[i - 1]
    }

    /// The first `r` facets.
    pub fn prefix(&self, r: usize) -> Result<Self> {
        if r == 0 || r > self.len() {
            return Err(Error::IndexOutOfRange {
                index: r,
                lo: 1,
                hi: self.len(),
            });
        }
        Ok(Self {
            items: self.items[..r].to_vec(),
        })
    }

    /// The complex of facets appearing in the sequence.
    pub fn support(&self) -> PureComplex<F> {
        let mut facets = self.items.clone();
        facets.sort();
        PureComplex { facets }
    }

    pub fn map<G: Facet>(&self, f: impl FnMut(&F) -> G) -> Result<FacetSequence<G>> {
        FacetSequence::new(self.items.iter().map(f).collect())
    }
}

impl<F: Facet> fmt::Display for FacetSequence<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.items.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A simple undirected graph on the vertex set `[h]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledGraph {
    // adj[v - 1] holds the neighbours of v, increasing.
    adj: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); order];
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > order {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v} outside [1, {order}]"
                    )));
                }
            }
            if adj[a - 1].contains(&b) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a},{b}}}")));
            }
            adj[a - 1].push(b);
            adj[b - 1].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj })
    }

    pub fn edgeless(order: usize) -> Result<Self> {
        Self::new(order, [])
    }

    pub(crate) fn from_predicate(
        order: usize,
        mut adjacent: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let mut adj = vec![Vec::new(); order];
        for a in 1..=order {
            for b in a + 1..=order {
                if adjacent(a, b) {
                    adj[a - 1].push(b);
                    adj[b - 1].push(a);
                }
            }
        }
        Self { adj }
    }

    /// Number of vertices `h`.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.order() && self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, list)| {
                list.iter()
                    .filter(move |&&j| j > i + 1)
                    .map(move |&j| (i + 1, j))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.order() == other.order() && self.edges().into_iter().all(|(a, b)| other.has_edge(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sort_to_ksubset_examples() {
        let w = FlagTuple::from_digits(7, "4317625").unwrap();
        assert_eq!(w.sort_to_ksubset(), KSubset::full(7).unwrap());
        let x = FlagTuple::from_digits(4, "13").unwrap();
        assert_eq!(x.sort_to_ksubset(), KSubset::from_digits(4, "13").unwrap());
        let x = FlagTuple::from_digits(4, "142").unwrap();
        assert_eq!(x.sort_to_ksubset().members(), vec![1, 2, 4]);
    }

    #[test]
    fn symmetric_difference_examples() {
        let x = KSubset::from_digits(4, "13").unwrap();
        assert_eq!(
            x.symmetric_difference_update(3, 2).unwrap().to_string(),
            "12"
        );
        assert_eq!(
            x.symmetric_difference_update(1, 4).unwrap().to_string(),
            "34"
        );
        let y = KSubset::from_digits(4, "24").unwrap();
        assert!(matches!(
            y.symmetric_difference_update(2, 2),
            Err(Error::AlreadyMember(2, _))
        ));
        assert!(matches!(
            y.symmetric_difference_update(1, 3),
            Err(Error::NotMember(1, _))
        ));
    }

    #[test]
    fn rejects_bad_members() {
        assert_eq!(
            KSubset::new(3, &[4]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(KSubset::new(3, &[2, 2]), Err(Error::RepeatedVertex(2)));
        assert_eq!(KSubset::new(3, &[]), Err(Error::EmptyMembers));
        assert_eq!(KSubset::new(65, &[1]), Err(Error::UniverseSize(65)));
        assert_eq!(FlagTuple::new(3, &[1, 1]), Err(Error::RepeatedVertex(1)));
        assert!(KSubset::from_mask(3, 0b1000).is_err());
        assert!(KSubset::new(64, &[64, 1]).is_ok());
    }

    #[test]
    fn lexicographic_order() {
        let mut v: Vec<KSubset> = ["24", "13", "123", "2", "14"]
            .iter()
            .map(|d| KSubset::from_digits(4, d).unwrap())
            .collect();
        v.sort();
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["123", "13", "14", "2", "24"]);
        assert_eq!(KSubset::all(4, 2).unwrap().len(), 6);
        assert_eq!(FlagTuple::all(4, 2).unwrap().len(), 12);
    }

    #[test]
    fn flag_tuple_intersections() {
        let a = FlagTuple::from_digits(4, "142").unwrap();
        let b = FlagTuple::from_digits(4, "143").unwrap();
        assert_eq!(a.common(&b), 2);
        let c = FlagTuple::from_digits(4, "214").unwrap();
        assert_eq!(a.common(&c), 1);
    }

    #[test]
    fn complex_validation() {
        let a = KSubset::from_digits(4, "12").unwrap();
        let b = KSubset::from_digits(4, "123").unwrap();
        assert!(matches!(
            PureComplex::new(vec![a, b]),
            Err(Error::RaggedFacets { .. })
        ));
        assert!(matches!(
            PureComplex::new(vec![a, a]),
            Err(Error::DuplicateFacet(_))
        ));
        assert_eq!(
            PureComplex::<KSubset>::new(vec![]),
            Err(Error::EmptyComplex)
        );
        assert!(matches!(
            FacetSequence::new(vec![a, a]),
            Err(Error::DuplicateFacet(_))
        ));
    }

    #[test]
    fn graph_validation() {
        assert!(LabeledGraph::new(3, [(1, 1)]).is_err());
        assert!(LabeledGraph::new(3, [(1, 4)]).is_err());
        assert!(LabeledGraph::new(3, [(1, 2), (2, 1)]).is_err());
        let g = LabeledGraph::new(3, [(2, 3), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(g.neighbors(2), &[1, 3]);
    }
}
