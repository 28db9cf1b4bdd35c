//! Promotion and evacuation of labelled sequences driven by a graph on the
//! positions: the dual graph (facets sharing `k - 1` vertices) or the Hasse
//! graph (covering pairs of the subposet induced on the facets).
//!
//! The graph of a sequence is recomputed from the facets themselves, so it
//! travels with the facets when they are permuted.

use std::fmt;

use crate::bruhat::{cover_indices, BruhatElement, OrderKind};
use crate::error::{Error, Result};
use crate::shelling::dual_graph;
use crate::types::{FacetSequence, LabeledGraph};

/// Which graph drives promotion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// `D(C)`: `|C_i ∩ C_j| = k - 1`.
    Dual,
    /// `H(C)`: `C_i ⋖ C_j` or `C_j ⋖ C_i` among the facets of `C`.
    Hasse(OrderKind),
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Dual => f.write_str("dual"),
            GraphKind::Hasse(kind) => write!(f, "hasse({kind})"),
        }
    }
}

/// Greedy increasing path `v_1 = 1 < v_2 < ... < v_r` where each step goes
/// to the least larger neighbour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Track(Vec<usize>);

impl Track {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

/// A permutation of the positions `[h]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositionPermutation(Vec<usize>);

impl PositionPermutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let h = one_line.len();
        let mut seen = vec![false; h];
        for &p in &one_line {
            if p == 0 || p > h || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::NotPermutation(format!("{one_line:?}")));
            }
        }
        Ok(Self(one_line))
    }

    pub fn identity(h: usize) -> Self {
        Self((1..=h).collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl fmt::Display for PositionPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn track(g: &LabeledGraph) -> Track {
    let mut vertices = vec![1];
    let mut v = 1;
    while let Some(&next) = g.neighbors(v).iter().find(|&&j| j > v) {
        vertices.push(next);
        v = next;
    }
    Track(vertices)
}

/// `∂_G`: off-track positions move down by one, `v_j ↦ v_{j+1} - 1`, and
/// the last track vertex goes to `h`.
pub fn promotion_permutation(g: &LabeledGraph) -> PositionPermutation {
    let h = g.order();
    let t = track(g);
    let mut one_line: Vec<usize> = (0..h).collect();
    for w in t.vertices().windows(2) {
        one_line[w[0] - 1] = w[1] - 1;
    }
    one_line[*t.vertices().last().expect("tracks start at 1") - 1] = h;
    PositionPermutation(one_line)
}

/// `σC`: the facet landing at position `p` is `C_{σ^{-1}(p)}`.
pub fn apply_positions<F: BruhatElement>(
    sigma: &PositionPermutation,
    c: &FacetSequence<F>,
) -> Result<FacetSequence<F>> {
    if sigma.len() != c.len() {
        return Err(Error::ShapeMismatch(format!(
            "permutation of [{}] applied to a sequence of length {}",
            sigma.len(),
            c.len()
        )));
    }
    let mut items: Vec<Option<F>> = vec![None; c.len()];
    for (i, facet) in c.items().iter().enumerate() {
        items[sigma.image(i + 1) - 1] = Some(facet.clone());
    }
    Ok(FacetSequence::new_unchecked(
        items.into_iter().map(|f| f.expect("bijection")).collect(),
    ))
}

/// The graph on positions `[h]` of `c` selected by `kind`.
pub fn graph_of<F: BruhatElement>(c: &FacetSequence<F>, kind: GraphKind) -> Result<LabeledGraph> {
    match kind {
        GraphKind::Dual => Ok(dual_graph(c)),
        GraphKind::Hasse(order) => {
            let edges = cover_indices(c.items(), order)?
                .into_iter()
                .map(|(a, b)| (a.min(b) + 1, a.max(b) + 1));
            LabeledGraph::new(c.len(), edges)
        }
    }
}

/// `∂_G C` with `G` the graph of `c`.
pub fn promote<F: BruhatElement>(
    c: &FacetSequence<F>,
    kind: GraphKind,
) -> Result<FacetSequence<F>> {
    apply_positions(&promotion_permutation(&graph_of(c, kind)?), c)
}

/// `s_i^G C`: swaps positions `i` and `i + 1` unless they are adjacent.
pub fn elementary_move<F: BruhatElement>(
    c: &FacetSequence<F>,
    i: usize,
    kind: GraphKind,
) -> Result<FacetSequence<F>> {
    if i == 0 || i >= c.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: c.len().saturating_sub(1),
        });
    }
    if graph_of(c, kind)?.has_edge(i, i + 1) {
        return Ok(c.clone());
    }
    let mut items = c.items().to_vec();
    items.swap(i - 1, i);
    Ok(FacetSequence::new_unchecked(items))
}

/// `s_{h-1} ⋯ s_1 C`, recomputing the graph before every move.
pub fn promote_via_moves<F: BruhatElement>(
    c: &FacetSequence<F>,
    kind: GraphKind,
) -> Result<FacetSequence<F>> {
    let mut current = c.clone();
    for i in 1..c.len() {
        current = elementary_move(&current, i, kind)?;
    }
    Ok(current)
}

/// `∂_r C`: promotes the prefix `C_1 ... C_r` on its own graph and keeps the
/// suffix.
pub fn r_promote<F: BruhatElement>(
    c: &FacetSequence<F>,
    r: usize,
    kind: GraphKind,
) -> Result<FacetSequence<F>> {
    let head = promote(&c.prefix(r)?, kind)?;
    let mut items = head.into_items();
    items.extend_from_slice(&c.items()[r..]);
    Ok(FacetSequence::new_unchecked(items))
}

/// `ε C = (∂_2 ∘ ... ∘ ∂_{h-1} ∘ ∂_h)(C)`.
pub fn evacuate<F: BruhatElement>(
    c: &FacetSequence<F>,
    kind: GraphKind,
) -> Result<FacetSequence<F>> {
    let mut current = c.clone();
    for r in (2..=c.len()).rev() {
        current = r_promote(&current, r, kind)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::is_shelling_order;
    use crate::subdivision::FlagFacet;
    use crate::types::{FlagTuple, KSubset};

    const SPHERE: [&str; 11] = [
        "123", "125", "126", "234", "235", "134", "136", "145", "246", "356", "456",
    ];
    const GALE: GraphKind = GraphKind::Hasse(OrderKind::Gale);

    fn seq(n: usize, ds: &[&str]) -> FacetSequence<KSubset> {
        FacetSequence::new(
            ds.iter()
                .map(|d| KSubset::from_digits(n, d).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn track_examples() {
        let c = seq(6, &SPHERE);
        assert_eq!(
            track(&graph_of(&c, GraphKind::Dual).unwrap()).vertices(),
            &[1, 2, 3, 7, 10, 11]
        );
        assert_eq!(
            track(&graph_of(&c, GALE).unwrap()).vertices(),
            &[1, 2, 3, 7, 9, 10, 11]
        );
        assert_eq!(track(&LabeledGraph::edgeless(1).unwrap()).vertices(), &[1]);
    }

    #[test]
    fn promotion_permutation_examples() {
        let c = seq(6, &SPHERE);
        let d = promotion_permutation(&graph_of(&c, GraphKind::Dual).unwrap());
        assert_eq!(d.one_line(), &[1, 2, 6, 3, 4, 5, 9, 7, 8, 10, 11]);
        let h = promotion_permutation(&graph_of(&c, GALE).unwrap());
        assert_eq!(h.one_line(), &[1, 2, 6, 3, 4, 5, 8, 7, 9, 10, 11]);
        let complete = LabeledGraph::from_predicate(5, |_, _| true);
        assert_eq!(
            promotion_permutation(&complete),
            PositionPermutation::identity(5)
        );
        let empty = LabeledGraph::edgeless(5).unwrap();
        assert_eq!(promotion_permutation(&empty).one_line(), &[5, 1, 2, 3, 4]);
    }

    #[test]
    fn apply_positions_examples() {
        let c = seq(6, &SPHERE);
        assert_eq!(
            apply_positions(&PositionPermutation::identity(11), &c).unwrap(),
            c
        );
        let d = PositionPermutation::new(vec![1, 2, 6, 3, 4, 5, 9, 7, 8, 10, 11]).unwrap();
        let expected = seq(
            6,
            &[
                "123", "125", "234", "235", "134", "126", "145", "246", "136", "356", "456",
            ],
        );
        assert_eq!(apply_positions(&d, &c).unwrap(), expected);
        let s = PositionPermutation::new(vec![1, 3, 2]).unwrap();
        assert_eq!(
            apply_positions(&s, &seq(6, &["235", "234", "246"])).unwrap(),
            seq(6, &["235", "246", "234"])
        );
        assert!(apply_positions(&s, &c).is_err());
        assert!(PositionPermutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn graph_of_examples() {
        let g = graph_of(&seq(6, &["235", "234", "246"]), GALE).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3)]);
        let g = graph_of(&seq(5, &["123", "124", "135", "145"]), GALE).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        for kind in [GraphKind::Dual, GALE] {
            assert_eq!(graph_of(&seq(5, &["123"]), kind).unwrap().edge_count(), 0);
        }
        let flags = seq(4, &["12", "13"])
            .map(|x| FlagFacet::from_tuple(&crate::matroid::completion(x)))
            .unwrap();
        assert_eq!(graph_of(&flags, GALE), Err(Error::UnorderedAlphabet));
        assert!(graph_of(&seq(5, &["123"]), GraphKind::Hasse(OrderKind::Conf)).is_err());
    }

    #[test]
    fn promote_examples() {
        let c = seq(6, &SPHERE);
        let d = promote(&c, GraphKind::Dual).unwrap();
        assert_eq!(
            d,
            seq(
                6,
                &["123", "125", "234", "235", "134", "126", "145", "246", "136", "356", "456"]
            )
        );
        assert!(is_shelling_order(&d));
        let h = promote(&c, GALE).unwrap();
        assert_eq!(
            h,
            seq(
                6,
                &["123", "125", "234", "235", "134", "126", "145", "136", "246", "356", "456"]
            )
        );

        let c = seq(6, &["235", "234", "246"]);
        assert_eq!(promote(&c, GraphKind::Dual).unwrap(), c);
        let l = seq(5, &["123", "124", "135", "145"]);
        assert_eq!(
            promote(&l, GraphKind::Dual).unwrap(),
            seq(5, &["123", "135", "124", "145"])
        );
        assert_eq!(promote(&l, GALE).unwrap(), l);
    }

    #[test]
    fn conf_hasse_promotion() {
        let l = FacetSequence::new(
            ["12", "13", "21", "23", "14"]
                .iter()
                .map(|d| FlagTuple::from_digits(4, d).unwrap())
                .collect(),
        )
        .unwrap();
        let g = graph_of(&l, GraphKind::Hasse(OrderKind::Conf)).unwrap();
        // 12 ⋖ 13 ⋖ 14, 12 ⋖ 21, 13 ⋖ 23, 21 ⋖ 23
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 4), (2, 5), (3, 4)]);
    }

    #[test]
    fn elementary_move_examples() {
        let c = seq(9, &["123", "456", "789"]);
        assert_eq!(
            elementary_move(&c, 1, GraphKind::Dual).unwrap(),
            seq(9, &["456", "123", "789"])
        );
        let c = seq(9, &["123", "124", "789"]);
        assert_eq!(elementary_move(&c, 1, GraphKind::Dual).unwrap(), c);
        assert!(elementary_move(&c, 0, GraphKind::Dual).is_err());
        assert!(elementary_move(&c, 3, GraphKind::Dual).is_err());
    }

    #[test]
    fn moves_match_promotion() {
        let c = seq(6, &SPHERE);
        assert_eq!(
            promote_via_moves(&c, GraphKind::Dual).unwrap(),
            promote(&c, GraphKind::Dual).unwrap()
        );
        let one = seq(6, &["123"]);
        assert_eq!(promote_via_moves(&one, GraphKind::Dual).unwrap(), one);
    }

    #[test]
    fn r_promote_examples() {
        let c = seq(6, &SPHERE);
        assert_eq!(
            r_promote(&c, 11, GraphKind::Dual).unwrap(),
            promote(&c, GraphKind::Dual).unwrap()
        );
        assert_eq!(r_promote(&c, 1, GraphKind::Dual).unwrap(), c);
        let c = seq(6, &["235", "234", "246"]);
        assert_eq!(r_promote(&c, 2, GraphKind::Dual).unwrap(), c);
        assert!(r_promote(&c, 0, GraphKind::Dual).is_err());
        assert!(r_promote(&c, 4, GraphKind::Dual).is_err());
    }

    #[test]
    fn evacuate_examples() {
        let one = seq(6, &["123"]);
        assert_eq!(evacuate(&one, GraphKind::Dual).unwrap(), one);
        let apart = seq(6, &["123", "456"]);
        assert_eq!(
            evacuate(&apart, GraphKind::Dual).unwrap(),
            seq(6, &["456", "123"])
        );
        let near = seq(6, &["123", "124"]);
        assert_eq!(evacuate(&near, GraphKind::Dual).unwrap(), near);
        let c = seq(6, &SPHERE);
        let e = evacuate(&c, GraphKind::Dual).unwrap();
        assert_eq!(evacuate(&e, GraphKind::Dual).unwrap(), c);
        assert!(is_shelling_order(&e));
    }
}
