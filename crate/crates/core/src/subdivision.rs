//! Barycentric subdivision read as a union of `S_k`-cosets inside
//! `Conf_k([n])`, the flag complex `Δ(Y)`, flag shellability, and the
//! classical construction through maximal chains of the face poset.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::bruhat::{BruhatElement, OrderKind};
use crate::error::{Error, Result};
use crate::shelling::{find_shelling_order, is_shelling_order};
use crate::types::{Facet, FacetSequence, FlagTuple, KSubset, PureComplex};

/// A facet of `Δ(Y)`: the nested chain `P^(1)(y) ⊂ ... ⊂ P^(k)(y)`, stored by
/// cardinality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagFacet {
    chain: Vec<KSubset>,
}

impl FlagFacet {
    /// Validates that `vertices` holds one subset of each size `1..=k`, nested.
    pub fn new(vertices: Vec<KSubset>) -> Result<Self> {
        let mut chain = vertices;
        chain.sort_by_key(KSubset::len);
        for (t, v) in chain.iter().enumerate() {
            if v.len() != t + 1 {
                return Err(Error::InvalidFlag(format!("no vertex of size {}", t + 1)));
            }
            if t > 0 && (!chain[t - 1].is_subset(v) || chain[t - 1].universe() != v.universe()) {
                return Err(Error::InvalidFlag(format!(
                    "{} is not contained in {v}",
                    chain[t - 1]
                )));
            }
        }
        if chain.is_empty() {
            return Err(Error::InvalidFlag("empty flag".into()));
        }
        Ok(Self { chain })
    }

    /// `P(y) = {P^(1)(y), ..., P^(k)(y)}`.
    pub fn from_tuple(y: &FlagTuple) -> Self {
        let n = y.universe();
        let chain = y
            .prefix_masks()
            .map(|m| KSubset::from_mask(n, m).expect("prefix of a valid tuple"))
            .collect();
        Self { chain }
    }

    /// Recovers the tuple `y` with `P(y) = self`.
    pub fn to_tuple(&self) -> FlagTuple {
        let mut prev = 0u64;
        let entries: Vec<usize> = self
            .chain
            .iter()
            .map(|v| {
                let new = v.mask() & !prev;
                prev = v.mask();
                new.trailing_zeros() as usize + 1
            })
            .collect();
        FlagTuple::new(self.universe(), &entries).expect("a nested chain spells a tuple")
    }

    pub fn vertices(&self) -> &[KSubset] {
        &self.chain
    }
}

impl Facet for FlagFacet {
    fn rank(&self) -> usize {
        self.chain.len()
    }

    fn universe(&self) -> usize {
        self.chain[0].universe()
    }

    // vertices of distinct sizes never coincide, so intersecting two flags
    // compares them level by level
    fn common(&self, other: &Self) -> usize {
        self.chain
            .iter()
            .zip(&other.chain)
            .filter(|(a, b)| a == b)
            .count()
    }

    fn meet_within(&self, j: &Self, z: &Self) -> bool {
        self.chain
            .iter()
            .zip(&j.chain)
            .zip(&z.chain)
            .all(|((i, j), z)| i != j || z == j)
    }
}

/// Flags carry no Bruhat order of their own.
impl BruhatElement for FlagFacet {
    fn bruhat_leq(&self, _other: &Self, _kind: OrderKind) -> Result<bool> {
        Err(Error::UnorderedAlphabet)
    }

    fn ambient(&self, _kind: OrderKind) -> Result<Vec<Self>> {
        Err(Error::UnorderedAlphabet)
    }

    fn act(&self, _w: &FlagTuple) -> Result<Self> {
        Err(Error::UnorderedAlphabet)
    }
}

impl fmt::Display for FlagFacet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for FlagFacet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `B(X)`: every ordering of every facet of `X`.
pub fn barycentric(x: &PureComplex<KSubset>) -> Result<PureComplex<FlagTuple>> {
    let n = x.universe();
    let k = x.rank();
    let mut tuples = Vec::with_capacity(x.len() * (1..=k).product::<usize>());
    for f in x.facets() {
        for p in f.iter().permutations(k) {
            tuples.push(FlagTuple::new(n, &p)?);
        }
    }
    PureComplex::new(tuples)
}

/// `Δ(Y)`, whose facets are the flags `P(y)`.
pub fn flag_complex(y: &PureComplex<FlagTuple>) -> PureComplex<FlagFacet> {
    PureComplex::new(y.facets().iter().map(FlagFacet::from_tuple).collect())
        .expect("P is injective")
}

/// Whether `(P(L_1), P(L_2), ...)` is a shelling order.
pub fn is_flag_shelling_order(l: &FacetSequence<FlagTuple>) -> bool {
    let flags = l.map(FlagFacet::from_tuple).expect("P is injective");
    is_shelling_order(&flags)
}

/// Whether `Δ(Y)` is shellable.
pub fn is_flag_shellable(y: &PureComplex<FlagTuple>) -> bool {
    find_shelling_order(&flag_complex(y)).is_some()
}

/// The order complex of the face poset of `X`, built from maximal chains of
/// nonempty faces under inclusion.
pub fn face_poset_order_complex(x: &PureComplex<KSubset>) -> Result<PureComplex<FlagFacet>> {
    let n = x.universe();
    let mut faces: HashSet<u64> = HashSet::new();
    for f in x.facets() {
        // every nonempty submask of the facet
        let full = f.mask();
        let mut sub = full;
        while sub != 0 {
            faces.insert(sub);
            sub = (sub - 1) & full;
        }
    }
    let mut chains = Vec::new();
    let mut stack: Vec<Vec<u64>> = (0..n)
        .map(|v| 1u64 << v)
        .filter(|m| faces.contains(m))
        .map(|m| vec![m])
        .collect();
    while let Some(chain) = stack.pop() {
        let top = *chain.last().expect("chains are nonempty");
        let ups: Vec<u64> = (0..n)
            .map(|v| top | 1u64 << v)
            .filter(|&m| m != top && faces.contains(&m))
            .collect();
        if ups.is_empty() {
            let vertices = chain
                .iter()
                .map(|&m| KSubset::from_mask(n, m))
                .collect::<Result<Vec<_>>>()?;
            chains.push(FlagFacet::new(vertices)?);
            continue;
        }
        for up in ups {
            let mut next = chain.clone();
            next.push(up);
            stack.push(next);
        }
    }
    PureComplex::new(chains)
}
