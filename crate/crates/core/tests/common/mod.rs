//! Brute-force oracles on plain vectors, written from the definitions and
//! sharing no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use shellings::{FacetSequence, FlagTuple, KSubset, PureComplex};

pub fn ks(n: usize, digits: &str) -> KSubset {
    KSubset::from_digits(n, digits).unwrap()
}

pub fn ft(n: usize, digits: &str) -> FlagTuple {
    FlagTuple::from_digits(n, digits).unwrap()
}

pub fn subset_seq(n: usize, ds: &[&str]) -> FacetSequence<KSubset> {
    FacetSequence::new(ds.iter().map(|d| ks(n, d)).collect()).unwrap()
}

pub fn tuple_seq(n: usize, ds: &[&str]) -> FacetSequence<FlagTuple> {
    FacetSequence::new(ds.iter().map(|d| ft(n, d)).collect()).unwrap()
}

pub fn subset_complex(n: usize, ds: &[&str]) -> PureComplex<KSubset> {
    PureComplex::new(ds.iter().map(|d| ks(n, d)).collect()).unwrap()
}

pub fn tuple_complex(n: usize, ds: &[&str]) -> PureComplex<FlagTuple> {
    PureComplex::new(ds.iter().map(|d| ft(n, d)).collect()).unwrap()
}

/// All sorted k-subsets of [n] in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=n).combinations(k).collect()
}

/// All k-tuples of distinct values of [n].
pub fn k_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(k).collect()
}

pub fn gale(a: &[usize], b: &[usize]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x <= y)
}

pub fn conf(x: &[usize], y: &[usize]) -> bool {
    x.len() == y.len() && (1..=x.len()).all(|i| gale(&x[..i], &y[..i]))
}

/// Every ordered pair `(a, b)` with `a < b` under `leq`, as indices.
pub fn strict_pairs(
    elements: &[Vec<usize>],
    leq: fn(&[usize], &[usize]) -> bool,
) -> Vec<(usize, usize)> {
    let m = elements.len();
    (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && leq(&elements[a], &elements[b]))
        .collect()
}

/// Number of linear extensions by dynamic programming over downsets.
pub fn count_linear_extensions(m: usize, less: &[(usize, usize)]) -> u64 {
    let mut below = vec![0u32; m];
    for &(a, b) in less {
        below[b] |= 1 << a;
    }
    let mut ways = vec![0u64; 1 << m];
    ways[0] = 1;
    for s in 0..1usize << m {
        if ways[s] == 0 {
            continue;
        }
        for x in 0..m {
            if s >> x & 1 == 0 && below[x] as usize & !s == 0 {
                ways[s | 1 << x] += ways[s];
            }
        }
    }
    ways[(1 << m) - 1]
}

/// Whether `order` lists the elements with no later one strictly below an
/// earlier one.
pub fn respects(order: &[Vec<usize>], leq: fn(&[usize], &[usize]) -> bool) -> bool {
    (0..order.len()).all(|j| (0..j).all(|i| !leq(&order[j], &order[i]) || order[i] == order[j]))
}

/// Shelling by the definition: for each `j > 1`, every maximal face of
/// `⟨C_1, …, C_{j-1}⟩ ∩ ⟨C_j⟩` has `rank - 1` vertices.
pub fn is_shelling(facets: &[BTreeSet<u64>]) -> bool {
    let Some(first) = facets.first() else {
        return true;
    };
    let k = first.len();
    for j in 1..facets.len() {
        let meets: Vec<BTreeSet<u64>> = facets[..j]
            .iter()
            .map(|f| f.intersection(&facets[j]).copied().collect())
            .collect();
        for a in &meets {
            let maximal = !meets.iter().any(|b| a.is_subset(b) && a.len() < b.len());
            if maximal && a.len() + 1 != k {
                return false;
            }
        }
    }
    true
}

pub fn subset_vertices(f: &[usize]) -> BTreeSet<u64> {
    f.iter().map(|&v| v as u64).collect()
}

/// The flag `{y_1} ⊂ {y_1, y_2} ⊂ …`, each level encoded as a bitmask.
pub fn flag_vertices(y: &[usize]) -> BTreeSet<u64> {
    let mut mask = 0u64;
    y.iter()
        .map(|&v| {
            mask |= 1 << (v - 1);
            mask
        })
        .collect()
}

pub fn is_shelling_subsets(seq: &[Vec<usize>]) -> bool {
    is_shelling(&seq.iter().map(|f| subset_vertices(f)).collect::<Vec<_>>())
}

pub fn is_flag_shelling(seq: &[Vec<usize>]) -> bool {
    is_shelling(&seq.iter().map(|y| flag_vertices(y)).collect::<Vec<_>>())
}

/// Exchange (or quasi-exchange) on sorted vectors.
pub fn exchange(x: &[Vec<usize>], quasi: bool) -> bool {
    let members: BTreeSet<Vec<usize>> = x.iter().cloned().collect();
    for a in x {
        for b in x {
            let b_minus: Vec<usize> = b.iter().filter(|v| !a.contains(v)).copied().collect();
            let top = b_minus.iter().copied().max().unwrap_or(0);
            for &e in a.iter().filter(|v| !b.contains(v)) {
                if quasi && e < top {
                    continue;
                }
                let ok = b_minus.iter().any(|&f| {
                    let mut s: Vec<usize> =
                        a.iter().filter(|&&v| v != e).copied().chain([f]).collect();
                    s.sort_unstable();
                    members.contains(&s)
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Down-closure inside `ambient` under `leq`.
pub fn is_ideal(
    x: &[Vec<usize>],
    ambient: &[Vec<usize>],
    leq: fn(&[usize], &[usize]) -> bool,
) -> bool {
    ambient
        .iter()
        .all(|a| x.contains(a) || !x.iter().any(|b| leq(a, b)))
}

/// Every `w ∈ S_n` gives the image `{(w(y_1), …, w(y_k))}` a unique
/// maximum under `leq`.
pub fn maximality(
    y: &[Vec<usize>],
    n: usize,
    leq: fn(&[usize], &[usize]) -> bool,
    sort_image: bool,
) -> bool {
    (1..=n).permutations(n).all(|w| {
        let image: Vec<Vec<usize>> = y
            .iter()
            .map(|t| {
                let mut v: Vec<usize> = t.iter().map(|&i| w[i - 1]).collect();
                if sort_image {
                    v.sort_unstable();
                }
                v
            })
            .collect();
        image.iter().any(|m| image.iter().all(|o| leq(o, m)))
    })
}

/// Covering pairs of `leq` restricted to `set`, as unordered index pairs.
pub fn hasse_edges(
    set: &[Vec<usize>],
    leq: fn(&[usize], &[usize]) -> bool,
) -> BTreeSet<(usize, usize)> {
    let m = set.len();
    let lt = |a: usize, b: usize| a != b && leq(&set[a], &set[b]);
    let mut out = BTreeSet::new();
    for a in 0..m {
        for b in 0..m {
            if lt(a, b) && !(0..m).any(|c| lt(a, c) && lt(c, b)) {
                out.insert((a.min(b) + 1, a.max(b) + 1));
            }
        }
    }
    out
}

/// Pairs of positions whose facets differ in exactly one member.
pub fn exchange_edges(seq: &[Vec<usize>]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            let shared = seq[a].iter().filter(|v| seq[b].contains(v)).count();
            if shared + 1 == seq[a].len() {
                out.insert((a + 1, b + 1));
            }
        }
    }
    out
}

pub fn members(c: &FacetSequence<KSubset>) -> Vec<Vec<usize>> {
    c.items().iter().map(KSubset::members).collect()
}

pub fn entries(c: &FacetSequence<FlagTuple>) -> Vec<Vec<usize>> {
    c.items().iter().map(FlagTuple::entries).collect()
}

/// Every nonempty subfamily of `ambient`.
pub fn subfamilies(ambient: &[Vec<usize>]) -> impl Iterator<Item = Vec<Vec<usize>>> + '_ {
    (1u32..1 << ambient.len()).map(move |mask| {
        (0..ambient.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ambient[i].clone())
            .collect()
    })
}

pub fn to_subsets(n: usize, x: &[Vec<usize>]) -> PureComplex<KSubset> {
    PureComplex::new(x.iter().map(|f| KSubset::new(n, f).unwrap()).collect()).unwrap()
}

pub fn to_tuples(n: usize, x: &[Vec<usize>]) -> PureComplex<FlagTuple> {
    PureComplex::new(x.iter().map(|f| FlagTuple::new(n, f).unwrap()).collect()).unwrap()
}
