//! Bruhat orders on the three quotients of `S_n` used here: the Gale order on
//! `[n]^k_<`, the order on `Conf_k([n])` given by prefix domination, and the
//! Bruhat order on `S_n` itself (tableau criterion). Also descent sets, the
//! block-sorting projection `P^J`, covers of induced subposets, order ideals
//! and linear extensions.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::types::{Facet, FacetSequence, FlagTuple, KSubset, PureComplex};

/// Which quotient's Bruhat order to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// `[n]^k_<`, componentwise domination of sorted members.
    Gale,
    /// `Conf_k([n])`, Gale domination of every sorted prefix.
    Conf,
    /// `S_n`, via the projections onto every minuscule quotient.
    Perm,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Gale => "gale",
            OrderKind::Conf => "conf",
            OrderKind::Perm => "perm",
        })
    }
}

/// An element of one of the ordered quotients.
pub trait BruhatElement: Facet {
    /// `self ≤ other` in the Bruhat order of `kind`.
    fn bruhat_leq(&self, other: &Self, kind: OrderKind) -> Result<bool>;

    /// Every element of the quotient `self` lives in.
    fn ambient(&self, kind: OrderKind) -> Result<Vec<Self>>;

    /// Left action of `w ∈ S_n` followed by projection back to the quotient.
    fn act(&self, w: &FlagTuple) -> Result<Self>;
}

/// Componentwise comparison of two equal-size masks' increasing members.
pub(crate) fn gale_masks(a: u64, b: u64) -> bool {
    let mut a = a;
    let mut b = b;
    while a != 0 {
        if a.trailing_zeros() > b.trailing_zeros() {
            return false;
        }
        a &= a - 1;
        b &= b - 1;
    }
    true
}

fn same_shape<F: Facet>(a: &F, b: &F) -> Result<()> {
    if a.rank() != b.rank() || a.universe() != b.universe() {
        return Err(Error::ShapeMismatch(format!(
            "{a} has {} entries over [{}], {b} has {} over [{}]",
            a.rank(),
            a.universe(),
            b.rank(),
            b.universe()
        )));
    }
    Ok(())
}

/// Gale order: the `i`-th smallest member of `a` is at most the `i`-th
/// smallest member of `b`, for every `i`.
pub fn gale_leq(a: &KSubset, b: &KSubset) -> Result<bool> {
    same_shape(a, b)?;
    Ok(gale_masks(a.mask(), b.mask()))
}

/// Bruhat order on `Conf_k([n])`: every sorted prefix of `x` is Gale-below
/// the matching prefix of `y`.
pub fn conf_leq(x: &FlagTuple, y: &FlagTuple) -> Result<bool> {
    same_shape(x, y)?;
    Ok(x.prefix_masks()
        .zip(y.prefix_masks())
        .all(|(a, b)| gale_masks(a, b)))
}

/// Bruhat order on `S_n`: for every `k ∈ [n-1]`, the Grassmannian
/// projections `P^{[n-1]∖{k}}` of `u` and `v` compare in the first `k`
/// positions.
pub fn perm_leq(u: &FlagTuple, v: &FlagTuple) -> Result<bool> {
    for w in [u, v] {
        if !w.is_permutation() {
            return Err(Error::NotPermutation(w.to_string()));
        }
    }
    same_shape(u, v)?;
    let n = u.universe();
    for k in 1..n {
        let j = DescentSet::new(n, (1..n).filter(|&i| i != k))?;
        let pu = sort_blocks(u, &j)?;
        let pv = sort_blocks(v, &j)?;
        if (1..=k).any(|i| pu.get(i) > pv.get(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl BruhatElement for KSubset {
    fn bruhat_leq(&self, other: &Self, kind: OrderKind) -> Result<bool> {
        match kind {
            OrderKind::Gale => gale_leq(self, other),
            _ => Err(Error::OrderKindMismatch {
                kind,
                what: "subsets",
            }),
        }
    }

    fn ambient(&self, kind: OrderKind) -> Result<Vec<Self>> {
        match kind {
            OrderKind::Gale => KSubset::all(self.universe(), self.len()),
            _ => Err(Error::OrderKindMismatch {
                kind,
                what: "subsets",
            }),
        }
    }

    fn act(&self, w: &FlagTuple) -> Result<Self> {
        if !w.is_permutation() || w.universe() != self.universe() {
            return Err(Error::NotPermutation(w.to_string()));
        }
        let image: Vec<usize> = self.iter().map(|v| w.get(v)).collect();
        KSubset::new(self.universe(), &image)
    }
}

impl BruhatElement for FlagTuple {
    fn bruhat_leq(&self, other: &Self, kind: OrderKind) -> Result<bool> {
        match kind {
            OrderKind::Conf => conf_leq(self, other),
            OrderKind::Perm => perm_leq(self, other),
            OrderKind::Gale => Err(Error::OrderKindMismatch {
                kind,
                what: "tuples",
            }),
        }
    }

    fn ambient(&self, kind: OrderKind) -> Result<Vec<Self>> {
        match kind {
            OrderKind::Conf => FlagTuple::all(self.universe(), self.len()),
            OrderKind::Perm if self.is_permutation() => FlagTuple::permutations(self.universe()),
            OrderKind::Perm => Err(Error::NotPermutation(self.to_string())),
            OrderKind::Gale => Err(Error::OrderKindMismatch {
                kind,
                what: "tuples",
            }),
        }
    }

    fn act(&self, w: &FlagTuple) -> Result<Self> {
        self.apply(w)
    }
}

/// A set `J ⊆ [n-1]` of positions, e.g. a right descent set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    positions: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut positions: Vec<usize> = positions.into_iter().collect();
        positions.sort_unstable();
        positions.dedup();
        if let Some(&bad) = positions.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                lo: 1,
                hi: n.saturating_sub(1),
            });
        }
        Ok(Self { n, positions })
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// `D_R(w) = {i : w(i) > w(i+1)}`.
pub fn descent_set(w: &FlagTuple) -> Result<DescentSet> {
    if !w.is_permutation() {
        return Err(Error::NotPermutation(w.to_string()));
    }
    let n = w.universe();
    DescentSet::new(n, (1..n).filter(|&i| w.get(i) > w.get(i + 1)))
}

/// `P^J(w)`: sorts each maximal block of positions linked by `i ∈ J`.
pub fn sort_blocks(w: &FlagTuple, j: &DescentSet) -> Result<FlagTuple> {
    if !w.is_permutation() {
        return Err(Error::NotPermutation(w.to_string()));
    }
    let n = w.universe();
    if j.universe() != n {
        return Err(Error::ShapeMismatch(format!(
            "J ⊆ [{}] used with a permutation of [{n}]",
            j.universe() - 1
        )));
    }
    let mut entries = w.entries();
    let mut start = 0;
    for i in 1..=n {
        // position i (1-based) closes a block unless i ∈ J
        if i == n || !j.contains(i) {
            entries[start..i].sort_unstable();
            start = i;
        }
    }
    FlagTuple::new(n, &entries)
}

/// `P^(i)(x)`: the first `i` entries of `x`, sorted.
pub fn prefix_projection(x: &FlagTuple, i: usize) -> Result<KSubset> {
    if i == 0 || i > x.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: x.len(),
        });
    }
    let members: Vec<usize> = x.iter().take(i).collect();
    KSubset::new(x.universe(), &members)
}

// surfaces a kind mismatch even when no two elements get compared
fn check_kind<T: BruhatElement>(elements: &[T], kind: OrderKind) -> Result<()> {
    if let Some(first) = elements.first() {
        first.bruhat_leq(first, kind)?;
    }
    Ok(())
}

fn check_homogeneous<T: Facet>(elements: &[T]) -> Result<()> {
    if let Some(first) = elements.first() {
        for e in elements {
            same_shape(first, e)?;
        }
    }
    Ok(())
}

/// The strict order relation of `elements`, row-major: `less[a * m + b]`.
pub(crate) fn strict_relation<T: BruhatElement>(
    elements: &[T],
    kind: OrderKind,
) -> Result<Vec<bool>> {
    check_homogeneous(elements)?;
    check_kind(elements, kind)?;
    let m = elements.len();
    let mut less = vec![false; m * m];
    for (a, x) in elements.iter().enumerate() {
        for (b, y) in elements.iter().enumerate() {
            if a != b && x.bruhat_leq(y, kind)? {
                less[a * m + b] = true;
            }
        }
    }
    Ok(less)
}

/// Covering pairs `(a, b)` of the subposet induced on `elements`, as 0-based
/// indices with `elements[a] ⋖ elements[b]`.
pub fn cover_indices<T: BruhatElement>(
    elements: &[T],
    kind: OrderKind,
) -> Result<Vec<(usize, usize)>> {
    let m = elements.len();
    let less = strict_relation(elements, kind)?;
    let mut covers = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if less[a * m + b] && !(0..m).any(|c| less[a * m + c] && less[c * m + b]) {
                covers.push((a, b));
            }
        }
    }
    Ok(covers)
}

/// Covering relations `(lower, upper)` of the subposet induced on `set`
/// (not of the ambient quotient), sorted.
pub fn induced_covers<T: BruhatElement>(set: &[T], kind: OrderKind) -> Result<Vec<(T, T)>> {
    let mut covers: Vec<(T, T)> = cover_indices(set, kind)?
        .into_iter()
        .map(|(a, b)| (set[a].clone(), set[b].clone()))
        .collect();
    covers.sort();
    Ok(covers)
}

/// The interval `[lo, hi]` of the ambient quotient, in canonical order.
pub fn interval<T: BruhatElement>(lo: &T, hi: &T, kind: OrderKind) -> Result<Vec<T>> {
    same_shape(lo, hi)?;
    let mut out = Vec::new();
    for x in lo.ambient(kind)? {
        if lo.bruhat_leq(&x, kind)? && x.bruhat_leq(hi, kind)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Whether `x` is closed downwards inside its ambient quotient.
pub fn is_order_ideal<T: BruhatElement>(x: &PureComplex<T>, kind: OrderKind) -> Result<bool> {
    let members: HashSet<&T> = x.facets().iter().collect();
    for y in x.facets()[0].ambient(kind)? {
        if members.contains(&y) {
            continue;
        }
        for f in x.facets() {
            if y.bruhat_leq(f, kind)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether no element of `l` is strictly above a later one. `l` must be an
/// arrangement of the facets of `x`.
pub fn is_linear_extension<T: BruhatElement>(
    l: &FacetSequence<T>,
    x: &PureComplex<T>,
    kind: OrderKind,
) -> Result<bool> {
    if l.support() != *x {
        return Err(Error::NotArrangement);
    }
    let items = l.items();
    for (j, later) in items.iter().enumerate() {
        for earlier in &items[..j] {
            if later.bruhat_leq(earlier, kind)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lazily enumerates the linear extensions of the subposet induced on a
/// complex's facets. At each step the available minimal elements are tried in
/// ascending canonical order, so the output order is deterministic.
pub struct LinearExtensions<T> {
    elements: Vec<T>,
    less: Vec<bool>,
    order: Vec<usize>,
    cursor: Vec<usize>,
    used: Vec<bool>,
    pending: Vec<usize>,
    started: bool,
    finished: bool,
}

impl<T: BruhatElement> LinearExtensions<T> {
    fn new(elements: Vec<T>, kind: OrderKind) -> Result<Self> {
        let m = elements.len();
        let less = strict_relation(&elements, kind)?;
        let pending = (0..m)
            .map(|b| (0..m).filter(|&a| less[a * m + b]).count())
            .collect();
        Ok(Self {
            elements,
            less,
            order: Vec::with_capacity(m),
            cursor: vec![0; m + 1],
            used: vec![false; m],
            pending,
            started: false,
            finished: m == 0,
        })
    }

    fn place(&mut self, c: usize) {
        let m = self.elements.len();
        self.used[c] = true;
        for b in 0..m {
            if self.less[c * m + b] {
                self.pending[b] -= 1;
            }
        }
        self.order.push(c);
        self.cursor[self.order.len()] = 0;
    }

    fn unplace(&mut self) {
        let m = self.elements.len();
        let c = self.order.pop().expect("nonempty prefix");
        self.used[c] = false;
        for b in 0..m {
            if self.less[c * m + b] {
                self.pending[b] += 1;
            }
        }
    }

    /// Advances to the next extension and returns it as element indices.
    pub fn next_indices(&mut self) -> Option<&[usize]> {
        if self.finished {
            return None;
        }
        let m = self.elements.len();
        if self.started {
            self.unplace();
        }
        self.started = true;
        loop {
            let depth = self.order.len();
            if depth == m {
                return Some(&self.order);
            }
            let found = (self.cursor[depth]..m).find(|&c| !self.used[c] && self.pending[c] == 0);
            match found {
                Some(c) => {
                    self.cursor[depth] = c + 1;
                    self.place(c);
                }
                None if depth == 0 => {
                    self.finished = true;
                    return None;
                }
                None => self.unplace(),
            }
        }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }
}

impl<T: BruhatElement> Iterator for LinearExtensions<T> {
    type Item = FacetSequence<T>;

    fn next(&mut self) -> Option<Self::Item> {
        let indices = self.next_indices()?.to_vec();
        Some(FacetSequence::new_unchecked(
            indices
                .into_iter()
                .map(|i| self.elements[i].clone())
                .collect(),
        ))
    }
}

/// Every linear extension of the Bruhat order restricted to `x`.
pub fn linear_extensions<T: BruhatElement>(
    x: &PureComplex<T>,
    kind: OrderKind,
) -> Result<LinearExtensions<T>> {
    LinearExtensions::new(x.facets().to_vec(), kind)
}

/// Unique maximum of `set` if one exists.
pub fn unique_maximum<T: BruhatElement>(set: &[T], kind: OrderKind) -> Result<Option<T>> {
    check_kind(set, kind)?;
    extremum(set, |a, b| a.bruhat_leq(b, kind))
}

/// Unique minimum of `set` if one exists.
pub fn unique_minimum<T: BruhatElement>(set: &[T], kind: OrderKind) -> Result<Option<T>> {
    check_kind(set, kind)?;
    extremum(set, |a, b| b.bruhat_leq(a, kind))
}

fn extremum<T: BruhatElement>(
    set: &[T],
    below: impl Fn(&T, &T) -> Result<bool>,
) -> Result<Option<T>> {
    check_homogeneous(set)?;
    let Some(mut candidate) = set.first() else {
        return Ok(None);
    };
    // any extremum survives the scan, so verifying the survivor suffices
    for x in &set[1..] {
        if !below(x, candidate)? {
            candidate = x;
        }
    }
    for x in set {
        if !below(x, candidate)? {
            return Ok(None);
        }
    }
    Ok(Some(candidate.clone()))
}
