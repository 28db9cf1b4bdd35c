//! Exhaustive and randomized verification sweeps.
//!
//! Instances are generated sequentially (random ones from a seeded ChaCha
//! stream), checked in parallel, and folded back in generation order, so a
//! report does not depend on the number of worker threads.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bruhat::{
    interval, is_order_ideal, linear_extensions, prefix_projection, BruhatElement, OrderKind,
};
use crate::error::{Error, Result};
use crate::matroid::{completion, has_quasi_exchange, is_coxeter_matroid, is_matroid};
use crate::promotion::{evacuate, graph_of, promote, promote_via_moves, GraphKind};
use crate::shelling::{all_shelling_orders, attaches, dual_graph, is_shelling_order};
use crate::subdivision::{barycentric, is_flag_shelling_order};
use crate::types::{FacetSequence, FlagTuple, KSubset, PureComplex};

/// Largest `n` for exhaustive sweeps.
pub const MAX_EXHAUSTIVE_N: usize = 6;
/// Largest ambient poset whose subsets are all swept.
pub const MAX_SWEPT_AMBIENT: usize = 16;
/// Largest number of complexes gathered for a shelling-order corpus.
pub const MAX_CORPUS_COMPLEXES: usize = 100_000;

/// Universe, rank and length bound of the random shelling orders.
pub const SAMPLE_SHAPE: (usize, usize, usize) = (6, 3, 10);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    /// Linear extensions of quasi-exchange complexes are shelling orders.
    #[value(name = "extensions-shell")]
    ExtensionsShell,
    /// `X` is a matroid iff its barycentric subdivision is a Coxeter matroid.
    #[value(name = "barycentric-coxeter")]
    BarycentricCoxeter,
    /// Linear extensions of order ideals of `Conf_k([n])` are flag shellings.
    #[value(name = "conf-ideals-flagshell")]
    ConfIdealsFlagShell,
    /// Promotion keeps shelling orders; so does swapping a loosely attached
    /// last pair.
    #[value(name = "promotion-shell")]
    PromotionShell,
    /// Evacuation keeps shelling orders and is an involution on them.
    #[value(name = "evacuation-shell")]
    EvacuationShell,
    /// Hasse graph inside the dual graph, with equal promotions.
    #[value(name = "hasse-vs-dual")]
    HasseVsDual,
    /// Promotion through elementary moves agrees with the closed form.
    #[value(name = "eq2-oracle")]
    MovesMatchClosedForm,
    /// Dual-graph edges are exactly transposition neighbours, which are
    /// Gale comparable.
    #[value(name = "remark-bruhat-graph")]
    DualEdgesAreTranspositions,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::ExtensionsShell,
        Suite::BarycentricCoxeter,
        Suite::ConfIdealsFlagShell,
        Suite::PromotionShell,
        Suite::EvacuationShell,
        Suite::HasseVsDual,
        Suite::MovesMatchClosedForm,
        Suite::DualEdgesAreTranspositions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExtensionsShell => "extensions-shell",
            Suite::BarycentricCoxeter => "barycentric-coxeter",
            Suite::ConfIdealsFlagShell => "conf-ideals-flagshell",
            Suite::PromotionShell => "promotion-shell",
            Suite::EvacuationShell => "evacuation-shell",
            Suite::HasseVsDual => "hasse-vs-dual",
            Suite::MovesMatchClosedForm => "eq2-oracle",
            Suite::DualEdgesAreTranspositions => "remark-bruhat-graph",
        }
    }

    /// Default `(n, k)` of the exhaustive part.
    pub fn default_shape(self) -> (usize, usize) {
        match self {
            Suite::ConfIdealsFlagShell => (4, 2),
            _ => (5, 3),
        }
    }

    /// Whether the suite also draws random shelling orders.
    pub fn uses_samples(self) -> bool {
        matches!(
            self,
            Suite::PromotionShell | Suite::EvacuationShell | Suite::MovesMatchClosedForm
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub k: usize,
    /// Facet bound for shelling-order corpora.
    pub max_facets: usize,
    pub samples: usize,
    pub seed: u64,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        let (n, k) = suite.default_shape();
        Self {
            n,
            k,
            max_facets: 5,
            samples: 1000,
            seed: 0,
            jobs: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub suite: Suite,
    pub instances: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn holds(&self) -> bool {
        self.failed == 0
    }

    /// Everything except the timing, byte-stable across runs.
    pub fn summary(&self) -> String {
        format!(
            "suite: {}\ninstances: {}\nchecks: {}\npassed: {}\nfailed: {}\ncounterexample: {}\n",
            self.suite,
            self.instances,
            self.checks,
            self.passed,
            self.failed,
            self.counterexample.as_deref().unwrap_or("none"),
        )
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}elapsed: {:.3}s",
            self.summary(),
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failed: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn sweep<I: Sync>(
    suite: Suite,
    cfg: &SuiteConfig,
    instances: &[I],
    check: impl Fn(&I) -> Result<Tally> + Sync,
) -> Result<RunReport> {
    let start = Instant::now();
    let tallies: Vec<Result<Tally>> =
        pool(cfg.jobs).install(|| instances.par_iter().map(&check).collect());
    let mut report = RunReport {
        suite,
        instances: instances.len(),
        checks: 0,
        passed: 0,
        failed: 0,
        counterexample: None,
        elapsed: Duration::ZERO,
    };
    for t in tallies {
        let t = t?;
        report.checks += t.checks;
        report.failed += t.failed;
        if report.counterexample.is_none() {
            report.counterexample = t.counterexample;
        }
    }
    report.passed = report.checks - report.failed;
    report.elapsed = start.elapsed();
    Ok(report)
}

fn guard_n(n: usize) -> Result<()> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::SweepTooLarge {
            n,
            limit: MAX_EXHAUSTIVE_N,
        });
    }
    Ok(())
}

/// Every nonempty subcomplex of `ambient`, by bitmask over its elements.
fn all_subcomplexes<T: crate::types::Facet>(ambient: &[T]) -> Result<Vec<PureComplex<T>>> {
    let m = ambient.len();
    if m > MAX_SWEPT_AMBIENT {
        return Err(Error::TooManyInstances {
            count: m,
            what: "ambient elements",
            limit: MAX_SWEPT_AMBIENT,
        });
    }
    (1u32..1 << m)
        .map(|mask| {
            PureComplex::new(
                (0..m)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| ambient[i].clone())
                    .collect(),
            )
        })
        .collect()
}

/// All complexes in `[n]^k_<` with at most `max_facets` facets.
fn small_complexes(n: usize, k: usize, max_facets: usize) -> Result<Vec<PureComplex<KSubset>>> {
    let ambient = KSubset::all(n, k)?;
    let count: usize = (1..=max_facets.min(ambient.len()))
        .map(|r| binomial(ambient.len(), r))
        .sum();
    if count > MAX_CORPUS_COMPLEXES {
        return Err(Error::TooManyInstances {
            count,
            what: "complexes",
            limit: MAX_CORPUS_COMPLEXES,
        });
    }
    let mut out = Vec::with_capacity(count);
    for r in 1..=max_facets.min(ambient.len()) {
        for pick in itertools::Itertools::combinations(ambient.iter().copied(), r) {
            out.push(PureComplex::new(pick)?);
        }
    }
    Ok(out)
}

fn binomial(m: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// A random shelling order in `[n]^k_<` of length at most `max_h`, grown by
/// appending uniformly chosen attachable facets.
pub fn random_shelling_order(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    max_h: usize,
) -> Result<FacetSequence<KSubset>> {
    let ambient = KSubset::all(n, k)?;
    let target = rng.gen_range(1..=max_h.max(1));
    let mut items = vec![*ambient.choose(rng).ok_or(Error::EmptyComplex)?];
    while items.len() < target {
        let candidates: Vec<KSubset> = ambient
            .iter()
            .filter(|f| !items.contains(f) && attaches(&items, f))
            .copied()
            .collect();
        match candidates.choose(rng) {
            Some(&f) => items.push(f),
            None => break,
        }
    }
    FacetSequence::new(items)
}

/// Every shelling order of every complex with at most `max_facets` facets,
/// followed by `samples` random shelling orders.
pub fn shelling_corpus(cfg: &SuiteConfig) -> Result<Vec<FacetSequence<KSubset>>> {
    guard_n(cfg.n)?;
    let complexes = small_complexes(cfg.n, cfg.k, cfg.max_facets)?;
    let per_complex: Vec<Vec<FacetSequence<KSubset>>> =
        pool(cfg.jobs).install(|| complexes.par_iter().map(all_shelling_orders).collect());
    let mut corpus: Vec<_> = per_complex.into_iter().flatten().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (n, k, h) = SAMPLE_SHAPE;
    for _ in 0..cfg.samples {
        corpus.push(random_shelling_order(&mut rng, n, k, h)?);
    }
    Ok(corpus)
}

/// The order swapping the last two facets of `c` when they share fewer than
/// `k - 1` vertices.
pub fn appending_swap(c: &FacetSequence<KSubset>) -> Option<FacetSequence<KSubset>> {
    let h = c.len();
    if h < 3 || c.get(h - 1).intersection_len(c.get(h)) + 1 >= c.rank() {
        return None;
    }
    let mut items = c.items().to_vec();
    items.swap(h - 2, h - 1);
    Some(FacetSequence::new_unchecked(items))
}

/// Whether some transposition `t` of values has `P^(k)(t · y) = x ≠ y`,
/// reading `y` as its Grassmannian permutation.
pub fn transposition_neighbours(x: &KSubset, y: &KSubset) -> Result<bool> {
    if x == y {
        return Ok(false);
    }
    let n = y.universe();
    let w = completion(y);
    for a in 1..=n {
        for b in a + 1..=n {
            let swapped: Vec<usize> = w
                .iter()
                .map(|v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect();
            if prefix_projection(&FlagTuple::new(n, &swapped)?, y.len())? == *x {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<RunReport> {
    match suite {
        Suite::ExtensionsShell => extensions_shell(cfg),
        Suite::BarycentricCoxeter => barycentric_coxeter(cfg),
        Suite::ConfIdealsFlagShell => conf_ideals_flag_shell(cfg),
        Suite::PromotionShell => promotion_shell(cfg),
        Suite::EvacuationShell => evacuation_shell(cfg),
        Suite::HasseVsDual => hasse_vs_dual(cfg),
        Suite::MovesMatchClosedForm => moves_match(cfg),
        Suite::DualEdgesAreTranspositions => dual_edges(cfg),
    }
}

fn extensions_shell(cfg: &SuiteConfig) -> Result<RunReport> {
    guard_n(cfg.n)?;
    let complexes = all_subcomplexes(&KSubset::all(cfg.n, cfg.k)?)?;
    sweep(Suite::ExtensionsShell, cfg, &complexes, |x| {
        let mut t = Tally::default();
        if has_quasi_exchange(x).holds {
            for l in linear_extensions(x, OrderKind::Gale)? {
                t.record(is_shelling_order(&l), || {
                    format!("{l} is not a shelling order")
                });
            }
        }
        Ok(t)
    })
}

fn barycentric_coxeter(cfg: &SuiteConfig) -> Result<RunReport> {
    guard_n(cfg.n)?;
    let complexes = all_subcomplexes(&KSubset::all(cfg.n, cfg.k)?)?;
    sweep(Suite::BarycentricCoxeter, cfg, &complexes, |x| {
        let mut t = Tally::default();
        let matroid = is_matroid(x).holds;
        let coxeter = is_coxeter_matroid(&barycentric(x)?, OrderKind::Conf)?;
        t.record(matroid == coxeter, || {
            format!("X={x}: matroid={matroid}, coxeter={coxeter}")
        });
        Ok(t)
    })
}

fn conf_ideals_flag_shell(cfg: &SuiteConfig) -> Result<RunReport> {
    guard_n(cfg.n)?;
    let ambient = FlagTuple::all(cfg.n, cfg.k)?;
    let mut ideals = Vec::new();
    for y in all_subcomplexes(&ambient)? {
        if is_order_ideal(&y, OrderKind::Conf)? {
            ideals.push(y);
        }
    }
    sweep(Suite::ConfIdealsFlagShell, cfg, &ideals, |y| {
        let mut t = Tally::default();
        for l in linear_extensions(y, OrderKind::Conf)? {
            t.record(is_flag_shelling_order(&l), || {
                format!("{l} is not a flag shelling order")
            });
        }
        Ok(t)
    })
}

fn promotion_shell(cfg: &SuiteConfig) -> Result<RunReport> {
    let corpus = shelling_corpus(cfg)?;
    sweep(Suite::PromotionShell, cfg, &corpus, |c| {
        let mut t = Tally::default();
        let p = promote(c, GraphKind::Dual)?;
        t.record(is_shelling_order(&p), || {
            format!("promotion of {c} gives {p}")
        });
        if let Some(s) = appending_swap(c) {
            t.record(is_shelling_order(&s), || {
                format!("swapping the last pair of {c} gives {s}")
            });
        }
        Ok(t)
    })
}

fn evacuation_shell(cfg: &SuiteConfig) -> Result<RunReport> {
    let corpus = shelling_corpus(cfg)?;
    sweep(Suite::EvacuationShell, cfg, &corpus, |c| {
        let mut t = Tally::default();
        let e = evacuate(c, GraphKind::Dual)?;
        t.record(is_shelling_order(&e), || {
            format!("evacuation of {c} gives {e}")
        });
        let back = evacuate(&e, GraphKind::Dual)?;
        t.record(back == *c, || format!("evacuating {c} twice gives {back}"));
        Ok(t)
    })
}

fn moves_match(cfg: &SuiteConfig) -> Result<RunReport> {
    let corpus = shelling_corpus(cfg)?;
    sweep(Suite::MovesMatchClosedForm, cfg, &corpus, |c| {
        let mut t = Tally::default();
        let closed = promote(c, GraphKind::Dual)?;
        let moves = promote_via_moves(c, GraphKind::Dual)?;
        t.record(closed == moves, || {
            format!("{c}: closed form {closed}, moves {moves}")
        });
        Ok(t)
    })
}

fn hasse_vs_dual(cfg: &SuiteConfig) -> Result<RunReport> {
    guard_n(cfg.n)?;
    let ambient = KSubset::all(cfg.n, cfg.k)?;
    let mut posets = Vec::new();
    for x in all_subcomplexes(&ambient)? {
        if is_order_ideal(&x, OrderKind::Gale)? {
            posets.push(x);
        }
    }
    for lo in &ambient {
        for hi in &ambient {
            if lo.bruhat_leq(hi, OrderKind::Gale)? {
                posets.push(PureComplex::new(interval(lo, hi, OrderKind::Gale)?)?);
            }
        }
    }
    let hasse = GraphKind::Hasse(OrderKind::Gale);
    sweep(Suite::HasseVsDual, cfg, &posets, |x| {
        let mut t = Tally::default();
        for l in linear_extensions(x, OrderKind::Gale)? {
            let h = graph_of(&l, hasse)?;
            t.record(h.is_subgraph_of(&dual_graph(&l)), || {
                format!("{l}: Hasse graph not inside dual graph")
            });
            let (pd, ph) = (promote(&l, GraphKind::Dual)?, promote(&l, hasse)?);
            t.record(pd == ph, || {
                format!("{l}: dual promotion {pd}, Hasse promotion {ph}")
            });
        }
        Ok(t)
    })
}

fn dual_edges(cfg: &SuiteConfig) -> Result<RunReport> {
    guard_n(cfg.n)?;
    let complexes = all_subcomplexes(&KSubset::all(cfg.n, cfg.k)?)?;
    sweep(Suite::DualEdgesAreTranspositions, cfg, &complexes, |x| {
        let mut t = Tally::default();
        let c = x.to_sequence();
        let d = dual_graph(&c);
        for a in 1..=c.len() {
            for b in a + 1..=c.len() {
                let (p, q) = (c.get(a), c.get(b));
                let edge = d.has_edge(a, b);
                let oracle = transposition_neighbours(p, q)?;
                t.record(edge == oracle, || {
                    format!("X={x}: {p},{q} edge={edge}, transposition={oracle}")
                });
                if edge {
                    let comparable =
                        p.bruhat_leq(q, OrderKind::Gale)? || q.bruhat_leq(p, OrderKind::Gale)?;
                    t.record(comparable, || {
                        format!("X={x}: adjacent {p},{q} are Gale incomparable")
                    });
                }
            }
        }
        Ok(t)
    })
}
