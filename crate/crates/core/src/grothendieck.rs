//! Grothendieck-group classes and graded dimensions of Kac and simple modules.
//!
//! `[K_μ] = Σ_{𝔻 ∈ 𝒦(μ;n)} [𝕃_{μ(𝔻)}]` is unitriangular (the empty pattern
//! gives `𝕃_μ` itself, every other label is strictly larger), so the series of
//! a simple module is obtained by subtracting the series of the larger labels
//! from `HS(K_μ)`. The recursion never bottoms out because a singleton can
//! always be appended to row 1; it is cut at a degree bound `N` instead. Since
//! `HS(𝕃_ν)` starts in degree `|ν|`, labels with `|ν| > N` cannot affect
//! degrees `≤ N`, and the truncated result is exact up to `N`. As `𝕃_μ` is a
//! quotient of `K_μ`, its series vanishes above `|μ| + mn`, so `N = |μ| + mn`
//! gives the whole series.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::{default_kac_bound, enumerate_kac_patterns};
use crate::error::{Error, Result};
use crate::par;
use crate::partition::Partition;
use crate::series::HilbertSeries;
use crate::store::{best_records, cache_key, CacheRecord, SeriesStore};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Simple,
    Kac,
}

/// A finitely supported integer combination of simple or Kac classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrothendieckClass {
    pub basis: Basis,
    // no zero values
    coeffs: BTreeMap<Partition, BigInt>,
}

impl GrothendieckClass {
    pub fn zero(basis: Basis) -> GrothendieckClass {
        GrothendieckClass {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn coeff(&self, label: &Partition) -> BigInt {
        self.coeffs.get(label).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, label: Partition, coefficient: &BigInt) {
        let entry = self.coeffs.entry(label).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.coeffs.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &GrothendieckClass, factor: &BigInt) {
        assert_eq!(self.basis, other.basis, "adding classes in different bases");
        for (label, c) in &other.coeffs {
            self.add_term(label.clone(), &(c * factor));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drops every label with more than `size_bound` boxes.
    pub fn truncate(&self, size_bound: u32) -> GrothendieckClass {
        GrothendieckClass {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.size() <= size_bound)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }
}

fn check_rows(mu: &Partition, n: usize) -> Result<()> {
    if mu.length() > n {
        return Err(Error::Precondition(format!("{mu} has more than {n} rows")));
    }
    Ok(())
}

fn check_dims(mu: &Partition, m: u32, n: u32) -> Result<()> {
    if n > m {
        return Err(Error::Precondition(format!("n = {n} exceeds m = {m}")));
    }
    check_rows(mu, n as usize)
}

/// `[K_λ]` in the simple basis, one term per pattern of `𝒦(λ;n)`.
pub fn kac_class(lambda: &Partition, n: usize) -> Result<GrothendieckClass> {
    let family = enumerate_kac_patterns(lambda, n, default_kac_bound(n))?;
    let mut class = GrothendieckClass::zero(Basis::Simple);
    for (label, k) in family.label_counts() {
        class.add_term(label, &BigInt::from(k));
    }
    Ok(class)
}

/// `dim(S_μℂᵐ) · dim(S_μℂⁿ) · t^{|μ|} · (1+t)^{mn}`.
pub fn hilbert_series_kac(mu: &Partition, m: u32, n: u32) -> Result<HilbertSeries> {
    check_dims(mu, m, n)?;
    Ok(kac_series(mu, m, n))
}

fn kac_series(mu: &Partition, m: u32, n: u32) -> HilbertSeries {
    let rank = BigInt::from(mu.schur_dim(m)) * BigInt::from(mu.schur_dim(n));
    HilbertSeries::shifted_binomial(&rank, mu.size(), m * n)
}

/// `HS(𝕃_μ)` up to degree `trunc` (default `|μ| + mn`, the whole series),
/// computed with a process-wide memo.
pub fn hilbert_series_simple(mu: &Partition, m: u32, n: u32, trunc: Option<u32>) -> Result<HilbertSeries> {
    HilbertCalculator::global().simple(mu, m, n, trunc)
}

/// `[𝕃_μ]` in the Kac basis, modulo classes of partitions with more than
/// `size_bound` boxes.
pub fn simple_in_kac_basis(mu: &Partition, n: usize, size_bound: u32) -> Result<GrothendieckClass> {
    check_rows(mu, n)?;
    if mu.size() > size_bound {
        return Ok(GrothendieckClass::zero(Basis::Kac));
    }
    let calc = HilbertCalculator::global();
    let graph = calc.label_closure_pruned(mu, n, size_bound, |_| true)?;
    let mut done: HashMap<Partition, GrothendieckClass> = HashMap::new();
    for level in levels_descending(&graph) {
        let computed = par::map(&level, |nu| {
            let mut class = GrothendieckClass::zero(Basis::Kac);
            class.add_term(nu.clone(), &BigInt::one());
            for label in &graph[nu] {
                class.add_scaled(&done[label], &-BigInt::one());
            }
            class
        });
        done.extend(level.into_iter().zip(computed));
    }
    Ok(done.remove(mu).expect("root is in the closure"))
}

/// Partitions of the closure grouped by size, largest size first.
fn levels_descending(graph: &HashMap<Partition, Vec<Partition>>) -> Vec<Vec<Partition>> {
    let mut by_size: BTreeMap<u32, Vec<Partition>> = BTreeMap::new();
    for nu in graph.keys() {
        by_size.entry(nu.size()).or_default().push(nu.clone());
    }
    by_size
        .into_values()
        .rev()
        .map(|mut level| {
            level.sort();
            level
        })
        .collect()
}

#[derive(Clone, Debug)]
struct Stored {
    trunc: u32,
    series: HilbertSeries,
}

#[derive(Clone, Debug)]
struct KacLabels {
    bound: u32,
    // labels of nonempty patterns with their Dyck sizes, multiplicities kept
    labels: Arc<Vec<(Partition, u32)>>,
}

/// Memoizing evaluator of simple-module Hilbert series.
///
/// Entries are keyed by `(μ, m, n)` and hold the largest truncation computed
/// so far; a request is served from the memo whenever that truncation covers
/// it. Readers share the lock, insertions are serialized.
#[derive(Debug, Default)]
pub struct HilbertCalculator {
    series: RwLock<HashMap<(Partition, u32, u32), Stored>>,
    kac: RwLock<HashMap<(Partition, usize), KacLabels>>,
    store: Option<SeriesStore>,
}

impl HilbertCalculator {
    pub fn new() -> HilbertCalculator {
        HilbertCalculator::default()
    }

    /// A calculator backed by the on-disk cache at `path`.
    pub fn with_cache(path: impl AsRef<Path>) -> Result<HilbertCalculator> {
        let (store, records) = SeriesStore::open(path)?;
        let series = best_records(records)
            .into_values()
            .map(|r| {
                (
                    (r.mu, r.m, r.n),
                    Stored {
                        trunc: r.trunc,
                        series: r.series,
                    },
                )
            })
            .collect();
        Ok(HilbertCalculator {
            series: RwLock::new(series),
            kac: RwLock::default(),
            store: Some(store),
        })
    }

    pub fn global() -> &'static HilbertCalculator {
        static GLOBAL: OnceLock<HilbertCalculator> = OnceLock::new();
        GLOBAL.get_or_init(HilbertCalculator::new)
    }

    /// Number of memoized series.
    pub fn memo_len(&self) -> usize {
        self.series.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn simple(&self, mu: &Partition, m: u32, n: u32, trunc: Option<u32>) -> Result<HilbertSeries> {
        check_dims(mu, m, n)?;
        let cap = mu.size() + m * n;
        let trunc = trunc.unwrap_or(cap);
        if let Some(s) = self.lookup(mu, m, n, trunc) {
            return Ok(s);
        }
        let graph = self.label_closure_pruned(mu, n as usize, trunc, |nu| {
            self.lookup(nu, m, n, trunc).is_none()
        })?;
        let mut done: HashMap<Partition, HilbertSeries> = HashMap::new();
        let mut fresh = Vec::new();
        for level in levels_descending(&graph) {
            let computed = par::map(&level, |nu| -> Result<HilbertSeries> {
                let mut s = kac_series(nu, m, n).truncate(trunc);
                for label in &graph[nu] {
                    match done.get(label) {
                        Some(t) => s -= t,
                        None => s -= &self.lookup(label, m, n, trunc).expect("pruned labels are memoized"),
                    }
                }
                if let Some((degree, c)) = s.first_negative() {
                    return Err(Error::NegativeCoefficient {
                        label: nu.to_string(),
                        degree,
                        coefficient: c.to_string(),
                    });
                }
                Ok(s)
            });
            for (nu, s) in level.into_iter().zip(computed) {
                let s = s?;
                fresh.push((nu.clone(), s.clone()));
                done.insert(nu, s);
            }
        }
        self.insert(m, n, trunc, fresh)?;
        Ok(done.remove(mu).expect("root is in the closure"))
    }

    fn lookup(&self, mu: &Partition, m: u32, n: u32, trunc: u32) -> Option<HilbertSeries> {
        let want = trunc.min(mu.size() + m * n);
        let memo = self.series.read().unwrap_or_else(|e| e.into_inner());
        let stored = memo.get(&(mu.clone(), m, n))?;
        (stored.trunc >= want).then(|| stored.series.truncate(trunc))
    }

    fn insert(&self, m: u32, n: u32, trunc: u32, fresh: Vec<(Partition, HilbertSeries)>) -> Result<()> {
        let mut records = Vec::new();
        {
            let mut memo = self.series.write().unwrap_or_else(|e| e.into_inner());
            for (nu, series) in fresh {
                // a truncation past |ν| + mn is exact; store it as such
                let eff = trunc.min(nu.size() + m * n);
                let key = (nu, m, n);
                if memo.get(&key).is_some_and(|old| old.trunc >= eff) {
                    continue;
                }
                if self.store.is_some() {
                    records.push(CacheRecord {
                        key: cache_key(&key.0, m, n),
                        mu: key.0.clone(),
                        m,
                        n,
                        trunc: eff,
                        series: series.clone(),
                    });
                }
                memo.insert(key, Stored { trunc: eff, series });
            }
        }
        match &self.store {
            Some(store) => store.append(&records),
            None => Ok(()),
        }
    }

    /// The labels of nonempty patterns in `𝒦(ν;n)` with Dyck size at most
    /// `bound`, enumerating only when no memoized family covers the bound.
    fn kac_labels(&self, nu: &Partition, n: usize, bound: u32) -> Result<Vec<Partition>> {
        let key = (nu.clone(), n);
        let cached = self
            .kac
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&key)
            .filter(|k| k.bound >= bound)
            .map(|k| Arc::clone(&k.labels));
        let labels = match cached {
            Some(labels) => labels,
            None => {
                let family = enumerate_kac_patterns(nu, n, bound)?;
                let labels: Arc<Vec<(Partition, u32)>> = Arc::new(
                    family
                        .members
                        .into_iter()
                        .filter(|mem| mem.d > 0)
                        .map(|mem| (mem.label, mem.d))
                        .collect(),
                );
                let mut memo = self.kac.write().unwrap_or_else(|e| e.into_inner());
                if memo.get(&key).is_none_or(|k| k.bound < bound) {
                    memo.insert(
                        key,
                        KacLabels {
                            bound,
                            labels: Arc::clone(&labels),
                        },
                    );
                }
                labels
            }
        };
        Ok(labels
            .iter()
            .filter(|(_, d)| *d <= bound)
            .map(|(p, _)| p.clone())
            .collect())
    }

    /// Every partition reachable from `root` through nonempty `𝒦` labels of
    /// size at most `limit`, mapped to its own labels. Partitions for which
    /// `expand` is false appear only as labels.
    fn label_closure_pruned(
        &self,
        root: &Partition,
        n: usize,
        limit: u32,
        expand: impl Fn(&Partition) -> bool + Sync,
    ) -> Result<HashMap<Partition, Vec<Partition>>> {
        let mut graph: HashMap<Partition, Vec<Partition>> = HashMap::new();
        let mut frontier = vec![root.clone()];
        let max_d = default_kac_bound(n);
        while !frontier.is_empty() {
            let found = par::map(&frontier, |nu| self.kac_labels(nu, n, max_d.min(limit - nu.size())));
            let mut next = BTreeSet::new();
            for (nu, labels) in frontier.into_iter().zip(found) {
                let labels = labels?;
                for label in &labels {
                    if !graph.contains_key(label) && label != &nu && expand(label) {
                        next.insert(label.clone());
                    }
                }
                graph.insert(nu, labels);
            }
            next.retain(|p| !graph.contains_key(p));
            frontier = next.into_iter().collect();
        }
        Ok(graph)
    }
}
