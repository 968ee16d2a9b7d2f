//! Exhaustive enumeration of triangle-free graphs up to isomorphism.
//!
//! The generator works level by level: every triangle-free graph of order n
//! arises from one of order n-1 by appending a vertex whose neighbourhood is
//! an independent set (deleting a vertex keeps a graph triangle-free, so no
//! class is missed). Duplicate classes across parents are removed with a
//! canonical-key set. Planarity filtering prunes whole subtrees, which is
//! sound because subgraphs of planar graphs stay planar.

use crate::canon::{canonical_form, dedup_key};
use crate::colour::chi_k;
use crate::graph::{SmallGraph, VertexSet};
use crate::planar::{is_maximal_tfp, is_planar};
use rayon::prelude::*;
use std::collections::HashMap;
use thiserror::Error;

/// Orders above this are out of desk scale for the full sweep.
pub const MAX_ENUMERATION_ORDER: usize = 12;

/// Orders above this make the labeled brute-force oracle too large.
pub const MAX_BRUTE_FORCE_ORDER: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {0} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}")]
    OrderTooLarge(usize),
    #[error("order {0} exceeds the brute-force limit {MAX_BRUTE_FORCE_ORDER}")]
    BruteForceTooLarge(usize),
    #[error("enumeration needs order at least 1")]
    OrderZero,
}

/// Comparison applied by the chromatic filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiCmp {
    Eq,
    Le,
    Ge,
}

/// Keep only graphs whose k-defective chromatic number compares as stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiFilter {
    pub k: usize,
    pub cmp: ChiCmp,
    pub value: usize,
}

impl ChiFilter {
    fn accepts(&self, g: &SmallGraph) -> bool {
        let chi = chi_k(g, self.k);
        match self.cmp {
            ChiCmp::Eq => chi == self.value,
            ChiCmp::Le => chi <= self.value,
            ChiCmp::Ge => chi >= self.value,
        }
    }
}

/// What to enumerate. Maximality implies the planarity requirement.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub order: usize,
    pub require_planar: bool,
    pub require_maximal_tfp: bool,
    pub chi_filter: Option<ChiFilter>,
}

impl SearchConfig {
    pub fn new(order: usize) -> Self {
        SearchConfig {
            order,
            require_planar: false,
            require_maximal_tfp: false,
            chi_filter: None,
        }
    }
}

/// Counters describing one enumeration run.
///
/// `generated` counts distinct isomorphism classes materialized across all
/// levels, the starting single-vertex class included. `pruned_dup` counts
/// augmentation children that landed on an already-seen class. Both are
/// independent of thread count and parent partitioning.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub generated: u64,
    pub emitted: u64,
    pub pruned_nonplanar: u64,
    pub pruned_dup: u64,
}

/// All independent sets of `g` as bitmasks, the empty set included.
fn independent_sets(g: &SmallGraph) -> Vec<u32> {
    fn rec(g: &SmallGraph, mask: u32, cand: u32, out: &mut Vec<u32>) {
        out.push(mask);
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            rec(g, mask | 1 << v, c & !g.row(v), out);
        }
    }
    let mut out = Vec::new();
    rec(g, 0, VertexSet::full(g.order()).0, &mut out);
    out
}

/// One representative per isomorphism class of triangle-free graphs of
/// `cfg.order` passing the filters, sorted by canonical graph6 key, plus the
/// run's counters. Every returned graph is in canonical labelling.
pub fn enumerate_triangle_free(
    cfg: &SearchConfig,
) -> Result<(Vec<SmallGraph>, EnumerationStats), EnumerateError> {
    if cfg.order == 0 {
        return Err(EnumerateError::OrderZero);
    }
    if cfg.order > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::OrderTooLarge(cfg.order));
    }
    let require_planar = cfg.require_planar || cfg.require_maximal_tfp;
    let mut stats = EnumerationStats::default();
    let mut alive = vec![SmallGraph::empty(1).expect("single vertex fits")];
    stats.generated = 1;

    for _ in 2..=cfg.order {
        let batches: Vec<(u64, Vec<SmallGraph>)> = alive
            .par_iter()
            .map(|parent| {
                let sets = independent_sets(parent);
                let keys: Vec<SmallGraph> = sets
                    .iter()
                    .map(|&s| {
                        let child = parent
                            .add_vertex(VertexSet(s))
                            .expect("child order within bounds");
                        dedup_key(&child)
                    })
                    .collect();
                (sets.len() as u64, keys)
            })
            .collect();

        let mut children = 0u64;
        let mut seen: HashMap<SmallGraph, bool> = HashMap::new();
        for (count, keys) in batches {
            children += count;
            for key in keys {
                seen.entry(key)
                    .or_insert_with(|| !require_planar || is_planar(&key));
            }
        }
        stats.generated += seen.len() as u64;
        stats.pruned_dup += children - seen.len() as u64;
        stats.pruned_nonplanar += seen.values().filter(|&&keep| !keep).count() as u64;
        alive = seen
            .into_iter()
            .filter_map(|(key, keep)| keep.then_some(key))
            .collect();
        alive.sort_unstable();
    }

    let mut emitted: Vec<(String, SmallGraph)> = alive
        .par_iter()
        .filter(|g| {
            if cfg.require_maximal_tfp
                && !is_maximal_tfp(g).expect("survivors are triangle-free and planar")
            {
                return false;
            }
            cfg.chi_filter.as_ref().is_none_or(|f| f.accepts(g))
        })
        .map(|g| {
            let cf = canonical_form(g);
            (cf.key.clone(), g.permuted(&cf.perm))
        })
        .collect();
    emitted.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    stats.emitted = emitted.len() as u64;
    Ok((emitted.into_iter().map(|(_, g)| g).collect(), stats))
}

/// Independent completeness oracle: every isomorphism class of simple graphs
/// of order `n`, found by exhausting all labeled graphs, sorted.
pub fn brute_force_enumerate(n: usize) -> Result<Vec<SmallGraph>, EnumerateError> {
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(EnumerateError::BruteForceTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut classes: Vec<SmallGraph> = (0u64..1 << pairs.len())
        .into_par_iter()
        .map(|bits| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            dedup_key(&SmallGraph::from_edges(n, &edges).expect("valid edges"))
        })
        .collect();
    classes.sort_unstable();
    classes.dedup();
    Ok(classes)
}

/// All triangle-free (optionally planar) graphs of order `n` with k-defective
/// chromatic number exactly `m`, up to isomorphism.
pub fn extremal_search(
    n: usize,
    k: usize,
    m: usize,
    require_planar: bool,
) -> Result<Vec<SmallGraph>, EnumerateError> {
    let cfg = SearchConfig {
        order: n,
        require_planar,
        require_maximal_tfp: false,
        chi_filter: Some(ChiFilter {
            k,
            cmp: ChiCmp::Eq,
            value: m,
        }),
    };
    enumerate_triangle_free(&cfg).map(|(graphs, _)| graphs)
}

/// Smallest order in `1..=max_order` where [`extremal_search`] is non-empty,
/// which is the extremal function value once any witness exists in range.
pub fn smallest_extremal_order(
    k: usize,
    m: usize,
    require_planar: bool,
    max_order: usize,
) -> Result<Option<usize>, EnumerateError> {
    for n in 1..=max_order {
        if !extremal_search(n, k, m, require_planar)?.is_empty() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::emit_graph6;

    fn tf_count(n: usize) -> u64 {
        let (graphs, stats) = enumerate_triangle_free(&SearchConfig::new(n)).unwrap();
        assert_eq!(graphs.len() as u64, stats.emitted);
        stats.emitted
    }

    #[test]
    fn triangle_free_class_counts() {
        for (n, expect) in [(1, 1), (2, 2), (3, 3), (4, 7), (5, 14), (6, 38), (7, 107)] {
            assert_eq!(tf_count(n), expect, "order {n}");
        }
    }

    #[test]
    fn brute_force_class_counts() {
        assert_eq!(brute_force_enumerate(3).unwrap().len(), 4);
        assert_eq!(brute_force_enumerate(4).unwrap().len(), 11);
        assert_eq!(brute_force_enumerate(5).unwrap().len(), 34);
        let tf4 = brute_force_enumerate(4)
            .unwrap()
            .iter()
            .filter(|g| g.is_triangle_free())
            .count();
        assert_eq!(tf4, 7);
        assert_eq!(
            brute_force_enumerate(7),
            Err(EnumerateError::BruteForceTooLarge(7))
        );
    }

    #[test]
    fn augmentation_matches_brute_force_classes() {
        for n in 1..=5 {
            let (mine, _) = enumerate_triangle_free(&SearchConfig::new(n)).unwrap();
            let mut mine: Vec<SmallGraph> = mine.iter().map(dedup_key).collect();
            mine.sort_unstable();
            let theirs: Vec<SmallGraph> = brute_force_enumerate(n)
                .unwrap()
                .into_iter()
                .filter(|g| g.is_triangle_free())
                .collect();
            assert_eq!(mine, theirs, "order {n}");
        }
    }

    #[test]
    fn emitted_graphs_satisfy_filters() {
        let cfg = SearchConfig {
            order: 6,
            require_planar: true,
            require_maximal_tfp: true,
            chi_filter: None,
        };
        let (graphs, stats) = enumerate_triangle_free(&cfg).unwrap();
        assert!(stats.emitted <= stats.generated);
        for g in &graphs {
            assert!(g.is_triangle_free());
            assert!(is_planar(g));
            assert!(is_maximal_tfp(g).unwrap());
            let top = g.delete_vertex(g.order() - 1).unwrap();
            assert!(top.is_triangle_free());
        }
    }

    #[test]
    fn planar_filter_only_removes() {
        let all = enumerate_triangle_free(&SearchConfig::new(6)).unwrap().1;
        let planar = enumerate_triangle_free(&SearchConfig {
            order: 6,
            require_planar: true,
            require_maximal_tfp: false,
            chi_filter: None,
        })
        .unwrap()
        .1;
        assert!(planar.emitted <= all.emitted);
        assert!(all.pruned_dup > 0);
    }

    #[test]
    fn smallest_planar_ordinary_chromatic_three() {
        assert_eq!(smallest_extremal_order(0, 3, true, 5).unwrap(), Some(5));
        assert!(extremal_search(4, 0, 3, true).unwrap().is_empty());
        assert!(!extremal_search(5, 0, 3, true).unwrap().is_empty());
    }

    #[test]
    fn rejects_out_of_range_orders() {
        assert_eq!(
            enumerate_triangle_free(&SearchConfig::new(0)).unwrap_err(),
            EnumerateError::OrderZero
        );
        assert_eq!(
            enumerate_triangle_free(&SearchConfig::new(13)).unwrap_err(),
            EnumerateError::OrderTooLarge(13)
        );
    }

    #[test]
    fn output_is_deterministic_across_thread_counts() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                let (graphs, stats) = enumerate_triangle_free(&SearchConfig::new(6)).unwrap();
                let lines: Vec<String> = graphs.iter().map(|g| emit_graph6(g)).collect();
                (lines, stats)
            })
        };
        assert_eq!(run(1), run(3));
    }
}
