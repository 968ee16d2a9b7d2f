//! Canonical labelling and isomorphism tests.
//!
//! The public canonical key is the lexicographically smallest graph6 string
//! over all relabellings, found by a column-wise branch-and-bound: vertices are
//! placed one position at a time and only candidates whose adjacency column to
//! the placed prefix is minimal can extend it (any other choice is already
//! lexicographically beaten). The search is seeded and pruned with
//! automorphisms discovered by an equitable-partition-refinement search, which
//! also yields the cheap isomorphism-invariant labelling the enumerator uses
//! for dedup.

use crate::formats::emit_graph6;
use crate::graph::{GraphError, SmallGraph, VertexSet};

/// Result of canonicalization: `perm[v]` is the canonical label of vertex `v`,
/// and `key` is the graph6 string of the relabelled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub perm: Vec<u8>,
    pub key: String,
}

// ---------------------------------------------------------------------------
// Equitable refinement
// ---------------------------------------------------------------------------

/// Split cells by neighbour counts into every cell until stable. Sub-cells
/// replace their parent in place, ordered by ascending count, so the procedure
/// commutes with relabelling.
fn refine(g: &SmallGraph, cells: &mut Vec<u32>) {
    loop {
        let mut split_at: Option<(usize, Vec<u32>)> = None;
        'scan: for c_idx in 0..cells.len() {
            let cell = cells[c_idx];
            if cell.count_ones() <= 1 {
                continue;
            }
            for s_idx in 0..cells.len() {
                let splitter = cells[s_idx];
                let mut buckets = [0u32; 33];
                let mut used = 0u64;
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let cnt = (g.row(v) & splitter).count_ones() as usize;
                    buckets[cnt] |= 1 << v;
                    used |= 1 << cnt;
                }
                if used.count_ones() > 1 {
                    let parts: Vec<u32> = buckets.iter().copied().filter(|&b| b != 0).collect();
                    split_at = Some((c_idx, parts));
                    break 'scan;
                }
            }
        }
        match split_at {
            Some((idx, parts)) => {
                cells.splice(idx..idx + 1, parts);
            }
            None => break,
        }
    }
}

fn is_automorphism(g: &SmallGraph, perm: &[u8]) -> bool {
    g.permuted(perm) == *g
}

/// Union-find over vertices, seeded from the generators that fix `base`
/// pointwise. Used to skip branch candidates provably equivalent to one
/// already explored.
fn orbit_partition(n: usize, gens: &[Vec<u8>], base: &[u8]) -> [u8; 32] {
    let mut parent: [u8; 32] = [0; 32];
    for v in 0..n {
        parent[v] = v as u8;
    }
    fn find(parent: &mut [u8; 32], v: u8) -> u8 {
        let mut v = v;
        while parent[v as usize] != v {
            parent[v as usize] = parent[parent[v as usize] as usize];
            v = parent[v as usize];
        }
        v
    }
    for gen in gens {
        if base.iter().any(|&b| gen[b as usize] != b) {
            continue;
        }
        for v in 0..n {
            let a = find(&mut parent, v as u8);
            let b = find(&mut parent, gen[v]);
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    for v in 0..n {
        parent[v] = find(&mut parent, v as u8);
    }
    parent
}

// ---------------------------------------------------------------------------
// Refinement-based canonical search (internal key + automorphism generators)
// ---------------------------------------------------------------------------

pub(crate) struct RefinedCanon {
    /// Canonically relabelled graph; equal across isomorphic inputs. This is
    /// the enumerator's dedup key and is unrelated to the public lex-min key.
    pub canon: SmallGraph,
    /// Automorphism generators of the input graph discovered by the search.
    pub generators: Vec<Vec<u8>>,
}

struct RefineSearch<'a> {
    g: &'a SmallGraph,
    n: usize,
    first: Option<(SmallGraph, Vec<u8>)>,
    best: Option<(SmallGraph, Vec<u8>)>,
    gens: Vec<Vec<u8>>,
}

impl RefineSearch<'_> {
    fn record_aut(&mut self, a: &[u8], b: &[u8]) {
        // a and b map vertices to positions and label the graph identically,
        // so position-matching them gives an automorphism
        let mut inv_b = [0u8; 32];
        for v in 0..self.n {
            inv_b[b[v] as usize] = v as u8;
        }
        let gamma: Vec<u8> = (0..self.n).map(|v| inv_b[a[v] as usize]).collect();
        if gamma.iter().enumerate().all(|(v, &w)| v as u8 == w) {
            return;
        }
        debug_assert!(is_automorphism(self.g, &gamma));
        if !self.gens.contains(&gamma) {
            self.gens.push(gamma);
        }
    }

    fn dfs(&mut self, cells: &[u32], base: &mut Vec<u8>) {
        let target = cells
            .iter()
            .filter(|c| c.count_ones() > 1)
            .min_by_key(|c| c.count_ones())
            .copied();
        let Some(target) = target else {
            // discrete partition: position i holds the vertex in cells[i]
            let mut perm = vec![0u8; self.n];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell.trailing_zeros() as usize] = pos as u8;
            }
            let h = self.g.permuted(&perm);
            if let Some((fh, fperm)) = &self.first {
                if h == *fh {
                    let fperm = fperm.clone();
                    self.record_aut(&fperm, &perm);
                }
            } else {
                self.first = Some((h, perm.clone()));
            }
            match &self.best {
                None => self.best = Some((h, perm)),
                Some((bh, bperm)) => match h.cmp(bh) {
                    std::cmp::Ordering::Less => self.best = Some((h, perm)),
                    std::cmp::Ordering::Equal => {
                        let bperm = bperm.clone();
                        self.record_aut(&bperm, &perm);
                    }
                    std::cmp::Ordering::Greater => {}
                },
            }
            return;
        };
        // first smallest non-singleton cell is the branch target
        let t_idx = cells
            .iter()
            .position(|&c| c == target)
            .expect("target cell present");
        let mut tried: Vec<u8> = Vec::new();
        let mut bits = target;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !tried.is_empty() {
                let orbits = orbit_partition(self.n, &self.gens, base);
                if tried.iter().any(|&u| orbits[u as usize] == orbits[v]) {
                    continue;
                }
            }
            tried.push(v as u8);
            let mut child: Vec<u32> = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t_idx]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t_idx + 1..]);
            refine(self.g, &mut child);
            base.push(v as u8);
            self.dfs(&child, base);
            base.pop();
        }
    }
}

pub(crate) fn refined_canonical(g: &SmallGraph) -> RefinedCanon {
    let n = g.order();
    if n == 0 {
        return RefinedCanon {
            canon: *g,
            generators: Vec::new(),
        };
    }
    let mut cells = vec![VertexSet::full(n).0];
    refine(g, &mut cells);
    let mut search = RefineSearch {
        g,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
    };
    search.dfs(&cells, &mut Vec::new());
    RefinedCanon {
        canon: search.best.expect("at least one leaf").0,
        generators: search.gens,
    }
}

/// Cheap canonical relabelling for dedup sets: equal across isomorphic graphs,
/// distinct otherwise, but not the lexicographic minimum [`canonical_form`]
/// computes.
pub(crate) fn dedup_key(g: &SmallGraph) -> SmallGraph {
    refined_canonical(g).canon
}

// ---------------------------------------------------------------------------
// Public canonical form: global lexicographic minimum
// ---------------------------------------------------------------------------

struct LexSearch<'a> {
    g: &'a SmallGraph,
    n: usize,
    gens: Vec<Vec<u8>>,
    best_cols: Vec<u32>,
    best_placed: Vec<u8>,
}

impl LexSearch<'_> {
    /// Adjacency column of `u` against the placed prefix; the earliest placed
    /// vertex contributes the highest bit, matching string order.
    #[inline]
    fn column(&self, placed: &[u8], u: usize) -> u32 {
        let mut c = 0u32;
        for &p in placed {
            c = c << 1 | self.g.has_edge(p as usize, u) as u32;
        }
        c
    }

    /// Greedily complete the current path by always taking the minimal column
    /// with the smallest label, and install the result as the incumbent best.
    fn rebest(&mut self, placed: &[u8], used: u32) {
        let mut p = placed.to_vec();
        let mut used = used;
        while p.len() < self.n {
            let t = p.len();
            let mut cmin = u32::MAX;
            let mut arg = 0usize;
            for u in 0..self.n {
                if used >> u & 1 == 1 {
                    continue;
                }
                let c = self.column(&p, u);
                if c < cmin {
                    cmin = c;
                    arg = u;
                }
            }
            self.best_cols[t] = cmin;
            p.push(arg as u8);
            used |= 1 << arg;
        }
        self.best_placed = p;
    }

    fn dfs(&mut self, placed: &mut Vec<u8>, used: u32) {
        let t = placed.len();
        if t == self.n {
            if *placed != self.best_placed {
                // identical strings from two orderings: an automorphism
                let mut gamma = vec![0u8; self.n];
                for i in 0..self.n {
                    gamma[self.best_placed[i] as usize] = placed[i];
                }
                debug_assert!(is_automorphism(self.g, &gamma));
                if !self.gens.contains(&gamma) {
                    self.gens.push(gamma);
                }
            }
            return;
        }
        let mut cmin = u32::MAX;
        for u in 0..self.n {
            if used >> u & 1 == 0 {
                cmin = cmin.min(self.column(placed, u));
            }
        }
        match cmin.cmp(&self.best_cols[t]) {
            std::cmp::Ordering::Greater => return,
            std::cmp::Ordering::Less => self.rebest(placed, used),
            std::cmp::Ordering::Equal => {}
        }
        let cands: Vec<u8> = (0..self.n)
            .filter(|&u| used >> u & 1 == 0 && self.column(placed, u) == cmin)
            .map(|u| u as u8)
            .collect();
        let mut tried: Vec<u8> = Vec::new();
        for &u in &cands {
            if !tried.is_empty() {
                let orbits = orbit_partition(self.n, &self.gens, placed);
                if tried.iter().any(|&w| orbits[w as usize] == orbits[u as usize]) {
                    continue;
                }
            }
            tried.push(u);
            placed.push(u);
            self.dfs(placed, used | 1 << u);
            placed.pop();
        }
    }
}

/// Canonical form under the global lexicographic-minimum labelling: the key is
/// the smallest graph6 string over all n! relabellings of `g`.
pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            perm: Vec::new(),
            key: emit_graph6(g),
        };
    }
    let rc = refined_canonical(g);
    let mut search = LexSearch {
        g,
        n,
        gens: rc.generators,
        best_cols: vec![0u32; n],
        best_placed: Vec::new(),
    };
    search.rebest(&[], 0);
    search.dfs(&mut Vec::new(), 0);
    let mut perm = vec![0u8; n];
    for (pos, &v) in search.best_placed.iter().enumerate() {
        perm[v as usize] = pos as u8;
    }
    let key = emit_graph6(&g.permuted(&perm));
    CanonicalForm { perm, key }
}

/// True exactly when the canonical keys agree.
pub fn are_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    // the cheap invariant settles most negatives before the lex-min search
    if dedup_key(a) != dedup_key(b) {
        return false;
    }
    canonical_form(a).key == canonical_form(b).key
}

/// Smallest vertex `u` (with the index of the matching target) such that
/// `g - u` is isomorphic to one of `targets`. Every target must have order
/// `g.order() - 1`.
pub fn find_deletion_isomorph(
    g: &SmallGraph,
    targets: &[SmallGraph],
) -> Result<Option<(usize, usize)>, GraphError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::VertexOutOfRange { v: 0, n: 0 });
    }
    for t in targets {
        if t.order() + 1 != n {
            return Err(GraphError::OrderTooLarge(t.order()));
        }
    }
    let target_keys: Vec<SmallGraph> = targets.iter().map(dedup_key).collect();
    for u in 0..n {
        let h = dedup_key(&g.delete_vertex(u).expect("u < n"));
        if let Some(idx) = target_keys.iter().position(|k| *k == h) {
            return Ok(Some((u, idx)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_graph6;

    /// Brute-force minimum graph6 string over all n! relabellings.
    fn oracle_key(g: &SmallGraph) -> String {
        let n = g.order();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut best: Option<String> = None;
        permute(&mut perm, 0, &mut |p| {
            let s = emit_graph6(&g.permuted(p));
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        });
        best.unwrap()
    }

    fn permute(perm: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    fn all_labeled_graphs(n: usize) -> Vec<SmallGraph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        (0u64..1 << pairs.len())
            .map(|bits| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                SmallGraph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn matches_oracle_on_all_small_graphs() {
        for n in 0..=4 {
            for g in all_labeled_graphs(n) {
                assert_eq!(canonical_form(&g).key, oracle_key(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn matches_oracle_on_degree_cell_trap() {
        // K2 + C4: an ascending-degree prefix would start with the adjacent
        // pair; the true minimum starts with two non-adjacent C4 vertices
        let g = SmallGraph::from_edges(6, &[(0, 1), (2, 3), (3, 4), (4, 5), (5, 2)]).unwrap();
        assert_eq!(canonical_form(&g).key, oracle_key(&g));
        let c5 = SmallGraph::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5).key, oracle_key(&c5));
    }

    #[test]
    fn perm_reproduces_key() {
        let g = parse_graph6("IheA@GUAo").unwrap();
        let cf = canonical_form(&g);
        assert_eq!(emit_graph6(&g.permuted(&cf.perm)), cf.key);
    }

    #[test]
    fn eleven_classes_of_order_four() {
        let keys: std::collections::HashSet<String> = all_labeled_graphs(4)
            .iter()
            .map(|g| canonical_form(g).key)
            .collect();
        assert_eq!(keys.len(), 11);
        let dedup: std::collections::HashSet<SmallGraph> =
            all_labeled_graphs(4).iter().map(dedup_key).collect();
        assert_eq!(dedup.len(), 11);
    }

    #[test]
    fn isomorphism_checks() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let relabelled = c5.permuted(&[3, 1, 4, 0, 2]);
        assert!(are_isomorphic(&c5, &relabelled));
        let p5 = SmallGraph::path(5).unwrap();
        assert!(!are_isomorphic(&c5, &p5));
    }

    #[test]
    fn deletion_isomorph_basics() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let p4 = SmallGraph::path(4).unwrap();
        // deleting any C5 vertex leaves P4; smallest index wins
        assert_eq!(find_deletion_isomorph(&c5, &[p4]).unwrap(), Some((0, 0)));
        let k4 = SmallGraph::complete(4).unwrap();
        assert_eq!(find_deletion_isomorph(&c5, &[k4]).unwrap(), None);
        assert!(find_deletion_isomorph(&c5, &[SmallGraph::path(3).unwrap()]).is_err());
    }

    #[test]
    fn canonical_invariance_under_permutation() {
        let g = parse_graph6("Hs_ZJGW").unwrap();
        let key = canonical_form(&g).key;
        let perms: [[u8; 9]; 3] = [
            [8, 7, 6, 5, 4, 3, 2, 1, 0],
            [1, 2, 3, 4, 5, 6, 7, 8, 0],
            [4, 0, 8, 2, 6, 1, 5, 3, 7],
        ];
        for p in perms {
            assert_eq!(canonical_form(&g.permuted(&p)).key, key);
            assert_eq!(dedup_key(&g.permuted(&p)), dedup_key(&g));
        }
    }
}
