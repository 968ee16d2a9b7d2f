//! Small simple graphs as fixed-size adjacency bitmasks.
//!
//! Everything in this crate works on graphs of order at most 32, which keeps a
//! graph a flat `Copy` value: one `u32` neighbourhood mask per vertex. All
//! mutating operations return a fresh graph; values are immutable once built.

use thiserror::Error;

/// Hard cap on the number of vertices (one bit per vertex in a `u32` row).
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the maximum of {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge ({u},{v}) already present")]
    EdgeExists { u: usize, v: usize },
    #[error("edge ({u},{v}) not present")]
    EdgeMissing { u: usize, v: usize },
}

/// A set of vertices, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Iterate members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Invariants, checked in debug builds on every construction: the adjacency
/// relation is symmetric and irreflexive, and no row has bits at or above
/// `n` set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<SmallGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(SmallGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Build from an explicit edge list. Duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<SmallGraph, GraphError> {
        let mut g = SmallGraph::empty(n)?;
        for &(u, v) in edges {
            g = g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<SmallGraph, GraphError> {
        let mut g = SmallGraph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).0 & !(1 << v);
        }
        g.check();
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<SmallGraph, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexOutOfRange { v: n, n });
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SmallGraph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<SmallGraph, GraphError> {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        SmallGraph::from_edges(n, &edges)
    }

    /// Complete bipartite graph with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<SmallGraph, GraphError> {
        let mut g = SmallGraph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        g.check();
        Ok(g)
    }

    /// Star with `leaves` leaves: `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Result<SmallGraph, GraphError> {
        SmallGraph::complete_bipartite(1, leaves)
    }

    fn check(&self) {
        #[cfg(debug_assertions)]
        {
            let n = self.n as usize;
            let mask = VertexSet::full(n).0;
            for v in 0..MAX_VERTICES {
                if v < n {
                    debug_assert_eq!(self.adj[v] & !mask, 0, "bits above n set in row {v}");
                    debug_assert_eq!(self.adj[v] >> v & 1, 0, "self-loop at {v}");
                } else {
                    debug_assert_eq!(self.adj[v], 0, "row {v} outside order {n} nonzero");
                }
            }
            for u in 0..n {
                for v in 0..n {
                    debug_assert_eq!(
                        self.adj[u] >> v & 1,
                        self.adj[v] >> u & 1,
                        "asymmetric pair ({u},{v})"
                    );
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n as usize]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order() && v < self.order());
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.order());
        VertexSet(self.adj[v])
    }

    /// Raw neighbourhood mask of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    /// Edges as pairs `(u,v)` with `u < v`, in column-major order (sorted by
    /// `v`, then `u`), matching the bit order of the graph6 encoding.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.order() {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<SmallGraph, GraphError> {
        let n = self.order();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists { u, v });
        }
        let mut g = *self;
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g.check();
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<SmallGraph, GraphError> {
        let n = self.order();
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::EdgeMissing { u, v });
        }
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g.check();
        Ok(g)
    }

    /// Append a new vertex with label `n`, joined to `neighbours`.
    pub fn add_vertex(&self, neighbours: VertexSet) -> Result<SmallGraph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::OrderTooLarge(n + 1));
        }
        let stray = neighbours.0 & !VertexSet::full(n).0;
        if stray != 0 {
            return Err(GraphError::VertexOutOfRange {
                v: stray.trailing_zeros() as usize,
                n,
            });
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = neighbours.0;
        for u in neighbours.iter() {
            g.adj[u] |= 1 << n;
        }
        g.check();
        Ok(g)
    }

    /// Delete vertex `v`; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<SmallGraph, GraphError> {
        let n = self.order();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        Ok(self.induced_on(&keep))
    }

    /// Subgraph induced on `set`, vertices relabelled to `0..set.len()` in
    /// ascending order of their old labels.
    pub fn induced_subgraph(&self, set: VertexSet) -> SmallGraph {
        debug_assert_eq!(set.0 & !VertexSet::full(self.order()).0, 0);
        let keep: Vec<usize> = set.iter().collect();
        self.induced_on(&keep)
    }

    fn induced_on(&self, keep: &[usize]) -> SmallGraph {
        let mut g = SmallGraph {
            n: keep.len() as u8,
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g.check();
        g
    }

    /// Relabel by `perm`, where `perm[v]` is the new label of vertex `v`.
    pub fn permuted(&self, perm: &[u8]) -> SmallGraph {
        let n = self.order();
        debug_assert_eq!(perm.len(), n);
        let mut g = SmallGraph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for u in 0..n {
            let pu = perm[u] as usize;
            let mut bits = self.adj[u];
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                g.adj[pu] |= 1 << perm[v] as usize;
            }
        }
        g.check();
        g
    }

    /// Disjoint union: `other`'s vertices are relabelled to follow `self`'s.
    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph, GraphError> {
        let n = self.order() + other.order();
        if n > MAX_VERTICES {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut g = *self;
        g.n = n as u8;
        let shift = self.order();
        for v in 0..other.order() {
            g.adj[shift + v] = other.adj[v] << shift;
        }
        g.check();
        Ok(g)
    }

    /// True when no edge's endpoints share a neighbour.
    pub fn is_triangle_free(&self) -> bool {
        for v in 1..self.order() {
            let mut bits = self.adj[v] & ((1 << v) - 1);
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Length of a shortest odd cycle, or `None` when the graph is bipartite.
    ///
    /// BFS from every root: an edge joining two vertices at equal distance d
    /// from the root closes an odd closed walk of length 2d+1, and the minimum
    /// of these over all roots is the odd girth.
    pub fn odd_girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = [u32::MAX; MAX_VERTICES];
        for root in 0..n {
            dist[..n].fill(u32::MAX);
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let mut bits = self.adj[u];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for (u, v) in self.edges() {
                if dist[u] != u32::MAX && dist[u] == dist[v] {
                    let len = 2 * dist[u] as usize + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_girth().is_none()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen: u32 = 1;
        let mut frontier: u32 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == VertexSet::full(n).0
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen: u32 = 0;
        let mut out = Vec::new();
        for v in 0..n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp: u32 = 1 << v;
            let mut frontier: u32 = comp;
            while frontier != 0 {
                let mut next = 0;
                let mut bits = frontier;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[u];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }
}

impl std::fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl PartialOrd for SmallGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SmallGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.adj[..self.n as usize].cmp(&other.adj[..other.n as usize]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_invariants() {
        let g = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.add_edge(0, 1), Err(GraphError::EdgeExists { u: 0, v: 1 }));
        assert_eq!(g.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            g.add_edge(0, 9),
            Err(GraphError::VertexOutOfRange { v: 9, n: 4 })
        );
        assert_eq!(SmallGraph::empty(33), Err(GraphError::OrderTooLarge(33)));
    }

    #[test]
    fn mutations_return_new_values() {
        let g = SmallGraph::path(3).unwrap();
        let h = g.add_edge(0, 2).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(h.edge_count(), 3);
        let back = h.remove_edge(0, 2).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn delete_vertex_compacts_labels() {
        // path 0-1-2-3, delete vertex 1: remaining 0 | 1-2 (old 2-3)
        let g = SmallGraph::path(4).unwrap();
        let h = g.delete_vertex(1).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert!(!h.is_connected());
    }

    #[test]
    fn triangle_free_predicate() {
        assert!(SmallGraph::cycle(5).unwrap().is_triangle_free());
        assert!(SmallGraph::complete_bipartite(2, 3).unwrap().is_triangle_free());
        assert!(!SmallGraph::complete(3).unwrap().is_triangle_free());
        let paw = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(!paw.is_triangle_free());
    }

    #[test]
    fn odd_girth_values() {
        assert_eq!(SmallGraph::cycle(5).unwrap().odd_girth(), Some(5));
        assert_eq!(SmallGraph::cycle(6).unwrap().odd_girth(), None);
        assert_eq!(SmallGraph::complete(4).unwrap().odd_girth(), Some(3));
        assert_eq!(SmallGraph::path(6).unwrap().odd_girth(), None);
        assert_eq!(SmallGraph::empty(0).unwrap().odd_girth(), None);
        // C5 plus a pendant triangle elsewhere: girth of the odd kind is 3
        let g = SmallGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        assert_eq!(g.odd_girth(), Some(3));
    }

    #[test]
    fn components_and_connectivity() {
        let g = SmallGraph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], VertexSet::from_iter([0, 1]));
        assert_eq!(comps[2], VertexSet::singleton(4));
        assert!(SmallGraph::cycle(7).unwrap().is_connected());
        assert!(SmallGraph::empty(1).unwrap().is_connected());
        assert!(SmallGraph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn induced_and_permuted() {
        let g = SmallGraph::cycle(5).unwrap();
        let h = g.induced_subgraph(VertexSet::from_iter([0, 1, 3]));
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(0, 1)]);
        let perm = [1u8, 2, 3, 4, 0];
        let p = g.permuted(&perm);
        assert_eq!(p.edge_count(), 5);
        assert!(p.has_edge(1, 2));
    }

    #[test]
    fn degrees() {
        let s = SmallGraph::star(4).unwrap();
        assert_eq!(s.max_degree(), 4);
        assert_eq!(s.min_degree(), 1);
        assert_eq!(s.degree(0), 4);
    }
}
