//! Planarity decision, combinatorial embedding, face tracing, and the
//! edge/face arithmetic audit for maximal triangle-free planar graphs.
//!
//! Embeddings are built per biconnected block by incremental face splitting
//! (Demoucron-Malgrange-Pertuiset): start from a cycle, repeatedly route a
//! path of an unembedded fragment through a face containing all of its
//! attachment vertices, and give up exactly when some fragment has no such
//! face. Blocks are merged at cut vertices by concatenating rotations. The
//! result is purely combinatorial: faces are orbits of the dart-successor
//! map, never coordinates.

use crate::graph::SmallGraph;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlanarError {
    #[error("input graph is empty or disconnected")]
    Disconnected,
    #[error("input graph contains a triangle")]
    NotTriangleFree,
    #[error("input graph is nonplanar")]
    NotPlanar,
    #[error("input graph is not maximal triangle-free planar")]
    NotMaximalTfp,
    #[error("input graph is bipartite (no odd cycle)")]
    NoOddCycle,
}

/// A combinatorial embedding: the neighbours of each vertex in cyclic order.
/// Faces are the orbits of the dart-successor map, where the successor of
/// the dart (u,v) is (v,w) with w immediately following u in `rotation[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<u8>>,
}

impl RotationSystem {
    pub fn order(&self) -> usize {
        self.rot.len()
    }

    /// Cyclic neighbour order around v.
    pub fn rotation(&self, v: usize) -> &[u8] {
        &self.rot[v]
    }

    /// All faces as directed vertex walks, each dart used exactly once.
    /// A lone vertex contributes one empty walk so Euler's formula still
    /// reads n - e + f = 2.
    pub fn faces(&self) -> Vec<Vec<u8>> {
        let n = self.rot.len();
        let mut idx = vec![[0u8; 32]; n];
        let mut dart_count = 0usize;
        for v in 0..n {
            for (i, &u) in self.rot[v].iter().enumerate() {
                idx[v][u as usize] = i as u8;
                dart_count += 1;
            }
        }
        if dart_count == 0 {
            return vec![Vec::new()];
        }
        let mut visited = vec![0u32; n];
        let mut faces = Vec::new();
        for u0 in 0..n {
            for i in 0..self.rot[u0].len() {
                let v0 = self.rot[u0][i] as usize;
                if visited[u0] >> v0 & 1 == 1 {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut v) = (u0, v0);
                loop {
                    face.push(u as u8);
                    visited[u] |= 1 << v;
                    let pos = idx[v][u] as usize;
                    let w = self.rot[v][(pos + 1) % self.rot[v].len()] as usize;
                    u = v;
                    v = w;
                    if (u, v) == (u0, v0) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        debug_assert_eq!(faces.iter().map(Vec::len).sum::<usize>(), dart_count);
        faces
    }
}

/// Face lengths of an embedding, with the quadrilateral and pentagon counts
/// broken out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceProfile {
    /// All face lengths, ascending.
    pub lengths: Vec<usize>,
    pub f4: usize,
    pub f5: usize,
}

/// Multiset of face lengths of the embedding.
pub fn face_profile(e: &RotationSystem) -> FaceProfile {
    let mut lengths: Vec<usize> = e.faces().iter().map(Vec::len).collect();
    lengths.sort_unstable();
    let f4 = lengths.iter().filter(|&&l| l == 4).count();
    let f5 = lengths.iter().filter(|&&l| l == 5).count();
    FaceProfile { lengths, f4, f5 }
}

/// Biconnected components as edge lists, via the classic lowpoint DFS with
/// an edge stack. Bridges come out as single-edge blocks.
fn blocks(g: &SmallGraph, component: u32) -> Vec<Vec<(u8, u8)>> {
    struct Dfs<'a> {
        g: &'a SmallGraph,
        disc: [u32; 32],
        low: [u32; 32],
        time: u32,
        stack: Vec<(u8, u8)>,
        out: Vec<Vec<(u8, u8)>>,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: usize, parent: i32) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            for u in self.g.neighbours(v).iter() {
                if self.disc[u] == 0 {
                    self.stack.push((v as u8, u as u8));
                    self.run(u, v as i32);
                    self.low[v] = self.low[v].min(self.low[u]);
                    if self.low[u] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (v as u8, u as u8) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if u as i32 != parent && self.disc[u] < self.disc[v] {
                    self.stack.push((v as u8, u as u8));
                    self.low[v] = self.low[v].min(self.disc[u]);
                }
            }
        }
    }
    let mut d = Dfs {
        g,
        disc: [0; 32],
        low: [0; 32],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    d.run(component.trailing_zeros() as usize, -1);
    d.out
}

/// One unembedded piece relative to the current subgraph H: either a chord
/// (both ends in H, edge not yet routed) or a component of G - V(H) taken
/// with its attachment edges.
enum Fragment {
    Chord(u8, u8),
    Comp(u32),
}

struct BlockEmbedder {
    badj: [u32; 32],
    bmask: u32,
    hv: u32,
    hadj: [u32; 32],
    faces: Vec<Vec<u8>>,
}

impl BlockEmbedder {
    fn attachments(&self, frag: &Fragment) -> u32 {
        match *frag {
            Fragment::Chord(u, v) => 1 << u | 1 << v,
            Fragment::Comp(k) => {
                let mut att = 0u32;
                let mut bits = k;
                while bits != 0 {
                    let x = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    att |= self.badj[x] & self.hv;
                }
                att
            }
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        let mut bits = self.hv;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut missing = self.badj[u] & self.hv & !self.hadj[u];
            missing &= !((1u32 << u) | (1u32.wrapping_shl(u as u32) - 1));
            while missing != 0 {
                let v = missing.trailing_zeros() as usize;
                missing &= missing - 1;
                out.push(Fragment::Chord(u as u8, v as u8));
            }
        }
        let mut rest = self.bmask & !self.hv;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            loop {
                let mut grow = comp;
                let mut bits = comp;
                while bits != 0 {
                    let x = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grow |= self.badj[x] & rest;
                }
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            out.push(Fragment::Comp(comp));
            rest &= !comp;
        }
        out
    }

    /// A path between two distinct attachment vertices whose interior lies
    /// in the fragment. Chords route directly; components take a shortest
    /// path found by BFS, ties broken by ascending label.
    fn alpha_path(&self, frag: &Fragment, att: u32) -> Vec<u8> {
        match *frag {
            Fragment::Chord(u, v) => vec![u, v],
            Fragment::Comp(k) => {
                let a = att.trailing_zeros() as usize;
                let others = att & !(1 << a);
                let mut parent = [255u8; 32];
                let mut queue = VecDeque::new();
                let mut seen = 0u32;
                let mut first = self.badj[a] & k;
                while first != 0 {
                    let x = first.trailing_zeros() as usize;
                    first &= first - 1;
                    parent[x] = a as u8;
                    seen |= 1 << x;
                    queue.push_back(x);
                }
                while let Some(x) = queue.pop_front() {
                    let hit = self.badj[x] & others;
                    if hit != 0 {
                        let b = hit.trailing_zeros() as u8;
                        let mut path = vec![b, x as u8];
                        let mut cur = x;
                        while parent[cur] != a as u8 {
                            cur = parent[cur] as usize;
                            path.push(cur as u8);
                        }
                        path.push(a as u8);
                        path.reverse();
                        return path;
                    }
                    let mut next = self.badj[x] & k & !seen;
                    while next != 0 {
                        let y = next.trailing_zeros() as usize;
                        next &= next - 1;
                        parent[y] = x as u8;
                        seen |= 1 << y;
                        queue.push_back(y);
                    }
                }
                unreachable!("fragment of a biconnected block has two attachments")
            }
        }
    }

    fn insert_path(&mut self, face_idx: usize, path: &[u8]) {
        let face = &self.faces[face_idx];
        let len = face.len();
        let a = path[0];
        let b = *path.last().unwrap();
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let mut f1 = Vec::new();
        let mut t = i;
        loop {
            f1.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % len;
        }
        f1.extend(path[1..path.len() - 1].iter().rev());
        let mut f2 = Vec::new();
        let mut t = j;
        loop {
            f2.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % len;
        }
        f2.extend(&path[1..path.len() - 1]);
        self.faces[face_idx] = f1;
        self.faces.push(f2);
        for w in path.windows(2) {
            self.hadj[w[0] as usize] |= 1 << w[1];
            self.hadj[w[1] as usize] |= 1 << w[0];
        }
        for &x in path {
            self.hv |= 1 << x;
        }
    }

    fn face_mask(&self, idx: usize) -> u32 {
        self.faces[idx].iter().fold(0u32, |m, &v| m | 1 << v)
    }

    /// Embed the whole block, or discover it is nonplanar.
    fn run(&mut self) -> bool {
        loop {
            let frags = self.fragments();
            if frags.is_empty() {
                return true;
            }
            let admissible: Vec<Vec<usize>> = frags
                .iter()
                .map(|f| {
                    let att = self.attachments(f);
                    (0..self.faces.len())
                        .filter(|&i| att & !self.face_mask(i) == 0)
                        .collect()
                })
                .collect();
            if admissible.iter().any(Vec::is_empty) {
                return false;
            }
            let pick = admissible
                .iter()
                .position(|a| a.len() == 1)
                .unwrap_or(0);
            let att = self.attachments(&frags[pick]);
            debug_assert!(att.count_ones() >= 2);
            let path = self.alpha_path(&frags[pick], att);
            self.insert_path(admissible[pick][0], &path);
        }
    }
}

/// Cyclic rotations of a block's vertices recovered from its face set: in
/// each face, consecutive darts (u,v),(v,w) pin w as the successor of u
/// around v.
fn block_rotations(faces: &[Vec<u8>], badj: &[u32; 32], bmask: u32, rot: &mut [Vec<u8>]) {
    let mut next_at = [[255u8; 32]; 32];
    for face in faces {
        let len = face.len();
        for i in 0..len {
            let u = face[i] as usize;
            let v = face[(i + 1) % len] as usize;
            let w = face[(i + 2) % len];
            next_at[v][u] = w;
        }
    }
    let mut bits = bmask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let deg = (badj[v] & bmask).count_ones() as usize;
        let start = (badj[v] & bmask).trailing_zeros() as usize;
        let mut u = start;
        for _ in 0..deg {
            rot[v].push(u as u8);
            u = next_at[v][u] as usize;
            assert!(u < 32, "face set does not define a rotation");
        }
        assert_eq!(u, start, "rotation at {v} is not a single cycle");
    }
}

/// First cycle found by DFS from the block's smallest vertex.
fn find_cycle(badj: &[u32; 32], bmask: u32) -> Vec<u8> {
    fn dfs(v: usize, parent: i32, badj: &[u32; 32], path: &mut Vec<u8>, on: &mut u32) -> Option<Vec<u8>> {
        path.push(v as u8);
        *on |= 1 << v;
        let mut bits = badj[v];
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if u as i32 == parent {
                continue;
            }
            if *on >> u & 1 == 1 {
                let pos = path.iter().position(|&x| x == u as u8).unwrap();
                return Some(path[pos..].to_vec());
            }
            if let Some(c) = dfs(u, v as i32, badj, path, on) {
                return Some(c);
            }
        }
        path.pop();
        *on &= !(1 << v);
        None
    }
    let mut path = Vec::new();
    let mut on = 0u32;
    dfs(bmask.trailing_zeros() as usize, -1, badj, &mut path, &mut on)
        .expect("biconnected block with three or more vertices contains a cycle")
}

/// Embed one connected graph; None means nonplanar.
fn embed_connected(g: &SmallGraph) -> Option<RotationSystem> {
    let n = g.order();
    let mut rot: Vec<Vec<u8>> = vec![Vec::new(); n];
    if g.edge_count() > 0 {
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        for block in blocks(g, all) {
            if block.len() == 1 {
                let (u, v) = block[0];
                rot[u as usize].push(v);
                rot[v as usize].push(u);
                continue;
            }
            let mut badj = [0u32; 32];
            let mut bmask = 0u32;
            for &(u, v) in &block {
                badj[u as usize] |= 1 << v;
                badj[v as usize] |= 1 << u;
                bmask |= 1 << u | 1 << v;
            }
            let cycle = find_cycle(&badj, bmask);
            let mut emb = BlockEmbedder {
                badj,
                bmask,
                hv: cycle.iter().fold(0u32, |m, &v| m | 1 << v),
                hadj: [0u32; 32],
                faces: vec![cycle.clone(), cycle.iter().rev().copied().collect()],
            };
            for w in cycle.windows(2) {
                emb.hadj[w[0] as usize] |= 1 << w[1];
                emb.hadj[w[1] as usize] |= 1 << w[0];
            }
            let (first, last) = (cycle[0] as usize, *cycle.last().unwrap() as usize);
            emb.hadj[first] |= 1 << last;
            emb.hadj[last] |= 1 << first;
            if !emb.run() {
                return None;
            }
            block_rotations(&emb.faces, &badj, bmask, &mut rot);
        }
    }
    let rs = RotationSystem { rot };
    let f = rs.faces().len();
    assert_eq!(
        n + f,
        g.edge_count() + 2,
        "embedding violates Euler's formula (internal error)"
    );
    rs.rot
        .iter()
        .enumerate()
        .for_each(|(v, r)| debug_assert_eq!(r.len(), g.degree(v)));
    Some(rs)
}

/// Exact planarity decision for any graph, disconnected included. Cheap
/// edge-count rejections run first, then each component is embedded.
pub fn is_planar(g: &SmallGraph) -> bool {
    let n = g.order();
    let m = g.edge_count();
    if n >= 3 {
        if m > 3 * n - 6 {
            return false;
        }
        if m > 2 * n - 4 && g.is_triangle_free() {
            return false;
        }
    }
    g.components()
        .iter()
        .all(|&c| embed_connected(&g.induced_subgraph(c)).is_some())
}

/// Build an embedding of a connected graph; `Ok(None)` means nonplanar,
/// disconnected or empty input is an error.
pub fn planar_embedding(g: &SmallGraph) -> Result<Option<RotationSystem>, PlanarError> {
    if g.order() == 0 || !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    Ok(embed_connected(g))
}

/// True iff no edge can be added without creating a triangle or losing
/// planarity. Input must already be triangle-free and planar.
pub fn is_maximal_tfp(g: &SmallGraph) -> Result<bool, PlanarError> {
    if !g.is_triangle_free() {
        return Err(PlanarError::NotTriangleFree);
    }
    if !is_planar(g) {
        return Err(PlanarError::NotPlanar);
    }
    let n = g.order();
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                continue;
            }
            if g.row(u) & g.row(v) != 0 {
                continue;
            }
            let h = g.add_edge(u, v).expect("vertices in range, edge absent");
            if is_planar(&h) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the edge/face arithmetic audit on a maximal triangle-free
/// planar graph with an odd cycle: an embedding must have every face of
/// length 4 or 5 with e = 2n - 4 - f5/2, f5 even and at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceArithmeticAudit {
    pub n: usize,
    pub epsilon: usize,
    pub f4: usize,
    pub f5: usize,
    pub formula_holds: bool,
}

/// Run the audit; preconditions (connected, triangle-free, planar, maximal,
/// odd cycle present) are errors, not failures.
pub fn face_arithmetic_audit(g: &SmallGraph) -> Result<FaceArithmeticAudit, PlanarError> {
    if g.order() == 0 || !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    if !g.is_triangle_free() {
        return Err(PlanarError::NotTriangleFree);
    }
    let embedding = planar_embedding(g)?.ok_or(PlanarError::NotPlanar)?;
    if !is_maximal_tfp(g)? {
        return Err(PlanarError::NotMaximalTfp);
    }
    if g.odd_girth().is_none() {
        return Err(PlanarError::NoOddCycle);
    }
    let profile = face_profile(&embedding);
    let n = g.order();
    let epsilon = g.edge_count();
    let only_45 = profile.f4 + profile.f5 == profile.lengths.len();
    let formula_holds = only_45
        && profile.f5 % 2 == 0
        && profile.f5 >= 2
        && 2 * n >= 4 + profile.f5 / 2
        && epsilon == 2 * n - 4 - profile.f5 / 2;
    Ok(FaceArithmeticAudit {
        n,
        epsilon,
        f4: profile.f4,
        f5: profile.f5,
        formula_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_graph6;

    #[test]
    fn kuratowski_landmarks() {
        assert!(is_planar(&SmallGraph::complete(4).unwrap()));
        assert!(!is_planar(&SmallGraph::complete(5).unwrap()));
        assert!(!is_planar(&SmallGraph::complete_bipartite(3, 3).unwrap()));
        let k5_minus = SmallGraph::complete(5).unwrap().remove_edge(0, 1).unwrap();
        assert!(is_planar(&k5_minus));
        let k33_minus = SmallGraph::complete_bipartite(3, 3)
            .unwrap()
            .remove_edge(0, 3)
            .unwrap();
        assert!(is_planar(&k33_minus));
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert!(!is_planar(&petersen));
        let g1 = parse_graph6("Hs_ZJGW").unwrap();
        assert!(!is_planar(&g1));
    }

    #[test]
    fn disconnected_planarity() {
        let two_k4 = SmallGraph::complete(4)
            .unwrap()
            .disjoint_union(&SmallGraph::complete(4).unwrap()).unwrap();
        assert!(is_planar(&two_k4));
        let k5_plus_iso = SmallGraph::complete(5)
            .unwrap()
            .disjoint_union(&SmallGraph::empty(1).unwrap()).unwrap();
        assert!(!is_planar(&k5_plus_iso));
        assert_eq!(
            planar_embedding(&two_k4).unwrap_err(),
            PlanarError::Disconnected
        );
    }

    #[test]
    fn cycle_faces() {
        for (n, l) in [(4usize, 4usize), (5, 5), (6, 6)] {
            let e = planar_embedding(&SmallGraph::cycle(n).unwrap())
                .unwrap()
                .unwrap();
            let p = face_profile(&e);
            assert_eq!(p.lengths, vec![l, l]);
        }
    }

    #[test]
    fn k4_faces_are_triangles() {
        let e = planar_embedding(&SmallGraph::complete(4).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(face_profile(&e).lengths, vec![3, 3, 3, 3]);
    }

    #[test]
    fn tree_has_one_face() {
        let e = planar_embedding(&SmallGraph::path(5).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(face_profile(&e).lengths, vec![8]);
        let single = planar_embedding(&SmallGraph::empty(1).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(face_profile(&single).lengths, vec![0]);
    }

    #[test]
    fn embedding_invariants_hold_on_all_small_graphs() {
        let pairs: Vec<(usize, usize)> = (1..5).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for bits in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = SmallGraph::from_edges(5, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let emb = planar_embedding(&g).unwrap();
            if emb.is_none() {
                assert_eq!(g.edge_count(), 10, "only K5 is nonplanar at order 5");
                continue;
            }
            let e = emb.unwrap();
            let p = face_profile(&e);
            assert_eq!(p.lengths.iter().sum::<usize>(), 2 * g.edge_count());
            assert_eq!(g.order() + p.lengths.len(), g.edge_count() + 2);
            for v in 0..g.order() {
                let mut r: Vec<u8> = e.rotation(v).to_vec();
                r.sort_unstable();
                let nb: Vec<u8> = g.neighbours(v).iter().map(|u| u as u8).collect();
                assert_eq!(r, nb);
            }
        }
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_tfp(&SmallGraph::cycle(4).unwrap()).unwrap());
        assert!(is_maximal_tfp(&SmallGraph::cycle(5).unwrap()).unwrap());
        assert!(!is_maximal_tfp(&SmallGraph::cycle(6).unwrap()).unwrap());
        assert!(!is_maximal_tfp(&SmallGraph::path(4).unwrap()).unwrap());
        let two_c4 = SmallGraph::cycle(4)
            .unwrap()
            .disjoint_union(&SmallGraph::cycle(4).unwrap()).unwrap();
        assert!(!is_maximal_tfp(&two_c4).unwrap());
        assert_eq!(
            is_maximal_tfp(&SmallGraph::complete(3).unwrap()),
            Err(PlanarError::NotTriangleFree)
        );
        assert_eq!(
            is_maximal_tfp(&parse_graph6("IheA@GUAo").unwrap()),
            Err(PlanarError::NotPlanar)
        );
    }

    #[test]
    fn audit_on_pentagon() {
        let a = face_arithmetic_audit(&SmallGraph::cycle(5).unwrap()).unwrap();
        assert_eq!((a.n, a.epsilon, a.f4, a.f5), (5, 5, 0, 2));
        assert!(a.formula_holds);
    }

    #[test]
    fn audit_rejects_bad_preconditions() {
        let c4 = SmallGraph::cycle(4).unwrap();
        assert_eq!(face_arithmetic_audit(&c4), Err(PlanarError::NoOddCycle));
        let c6 = SmallGraph::cycle(6).unwrap();
        assert_eq!(face_arithmetic_audit(&c6), Err(PlanarError::NotMaximalTfp));
        let k3 = SmallGraph::complete(3).unwrap();
        assert_eq!(
            face_arithmetic_audit(&k3),
            Err(PlanarError::NotTriangleFree)
        );
        let two = SmallGraph::cycle(4)
            .unwrap()
            .disjoint_union(&SmallGraph::cycle(5).unwrap()).unwrap();
        assert_eq!(face_arithmetic_audit(&two), Err(PlanarError::Disconnected));
    }

    #[test]
    fn eleven_vertex_extremal_graph_profile() {
        let gp1 = parse_graph6("JsaC?\\pCOa?").unwrap();
        assert_eq!(gp1.order(), 11);
        assert_eq!(gp1.edge_count(), 17);
        assert!(is_planar(&gp1));
        let a = face_arithmetic_audit(&gp1).unwrap();
        assert_eq!((a.f4, a.f5), (6, 2));
        assert!(a.formula_holds);
        let e = planar_embedding(&gp1).unwrap().unwrap();
        assert_eq!(face_profile(&e).lengths.len(), 8);
    }
}
