//! Exact k-defective colouring: decision, optimization, enumeration, and the
//! independent GF(3) oracle for the two-colour one-defect case.
//!
//! A colouring is valid when every vertex has at most k neighbours of its own
//! colour ("defect" at most k). `chi_k` is the least number of colours. The
//! solver is a plain depth-first search with defect bookkeeping; the GF(3)
//! oracle solves the quadratic system b_i*b_j + b_j*b_l + b_l*b_i = 2 (mod 3)
//! over b in {1,2}^n, one constraint per path on two edges, by a separate
//! propagation-driven search. The two routes share no code on purpose.

use crate::graph::SmallGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColourError {
    #[error("assignment length {got} does not match order {want}")]
    WrongLength { got: usize, want: usize },
    #[error("vertex {0} is unassigned (colour 0)")]
    UnassignedVertex(usize),
    #[error("vertex {v} has defect {defect}, exceeding k = {k}")]
    DefectExceeded { v: usize, defect: usize, k: usize },
    #[error("enumeration of {m}^{n} assignments exceeds the 10^7 guard")]
    EnumerationTooLarge { m: usize, n: usize },
}

/// A complete colouring: `colours[v]` is a 1-based class label and
/// `defects[v]` counts v's neighbours in its own class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringAssignment {
    pub colours: Vec<u8>,
    pub defects: Vec<u8>,
}

/// A solution of the GF(3) system, entries in {1,2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z3Assignment {
    pub b: Vec<u8>,
}

/// Check a complete colouring against the defect bound and report per-vertex
/// defects.
pub fn validate_colouring(
    g: &SmallGraph,
    k: usize,
    colours: &[u8],
) -> Result<ColouringAssignment, ColourError> {
    let n = g.order();
    if colours.len() != n {
        return Err(ColourError::WrongLength {
            got: colours.len(),
            want: n,
        });
    }
    if let Some(v) = (0..n).find(|&v| colours[v] == 0) {
        return Err(ColourError::UnassignedVertex(v));
    }
    let mut defects = vec![0u8; n];
    for v in 0..n {
        let defect = g
            .neighbours(v)
            .iter()
            .filter(|&u| colours[u] == colours[v])
            .count();
        if defect > k {
            return Err(ColourError::DefectExceeded { v, defect, k });
        }
        defects[v] = defect as u8;
    }
    Ok(ColouringAssignment {
        colours: colours.to_vec(),
        defects,
    })
}

struct ColourSearch<'a> {
    g: &'a SmallGraph,
    n: usize,
    m: usize,
    k: u32,
    order: Vec<u8>,
    colours: Vec<u8>,
    same_cnt: Vec<u32>,
    class_mask: Vec<u32>,
    /// colour-class symmetry breaking is only sound when a single witness is
    /// wanted, never when enumerating
    break_symmetry: bool,
}

impl ColourSearch<'_> {
    fn dfs(&mut self, pos: usize, max_used: usize, out: &mut Option<Vec<ColouringAssignment>>) -> bool {
        if pos == self.n {
            if let Some(list) = out {
                list.push(ColouringAssignment {
                    colours: self.colours.clone(),
                    defects: self.same_cnt.iter().map(|&c| c as u8).collect(),
                });
                return false;
            }
            return true;
        }
        let v = self.order[pos] as usize;
        let limit = if self.break_symmetry {
            self.m.min(max_used + 1)
        } else {
            self.m
        };
        for c in 1..=limit {
            let same = self.g.row(v) & self.class_mask[c];
            let cnt = same.count_ones();
            if cnt > self.k {
                continue;
            }
            let mut bits = same;
            let mut ok = true;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.same_cnt[u] + 1 > self.k {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.colours[v] = c as u8;
            self.class_mask[c] |= 1 << v;
            self.same_cnt[v] = cnt;
            let mut bits = same;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.same_cnt[u] += 1;
            }
            if self.dfs(pos + 1, max_used.max(c), out) {
                return true;
            }
            let mut bits = same;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.same_cnt[u] -= 1;
            }
            self.same_cnt[v] = 0;
            self.class_mask[c] &= !(1 << v);
            self.colours[v] = 0;
        }
        false
    }
}

fn search(g: &SmallGraph, m: usize, k: usize, break_symmetry: bool, order: Vec<u8>) -> ColourSearch<'_> {
    ColourSearch {
        g,
        n: g.order(),
        m,
        k: k as u32,
        order,
        colours: vec![0; g.order()],
        same_cnt: vec![0; g.order()],
        class_mask: vec![0; m + 1],
        break_symmetry,
    }
}

/// Vertex order for the decision search: descending degree, ties by label.
fn decision_order(g: &SmallGraph) -> Vec<u8> {
    let mut order: Vec<u8> = (0..g.order() as u8).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v as usize)), v));
    order
}

/// Find one (m,k)-colouring, or prove there is none.
pub fn is_mk_colourable(g: &SmallGraph, m: usize, k: usize) -> Option<ColouringAssignment> {
    let n = g.order();
    if n == 0 {
        return Some(ColouringAssignment {
            colours: Vec::new(),
            defects: Vec::new(),
        });
    }
    if m == 0 {
        return None;
    }
    let mut s = search(g, m, k, true, decision_order(g));
    if s.dfs(0, 0, &mut None) {
        debug_assert!(validate_colouring(g, k, &s.colours).is_ok());
        Some(ColouringAssignment {
            colours: s.colours,
            defects: s.same_cnt.iter().map(|&c| c as u8).collect(),
        })
    } else {
        None
    }
}

/// The k-defective chromatic number: least m admitting an (m,k)-colouring.
/// By convention the graph with no vertices gets 1.
pub fn chi_k(g: &SmallGraph, k: usize) -> usize {
    let mut m = 0;
    loop {
        if is_mk_colourable(g, m, k).is_some() {
            return m;
        }
        m += 1;
        debug_assert!(m <= g.order().div_ceil(k + 1).max(1), "chi_k failed to terminate");
    }
}

/// All valid complete (m,k)-colourings in lexicographic order of the colour
/// vector. Guarded: refuses when m^n exceeds 10^7 assignments.
pub fn enumerate_colourings(
    g: &SmallGraph,
    m: usize,
    k: usize,
) -> Result<Vec<ColouringAssignment>, ColourError> {
    let n = g.order();
    let total = (m as u128).saturating_pow(n as u32);
    if total > 10_000_000 {
        return Err(ColourError::EnumerationTooLarge { m, n });
    }
    let mut out = Some(Vec::new());
    if n == 0 {
        return Ok(vec![ColouringAssignment {
            colours: Vec::new(),
            defects: Vec::new(),
        }]);
    }
    let mut s = search(g, m, k, false, (0..n as u8).collect());
    s.dfs(0, 0, &mut out);
    Ok(out.unwrap())
}

/// Greedy upper bound 1 + floor(max_degree / (k+1)).
pub fn lovasz_bound(g: &SmallGraph, k: usize) -> usize {
    1 + g.max_degree() / (k + 1)
}

/// chi_k(g) = m and every single-vertex deletion drops it below m.
pub fn is_vertex_critical(g: &SmallGraph, m: usize, k: usize) -> bool {
    if m == 0 || is_mk_colourable(g, m, k).is_none() {
        return false;
    }
    if is_mk_colourable(g, m - 1, k).is_some() {
        return false;
    }
    (0..g.order()).all(|v| {
        let h = g.delete_vertex(v).expect("vertex in range");
        is_mk_colourable(&h, m - 1, k).is_some()
    })
}

/// chi_k(g) = m and every single-edge deletion drops it below m.
pub fn is_edge_critical(g: &SmallGraph, m: usize, k: usize) -> bool {
    if m == 0 || is_mk_colourable(g, m, k).is_none() {
        return false;
    }
    if is_mk_colourable(g, m - 1, k).is_some() {
        return false;
    }
    g.edges().iter().all(|&(u, v)| {
        let h = g.remove_edge(u, v).expect("edge present");
        is_mk_colourable(&h, m - 1, k).is_some()
    })
}

// ---------------------------------------------------------------------------
// GF(3) oracle
// ---------------------------------------------------------------------------

/// Solve b_i*b_j + b_j*b_l + b_l*b_i = 2 (mod 3), b in {1,2}^n, with one
/// constraint for every path i-j-l on two edges. Over {1,2} the left side is
/// 2 exactly when the three values are not all equal, so a solution exists
/// precisely for the (2,1)-colourable graphs; this function must stay
/// independent of [`is_mk_colourable`] so the two can vouch for each other.
pub fn z3_oracle(g: &SmallGraph) -> Option<Z3Assignment> {
    let n = g.order();
    if n == 0 {
        return Some(Z3Assignment { b: Vec::new() });
    }
    let mut triples: Vec<(u8, u8, u8)> = Vec::new();
    for j in 0..n {
        let nb: Vec<usize> = g.neighbours(j).iter().collect();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                triples.push((nb[a] as u8, j as u8, nb[b] as u8));
            }
        }
    }
    let mut var_triples: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (idx, &(i, j, l)) in triples.iter().enumerate() {
        var_triples[i as usize].push(idx as u32);
        var_triples[j as usize].push(idx as u32);
        var_triples[l as usize].push(idx as u32);
    }
    // domains are bitmasks over values {1,2}: bit 0 = value 1, bit 1 = value 2
    let mut domains = vec![0b11u8; n];
    let mut trail: Vec<(usize, u8)> = Vec::new();

    fn narrow(
        v: usize,
        dom: u8,
        domains: &mut [u8],
        trail: &mut Vec<(usize, u8)>,
        queue: &mut Vec<usize>,
    ) -> bool {
        let new = domains[v] & dom;
        if new == domains[v] {
            return true;
        }
        if new == 0 {
            return false;
        }
        trail.push((v, domains[v]));
        domains[v] = new;
        if new.count_ones() == 1 {
            queue.push(v);
        }
        true
    }

    fn propagate(
        start: usize,
        triples: &[(u8, u8, u8)],
        var_triples: &[Vec<u32>],
        domains: &mut [u8],
        trail: &mut Vec<(usize, u8)>,
    ) -> bool {
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &t in &var_triples[u] {
                let (i, j, l) = triples[t as usize];
                let (i, j, l) = (i as usize, j as usize, l as usize);
                let di = domains[i];
                let dj = domains[j];
                let dl = domains[l];
                // all-equal is forbidden: two settled equal values force the third
                let settled_eq = |a: u8, b: u8| a.count_ones() == 1 && a == b;
                let forced = if settled_eq(di, dj) {
                    Some((l, !di & 0b11))
                } else if settled_eq(di, dl) {
                    Some((j, !di & 0b11))
                } else if settled_eq(dj, dl) {
                    Some((i, !dj & 0b11))
                } else {
                    None
                };
                if let Some((w, dom)) = forced {
                    if !narrow(w, dom, domains, trail, &mut queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn solve(
        triples: &[(u8, u8, u8)],
        var_triples: &[Vec<u32>],
        domains: &mut Vec<u8>,
        trail: &mut Vec<(usize, u8)>,
    ) -> bool {
        let Some(v) = domains.iter().position(|d| d.count_ones() > 1) else {
            return true;
        };
        for val in [0b01u8, 0b10u8] {
            let mark = trail.len();
            let ok = narrow(v, val, domains, trail, &mut vec![])
                && propagate(v, triples, var_triples, domains, trail);
            if ok && solve(triples, var_triples, domains, trail) {
                return true;
            }
            while trail.len() > mark {
                let (w, dom) = trail.pop().unwrap();
                domains[w] = dom;
            }
        }
        false
    }

    if solve(&triples, &var_triples, &mut domains, &mut trail) {
        let b: Vec<u8> = domains
            .iter()
            .map(|&d| if d == 0b01 { 1 } else { 2 })
            .collect();
        debug_assert!(triples
            .iter()
            .all(|&(i, j, l)| !(b[i as usize] == b[j as usize] && b[j as usize] == b[l as usize])));
        Some(Z3Assignment { b })
    } else {
        None
    }
}
