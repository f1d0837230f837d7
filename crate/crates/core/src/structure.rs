//! Structural classes and constructions: pendant edges, basic five-cycles,
//! the pendant/five-cycle partition class, vertex decomposability, the
//! Cohen–Macaulay test for girth >= 5, whiskering, and the chained
//! five-cycle families.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::{low_mask, ones};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// All five-cycles, each reported once as `[v0, v1, v2, v3, v4]` in cyclic
/// order with `v0` minimal and `v1 < v4`. With `induced_only`, restrict to
/// chordless ones.
pub fn five_cycles(g: &Graph, induced_only: bool) -> Vec<[usize; 5]> {
    let n = g.n();
    let mut out = Vec::new();
    for v0 in 0..n {
        for v1 in g.neighbors(v0).iter().filter(|&v| v > v0) {
            for v2 in g.neighbors(v1).iter().filter(|&v| v > v0) {
                if induced_only && g.has_edge(v0, v2) {
                    continue;
                }
                for v3 in g.neighbors(v2).iter().filter(|&v| v > v0 && v != v1) {
                    if induced_only && (g.has_edge(v3, v0) || g.has_edge(v3, v1)) {
                        continue;
                    }
                    for v4 in g.neighbors(v3).iter().filter(|&v| v > v1 && v != v2) {
                        if !g.has_edge(v4, v0) {
                            continue;
                        }
                        if induced_only && (g.has_edge(v4, v1) || g.has_edge(v4, v2)) {
                            continue;
                        }
                        out.push([v0, v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Edges with a degree-1 endpoint, as `(u, v)` with `u < v`.
pub fn pendant_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
        .collect()
}

/// A five-cycle in which no two cycle vertices adjacent in the host both
/// have host degree >= 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicFiveCycle {
    pub vertices: [usize; 5],
    /// Whether the cycle is chordless in the host.
    pub chordless: bool,
}

/// All basic five-cycles (chords allowed; the `chordless` flag records
/// whether any chord is present).
pub fn basic_five_cycles(g: &Graph) -> Vec<BasicFiveCycle> {
    five_cycles(g, false)
        .into_iter()
        .filter(|c| {
            (0..5).all(|i| {
                (i + 1..5).all(|j| {
                    !(g.has_edge(c[i], c[j]) && g.degree(c[i]) >= 3 && g.degree(c[j]) >= 3)
                })
            })
        })
        .map(|c| {
            let chordless = (0..5).all(|i| {
                (i + 1..5)
                    .all(|j| j == i + 1 || (i == 0 && j == 4) || !g.has_edge(c[i], c[j]))
            });
            BasicFiveCycle {
                vertices: c,
                chordless,
            }
        })
        .collect()
}

/// Certificate that a graph splits into pendant edges and disjoint basic
/// five-cycles covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PCDecomposition {
    /// Pendant edges as `(support, leaf)` pairs; they form a perfect
    /// matching on the vertices they touch.
    pub pendant_pairs: Vec<(usize, usize)>,
    /// Vertex-disjoint basic five-cycles covering the remaining vertices.
    pub basic_cycles: Vec<[usize; 5]>,
}

/// Membership test for the pendant/five-cycle partition class: the pendant
/// edges must form a perfect matching on the vertices they touch, the
/// remaining vertices must be exactly covered by vertex-disjoint basic
/// five-cycles, and together they exhaust the graph. Returns the first
/// decomposition in the canonical cycle order, or `None`.
pub fn pc_membership(g: &Graph, budget: &Budget) -> Result<Option<PCDecomposition>> {
    budget.check_vertices(g.n())?;
    let n = g.n();
    let pend = pendant_edges(g);
    let mut p_mask = 0u64;
    for &(u, v) in &pend {
        let m = bit(u) | bit(v);
        if p_mask & m != 0 {
            return Ok(None); // two pendant edges share a vertex
        }
        p_mask |= m;
    }
    let basics = basic_five_cycles(g);
    let c_mask = basics
        .iter()
        .flat_map(|c| c.vertices.iter())
        .fold(0u64, |m, &v| m | bit(v));
    if p_mask & c_mask != 0 || p_mask | c_mask != low_mask(n) {
        return Ok(None);
    }
    let cycle_masks: Vec<u64> = basics
        .iter()
        .map(|c| c.vertices.iter().fold(0u64, |m, &v| m | bit(v)))
        .collect();
    let mut chosen = Vec::new();
    if !cover_exactly(c_mask, &cycle_masks, &mut chosen) {
        return Ok(None);
    }
    let pendant_pairs = pend
        .iter()
        .map(|&(u, v)| {
            // leaf = the degree-1 endpoint; for a lone edge pick the larger id
            if g.degree(v) == 1 {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    Ok(Some(PCDecomposition {
        pendant_pairs,
        basic_cycles: chosen.iter().map(|&i| basics[i].vertices).collect(),
    }))
}

/// Exact cover of `target` by a subfamily of `sets`, branching on the
/// lowest uncovered bit; `chosen` receives the first cover found.
fn cover_exactly(target: u64, sets: &[u64], chosen: &mut Vec<usize>) -> bool {
    if target == 0 {
        return true;
    }
    let v = ones(target).next().unwrap();
    for (i, &s) in sets.iter().enumerate() {
        if s & bit(v) != 0 && s & !target == 0 {
            chosen.push(i);
            if cover_exactly(target & !s, sets, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Is there a maximal independent set of `G[mask]` disjoint from `avoid`?
/// Searches for an independent dominating set, which is the same thing.
fn exists_mis_avoiding(adj: &[u64], mask: u64, avoid: u64) -> bool {
    fn rec(adj: &[u64], mask: u64, avoid: u64, chosen: u64, dominated: u64) -> bool {
        let Some(u) = ones(mask & !dominated).next() else {
            return true;
        };
        for w in ones((adj[u] | bit(u)) & mask & !avoid) {
            if adj[w] & chosen != 0 {
                continue;
            }
            if rec(
                adj,
                mask,
                avoid,
                chosen | bit(w),
                dominated | ((adj[w] | bit(w)) & mask),
            ) {
                return true;
            }
        }
        false
    }
    rec(adj, mask, avoid, 0, 0)
}

/// Vertex decomposability of the independence complex, by the literal
/// recursion: edgeless graphs qualify; otherwise some vertex `v` must have
/// every maximal independent set of `G - v` meet `N(v)`, with both `G - v`
/// and `G - N[v]` again vertex decomposable.
pub fn is_vertex_decomposable(g: &Graph, budget: &Budget) -> Result<bool> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let mut memo = HashMap::new();
    Ok(vd_rec(&adj, low_mask(g.n()), &mut memo))
}

fn vd_rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if ones(mask).all(|v| adj[v] & mask == 0) {
        return true;
    }
    if let Some(&r) = memo.get(&mask) {
        return r;
    }
    let mut ok = false;
    for v in ones(mask) {
        if adj[v] & mask == 0 {
            continue; // an isolated vertex is never a shedding vertex
        }
        let gv = mask & !bit(v);
        if exists_mis_avoiding(adj, gv, adj[v] & mask) {
            continue; // some maximal independent set of G - v misses N(v)
        }
        let gnv = mask & !(adj[v] | bit(v));
        if vd_rec(adj, gv, memo) && vd_rec(adj, gnv, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(mask, ok);
    ok
}

/// Cohen–Macaulayness for connected graphs of girth >= 5: a single vertex,
/// or membership in the pendant/five-cycle partition class. Inputs outside
/// the precondition are rejected.
pub fn is_cm_girth5(g: &Graph, budget: &Budget) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::InvalidInput(
            "Cohen–Macaulay test requires a connected graph".into(),
        ));
    }
    if !g.girth().at_least(5) {
        return Err(Error::InvalidInput(
            "Cohen–Macaulay test requires girth >= 5".into(),
        ));
    }
    if g.n() == 1 {
        return Ok(true);
    }
    Ok(pc_membership(g, budget)?.is_some())
}

/// Attach a pendant leaf to every vertex; vertex `v` gets leaf `n + v`.
/// Leaves are labeled `w(<host label or index>)`.
pub fn whisker(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, n + v));
    }
    let mut w = Graph::from_edge_list(2 * n, &edges).expect("whiskered graph is valid");
    for v in 0..n {
        match g.label(v) {
            Some(l) => {
                let l = l.to_string();
                w.set_label(n + v, format!("w({l})"));
                w.set_label(v, l);
            }
            None => w.set_label(n + v, format!("w({v})")),
        }
    }
    w
}

/// The chain of `n` five-cycles: cycles on `{5i, ..., 5i+4}` for
/// `i < n`, with a bridge from the third vertex of each cycle to the first
/// vertex of the next. `5n` vertices, `6n - 1` edges; vertex `5(i-1)+(j-1)`
/// is labeled `v{j}^{i}`.
pub fn build_hn(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "the five-cycle chain needs at least one cycle".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let base = 5 * i;
        for j in 0..5 {
            edges.push((base + j, base + (j + 1) % 5));
        }
        if i + 1 < n {
            edges.push((base + 2, base + 5));
        }
    }
    let mut g = Graph::from_edge_list(5 * n, &edges)?;
    for v in 0..5 * n {
        g.set_label(v, format!("v{}^{}", v % 5 + 1, v / 5 + 1));
    }
    Ok(g)
}

/// Glue two graphs at one vertex: `u` in `a` and `x` in `b` become a single
/// new vertex `z`, placed last (index `a.n() + b.n() - 2`) and labeled
/// `"z"`. The other vertices keep their relative order, `a`'s first.
pub fn identify_vertices(a: &Graph, u: usize, b: &Graph, x: usize) -> Result<Graph> {
    if u >= a.n() {
        return Err(Error::InvalidInput(format!(
            "vertex {u} out of range for the first graph"
        )));
    }
    if x >= b.n() {
        return Err(Error::InvalidInput(format!(
            "vertex {x} out of range for the second graph"
        )));
    }
    let n = a.n() + b.n() - 1;
    let z = n - 1;
    let map_a = |v: usize| {
        if v == u {
            z
        } else if v < u {
            v
        } else {
            v - 1
        }
    };
    let map_b = |w: usize| {
        if w == x {
            z
        } else if w < x {
            a.n() - 1 + w
        } else {
            a.n() - 2 + w
        }
    };
    let mut edges: Vec<(usize, usize)> = a
        .edges()
        .into_iter()
        .map(|(p, q)| (map_a(p), map_a(q)))
        .collect();
    edges.extend(b.edges().into_iter().map(|(p, q)| (map_b(p), map_b(q))));
    let mut g = Graph::from_edge_list(n, &edges)?;
    for v in 0..a.n() {
        if v != u {
            if let Some(l) = a.label(v) {
                g.set_label(map_a(v), l.to_string());
            }
        }
    }
    for w in 0..b.n() {
        if w != x {
            if let Some(l) = b.label(w) {
                g.set_label(map_b(w), l.to_string());
            }
        }
    }
    g.set_label(z, "z".to_string());
    Ok(g)
}

/// Glue an arbitrary graph `h` (at its vertex `u`) onto the whiskered
/// five-cycle chain `W(H_n)` (at vertex `x` of the chain, whiskers
/// included). The glued vertex is the last one.
pub fn build_gn(h: &Graph, u: usize, n: usize, x: usize) -> Result<Graph> {
    let whn = whisker(&build_hn(n)?);
    identify_vertices(h, u, &whn, x)
}
