//! Chordality and co-chordality testing, simplicial vertices, the exact
//! co-chordal edge-cover number with certified covers, and the constructive
//! neighborhood-deletion step that shrinks a cover by one part.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::{ones, BitSet};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Proof object accompanying the chordality verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ChordalityCertificate {
    /// A perfect elimination ordering (first vertex eliminated first): each
    /// vertex's neighbors among the later vertices form a clique.
    EliminationOrder(Vec<usize>),
    /// An induced cycle of length >= 4, in cyclic order.
    InducedCycle(Vec<usize>),
}

/// Chordality test with a certificate either way, via maximum cardinality
/// search: the reverse visit order is a perfect elimination ordering exactly
/// when the graph is chordal.
pub fn chordality(g: &Graph) -> (bool, ChordalityCertificate) {
    let order = mcs_elimination_order(g);
    if verify_elimination_order(g, &order) {
        (true, ChordalityCertificate::EliminationOrder(order))
    } else {
        let cycle = induced_long_cycle(g)
            .expect("elimination order failed, so an induced long cycle exists");
        (false, ChordalityCertificate::InducedCycle(cycle))
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).0
}

/// A graph is co-chordal when its complement is chordal.
pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement())
}

/// Vertices whose open neighborhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| {
            let nv = g.neighbors(v);
            nv.iter().all(|u| {
                let mut rest = nv.clone();
                rest.remove(u);
                rest.is_subset(g.neighbors(u))
            })
        })
        .collect()
}

/// Maximum cardinality search; returns the candidate elimination order
/// (reverse of the visit order).
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = BitSet::new(n);
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited.insert(v);
        visit_order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited.contains(u) {
                weight[u] += 1;
            }
        }
    }
    visit_order.reverse();
    visit_order
}

/// Check that `order` is a perfect elimination ordering: every vertex's
/// neighbors placed later in the order are pairwise adjacent.
fn verify_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !g.has_edge(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// First induced cycle of length >= 4 under the scan order: a vertex `v`,
/// two nonadjacent neighbors `u`, `w`, and a shortest `u`-`w` path avoiding
/// the rest of `N[v]`; shortest paths are induced, so the closed walk is an
/// induced cycle.
fn induced_long_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nv: Vec<usize> = g.neighbors(v).to_vec();
        for (i, &u) in nv.iter().enumerate() {
            for &w in &nv[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut allowed = BitSet::new(n);
                for x in 0..n {
                    allowed.insert(x);
                }
                for x in g.neighbors(v).iter() {
                    allowed.remove(x);
                }
                allowed.remove(v);
                allowed.insert(u);
                allowed.insert(w);
                if let Some(path) = shortest_path_within(g, &allowed, u, w) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_within(g: &Graph, allowed: &BitSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut prev = vec![usize::MAX; n];
    let mut seen = BitSet::new(n);
    seen.insert(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x).iter() {
            if allowed.contains(y) && !seen.contains(y) {
                seen.insert(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// A cover of the host's edges by edge sets, each spanning a co-chordal
/// subgraph (on the endpoints of its own edges).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct CochordalCover {
    pub parts: Vec<Vec<(usize, usize)>>,
}

/// The subgraph spanned by an edge set: vertices are the endpoints, edges
/// exactly the given ones (not the induced closure). Returns the subgraph
/// and the old-id map.
fn edge_set_subgraph(n_host: usize, part: &[(usize, usize)]) -> Result<(Graph, Vec<usize>)> {
    let mut verts: Vec<usize> = part.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    if verts.last().is_some_and(|&v| v >= n_host) {
        return Err(Error::InvalidInput("cover part vertex out of range".into()));
    }
    let index = |x: usize| verts.binary_search(&x).unwrap();
    let mapped: Vec<(usize, usize)> = part.iter().map(|&(u, v)| (index(u), index(v))).collect();
    let sub = Graph::from_edge_list(verts.len(), &mapped)?;
    Ok((sub, verts))
}

impl CochordalCover {
    /// Validate against a host graph and the exact edge set the cover must
    /// equal: parts nonempty, edges of the host drawn from `required`, the
    /// union exactly `required`, and every part co-chordal.
    pub fn validate(&self, host: &Graph, required: &[(usize, usize)]) -> Result<()> {
        let req: BTreeSet<(usize, usize)> = required
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let mut seen = BTreeSet::new();
        for part in &self.parts {
            if part.is_empty() {
                return Err(Error::InvalidInput("empty cover part".into()));
            }
            for &(a, b) in part {
                let e = (a.min(b), a.max(b));
                if a == b || !host.has_edge(e.0, e.1) {
                    return Err(Error::InvalidInput(format!("({a}, {b}) is not an edge")));
                }
                if !req.contains(&e) {
                    return Err(Error::InvalidInput(format!(
                        "({a}, {b}) is outside the edge set to cover"
                    )));
                }
                seen.insert(e);
            }
            let (sub, _) = edge_set_subgraph(host.n(), part)?;
            if !is_chordal(&sub.complement()) {
                return Err(Error::InvalidInput(format!(
                    "part {part:?} is not co-chordal"
                )));
            }
        }
        if seen != req {
            return Err(Error::InvalidInput(
                "cover does not reach every required edge".into(),
            ));
        }
        Ok(())
    }

    /// Validate as a cover of all of the host's edges.
    pub fn validate_full(&self, host: &Graph) -> Result<()> {
        self.validate(host, &host.edges())
    }
}

/// Exact minimum number of co-chordal edge-subgraphs covering all edges,
/// with a certified cover; 0 exactly for edgeless graphs.
///
/// Strategy: per connected component, tabulate co-chordality over all edge
/// subsets (a gap — an induced 2-matching — short-circuits most of them),
/// keep the maximal co-chordal sets, and run a branch-and-bound set cover
/// pruned by the induced-matching lower bound. Parts of any cover stay
/// within one component, so the component values add up.
pub fn cochord_number(g: &Graph, budget: &Budget) -> Result<(usize, CochordalCover)> {
    budget.check_vertices(g.n())?;
    budget.check_edges(g.m())?;
    let edges = g.edges();
    if edges.is_empty() {
        return Ok((0, CochordalCover::default()));
    }
    let adj = g.neighbor_masks()?;
    let mut total = 0;
    let mut parts: Vec<Vec<(usize, usize)>> = Vec::new();
    for comp in g.connected_components() {
        let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
        let cedges: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(u, _)| comp_set.contains(&u))
            .collect();
        if cedges.is_empty() {
            continue;
        }
        let (t, comp_parts) = cochord_component(&adj, &cedges)?;
        total += t;
        parts.extend(comp_parts);
    }
    parts.sort();
    let cover = CochordalCover { parts };
    cover
        .validate_full(g)
        .map_err(|e| Error::Inconsistency(format!("computed cover fails validation: {e}")))?;
    Ok((total, cover))
}

/// Exact cover number for one component's edge list. The subset table is
/// `2^m` entries, so even with a raised edge budget a hard cap keeps the
/// allocation sane.
fn cochord_component(
    adj: &[u64],
    edges: &[(usize, usize)],
) -> Result<(usize, Vec<Vec<(usize, usize)>>)> {
    let m = edges.len();
    if m > 26 {
        return Err(Error::BudgetExceeded {
            what: "edges in one component of the cover search",
            actual: m,
            limit: 26,
        });
    }
    let full: u64 = (1u64 << m) - 1;
    // Pairs of disjoint edges and the edges of the host running between
    // them; a subset containing such a pair but none of the connectors has a
    // gap and cannot be co-chordal.
    let mut pairs: Vec<(usize, usize, u64)> = Vec::new();
    let mut strong_pair = vec![false; m * m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let mut conn = 0u64;
            for (k, &(p, q)) in edges.iter().enumerate() {
                let cross = |x: usize, y: usize| {
                    (x == a || x == b) && (y == c || y == d)
                        || (y == a || y == b) && (x == c || x == d)
                };
                if cross(p, q) {
                    conn |= bit(k);
                }
            }
            // No connector exists in the host at all: the pair is an induced
            // 2-matching and no single part may contain both edges.
            let induced = adj[a] & (bit(c) | bit(d)) == 0 && adj[b] & (bit(c) | bit(d)) == 0;
            strong_pair[i * m + j] = induced;
            pairs.push((i, j, conn));
        }
    }
    let cochordal = |s: u64| -> bool {
        for &(i, j, conn) in &pairs {
            if s & bit(i) != 0 && s & bit(j) != 0 && s & conn == 0 {
                return false;
            }
        }
        complement_is_chordal_masks(edges, s)
    };
    let mut table = vec![false; 1usize << m];
    for s in 1..=full {
        table[s as usize] = cochordal(s);
    }
    // Maximal co-chordal sets, each with the list keyed by contained edge.
    let mut maximal: Vec<u64> = Vec::new();
    for s in 1..=full {
        if table[s as usize] && ones(full & !s).all(|e| !table[(s | bit(e)) as usize]) {
            maximal.push(s);
        }
    }
    let by_edge: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            (0..maximal.len())
                .filter(|&i| maximal[i] & bit(e) != 0)
                .collect()
        })
        .collect();
    // Lower bound: a greedy induced 2-matching among the uncovered edges;
    // no co-chordal part can contain two of its edges.
    let lower = |uncovered: u64| -> usize {
        let mut taken: Vec<usize> = Vec::new();
        for e in ones(uncovered) {
            if taken.iter().all(|&f| {
                let (i, j) = (f.min(e), f.max(e));
                strong_pair[i * m + j]
            }) {
                taken.push(e);
            }
        }
        taken.len()
    };
    // Greedy cover for the initial upper bound (always achievable).
    let mut best_parts: Vec<u64> = Vec::new();
    let mut uncovered = full;
    while uncovered != 0 {
        let &s = maximal
            .iter()
            .max_by_key(|&&s| (s & uncovered).count_ones())
            .unwrap();
        best_parts.push(s);
        uncovered &= !s;
    }
    let mut best = best_parts.len();
    let mut stack: Vec<u64> = Vec::new();
    cover_rec(
        full,
        0,
        &maximal,
        &by_edge,
        &lower,
        &mut best,
        &mut best_parts,
        &mut stack,
    );
    let parts = best_parts
        .iter()
        .map(|&s| ones(s).map(|e| edges[e]).collect())
        .collect();
    Ok((best, parts))
}

#[allow(clippy::too_many_arguments)]
fn cover_rec(
    uncovered: u64,
    cost: usize,
    maximal: &[u64],
    by_edge: &[Vec<usize>],
    lower: &dyn Fn(u64) -> usize,
    best: &mut usize,
    best_parts: &mut Vec<u64>,
    stack: &mut Vec<u64>,
) {
    if uncovered == 0 {
        if cost < *best {
            *best = cost;
            *best_parts = stack.clone();
        }
        return;
    }
    if cost + lower(uncovered).max(1) >= *best {
        return;
    }
    let e = ones(uncovered).next().unwrap();
    let mut cands: Vec<usize> = by_edge[e].clone();
    cands.sort_by_key(|&i| (std::cmp::Reverse((maximal[i] & uncovered).count_ones()), i));
    for i in cands {
        stack.push(maximal[i]);
        cover_rec(
            uncovered & !maximal[i],
            cost + 1,
            maximal,
            by_edge,
            lower,
            best,
            best_parts,
            stack,
        );
        stack.pop();
    }
}

/// Chordality of the complement of the subgraph spanned by the edge subset
/// `s`, on `u64` masks (hot path of the cover search).
fn complement_is_chordal_masks(edges: &[(usize, usize)], s: u64) -> bool {
    let mut vmask = 0u64;
    let mut padj = [0u64; 64];
    for e in ones(s) {
        let (u, v) = edges[e];
        vmask |= bit(u) | bit(v);
        padj[u] |= bit(v);
        padj[v] |= bit(u);
    }
    let comp = |v: usize| vmask & !padj[v] & !bit(v);
    // maximum cardinality search over the complement
    let k = vmask.count_ones() as usize;
    let mut visited = 0u64;
    let mut weight = [0usize; 64];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let v = ones(vmask & !visited)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visited |= bit(v);
        order.push(v);
        for u in ones(comp(v) & !visited) {
            weight[u] += 1;
        }
    }
    // reverse visit order = elimination order; later sets are suffix-first
    let mut eliminated_after = 0u64;
    for &v in order.iter().rev() {
        // neighbors of v in the complement that come later in elimination
        // order, i.e. were visited before v
        let later = comp(v) & !eliminated_after & !bit(v);
        for u in ones(later) {
            if later & !bit(u) & !comp(u) != 0 {
                return false;
            }
        }
        eliminated_after |= bit(v);
    }
    true
}

/// One neighborhood-deletion step on a certified cover: pick `w` simplicial
/// in the complement of the first part; every first-part edge then loses an
/// endpoint to `N[w]`, so restricting the remaining parts to `G - N[w]`
/// yields a valid cover with at least one part fewer. Returns `w` (host id)
/// and the restricted cover in host coordinates.
pub fn lemma_cochord_witness(
    g: &Graph,
    cover: &CochordalCover,
) -> Result<(usize, CochordalCover)> {
    if g.m() == 0 {
        return Err(Error::InvalidInput(
            "the neighborhood-deletion step needs at least one edge".into(),
        ));
    }
    cover.validate_full(g)?;
    let (sub, map) = edge_set_subgraph(g.n(), &cover.parts[0])?;
    let comp = sub.complement();
    let w_local = *simplicial_vertices(&comp)
        .first()
        .expect("a chordal complement has a simplicial vertex");
    let w = map[w_local];
    let mut excluded = BitSet::new(g.n());
    excluded.insert(w);
    for x in g.neighbors(w).iter() {
        excluded.insert(x);
    }
    let keeps = |&(a, b): &(usize, usize)| !excluded.contains(a) && !excluded.contains(b);
    let parts: Vec<Vec<(usize, usize)>> = cover.parts[1..]
        .iter()
        .map(|p| p.iter().copied().filter(keeps).collect::<Vec<_>>())
        .filter(|p: &Vec<_>| !p.is_empty())
        .collect();
    let reduced = CochordalCover { parts };
    let remaining: Vec<(usize, usize)> = g.edges().into_iter().filter(|e| keeps(e)).collect();
    reduced.validate(g, &remaining).map_err(|e| {
        Error::Inconsistency(format!(
            "restricted cover fails to certify the deleted graph: {e}"
        ))
    })?;
    Ok((w, reduced))
}
