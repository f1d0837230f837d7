//! Matching-type invariants, all exact and budget-guarded:
//!
//! * [`matching_number`] — maximum matching size,
//! * [`min_maximal_matching_number`] — minimum size of a maximal matching,
//! * [`induced_matching_number`] — maximum induced matching size,
//! * [`has_gap`] — whether some two edges form an induced 2-matching,
//! * [`ind_match_k2c5`] / [`min_match_k2c5`] — the K2/C5-component
//!   variants: extremal values of `m + 2s` over subgraphs with `m` edge
//!   components and `s` five-cycle components.
//!
//! The `ind` variant ranges over *induced* such subgraphs (chordless
//! five-cycles, no edges between components); the `min` variant ranges over
//! *maximal* ones (components are arbitrary 5-cycle subgraphs, chords
//! allowed, and maximality means the uncovered vertices span no edge).

use std::collections::HashMap;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bitset::{low_mask, ones};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::five_cycles;

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Maximum matching size.
pub fn matching_number(g: &Graph, budget: &Budget) -> Result<usize> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let mut memo = HashMap::new();
    Ok(max_matching_rec(&adj, low_mask(g.n()), &mut memo))
}

fn max_matching_rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let Some(v) = ones(mask).find(|&v| adj[v] & mask != 0) else {
        return 0;
    };
    if let Some(&r) = memo.get(&mask) {
        return r;
    }
    let mut best = max_matching_rec(adj, mask & !bit(v), memo);
    for u in ones(adj[v] & mask) {
        best = best.max(1 + max_matching_rec(adj, mask & !bit(v) & !bit(u), memo));
    }
    memo.insert(mask, best);
    best
}

/// Size of a maximal matching built greedily in edge order; a valid upper
/// bound for the minimum maximal matching.
fn greedy_maximal_matching_size(adj: &[u64], n: usize) -> usize {
    let mut used = 0u64;
    let mut k = 0;
    for v in 0..n {
        if used & bit(v) != 0 {
            continue;
        }
        if let Some(u) = ones(adj[v] & !used).find(|&u| u > v) {
            used |= bit(v) | bit(u);
            k += 1;
        }
    }
    k
}

/// Minimum size of a maximal matching (equivalently, of an independent edge
/// dominating set).
pub fn min_maximal_matching_number(g: &Graph, budget: &Budget) -> Result<usize> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let n = g.n();
    let mut best = greedy_maximal_matching_size(&adj, n);
    min_mm_rec(&adj, low_mask(n), 0, 0, &mut best);
    Ok(best)
}

/// Decide vertices in ascending order: each is left unmatched (only if no
/// already-unmatched neighbor, so the final free set is independent) or
/// matched to a later undecided neighbor. Leaves enumerate exactly the
/// maximal matchings.
fn min_mm_rec(adj: &[u64], undecided: u64, free: u64, cost: usize, best: &mut usize) {
    if cost >= *best {
        return;
    }
    let Some(v) = ones(undecided).next() else {
        *best = cost;
        return;
    };
    let vb = bit(v);
    if adj[v] & free == 0 {
        min_mm_rec(adj, undecided & !vb, free | vb, cost, best);
    }
    for u in ones(adj[v] & undecided) {
        min_mm_rec(adj, undecided & !vb & !bit(u), free, cost + 1, best);
    }
}

/// Maximum induced matching size (pairwise disjoint edges with no further
/// edge among their endpoints).
pub fn induced_matching_number(g: &Graph, budget: &Budget) -> Result<usize> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let mut memo = HashMap::new();
    Ok(induced_m_rec(&adj, low_mask(g.n()), &mut memo))
}

fn induced_m_rec(adj: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let Some(v) = ones(mask).find(|&v| adj[v] & mask != 0) else {
        return 0;
    };
    if let Some(&r) = memo.get(&mask) {
        return r;
    }
    let mut best = induced_m_rec(adj, mask & !bit(v), memo);
    for u in ones(adj[v] & mask) {
        let kill = adj[v] | adj[u] | bit(v) | bit(u);
        best = best.max(1 + induced_m_rec(adj, mask & !kill, memo));
    }
    memo.insert(mask, best);
    best
}

/// Whether the graph has a gap: two edges at distance >= 2 (an induced
/// 2-matching). Polynomial pair scan, no budget needed.
pub fn has_gap(g: &Graph) -> bool {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d) {
                return true;
            }
        }
    }
    false
}

/// A subgraph whose connected components are single edges (`k2`) and
/// five-cycles (`c5`, listed in cyclic order). Serialized with its
/// `match_number` (`|k2| + 2 |c5|`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HSubgraph {
    pub k2: Vec<(usize, usize)>,
    pub c5: Vec<[usize; 5]>,
}

impl HSubgraph {
    pub fn match_number(&self) -> usize {
        self.k2.len() + 2 * self.c5.len()
    }

    /// All covered vertices, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.k2.iter().flat_map(|&(u, v)| [u, v]).collect();
        out.extend(self.c5.iter().flatten().copied());
        out.sort_unstable();
        out
    }

    /// Check the components are vertex-disjoint subgraphs of `g` of the
    /// right shapes (5-cycle chords in `g` are allowed).
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let verts = self.vertices();
        if verts.iter().any(|&v| v >= g.n()) {
            return Err(Error::InvalidInput("witness vertex out of range".into()));
        }
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("witness components overlap".into()));
        }
        for &(u, v) in &self.k2 {
            if u == v || !g.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("({u}, {v}) is not an edge")));
            }
        }
        for c in &self.c5 {
            for i in 0..5 {
                let (a, b) = (c[i], c[(i + 1) % 5]);
                if a == b || !g.has_edge(a, b) {
                    return Err(Error::InvalidInput(format!(
                        "cycle {c:?} is missing edge ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Additionally require the induced reading: chordless five-cycles and no
    /// edges of `g` between different components.
    pub fn validate_induced(&self, g: &Graph) -> Result<()> {
        self.validate(g)?;
        for c in &self.c5 {
            for i in 0..5 {
                for j in i + 1..5 {
                    if j != i + 1 && !(i == 0 && j == 4) && g.has_edge(c[i], c[j]) {
                        return Err(Error::InvalidInput(format!("cycle {c:?} has a chord")));
                    }
                }
            }
        }
        let comps: Vec<Vec<usize>> = self
            .k2
            .iter()
            .map(|&(u, v)| vec![u, v])
            .chain(self.c5.iter().map(|c| c.to_vec()))
            .collect();
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                for &x in a {
                    for &y in b {
                        if g.has_edge(x, y) {
                            return Err(Error::InvalidInput(format!(
                                "components joined by edge ({x}, {y})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for HSubgraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HSubgraph", 3)?;
        s.serialize_field("k2", &self.k2)?;
        s.serialize_field("c5", &self.c5)?;
        s.serialize_field("match_number", &self.match_number())?;
        s.end()
    }
}

struct CycleData {
    vertices: [usize; 5],
    vmask: u64,
    closed: u64,
}

fn cycles_by_min(g: &Graph, adj: &[u64], induced_only: bool) -> Vec<Vec<CycleData>> {
    let mut by_min: Vec<Vec<CycleData>> = (0..g.n()).map(|_| Vec::new()).collect();
    for c in five_cycles(g, induced_only) {
        let vmask = c.iter().fold(0u64, |m, &v| m | bit(v));
        let closed = c.iter().fold(vmask, |m, &v| m | adj[v]);
        by_min[c[0]].push(CycleData {
            vertices: c,
            vmask,
            closed,
        });
    }
    by_min
}

/// Maximum of `m + 2s` over induced subgraphs with `m` edge components and
/// `s` (chordless) five-cycle components; 0 with an empty witness when the
/// graph has no edge. Returns the value and a deterministic witness.
pub fn ind_match_k2c5(g: &Graph, budget: &Budget) -> Result<(usize, HSubgraph)> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let by_min = cycles_by_min(g, &adj, true);
    let mut memo = HashMap::new();
    let full = low_mask(g.n());
    let value = ind_k2c5_rec(&adj, &by_min, full, &mut memo);

    // Reconstruct a witness by walking the memoized optimum, preferring the
    // lexicographically smallest component at the lowest usable vertex.
    let mut witness = HSubgraph::default();
    let mut mask = full;
    loop {
        let target = ind_k2c5_rec(&adj, &by_min, mask, &mut memo);
        if target == 0 {
            break;
        }
        let v = ones(mask).find(|&v| adj[v] & mask != 0).unwrap();
        enum Cand {
            K2(usize, usize),
            C5([usize; 5]),
        }
        let mut cands: Vec<(Vec<usize>, u64, usize, Cand)> = Vec::new();
        for u in ones(adj[v] & mask) {
            let kill = adj[v] | adj[u] | bit(v) | bit(u);
            cands.push((vec![v, u], mask & !kill, 1, Cand::K2(v, u)));
        }
        for c in &by_min[v] {
            if c.vmask & mask == c.vmask {
                let mut sorted = c.vertices.to_vec();
                sorted.sort_unstable();
                cands.push((sorted, mask & !c.closed, 2, Cand::C5(c.vertices)));
            }
        }
        cands.sort_by(|a, b| a.0.cmp(&b.0));
        let mut taken = false;
        for (_, after, gain, cand) in cands {
            if gain + ind_k2c5_rec(&adj, &by_min, after, &mut memo) == target {
                match cand {
                    Cand::K2(a, b) => witness.k2.push((a.min(b), a.max(b))),
                    Cand::C5(c) => witness.c5.push(c),
                }
                mask = after;
                taken = true;
                break;
            }
        }
        if !taken {
            if ind_k2c5_rec(&adj, &by_min, mask & !bit(v), &mut memo) != target {
                return Err(Error::Inconsistency(
                    "witness reconstruction lost the optimum".into(),
                ));
            }
            mask &= !bit(v);
        }
    }
    witness.k2.sort_unstable();
    witness.c5.sort_unstable();
    if witness.match_number() != value {
        return Err(Error::Inconsistency(format!(
            "witness value {} != computed optimum {value}",
            witness.match_number()
        )));
    }
    witness.validate_induced(g).map_err(|e| {
        Error::Inconsistency(format!("reconstructed witness fails validation: {e}"))
    })?;
    Ok((value, witness))
}

fn ind_k2c5_rec(
    adj: &[u64],
    by_min: &[Vec<CycleData>],
    mask: u64,
    memo: &mut HashMap<u64, usize>,
) -> usize {
    let Some(v) = ones(mask).find(|&v| adj[v] & mask != 0) else {
        return 0;
    };
    if let Some(&r) = memo.get(&mask) {
        return r;
    }
    // v unused, or in a K2, or in a five-cycle whose minimum vertex it is;
    // taking a component removes its closed neighborhood, which enforces
    // both disjointness and the no-edges-between-components condition.
    let mut best = ind_k2c5_rec(adj, by_min, mask & !bit(v), memo);
    for u in ones(adj[v] & mask) {
        let kill = adj[v] | adj[u] | bit(v) | bit(u);
        best = best.max(1 + ind_k2c5_rec(adj, by_min, mask & !kill, memo));
    }
    for c in &by_min[v] {
        if c.vmask & mask == c.vmask {
            best = best.max(2 + ind_k2c5_rec(adj, by_min, mask & !c.closed, memo));
        }
    }
    memo.insert(mask, best);
    best
}

/// Which five-cycles may serve as components of the `min` variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C5Mode {
    /// Five-cycle subgraphs, chords in the host allowed; components need not
    /// be separated. This is the default reading.
    ChordsAllowed,
    /// The induced reading: chordless five-cycles, components pairwise
    /// non-adjacent. Under this reading a maximal subgraph may not exist.
    StrictInduced,
}

/// Minimum of `m + 2s` over maximal K2/C5-component subgraphs (default
/// chords-allowed reading); 0 when the graph has no edge.
pub fn min_match_k2c5(g: &Graph, budget: &Budget) -> Result<(usize, HSubgraph)> {
    let r = min_match_k2c5_mode(g, C5Mode::ChordsAllowed, budget)?;
    r.ok_or_else(|| {
        Error::Inconsistency("chords-allowed search found no maximal subgraph".into())
    })
}

/// Mode-parameterized version; `None` when no maximal subgraph exists at
/// all (possible only under `StrictInduced`).
pub fn min_match_k2c5_mode(
    g: &Graph,
    mode: C5Mode,
    budget: &Budget,
) -> Result<Option<(usize, HSubgraph)>> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let by_min = cycles_by_min(g, &adj, mode == C5Mode::StrictInduced);
    let mut search = MinSearch {
        adj: &adj,
        by_min: &by_min,
        strict: mode == C5Mode::StrictInduced,
        best: usize::MAX,
        best_parts: None,
        stack: Vec::new(),
    };
    if mode == C5Mode::ChordsAllowed {
        // A greedy maximal matching is an achievable configuration, so the
        // optimum is strictly below this.
        search.best = greedy_maximal_matching_size(&adj, g.n()) + 1;
    }
    search.run(low_mask(g.n()), 0, 0, 0);
    let Some(parts) = search.best_parts else {
        return Ok(None);
    };
    let mut witness = HSubgraph::default();
    for p in parts {
        match p {
            Part::K2(u, v) => witness.k2.push((u.min(v), u.max(v))),
            Part::C5(c) => witness.c5.push(c),
        }
    }
    witness.k2.sort_unstable();
    witness.c5.sort_unstable();
    let value = witness.match_number();
    witness
        .validate(g)
        .map_err(|e| Error::Inconsistency(format!("min witness fails validation: {e}")))?;
    if !is_maximal_h_subgraph(g, &witness)? {
        return Err(Error::Inconsistency("min witness is not maximal".into()));
    }
    Ok(Some((value, witness)))
}

#[derive(Clone, Copy)]
enum Part {
    K2(usize, usize),
    C5([usize; 5]),
}

struct MinSearch<'a> {
    adj: &'a [u64],
    by_min: &'a [Vec<CycleData>],
    strict: bool,
    best: usize,
    best_parts: Option<Vec<Part>>,
    stack: Vec<Part>,
}

impl MinSearch<'_> {
    /// Decide vertices in ascending order: free (only if no free neighbor,
    /// so the uncovered set stays independent — that is exactly maximality),
    /// matched into a K2 with a later undecided neighbor, or into a
    /// five-cycle whose minimum vertex it is. In strict mode vertices
    /// adjacent to an earlier component are `blocked` from joining later
    /// components (they may still be free).
    fn run(&mut self, undecided: u64, free: u64, blocked: u64, cost: usize) {
        if cost >= self.best {
            return;
        }
        let Some(v) = ones(undecided).next() else {
            self.best = cost;
            self.best_parts = Some(self.stack.clone());
            return;
        };
        let vb = bit(v);
        if self.adj[v] & free == 0 {
            self.run(undecided & !vb, free | vb, blocked, cost);
        }
        if self.strict && blocked & vb != 0 {
            return;
        }
        for u in ones(self.adj[v] & undecided) {
            if self.strict && blocked & bit(u) != 0 {
                continue;
            }
            let nb = if self.strict {
                blocked | self.adj[v] | self.adj[u]
            } else {
                blocked
            };
            self.stack.push(Part::K2(v, u));
            self.run(undecided & !vb & !bit(u), free, nb, cost + 1);
            self.stack.pop();
        }
        for c in &self.by_min[v] {
            if c.vmask & undecided != c.vmask {
                continue;
            }
            if self.strict && c.vmask & blocked != 0 {
                continue;
            }
            let nb = if self.strict {
                blocked | (c.closed & !c.vmask)
            } else {
                blocked
            };
            self.stack.push(Part::C5(c.vertices));
            self.run(undecided & !c.vmask, free, nb, cost + 2);
            self.stack.pop();
        }
    }
}

/// Is `h` a maximal K2/C5-component subgraph of `g`, i.e. do the uncovered
/// vertices span no edge? Errors if `h` is not a valid subgraph of `g`.
pub fn is_maximal_h_subgraph(g: &Graph, h: &HSubgraph) -> Result<bool> {
    h.validate(g)?;
    let covered: std::collections::BTreeSet<usize> = h.vertices().into_iter().collect();
    Ok(g.edges()
        .iter()
        .all(|&(u, v)| covered.contains(&u) || covered.contains(&v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn b() -> Budget {
        Budget::default()
    }

    fn two_k2() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn classic_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(matching_number(&c5, &b()).unwrap(), 2);
        assert_eq!(min_maximal_matching_number(&c5, &b()).unwrap(), 2);
        assert_eq!(induced_matching_number(&c5, &b()).unwrap(), 1);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(matching_number(&p4, &b()).unwrap(), 2);
        assert_eq!(min_maximal_matching_number(&p4, &b()).unwrap(), 1);
        assert_eq!(induced_matching_number(&p4, &b()).unwrap(), 1);

        let k2 = Graph::path(2).unwrap();
        assert_eq!(matching_number(&k2, &b()).unwrap(), 1);
        assert_eq!(min_maximal_matching_number(&k2, &b()).unwrap(), 1);
        assert_eq!(induced_matching_number(&k2, &b()).unwrap(), 1);

        assert_eq!(induced_matching_number(&two_k2(), &b()).unwrap(), 2);
        assert_eq!(matching_number(&Graph::empty(3), &b()).unwrap(), 0);
        assert_eq!(min_maximal_matching_number(&Graph::empty(3), &b()).unwrap(), 0);
    }

    #[test]
    fn gap_examples() {
        assert!(has_gap(&two_k2()));
        assert!(!has_gap(&Graph::cycle(5).unwrap()));
        assert!(!has_gap(&Graph::path(4).unwrap()));
        assert!(has_gap(&Graph::path(5).unwrap()));
        assert!(!has_gap(&Graph::complete(6).unwrap()));
    }

    #[test]
    fn k2c5_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let (iv, iw) = ind_match_k2c5(&c5, &b()).unwrap();
        assert_eq!(iv, 2);
        assert_eq!(iw.c5, vec![[0, 1, 2, 3, 4]]);
        let (mv, mw) = min_match_k2c5(&c5, &b()).unwrap();
        assert_eq!(mv, 2);
        assert!(is_maximal_h_subgraph(&c5, &mw).unwrap());

        let p4 = Graph::path(4).unwrap();
        assert_eq!(min_match_k2c5(&p4, &b()).unwrap().0, 1);
        assert_eq!(ind_match_k2c5(&p4, &b()).unwrap().0, 1);

        let c5k2 = Graph::disjoint_union(&c5, &Graph::path(2).unwrap());
        assert_eq!(ind_match_k2c5(&c5k2, &b()).unwrap().0, 3);

        let k2 = Graph::path(2).unwrap();
        assert_eq!(ind_match_k2c5(&k2, &b()).unwrap().0, 1);
        assert_eq!(min_match_k2c5(&k2, &b()).unwrap().0, 1);

        let e = Graph::empty(4);
        assert_eq!(ind_match_k2c5(&e, &b()).unwrap(), (0, HSubgraph::default()));
        assert_eq!(min_match_k2c5(&e, &b()).unwrap().0, 0);
    }

    #[test]
    fn maximality_checks() {
        let c5 = Graph::cycle(5).unwrap();
        let single = HSubgraph {
            k2: vec![(0, 1)],
            c5: vec![],
        };
        assert!(!is_maximal_h_subgraph(&c5, &single).unwrap());
        let two = HSubgraph {
            k2: vec![(0, 1), (2, 3)],
            c5: vec![],
        };
        assert!(is_maximal_h_subgraph(&c5, &two).unwrap());
        let bad = HSubgraph {
            k2: vec![(0, 2)],
            c5: vec![],
        };
        assert!(is_maximal_h_subgraph(&c5, &bad).is_err());
        let overlap = HSubgraph {
            k2: vec![(0, 1), (1, 2)],
            c5: vec![],
        };
        assert!(is_maximal_h_subgraph(&c5, &overlap).is_err());
    }

    #[test]
    fn witness_json_shape() {
        let c5 = Graph::cycle(5).unwrap();
        let (_, w) = ind_match_k2c5(&c5, &b()).unwrap();
        let j = serde_json::to_value(&w).unwrap();
        assert_eq!(j["match_number"], 2);
        assert_eq!(j["k2"], serde_json::json!([]));
        assert_eq!(j["c5"], serde_json::json!([[0, 1, 2, 3, 4]]));
    }

    // ----- brute-force oracles (edge-subset / vertex-subset scans) -----

    fn edge_subset_oracles(g: &Graph) -> (usize, usize, usize) {
        let edges = g.edges();
        let m = edges.len();
        assert!(m <= 20);
        let (mut max_m, mut min_maximal, mut max_induced) = (0usize, usize::MAX, 0usize);
        for s in 0u32..1 << m {
            let chosen: Vec<(usize, usize)> = (0..m)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            let mut verts: Vec<usize> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            let disjoint = verts.windows(2).all(|w| w[0] != w[1]);
            if !disjoint {
                continue;
            }
            let k = chosen.len();
            max_m = max_m.max(k);
            let covered = |x: usize| verts.binary_search(&x).is_ok();
            if edges.iter().all(|&(u, v)| covered(u) || covered(v)) {
                min_maximal = min_maximal.min(k);
            }
            let inside = edges
                .iter()
                .filter(|&&(u, v)| covered(u) && covered(v))
                .count();
            if inside == k {
                max_induced = max_induced.max(k);
            }
        }
        (max_m, min_maximal, max_induced)
    }

    fn component_shape(g: &Graph, comp: &[usize]) -> Option<usize> {
        // Some(weight) if the induced component is K2 (1) or chordless C5 (2).
        let (h, _) = g.induced_subgraph(comp).unwrap();
        match (h.n(), h.m()) {
            (2, 1) => Some(1),
            (5, 5) if (0..5).all(|v| h.degree(v) == 2) && h.is_connected() => Some(2),
            _ => None,
        }
    }

    fn vertex_subset_ind_oracle(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        let mut best = 0;
        for s in 0u32..1 << n {
            let verts: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
            if verts.is_empty() {
                continue;
            }
            let (h, map) = g.induced_subgraph(&verts).unwrap();
            let mut total = 0;
            let mut ok = true;
            for comp in h.connected_components() {
                let old: Vec<usize> = comp.iter().map(|&v| map[v]).collect();
                match component_shape(g, &old) {
                    Some(w) => total += w,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                best = best.max(total);
            }
        }
        best
    }

    fn edge_subset_min_k2c5_oracle(g: &Graph) -> usize {
        // Subgraph chosen as an edge subset; each component must be a single
        // edge or a 5-cycle (as a subgraph: 5 vertices, 5 edges, all degree
        // 2); maximality: uncovered vertices span no edge.
        let edges = g.edges();
        let m = edges.len();
        assert!(m <= 20);
        let mut best = usize::MAX;
        'subset: for s in 0u32..1 << m {
            let chosen: Vec<(usize, usize)> = (0..m)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            let mut verts: Vec<usize> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            verts.dedup();
            // components of the chosen subgraph via union-find
            let mut parent: std::collections::HashMap<usize, usize> =
                verts.iter().map(|&v| (v, v)).collect();
            fn find(p: &mut std::collections::HashMap<usize, usize>, x: usize) -> usize {
                let px = p[&x];
                if px == x {
                    return x;
                }
                let r = find(p, px);
                p.insert(x, r);
                r
            }
            for &(u, v) in &chosen {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent.insert(ru, rv);
            }
            let mut comp_v: std::collections::HashMap<usize, usize> = Default::default();
            let mut comp_e: std::collections::HashMap<usize, usize> = Default::default();
            let mut deg: std::collections::HashMap<usize, usize> = Default::default();
            for &v in &verts {
                let r = find(&mut parent, v);
                *comp_v.entry(r).or_default() += 1;
            }
            for &(u, v) in &chosen {
                let r = find(&mut parent, u);
                *comp_e.entry(r).or_default() += 1;
                *deg.entry(u).or_default() += 1;
                *deg.entry(v).or_default() += 1;
            }
            let mut weight = 0;
            for (&r, &nv) in &comp_v {
                let ne = comp_e[&r];
                match (nv, ne) {
                    (2, 1) => weight += 1,
                    (5, 5) => weight += 2,
                    _ => continue 'subset,
                }
            }
            if verts.iter().any(|&v| deg[&v] > 2) {
                continue;
            }
            let covered = |x: usize| verts.binary_search(&x).is_ok();
            if !edges.iter().all(|&(u, v)| covered(u) || covered(v)) {
                continue;
            }
            best = best.min(weight);
        }
        best
    }

    fn all_graphs_on(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u32..1 << pairs.len()).map(move |s| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    }

    #[test]
    fn oracle_agreement_exhaustive_small() {
        for n in 0..=5 {
            for g in all_graphs_on(n) {
                let (om, omin, oind) = if g.m() == 0 {
                    (0, 0, 0)
                } else {
                    let (a, b_, c) = edge_subset_oracles(&g);
                    (a, b_, c)
                };
                assert_eq!(matching_number(&g, &b()).unwrap(), om);
                assert_eq!(min_maximal_matching_number(&g, &b()).unwrap(), omin);
                assert_eq!(induced_matching_number(&g, &b()).unwrap(), oind);
                assert_eq!(ind_match_k2c5(&g, &b()).unwrap().0, vertex_subset_ind_oracle(&g));
                let omin5 = if g.m() == 0 { 0 } else { edge_subset_min_k2c5_oracle(&g) };
                assert_eq!(min_match_k2c5(&g, &b()).unwrap().0, omin5);
                assert_eq!(has_gap(&g), induced_matching_number(&g, &b()).unwrap() >= 2);
            }
        }
    }

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn oracle_agreement_sampled_6_7() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260823);
        for _ in 0..60 {
            let n = if rng.random_bool(0.5) { 6 } else { 7 };
            let g = random_graph(n, rng.random_range(0.2..0.7), &mut rng);
            if g.m() == 0 || g.m() > 16 {
                continue;
            }
            let (om, omin, oind) = edge_subset_oracles(&g);
            assert_eq!(matching_number(&g, &b()).unwrap(), om);
            assert_eq!(min_maximal_matching_number(&g, &b()).unwrap(), omin);
            assert_eq!(induced_matching_number(&g, &b()).unwrap(), oind);
            assert_eq!(ind_match_k2c5(&g, &b()).unwrap().0, vertex_subset_ind_oracle(&g));
            assert_eq!(min_match_k2c5(&g, &b()).unwrap().0, edge_subset_min_k2c5_oracle(&g));
        }
    }

    #[test]
    fn invariant_inequalities_and_witness_validity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..80 {
            let n = 4 + trial % 5;
            let g = random_graph(n, 0.45, &mut rng);
            let ind = induced_matching_number(&g, &b()).unwrap();
            let mm = matching_number(&g, &b()).unwrap();
            let minm = min_maximal_matching_number(&g, &b()).unwrap();
            let (indh, iw) = ind_match_k2c5(&g, &b()).unwrap();
            let (minh, mw) = min_match_k2c5(&g, &b()).unwrap();
            assert!(ind <= minm && minm <= mm, "ind <= min-match <= match");
            assert!(indh >= ind, "K2/C5 ind variant dominates induced matching");
            assert!(minh <= minm, "every maximal matching is a maximal K2/C5 subgraph");
            iw.validate_induced(&g).unwrap();
            mw.validate(&g).unwrap();
            assert!(is_maximal_h_subgraph(&g, &mw).unwrap());
            assert_eq!(iw.match_number(), indh);
            assert_eq!(mw.match_number(), minh);
        }
    }

    #[test]
    fn strict_mode_never_beats_default() {
        // The strict family is a subfamily, so its minimum (when defined)
        // dominates; C4 is the classic case where it is undefined.
        let c4 = Graph::cycle(4).unwrap();
        assert!(min_match_k2c5_mode(&c4, C5Mode::StrictInduced, &b())
            .unwrap()
            .is_none());
        for n in 1..=5 {
            for g in all_graphs_on(n) {
                let (dv, _) = min_match_k2c5(&g, &b()).unwrap();
                if let Some((sv, sw)) =
                    min_match_k2c5_mode(&g, C5Mode::StrictInduced, &b()).unwrap()
                {
                    assert!(dv <= sv);
                    sw.validate_induced(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn budget_refusal() {
        let tight = Budget::default().with_vertices(3);
        let c5 = Graph::cycle(5).unwrap();
        assert!(matching_number(&c5, &tight).is_err());
        assert!(min_maximal_matching_number(&c5, &tight).is_err());
        assert!(induced_matching_number(&c5, &tight).is_err());
        assert!(ind_match_k2c5(&c5, &tight).is_err());
        assert!(min_match_k2c5(&c5, &tight).is_err());
    }
}
