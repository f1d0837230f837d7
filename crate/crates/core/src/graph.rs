//! Simple undirected graphs.
//!
//! Construction validates simple-graph constraints (no loops, no parallel
//! edges, ids in range); after that a [`Graph`] is immutable except for
//! display labels. Vertex deletions return a *new* graph together with the
//! surviving old ids, so witnesses can always be translated back into host
//! coordinates.

use std::collections::VecDeque;

use crate::bitset::{low_mask, ones, BitSet};
use crate::budget::{Budget, MASK_WIDTH};
use crate::error::{Error, Result};

/// Length of a shortest cycle; forests carry the `Acyclic` marker, which the
/// girth >= k predicates treat as satisfying every finite threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Acyclic => true,
        }
    }

    /// `None` encodes the acyclic (infinite girth) marker.
    pub fn as_option(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    labels: std::collections::BTreeMap<usize, String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices (`n = 0` allowed; deletions produce it).
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
            labels: Default::default(),
        }
    }

    /// Build from an explicit edge list. Rejects out-of-range ids, loops and
    /// duplicate edges (in either orientation).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if g.adj[u].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("cycle needs >= 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Path `P_n` on `n >= 1` vertices.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidInput("path needs >= 1 vertices".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Complete graph `K_n`, `n >= 1`.
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::InvalidInput("complete graph needs >= 1 vertices".into()));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Disjoint union; `a`'s vertices keep their ids, `b`'s are shifted by
    /// `a.n()`. Labels are carried over.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let n = a.n + b.n;
        let mut g = Graph::empty(n);
        for (u, v) in a.edges() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        for (u, v) in b.edges() {
            g.adj[u + a.n].insert(v + a.n);
            g.adj[v + a.n].insert(u + a.n);
        }
        g.labels = a.labels.clone();
        for (&v, lab) in &b.labels {
            g.labels.insert(v + a.n, lab.clone());
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        assert!(v < self.n, "vertex out of range");
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        assert!(v < self.n, "vertex out of range");
        self.labels.insert(v, label.into());
    }

    pub fn labels(&self) -> &std::collections::BTreeMap<usize, String> {
        &self.labels
    }

    /// Complement on the same vertex set (labels preserved).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Induced subgraph on `keep` (any order, no duplicates). Returns the new
    /// graph and the surviving old ids: `map[new_id] = old_id`, ascending.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut sorted: Vec<usize> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != keep.len() {
            return Err(Error::InvalidInput("duplicate vertex in induced subgraph".into()));
        }
        if let Some(&v) = sorted.last() {
            if v >= self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for {} vertices",
                    self.n
                )));
            }
        }
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in sorted.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::empty(sorted.len());
        for (new, &old) in sorted.iter().enumerate() {
            for w in self.adj[old].iter() {
                if back[w] != usize::MAX && back[w] > new {
                    g.adj[new].insert(back[w]);
                    g.adj[back[w]].insert(new);
                }
            }
            if let Some(lab) = self.labels.get(&old) {
                g.labels.insert(new, lab.clone());
            }
        }
        Ok((g, sorted))
    }

    /// Delete one vertex; returns the new graph and `map[new_id] = old_id`.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.delete_vertices(&[v])
    }

    pub fn delete_vertices(&self, remove: &[usize]) -> Result<(Graph, Vec<usize>)> {
        for &v in remove {
            if v >= self.n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range for {} vertices",
                    self.n
                )));
            }
        }
        let mut gone = BitSet::new(self.n);
        for &v in remove {
            gone.insert(v);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Delete `N[v]` (the vertex and all its neighbors).
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )));
        }
        let mut remove = self.adj[v].to_vec();
        remove.push(v);
        self.delete_vertices(&remove)
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. Each can be fed straight back into `induced_subgraph`.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for y in self.adj[x].iter() {
                    if !seen.contains(y) {
                        seen.insert(y);
                        comp.push(y);
                        q.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Exact girth: for each edge, the shortest cycle through it is that edge
    /// plus a shortest path between its endpoints avoiding it.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            if let Some(d) = self.dist_avoiding_edge(u, v) {
                let c = d + 1;
                if best.map_or(true, |b| c < b) {
                    best = Some(c);
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Acyclic,
        }
    }

    pub fn is_forest(&self) -> bool {
        self.girth() == Girth::Acyclic
    }

    fn dist_avoiding_edge(&self, s: usize, t: usize) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for y in self.adj[x].iter() {
                if x == s && y == t {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == t {
                        return Some(dist[y]);
                    }
                    q.push_back(y);
                }
            }
        }
        None
    }

    /// Adjacency rows as `u64` masks for the subset-search algorithms.
    /// Fails beyond 64 vertices regardless of budget.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.n > MASK_WIDTH {
            return Err(Error::BudgetExceeded {
                what: "vertex count (mask algorithms)",
                actual: self.n,
                limit: MASK_WIDTH,
            });
        }
        Ok((0..self.n)
            .map(|v| {
                let mut m = 0u64;
                for u in self.adj[v].iter() {
                    m |= 1u64 << u;
                }
                m
            })
            .collect())
    }
}

/// Maximum size of an independent set (exact, budget-guarded).
pub fn independence_number(g: &Graph, budget: &Budget) -> Result<usize> {
    budget.check_vertices(g.n())?;
    let adj = g.neighbor_masks()?;
    let mut memo = std::collections::HashMap::new();
    Ok(alpha(&adj, low_mask(g.n()), &mut memo))
}

fn alpha(adj: &[u64], mask: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    // Branch on a vertex of maximum degree inside the mask; if even that is
    // isolated, everything left is independent.
    let v = ones(mask)
        .max_by_key(|&v| (adj[v] & mask).count_ones())
        .unwrap();
    let best = if adj[v] & mask == 0 {
        mask.count_ones() as usize
    } else {
        let take = 1 + alpha(adj, mask & !adj[v] & !(1u64 << v), memo);
        let skip = alpha(adj, mask & !(1u64 << v), memo);
        take.max(skip)
    };
    memo.insert(mask, best);
    best
}
