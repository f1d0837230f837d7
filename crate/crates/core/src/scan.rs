//! Batch scanning: canonical forms, exhaustive non-isomorphic connected
//! graph enumeration, seeded random graphs, named construction families,
//! and bulk bounds evaluation with a machine-readable summary.

use std::collections::HashSet;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{evaluate_bounds, BoundsReport, CheckStatus};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::Field;
use crate::structure::{build_hn, whisker};

/// Largest vertex count for canonical forms and exhaustive enumeration;
/// the permutation search is factorial, so this stays small by design.
pub const MAX_CANONICAL_VERTICES: usize = 8;

/// Isomorphism-invariant key: the lexicographically smallest adjacency
/// bitstring over all vertex relabelings (bits appended per added vertex:
/// (0,1), (0,2), (1,2), (0,3), ...), packed together with the vertex
/// count. Labels are ignored. Factorial-time with prefix pruning, so
/// limited to 8 vertices.
pub fn canonical_key(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::InvalidInput(format!(
            "canonical forms are limited to {MAX_CANONICAL_VERTICES} vertices, got {n}"
        )));
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect();
    let n_bits = n * (n - 1) / 2;
    let mut best: Option<Vec<bool>> = None;
    // pi[t] = original vertex placed at new label t.
    let mut pi: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n.max(1)];
    let mut prefix: Vec<bool> = Vec::with_capacity(n_bits);

    fn descend(
        t: usize,
        n: usize,
        adj: &[u64],
        pi: &mut Vec<usize>,
        used: &mut [bool],
        prefix: &mut Vec<bool>,
        tie: bool,
        best: &mut Option<Vec<bool>>,
    ) {
        if t == n {
            // The tie/viable flags along the path are pruning heuristics
            // computed against a possibly stale incumbent; the leaf must
            // re-compare against the current best in full.
            if best.as_ref().is_none_or(|b| prefix.as_slice() < b.as_slice()) {
                *best = Some(prefix.clone());
            }
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let start = prefix.len();
            for &earlier in pi.iter() {
                prefix.push(adj[cand] >> earlier & 1 == 1);
            }
            // Compare the appended segment with the incumbent best.
            let mut still_tie = tie;
            let mut viable = true;
            if let Some(b) = best.as_ref() {
                if still_tie {
                    for k in start..prefix.len() {
                        if prefix[k] != b[k] {
                            viable = !prefix[k] && b[k]; // smaller bit wins
                            still_tie = false;
                            break;
                        }
                    }
                }
            } else {
                still_tie = false;
            }
            if viable {
                used[cand] = true;
                pi.push(cand);
                descend(t + 1, n, adj, pi, used, prefix, still_tie, best);
                pi.pop();
                used[cand] = false;
            }
            prefix.truncate(start);
        }
    }

    if n > 0 {
        descend(0, n, &adj, &mut pi, &mut used, &mut prefix, true, &mut best);
    }
    let bits = best.unwrap_or_default();
    let mut packed = 0u64;
    for (k, &b) in bits.iter().enumerate() {
        if b {
            packed |= 1 << k;
        }
    }
    Ok((n as u64) << 32 | packed)
}

/// All non-isomorphic connected graphs with 1..=n_max vertices, built by
/// the extension ladder (every connected graph on n+1 vertices is a
/// connected graph on n vertices plus one vertex joined to a nonempty
/// subset) with canonical-form deduplication.
pub fn exhaustive_connected(n_max: usize) -> Result<Vec<Graph>> {
    if n_max == 0 || n_max > MAX_CANONICAL_VERTICES {
        return Err(Error::InvalidInput(format!(
            "exhaustive enumeration supports 1..={MAX_CANONICAL_VERTICES} vertices, got {n_max}"
        )));
    }
    let mut out = vec![Graph::empty(1)];
    let mut level = vec![Graph::empty(1)];
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let mut edges = g.edges();
            for subset in 1u64..1 << (n - 1) {
                edges.retain(|&(_, v)| v < n - 1);
                for u in crate::bitset::ones(subset) {
                    edges.push((u, n - 1));
                }
                let cand = Graph::from_edge_list(n, &edges)?;
                if seen.insert(canonical_key(&cand)?) {
                    next.push(cand);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// All non-isomorphic graphs (connected or not) with 1..=n_max vertices:
/// the same ladder, but the new vertex may join any subset, including the
/// empty one.
pub fn exhaustive_all(n_max: usize) -> Result<Vec<Graph>> {
    if n_max == 0 || n_max > MAX_CANONICAL_VERTICES {
        return Err(Error::InvalidInput(format!(
            "exhaustive enumeration supports 1..={MAX_CANONICAL_VERTICES} vertices, got {n_max}"
        )));
    }
    let mut out = vec![Graph::empty(1)];
    let mut level = vec![Graph::empty(1)];
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let mut edges = g.edges();
            for subset in 0u64..1 << (n - 1) {
                edges.retain(|&(_, v)| v < n - 1);
                for u in crate::bitset::ones(subset) {
                    edges.push((u, n - 1));
                }
                let cand = Graph::from_edge_list(n, &edges)?;
                if seen.insert(canonical_key(&cand)?) {
                    next.push(cand);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// How a scan produces its graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// All non-isomorphic connected graphs with at most `n_max` vertices.
    Exhaustive { n_max: usize },
    /// `count` seeded G(n, 1/2) graphs (each pair an independent coin).
    Random { seed: u64, n: usize, count: usize },
    /// A named construction ladder: `hn`, `whn`, `cycle`, `path`,
    /// `complete`.
    Family { name: String },
}

impl GeneratorSpec {
    fn describe(&self) -> String {
        match self {
            GeneratorSpec::Exhaustive { n_max } => format!("exhaustive<={n_max}"),
            GeneratorSpec::Random { seed, n, count } => {
                format!("random(seed={seed},n={n},count={count})")
            }
            GeneratorSpec::Family { name } => format!("family:{name}"),
        }
    }
}

/// Materialize a generator spec as (graph, optional display name) pairs.
pub fn generate(spec: &GeneratorSpec) -> Result<Vec<(Graph, Option<String>)>> {
    match spec {
        GeneratorSpec::Exhaustive { n_max } => Ok(exhaustive_connected(*n_max)?
            .into_iter()
            .map(|g| (g, None))
            .collect()),
        GeneratorSpec::Random { seed, n, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut graphs = Vec::with_capacity(*count);
            for k in 0..*count {
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        if rng.random_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                graphs.push((
                    Graph::from_edge_list(*n, &edges)?,
                    Some(format!("random[{k}]")),
                ));
            }
            Ok(graphs)
        }
        GeneratorSpec::Family { name } => {
            let mut graphs = Vec::new();
            match name.as_str() {
                "hn" => {
                    for k in 1..=3 {
                        graphs.push((build_hn(k)?, Some(format!("H_{k}"))));
                    }
                }
                "whn" => {
                    for k in 1..=2 {
                        graphs.push((whisker(&build_hn(k)?), Some(format!("W(H_{k})"))));
                    }
                }
                "cycle" => {
                    for k in 3..=8 {
                        graphs.push((Graph::cycle(k)?, Some(format!("C{k}"))));
                    }
                }
                "path" => {
                    for k in 2..=8 {
                        graphs.push((Graph::path(k)?, Some(format!("P{k}"))));
                    }
                }
                "complete" => {
                    for k in 2..=8 {
                        graphs.push((Graph::complete(k)?, Some(format!("K{k}"))));
                    }
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown family {other:?}; expected hn, whn, cycle, path, or complete"
                    )))
                }
            }
            Ok(graphs)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub generator: GeneratorSpec,
    /// Powers 1..=s_max are evaluated for every graph.
    pub s_max: usize,
    pub field: Field,
    pub budget: Budget,
}

/// A certified instance where both the induced-matching lower bound and
/// the co-chordal upper bound are strict simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictGap {
    pub graph_index: usize,
    pub name: Option<String>,
    pub s: usize,
    pub lower: i64,
    pub reg: i64,
    pub upper: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub generator: String,
    pub seed: Option<u64>,
    pub graphs: usize,
    pub reports: usize,
    pub checks_holds: usize,
    pub checks_violated: usize,
    pub checks_skipped: usize,
    pub strict_gaps: Vec<StrictGap>,
}

impl ScanSummary {
    pub fn json_value(&self) -> serde_json::Value {
        let gaps: Vec<serde_json::Value> = self
            .strict_gaps
            .iter()
            .map(|g| {
                serde_json::json!({
                    "graph_index": g.graph_index,
                    "name": g.name,
                    "s": g.s,
                    "lower": g.lower,
                    "reg": g.reg,
                    "upper": g.upper,
                })
            })
            .collect();
        serde_json::json!({
            "generator": self.generator,
            "seed": self.seed,
            "graphs": self.graphs,
            "reports": self.reports,
            "checks": {
                "holds": self.checks_holds,
                "violated": self.checks_violated,
                "skipped": self.checks_skipped,
            },
            "strict_gaps": gaps,
        })
    }
}

pub struct ScanOutput {
    pub reports: Vec<BoundsReport>,
    pub summary: ScanSummary,
}

/// Run the scan: generate, evaluate every graph at every power (fanned
/// out across threads in contiguous chunks, so output order is fixed),
/// and summarize check statuses plus certified strict-gap instances.
pub fn scan(config: &ScanConfig) -> Result<ScanOutput> {
    if config.s_max == 0 {
        return Err(Error::InvalidInput("s_max must be at least 1".into()));
    }
    let graphs = generate(&config.generator)?;
    let jobs: Vec<(usize, &Graph, Option<&String>, usize)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(gi, (g, name))| (1..=config.s_max).map(move |s| (gi, g, name.as_ref(), s)))
        .collect();

    let run = |&(gi, g, name, s): &(usize, &Graph, Option<&String>, usize)| {
        let mut report = evaluate_bounds(g, s, config.field, &config.budget);
        report.graph.name = name.cloned();
        (gi, report)
    };
    let workers = thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(jobs.len().max(1));
    let mut indexed: Vec<(usize, BoundsReport)> = Vec::with_capacity(jobs.len());
    if workers <= 1 {
        indexed.extend(jobs.iter().map(run));
    } else {
        let chunk_size = jobs.len().div_ceil(workers);
        thread::scope(|sc| {
            let handles: Vec<_> = jobs
                .chunks(chunk_size)
                .map(|chunk| sc.spawn(move || chunk.iter().map(run).collect::<Vec<_>>()))
                .collect();
            for h in handles {
                indexed.extend(h.join().expect("scan worker panicked"));
            }
        });
    }

    let mut summary = ScanSummary {
        generator: config.generator.describe(),
        seed: match config.generator {
            GeneratorSpec::Random { seed, .. } => Some(seed),
            _ => None,
        },
        graphs: graphs.len(),
        reports: indexed.len(),
        checks_holds: 0,
        checks_violated: 0,
        checks_skipped: 0,
        strict_gaps: Vec::new(),
    };
    for (gi, report) in &indexed {
        for check in &report.checks {
            match check.status {
                CheckStatus::Holds => summary.checks_holds += 1,
                CheckStatus::Violated => summary.checks_violated += 1,
                CheckStatus::SkippedOverBudget => summary.checks_skipped += 1,
            }
        }
        if let (Some(reg), Some(ind), Some(coch)) = (
            report.reg,
            report.invariants.ind_match,
            report.invariants.cochord,
        ) {
            let reg = reg as i64;
            let base = 2 * report.s as i64;
            let lower = base + ind as i64 - 1;
            let upper = base + coch as i64 - 1;
            if lower < reg && reg < upper {
                summary.strict_gaps.push(StrictGap {
                    graph_index: *gi,
                    name: report.graph.name.clone(),
                    s: report.s,
                    lower,
                    reg,
                    upper,
                });
            }
        }
    }
    Ok(ScanOutput {
        reports: indexed.into_iter().map(|(_, r)| r).collect(),
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        let c5 = Graph::cycle(5).unwrap();
        // A scrambled relabeling of C5: 0-2-4-1-3-0.
        let scrambled =
            Graph::from_edge_list(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&c5).unwrap(), canonical_key(&scrambled).unwrap());

        let p4 = Graph::path(4).unwrap();
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p4).unwrap(), canonical_key(&star).unwrap());

        // Same degree sequence, different graphs.
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(
            canonical_key(&c6).unwrap(),
            canonical_key(&two_triangles).unwrap()
        );

        assert!(canonical_key(&Graph::empty(9)).is_err());
    }

    #[test]
    fn exhaustive_counts_match_the_classic_sequence() {
        let all = exhaustive_connected(7).unwrap();
        let mut by_n = vec![0usize; 8];
        for g in &all {
            assert!(g.is_connected());
            by_n[g.n()] += 1;
        }
        assert_eq!(&by_n[1..], &[1, 1, 2, 6, 21, 112, 853]);

        let mut keys = HashSet::new();
        for g in &all {
            assert!(keys.insert(canonical_key(g).unwrap()), "duplicate graph");
        }
        assert!(exhaustive_connected(0).is_err());
        assert!(exhaustive_connected(9).is_err());
    }

    #[test]
    fn exhaustive_all_counts() {
        let all = exhaustive_all(6).unwrap();
        let mut by_n = vec![0usize; 7];
        for g in &all {
            by_n[g.n()] += 1;
        }
        assert_eq!(&by_n[1..], &[1, 2, 4, 11, 34, 156]);
        let mut keys = HashSet::new();
        for g in &all {
            assert!(keys.insert(canonical_key(g).unwrap()), "duplicate graph");
        }
    }

    #[test]
    fn random_generation_is_seed_deterministic() {
        let spec = GeneratorSpec::Random { seed: 7, n: 8, count: 5 };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a.len(), 5);
        for ((ga, _), (gb, _)) in a.iter().zip(&b) {
            assert_eq!(ga.edges(), gb.edges());
            assert_eq!(ga.n(), 8);
        }
        let other = generate(&GeneratorSpec::Random { seed: 8, n: 8, count: 5 }).unwrap();
        assert!(a.iter().zip(&other).any(|((ga, _), (go, _))| ga.edges() != go.edges()));
    }

    #[test]
    fn families() {
        let whn = generate(&GeneratorSpec::Family { name: "whn".into() }).unwrap();
        assert_eq!(whn.len(), 2);
        assert_eq!(whn[0].1.as_deref(), Some("W(H_1)"));
        assert_eq!((whn[0].0.n(), whn[0].0.m()), (10, 10));
        assert_eq!((whn[1].0.n(), whn[1].0.m()), (20, 21));

        let cycles = generate(&GeneratorSpec::Family { name: "cycle".into() }).unwrap();
        assert_eq!(cycles.len(), 6);
        assert!(generate(&GeneratorSpec::Family { name: "moebius".into() }).is_err());
    }

    #[test]
    fn exhaustive_scan_small_has_no_violations() {
        let config = ScanConfig {
            generator: GeneratorSpec::Exhaustive { n_max: 5 },
            s_max: 1,
            field: Field::GF2,
            budget: Budget::default(),
        };
        let out = scan(&config).unwrap();
        assert_eq!(out.summary.graphs, 31);
        assert_eq!(out.summary.reports, 31);
        assert_eq!(out.summary.checks_violated, 0);
        assert_eq!(out.summary.checks_skipped, 0);
        assert!(out.reports.iter().all(|r| r.violations().is_empty()));
        // K1 yields no checks; every other graph yields at least (a)-(f).
        assert!(out.reports.iter().filter(|r| r.graph.n > 1).all(|r| r.checks.len() >= 6));
        // Any recorded strict gap must be internally consistent.
        for gap in &out.summary.strict_gaps {
            assert!(gap.lower < gap.reg && gap.reg < gap.upper);
        }
    }

    #[test]
    fn scan_output_order_is_deterministic() {
        let config = ScanConfig {
            generator: GeneratorSpec::Random { seed: 7, n: 6, count: 6 },
            s_max: 2,
            field: Field::GF2,
            budget: Budget::default(),
        };
        let a = scan(&config).unwrap();
        let b = scan(&config).unwrap();
        assert_eq!(a.summary, b.summary);
        assert_eq!(a.summary.seed, Some(7));
        assert_eq!(a.reports.len(), 12);
        for (ra, rb) in a.reports.iter().zip(&b.reports) {
            assert_eq!(ra.json_value(), rb.json_value());
        }
        // Reports come out graph-major, power-minor.
        let order: Vec<(Option<String>, usize)> = a
            .reports
            .iter()
            .map(|r| (r.graph.name.clone(), r.s))
            .collect();
        assert_eq!(order[0], (Some("random[0]".into()), 1));
        assert_eq!(order[1], (Some("random[0]".into()), 2));
        assert_eq!(order[2], (Some("random[1]".into()), 1));
    }

    #[test]
    fn scan_rejects_bad_config() {
        let config = ScanConfig {
            generator: GeneratorSpec::Exhaustive { n_max: 3 },
            s_max: 0,
            field: Field::GF2,
            budget: Budget::default(),
        };
        assert!(scan(&config).is_err());
    }
}
