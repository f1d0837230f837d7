//! Resource guardrails.
//!
//! The invariant searches and the Hochster enumeration are exponential; they
//! refuse inputs above a configurable budget instead of hanging. Budgets can
//! be overridden programmatically, via the CLI, or via the environment:
//! `EIL_BUDGET_VERTICES`, `EIL_BUDGET_SUBSET`, `EIL_BUDGET_EDGES`.

use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_BUDGET: usize = 24;
pub const DEFAULT_SUBSET_BUDGET: usize = 20;
pub const DEFAULT_EDGE_BUDGET: usize = 22;

/// The subset-search algorithms index vertices into `u64` masks, so no
/// budget can open them up beyond 64.
pub const MASK_WIDTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest vertex count accepted by the exponential graph searches.
    pub vertices: usize,
    /// Largest variable count accepted by the Hochster subset enumeration.
    pub subset: usize,
    /// Largest edge count accepted by the exact co-chordal cover search.
    pub edges: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            vertices: DEFAULT_VERTEX_BUDGET,
            subset: DEFAULT_SUBSET_BUDGET,
            edges: DEFAULT_EDGE_BUDGET,
        }
    }
}

impl Budget {
    /// Defaults overlaid with any `EIL_BUDGET_*` environment overrides.
    /// Unparsable values are ignored.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        let read = |name: &str| std::env::var(name).ok().and_then(|v| v.parse::<usize>().ok());
        if let Some(v) = read("EIL_BUDGET_VERTICES") {
            b.vertices = v;
        }
        if let Some(v) = read("EIL_BUDGET_SUBSET") {
            b.subset = v;
        }
        if let Some(v) = read("EIL_BUDGET_EDGES") {
            b.edges = v;
        }
        b
    }

    /// Same budget with the vertex budget replaced (CLI `--budget`).
    pub fn with_vertices(mut self, vertices: usize) -> Budget {
        self.vertices = vertices;
        self
    }

    pub fn with_subset(mut self, subset: usize) -> Budget {
        self.subset = subset;
        self
    }

    pub fn with_edges(mut self, edges: usize) -> Budget {
        self.edges = edges;
        self
    }

    pub fn check_vertices(&self, n: usize) -> Result<()> {
        let limit = self.vertices.min(MASK_WIDTH);
        if n > limit {
            return Err(Error::BudgetExceeded {
                what: "vertex count",
                actual: n,
                limit,
            });
        }
        Ok(())
    }

    pub fn check_subset(&self, vars: usize) -> Result<()> {
        let limit = self.subset.min(MASK_WIDTH);
        if vars > limit {
            return Err(Error::BudgetExceeded {
                what: "variable count",
                actual: vars,
                limit,
            });
        }
        Ok(())
    }

    pub fn check_edges(&self, m: usize) -> Result<()> {
        if m > self.edges {
            return Err(Error::BudgetExceeded {
                what: "edge count",
                actual: m,
                limit: self.edges,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let b = Budget::default();
        assert_eq!(b.vertices, 24);
        assert_eq!(b.subset, 20);
        assert_eq!(b.edges, 22);
    }

    #[test]
    fn checks() {
        let b = Budget::default();
        assert!(b.check_vertices(24).is_ok());
        assert!(matches!(
            b.check_vertices(25),
            Err(Error::BudgetExceeded { actual: 25, limit: 24, .. })
        ));
        assert!(b.check_subset(20).is_ok());
        assert!(b.check_subset(21).is_err());
        assert!(b.check_edges(22).is_ok());
        assert!(b.check_edges(23).is_err());
    }

    #[test]
    fn mask_width_caps_raised_budgets() {
        let b = Budget::default().with_vertices(1000);
        assert!(b.check_vertices(64).is_ok());
        assert!(b.check_vertices(65).is_err());
    }
}
