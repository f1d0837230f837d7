//! Monomial-ideal algebra: edge ideals, powers with minimal generating
//! sets, and polarization to the squarefree world.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on raw generator products formed while expanding a power;
/// guards memory independently of the configurable budgets.
const MAX_POWER_PRODUCTS: usize = 2_000_000;

/// A monomial as a sparse exponent map (only exponents >= 1 stored).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: usize) -> Monomial {
        Monomial {
            exps: BTreeMap::from([(v, 1)]),
        }
    }

    /// Build from (variable, exponent) pairs; zero exponents are dropped,
    /// repeated variables accumulate.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            if e > 0 {
                *m.exps.entry(v).or_insert(0) += e;
            }
        }
        m
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.exps.values().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.values().all(|&e| e == 1)
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.keys().copied()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(&v, &e)| other.exponent(v) >= e)
    }
}

/// A monomial ideal: a named, ordered variable list and a minimal
/// generating set (an antichain under divisibility, kept sorted by degree
/// then lexicographic exponent order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Monomial>,
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|m| !gens.iter().any(|g| g != m && g.divides(m)))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(m, k)| k.then_some(m))
        .collect()
}

impl MonomialIdeal {
    /// Construct from any generator list; the list is reduced to the
    /// minimal antichain. Every variable used must be in range.
    pub fn new(variables: Vec<String>, generators: Vec<Monomial>) -> Result<MonomialIdeal> {
        let n = variables.len();
        for g in &generators {
            if let Some(v) = g.support().find(|&v| v >= n) {
                return Err(Error::InvalidInput(format!(
                    "generator uses variable {v}, but only {n} variables are declared"
                )));
            }
            if g.is_one() {
                return Err(Error::InvalidInput(
                    "the unit monomial cannot be a generator".into(),
                ));
            }
        }
        Ok(MonomialIdeal {
            variables,
            generators: minimize(generators),
        })
    }

    pub fn zero(variables: Vec<String>) -> MonomialIdeal {
        MonomialIdeal {
            variables,
            generators: Vec::new(),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// JSON form: the named variable list plus one exponent map per
    /// generator, keyed by variable index.
    pub fn json_value(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .generators
            .iter()
            .map(|g| {
                serde_json::Value::Object(
                    g.exponents()
                        .map(|(v, e)| (v.to_string(), serde_json::json!(e)))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "variables": self.variables, "generators": gens })
    }
}

/// The edge ideal: one squarefree degree-2 generator per edge, in the
/// polynomial ring with one variable per vertex (named by the vertex label
/// when present, `x<i>` otherwise).
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let variables: Vec<String> = (0..g.n())
        .map(|v| g.label(v).map_or_else(|| format!("x{v}"), str::to_string))
        .collect();
    let generators = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_pairs(&[(u, 1), (v, 1)]))
        .collect();
    MonomialIdeal::new(variables, generators).expect("edge generators are always valid")
}

/// The `s`-th power, built incrementally with divisibility reduction at
/// each step so intermediate generator sets stay minimal.
pub fn ideal_power(ideal: &MonomialIdeal, s: usize) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::InvalidInput("power must be at least 1".into()));
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let mut gens: Vec<Monomial> = ideal.generators.to_vec();
    for _ in 1..s {
        let products = gens.len().saturating_mul(ideal.generators.len());
        if products > MAX_POWER_PRODUCTS {
            return Err(Error::BudgetExceeded {
                what: "generator products in the ideal power",
                actual: products,
                limit: MAX_POWER_PRODUCTS,
            });
        }
        let mut next = Vec::with_capacity(products);
        for a in &gens {
            for b in &ideal.generators {
                next.push(a.mul(b));
            }
        }
        gens = minimize(next);
    }
    Ok(MonomialIdeal {
        variables: ideal.variables.clone(),
        generators: gens,
    })
}

/// Polarization: a variable with maximum exponent `d` across the
/// generators becomes `d` fresh squarefree variables, and exponent `e`
/// becomes the product of the first `e` of them. Graded Betti numbers are
/// preserved. Returns the squarefree ideal and, per new variable, the
/// `(original variable, slot)` pair it came from (slots start at 1;
/// variables of maximum exponent at most 1 keep their name and position).
pub fn polarize(ideal: &MonomialIdeal) -> (MonomialIdeal, Vec<(usize, u32)>) {
    let n = ideal.num_vars();
    let mut max_exp = vec![0u32; n];
    for g in &ideal.generators {
        for (v, e) in g.exponents() {
            max_exp[v] = max_exp[v].max(e);
        }
    }
    let mut variables = Vec::new();
    let mut var_map = Vec::new();
    let mut first_slot = vec![0usize; n]; // new index of (v, slot 1)
    for v in 0..n {
        first_slot[v] = variables.len();
        let slots = max_exp[v].max(1);
        for slot in 1..=slots {
            if slots == 1 {
                variables.push(ideal.variables[v].clone());
            } else {
                variables.push(format!("{}^({})", ideal.variables[v], slot));
            }
            var_map.push((v, slot));
        }
    }
    let generators = ideal
        .generators
        .iter()
        .map(|g| {
            let mut pairs: Vec<(usize, u32)> = Vec::with_capacity(g.degree());
            for (v, e) in g.exponents() {
                for k in 0..e as usize {
                    pairs.push((first_slot[v] + k, 1));
                }
            }
            Monomial::from_pairs(&pairs)
        })
        .collect();
    let polarized = MonomialIdeal::new(variables, generators)
        .expect("polarization maps a minimal set to a minimal set");
    (polarized, var_map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ideal_shapes() {
        let k2 = edge_ideal(&Graph::path(2).unwrap());
        assert_eq!(k2.num_vars(), 2);
        assert_eq!(k2.generators(), &[Monomial::from_pairs(&[(0, 1), (1, 1)])]);

        let c5 = edge_ideal(&Graph::cycle(5).unwrap());
        assert_eq!(c5.generators().len(), 5);
        assert!(c5.is_squarefree());
        assert!(c5.generators().iter().all(|g| g.degree() == 2));

        assert!(edge_ideal(&Graph::empty(4)).is_zero());

        let mut labeled = Graph::path(2).unwrap();
        labeled.set_label(0, "a");
        let i = edge_ideal(&labeled);
        assert_eq!(i.variables(), &["a".to_string(), "x1".to_string()]);
    }

    #[test]
    fn monomial_arithmetic() {
        let a = Monomial::from_pairs(&[(0, 2), (1, 1)]);
        let b = Monomial::from_pairs(&[(1, 1), (2, 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::from_pairs(&[(0, 2), (1, 2), (2, 3)]));
        assert_eq!(ab.degree(), 7);
        assert!(a.divides(&ab));
        assert!(b.divides(&ab));
        assert!(!ab.divides(&a));
        assert!(!a.is_squarefree());
        assert!(Monomial::from_pairs(&[(0, 1), (3, 1)]).is_squarefree());
        assert_eq!(Monomial::from_pairs(&[(5, 0)]), Monomial::one());
    }

    #[test]
    fn construction_minimizes() {
        let i = MonomialIdeal::new(
            vec!["x0".into(), "x1".into()],
            vec![
                Monomial::var(0),
                Monomial::from_pairs(&[(0, 1), (1, 1)]),
                Monomial::var(0),
            ],
        )
        .unwrap();
        assert_eq!(i.generators(), &[Monomial::var(0)]);

        assert!(MonomialIdeal::new(vec!["x0".into()], vec![Monomial::var(3)]).is_err());
        assert!(MonomialIdeal::new(vec!["x0".into()], vec![Monomial::one()]).is_err());
    }

    #[test]
    fn powers() {
        let k2 = edge_ideal(&Graph::path(2).unwrap());
        let cube = ideal_power(&k2, 3).unwrap();
        assert_eq!(cube.generators(), &[Monomial::from_pairs(&[(0, 3), (1, 3)])]);

        let c5 = edge_ideal(&Graph::cycle(5).unwrap());
        assert_eq!(ideal_power(&c5, 1).unwrap(), c5);
        let sq = ideal_power(&c5, 2).unwrap();
        assert_eq!(sq.generators().len(), 15);
        assert!(sq.generators().iter().all(|g| g.degree() == 4));
        for (i, a) in sq.generators().iter().enumerate() {
            for (j, b) in sq.generators().iter().enumerate() {
                assert!(i == j || !a.divides(b), "generators must be an antichain");
            }
        }

        let two_k2 = edge_ideal(&Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap());
        let sq = ideal_power(&two_k2, 2).unwrap();
        assert_eq!(sq.generators().len(), 3);

        assert!(ideal_power(&c5, 0).is_err());
        let zero = MonomialIdeal::zero(vec!["x0".into()]);
        assert!(ideal_power(&zero, 2).unwrap().is_zero());
    }

    #[test]
    fn polarization() {
        let sq = MonomialIdeal::new(vec!["x0".into()], vec![Monomial::from_pairs(&[(0, 2)])])
            .unwrap();
        let (p, map) = polarize(&sq);
        assert_eq!(p.num_vars(), 2);
        assert_eq!(p.variables(), &["x0^(1)".to_string(), "x0^(2)".to_string()]);
        assert_eq!(p.generators(), &[Monomial::from_pairs(&[(0, 1), (1, 1)])]);
        assert_eq!(map, vec![(0, 1), (0, 2)]);

        let c5 = edge_ideal(&Graph::cycle(5).unwrap());
        let (p, map) = polarize(&c5);
        assert_eq!((p.clone(), map), (c5.clone(), vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]));

        let (p2, _) = polarize(&ideal_power(&c5, 2).unwrap());
        assert!(p2.num_vars() <= 10);
        assert!(p2.is_squarefree());
        assert_eq!(p2.generators().len(), 15);
    }

    #[test]
    fn json_shape() {
        let k2 = edge_ideal(&Graph::path(2).unwrap());
        let j = k2.json_value();
        assert_eq!(j["variables"], serde_json::json!(["x0", "x1"]));
        assert_eq!(j["generators"], serde_json::json!([{"0": 1, "1": 1}]));
    }
}
