//! Reduced simplicial homology dimensions over GF(2) or the rationals,
//! computed exactly from boundary-matrix ranks.
//!
//! Conventions: the complex `{∅}` has one unit of homology in dimension
//! -1 and nothing else; a cone (in particular a nonempty full simplex) has
//! no reduced homology at all. Induced subcomplexes are decomposed into
//! the join of the components of their restricted nonface hypergraph, and
//! homology of a join is the shifted convolution of the factors, so each
//! matrix stays as small as possible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bitset::ones;
use crate::budget::Budget;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Coefficient field for homology and Betti-number computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Field {
    GF2,
    Rational,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::GF2 => "gf2",
            Field::Rational => "rational",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s {
            "gf2" => Ok(Field::GF2),
            "rational" => Ok(Field::Rational),
            other => Err(Error::InvalidInput(format!(
                "unknown field {other:?}; expected \"gf2\" or \"rational\""
            ))),
        }
    }
}

/// Dimensions of the nonzero reduced homology groups of the induced
/// subcomplex on `w`, keyed by dimension (which can be -1). Zero groups
/// are omitted, so a contractible subcomplex yields an empty map.
pub fn reduced_homology_dims(
    complex: &SimplicialComplex,
    w: u64,
    field: Field,
    budget: &Budget,
) -> Result<BTreeMap<i64, usize>> {
    budget.check_subset(w.count_ones() as usize)?;
    Ok(homology_unchecked(complex, w, field))
}

pub(crate) fn homology_unchecked(
    complex: &SimplicialComplex,
    w: u64,
    field: Field,
) -> BTreeMap<i64, usize> {
    let relevant: Vec<u64> = complex
        .minimal_nonfaces()
        .iter()
        .copied()
        .filter(|&f| f & !w == 0)
        .collect();

    // Vertices that are themselves nonfaces never appear in a face; the
    // nonface antichain guarantees no other restricted nonface mentions
    // them, so they can simply be dropped from the subset.
    let dead: u64 = relevant
        .iter()
        .copied()
        .filter(|f| f.count_ones() == 1)
        .fold(0, |a, f| a | f);
    let live = w & !dead;
    let nonfaces: Vec<u64> = relevant.into_iter().filter(|&f| f & dead == 0).collect();

    if live == 0 {
        // The subcomplex is {∅}.
        return BTreeMap::from([(-1, 1)]);
    }
    // A live vertex in no restricted nonface lies in every facet, making
    // the subcomplex a cone and hence acyclic.
    let touched = nonfaces.iter().fold(0u64, |a, &f| a | f);
    if live & !touched != 0 {
        return BTreeMap::new();
    }

    // Split into nonface-hypergraph components; the subcomplex is the
    // join of the subcomplexes induced on them.
    let mut acc: BTreeMap<i64, usize> = BTreeMap::from([(-1, 1)]);
    let mut remaining = live;
    while remaining != 0 {
        let mut comp = 1u64 << remaining.trailing_zeros();
        loop {
            let grown = nonfaces
                .iter()
                .filter(|&&f| f & comp != 0)
                .fold(comp, |a, &f| a | f);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        remaining &= !comp;
        let comp_nonfaces: Vec<u64> = nonfaces.iter().copied().filter(|&f| f & comp != 0).collect();
        let dims = component_homology(comp, &comp_nonfaces, field);
        if dims.is_empty() {
            return BTreeMap::new();
        }
        let mut next = BTreeMap::new();
        for (&a, &da) in &acc {
            for (&b, &db) in &dims {
                *next.entry(a + b + 1).or_insert(0) += da * db;
            }
        }
        acc = next;
    }
    acc
}

/// Homology of the subcomplex on one nonface component, by boundary
/// ranks: dim H̃_d = f_d - rank ∂_d - rank ∂_{d+1}, with the empty face
/// counted in dimension -1 and the augmentation map as ∂_0.
fn component_homology(comp: u64, nonfaces: &[u64], field: Field) -> BTreeMap<i64, usize> {
    let verts: Vec<usize> = ones(comp).collect();
    let per_vertex: Vec<Vec<u64>> = verts
        .iter()
        .map(|&v| {
            nonfaces
                .iter()
                .copied()
                .filter(|&f| f >> v & 1 == 1)
                .collect()
        })
        .collect();

    // Faces grouped by size, ascending mask order within a size.
    let mut by_size: Vec<Vec<u64>> = vec![vec![0]];
    let mut stack = vec![(0usize, 0u64, 0usize)];
    while let Some((start, face, size)) = stack.pop() {
        for (k, &v) in verts.iter().enumerate().skip(start) {
            let cand = face | 1 << v;
            if per_vertex[k].iter().all(|&f| f & !cand != 0) {
                if by_size.len() == size + 1 {
                    by_size.push(Vec::new());
                }
                by_size[size + 1].push(cand);
                stack.push((k + 1, cand, size + 1));
            }
        }
    }
    for level in &mut by_size {
        level.sort_unstable();
    }

    // rank ∂_k maps faces of size k to faces of size k-1.
    let mut ranks = vec![0usize; by_size.len() + 1];
    for k in 1..by_size.len() {
        ranks[k] = boundary_rank(&by_size[k], &by_size[k - 1], field);
    }

    let mut dims = BTreeMap::new();
    for (k, level) in by_size.iter().enumerate() {
        let d = k as i64 - 1;
        let h = level.len() - ranks[k] - ranks[k + 1];
        if h > 0 {
            dims.insert(d, h);
        }
    }
    if cfg!(debug_assertions) {
        let chi: i64 = by_size
            .iter()
            .enumerate()
            .map(|(k, level)| {
                // A face of size k has dimension k - 1.
                let f = level.len() as i64;
                if k % 2 == 1 { f } else { -f }
            })
            .sum();
        let alt: i64 = dims
            .iter()
            .map(|(&d, &h)| if d % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum();
        debug_assert_eq!(alt, chi, "homology must match the Euler characteristic");
    }
    dims
}

/// Signed boundary entries of one face: removing the bit at position `p`
/// carries sign (-1)^p. Targets are located by binary search.
fn boundary_columns(sources: &[u64], targets: &[u64]) -> Vec<Vec<(usize, i64)>> {
    sources
        .iter()
        .map(|&f| {
            ones(f)
                .enumerate()
                .map(|(p, v)| {
                    let t = f & !(1 << v);
                    let idx = targets.binary_search(&t).expect("boundary face missing");
                    (idx, if p % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect()
}

fn boundary_rank(sources: &[u64], targets: &[u64], field: Field) -> usize {
    if sources.is_empty() || targets.is_empty() {
        return 0;
    }
    let cols = boundary_columns(sources, targets);
    match field {
        Field::GF2 => rank_gf2(&cols, targets.len()),
        Field::Rational => rank_rational(&cols, targets.len()),
    }
}

/// GF(2) rank by bitset elimination over the column vectors.
fn rank_gf2(cols: &[Vec<(usize, i64)>], n_targets: usize) -> usize {
    let words = n_targets.div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for col in cols {
        let mut row = vec![0u64; words];
        for &(t, _) in col {
            row[t / 64] ^= 1 << (t % 64);
        }
        for (p, prow) in &pivots {
            if row[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(prow) {
                    *a ^= b;
                }
            }
        }
        if let Some(wi) = row.iter().position(|&x| x != 0) {
            let p = wi * 64 + row[wi].trailing_zeros() as usize;
            pivots.push((p, row));
        }
    }
    pivots.len()
}

/// Rational rank via fraction-free (Bareiss) integer elimination: every
/// division below is exact, so the arithmetic stays in the integers.
fn rank_rational(cols: &[Vec<(usize, i64)>], n_targets: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|col| {
            let mut row = vec![BigInt::zero(); n_targets];
            for &(t, s) in col {
                row[t] = BigInt::from(s);
            }
            row
        })
        .collect();
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..n_targets {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..n_targets {
                m[i][j] = (&m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j]) / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
