//! Simplicial complexes presented by their minimal nonfaces, and the
//! Stanley–Reisner correspondence with squarefree monomial ideals.

use crate::bitset::low_mask;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// A simplicial complex on vertices `0..n`, stored as the antichain of
/// minimal nonfaces (as bitmasks). A set is a face exactly when it
/// contains no minimal nonface. With no nonfaces this is the full simplex;
/// the void complex (where even the empty set is not a face) is not
/// representable and never arises from a proper ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    minimal_nonfaces: Vec<u64>,
}

impl SimplicialComplex {
    /// Build from any nonface list; redundant (non-minimal) entries are
    /// dropped. At most 64 vertices are supported.
    pub fn new(n: usize, nonfaces: &[u64]) -> Result<SimplicialComplex> {
        if n > 64 {
            return Err(Error::InvalidInput(format!(
                "a simplicial complex is limited to 64 vertices, got {n}"
            )));
        }
        for &f in nonfaces {
            if f == 0 {
                return Err(Error::InvalidInput(
                    "the empty set cannot be a nonface".into(),
                ));
            }
            if f & !low_mask(n) != 0 {
                return Err(Error::InvalidInput(
                    "nonface mentions a vertex outside the vertex range".into(),
                ));
            }
        }
        let mut mnf: Vec<u64> = nonfaces.to_vec();
        mnf.sort_by_key(|f| (f.count_ones(), *f));
        mnf.dedup();
        let keep: Vec<bool> = mnf
            .iter()
            .map(|&f| !mnf.iter().any(|&g| g != f && g & !f == 0))
            .collect();
        let minimal_nonfaces = mnf
            .into_iter()
            .zip(keep)
            .filter_map(|(f, k)| k.then_some(f))
            .collect();
        Ok(SimplicialComplex { n, minimal_nonfaces })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Minimal nonfaces as bitmasks, sorted by size then value.
    pub fn minimal_nonfaces(&self) -> &[u64] {
        &self.minimal_nonfaces
    }

    pub fn is_face(&self, set: u64) -> bool {
        debug_assert_eq!(set & !low_mask(self.n), 0);
        self.minimal_nonfaces.iter().all(|&f| f & !set != 0)
    }

    /// All faces of the induced subcomplex on `w` (the empty face
    /// included), in ascending mask order within each size. Intended for
    /// cross-checks and small subsets; the enumeration is a plain
    /// hereditary depth-first search.
    pub fn faces_of_subset(&self, w: u64) -> Vec<u64> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| w >> v & 1 == 1).collect();
        let relevant: Vec<u64> = self
            .minimal_nonfaces
            .iter()
            .copied()
            .filter(|&f| f & !w == 0)
            .collect();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((start, face)) = stack.pop() {
            out.push(face);
            for (k, &v) in verts.iter().enumerate().skip(start) {
                let cand = face | 1 << v;
                if relevant.iter().all(|&f| f & !cand != 0) {
                    stack.push((k + 1, cand));
                }
            }
        }
        out.sort_by_key(|f| (f.count_ones(), *f));
        out
    }
}

/// The Stanley–Reisner complex of a squarefree monomial ideal: one vertex
/// per variable, minimal nonfaces the generator supports. Errors on
/// non-squarefree input (polarize first) and on unit generators.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::InvalidInput(
            "the Stanley–Reisner complex needs a squarefree ideal; polarize first".into(),
        ));
    }
    if ideal.num_vars() > 64 {
        return Err(Error::InvalidInput(format!(
            "the Stanley–Reisner construction is limited to 64 variables, got {}",
            ideal.num_vars()
        )));
    }
    let nonfaces: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |m, v| m | 1 << v))
        .collect();
    SimplicialComplex::new(ideal.num_vars(), &nonfaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ideal::{edge_ideal, ideal_power, polarize, Monomial};

    #[test]
    fn face_membership() {
        // Hollow triangle: only the full set is a nonface.
        let hollow = SimplicialComplex::new(3, &[0b111]).unwrap();
        assert!(hollow.is_face(0));
        assert!(hollow.is_face(0b011));
        assert!(!hollow.is_face(0b111));

        // Full simplex: everything is a face.
        let full = SimplicialComplex::new(3, &[]).unwrap();
        assert!(full.is_face(0b111));

        // A singleton nonface removes the vertex from every face.
        let pinched = SimplicialComplex::new(2, &[0b01]).unwrap();
        assert!(!pinched.is_face(0b01));
        assert!(pinched.is_face(0b10));
    }

    #[test]
    fn nonfaces_are_minimized() {
        let c = SimplicialComplex::new(4, &[0b0011, 0b0111, 0b1100]).unwrap();
        assert_eq!(c.minimal_nonfaces(), &[0b0011, 0b1100]);
        assert!(SimplicialComplex::new(4, &[0]).is_err());
        assert!(SimplicialComplex::new(2, &[0b100]).is_err());
        assert!(SimplicialComplex::new(65, &[]).is_err());
    }

    #[test]
    fn stanley_reisner_of_edge_ideals() {
        let c5 = edge_ideal(&Graph::cycle(5).unwrap());
        let sr = stanley_reisner(&c5).unwrap();
        assert_eq!(sr.n_vertices(), 5);
        assert_eq!(sr.minimal_nonfaces().len(), 5);
        // Faces of the full subset are exactly the independent sets of C5.
        let faces = sr.faces_of_subset(0b11111);
        assert_eq!(faces.len(), 1 + 5 + 5);
        assert!(faces.contains(&0b00101));
        assert!(!faces.contains(&0b00011));

        let square = ideal_power(&c5, 2).unwrap();
        assert!(stanley_reisner(&square).is_err());
        let (pol, _) = polarize(&square);
        let sr2 = stanley_reisner(&pol).unwrap();
        assert_eq!(sr2.minimal_nonfaces().len(), 15);
    }

    #[test]
    fn subset_enumeration_respects_the_subset() {
        let k2 = MonomialIdeal::new(
            vec!["x0".into(), "x1".into()],
            vec![Monomial::from_pairs(&[(0, 1), (1, 1)])],
        )
        .unwrap();
        let sr = stanley_reisner(&k2).unwrap();
        assert_eq!(sr.faces_of_subset(0), vec![0]);
        assert_eq!(sr.faces_of_subset(0b01), vec![0, 0b01]);
        assert_eq!(sr.faces_of_subset(0b11), vec![0, 0b01, 0b10]);
    }
}
