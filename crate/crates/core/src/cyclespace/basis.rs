use std::collections::BTreeMap;

use super::EvenSubgraph;
use crate::complex::EdgeSet;
use crate::{Error, Polytope, Result};

/// Incremental row echelon form over GF(2) with word-packed rows.
///
/// Each stored row remembers which input rows it is the XOR of. Pivots are
/// the lowest set column of a reduced row, and reduction runs over pivots in
/// increasing column order, so the form depends only on the input order.
#[derive(Clone, Debug, Default)]
pub struct Gf2Echelon {
    width: usize,
    inputs: usize,
    pivots: BTreeMap<usize, (Vec<u64>, Vec<u64>)>,
}

fn lowest_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

impl Gf2Echelon {
    /// `width` is the number of columns.
    pub fn new(width: usize) -> Self {
        Gf2Echelon {
            width,
            inputs: 0,
            pivots: BTreeMap::new(),
        }
    }

    fn reduce(&self, row: &mut [u64], combo: &mut Vec<u64>) {
        // A pivot row's lowest bit is its column, so clearing columns in
        // increasing order never reintroduces an earlier one.
        for (&c, (prow, pcombo)) in &self.pivots {
            if row[c / 64] >> (c % 64) & 1 == 1 {
                xor_into(row, prow);
                if combo.len() < pcombo.len() {
                    combo.resize(pcombo.len(), 0);
                }
                xor_into(combo, pcombo);
            }
        }
    }

    /// Adds the next input row; returns whether it raised the rank.
    pub fn push(&mut self, row: &[u64]) -> bool {
        assert_eq!(row.len(), self.width.div_ceil(64));
        let id = self.inputs;
        self.inputs += 1;
        let mut r = row.to_vec();
        let mut combo = vec![0u64; self.inputs.div_ceil(64)];
        combo[id / 64] |= 1 << (id % 64);
        self.reduce(&mut r, &mut combo);
        match lowest_bit(&r) {
            Some(col) => {
                self.pivots.insert(col, (r, combo));
                true
            }
            None => false,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Input row ids whose XOR equals `target`, if `target` is in the row space.
    pub fn solve(&self, target: &[u64]) -> Option<Vec<usize>> {
        let mut r = target.to_vec();
        let mut combo = Vec::new();
        self.reduce(&mut r, &mut combo);
        if lowest_bit(&r).is_some() {
            return None;
        }
        Some(
            (0..combo.len() * 64)
                .filter(|&i| combo[i / 64] >> (i % 64) & 1 == 1)
                .collect(),
        )
    }
}

/// The facial cycles of a polytope as rows over the edge indexing of `G(P)`.
#[derive(Clone, Debug)]
pub struct FacialBasis {
    two_face_ids: Vec<usize>,
    rows: Vec<EdgeSet>,
    echelon: Gf2Echelon,
}

impl FacialBasis {
    pub fn new(polytope: &Polytope) -> Result<Self> {
        if polytope.two_faces().is_empty() {
            return Err(Error::DimensionTooLow(polytope.dim()));
        }
        let rows: Vec<EdgeSet> = polytope
            .facial_cycles()
            .iter()
            .map(|c| c.edge_set().clone())
            .collect();
        let mut echelon = Gf2Echelon::new(polytope.graph().edge_count());
        for r in &rows {
            echelon.push(r.words());
        }
        Ok(FacialBasis {
            two_face_ids: (0..rows.len()).collect(),
            rows,
            echelon,
        })
    }

    pub fn two_face_ids(&self) -> &[usize] {
        &self.two_face_ids
    }

    pub fn rows(&self) -> &[EdgeSet] {
        &self.rows
    }

    /// GF(2) rank of the facial-cycle matrix.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// XOR of the rows of the given 2-faces.
    pub fn combine(&self, ids: &[usize]) -> Result<EdgeSet> {
        let mut acc = self
            .rows
            .first()
            .map(|r| EdgeSet::zeroed(r.ambient(), r.universe()))
            .ok_or(Error::DimensionTooLow(0))?;
        for &i in ids {
            acc.xor_assign(&self.rows[i])?;
        }
        Ok(acc)
    }

    /// Solves for a set of 2-faces whose facial cycles XOR to `target` by
    /// elimination. `None` means `target` is outside the facial span.
    pub fn oracle_decompose(&self, target: &EvenSubgraph) -> Result<Option<Decomposition>> {
        let t = target.edge_set();
        if self.rows[0].ambient() != t.ambient() || self.rows[0].universe() != t.universe() {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.echelon.solve(t.words()).map(|ids| Decomposition {
            two_face_ids: ids.into_iter().map(|i| self.two_face_ids[i]).collect(),
            target: t.clone(),
        }))
    }
}

/// A set of 2-face ids (GF(2) coefficients equal to one) and the even
/// subgraph their facial cycles are meant to sum to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub two_face_ids: Vec<usize>,
    pub target: EdgeSet,
}

impl Decomposition {
    /// XOR of the facial cycles of the chosen 2-faces.
    pub fn reconstruct(&self, polytope: &Polytope) -> Result<EdgeSet> {
        let mut acc = EdgeSet::empty(polytope.graph());
        for &i in &self.two_face_ids {
            let c = polytope
                .facial_cycles()
                .get(i)
                .ok_or_else(|| Error::InternalAssertion(format!("no 2-face {i}")))?;
            acc.xor_assign(c.edge_set())?;
        }
        Ok(acc)
    }

    /// Whether the reconstruction equals the target bit for bit.
    pub fn is_exact(&self, polytope: &Polytope) -> bool {
        self.reconstruct(polytope).is_ok_and(|r| r == self.target)
    }
}
