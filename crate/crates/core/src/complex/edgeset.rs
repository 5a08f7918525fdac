use std::fmt;

use super::Graph;
use crate::{Error, Result};

/// A spanning subgraph stored as a word-packed bit vector over the edge
/// indexing of one [`Graph`].
///
/// Edge sets remember a fingerprint of their graph; combining edge sets from
/// different graphs is an [`Error::AmbientMismatch`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    ambient: u64,
    len: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(graph: &Graph) -> Self {
        EdgeSet::zeroed(graph.fingerprint(), graph.edge_count())
    }

    pub(crate) fn zeroed(ambient: u64, len: usize) -> Self {
        EdgeSet {
            ambient,
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(graph: &Graph, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut s = EdgeSet::empty(graph);
        for e in edges {
            s.insert(e);
        }
        s
    }

    /// Every edge of `graph`.
    pub fn full(graph: &Graph) -> Self {
        EdgeSet::from_indices(graph, 0..graph.edge_count())
    }

    pub fn ambient(&self) -> u64 {
        self.ambient
    }

    /// Number of edges of the ambient graph (the bit length).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len && self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} out of range");
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} out of range");
        self.words[e / 64] &= !(1 << (e % 64));
    }

    pub fn toggle(&mut self, e: usize) {
        assert!(e < self.len, "edge {e} out of range");
        self.words[e / 64] ^= 1 << (e % 64);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Edge indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Lowest edge index present.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn same_ambient(&self, other: &EdgeSet) -> Result<()> {
        if self.ambient != other.ambient || self.len != other.len {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// Symmetric difference.
    pub fn xor(&self, other: &EdgeSet) -> Result<EdgeSet> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    pub fn xor_assign(&mut self, other: &EdgeSet) -> Result<()> {
        self.same_ambient(other)?;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_ambient(other)?;
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        Ok(out)
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.same_ambient(other)?;
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        Ok(out)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0))
    }

    /// Number of edges in `self` but not in `other`.
    pub fn count_outside(&self, other: &EdgeSet) -> Result<usize> {
        self.same_ambient(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
