//! Polytopal complexes, their graphs, and strong connectivity.

mod cycle;
mod edgeset;
mod graph;

use std::collections::BTreeMap;

pub use cycle::{facial_cycle, Cycle};
pub use edgeset::EdgeSet;
pub use graph::{intersect_graphs, Graph, GraphIntersection, MappedGraph};

use crate::geometry::is_subset;
use crate::{Error, Face, FaceLattice, Result};

/// A finite face-closed collection of faces, each labelled by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopalComplex {
    faces: BTreeMap<Face, usize>,
    vertex_universe: usize,
}

impl PolytopalComplex {
    /// Builds a complex from explicit faces. Every face of dimension `k ≥ 1`
    /// must be the union of the `(k − 1)`-faces of the complex inside it.
    pub fn from_faces(
        faces: impl IntoIterator<Item = (Face, usize)>,
        vertex_universe: usize,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (mut f, k) in faces {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() || f.iter().any(|&v| v >= vertex_universe) {
                return Err(Error::NotClosed(f));
            }
            map.insert(f, k);
        }
        let c = PolytopalComplex {
            faces: map,
            vertex_universe,
        };
        c.check_closed()?;
        Ok(c)
    }

    /// All faces of `lattice` contained in one of `generators`, plus the
    /// generators themselves (which may include the polytope, at `dim()`).
    pub fn generated(lattice: &FaceLattice, generators: &[(Face, usize)]) -> Self {
        let mut faces = BTreeMap::new();
        for (g, k) in generators {
            faces.insert(g.clone(), *k);
            for (j, i) in lattice.faces_within(g) {
                faces.insert(lattice.faces(j)[i].clone(), j);
            }
        }
        PolytopalComplex {
            faces,
            vertex_universe: lattice.vertex_count(),
        }
    }

    /// `B(P)`: every proper face.
    pub fn boundary(lattice: &FaceLattice) -> Self {
        let gens: Vec<(Face, usize)> =
            lattice.facets().iter().map(|f| (f.clone(), lattice.dim() - 1)).collect();
        PolytopalComplex::generated(lattice, &gens)
    }

    /// `C(P)`: every face including the polytope itself.
    pub fn of_polytope(lattice: &FaceLattice) -> Self {
        let all: Face = (0..lattice.vertex_count()).collect();
        PolytopalComplex::generated(lattice, &[(all, lattice.dim())])
    }

    /// Union of two complexes placed on disjoint vertex ranges.
    pub fn disjoint_union(&self, other: &PolytopalComplex) -> Self {
        let shift = self.vertex_universe;
        let mut faces = self.faces.clone();
        for (f, &k) in &other.faces {
            faces.insert(f.iter().map(|v| v + shift).collect(), k);
        }
        PolytopalComplex {
            faces,
            vertex_universe: shift + other.vertex_universe,
        }
    }

    fn check_closed(&self) -> Result<()> {
        for (f, &k) in &self.faces {
            if k == 0 {
                if f.len() != 1 {
                    return Err(Error::NotClosed(f.clone()));
                }
                continue;
            }
            let mut union: Vec<usize> = self
                .faces
                .iter()
                .filter(|(g, &j)| j + 1 == k && is_subset(g, f))
                .flat_map(|(g, _)| g.iter().copied())
                .collect();
            union.sort_unstable();
            union.dedup();
            if &union != f {
                return Err(Error::NotClosed(f.clone()));
            }
        }
        Ok(())
    }

    /// Largest face dimension; `None` for an empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.values().copied().max()
    }

    pub fn vertex_universe(&self) -> usize {
        self.vertex_universe
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.faces.contains_key(face)
    }

    pub fn dim_of(&self, face: &[usize]) -> Option<usize> {
        self.faces.get(face).copied()
    }

    /// Faces of dimension `k` in canonical order.
    pub fn faces(&self, k: usize) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter().filter(move |(_, &j)| j == k).map(|(f, _)| f)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Face, usize)> + '_ {
        self.faces.iter().map(|(f, &k)| (f, k))
    }

    /// Faces not contained in any other face of the complex.
    pub fn maximal_faces(&self) -> Vec<(&Face, usize)> {
        self.iter()
            .filter(|(f, _)| !self.faces.keys().any(|g| g.len() > f.len() && is_subset(f, g)))
            .collect()
    }

    /// Every face lies in some face of top dimension.
    pub fn is_pure(&self) -> bool {
        let Some(d) = self.dim() else { return true };
        let top: Vec<&Face> = self.faces(d).collect();
        self.faces.keys().all(|f| top.iter().any(|t| is_subset(f, t)))
    }

    /// The 1-skeleton, with vertices re-indexed in increasing order.
    pub fn graph_of(&self) -> Result<MappedGraph> {
        let edges: Vec<(usize, usize)> = self.faces(1).map(|e| (e[0], e[1])).collect();
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        MappedGraph::from_universe(self.faces(0).map(|v| v[0]), edges)
    }

    /// One node per top face (in canonical order); two nodes are adjacent
    /// when their faces share a face of the next lower dimension.
    pub fn ridge_adjacency_graph(&self) -> Result<Graph> {
        let k = match self.dim() {
            Some(k) if k >= 1 => k,
            Some(k) => return Err(Error::DimensionTooLow(k)),
            None => return Err(Error::NotPure),
        };
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let top: Vec<&Face> = self.faces(k).collect();
        let mut edges = Vec::new();
        for ridge in self.faces(k - 1) {
            let holders: Vec<usize> = (0..top.len()).filter(|&i| is_subset(ridge, top[i])).collect();
            for (a, &i) in holders.iter().enumerate() {
                for &j in &holders[a + 1..] {
                    edges.push((i, j));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::new(top.len(), edges)
    }

    /// Top faces are linked by chains of top faces sharing ridges.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        Ok(self.ridge_adjacency_graph()?.is_connected())
    }

    /// Connectivity of the 1-skeleton of a pure complex of dimension ≥ 1.
    pub fn graph_connectivity_check(&self) -> Result<bool> {
        match self.dim() {
            Some(k) if k >= 1 => {}
            Some(k) => return Err(Error::DimensionTooLow(k)),
            None => return Err(Error::NotPure),
        }
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(self.graph_of()?.graph.is_connected())
    }
}

/// `C(F_1 ∪ … ∪ F_n)` for the first `n` facets of `order`.
pub fn prefix_complex(lattice: &FaceLattice, order: &[usize], n: usize) -> Result<PolytopalComplex> {
    let s = lattice.facets().len();
    if n == 0 || n > order.len() {
        return Err(Error::InvalidOrder);
    }
    let mut gens = Vec::with_capacity(n);
    for &i in &order[..n] {
        let f = lattice
            .facets()
            .get(i)
            .ok_or(Error::InvalidFacet { index: i, count: s })?;
        gens.push((f.clone(), lattice.dim() - 1));
    }
    let c = PolytopalComplex::generated(lattice, &gens);
    if !c.is_pure() {
        return Err(Error::InternalAssertion("prefix complex is not pure".into()));
    }
    Ok(c)
}

/// The graph `G(P)` of a lattice: all vertices and all 1-faces.
pub fn graph_of_lattice(lattice: &FaceLattice) -> Graph {
    Graph::new(
        lattice.vertex_count(),
        lattice.edges().iter().map(|e| (e[0], e[1])),
    )
    .expect("lattice edges form a simple graph")
}
