use super::{EdgeSet, Graph};
use crate::{Error, FaceLattice, Result};

/// A simple cycle of an ambient graph, kept both as a cyclic vertex sequence
/// and as an edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
    edge_set: EdgeSet,
}

impl Cycle {
    /// Validates a cyclic vertex sequence: at least three distinct vertices,
    /// consecutive ones adjacent (including last to first).
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!("{vertices:?} is too short")));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle(format!("{vertices:?} repeats a vertex")));
        }
        let mut edge_set = EdgeSet::empty(graph);
        for (i, &u) in vertices.iter().enumerate() {
            let v = vertices[(i + 1) % vertices.len()];
            let e = graph
                .edge_id(u, v)
                .ok_or_else(|| Error::InvalidCycle(format!("{u}-{v} is not an edge")))?;
            edge_set.insert(e);
        }
        Ok(Cycle { vertices, edge_set })
    }

    /// Reads a connected 2-regular edge set as a cycle in canonical
    /// orientation.
    pub fn from_edge_set(graph: &Graph, edges: &EdgeSet) -> Result<Self> {
        let start = match edges.first() {
            Some(e) => graph.edge(e).0,
            None => return Err(Error::InvalidCycle("empty edge set".into())),
        };
        let deg = graph.degrees_in(edges);
        if let Some(v) = deg.iter().position(|&d| d != 0 && d != 2) {
            return Err(Error::InvalidCycle(format!("vertex {v} has degree {}", deg[v])));
        }
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = graph
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev && edges.contains(graph.edge_id(cur, w).unwrap()))
                .expect("degree two");
            if next == start {
                break;
            }
            walk.push(next);
            prev = cur;
            cur = next;
        }
        if walk.len() != edges.count() {
            return Err(Error::InvalidCycle("edge set is not connected".into()));
        }
        let mut c = Cycle::new(graph, walk)?;
        c.canonicalize();
        Ok(c)
    }

    /// Rotates to start at the smallest vertex and proceed toward its smaller
    /// neighbour on the cycle.
    pub fn canonicalize(&mut self) {
        let n = self.vertices.len();
        let i = (0..n).min_by_key(|&i| self.vertices[i]).unwrap();
        self.vertices.rotate_left(i);
        if self.vertices[n - 1] < self.vertices[1] {
            self.vertices[1..].reverse();
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edge_set
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Boundary cycle of a 2-face, in canonical orientation. `graph` must be the
/// graph of `lattice`.
pub fn facial_cycle(lattice: &FaceLattice, graph: &Graph, two_face: &[usize]) -> Result<Cycle> {
    let edges = EdgeSet::from_indices(
        graph,
        lattice
            .edges()
            .iter()
            .filter(|e| crate::geometry::is_subset(e, two_face))
            .map(|e| graph.edge_id(e[0], e[1]).expect("lattice edge in graph")),
    );
    let cycle = Cycle::from_edge_set(graph, &edges).map_err(|_| Error::Malformed2Face(two_face.to_vec()))?;
    if cycle.vertices().len() != two_face.len() {
        return Err(Error::Malformed2Face(two_face.to_vec()));
    }
    Ok(cycle)
}
