use std::collections::VecDeque;

use crate::complex::{EdgeSet, Graph};
use crate::shelling::{line_shelling, Shelling};
use crate::{Error, Polytope, Result};

/// The prefix graphs of a shelling, as edge and vertex masks over `G(P)`.
///
/// Positions are 1-based like the shelling: `G_n` is the graph of
/// `C(F_1 ∪ … ∪ F_n)`, `G(F_n)` the graph of the `n`-th facet, and
/// `I_n = G_{n−1} ∩ G(F_n)` for `n ≥ 2`.
#[derive(Clone, Debug)]
pub struct PrefixContext {
    shelling: Shelling,
    facet_edges: Vec<EdgeSet>,
    facet_vertices: Vec<Vec<bool>>,
    prefix_edges: Vec<EdgeSet>,
    intersection_edges: Vec<EdgeSet>,
    intersection_vertices: Vec<Vec<bool>>,
}

fn assertion(msg: impl Into<String>) -> Error {
    Error::InternalAssertion(msg.into())
}

impl PrefixContext {
    /// Computes a line shelling with `seed` and every prefix graph, checking
    /// on the way that each `G(F_n)` is induced in `G_n`, each `I_n` is
    /// connected, and `G_{s−1}` already holds every edge.
    pub fn new(polytope: &Polytope, seed: u64) -> Result<Self> {
        let d = polytope.dim();
        if d < 3 {
            return Err(Error::DimensionTooLow(d));
        }
        let points = polytope.points().ok_or(Error::NoCoordinates)?;
        let lattice = polytope.lattice();
        let graph = polytope.graph();
        let shelling = line_shelling(lattice, points, seed)?;
        let s = shelling.order.len();

        let mut facet_edges = Vec::with_capacity(s);
        let mut facet_vertices = Vec::with_capacity(s);
        for &fi in &shelling.order {
            let facet = &lattice.facets()[fi];
            let mut mask = vec![false; graph.vertex_count()];
            for &v in facet {
                mask[v] = true;
            }
            let edges = EdgeSet::from_indices(
                graph,
                lattice
                    .faces_within(facet)
                    .into_iter()
                    .filter(|&(k, _)| k == 1)
                    .map(|(_, i)| {
                        let e = &lattice.edges()[i];
                        graph.edge_id(e[0], e[1]).unwrap()
                    }),
            );
            facet_edges.push(edges);
            facet_vertices.push(mask);
        }

        let mut prefix_edges: Vec<EdgeSet> = Vec::with_capacity(s);
        let mut prefix_vertices = vec![false; graph.vertex_count()];
        let mut intersection_edges = Vec::with_capacity(s);
        let mut intersection_vertices = Vec::with_capacity(s);
        for n in 0..s {
            let (ie, iv) = match prefix_edges.last() {
                None => (EdgeSet::empty(graph), vec![false; graph.vertex_count()]),
                Some(before) => (
                    before.intersection(&facet_edges[n])?,
                    prefix_vertices
                        .iter()
                        .zip(&facet_vertices[n])
                        .map(|(a, b)| *a && *b)
                        .collect(),
                ),
            };
            let current = match prefix_edges.last() {
                None => facet_edges[n].clone(),
                Some(before) => before.union(&facet_edges[n])?,
            };
            for (p, f) in prefix_vertices.iter_mut().zip(&facet_vertices[n]) {
                *p |= *f;
            }
            for e in current.iter() {
                let (u, v) = graph.edge(e);
                if facet_vertices[n][u] && facet_vertices[n][v] && !facet_edges[n].contains(e) {
                    return Err(assertion(format!("G(F_{}) is not induced in G_{}", n + 1, n + 1)));
                }
            }
            if n > 0 && !masked_connected(graph, &iv, &ie) {
                return Err(assertion(format!("I_{} is not connected", n + 1)));
            }
            prefix_edges.push(current);
            intersection_edges.push(ie);
            intersection_vertices.push(iv);
        }
        if s < 2 || prefix_edges[s - 2] != EdgeSet::full(graph) {
            return Err(assertion("G_{s-1} misses an edge of G(P)"));
        }
        Ok(PrefixContext {
            shelling,
            facet_edges,
            facet_vertices,
            prefix_edges,
            intersection_edges,
            intersection_vertices,
        })
    }

    pub fn shelling(&self) -> &Shelling {
        &self.shelling
    }

    /// Number of facets `s`.
    pub fn len(&self) -> usize {
        self.shelling.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shelling.order.is_empty()
    }

    /// Lattice index of the facet at position `n`.
    pub fn facet_index(&self, n: usize) -> usize {
        self.shelling.order[n - 1]
    }

    pub fn prefix_edges(&self, n: usize) -> &EdgeSet {
        &self.prefix_edges[n - 1]
    }

    pub fn facet_edges(&self, n: usize) -> &EdgeSet {
        &self.facet_edges[n - 1]
    }

    pub fn facet_contains_vertex(&self, n: usize, v: usize) -> bool {
        self.facet_vertices[n - 1][v]
    }

    /// Edges of `I_n`; empty for `n = 1`.
    pub fn intersection_edges(&self, n: usize) -> &EdgeSet {
        &self.intersection_edges[n - 1]
    }

    pub fn intersection_contains_vertex(&self, n: usize, v: usize) -> bool {
        self.intersection_vertices[n - 1][v]
    }

    /// Smallest `n` with `edges ⊆ G_n`.
    pub fn minimal_prefix(&self, edges: &EdgeSet) -> Result<usize> {
        for (i, p) in self.prefix_edges.iter().enumerate() {
            if edges.is_subset(p)? {
                return Ok(i + 1);
            }
        }
        Err(assertion("edge set is not in G(P)"))
    }

    /// Edges of `edges` in `G_{n−1} ∖ G(F_n)`, the quantity that drops at
    /// every crossing surgery.
    pub fn measure(&self, edges: &EdgeSet, n: usize) -> Result<usize> {
        if n < 2 {
            return Ok(0);
        }
        edges
            .intersection(self.prefix_edges(n - 1))?
            .count_outside(self.facet_edges(n))
    }
}

/// Whether the subgraph with vertex mask `vertices` and edges `edges` is
/// connected. The empty subgraph is not.
fn masked_connected(graph: &Graph, vertices: &[bool], edges: &EdgeSet) -> bool {
    let Some(start) = vertices.iter().position(|&b| b) else {
        return false;
    };
    let mut seen = vec![false; graph.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if !seen[w] && vertices[w] && edges.contains(graph.edge_id(u, w).unwrap()) {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == vertices.iter().filter(|&&b| b).count()
}
