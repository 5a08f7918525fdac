use std::collections::{HashMap, VecDeque};

use super::EdgeSet;
use crate::{Error, Result};

/// A simple undirected graph with a fixed canonical edge indexing.
///
/// Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically;
/// an edge's position in that order is its index in every [`EdgeSet`] over
/// this graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
    fingerprint: u64,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if u.max(v) >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("repeated edge {}-{}", w[0].0, w[0].1)));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        let edge_index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let fingerprint = fingerprint(vertex_count, &list);
        Ok(Graph {
            vertex_count,
            edges: list,
            adjacency,
            edge_index,
            fingerprint,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Identifies this graph's vertex count and edge list.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Degree of every vertex in the subgraph `edges`.
    pub fn degrees_in(&self, edges: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in edges.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// The empty graph and the one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Shortest `from → to` path using only edges in `allowed`, by BFS that
    /// scans neighbours in increasing index order. Returns the vertex sequence.
    pub fn shortest_path_within(&self, from: usize, to: usize, allowed: &EdgeSet) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.vertex_count];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adjacency[u] {
                if parent[w] == usize::MAX && allowed.contains(self.edge_index[&(u.min(w), u.max(w))]) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }

    /// Edge set of a vertex walk; panics if consecutive vertices are not adjacent.
    pub fn path_edges(&self, walk: &[usize]) -> EdgeSet {
        let mut s = EdgeSet::empty(self);
        for w in walk.windows(2) {
            s.toggle(self.edge_id(w[0], w[1]).expect("walk uses a non-edge"));
        }
        s
    }
}

fn fingerprint(n: usize, edges: &[(usize, usize)]) -> u64 {
    const PRIME: u64 = 0x0000_0100_0000_01B3;
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    let mut feed = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(PRIME);
        }
    };
    feed(n as u64);
    for &(u, v) in edges {
        feed(u as u64);
        feed(v as u64);
    }
    h
}

/// A graph whose vertices stand for vertices of some larger universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappedGraph {
    pub graph: Graph,
    /// Local vertex index to universe index, strictly increasing.
    pub vertex_map: Vec<usize>,
}

impl MappedGraph {
    /// Builds a mapped graph from universe-indexed vertices and edges.
    pub fn from_universe(
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut vertex_map: Vec<usize> = vertices.into_iter().collect();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let local: HashMap<usize, usize> =
            vertex_map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = edges
            .into_iter()
            .map(|(u, v)| match (local.get(&u), local.get(&v)) {
                (Some(&a), Some(&b)) => Ok((a, b)),
                _ => Err(Error::InvalidGraph(format!("edge {u}-{v} leaves the vertex set"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MappedGraph {
            graph: Graph::new(vertex_map.len(), edges)?,
            vertex_map,
        })
    }

    /// Edges in universe indices.
    pub fn universe_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| (self.vertex_map[u], self.vertex_map[v]))
    }

    pub fn local_index(&self, universe_vertex: usize) -> Option<usize> {
        self.vertex_map.binary_search(&universe_vertex).ok()
    }
}

/// Common part of two mapped graphs, with maps back into both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphIntersection {
    pub graph: MappedGraph,
    /// Local vertex index of the intersection to local index in `a`.
    pub into_a: Vec<usize>,
    pub into_b: Vec<usize>,
}

/// Graph on the common vertices and common edges of `a` and `b`.
pub fn intersect_graphs(a: &MappedGraph, b: &MappedGraph) -> GraphIntersection {
    let vertices: Vec<usize> = a
        .vertex_map
        .iter()
        .copied()
        .filter(|&v| b.local_index(v).is_some())
        .collect();
    let edges: Vec<(usize, usize)> = a
        .universe_edges()
        .filter(|&(u, v)| {
            matches!((b.local_index(u), b.local_index(v)), (Some(x), Some(y)) if b.graph.edge_id(x, y).is_some())
        })
        .collect();
    let graph = MappedGraph::from_universe(vertices, edges).expect("common edges join common vertices");
    let into_a = graph.vertex_map.iter().map(|&v| a.local_index(v).unwrap()).collect();
    let into_b = graph.vertex_map.iter().map(|&v| b.local_index(v).unwrap()).collect();
    GraphIntersection { graph, into_a, into_b }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edge_order() {
        let g = Graph::new(4, [(3, 2), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(2, 0), Some(1));
        assert_eq!(g.neighbors(2), &[0, 3]);
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn components_and_paths() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert!(!g.is_connected());
        let all = EdgeSet::full(&g);
        assert_eq!(g.shortest_path_within(0, 2, &all), Some(vec![0, 1, 2]));
        assert_eq!(g.shortest_path_within(0, 4, &all), None);
        let mut no01 = all.clone();
        no01.remove(g.edge_id(0, 1).unwrap());
        assert_eq!(g.shortest_path_within(0, 2, &no01), Some(vec![0, 3, 2]));
    }

    #[test]
    fn intersections() {
        let a = MappedGraph::from_universe([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let b = MappedGraph::from_universe([2, 3, 4, 7], [(2, 3), (3, 7), (7, 2), (3, 4)]).unwrap();
        let i = intersect_graphs(&a, &b);
        assert_eq!(i.graph.vertex_map, vec![2, 3, 4]);
        assert_eq!(i.graph.universe_edges().collect::<Vec<_>>(), vec![(2, 3), (3, 4)]);
        assert_eq!(i.into_a, vec![1, 2, 3]);
        assert_eq!(i.into_b, vec![0, 1, 2]);
        assert_eq!(intersect_graphs(&a, &a).graph, a);
        assert_eq!(intersect_graphs(&b, &a).graph, i.graph);
    }
}
