//! The cycle space `Z(G)` over GF(2).
//!
//! Spanning subgraphs are [`EdgeSet`]s; addition is symmetric difference.
//! This module provides the even-subgraph type, cycle extraction, the
//! facial-cycle generating set with an elimination oracle, and bipartiteness.

mod basis;
mod bipartite;

use std::collections::{HashMap, VecDeque};

use rand::seq::index::sample;
use rand::Rng;

pub use basis::{Decomposition, FacialBasis, Gf2Echelon};
pub use bipartite::{bipartite_via_2faces, is_bipartite, odd_facial_cycle, Bipartiteness};

use crate::complex::{Cycle, EdgeSet, Graph};
use crate::{seed, Error, Result};

/// An edge set in which every vertex has even degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenSubgraph(EdgeSet);

impl EvenSubgraph {
    pub fn new(graph: &Graph, edges: EdgeSet) -> Result<Self> {
        if edges.ambient() != graph.fingerprint() {
            return Err(Error::AmbientMismatch);
        }
        let odd = odd_vertices(graph, &edges);
        if odd.is_empty() {
            Ok(EvenSubgraph(edges))
        } else {
            Err(Error::NotEven(odd))
        }
    }

    pub fn empty(graph: &Graph) -> Self {
        EvenSubgraph(EdgeSet::empty(graph))
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.0
    }

    pub fn into_edge_set(self) -> EdgeSet {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn odd_vertices(graph: &Graph, edges: &EdgeSet) -> Vec<usize> {
    graph
        .degrees_in(edges)
        .iter()
        .enumerate()
        .filter(|(_, &d)| d % 2 == 1)
        .map(|(v, _)| v)
        .collect()
}

pub fn is_even(graph: &Graph, edges: &EdgeSet) -> bool {
    graph.degrees_in(edges).iter().all(|d| d % 2 == 0)
}

/// Symmetric difference of two edge sets over the same graph.
pub fn xor(a: &EdgeSet, b: &EdgeSet) -> Result<EdgeSet> {
    a.xor(b)
}

/// Splits an even subgraph into edge-disjoint cycles.
///
/// Repeatedly walks from the smallest vertex of nonzero degree, always taking
/// the smallest unused incident edge, until some vertex repeats; the closed
/// part of the walk is emitted and removed.
pub fn split_into_cycles(graph: &Graph, even: &EvenSubgraph) -> Result<Vec<Cycle>> {
    let mut rest = even.edge_set().clone();
    let mut deg = graph.degrees_in(&rest);
    let mut out = Vec::new();
    while let Some(start) = deg.iter().position(|&d| d > 0) {
        let mut walk = vec![start];
        let mut pos: HashMap<usize, usize> = HashMap::from([(start, 0)]);
        let mut used = EdgeSet::empty(graph);
        let mut cur = start;
        let from = loop {
            let (next, e) = graph
                .neighbors(cur)
                .iter()
                .map(|&w| (w, graph.edge_id(cur, w).unwrap()))
                .find(|&(_, e)| rest.contains(e) && !used.contains(e))
                .ok_or_else(|| Error::InternalAssertion("walk stuck in an even subgraph".into()))?;
            used.insert(e);
            if let Some(&i) = pos.get(&next) {
                break i;
            }
            pos.insert(next, walk.len());
            walk.push(next);
            cur = next;
        };
        let cycle = Cycle::new(graph, walk[from..].to_vec())?;
        for e in cycle.edge_set().iter() {
            rest.remove(e);
            let (u, v) = graph.edge(e);
            deg[u] -= 1;
            deg[v] -= 1;
        }
        out.push(cycle);
    }
    Ok(out)
}

/// `|E| − |V| + c`, the dimension of the cycle space.
pub fn cycle_space_dimension(graph: &Graph) -> usize {
    graph.edge_count() + graph.component_count() - graph.vertex_count()
}

/// Fundamental cycles of the BFS spanning forest (smallest index first),
/// one per non-tree edge, in edge-index order of those chords.
pub fn fundamental_cycles(graph: &Graph) -> Vec<EdgeSet> {
    let n = graph.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree = EdgeSet::empty(graph);
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    tree.insert(graph.edge_id(u, w).unwrap());
                    queue.push_back(w);
                }
            }
        }
    }
    (0..graph.edge_count())
        .filter(|&e| !tree.contains(e))
        .map(|e| {
            let (mut u, mut v) = graph.edge(e);
            let mut c = EdgeSet::empty(graph);
            c.insert(e);
            while u != v {
                if depth[u] < depth[v] {
                    std::mem::swap(&mut u, &mut v);
                }
                c.toggle(graph.edge_id(u, parent[u]).unwrap());
                u = parent[u];
            }
            c
        })
        .collect()
}

/// Seeded random element of `Z(G)`: the XOR of `chords` distinct fundamental
/// cycles chosen uniformly, or of each fundamental cycle independently with
/// probability ½ when `chords` is `None`.
pub fn random_even_subgraph(graph: &Graph, chords: Option<usize>, seed: u64) -> EvenSubgraph {
    let basis = fundamental_cycles(graph);
    let mut rng = seed::rng(seed::mix(seed, 0x45_56_45_4e));
    let chosen: Vec<usize> = match chords {
        Some(k) => {
            let mut v = sample(&mut rng, basis.len(), k.min(basis.len())).into_vec();
            v.sort_unstable();
            v
        }
        None => (0..basis.len()).filter(|_| rng.gen_bool(0.5)).collect(),
    };
    let mut acc = EdgeSet::empty(graph);
    for i in chosen {
        acc.xor_assign(&basis[i]).unwrap();
    }
    EvenSubgraph(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cube_graph() -> Graph {
        let edges = (0..8usize).flat_map(|v| {
            (0..3).map(move |i| (v, v ^ (1 << i))).filter(|(a, b)| a < b)
        });
        Graph::new(8, edges).unwrap()
    }

    #[test]
    fn evenness() {
        let g = cube_graph();
        assert!(is_even(&g, &EdgeSet::empty(&g)));
        assert!(!is_even(&g, &EdgeSet::from_indices(&g, [0])));
        assert_eq!(
            EvenSubgraph::new(&g, EdgeSet::from_indices(&g, [0])),
            Err(Error::NotEven(vec![0, 1]))
        );
    }

    #[test]
    fn dimensions() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(cycle_space_dimension(&c4), 1);
        assert_eq!(cycle_space_dimension(&cube_graph()), 5);
        let q4 = Graph::new(
            16,
            (0..16usize).flat_map(|v| (0..4).map(move |i| (v, v ^ (1 << i))).filter(|(a, b)| a < b)),
        )
        .unwrap();
        assert_eq!(cycle_space_dimension(&q4), 17);
        assert_eq!(fundamental_cycles(&q4).len(), 17);
    }

    #[test]
    fn splitting() {
        let g = cube_graph();
        assert!(split_into_cycles(&g, &EvenSubgraph::empty(&g)).unwrap().is_empty());
        let square = Cycle::new(&g, vec![0, 1, 3, 2]).unwrap();
        let even = EvenSubgraph::new(&g, square.edge_set().clone()).unwrap();
        let parts = split_into_cycles(&g, &even).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].edge_set(), square.edge_set());
    }

    proptest! {
        #[test]
        fn random_elements_are_even_and_split_exactly(seed in any::<u64>(), k in proptest::option::of(0usize..6)) {
            let g = cube_graph();
            let a = random_even_subgraph(&g, k, seed);
            let b = random_even_subgraph(&g, None, seed ^ 1);
            prop_assert!(is_even(&g, a.edge_set()));
            prop_assert!(is_even(&g, &xor(a.edge_set(), b.edge_set()).unwrap()));
            let parts = split_into_cycles(&g, &a).unwrap();
            let mut union = EdgeSet::empty(&g);
            for c in &parts {
                prop_assert_eq!(c.edge_set().intersection(&union).unwrap().count(), 0);
                union.xor_assign(c.edge_set()).unwrap();
            }
            prop_assert_eq!(&union, a.edge_set());
        }
    }
}
