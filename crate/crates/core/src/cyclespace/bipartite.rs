use std::collections::VecDeque;

use crate::complex::{Cycle, Graph};
use crate::Polytope;

/// Outcome of a BFS 2-colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Colour (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    /// An odd cycle proving the graph is not bipartite.
    OddCycle(Cycle),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

pub fn is_bipartite(graph: &Graph) -> Bipartiteness {
    let n = graph.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartiteness::OddCycle(odd_cycle(graph, &parent, &depth, u, w));
                }
            }
        }
    }
    Bipartiteness::Bipartite(color)
}

/// Closes the tree paths from `u` and `w` to their common ancestor with the
/// edge `u–w`. Both ends sit at the same BFS depth, so the cycle is odd.
fn odd_cycle(graph: &Graph, parent: &[usize], depth: &[usize], u: usize, w: usize) -> Cycle {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    let mut c = Cycle::new(graph, left).expect("BFS tree paths meet only at the ancestor");
    c.canonicalize();
    c
}

/// Every facial cycle has even length.
pub fn bipartite_via_2faces(polytope: &Polytope) -> bool {
    polytope.facial_cycles().iter().all(|c| c.len() % 2 == 0)
}

/// Id of the first 2-face whose facial cycle has odd length.
pub fn odd_facial_cycle(polytope: &Polytope) -> Option<usize> {
    polytope.facial_cycles().iter().position(|c| c.len() % 2 == 1)
}
