use super::PrefixContext;
use crate::complex::{Cycle, EdgeSet, Graph};
use crate::cyclespace::EvenSubgraph;
use crate::{Error, Result};

/// One crossing step: a cycle `C` of `G_n` that leaves `G(F_n)` is split as
/// `C = C₁ ⊕ W` with `C₁` a cycle of `G_{n−1}` and `W` an even subgraph with
/// fewer edges in `G_{n−1} ∖ G(F_n)` than `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingSurgery {
    pub n: usize,
    /// `x_1, …, x_j`: vertices of `C` in `I_n`, in traversal order.
    pub x_vertices: Vec<usize>,
    /// `x_j → … → x_1` through the traversal start; internal vertices avoid `G(F_n)`.
    pub path_l: Vec<usize>,
    /// `x_1 → … → x_j`, the rest of `C`.
    pub path_l_prime: Vec<usize>,
    /// Shortest `x_1 → x_j` path inside `I_n`.
    pub path_m: Vec<usize>,
    pub cycle_c1: Cycle,
    pub even_w: EvenSubgraph,
    pub measure_c: usize,
    pub measure_w: usize,
}

fn assertion(msg: impl Into<String>) -> Error {
    Error::InternalAssertion(msg.into())
}

/// Splits a crossing cycle at prefix position `n`.
///
/// The traversal starts at the smallest vertex of `C` outside `G(F_n)` and
/// heads toward its smaller neighbour on `C`; `M` is found by BFS in `I_n`
/// with smallest-index tie-breaking. Every structural fact the construction
/// relies on is checked and reported as [`Error::InternalAssertion`].
pub fn crossing_surgery(
    graph: &Graph,
    cycle: &Cycle,
    ctx: &PrefixContext,
    n: usize,
) -> Result<CrossingSurgery> {
    let c = cycle.edge_set();
    if n < 2 || n > ctx.len() {
        return Err(assertion(format!("prefix position {n} has no intersection graph")));
    }
    if !c.is_subset(ctx.prefix_edges(n))? || c.is_subset(ctx.prefix_edges(n - 1))? {
        return Err(assertion(format!("cycle is not minimal in G_{n}")));
    }
    if c.is_subset(ctx.facet_edges(n))? {
        return Err(assertion(format!("cycle lies inside G(F_{n})")));
    }

    let start = cycle
        .vertices()
        .iter()
        .copied()
        .filter(|&v| !ctx.facet_contains_vertex(n, v))
        .min()
        .ok_or_else(|| assertion("cycle leaves G(F_n) without leaving its vertex set"))?;
    let len = cycle.len();
    let at = cycle.vertices().iter().position(|&v| v == start).unwrap();
    let fwd = cycle.vertices()[(at + 1) % len];
    let back = cycle.vertices()[(at + len - 1) % len];
    let seq: Vec<usize> = if fwd < back {
        (0..len).map(|i| cycle.vertices()[(at + i) % len]).collect()
    } else {
        (0..len).map(|i| cycle.vertices()[(at + len - i) % len]).collect()
    };

    let hits: Vec<usize> = (0..len)
        .filter(|&i| ctx.intersection_contains_vertex(n, seq[i]))
        .collect();
    if hits.len() < 2 {
        return Err(assertion(format!("cycle meets I_{n} in {} vertices", hits.len())));
    }
    let (p1, pj) = (hits[0], *hits.last().unwrap());
    let x_vertices: Vec<usize> = hits.iter().map(|&i| seq[i]).collect();

    let mut path_l: Vec<usize> = seq[pj..].to_vec();
    path_l.extend_from_slice(&seq[..=p1]);
    let path_l_prime: Vec<usize> = seq[p1..=pj].to_vec();
    if path_l[1..path_l.len() - 1]
        .iter()
        .any(|&v| ctx.facet_contains_vertex(n, v))
    {
        return Err(assertion("L has an internal vertex in G(F_n)"));
    }
    let l_edges = graph.path_edges(&path_l);
    if !l_edges.is_subset(ctx.prefix_edges(n - 1))? {
        return Err(assertion("L leaves G_{n-1}"));
    }

    let (x1, xj) = (x_vertices[0], *x_vertices.last().unwrap());
    let path_m = graph
        .shortest_path_within(x1, xj, ctx.intersection_edges(n))
        .ok_or_else(|| assertion(format!("no x_1-x_j path in I_{n}")))?;

    let mut c1_walk = path_l.clone();
    c1_walk.extend_from_slice(&path_m[1..path_m.len() - 1]);
    let mut cycle_c1 =
        Cycle::new(graph, c1_walk).map_err(|e| assertion(format!("C1 is not a simple cycle: {e}")))?;
    cycle_c1.canonicalize();
    if !cycle_c1.edge_set().is_subset(ctx.prefix_edges(n - 1))? {
        return Err(assertion("C1 leaves G_{n-1}"));
    }

    let w: EdgeSet = graph.path_edges(&path_l_prime).xor(&graph.path_edges(&path_m))?;
    let even_w = EvenSubgraph::new(graph, w).map_err(|e| assertion(format!("W is not even: {e}")))?;
    if cycle_c1.edge_set().xor(even_w.edge_set())? != *c {
        return Err(assertion("C differs from C1 xor W"));
    }
    let measure_c = ctx.measure(c, n)?;
    let measure_w = ctx.measure(even_w.edge_set(), n)?;
    if measure_w >= measure_c {
        return Err(assertion(format!("measure did not drop: {measure_w} >= {measure_c}")));
    }

    Ok(CrossingSurgery {
        n,
        x_vertices,
        path_l,
        path_l_prime,
        path_m,
        cycle_c1,
        even_w,
        measure_c,
        measure_w,
    })
}
