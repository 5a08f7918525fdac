//! Writes an even subgraph of `G(P)` as a symmetric difference of facial
//! cycles by following a shelling.
//!
//! For a `d`-polytope with `d ≥ 3` and shelling `F_1, …, F_s`, a cycle `C`
//! is handled in the smallest prefix graph `G_n` containing it:
//!
//! * if `C` lies in one facet graph `G(F_k)`, the facet is a `(d − 1)`-polytope
//!   and the problem recurses into it (its 2-faces are 2-faces of `P`);
//! * otherwise `C` crosses `G(F_n)`, and a [`CrossingSurgery`] rewrites it as
//!   `C₁ ⊕ W` where `C₁` lives in `G_{n−1}` and `W` has fewer edges in
//!   `G_{n−1} ∖ G(F_n)`. Both parts recurse.
//!
//! Polygons are the base case: the only nonempty even subgraph of a polygon's
//! graph is its boundary, the facial cycle of its single 2-face.
//!
//! The pair `(n, edges of C in G_{n−1} ∖ G(F_n))` decreases lexicographically
//! along every branch, and facet recursion lowers the dimension, so the
//! procedure terminates.

mod context;
mod surgery;
mod trace;

use std::cell::OnceCell;
use std::collections::BTreeSet;

pub use context::PrefixContext;
pub use surgery::{crossing_surgery, CrossingSurgery};
pub use trace::{Trace, TraceEvent, TraceKind};

use crate::complex::{Cycle, EdgeSet};
use crate::cyclespace::{split_into_cycles, Decomposition, EvenSubgraph};
use crate::geometry::facet_as_polytope;
use crate::{seed, Error, Polytope, Result};

fn assertion(msg: impl Into<String>) -> Error {
    Error::InternalAssertion(msg.into())
}

struct Level {
    polytope: Polytope,
    seed: u64,
    prefix: OnceCell<PrefixContext>,
    children: Vec<OnceCell<Child>>,
}

struct Child {
    level: Box<Level>,
    /// Child vertex to parent vertex (sorted).
    vertex_map: Vec<usize>,
    /// Child 2-face id to parent 2-face id.
    face_map: Vec<usize>,
}

impl Level {
    fn new(polytope: Polytope, seed: u64) -> Self {
        let facets = polytope.lattice().facets().len();
        Level {
            polytope,
            seed,
            prefix: OnceCell::new(),
            children: (0..facets).map(|_| OnceCell::new()).collect(),
        }
    }

    fn prefix(&self) -> Result<&PrefixContext> {
        if let Some(p) = self.prefix.get() {
            return Ok(p);
        }
        let p = PrefixContext::new(&self.polytope, self.seed)?;
        Ok(self.prefix.get_or_init(|| p))
    }

    fn child(&self, facet: usize) -> Result<&Child> {
        if let Some(c) = self.children[facet].get() {
            return Ok(c);
        }
        let points = self.polytope.points().ok_or(Error::NoCoordinates)?;
        let fp = facet_as_polytope(self.polytope.lattice(), points, facet)?;
        let sub = Polytope::new(fp.lattice, Some(fp.points))?;
        let face_map = sub
            .two_faces()
            .iter()
            .map(|f| {
                let global: Vec<usize> = f.iter().map(|&v| fp.vertex_map[v]).collect();
                self.polytope
                    .two_face_id(&global)
                    .ok_or_else(|| assertion(format!("2-face {global:?} of a facet is not a 2-face")))
            })
            .collect::<Result<Vec<_>>>()?;
        let child = Child {
            level: Box::new(Level::new(sub, seed::mix(self.seed, facet as u64))),
            vertex_map: fp.vertex_map,
            face_map,
        };
        Ok(self.children[facet].get_or_init(|| child))
    }
}

fn toggle_all(acc: &mut BTreeSet<usize>, other: BTreeSet<usize>) {
    for id in other {
        if !acc.remove(&id) {
            acc.insert(id);
        }
    }
}

/// Runs the shelling-based decomposition for many targets on one polytope,
/// reusing shellings and facet polytopes between calls.
pub struct Decomposer {
    root: Level,
}

impl Decomposer {
    pub fn new(polytope: &Polytope, seed: u64) -> Result<Self> {
        let d = polytope.dim();
        if d < 2 {
            return Err(Error::DimensionTooLow(d));
        }
        if d >= 3 && polytope.points().is_none() {
            return Err(Error::NoCoordinates);
        }
        Ok(Decomposer {
            root: Level::new(polytope.clone(), seed),
        })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.root.polytope
    }

    /// The top-level shelling data (only for `d ≥ 3`).
    pub fn prefix_context(&self) -> Result<&PrefixContext> {
        self.root.prefix()
    }

    pub fn decompose(&self, target: &EvenSubgraph) -> Result<Decomposition> {
        self.run(target, &mut Vec::new())
    }

    pub fn decompose_with_trace(&self, target: &EvenSubgraph) -> Result<(Decomposition, Trace)> {
        let mut events = Vec::new();
        let d = self.run(target, &mut events)?;
        Ok((d, Trace { events }))
    }

    fn run(&self, target: &EvenSubgraph, trace: &mut Vec<TraceEvent>) -> Result<Decomposition> {
        let polytope = &self.root.polytope;
        let edges = target.edge_set();
        if edges.ambient() != polytope.graph().fingerprint() {
            return Err(Error::AmbientMismatch);
        }
        let ids = decompose_even(&self.root, edges, 0, trace)?;
        let out = Decomposition {
            two_face_ids: ids.into_iter().collect(),
            target: edges.clone(),
        };
        if out.reconstruct(polytope)? != *edges {
            return Err(assertion("reconstruction differs from the target"));
        }
        Ok(out)
    }
}

/// Decomposes `target` into facial cycles of `polytope` using a line
/// shelling drawn from `seed`. The result is verified by reconstruction.
pub fn decompose(target: &EvenSubgraph, polytope: &Polytope, seed: u64) -> Result<Decomposition> {
    Decomposer::new(polytope, seed)?.decompose(target)
}

/// [`decompose`] plus a record of every recursion node.
pub fn decompose_with_trace(
    target: &EvenSubgraph,
    polytope: &Polytope,
    seed: u64,
) -> Result<(Decomposition, Trace)> {
    Decomposer::new(polytope, seed)?.decompose_with_trace(target)
}

fn decompose_even(
    level: &Level,
    edges: &EdgeSet,
    depth: usize,
    trace: &mut Vec<TraceEvent>,
) -> Result<BTreeSet<usize>> {
    if edges.is_empty() {
        return Ok(BTreeSet::new());
    }
    let graph = level.polytope.graph();
    let dim = level.polytope.dim();
    if dim == 2 {
        if *edges != EdgeSet::full(graph) {
            return Err(assertion("nonempty even subgraph of a polygon is not its boundary"));
        }
        trace.push(TraceEvent { depth, dim, kind: TraceKind::Polygon });
        return Ok(BTreeSet::from([0]));
    }
    let even = EvenSubgraph::new(graph, edges.clone())
        .map_err(|e| assertion(format!("recursion produced a non-even target: {e}")))?;
    let cycles = split_into_cycles(graph, &even)?;
    if cycles.len() > 1 {
        trace.push(TraceEvent {
            depth,
            dim,
            kind: TraceKind::Split { cycles: cycles.len() },
        });
    }
    let mut acc = BTreeSet::new();
    for c in &cycles {
        toggle_all(&mut acc, decompose_cycle(level, c, depth, trace)?);
    }
    Ok(acc)
}

fn decompose_cycle(
    level: &Level,
    cycle: &Cycle,
    depth: usize,
    trace: &mut Vec<TraceEvent>,
) -> Result<BTreeSet<usize>> {
    let graph = level.polytope.graph();
    let dim = level.polytope.dim();
    let ctx = level.prefix()?;
    let edges = cycle.edge_set();
    let n = ctx.minimal_prefix(edges)?;

    // Facet n first, then earlier facets, then later ones. A later facet can
    // hold C when C already appears in a shorter prefix graph.
    let mut holder = None;
    for k in std::iter::once(n).chain(1..n).chain(n + 1..=ctx.len()) {
        if edges.is_subset(ctx.facet_edges(k))? {
            holder = Some(k);
            break;
        }
    }
    if let Some(k) = holder {
        let facet = ctx.facet_index(k);
        trace.push(TraceEvent {
            depth,
            dim,
            kind: TraceKind::Facet { n: k, facet },
        });
        return facet_recurse(level, facet, edges, depth + 1, trace);
    }

    let s = crossing_surgery(graph, cycle, ctx, n)?;
    let pieces = split_into_cycles(graph, &s.even_w)?;
    trace.push(TraceEvent {
        depth,
        dim,
        kind: TraceKind::Surgery {
            n,
            j: s.x_vertices.len(),
            l: s.path_l.len() - 1,
            l_prime: s.path_l_prime.len() - 1,
            m: s.path_m.len() - 1,
            measure_c: s.measure_c,
            measure_w: s.measure_w,
            w_cycles: pieces.len(),
        },
    });

    if ctx.minimal_prefix(s.cycle_c1.edge_set())? >= n {
        return Err(assertion("C1 is not in G_{n-1}"));
    }
    let mut acc = decompose_cycle(level, &s.cycle_c1, depth + 1, trace)?;
    for p in &pieces {
        let np = ctx.minimal_prefix(p.edge_set())?;
        if np > n || (np == n && ctx.measure(p.edge_set(), n)? >= s.measure_c) {
            return Err(assertion("termination measure did not decrease"));
        }
        toggle_all(&mut acc, decompose_cycle(level, p, depth + 1, trace)?);
    }
    Ok(acc)
}

fn facet_recurse(
    level: &Level,
    facet: usize,
    edges: &EdgeSet,
    depth: usize,
    trace: &mut Vec<TraceEvent>,
) -> Result<BTreeSet<usize>> {
    let graph = level.polytope.graph();
    let child = level.child(facet)?;
    let sub = child.level.polytope.graph();
    let mut local = EdgeSet::empty(sub);
    for e in edges.iter() {
        let (u, v) = graph.edge(e);
        let (Ok(a), Ok(b)) = (child.vertex_map.binary_search(&u), child.vertex_map.binary_search(&v)) else {
            return Err(assertion("cycle leaves the facet"));
        };
        let le = sub
            .edge_id(a, b)
            .ok_or_else(|| assertion("facet graph is not induced"))?;
        local.insert(le);
    }
    let ids = decompose_even(&child.level, &local, depth, trace)?;
    Ok(ids.into_iter().map(|i| child.face_map[i]).collect())
}
