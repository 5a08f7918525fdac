use std::collections::HashMap;

use crate::complex::{facial_cycle, graph_of_lattice, Cycle, Graph};
use crate::geometry::{build_face_lattice, facet_enumeration};
use crate::{Face, FaceLattice, Point, Result};

/// A polytope's face lattice together with its graph `G(P)` and the
/// facial cycles of its 2-faces. Coordinates are optional.
#[derive(Clone, Debug)]
pub struct Polytope {
    lattice: FaceLattice,
    points: Option<Vec<Point>>,
    graph: Graph,
    two_faces: Vec<Face>,
    two_face_ids: HashMap<Face, usize>,
    facial_cycles: Vec<Cycle>,
}

impl Polytope {
    /// Convex hull of full-dimensional points in convex position.
    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        let facets: Vec<Vec<usize>> = facet_enumeration(&points)?
            .into_iter()
            .map(|f| f.vertices)
            .collect();
        let lattice = build_face_lattice(&facets, points.len(), Some(&points))?;
        Polytope::new(lattice, Some(points))
    }

    /// Purely combinatorial polytope from its facet vertex sets.
    pub fn from_facets(facets: &[Vec<usize>], vertex_count: usize) -> Result<Self> {
        Polytope::new(build_face_lattice(facets, vertex_count, None)?, None)
    }

    pub fn new(lattice: FaceLattice, points: Option<Vec<Point>>) -> Result<Self> {
        let graph = graph_of_lattice(&lattice);
        let two_faces = lattice.two_faces();
        let facial_cycles = two_faces
            .iter()
            .map(|f| facial_cycle(&lattice, &graph, f))
            .collect::<Result<Vec<_>>>()?;
        let two_face_ids = two_faces.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        Ok(Polytope {
            lattice,
            points,
            graph,
            two_faces,
            two_face_ids,
            facial_cycles,
        })
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn points(&self) -> Option<&[Point]> {
        self.points.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    /// `G(P)`, indexed like the lattice's vertices and edges.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// 2-faces in canonical order; the position is the 2-face id.
    pub fn two_faces(&self) -> &[Face] {
        &self.two_faces
    }

    pub fn two_face_id(&self, face: &[usize]) -> Option<usize> {
        self.two_face_ids.get(face).copied()
    }

    /// Facial cycle of each 2-face, aligned with [`Polytope::two_faces`].
    pub fn facial_cycles(&self) -> &[Cycle] {
        &self.facial_cycles
    }
}
