//! Face lattices built by intersection closure of facet vertex sets.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::hull::supporting_homogeneous;
use super::{affine_dimension, check_dims, Point};
use crate::{Error, Face, Result};

/// All proper faces of a polytope, grouped by dimension.
///
/// A face is its sorted vertex-index list; within a dimension faces are kept
/// in lexicographic order, and that position is the face's identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    ambient_dim: usize,
    polytope_dim: usize,
    vertex_count: usize,
    faces: Vec<Vec<Face>>,
    subfaces: Vec<Vec<Vec<usize>>>,
    index: HashMap<Face, (usize, usize)>,
}

impl FaceLattice {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the polytope itself (one more than its facets).
    pub fn dim(&self) -> usize {
        self.polytope_dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Faces of dimension `k`; empty outside `0..dim()`.
    pub fn faces(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn facets(&self) -> &[Face] {
        self.faces(self.polytope_dim - 1)
    }

    pub fn edges(&self) -> &[Face] {
        self.faces(1)
    }

    /// The 2-faces of the polytope. A polygon has exactly one: itself.
    pub fn two_faces(&self) -> Vec<Face> {
        match self.polytope_dim {
            0 | 1 => Vec::new(),
            2 => vec![(0..self.vertex_count).collect()],
            _ => self.faces[2].clone(),
        }
    }

    /// `(f_0, f_1, …, f_{d−1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Dimension and position of a face given by its sorted vertex list.
    pub fn locate(&self, face: &[usize]) -> Option<(usize, usize)> {
        self.index.get(face).copied()
    }

    /// Indices (into `faces(k − 1)`) of the facets of the `i`-th `k`-face.
    pub fn subfaces(&self, k: usize, i: usize) -> &[usize] {
        &self.subfaces[k][i]
    }

    /// Every proper face contained in `face`, as `(dim, index)` pairs in
    /// increasing dimension.
    pub fn faces_within(&self, face: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, level) in self.faces.iter().enumerate() {
            for (i, g) in level.iter().enumerate() {
                if is_subset(g, face) {
                    out.push((k, i));
                }
            }
        }
        out
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Face {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn not_a_lattice(msg: impl Into<String>) -> Error {
    Error::NotALattice(msg.into())
}

/// Builds the face lattice from facet vertex sets.
///
/// Faces one dimension down from a face `G` are the inclusion-maximal proper
/// nonempty sets `G ∩ F` over facets `F`. Dimensions are lattice heights; when
/// `points` is given they are cross-checked against affine rank.
pub fn build_face_lattice(
    facets: &[Vec<usize>],
    vertex_count: usize,
    points: Option<&[Point]>,
) -> Result<FaceLattice> {
    if facets.is_empty() || vertex_count == 0 {
        return Err(not_a_lattice("no facets"));
    }
    let mut top: Vec<Face> = Vec::with_capacity(facets.len());
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        if f.is_empty() || f.iter().any(|&v| v >= vertex_count) {
            return Err(not_a_lattice(format!("facet {f:?} is empty or out of range")));
        }
        top.push(f);
    }
    top.sort();
    if top.windows(2).any(|w| w[0] == w[1]) {
        return Err(not_a_lattice("repeated facet"));
    }
    for a in &top {
        if top.iter().any(|b| a != b && is_subset(a, b)) {
            return Err(not_a_lattice(format!("facet {a:?} lies inside another facet")));
        }
    }

    // Descend from the facets until every face is a vertex.
    let mut levels: Vec<Vec<Face>> = vec![top.clone()];
    let mut links: Vec<Vec<Vec<Face>>> = Vec::new();
    loop {
        let current = levels.last().unwrap();
        let singles = current.iter().filter(|f| f.len() == 1).count();
        if singles == current.len() {
            break;
        }
        if singles > 0 {
            return Err(not_a_lattice("vertices appear at different ranks"));
        }
        let mut next = BTreeSet::new();
        let mut level_links = Vec::with_capacity(current.len());
        for g in current {
            let mut cands: Vec<Face> = top
                .iter()
                .map(|f| intersect(g, f))
                .filter(|c| !c.is_empty() && c.len() < g.len())
                .collect();
            cands.sort();
            cands.dedup();
            let maximal: Vec<Face> = cands
                .iter()
                .filter(|c| !cands.iter().any(|o| o.len() > c.len() && is_subset(c, o)))
                .cloned()
                .collect();
            if maximal.is_empty() {
                return Err(not_a_lattice(format!("face {g:?} has no proper faces")));
            }
            next.extend(maximal.iter().cloned());
            level_links.push(maximal);
        }
        links.push(level_links);
        levels.push(next.into_iter().collect());
    }

    let d = levels.len();
    let vertices: Vec<Face> = (0..vertex_count).map(|v| vec![v]).collect();
    if levels[d - 1] != vertices {
        return Err(not_a_lattice("vertex set does not match the vertex count"));
    }

    let faces: Vec<Vec<Face>> = levels.into_iter().rev().collect();
    let mut index = HashMap::new();
    for (k, level) in faces.iter().enumerate() {
        for (i, f) in level.iter().enumerate() {
            index.insert(f.clone(), (k, i));
        }
    }
    let mut subfaces: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); vertex_count]];
    for k in 1..d {
        // links[d − 1 − k] belongs to level d − 1 − k, i.e. dimension k, in
        // the same order as faces[k].
        let level = &links[d - 1 - k];
        subfaces.push(
            level
                .iter()
                .map(|subs| {
                    let mut ids: Vec<usize> = subs.iter().map(|s| index[s].1).collect();
                    ids.sort_unstable();
                    ids
                })
                .collect(),
        );
    }

    let lattice = FaceLattice {
        ambient_dim: points.and_then(|p| p.first()).map_or(d, Point::dim),
        polytope_dim: d,
        vertex_count,
        faces,
        subfaces,
        index,
    };
    lattice.check_union()?;
    lattice.check_diamonds(&top)?;
    lattice.check_intersections()?;
    lattice.check_induced_edges()?;
    if let Some(points) = points {
        lattice.check_realisation(points)?;
    }
    Ok(lattice)
}

impl FaceLattice {
    fn check_union(&self) -> Result<()> {
        for k in 1..self.polytope_dim {
            for (i, g) in self.faces[k].iter().enumerate() {
                let mut union: Vec<usize> = self.subfaces[k][i]
                    .iter()
                    .flat_map(|&s| self.faces[k - 1][s].iter().copied())
                    .collect();
                union.sort_unstable();
                union.dedup();
                if &union != g {
                    return Err(not_a_lattice(format!("face {g:?} is not the union of its facets")));
                }
            }
        }
        Ok(())
    }

    /// Every interval of length two has exactly two middle elements.
    fn check_diamonds(&self, top: &[Face]) -> Result<()> {
        let check = |k: usize, subs: &[usize], name: &dyn Fn() -> String| -> Result<()> {
            if k == 1 {
                if subs.len() != 2 {
                    return Err(not_a_lattice(format!("edge {} has {} ends", name(), subs.len())));
                }
                return Ok(());
            }
            let mut count: HashMap<usize, usize> = HashMap::new();
            for &s in subs {
                for &h in &self.subfaces[k - 1][s] {
                    *count.entry(h).or_default() += 1;
                }
            }
            if let Some((&h, &c)) = count.iter().find(|(_, &c)| c != 2) {
                return Err(not_a_lattice(format!(
                    "face {:?} lies in {c} facets of {}",
                    self.faces[k - 2][h],
                    name()
                )));
            }
            Ok(())
        };
        for k in 1..self.polytope_dim {
            for (i, g) in self.faces[k].iter().enumerate() {
                check(k, &self.subfaces[k][i], &|| format!("{g:?}"))?;
            }
        }
        let d = self.polytope_dim;
        let top_ids: Vec<usize> = top.iter().map(|f| self.index[f].1).collect();
        check(d, &top_ids, &|| "the polytope".to_string())
    }

    fn check_intersections(&self) -> Result<()> {
        let all: Vec<&Face> = self.faces.iter().flatten().collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                let c = intersect(a, b);
                if !c.is_empty() && !self.index.contains_key(&c) {
                    return Err(not_a_lattice(format!(
                        "{a:?} and {b:?} meet in {c:?}, which is not a face"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Edges reached from a facet through subface links are exactly the
    /// edges with both ends in the facet.
    fn check_induced_edges(&self) -> Result<()> {
        let d = self.polytope_dim;
        if d < 2 {
            return Ok(());
        }
        for (i, f) in self.facets().iter().enumerate() {
            let mut frontier: BTreeSet<usize> = std::iter::once(i).collect();
            for k in (2..d).rev() {
                frontier = frontier
                    .iter()
                    .flat_map(|&j| self.subfaces[k][j].iter().copied())
                    .collect();
            }
            let reached: Vec<usize> = if d == 2 { vec![i] } else { frontier.into_iter().collect() };
            let spanned: Vec<usize> = (0..self.faces[1].len())
                .filter(|&e| is_subset(&self.faces[1][e], f))
                .collect();
            if reached != spanned {
                return Err(not_a_lattice(format!("facet {f:?} does not induce its edge graph")));
            }
        }
        Ok(())
    }

    fn check_realisation(&self, points: &[Point]) -> Result<()> {
        let d = check_dims(points)?;
        if points.len() != self.vertex_count {
            return Err(Error::NotRealized(format!(
                "{} points for {} vertices",
                points.len(),
                self.vertex_count
            )));
        }
        if d != self.polytope_dim {
            return Err(Error::NotRealized(format!(
                "lattice of rank {} in R^{d}",
                self.polytope_dim
            )));
        }
        for (k, level) in self.faces.iter().enumerate().skip(1) {
            for f in level {
                let sub: Vec<Point> = f.iter().map(|&v| points[v].clone()).collect();
                let a = affine_dimension(&sub)?;
                if a != k {
                    return Err(Error::NotRealized(format!(
                        "face {f:?} has rank {k} but affine dimension {a}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A facet viewed as a polytope in its own right.
#[derive(Clone, Debug)]
pub struct FacetPolytope {
    pub lattice: FaceLattice,
    pub points: Vec<Point>,
    /// Local vertex index to vertex index of the parent polytope.
    pub vertex_map: Vec<usize>,
}

/// Restricts the lattice to one facet, re-indexes its vertices and projects
/// their coordinates affinely onto `d − 1` coordinates.
///
/// The projection drops the first coordinate along which the facet normal is
/// nonzero; restricted to the facet hyperplane this is an affine bijection.
pub fn facet_as_polytope(
    lattice: &FaceLattice,
    points: &[Point],
    facet_index: usize,
) -> Result<FacetPolytope> {
    let d = lattice.dim();
    let facet = lattice.facets().get(facet_index).ok_or(Error::InvalidFacet {
        index: facet_index,
        count: lattice.facets().len(),
    })?;
    if d < 2 {
        return Err(Error::DimensionTooLow(d));
    }
    let local: HashMap<usize, usize> = facet.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let sub_facets: Vec<Vec<usize>> = lattice
        .faces(d - 2)
        .iter()
        .filter(|r| is_subset(r, facet))
        .map(|r| r.iter().map(|v| local[v]).collect())
        .collect();

    let h: Vec<BigInt> = supporting_homogeneous(points, facet)?;
    let drop = (1..h.len()).find(|&i| !h[i].is_zero()).expect("nonzero normal") - 1;
    let projected: Vec<Point> = facet
        .iter()
        .map(|&v| {
            let c = points[v]
                .coords()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, x)| x.clone())
                .collect();
            Point::new(c)
        })
        .collect();
    let sub = build_face_lattice(&sub_facets, facet.len(), Some(&projected))?;
    Ok(FacetPolytope {
        lattice: sub,
        points: projected,
        vertex_map: facet.clone(),
    })
}
