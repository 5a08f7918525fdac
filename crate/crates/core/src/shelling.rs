//! Line shellings and a checker for the necessary shelling conditions.
//!
//! A line through an interior point in a generic direction crosses every
//! facet hyperplane at a distinct parameter `t`. Listing facets by increasing
//! positive `t`, then by increasing negative `t`, gives a shelling of the
//! boundary complex.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::complex::{intersect_graphs, PolytopalComplex};
use crate::geometry::{centroid, facet_as_polytope, intersect, FacetPolytope};
use crate::geometry::supporting_homogeneous;
use crate::{seed, Error, Face, FaceLattice, Point, Rational, Result};

/// Number of directions tried before giving up on genericity.
pub const DEFAULT_ATTEMPTS: usize = 64;

/// Witness for a line shelling: `x(t) = base_point + t · direction` meets the
/// hyperplane of facet `i` at `t = pierce_params[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCertificate {
    pub base_point: Point,
    pub direction: Point,
    pub pierce_params: Vec<Rational>,
    /// Zero-based index of the direction that turned out generic.
    pub attempt: usize,
}

/// Checks for step `j ≥ 2` of a facet ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub step_index: usize,
    pub intersection_nonempty: bool,
    /// Every maximal face of `F_j ∩ (F_1 ∪ … ∪ F_{j−1})` is a ridge.
    pub intersection_pure_codim2: bool,
    /// The intersection is strongly connected (just nonempty when `d = 2`).
    pub intersection_strongly_connected: bool,
    /// `C(F_1 ∪ … ∪ F_j)` is strongly connected.
    pub prefix_strongly_connected: bool,
    /// `G_{j−1} ∩ G(F_j)` is connected (not applicable, reported true, for `d = 2`).
    pub intersection_graph_connected: bool,
}

impl StepReport {
    pub fn passed(&self) -> bool {
        self.intersection_nonempty
            && self.intersection_pure_codim2
            && self.intersection_strongly_connected
            && self.prefix_strongly_connected
            && self.intersection_graph_connected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shelling {
    /// Facet indices, a permutation of `0..s`.
    pub order: Vec<usize>,
    pub certificate: Option<LineCertificate>,
    pub reports: Vec<StepReport>,
}

impl Shelling {
    pub fn is_valid(&self) -> bool {
        self.reports.iter().all(StepReport::passed)
    }
}

fn random_direction(d: usize, seed: u64, attempt: usize) -> Point {
    let mut rng = seed::rng(seed::mix(seed, attempt as u64 + 1));
    Point::new(
        (0..d)
            .map(|_| {
                let p: i64 = rng.gen_range(-12..=12);
                let q: i64 = rng.gen_range(1..=9);
                BigRational::new(p.into(), q.into())
            })
            .collect(),
    )
}

fn homogeneous_eval(h: &[BigInt], p: &Point) -> Rational {
    p.coords()
        .iter()
        .zip(&h[1..])
        .fold(BigRational::from_integer(h[0].clone()), |acc, (x, a)| {
            acc + x * BigRational::from_integer(a.clone())
        })
}

fn linear_eval(h: &[BigInt], v: &Point) -> Rational {
    v.coords()
        .iter()
        .zip(&h[1..])
        .fold(Rational::zero(), |acc, (x, a)| acc + x * BigRational::from_integer(a.clone()))
}

/// Builds a line shelling from coordinates.
///
/// The base point is the vertex centroid; directions are seeded small
/// rationals, redrawn until no facet hyperplane is parallel to the line and
/// all crossing parameters differ. The result is checked with
/// [`verify_shelling_necessary`] before it is returned.
pub fn line_shelling(lattice: &FaceLattice, points: &[Point], seed: u64) -> Result<Shelling> {
    line_shelling_with_budget(lattice, points, seed, DEFAULT_ATTEMPTS)
}

pub fn line_shelling_with_budget(
    lattice: &FaceLattice,
    points: &[Point],
    seed: u64,
    attempts: usize,
) -> Result<Shelling> {
    let d = lattice.dim();
    if points.len() != lattice.vertex_count() || points.iter().any(|p| p.dim() != d) {
        return Err(Error::NotRealized(format!(
            "{} points do not realise a {d}-lattice on {} vertices",
            points.len(),
            lattice.vertex_count()
        )));
    }
    let normals: Vec<Vec<BigInt>> = lattice
        .facets()
        .iter()
        .map(|f| supporting_homogeneous(points, f))
        .collect::<Result<_>>()?;
    let base = centroid(points)?;
    let slack: Vec<Rational> = normals.iter().map(|h| homogeneous_eval(h, &base)).collect();
    if slack.iter().any(|s| !s.is_negative()) {
        return Err(Error::NotRealized("centroid is not interior".into()));
    }

    for attempt in 0..attempts {
        let direction = random_direction(d, seed, attempt);
        let mut params = Vec::with_capacity(normals.len());
        for (h, s) in normals.iter().zip(&slack) {
            let rate = linear_eval(h, &direction);
            if rate.is_zero() {
                break;
            }
            params.push(-s / rate);
        }
        if params.len() != normals.len() {
            continue;
        }
        let mut sorted = params.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let mut order: Vec<usize> = (0..params.len()).collect();
        order.sort_by(|&a, &b| {
            let key = |i: usize| (params[i].is_negative(), params[i].clone());
            key(a).cmp(&key(b))
        });
        let reports = verify_shelling_necessary(lattice, &order)?;
        if let Some(bad) = reports.iter().find(|r| !r.passed()) {
            return Err(Error::ShellingRejected(bad.step_index));
        }
        log::debug!("line shelling found on attempt {attempt}: {order:?}");
        return Ok(Shelling {
            order,
            certificate: Some(LineCertificate {
                base_point: base,
                direction,
                pierce_params: params,
                attempt,
            }),
            reports,
        });
    }
    Err(Error::GenericityExhausted(attempts))
}

/// Checks the decidable consequences of the shelling conditions for each
/// step `j ≥ 2` of `order`: the new facet meets its predecessors in a
/// nonempty, pure, strongly connected complex of ridges, every prefix complex
/// is strongly connected, and so is the graph `G_{j−1} ∩ G(F_j)`.
///
/// It does not recurse into whether the intersection begins a shelling of the
/// new facet's boundary.
pub fn verify_shelling_necessary(lattice: &FaceLattice, order: &[usize]) -> Result<Vec<StepReport>> {
    let facets = lattice.facets();
    let s = facets.len();
    let mut seen = vec![false; s];
    for &i in order {
        if i >= s || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidOrder);
        }
    }
    if order.len() != s {
        return Err(Error::InvalidOrder);
    }
    let d = lattice.dim();
    let top = d - 1;

    let mut reports = Vec::with_capacity(s.saturating_sub(1));
    for j in 2..=s {
        let new = &facets[order[j - 1]];
        let mut meets: Vec<Face> = order[..j - 1]
            .iter()
            .map(|&i| intersect(new, &facets[i]))
            .filter(|m| !m.is_empty())
            .collect();
        meets.sort();
        meets.dedup();
        let maximal: Vec<(Face, usize)> = meets
            .iter()
            .filter(|m| !meets.iter().any(|o| o.len() > m.len() && crate::geometry::is_subset(m, o)))
            .map(|m| {
                let (k, _) = lattice.locate(m).expect("facets meet in faces");
                (m.clone(), k)
            })
            .collect();
        let nonempty = !maximal.is_empty();
        let pure = nonempty && maximal.iter().all(|(_, k)| *k + 2 == d);
        let strongly = if !pure {
            false
        } else if d == 2 {
            true
        } else {
            PolytopalComplex::generated(lattice, &maximal).is_strongly_connected()?
        };

        let prefix_gens: Vec<(Face, usize)> =
            order[..j].iter().map(|&i| (facets[i].clone(), top)).collect();
        let prefix_connected =
            PolytopalComplex::generated(lattice, &prefix_gens).is_strongly_connected()?;

        let graph_connected = if d == 2 {
            true
        } else {
            let before = PolytopalComplex::generated(lattice, &prefix_gens[..j - 1]).graph_of()?;
            let facet = PolytopalComplex::generated(lattice, &[(new.clone(), top)]).graph_of()?;
            let common = intersect_graphs(&before, &facet);
            !common.graph.vertex_map.is_empty() && common.graph.graph.is_connected()
        };

        reports.push(StepReport {
            step_index: j,
            intersection_nonempty: nonempty,
            intersection_pure_codim2: pure,
            intersection_strongly_connected: strongly,
            prefix_strongly_connected: prefix_connected,
            intersection_graph_connected: graph_connected,
        });
    }
    Ok(reports)
}

/// Line shelling of one facet, computed in the facet's own projected
/// coordinates. Facet indices in the result refer to the facet's lattice.
pub fn shelling_for_facet(
    lattice: &FaceLattice,
    points: &[Point],
    facet_index: usize,
    seed: u64,
) -> Result<(FacetPolytope, Shelling)> {
    let facet = facet_as_polytope(lattice, points, facet_index)?;
    let shelling = line_shelling(&facet.lattice, &facet.points, seed)?;
    Ok((facet, shelling))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::prefix_complex;
    use crate::geometry::{build_face_lattice, facet_enumeration};

    fn cube(d: usize) -> Vec<Point> {
        (0..1u32 << d)
            .map(|m| Point::from_ints(&(0..d).map(|i| (m >> i & 1) as i64).collect::<Vec<_>>()))
            .collect()
    }

    fn simplex(d: usize) -> Vec<Point> {
        (0..=d)
            .map(|i| Point::from_ints(&(0..d).map(|j| (i == j + 1) as i64).collect::<Vec<_>>()))
            .collect()
    }

    fn lattice_of(points: &[Point]) -> FaceLattice {
        let facets: Vec<Vec<usize>> =
            facet_enumeration(points).unwrap().into_iter().map(|f| f.vertices).collect();
        build_face_lattice(&facets, points.len(), Some(points)).unwrap()
    }

    #[test]
    fn simplex_and_cube_shellings() {
        for pts in [simplex(3), cube(3), cube(4)] {
            let l = lattice_of(&pts);
            let sh = line_shelling(&l, &pts, 0).unwrap();
            let mut sorted = sh.order.clone();
            sorted.sort();
            assert_eq!(sorted, (0..l.facets().len()).collect::<Vec<_>>());
            assert!(sh.is_valid());
            for n in 1..=sh.order.len() {
                assert!(prefix_complex(&l, &sh.order, n).unwrap().is_strongly_connected().unwrap());
            }
        }
    }

    #[test]
    fn certificate_matches_order() {
        let pts = cube(3);
        let l = lattice_of(&pts);
        let sh = line_shelling(&l, &pts, 5).unwrap();
        let cert = sh.certificate.as_ref().unwrap();
        let t: Vec<&Rational> = sh.order.iter().map(|&i| &cert.pierce_params[i]).collect();
        let flip = t.iter().position(|x| x.is_negative()).unwrap_or(t.len());
        assert!(t[..flip].windows(2).all(|w| w[0] < w[1]));
        assert!(t[flip..].windows(2).all(|w| w[0] < w[1]));
        assert!(t[flip..].iter().all(|x| x.is_negative()));
        assert_eq!(line_shelling(&l, &pts, 5).unwrap(), sh);
    }

    #[test]
    fn opposite_cube_facets_fail() {
        let l = lattice_of(&cube(3));
        let facets = l.facets();
        let a = 0;
        let b = (0..6).find(|&i| intersect(&facets[a], &facets[i]).is_empty()).unwrap();
        let mut order = vec![a, b];
        order.extend((0..6).filter(|&i| i != a && i != b));
        let r = verify_shelling_necessary(&l, &order).unwrap();
        assert!(!r[0].intersection_nonempty);
        assert!(!r[0].passed());
    }

    /// Every ordering of the square's edges, classified by the direct rule
    /// "each new edge touches an earlier one".
    #[test]
    fn square_orderings() {
        let l = lattice_of(&cube(2));
        let edges = l.facets().to_vec();
        let mut valid = 0;
        for perm in permutations(4) {
            let touches = (1..4).all(|j| {
                (0..j).any(|i| !intersect(&edges[perm[j]], &edges[perm[i]]).is_empty())
            });
            let ok = verify_shelling_necessary(&l, &perm).unwrap().iter().all(StepReport::passed);
            assert_eq!(ok, touches, "{perm:?}");
            valid += ok as usize;
        }
        assert_eq!(valid, 16);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn bad_orders_are_rejected() {
        let l = lattice_of(&cube(2));
        assert_eq!(verify_shelling_necessary(&l, &[0, 1, 2]), Err(Error::InvalidOrder));
        assert_eq!(verify_shelling_necessary(&l, &[0, 1, 2, 2]), Err(Error::InvalidOrder));
        assert_eq!(verify_shelling_necessary(&l, &[0, 1, 2, 9]), Err(Error::InvalidOrder));
    }

    #[test]
    fn facet_shellings() {
        for (pts, count) in [(cube(3), 4), (cube(4), 6), (simplex(3), 3)] {
            let l = lattice_of(&pts);
            let (facet, sh) = shelling_for_facet(&l, &pts, 0, 3).unwrap();
            assert_eq!(facet.lattice.facets().len(), count);
            assert_eq!(sh.order.len(), count);
            assert!(sh.is_valid());
        }
    }

    #[test]
    fn genericity_budget() {
        let pts = cube(3);
        let l = lattice_of(&pts);
        assert_eq!(line_shelling_with_budget(&l, &pts, 0, 0), Err(Error::GenericityExhausted(0)));
        assert!(matches!(line_shelling(&l, &pts[..7], 0), Err(Error::NotRealized(_))));
    }
}
