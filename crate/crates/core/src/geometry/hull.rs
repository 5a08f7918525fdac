//! Brute-force facet enumeration over `d`-subsets of the input points.
//!
//! Points are lifted to homogeneous integer vectors `(λ, λx)`, so every
//! sidedness test is a sign of an integer dot product.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::linalg::{dot, kernel_line, sign};
use super::{affine_dimension, check_dims, Hyperplane, Point};
use crate::{Error, Result};

/// A facet: its outward supporting hyperplane and the sorted indices of the
/// input points lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub hyperplane: Hyperplane,
    pub vertices: Vec<usize>,
}

/// Enumerates the facets of the convex hull of `points`.
///
/// The input must be full-dimensional, duplicate-free and in convex position
/// (every point a vertex). Facets come back sorted by vertex list.
pub fn facet_enumeration(points: &[Point]) -> Result<Vec<Facet>> {
    let d = check_dims(points)?;
    if d == 0 {
        return Err(Error::DimensionTooLow(0));
    }
    check_distinct(points)?;
    let affine = affine_dimension(points)?;
    if affine < d {
        return Err(Error::NotFullDimensional { affine, ambient: d });
    }
    let n = points.len();
    let lifted: Vec<Vec<BigInt>> = points.iter().map(Point::homogeneous).collect();

    let mut found: Vec<(Vec<BigInt>, Vec<bool>)> = Vec::new();
    let mut comb: Vec<usize> = (0..d).collect();
    loop {
        let inside_known = found
            .iter()
            .any(|(_, on)| comb.iter().all(|&i| on[i]));
        if !inside_known {
            if let Some(h) = facet_through(&lifted, &comb) {
                let on: Vec<bool> = lifted.iter().map(|q| sign(&dot(&h, q)) == 0).collect();
                found.push((h, on));
            }
        }
        if !next_combination(&mut comb, n) {
            break;
        }
    }

    let mut facets: Vec<Facet> = found
        .into_iter()
        .map(|(h, on)| Facet {
            hyperplane: Hyperplane::from_homogeneous(&h).expect("full-dimensional input"),
            vertices: (0..n).filter(|&i| on[i]).collect(),
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    check_extreme(&facets, n)?;
    Ok(facets)
}

/// Outward homogeneous normal of the hyperplane spanned by `subset`, if that
/// hyperplane supports the whole point set.
fn facet_through(lifted: &[Vec<BigInt>], subset: &[usize]) -> Option<Vec<BigInt>> {
    let rows = subset.iter().map(|&i| lifted[i].clone()).collect();
    let mut h = kernel_line(rows, lifted[0].len())?;
    let mut side = 0i8;
    for q in lifted {
        let s = sign(&dot(&h, q));
        if s != 0 {
            if side == 0 {
                side = s;
            } else if side != s {
                return None;
            }
        }
    }
    if side > 0 {
        for x in h.iter_mut() {
            *x = -&*x;
        }
    }
    Some(h)
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn check_distinct(points: &[Point]) -> Result<()> {
    let mut seen = std::collections::HashMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(Error::DuplicatePoint(j, i));
        }
        seen.insert(p, i);
    }
    Ok(())
}

/// A point is a vertex iff the facets through it meet in that point alone.
fn check_extreme(facets: &[Facet], n: usize) -> Result<()> {
    let sets: Vec<HashSet<usize>> = facets
        .iter()
        .map(|f| f.vertices.iter().copied().collect())
        .collect();
    for i in 0..n {
        let mut common: Option<HashSet<usize>> = None;
        for s in sets.iter().filter(|s| s.contains(&i)) {
            common = Some(match common {
                None => s.clone(),
                Some(c) => c.intersection(s).copied().collect(),
            });
        }
        match common {
            Some(c) if c.len() == 1 => {}
            _ => return Err(Error::NonVertexPoint(i)),
        }
    }
    Ok(())
}

/// Homogeneous outward normal of the facet with vertex set `facet`, checked
/// against every point.
pub(crate) fn supporting_homogeneous(points: &[Point], facet: &[usize]) -> Result<Vec<BigInt>> {
    let d = check_dims(points)?;
    let lifted: Vec<Vec<BigInt>> = points.iter().map(Point::homogeneous).collect();
    let rows = facet
        .iter()
        .map(|&i| lifted.get(i).cloned())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotRealized(format!("facet {facet:?} names a missing point")))?;
    let h = kernel_line(rows, d + 1)
        .ok_or_else(|| Error::NotRealized(format!("facet {facet:?} does not span a hyperplane")))?;
    let values: Vec<i8> = lifted.iter().map(|q| sign(&dot(&h, q))).collect();
    let flip = values.iter().any(|&s| s > 0);
    if values.iter().any(|&s| s > 0) && values.iter().any(|&s| s < 0) {
        return Err(Error::NotRealized(format!("facet {facet:?} is not supporting")));
    }
    let contact: Vec<usize> = (0..points.len()).filter(|&i| values[i] == 0).collect();
    if contact != facet {
        return Err(Error::NotRealized(format!(
            "hyperplane of facet {facet:?} touches {contact:?}"
        )));
    }
    Ok(if flip { h.into_iter().map(|x| -x).collect() } else { h })
}

/// The outward supporting hyperplane of the facet with vertex set `facet`.
pub fn supporting_hyperplane(points: &[Point], facet: &[usize]) -> Result<Hyperplane> {
    let h = supporting_homogeneous(points, facet)?;
    Hyperplane::from_homogeneous(&h)
        .ok_or_else(|| Error::NotRealized(format!("facet {facet:?} has a zero normal")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| Point::from_ints(r)).collect()
    }

    fn cube(d: usize) -> Vec<Point> {
        (0..1u32 << d)
            .map(|m| Point::from_ints(&(0..d).map(|i| (m >> i & 1) as i64).collect::<Vec<_>>()))
            .collect()
    }

    fn facet_sets(points: &[Point]) -> Vec<Vec<usize>> {
        facet_enumeration(points).unwrap().into_iter().map(|f| f.vertices).collect()
    }

    #[test]
    fn square_has_four_edges() {
        let f = facet_sets(&pts(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]));
        assert_eq!(f, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn simplex_and_cube_facets() {
        let simplex = pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let f = facet_sets(&simplex);
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|s| s.len() == 3));

        let f = facet_sets(&cube(3));
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|s| s.len() == 4));
    }

    #[test]
    fn hyperplanes_are_outward() {
        let points = cube(3);
        for facet in facet_enumeration(&points).unwrap() {
            for (i, p) in points.iter().enumerate() {
                let v = facet.hyperplane.eval(p);
                if facet.vertices.contains(&i) {
                    assert!(v.is_zero());
                } else {
                    assert!(v.is_negative());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let flat = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert_eq!(
            facet_enumeration(&flat),
            Err(Error::NotFullDimensional { affine: 2, ambient: 3 })
        );
        let interior = pts(&[&[0, 0], &[4, 0], &[0, 4], &[1, 1]]);
        assert_eq!(facet_enumeration(&interior), Err(Error::NonVertexPoint(3)));
        let on_edge = pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 0]]);
        assert_eq!(facet_enumeration(&on_edge), Err(Error::NonVertexPoint(3)));
        let dup = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 0]]);
        assert_eq!(facet_enumeration(&dup), Err(Error::DuplicatePoint(1, 3)));
    }

    #[test]
    fn supporting_hyperplane_checks_contact() {
        let points = cube(3);
        assert!(supporting_hyperplane(&points, &[0, 1, 2, 3]).is_ok());
        assert!(matches!(
            supporting_hyperplane(&points, &[0, 1, 2]),
            Err(Error::NotRealized(_))
        ));
        assert!(matches!(
            supporting_hyperplane(&points, &[0, 1, 6, 7]),
            Err(Error::NotRealized(_))
        ));
    }

    use proptest::prelude::*;

    proptest! {
        // Combinatorics survive permutation, translation and uniform scaling.
        #[test]
        fn facets_invariant_under_affine_relabelling(
            perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
            shift in proptest::collection::vec(-5i64..5, 3),
            scale in 1i64..6,
        ) {
            let base = cube(3);
            let moved: Vec<Point> = perm
                .iter()
                .map(|&i| {
                    let c: Vec<i64> = base[i].coords().iter().zip(&shift)
                        .map(|(x, s)| x.to_integer().try_into().unwrap_or(0i64) * scale + s)
                        .collect();
                    Point::from_ints(&c)
                })
                .collect();
            let mut expected: Vec<Vec<usize>> = facet_sets(&base)
                .into_iter()
                .map(|f| {
                    let mut g: Vec<usize> = f.iter()
                        .map(|&v| perm.iter().position(|&p| p == v).unwrap())
                        .collect();
                    g.sort();
                    g
                })
                .collect();
            expected.sort();
            prop_assert_eq!(facet_sets(&moved), expected);
        }
    }
}
