//! Vertex sets of standard polytope families, all with exact coordinates.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::geometry::affine_dimension;
use crate::{seed, Error, Point, Rational, Result};

/// The origin and the unit vectors of `R^d`.
pub fn simplex(d: usize) -> Vec<Point> {
    (0..=d)
        .map(|i| {
            let c: Vec<i64> = (0..d).map(|k| i64::from(i == k + 1)).collect();
            Point::from_ints(&c)
        })
        .collect()
}

/// `{0,1}^d`; vertex `m` has coordinate `k` equal to bit `k` of `m`.
pub fn cube(d: usize) -> Vec<Point> {
    (0..1usize << d)
        .map(|m| {
            let c: Vec<i64> = (0..d).map(|k| (m >> k & 1) as i64).collect();
            Point::from_ints(&c)
        })
        .collect()
}

/// `±e_k`, ordered `+e_1, −e_1, +e_2, …`.
pub fn cross_polytope(d: usize) -> Vec<Point> {
    let mut out = Vec::with_capacity(2 * d);
    for k in 0..d {
        for s in [1, -1] {
            let c: Vec<i64> = (0..d).map(|i| if i == k { s } else { 0 }).collect();
            out.push(Point::from_ints(&c));
        }
    }
    out
}

/// `n` points `(t, t², …, t^d)` on the moment curve at `t = 1, …, n`.
pub fn cyclic(n: usize, d: usize) -> Vec<Point> {
    (1..=n as i64)
        .map(|t| {
            let c: Vec<i64> = (1..=d as u32).map(|k| t.pow(k)).collect();
            Point::from_ints(&c)
        })
        .collect()
}

/// Prism over a `k`-gon with integer vertices (`k` in 3..=8), in `R^3`.
pub fn prism(k: usize) -> Vec<Point> {
    const RING: [[i64; 2]; 8] = [[3, 0], [2, 2], [0, 3], [-2, 2], [-3, 0], [-2, -2], [0, -3], [2, -2]];
    const HEX: [[i64; 2]; 6] = [[2, 0], [1, 2], [-1, 2], [-2, 0], [-1, -2], [1, -2]];
    const PENT: [[i64; 2]; 5] = [[2, 0], [1, 2], [-1, 2], [-2, 0], [0, -2]];
    const QUAD: [[i64; 2]; 4] = [[1, 0], [0, 1], [-1, 0], [0, -1]];
    const TRI: [[i64; 2]; 3] = [[1, 0], [0, 1], [-1, -1]];
    let base: Vec<[i64; 2]> = match k {
        3 => TRI.to_vec(),
        4 => QUAD.to_vec(),
        5 => PENT.to_vec(),
        6 => HEX.to_vec(),
        7 => RING[..7].to_vec(),
        8 => RING.to_vec(),
        _ => panic!("prism base must have 3..=8 vertices"),
    };
    let mut out = Vec::with_capacity(2 * k);
    for h in [0, 1] {
        for [x, y] in &base {
            out.push(Point::from_ints(&[*x, *y, h]));
        }
    }
    out
}

/// `n` distinct rational points on the unit sphere `S^{d−1}`, obtained by
/// inverse stereographic projection of points with small-denominator
/// coordinates. Points on a sphere are in strictly convex position, so every
/// one of them is a vertex of the hull.
pub fn random_sphere(d: usize, n: usize, seed: u64) -> Result<Vec<Point>> {
    if d < 2 {
        return Err(Error::DimensionTooLow(d));
    }
    if n < d + 1 {
        return Err(Error::NotFullDimensional { affine: n.saturating_sub(1), ambient: d });
    }
    for attempt in 0..64u64 {
        let mut rng = seed::rng(seed::mix(seed, attempt));
        let mut seen = BTreeSet::new();
        let mut points = Vec::new();
        let mut draws = 0;
        while points.len() < n && draws < 100 * n {
            draws += 1;
            let p = sphere_point(d, &mut rng);
            if seen.insert(p.clone()) {
                points.push(p);
            }
        }
        if points.len() == n && affine_dimension(&points)? == d {
            return Ok(points);
        }
    }
    Err(Error::GenericityExhausted(64))
}

fn sphere_point(d: usize, rng: &mut impl Rng) -> Point {
    let u: Vec<Rational> = (0..d - 1)
        .map(|_| Rational::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=4))))
        .collect();
    let norm2 = u.iter().fold(Rational::zero(), |acc, x| acc + x * x);
    let denom = &norm2 + Rational::one();
    let two = Rational::from_integer(BigInt::from(2));
    let mut c: Vec<Rational> = u.iter().map(|x| &two * x / &denom).collect();
    c.push((&norm2 - Rational::one()) / &denom);
    Point::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Polytope;

    fn f(points: Vec<Point>) -> Vec<usize> {
        Polytope::from_points(points).unwrap().lattice().f_vector()
    }

    #[test]
    fn closed_form_families() {
        assert_eq!(f(simplex(3)), vec![4, 6, 4]);
        assert_eq!(f(cube(3)), vec![8, 12, 6]);
        assert_eq!(f(cross_polytope(3)), vec![6, 12, 8]);
        assert_eq!(f(prism(6)), vec![12, 18, 8]);
        // Cyclic 4-polytopes are neighbourly with n(n−3)/2 facets.
        assert_eq!(f(cyclic(7, 4)), vec![7, 21, 28, 14]);
    }

    #[test]
    fn sphere_points_are_vertices() {
        for s in 0..3 {
            let pts = random_sphere(3, 10, s).unwrap();
            assert_eq!(pts.len(), 10);
            assert_eq!(random_sphere(3, 10, s).unwrap(), pts);
            let fv = f(pts);
            assert_eq!(fv[0], 10);
            assert_eq!(fv[0] + fv[2], fv[1] + 2);
        }
    }
}
