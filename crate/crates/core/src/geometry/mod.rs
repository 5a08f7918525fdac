//! Exact rational geometry: points, hyperplanes, facet enumeration and face lattices.

mod hull;
mod lattice;
pub(crate) mod linalg;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use hull::{facet_enumeration, supporting_hyperplane, Facet};
pub(crate) use hull::supporting_homogeneous;
pub use lattice::{build_face_lattice, facet_as_polytope, FaceLattice, FacetPolytope};
pub(crate) use lattice::{intersect, is_subset};

/// Exact rational scalar in canonical form (positive denominator, reduced).
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` into a reduced rational. `q` must be positive.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if !q.is_positive() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A point of rational coordinate space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Homogeneous integer representative `(λ, λ·x)` with `λ > 0` the lcm of
    /// the coordinate denominators.
    pub(crate) fn homogeneous(&self) -> Vec<BigInt> {
        let lambda = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(lambda.clone());
        out.extend(self.0.iter().map(|c| c.numer() * (&lambda / c.denom())));
        out
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(c))?;
        }
        f.write_str(")")
    }
}

/// The hyperplane `normal · x = offset`; the polytope it supports lies on the
/// `≤` side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    /// Returns `None` for the zero normal.
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Option<Self> {
        if normal.iter().all(Zero::is_zero) {
            None
        } else {
            Some(Hyperplane { normal, offset })
        }
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `normal · p − offset`, exactly.
    pub fn eval(&self, p: &Point) -> Rational {
        debug_assert_eq!(p.dim(), self.normal.len());
        self.normal
            .iter()
            .zip(p.coords())
            .fold(-self.offset.clone(), |acc, (a, x)| acc + a * x)
    }

    /// Builds the hyperplane from a homogeneous integer vector `(h0, a)`,
    /// meaning `h0 + a·x = 0`.
    pub(crate) fn from_homogeneous(h: &[BigInt]) -> Option<Self> {
        let normal = h[1..].iter().map(|a| BigRational::from_integer(a.clone())).collect();
        Hyperplane::new(normal, BigRational::from_integer(-h[0].clone()))
    }
}

pub(crate) fn check_dims(points: &[Point]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    for (index, p) in points.iter().enumerate() {
        if p.dim() != d {
            return Err(Error::MixedDimensions {
                index,
                expected: d,
                found: p.dim(),
            });
        }
    }
    Ok(d)
}

/// Dimension of the affine hull of `points`: one less than the largest number
/// of affinely independent points among them.
pub fn affine_dimension(points: &[Point]) -> Result<usize> {
    check_dims(points)?;
    let rows: Vec<Vec<BigInt>> = points.iter().map(Point::homogeneous).collect();
    Ok(linalg::rank(rows) - 1)
}

/// Vertex centroid of a set of points.
pub fn centroid(points: &[Point]) -> Result<Point> {
    let d = check_dims(points)?;
    let n = BigRational::from_integer(points.len().into());
    let mut sum = vec![Rational::zero(); d];
    for p in points {
        for (s, c) in sum.iter_mut().zip(p.coords()) {
            *s += c;
        }
    }
    Ok(Point(sum.into_iter().map(|s| s / &n).collect()))
}
