//! Exact polytope combinatorics and facial-cycle decompositions.
//!
//! The crate is organised bottom-up:
//!
//! * [`geometry`] holds exact rational points, facet enumeration and the
//!   [`FaceLattice`].
//! * [`complex`] holds polytopal complexes, graphs, edge sets and cycles.
//! * [`shelling`] builds line shellings and checks the shelling conditions.
//! * [`cyclespace`] is the GF(2) side: evenness, the facial-cycle generating
//!   set, the elimination oracle and bipartiteness.
//! * [`decompose`] turns the shelling induction into an algorithm that writes
//!   any even subgraph as a symmetric difference of facial cycles.
//! * [`families`] generates simplices, cubes, cross-polytopes, cyclic
//!   polytopes, prisms and random spherical polytopes.
//!
//! ```
//! use facecycle::{Point, Polytope};
//! use facecycle::cyclespace::FacialBasis;
//!
//! let cube: Vec<Point> = (0..8u32)
//!     .map(|m| Point::from_ints(&[(m & 1) as i64, (m >> 1 & 1) as i64, (m >> 2 & 1) as i64]))
//!     .collect();
//! let cube = Polytope::from_points(cube).unwrap();
//! assert_eq!(cube.lattice().f_vector(), vec![8, 12, 6]);
//!
//! let basis = FacialBasis::new(&cube).unwrap();
//! assert_eq!(basis.rank(), 5);
//! ```

pub mod complex;
pub mod cyclespace;
pub mod decompose;
mod error;
pub mod families;
pub mod geometry;
mod polytope;
pub mod seed;
pub mod shelling;

pub use error::{Error, Result};
pub use geometry::{FaceLattice, Hyperplane, Point, Rational};
pub use polytope::Polytope;

/// A face of a polytope, identified by its sorted list of vertex indices.
pub type Face = Vec<usize>;
