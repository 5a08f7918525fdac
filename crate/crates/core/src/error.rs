use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no points given")]
    EmptyInput,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    MixedDimensions {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("points span an affine space of dimension {affine} inside R^{ambient}")]
    NotFullDimensional { affine: usize, ambient: usize },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("point {0} is not a vertex of the convex hull")]
    NonVertexPoint(usize),
    #[error("facet list does not describe a face lattice: {0}")]
    NotALattice(String),
    #[error("facet index {index} out of range ({count} facets)")]
    InvalidFacet { index: usize, count: usize },
    #[error("complex has no edges")]
    NoEdges,
    #[error("2-face {0:?} is not bounded by a single cycle")]
    Malformed2Face(Vec<usize>),
    #[error("face {0:?} is not the union of its subfaces in the complex")]
    NotClosed(Vec<usize>),
    #[error("complex is not pure")]
    NotPure,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("edge sets live over different graphs")]
    AmbientMismatch,
    #[error("edge set is not even; odd-degree vertices {0:?}")]
    NotEven(Vec<usize>),
    #[error("polytope has dimension {0}; at least 2 is required")]
    DimensionTooLow(usize),
    #[error("coordinates do not realise the lattice: {0}")]
    NotRealized(String),
    #[error("no generic line direction found after {0} attempts")]
    GenericityExhausted(usize),
    #[error("order is not a permutation of the facets")]
    InvalidOrder,
    #[error("line shelling failed verification at step {0}")]
    ShellingRejected(usize),
    #[error("operation needs vertex coordinates")]
    NoCoordinates,
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
}
