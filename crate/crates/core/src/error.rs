use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a point set needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("coordinate {value} of point {index} exceeds the supported magnitude 2^40")]
    CoordinateOutOfRange { index: usize, value: i64 },

    #[error("edge {0}-{1} refers to a vertex outside the point set")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0} listed twice")]
    DuplicateEdge(Edge),
    #[error("edges {0} and {1} cross")]
    CrossingEdges(Edge, Edge),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("vertex {0} has no incident edges")]
    IsolatedVertex(usize),

    #[error("input graph is not pointed at vertex {0}")]
    NotPointedInput(usize),
    #[error("not a pseudo-triangulation: {}", .0.join("; "))]
    NotAPseudoTriangulation(Vec<String>),
    #[error("not a pointed pseudo-triangulation")]
    NotAPpt,
    #[error("edge {0} is not in the graph")]
    EdgeNotPresent(Edge),
    #[error("hull edge {0} cannot be flipped")]
    HullEdgeNotFlippable(Edge),
    #[error("edge {0} is not a convex hull edge")]
    NotAHullEdge(Edge),
    #[error("flipping {edge} produced {count} valid replacements, expected exactly one")]
    FlipNotUnique { edge: Edge, count: usize },

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("maximum degree {0} exceeds the degree-5 bound")]
    DegreeBoundExceeded(usize),

    #[error("mechanism has {0} degrees of freedom after pinning, expected 1")]
    UnexpectedDofCount(usize),
    #[error("the flex does not change the length of the removed bar")]
    DegenerateMotion,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
