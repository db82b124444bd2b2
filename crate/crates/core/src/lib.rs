//! Pointed pseudo-triangulations of planar point sets.
//!
//! A pseudo-triangle is a simple polygon with exactly three convex corners. A
//! pseudo-triangulation of a point set partitions its convex hull into
//! pseudo-triangles using every point as a vertex; it is *pointed* when every
//! vertex has its incident edges inside an open half-plane. Pointed
//! pseudo-triangulations on `n` points have exactly `n - 2` faces and `2n - 3`
//! edges, are minimally rigid as bar-joint frameworks, and lose exactly one degree
//! of freedom when a hull bar is removed.
//!
//! All predicates and linear algebra are exact: integer coordinates, `i128`
//! determinants and arbitrary-precision rationals.

pub mod construct;
pub mod enumeration;
pub mod error;
pub mod geom;
pub mod graph;
pub mod io;
mod linalg;
pub mod rigidity;
pub mod sample;
pub mod subdivision;

pub use construct::{canonical_ppt, complete_to_ppt};
pub use enumeration::{
    brute_force_all_pseudo_triangulations, brute_force_maximal_pointed, check_conjecture,
    enumerate_ppt, enumerate_triangulations, flip, min_max_degree, CountReport, Limits,
};
pub use error::{Error, Result};
pub use geom::{convex_hull, is_pointed_at, orientation, segments_cross, Orientation, Point, PointSet};
pub use graph::{Edge, EdgeKey, GeomGraph};
pub use rigidity::{
    is_expansive, is_infinitesimally_rigid, mechanism_motion, rank, rigidity_matrix, Motion,
    RigidityMatrix,
};
pub use subdivision::{
    extract_faces, is_pointed_vertex, is_pseudo_triangle, validate, Face, PseudoTriangulation,
    ValidationReport,
};
