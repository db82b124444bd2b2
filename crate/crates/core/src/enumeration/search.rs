use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::construct::canonical_ppt;
use crate::error::Result;
use crate::geom::PointSet;
use crate::graph::{hull_edges, EdgeKey, GeomGraph};
use crate::subdivision::PseudoTriangulation;

use super::flip::{flip, flip_triangulation, seed_triangulation};
use super::Limits;

/// Breadth-first search of the flip graph from the canonical pointed
/// pseudo-triangulation. Results are sorted by edge key.
pub fn enumerate_ppt(points: Arc<PointSet>, limits: &Limits) -> Result<Vec<PseudoTriangulation>> {
    limits.check_count(points.len())?;
    let start = canonical_ppt(points)?;
    let mut seen: HashSet<EdgeKey> = HashSet::from([start.key()]);
    let mut queue = VecDeque::from([start]);
    let mut found = Vec::new();
    while let Some(t) = queue.pop_front() {
        for e in t.interior_edges() {
            let next = flip(&t, e)?;
            if seen.insert(next.key()) {
                queue.push_back(next);
            }
        }
        found.push(t);
    }
    found.sort_by_key(|t| t.key());
    Ok(found)
}

/// Breadth-first search of the diagonal-flip graph of triangulations.
pub fn enumerate_triangulations(points: Arc<PointSet>, limits: &Limits) -> Result<Vec<GeomGraph>> {
    limits.check_count(points.len())?;
    let hull = hull_edges(&points);
    let start = seed_triangulation(&GeomGraph::empty(points));
    let mut seen: HashSet<EdgeKey> = HashSet::from([start.key()]);
    let mut queue = VecDeque::from([start]);
    let mut found = Vec::new();
    while let Some(g) = queue.pop_front() {
        for &e in g.edges().iter().filter(|e| !hull.contains(e)) {
            if let Some(next) = flip_triangulation(&g, e)? {
                if seen.insert(next.key()) {
                    queue.push_back(next);
                }
            }
        }
        found.push(g);
    }
    found.sort_by_key(|g| g.key());
    Ok(found)
}
