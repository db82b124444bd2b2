//! Building pointed pseudo-triangulations.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geom::{orient_det, PointSet};
use crate::graph::{candidate_pairs, Edge, GeomGraph};
use crate::subdivision::PseudoTriangulation;

/// Incremental sweep in lexicographic order.
///
/// Each new point lies outside the hull of the points already swept and is joined
/// to its two tangent vertices on that hull. The region between the new point and
/// the visible hull chain is a pseudo-triangle, and every tangent vertex stays a
/// hull corner, so all vertices remain pointed.
pub fn canonical_ppt(points: Arc<PointSet>) -> Result<PseudoTriangulation> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| points[i]);

    let mut edges = BTreeSet::new();
    // Lower and upper hull chains of the swept prefix, both left to right.
    let mut lower: Vec<usize> = vec![order[0]];
    let mut upper: Vec<usize> = vec![order[0]];
    for &p in &order[1..] {
        let pp = points[p];
        while lower.len() >= 2
            && orient_det(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], pp) <= 0
        {
            lower.pop();
        }
        while upper.len() >= 2
            && orient_det(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], pp) >= 0
        {
            upper.pop();
        }
        let below = *lower.last().expect("chain never empties");
        let above = *upper.last().expect("chain never empties");
        edges.insert(Edge::new(p, below));
        edges.insert(Edge::new(p, above));
        lower.push(p);
        upper.push(p);
    }
    PseudoTriangulation::pointed(GeomGraph::from_trusted(points, edges))
}

/// Greedily extends a pointed non-crossing graph to a pointed pseudo-triangulation.
///
/// Candidate pairs are scanned once, shortest first (ties by index pair). A pair is
/// added when it crosses no edge and leaves both endpoints pointed. Rejections are
/// permanent, since adding edges only removes room, so one pass yields a maximal
/// pointed non-crossing graph.
pub fn complete_to_ppt(g: &GeomGraph) -> Result<PseudoTriangulation> {
    for v in 0..g.n() {
        if !g.pointed_with(v, None) {
            return Err(Error::NotPointedInput(v));
        }
    }
    let target = 2 * g.n() - 3;
    let mut current = g.clone();
    for e in candidate_pairs(g.points()) {
        if current.edge_count() >= target {
            break;
        }
        if current.can_add_without_crossing(e)
            && current.pointed_with(e.lo, Some(e.hi))
            && current.pointed_with(e.hi, Some(e.lo))
        {
            current = current.with_edge(e);
        }
    }
    PseudoTriangulation::pointed(current)
}
