use crate::error::{Error, Result};
use crate::graph::{candidate_pairs, hull_edges, Edge, GeomGraph};
use crate::subdivision::{validate, PseudoTriangulation};

/// Replaces the interior edge `e` of a pointed pseudo-triangulation by the unique
/// other edge that yields a pointed pseudo-triangulation again.
///
/// Works by removal and scan: every non-edge that crosses nothing and keeps both
/// endpoints pointed is tried and validated; more or fewer than one survivor is an
/// error.
pub fn flip(t: &PseudoTriangulation, e: Edge) -> Result<PseudoTriangulation> {
    if !t.is_pointed() {
        return Err(Error::NotAPpt);
    }
    if hull_edges(t.points()).contains(&e) {
        return Err(Error::HullEdgeNotFlippable(e));
    }
    let removed = t.graph().remove_edge(e)?;
    let mut found: Option<PseudoTriangulation> = None;
    let mut count = 0;
    for cand in candidate_pairs(t.points()) {
        if cand == e
            || !removed.can_add_without_crossing(cand)
            || !removed.pointed_with(cand.lo, Some(cand.hi))
            || !removed.pointed_with(cand.hi, Some(cand.lo))
        {
            continue;
        }
        if let Ok(next) = PseudoTriangulation::pointed(removed.with_edge(cand)) {
            count += 1;
            found.get_or_insert(next);
        }
    }
    match (count, found) {
        (1, Some(next)) => Ok(next),
        (count, _) => Err(Error::FlipNotUnique { edge: e, count }),
    }
}

/// Diagonal flip in a triangulation. `Ok(None)` when the two triangles beside `e`
/// form a non-convex quadrilateral.
pub fn flip_triangulation(g: &GeomGraph, e: Edge) -> Result<Option<GeomGraph>> {
    if hull_edges(g.points()).contains(&e) {
        return Err(Error::HullEdgeNotFlippable(e));
    }
    let removed = g.remove_edge(e)?;
    let replacements: Vec<GeomGraph> = candidate_pairs(g.points())
        .into_iter()
        .filter(|&c| c != e && removed.can_add_without_crossing(c))
        .map(|c| removed.with_edge(c))
        .filter(is_triangulation)
        .collect();
    match replacements.len() {
        0 => Ok(None),
        1 => Ok(replacements.into_iter().next()),
        count => Err(Error::FlipNotUnique { edge: e, count }),
    }
}

/// A pseudo-triangulation whose faces are all triangles.
pub fn is_triangulation(g: &GeomGraph) -> bool {
    PseudoTriangulation::new(g.clone())
        .map(|t| t.faces().iter().all(|f| f.is_triangle()))
        .unwrap_or(false)
}

/// Any triangulation: a greedy maximal non-crossing graph, shortest edges first.
pub fn seed_triangulation(g: &GeomGraph) -> GeomGraph {
    let mut current = GeomGraph::empty(g.shared_points().clone());
    for e in candidate_pairs(g.points()) {
        if current.can_add_without_crossing(e) {
            current = current.with_edge(e);
        }
    }
    debug_assert!(validate(&current).is_pseudo_triangulation);
    current
}
