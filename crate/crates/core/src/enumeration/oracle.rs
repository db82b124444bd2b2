//! Exhaustive edge-subset searches, independent of flips and of the canonical
//! construction. Only practical for very small point sets.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::Result;
use crate::geom::PointSet;
use crate::graph::{edges_cross, hull_edges, Edge, EdgeKey, GeomGraph};
use crate::subdivision::{validate, PseudoTriangulation};

use super::flip::is_triangulation;
use super::Limits;

/// Include/exclude search over non-hull pairs, starting from the hull.
/// `admit` decides whether a non-crossing pair may join the current set;
/// `leaf` sees every complete non-crossing set.
fn search(
    points: &PointSet,
    admit: &dyn Fn(&[Edge], Edge) -> bool,
    leaf: &mut dyn FnMut(&[Edge]),
    min_size: usize,
) {
    let hull = hull_edges(points);
    let n = points.len();
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)))
        .filter(|e| !hull.contains(e))
        .collect();

    fn go(
        points: &PointSet,
        pairs: &[Edge],
        current: &mut Vec<Edge>,
        admit: &dyn Fn(&[Edge], Edge) -> bool,
        leaf: &mut dyn FnMut(&[Edge]),
        min_size: usize,
    ) {
        if current.len() + pairs.len() < min_size {
            return;
        }
        let Some((&e, rest)) = pairs.split_first() else {
            leaf(current);
            return;
        };
        if current.iter().all(|&f| !edges_cross(points, e, f)) && admit(current, e) {
            current.push(e);
            go(points, rest, current, admit, leaf, min_size);
            current.pop();
        }
        go(points, rest, current, admit, leaf, min_size);
    }

    let mut current = hull;
    go(points, &pairs, &mut current, admit, leaf, min_size);
}

fn graph_of(points: &Arc<PointSet>, edges: &[Edge]) -> GeomGraph {
    GeomGraph::from_trusted(points.clone(), edges.iter().copied().collect())
}

fn pointed_after_adding(points: &PointSet, current: &[Edge], e: Edge) -> bool {
    [e.lo, e.hi].into_iter().all(|v| {
        let nbrs: Vec<_> = current
            .iter()
            .chain(std::iter::once(&e))
            .filter(|f| f.touches(v))
            .map(|f| points[f.other(v)])
            .collect();
        crate::geom::is_pointed_at(points[v], &nbrs)
    })
}

/// All pointed pseudo-triangulations, as the pointed non-crossing edge sets of
/// size `2n - 3` that validate.
pub fn brute_force_maximal_pointed(points: Arc<PointSet>, limits: &Limits) -> Result<BTreeSet<EdgeKey>> {
    limits.check_oracle(points.len())?;
    let target = 2 * points.len() - 3;
    let mut out = BTreeSet::new();
    let admit = |current: &[Edge], e: Edge| current.len() < target && pointed_after_adding(&points, current, e);
    let mut leaf = |edges: &[Edge]| {
        if edges.len() == target && validate(&graph_of(&points, edges)).is_pointed {
            let mut key = edges.to_vec();
            key.sort();
            out.insert(key);
        }
    };
    search(&points, &admit, &mut leaf, target);
    Ok(out)
}

/// Every pseudo-triangulation, pointed or not, as `(edge count, all vertices pointed)`,
/// sorted.
pub fn brute_force_all_pseudo_triangulations(
    points: Arc<PointSet>,
    limits: &Limits,
) -> Result<Vec<(usize, bool)>> {
    limits.check_all(points.len())?;
    let mut out = Vec::new();
    let mut leaf = |edges: &[Edge]| {
        let report = validate(&graph_of(&points, edges));
        if report.is_pseudo_triangulation {
            out.push((edges.len(), report.is_pointed));
        }
    };
    search(&points, &|_, _| true, &mut leaf, 0);
    out.sort();
    Ok(out)
}

/// All triangulations, as maximal non-crossing edge sets.
pub fn brute_force_triangulations(points: Arc<PointSet>, limits: &Limits) -> Result<BTreeSet<EdgeKey>> {
    limits.check_oracle(points.len())?;
    let n = points.len();
    let h = points.convex_hull().len();
    let target = 3 * n - 3 - h;
    let mut out = BTreeSet::new();
    let mut leaf = |edges: &[Edge]| {
        if edges.len() == target && is_triangulation(&graph_of(&points, edges)) {
            let mut key = edges.to_vec();
            key.sort();
            out.insert(key);
        }
    };
    search(&points, &|_, _| true, &mut leaf, target);
    Ok(out)
}

/// Like [`brute_force_maximal_pointed`] but returning validated objects.
pub fn brute_force_ppts(points: Arc<PointSet>, limits: &Limits) -> Result<Vec<PseudoTriangulation>> {
    let keys = brute_force_maximal_pointed(points.clone(), limits)?;
    Ok(keys
        .into_iter()
        .map(|k| PseudoTriangulation::pointed(graph_of(&points, &k)).expect("validated by the search"))
        .collect())
}
