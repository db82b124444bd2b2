use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{angular_cmp, is_pointed_at, segments_cross, Point, PointSet};

/// Undirected edge between two point indices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub lo: usize,
    pub hi: usize,
}

impl Edge {
    /// Panics on a self-loop; use [`GeomGraph::new`] for unchecked input.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop at {a}");
        Edge {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn other(self, v: usize) -> usize {
        if v == self.lo {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn touches(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Sorted edge list identifying a graph on a fixed point set.
pub type EdgeKey = Vec<Edge>;

/// All pairs `(i, j)` with `i < j`, ordered by squared length, then by index pair.
pub fn candidate_pairs(points: &PointSet) -> Vec<Edge> {
    let n = points.len();
    let mut pairs: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)))
        .collect();
    pairs.sort_by_key(|e| (squared_length(points, *e), *e));
    pairs
}

pub fn squared_length(points: &PointSet, e: Edge) -> i128 {
    let d = points[e.lo].to(points[e.hi]);
    d.x as i128 * d.x as i128 + d.y as i128 * d.y as i128
}

pub fn edges_cross(points: &PointSet, e: Edge, f: Edge) -> bool {
    e != f && segments_cross(points[e.lo], points[e.hi], points[f.lo], points[f.hi])
}

/// Hull edges of a point set, in hull order.
pub fn hull_edges(points: &PointSet) -> Vec<Edge> {
    let hull = points.convex_hull();
    (0..hull.len())
        .map(|i| Edge::new(hull[i], hull[(i + 1) % hull.len()]))
        .collect()
}

/// A non-crossing straight-line graph on a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeomGraph {
    points: Arc<PointSet>,
    edges: BTreeSet<Edge>,
}

impl GeomGraph {
    /// Checks indices, self-loops, duplicates and crossings.
    pub fn new(points: Arc<PointSet>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = points.len();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange(a, b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = Edge::new(a, b);
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        let list: Vec<Edge> = set.iter().copied().collect();
        for (i, &e) in list.iter().enumerate() {
            for &f in &list[i + 1..] {
                if edges_cross(&points, e, f) {
                    return Err(Error::CrossingEdges(e, f));
                }
            }
        }
        Ok(GeomGraph { points, edges: set })
    }

    pub fn empty(points: Arc<PointSet>) -> Self {
        GeomGraph {
            points,
            edges: BTreeSet::new(),
        }
    }

    /// Caller guarantees the edges are valid and pairwise non-crossing.
    pub(crate) fn from_trusted(points: Arc<PointSet>, edges: BTreeSet<Edge>) -> Self {
        debug_assert!(edges.iter().all(|e| e.hi < points.len()));
        GeomGraph { points, edges }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn shared_points(&self) -> &Arc<PointSet> {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn key(&self) -> EdgeKey {
        self.edges.iter().copied().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0; self.n()];
        for e in &self.edges {
            deg[e.lo] += 1;
            deg[e.hi] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.other(v))
            .collect()
    }

    /// Neighbor lists sorted counterclockwise around each vertex.
    pub fn rotation_system(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for e in &self.edges {
            adj[e.lo].push(e.hi);
            adj[e.hi].push(e.lo);
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            let pv = self.points[v];
            nbrs.sort_by(|&a, &b| angular_cmp(pv.to(self.points[a]), pv.to(self.points[b])));
        }
        adj
    }

    /// Number of connected components, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut components = n;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.lo), find(&mut parent, e.hi));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components
    }

    /// Whether `e` could be added without crossing an existing edge.
    pub fn can_add_without_crossing(&self, e: Edge) -> bool {
        !self.edges.contains(&e) && self.edges.iter().all(|&f| !edges_cross(&self.points, e, f))
    }

    /// Whether `v` is pointed, optionally with one extra neighbor. Isolated
    /// vertices count as pointed.
    pub(crate) fn pointed_with(&self, v: usize, extra: Option<usize>) -> bool {
        let nbrs: Vec<Point> = self
            .edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.other(v))
            .chain(extra)
            .map(|w| self.points[w])
            .collect();
        nbrs.is_empty() || is_pointed_at(self.points[v], &nbrs)
    }

    pub(crate) fn with_edge(&self, e: Edge) -> GeomGraph {
        let mut edges = self.edges.clone();
        edges.insert(e);
        GeomGraph::from_trusted(self.points.clone(), edges)
    }

    pub(crate) fn without_edge(&self, e: Edge) -> GeomGraph {
        let mut edges = self.edges.clone();
        edges.remove(&e);
        GeomGraph::from_trusted(self.points.clone(), edges)
    }

    /// Removes an edge, failing if it is absent.
    pub fn remove_edge(&self, e: Edge) -> Result<GeomGraph> {
        if !self.contains(e) {
            return Err(Error::EdgeNotPresent(e));
        }
        Ok(self.without_edge(e))
    }
}
