//! Faces of planar straight-line graphs and pseudo-triangulation validation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{orient_det, PointSet};
use crate::graph::{hull_edges, Edge, EdgeKey, GeomGraph};

/// A face boundary walk with the face interior on the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    /// Closed walk of vertex indices, rotated to start at its smallest index.
    pub boundary: Vec<usize>,
    pub convex_corner_count: usize,
    /// Twice the signed area enclosed by the walk.
    pub doubled_area: i128,
}

impl Face {
    fn from_walk(points: &PointSet, mut walk: Vec<usize>) -> Self {
        let start = (0..walk.len()).min_by_key(|&i| walk[i]).unwrap_or(0);
        walk.rotate_left(start);
        let k = walk.len();
        let mut convex = 0;
        let mut area = 0i128;
        for i in 0..k {
            let prev = points[walk[(i + k - 1) % k]];
            let cur = points[walk[i]];
            let next = points[walk[(i + 1) % k]];
            if orient_det(prev, cur, next) > 0 {
                convex += 1;
            }
            area += cur.x as i128 * next.y as i128 - cur.y as i128 * next.x as i128;
        }
        Face {
            boundary: walk,
            convex_corner_count: convex,
            doubled_area: area,
        }
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// No vertex repeats along the walk.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.boundary.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_triangle(&self) -> bool {
        self.len() == 3
    }
}

/// A simple polygon with exactly three convex corners. Triangles qualify.
pub fn is_pseudo_triangle(face: &Face) -> bool {
    face.is_simple() && face.convex_corner_count == 3
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    /// Bounded faces, sorted by boundary.
    pub interior: Vec<Face>,
    pub outer: Face,
}

/// Traverses the rotation system of a connected graph.
///
/// Leaving `u -> v`, the walk continues along `v -> w` where `w` precedes `u` in
/// the counterclockwise order around `v`. The single walk with non-positive
/// signed area is the outer face.
pub fn extract_faces(g: &GeomGraph) -> Result<Faces> {
    if g.edge_count() == 0 || g.component_count() != 1 {
        return Err(Error::DisconnectedGraph);
    }
    let rot = g.rotation_system();
    // visited[v][k]: half-edge from v to rot[v][k] already walked.
    let mut visited: Vec<Vec<bool>> = rot.iter().map(|r| vec![false; r.len()]).collect();
    let mut walks = Vec::new();
    for start in 0..g.n() {
        for k in 0..rot[start].len() {
            if visited[start][k] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut slot) = (start, k);
            while !visited[u][slot] {
                visited[u][slot] = true;
                walk.push(u);
                let v = rot[u][slot];
                let back = rot[v].iter().position(|&x| x == u).expect("symmetric adjacency");
                let deg = rot[v].len();
                slot = (back + deg - 1) % deg;
                u = v;
            }
            walks.push(Face::from_walk(g.points(), walk));
        }
    }
    let outer_idx = (0..walks.len())
        .min_by_key(|&i| walks[i].doubled_area)
        .expect("nonempty graph has a face");
    let outer = walks.swap_remove(outer_idx);
    debug_assert!(outer.doubled_area <= 0);
    debug_assert!(walks.iter().all(|f| f.doubled_area > 0));
    // Euler: V - E + F = 2 for a connected plane graph.
    debug_assert_eq!(g.n() + walks.len() + 1, g.edge_count() + 2);
    walks.sort_by(|a, b| a.boundary.cmp(&b.boundary));
    Ok(Faces {
        interior: walks,
        outer,
    })
}

pub fn is_pointed_vertex(g: &GeomGraph, v: usize) -> Result<bool> {
    if g.degree(v) == 0 {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.pointed_with(v, None))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub is_pseudo_triangulation: bool,
    pub is_pointed: bool,
    #[serde(rename = "faces")]
    pub face_count: usize,
    #[serde(rename = "edges")]
    pub edge_count: usize,
    pub violations: Vec<String>,
}

struct Checked {
    report: ValidationReport,
    faces: Option<Faces>,
}

fn check(g: &GeomGraph) -> Checked {
    let n = g.n();
    let mut violations = Vec::new();

    for e in hull_edges(g.points()) {
        if !g.contains(e) {
            violations.push(format!("hull edge {e} is missing"));
        }
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            violations.push(format!("vertex {v} is isolated"));
        }
    }
    let components = g.component_count();
    let faces = if components == 1 {
        extract_faces(g).ok()
    } else {
        violations.push(format!("graph has {components} connected components"));
        None
    };
    if let Some(faces) = &faces {
        for f in &faces.interior {
            if !is_pseudo_triangle(f) {
                let reason = if f.is_simple() {
                    format!("{} convex corners", f.convex_corner_count)
                } else {
                    "a non-simple boundary".to_string()
                };
                violations.push(format!("face {:?} has {reason}", f.boundary));
            }
        }
    }
    let is_pt = violations.is_empty();

    let mut all_pointed = true;
    for v in 0..n {
        if g.degree(v) > 0 && !g.pointed_with(v, None) {
            all_pointed = false;
            violations.push(format!("vertex {v} is not pointed"));
        }
    }
    let face_count = faces.as_ref().map_or(0, |f| f.interior.len());
    let is_pointed = is_pt && all_pointed;
    if is_pointed {
        if face_count != n - 2 {
            violations.push(format!("expected {} faces, found {face_count}", n - 2));
        }
        if g.edge_count() != 2 * n - 3 {
            violations.push(format!("expected {} edges, found {}", 2 * n - 3, g.edge_count()));
        }
    }
    Checked {
        report: ValidationReport {
            is_pseudo_triangulation: is_pt,
            is_pointed,
            face_count,
            edge_count: g.edge_count(),
            violations,
        },
        faces,
    }
}

/// Full structural check. Problems are reported as data, never as errors.
pub fn validate(g: &GeomGraph) -> ValidationReport {
    check(g).report
}

/// A graph whose bounded faces partition the convex hull into pseudo-triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoTriangulation {
    graph: GeomGraph,
    faces: Vec<Face>,
    pointed: bool,
}

impl PseudoTriangulation {
    pub fn new(graph: GeomGraph) -> Result<Self> {
        let Checked { report, faces } = check(&graph);
        if !report.is_pseudo_triangulation {
            return Err(Error::NotAPseudoTriangulation(report.violations));
        }
        if report.is_pointed && !report.violations.is_empty() {
            // A pointed graph with the wrong face or edge count.
            return Err(Error::NotAPseudoTriangulation(report.violations));
        }
        Ok(PseudoTriangulation {
            graph,
            faces: faces.map(|f| f.interior).unwrap_or_default(),
            pointed: report.is_pointed,
        })
    }

    /// Accepts only pointed pseudo-triangulations.
    pub fn pointed(graph: GeomGraph) -> Result<Self> {
        let t = Self::new(graph)?;
        if !t.pointed {
            return Err(Error::NotAPpt);
        }
        Ok(t)
    }

    pub fn graph(&self) -> &GeomGraph {
        &self.graph
    }

    pub fn into_graph(self) -> GeomGraph {
        self.graph
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn points(&self) -> &PointSet {
        self.graph.points()
    }

    pub fn key(&self) -> EdgeKey {
        self.graph.key()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Edges not on the convex hull.
    pub fn interior_edges(&self) -> Vec<Edge> {
        let hull = hull_edges(self.points());
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !hull.contains(e))
            .collect()
    }
}
