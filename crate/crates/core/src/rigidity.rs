//! First-order rigidity of bar-joint frameworks.
//!
//! Velocities live in a `2n` vector `(vx_0, vy_0, vx_1, vy_1, ...)`. The bar between
//! `i` and `j` contributes the row with `p_i - p_j` in the columns of `i` and
//! `p_j - p_i` in the columns of `j`, so a velocity field is a flex exactly when it
//! preserves every bar length to first order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{hull_edges, Edge, GeomGraph};
use crate::linalg::{bareiss_rank, nullspace};
use crate::subdivision::PseudoTriangulation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityMatrix {
    pub n: usize,
    /// Bar order of the rows.
    pub bars: Vec<Edge>,
    pub rows: Vec<Vec<i64>>,
}

impl RigidityMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), 2 * self.n)
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
}

pub fn rigidity_matrix(g: &GeomGraph) -> RigidityMatrix {
    let n = g.n();
    let pts = g.points();
    let bars: Vec<Edge> = g.edges().iter().copied().collect();
    let rows = bars
        .iter()
        .map(|e| {
            let d = pts[e.hi].to(pts[e.lo]);
            let mut row = vec![0i64; 2 * n];
            row[2 * e.lo] = d.x;
            row[2 * e.lo + 1] = d.y;
            row[2 * e.hi] = -d.x;
            row[2 * e.hi + 1] = -d.y;
            row
        })
        .collect();
    RigidityMatrix { n, bars, rows }
}

pub fn rank(m: &RigidityMatrix) -> usize {
    bareiss_rank(m.big_rows())
}

/// Internal degrees of freedom: `2n - 3 - rank`.
pub fn internal_dof(g: &GeomGraph) -> usize {
    2 * g.n() - 3 - rank(&rigidity_matrix(g))
}

/// Rank `2n - 3` in the plane.
pub fn is_infinitesimally_rigid(g: &GeomGraph) -> bool {
    rank(&rigidity_matrix(g)) == 2 * g.n() - 3
}

/// Per-vertex velocity field with exact rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Motion {
    pub velocities: Vec<[BigRational; 2]>,
}

impl Motion {
    pub fn from_flat(v: Vec<BigRational>) -> Self {
        let velocities = v.chunks(2).map(|c| [c[0].clone(), c[1].clone()]).collect();
        Motion { velocities }
    }

    pub fn from_integers(v: &[(i64, i64)]) -> Self {
        let r = |x: i64| BigRational::from_integer(x.into());
        Motion {
            velocities: v.iter().map(|&(x, y)| [r(x), r(y)]).collect(),
        }
    }

    pub fn negated(&self) -> Self {
        Motion {
            velocities: self
                .velocities
                .iter()
                .map(|[x, y]| [-x.clone(), -y.clone()])
                .collect(),
        }
    }

    /// Components as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<[String; 2]> {
        let s = |r: &BigRational| format!("{}/{}", r.numer(), r.denom());
        self.velocities.iter().map(|[x, y]| [s(x), s(y)]).collect()
    }

    /// `(p_i - p_j) . (v_i - v_j)`: half the rate of change of the squared distance.
    pub fn pair_rate(&self, g: &GeomGraph, i: usize, j: usize) -> BigRational {
        let d = g.points()[j].to(g.points()[i]);
        let [xi, yi] = &self.velocities[i];
        let [xj, yj] = &self.velocities[j];
        BigRational::from_integer(d.x.into()) * (xi - xj)
            + BigRational::from_integer(d.y.into()) * (yi - yj)
    }
}

/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
fn primitive(v: Vec<BigRational>) -> Vec<BigRational> {
    let lcm = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter()
        .map(|x| BigRational::from_integer(x / &gcd))
        .collect()
}

/// The one-degree-of-freedom flex left after cutting a hull bar of a pointed
/// pseudo-triangulation.
///
/// Rigid motions are pinned on the smallest remaining bar `(a, b)`: `a` gets zero
/// velocity and `b` gets zero velocity across the bar (along the bar it is already
/// zero by the bar constraint). The returned motion is the primitive integer
/// nullspace vector oriented so the cut pair moves apart.
pub fn mechanism_motion(t: &PseudoTriangulation, hull_edge: Edge) -> Result<Motion> {
    if !t.is_pointed() {
        return Err(Error::NotAPpt);
    }
    if !hull_edges(t.points()).contains(&hull_edge) || !t.graph().contains(hull_edge) {
        return Err(Error::NotAHullEdge(hull_edge));
    }
    let cut = t.graph().remove_edge(hull_edge)?;
    let motion = pinned_flex(&cut)?;
    let rate = motion.pair_rate(&cut, hull_edge.lo, hull_edge.hi);
    if rate.is_zero() {
        return Err(Error::DegenerateMotion);
    }
    Ok(if rate.is_negative() { motion.negated() } else { motion })
}

/// Nullspace of the rigidity matrix with rigid motions pinned on the smallest bar;
/// fails unless it is one-dimensional.
pub fn pinned_flex(g: &GeomGraph) -> Result<Motion> {
    let n = g.n();
    let pin = *g.edges().iter().next().ok_or(Error::UnexpectedDofCount(2 * n))?;
    let (a, b) = (pin.lo, pin.hi);
    let m = rigidity_matrix(g);
    let mut rows: Vec<Vec<BigRational>> = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let unit = |col: usize| {
        let mut row = vec![BigRational::zero(); 2 * n];
        row[col] = BigRational::from_integer(1.into());
        row
    };
    rows.push(unit(2 * a));
    rows.push(unit(2 * a + 1));
    let d = g.points()[a].to(g.points()[b]);
    let mut across = vec![BigRational::zero(); 2 * n];
    across[2 * b] = BigRational::from_integer((-d.y).into());
    across[2 * b + 1] = BigRational::from_integer(d.x.into());
    rows.push(across);

    let mut basis = nullspace(&rows, 2 * n);
    if basis.len() != 1 {
        return Err(Error::UnexpectedDofCount(basis.len()));
    }
    Ok(Motion::from_flat(primitive(basis.remove(0))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansivenessReport {
    pub expansive: bool,
    /// Pairs whose distance shrinks, or bars whose length changes.
    pub violations: Vec<(usize, usize)>,
    /// Non-bar pairs whose distance is stationary to first order.
    pub stationary_pairs: Vec<(usize, usize)>,
}

/// Checks that no pairwise distance decreases and every bar keeps its length.
pub fn is_expansive(g: &GeomGraph, motion: &Motion) -> ExpansivenessReport {
    let n = g.n();
    let mut violations = Vec::new();
    let mut stationary = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let rate = motion.pair_rate(g, i, j);
            if g.contains(Edge::new(i, j)) {
                if !rate.is_zero() {
                    violations.push((i, j));
                }
            } else if rate.is_negative() {
                violations.push((i, j));
            } else if rate.is_zero() {
                stationary.push((i, j));
            }
        }
    }
    ExpansivenessReport {
        expansive: violations.is_empty(),
        violations,
        stationary_pairs: stationary,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_traits::One;

    use super::*;
    use crate::geom::PointSet;

    fn graph(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> GeomGraph {
        let ps = Arc::new(PointSet::from_coords(coords).unwrap());
        GeomGraph::new(ps, edges.iter().copied()).unwrap()
    }

    fn triangle() -> GeomGraph {
        graph(&[(0, 0), (4, 0), (0, 4)], &[(0, 1), (1, 2), (0, 2)])
    }

    fn square_diag() -> GeomGraph {
        graph(&[(0, 0), (2, 0), (2, 2), (0, 2)], &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    }

    /// Independent rank: plain rational Gauss-Jordan, counting pivots.
    fn rank_by_rationals(m: &RigidityMatrix) -> usize {
        let (rows, cols) = m.shape();
        let mut a: Vec<Vec<BigRational>> = m
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            let pivot = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && !row[c].is_zero() {
                    let f = &row[c] / &pivot[c];
                    for (x, p) in row.iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn triangle_matrix_rows() {
        let m = rigidity_matrix(&triangle());
        assert_eq!(m.shape(), (3, 6));
        assert_eq!(m.rows[0], vec![-4, 0, 4, 0, 0, 0]);
        for (row, bar) in m.rows.iter().zip(&m.bars) {
            assert!(row.iter().filter(|&&x| x != 0).count() <= 4);
            for v in [bar.lo, bar.hi] {
                assert!(row[2 * v] != 0 || row[2 * v + 1] != 0);
            }
        }
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn square_with_diagonal_rank() {
        let m = rigidity_matrix(&square_diag());
        assert_eq!(m.shape(), (5, 8));
        assert_eq!(rank_by_rationals(&m), 5);
        assert_eq!(rank(&m), 5);
        assert!(is_infinitesimally_rigid(&square_diag()));
    }

    #[test]
    fn trivial_motions_are_annihilated() {
        let g = square_diag();
        let pts: Vec<(i64, i64)> = g.points().points().iter().map(|p| (p.x, p.y)).collect();
        let m = rigidity_matrix(&g);
        let fields: [Vec<i64>; 3] = [
            pts.iter().flat_map(|_| [1, 0]).collect(),
            pts.iter().flat_map(|_| [0, 1]).collect(),
            pts.iter().flat_map(|&(x, y)| [-y, x]).collect(),
        ];
        for f in &fields {
            for row in &m.rows {
                assert_eq!(row.iter().zip(f).map(|(a, b)| a * b).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn hinge_opens() {
        let t = PseudoTriangulation::pointed(triangle()).unwrap();
        let cut = Edge::new(1, 2);
        let motion = mechanism_motion(&t, cut).unwrap();
        let g = t.graph().without_edge(cut);
        assert!(motion.pair_rate(&g, 1, 2).is_positive());
        let report = is_expansive(&g, &motion);
        assert!(report.expansive);
        assert!(report.stationary_pairs.is_empty());
        // Pinned on bar 0-1: only vertex 2 moves, swinging about 0 away from 1.
        assert!(motion.velocities[0].iter().all(Zero::is_zero));
        assert!(motion.velocities[1].iter().all(Zero::is_zero));
        assert_eq!(motion.to_strings()[2], ["-1/1".to_string(), "0/1".to_string()]);
    }

    #[test]
    fn square_mechanism_is_expansive() {
        let t = PseudoTriangulation::pointed(square_diag()).unwrap();
        let cut = Edge::new(1, 2);
        let motion = mechanism_motion(&t, cut).unwrap();
        let g = t.graph().without_edge(cut);
        for e in g.edges() {
            assert!(motion.pair_rate(&g, e.lo, e.hi).is_zero());
        }
        assert!(is_expansive(&g, &motion).expansive);
        assert!(!is_infinitesimally_rigid(&g));
        assert_eq!(internal_dof(&g), 1);

        let flipped = is_expansive(&g, &motion.negated());
        assert!(!flipped.expansive);
        assert!(flipped.violations.contains(&(1, 2)));
    }

    #[test]
    fn interior_edges_are_not_hull_edges() {
        let t = PseudoTriangulation::pointed(square_diag()).unwrap();
        assert_eq!(
            mechanism_motion(&t, Edge::new(0, 2)),
            Err(Error::NotAHullEdge(Edge::new(0, 2)))
        );
    }

    #[test]
    fn primitive_scaling() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let v = primitive(vec![r(1, 2), r(-3, 4), r(0, 1)]);
        assert_eq!(v, vec![r(2, 1), r(-3, 1), r(0, 1)]);
        assert!(v[0] > BigRational::one());
    }
}
