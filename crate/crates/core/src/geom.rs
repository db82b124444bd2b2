//! Exact planar predicates over integer points.
//!
//! Coordinates are bounded by [`MAX_COORD`] so every difference fits in 42 bits
//! and every 2x2 determinant of differences fits comfortably in an `i128`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted absolute coordinate value.
pub const MAX_COORD: i64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Direction vector from `self` to `other`.
    pub fn to(self, other: Point) -> Point {
        Point::new(other.x - self.x, other.y - self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point::new(x, y)
    }
}

fn cross(u: Point, v: Point) -> i128 {
    u.x as i128 * v.y as i128 - u.y as i128 * v.x as i128
}

fn dot(u: Point, v: Point) -> i128 {
    u.x as i128 * v.x as i128 + u.y as i128 * v.y as i128
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Twice the signed area of the triangle `(a, b, c)`.
pub fn orient_det(a: Point, b: Point, c: Point) -> i128 {
    cross(a.to(b), a.to(c))
}

pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    match orient_det(a, b, c).cmp(&0) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::CounterClockwise,
    }
}

/// `p` lies strictly between `a` and `b`, given that the three are collinear.
fn strictly_between(a: Point, b: Point, p: Point) -> bool {
    p != a && p != b && dot(p.to(a), p.to(b)) < 0
}

/// Whether the open segments `p1p2` and `q1q2` share a point.
///
/// Touching at a common endpoint only is not a crossing; an endpoint lying in the
/// relative interior of the other segment is, and so is a collinear overlap.
pub fn segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let o1 = orient_det(p1, p2, q1).signum();
    let o2 = orient_det(p1, p2, q2).signum();
    let o3 = orient_det(q1, q2, p1).signum();
    let o4 = orient_det(q1, q2, p2).signum();

    if o1 == 0 && o2 == 0 {
        // Collinear: compare the parameter intervals along the shared line.
        let axis = p1.to(p2);
        let t = |p: Point| dot(p1.to(p), axis);
        let (a0, a1) = (t(p1).min(t(p2)), t(p1).max(t(p2)));
        let (b0, b1) = (t(q1).min(t(q2)), t(q1).max(t(q2)));
        return a0.max(b0) < a1.min(b1);
    }
    if (o1 == 0 && strictly_between(p1, p2, q1))
        || (o2 == 0 && strictly_between(p1, p2, q2))
        || (o3 == 0 && strictly_between(q1, q2, p1))
        || (o4 == 0 && strictly_between(q1, q2, p2))
    {
        return true;
    }
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Counterclockwise angular order of nonzero direction vectors, starting at the
/// positive x-axis. Ties (same direction) compare equal.
pub fn angular_cmp(u: Point, v: Point) -> Ordering {
    fn half(p: Point) -> u8 {
        if p.y > 0 || (p.y == 0 && p.x > 0) {
            0
        } else {
            1
        }
    }
    half(u)
        .cmp(&half(v))
        .then_with(|| 0.cmp(&cross(u, v)))
}

/// Whether the edges from `v` to each of `neighbors` lie in an open half-plane
/// bounded by a line through `v`, i.e. span an angle strictly less than pi.
///
/// Two exactly opposite directions give an aperture of exactly pi and are not
/// pointed.
pub fn is_pointed_at(v: Point, neighbors: &[Point]) -> bool {
    let mut dirs: Vec<Point> = neighbors.iter().map(|&w| v.to(w)).collect();
    debug_assert!(dirs.iter().all(|d| d.x != 0 || d.y != 0));
    dirs.sort_by(|&a, &b| angular_cmp(a, b));
    dirs.dedup_by(|a, b| angular_cmp(*a, *b) == Ordering::Equal);
    if dirs.len() <= 1 {
        return true;
    }
    // Some circular gap between angular neighbors must exceed pi.
    (0..dirs.len()).any(|i| {
        let a = dirs[i];
        let b = dirs[(i + 1) % dirs.len()];
        cross(a, b) < 0
    })
}

/// A validated set of points: at least three, pairwise distinct, no three collinear.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::TooFewPoints(n));
        }
        for (i, p) in points.iter().enumerate() {
            for value in [p.x, p.y] {
                if value.abs() > MAX_COORD {
                    return Err(Error::CoordinateOutOfRange { index: i, value });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if orient_det(points[i], points[j], points[k]) == 0 {
                        return Err(Error::CollinearTriple(i, j, k));
                    }
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Point::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    /// Hull vertex indices in counterclockwise order, starting from the
    /// lexicographically smallest point.
    pub fn convex_hull(&self) -> Vec<usize> {
        convex_hull(&self.points)
    }

    pub fn is_convex_position(&self) -> bool {
        self.convex_hull().len() == self.len()
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

/// Monotone chain hull over general-position points.
pub fn convex_hull(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| points[i]);
    if order.len() < 3 {
        return order;
    }

    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && orient_det(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], points[i])
                <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && orient_det(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], points[i])
                <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}
