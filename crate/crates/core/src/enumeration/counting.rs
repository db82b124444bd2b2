use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::PointSet;

use super::search::{enumerate_ppt, enumerate_triangulations};
use super::Limits;

/// Triangulation and pointed pseudo-triangulation counts for one point set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub num_triangulations: u64,
    pub num_ppt: u64,
    pub convex_position: bool,
    /// `num_triangulations <= num_ppt`.
    pub conjecture_holds: bool,
    pub equality: bool,
    /// Equality only occurs in convex position.
    pub equality_implies_convex: bool,
}

impl CountReport {
    /// Either half of the conjecture failed: a counterexample.
    pub fn is_counterexample(&self) -> bool {
        !self.conjecture_holds || !self.equality_implies_convex
    }
}

/// Counts both families by enumeration. A failed inequality is reported in the
/// result, never raised as an error.
pub fn check_conjecture(points: Arc<PointSet>, limits: &Limits) -> Result<CountReport> {
    let n = points.len();
    let convex_position = points.is_convex_position();
    let num_triangulations = enumerate_triangulations(points.clone(), limits)?.len() as u64;
    let num_ppt = enumerate_ppt(points, limits)?.len() as u64;
    let equality = num_triangulations == num_ppt;
    Ok(CountReport {
        n,
        num_triangulations,
        num_ppt,
        convex_position,
        conjecture_holds: num_triangulations <= num_ppt,
        equality,
        equality_implies_convex: !equality || convex_position,
    })
}

/// Smallest maximum vertex degree over all pointed pseudo-triangulations.
/// Fails if it exceeds 5.
pub fn min_max_degree(points: Arc<PointSet>, limits: &Limits) -> Result<usize> {
    let best = enumerate_ppt(points, limits)?
        .iter()
        .map(|t| t.graph().max_degree())
        .min()
        .expect("every point set has a pointed pseudo-triangulation");
    if best > 5 {
        return Err(Error::DegreeBoundExceeded(best));
    }
    Ok(best)
}
