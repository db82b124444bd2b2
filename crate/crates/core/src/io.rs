//! Plain-text point and edge files.
//!
//! Both formats hold two whitespace-separated integers per line. Lines whose first
//! non-blank character is `#` are comments and blank lines are ignored. A point's
//! index is its position among the data lines, starting at 0.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::{Point, PointSet};
use crate::graph::Edge;

fn parse_pairs<T: std::str::FromStr>(text: &str) -> Result<Vec<(T, T)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two integers, found {} fields", fields.len())));
        }
        let parse = |s: &str| s.parse::<T>().map_err(|_| err(format!("`{s}` is not a valid integer")));
        out.push((parse(fields[0])?, parse(fields[1])?));
    }
    Ok(out)
}

/// Parses raw points without checking general position.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    Ok(parse_pairs::<i64>(text)?.into_iter().map(Point::from).collect())
}

pub fn read_point_set(text: &str) -> Result<PointSet> {
    PointSet::new(parse_points(text)?)
}

pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>> {
    parse_pairs::<usize>(text)
}

pub fn write_points(points: &PointSet) -> String {
    let mut s = String::new();
    for p in points.points() {
        let _ = writeln!(s, "{} {}", p.x, p.y);
    }
    s
}

pub fn write_edges<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> String {
    let mut s = String::new();
    for e in edges {
        let _ = writeln!(s, "{} {}", e.lo, e.hi);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let text = "# square\n0 0\n\n  2 0\n# mid\n2\t2\n0 2\n";
        let pts = parse_points(text).unwrap();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[2], Point::new(2, 2));
    }

    #[test]
    fn errors_cite_line_numbers() {
        assert_eq!(
            parse_points("0 0\n# c\n1 x\n"),
            Err(Error::Parse { line: 3, message: "`x` is not a valid integer".into() })
        );
        assert!(matches!(parse_edges("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edges("0 -1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trip() {
        let ps = PointSet::from_coords(&[(0, 0), (-7, 3), (5, 11)]).unwrap();
        assert_eq!(read_point_set(&write_points(&ps)).unwrap(), ps);
        let edges = [Edge::new(0, 1), Edge::new(1, 2)];
        assert_eq!(parse_edges(&write_edges(&edges)).unwrap(), vec![(0, 1), (1, 2)]);
    }
}
