//! Edge-count bounds for planar graphs over vertex subsets: at most
//! `3|X| - 6` edges inside `X`, and at most `2(|X| + |Y|) - 4` edges across a
//! disjoint pair `X, Y`.

use serde::Serialize;

use crate::error::{arg_err, Result};
use crate::graph::Graph;

/// Two disjoint vertex sets of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSubsetPair {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl VertexSubsetPair {
    pub fn new(n: usize, x: &[usize], y: &[usize]) -> Result<Self> {
        let mut mark = vec![0u8; n];
        for (set, tag) in [(x, 1u8), (y, 2u8)] {
            for &v in set {
                if v >= n {
                    return arg_err(format!("vertex {v} out of range for n = {n}"));
                }
                if mark[v] == tag {
                    return arg_err(format!("vertex {v} listed twice"));
                }
                if mark[v] != 0 {
                    return arg_err(format!("X and Y are not disjoint (both contain {v})"));
                }
                mark[v] = tag;
            }
        }
        Ok(VertexSubsetPair {
            x: x.to_vec(),
            y: y.to_vec(),
        })
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarBoundsReport {
    pub inner_edges: usize,
    /// `3|X| - 6`, or `None` when `|X| < 3`.
    pub inner_bound: Option<usize>,
    pub cross_edges: usize,
    /// `2(|X| + |Y|) - 4`, or `None` when `|X| + |Y| < 3` (a single
    /// edge between two vertices already exceeds it).
    pub cross_bound: Option<usize>,
    pub holds: bool,
}

/// Counts `e(X)` and `e(X, Y)` and compares them with the planar bounds.
/// A bound whose size precondition fails is reported as `None` and does not
/// affect `holds`.
pub fn planar_bounds_check(g: &Graph, pair: &VertexSubsetPair) -> Result<PlanarBoundsReport> {
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in pair.x() {
        if v >= n {
            return arg_err(format!("vertex {v} out of range for n = {n}"));
        }
        side[v] = 1;
    }
    for &v in pair.y() {
        if v >= n {
            return arg_err(format!("vertex {v} out of range for n = {n}"));
        }
        side[v] = 2;
    }

    let (mut inner, mut cross) = (0, 0);
    for (u, v) in g.edges() {
        match (side[u], side[v]) {
            (1, 1) => inner += 1,
            (1, 2) | (2, 1) => cross += 1,
            _ => {}
        }
    }
    let (sx, sy) = (pair.x().len(), pair.y().len());
    let inner_bound = (sx >= 3).then(|| 3 * sx - 6);
    let cross_bound = (sx + sy >= 3).then(|| 2 * (sx + sy) - 4);
    let holds = inner_bound.is_none_or(|b| inner <= b) && cross_bound.is_none_or(|b| cross <= b);
    Ok(PlanarBoundsReport {
        inner_edges: inner,
        inner_bound,
        cross_edges: cross,
        cross_bound,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    #[test]
    fn k4_is_tight_inside() {
        let g = complete(4);
        let pair = VertexSubsetPair::new(4, &[0, 1, 2, 3], &[]).unwrap();
        let r = planar_bounds_check(&g, &pair).unwrap();
        assert_eq!((r.inner_edges, r.inner_bound), (6, Some(6)));
        assert!(r.holds);
    }

    #[test]
    fn k2_8_is_tight_across() {
        let g = complete_bipartite(2, 8);
        let y: Vec<_> = (2..10).collect();
        let pair = VertexSubsetPair::new(10, &[0, 1], &y).unwrap();
        let r = planar_bounds_check(&g, &pair).unwrap();
        assert_eq!((r.cross_edges, r.cross_bound), (16, Some(16)));
        assert_eq!(r.inner_bound, None);
        assert!(r.holds);
    }

    #[test]
    fn c6_inside() {
        let g = cycle(6).unwrap();
        let pair = VertexSubsetPair::new(6, &[0, 1, 2, 3, 4, 5], &[]).unwrap();
        let r = planar_bounds_check(&g, &pair).unwrap();
        assert_eq!((r.inner_edges, r.inner_bound), (6, Some(12)));
        assert!(r.holds);
    }

    #[test]
    fn k5_violates_inner_bound() {
        let g = complete(5);
        let pair = VertexSubsetPair::new(5, &[0, 1, 2, 3, 4], &[]).unwrap();
        assert!(!planar_bounds_check(&g, &pair).unwrap().holds);
    }

    #[test]
    fn overlapping_sets_rejected() {
        assert!(VertexSubsetPair::new(4, &[0, 1], &[1, 2]).is_err());
        assert!(VertexSubsetPair::new(4, &[0, 7], &[]).is_err());
    }
}
