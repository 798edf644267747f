//! Linear forests and the two-vertex joins built on top of them.
//!
//! Layout convention for every join produced here: the two join vertices are
//! `0` and `1`, followed by the path blocks in order, each path labelled
//! consecutively from one end to the other.

use std::fmt;
use std::ops::Range;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{arg_err, Result};
use crate::graph::{path, Graph};

/// Vertex label of the first join vertex.
pub const JOIN_A: usize = 0;
/// Vertex label of the second join vertex.
pub const JOIN_B: usize = 1;

/// A disjoint union of paths, stored as its non-increasing list of path
/// orders. An isolated vertex is a path of order 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct LinearForest {
    parts: Vec<usize>,
}

impl LinearForest {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() {
            return arg_err("a linear forest needs at least one path");
        }
        if parts.contains(&0) {
            return arg_err("path orders must be positive");
        }
        let mut parts = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForest { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of vertices.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of edges: `total - #parts`.
    pub fn size(&self) -> usize {
        self.total() - self.parts.len()
    }

    /// The `a` for which this forest lies in `L(total + 2, a)`.
    pub fn deficiency(&self) -> usize {
        self.parts.len() - 1
    }

    /// Membership in the family of linear forests of order `n - 2` and size
    /// `n - 3 - a`.
    pub fn in_family(&self, n: usize, a: usize) -> bool {
        n >= 2 && self.total() == n - 2 && self.parts.len() == a + 1
    }

    /// The two largest path orders; the second is 0 for a single path.
    pub fn top_two(&self) -> (usize, usize) {
        (self.parts[0], self.parts.get(1).copied().unwrap_or(0))
    }

    pub fn to_graph(&self) -> Graph {
        self.parts
            .iter()
            .fold(Graph::empty(0), |acc, &p| acc.union(&path(p)))
    }
}

impl TryFrom<Vec<usize>> for LinearForest {
    type Error = crate::error::SpexError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        LinearForest::new(&parts)
    }
}

impl From<LinearForest> for Vec<usize> {
    fn from(f: LinearForest) -> Self {
        f.parts
    }
}

impl fmt::Display for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Disjoint union of paths of the given orders, stored non-increasing.
pub fn build_linear_forest(parts: &[usize]) -> Result<Graph> {
    Ok(LinearForest::new(parts)?.to_graph())
}

/// Join of two vertices with the forest. The two join vertices are adjacent
/// iff `dominating_edge` is set.
pub fn k2_join(forest: &LinearForest, dominating_edge: bool) -> Graph {
    join_of_paths(forest.parts(), dominating_edge)
}

/// Same as [`k2_join`] but keeps `blocks` in the given order, so that callers
/// can address a particular path by position. Zero-length blocks are skipped.
pub fn join_of_paths(blocks: &[usize], dominating_edge: bool) -> Graph {
    let forest = blocks
        .iter()
        .fold(Graph::empty(0), |acc, &p| acc.union(&path(p)));
    let head = if dominating_edge {
        crate::graph::complete(2)
    } else {
        Graph::empty(2)
    };
    let g = head.join(&forest);
    debug_assert!(g.n() > 200 || crate::planarity::is_planar(&g));
    g
}

/// Vertex range occupied by block `index` in a [`join_of_paths`] layout.
pub fn block_range(blocks: &[usize], index: usize) -> Range<usize> {
    let start = 2 + blocks[..index].iter().sum::<usize>();
    start..start + blocks[index]
}

/// Smallest order accepted by [`extremal_graph`] for deficiency `k`.
pub fn extremal_min_order(k: usize) -> usize {
    3 * k + 7
}

/// The forest `P(n-2k-4) + 2 P(k+1)` of the extremal graph.
pub fn extremal_forest(n: usize, k: usize) -> Result<LinearForest> {
    if n < extremal_min_order(k) {
        return arg_err(format!(
            "extremal graph needs n >= 3k + 7 = {} (got n = {n}, k = {k})",
            extremal_min_order(k)
        ));
    }
    LinearForest::new(&[n - 2 * k - 4, k + 1, k + 1])
}

/// `K2 v (P(n-2k-4) + 2 P(k+1))` with the dominating edge present.
pub fn extremal_graph(n: usize, k: usize) -> Result<Graph> {
    Ok(k2_join(&extremal_forest(n, k)?, true))
}

/// Partitions of `total` into exactly `parts` positive parts, each a
/// non-increasing list, in reverse-lexicographic order.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(total: usize, parts: usize) -> Self {
        let next = (parts >= 1 && total >= parts).then(|| {
            let mut first = vec![1; parts];
            first[0] = total - parts + 1;
            first
        });
        Partitions { next }
    }

    fn advance(current: &[usize]) -> Option<Vec<usize>> {
        let m = current.len();
        let mut suffix = current[m - 1];
        for i in (0..m.saturating_sub(1)).rev() {
            suffix += current[i];
            let cap = current[i] - 1;
            let slots = m - i - 1;
            let rest = suffix - cap;
            if cap == 0 || rest > cap * slots {
                continue;
            }
            let mut out = current[..i].to_vec();
            out.push(cap);
            let mut left = rest;
            for slot in 0..slots {
                let after = slots - slot - 1;
                let take = cap.min(left - after);
                out.push(take);
                left -= take;
            }
            return Some(out);
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        self.next = Self::advance(&current);
        Some(current)
    }
}

/// Every forest in the family of linear forests of order `n - 2` with
/// `a + 1` paths, in reverse-lexicographic order.
pub fn enumerate_lna(n: usize, a: usize) -> Result<impl Iterator<Item = LinearForest>> {
    if n < a + 3 {
        return arg_err(format!("need n >= a + 3 (got n = {n}, a = {a})"));
    }
    Ok(Partitions::new(n - 2, a + 1).map(|parts| LinearForest { parts }))
}

/// Forests of the given total with at most `max_parts` paths, grouped by
/// path count (fewest first) and reverse-lexicographic within a group.
pub fn forests_up_to(total: usize, max_parts: usize) -> impl Iterator<Item = LinearForest> {
    (1..=max_parts.min(total)).flat_map(move |m| Partitions::new(total, m).map(|parts| LinearForest { parts }))
}

/// Uniformly random composition of `total` into a random number of parts
/// (at most `max_parts`), returned as a forest.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, total: usize, max_parts: usize) -> LinearForest {
    assert!(total >= 1 && max_parts >= 1);
    let parts = rng.gen_range(1..=max_parts.min(total));
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, total - 1, parts - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut lengths = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain([total]) {
        lengths.push(c - prev);
        prev = c;
    }
    LinearForest::new(&lengths).expect("positive parts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite};

    #[test]
    fn build_examples() {
        let g = build_linear_forest(&[3]).unwrap();
        assert_eq!(g, path(3));

        let f = LinearForest::new(&[1, 4, 1]).unwrap();
        assert_eq!(f.parts(), &[4, 1, 1]);
        let g = f.to_graph();
        assert_eq!((g.n(), g.edge_count()), (6, 3));
        assert!(f.in_family(8, 2));

        let g = build_linear_forest(&[2, 2]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 2));

        assert!(build_linear_forest(&[]).is_err());
        assert!(build_linear_forest(&[3, 0]).is_err());
    }

    #[test]
    fn k2_join_examples() {
        let ones = LinearForest::new(&[1; 18]).unwrap();
        assert_eq!(k2_join(&ones, false), complete_bipartite(2, 18));

        let f = LinearForest::new(&[4, 1, 1]).unwrap();
        let g = k2_join(&f, true);
        assert_eq!((g.n(), g.edge_count()), (8, 16));

        let g = k2_join(&LinearForest::new(&[1]).unwrap(), true);
        assert_eq!(g, complete(3));
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_forest(8, 0).unwrap().parts(), &[4, 1, 1]);
        assert_eq!(extremal_forest(13, 1).unwrap().parts(), &[7, 2, 2]);
        let f = extremal_forest(20, 2).unwrap();
        assert_eq!(f.parts(), &[12, 3, 3]);
        assert_eq!(f.size(), 20 - 3 - 2);
        let g = extremal_graph(20, 2).unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.edge_count(), 3 * 20 - 8);
        assert!(extremal_graph(9, 1).is_err());
        assert!(extremal_graph(10, 1).is_ok());
    }

    #[test]
    fn lna_examples() {
        let list = |n, a| -> Vec<Vec<usize>> {
            enumerate_lna(n, a).unwrap().map(|f| f.parts().to_vec()).collect()
        };
        assert_eq!(list(6, 0), vec![vec![4]]);
        assert_eq!(list(6, 1), vec![vec![3, 1], vec![2, 2]]);
        assert_eq!(list(8, 2), vec![vec![4, 1, 1], vec![3, 2, 1], vec![2, 2, 2]]);
        assert_eq!(list(5, 2), vec![vec![1, 1, 1]]);
        assert!(enumerate_lna(4, 2).is_err());
    }

    #[test]
    fn partitions_reverse_lex() {
        let all: Vec<_> = Partitions::new(9, 3).collect();
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 7);
        assert_eq!(Partitions::new(3, 4).count(), 0);
    }

    #[test]
    fn block_ranges() {
        let blocks = [5, 3, 2];
        assert_eq!(block_range(&blocks, 0), 2..7);
        assert_eq!(block_range(&blocks, 1), 7..10);
        assert_eq!(block_range(&blocks, 2), 10..12);
    }

    #[test]
    fn random_forests_have_requested_total() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let f = random_forest(&mut rng, 40, 5);
            assert_eq!(f.total(), 40);
            assert!(f.parts().len() <= 5);
        }
    }
}
