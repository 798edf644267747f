//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Result, SpexError};

/// A simple undirected graph. Vertices are `0..n`; every neighbour list is
/// sorted and free of duplicates, and adjacency is symmetric.
///
/// Values are immutable once built. Operations that change the edge set
/// return a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list, de-duplicating repeated pairs in
    /// either orientation.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(SpexError::InvalidEdge {
                    u,
                    v,
                    n,
                    reason: "vertex out of range",
                });
            }
            if u == v {
                return Err(SpexError::InvalidEdge {
                    u,
                    v,
                    n,
                    reason: "self-loop",
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and de-duplicates neighbour lists. Callers guarantee symmetry
    /// and the absence of loops.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        let g = Graph {
            adj,
            edges: twice / 2,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Verifies symmetry, sortedness and the absence of loops.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut twice = 0;
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbours of {v} not strictly sorted"));
            }
            for &w in list {
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if w >= self.n() || self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{w} not symmetric"));
                }
            }
            twice += list.len();
        }
        if twice != 2 * self.edges {
            return Err("edge count out of sync".into());
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Disjoint union. The vertices of `other` are shifted by `self.n()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + offset).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            edges: self.edges + other.edges,
        }
    }

    /// Join: the disjoint union plus every edge between the two operands.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut adj = Vec::with_capacity(n1 + n2);
        for list in &self.adj {
            let mut row = list.clone();
            row.extend(n1..n1 + n2);
            adj.push(row);
        }
        for list in &other.adj {
            let mut row: Vec<usize> = (0..n1).collect();
            row.extend(list.iter().map(|&w| w + n1));
            adj.push(row);
        }
        Graph {
            adj,
            edges: self.edges + other.edges + n1 * n2,
        }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Graph::from_edges(self.n(), &edges)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        if let Ok(i) = adj[u].binary_search(&v) {
            adj[u].remove(i);
            let j = adj[v].binary_search(&u).expect("symmetric adjacency");
            adj[v].remove(j);
        }
        Graph::from_raw_adjacency(adj)
    }

    /// Connected components, each as a sorted vertex list, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_raw_adjacency(adj)
    }

    /// Parses the plain-text edge-list format: the vertex count on the first
    /// non-blank line, then one `u v` pair per line. Lines starting with `#`
    /// are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut offset = 0;
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for line in text.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let body = line.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| SpexError::Parse {
                    offset: start,
                    message: format!("expected a non-negative integer, found {s:?}"),
                })
            };
            match (n, fields.as_slice()) {
                (None, [count]) => n = Some(parse(count)?),
                (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(SpexError::Parse {
                        offset: start,
                        message: format!("unexpected line {body:?}"),
                    })
                }
            }
        }
        let n = n.ok_or(SpexError::Parse {
            offset: 0,
            message: "missing vertex count".into(),
        })?;
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Path on `n` vertices with consecutive labels.
pub fn path(n: usize) -> Graph {
    let mut adj = vec![Vec::new(); n];
    for v in 1..n {
        adj[v - 1].push(v);
        adj[v].push(v - 1);
    }
    Graph::from_raw_adjacency(adj)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(SpexError::Argument(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let adj = (0..n)
        .map(|v| (0..n).filter(|&w| w != v).collect())
        .collect();
    Graph::from_raw_adjacency(adj)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::empty(a).join(&Graph::empty(b))
}
