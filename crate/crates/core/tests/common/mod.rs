//! Independent reference implementations used only by tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use rand::Rng;
use spex_core::Graph;

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
pub fn dense_rho(g: &Graph) -> f64 {
    let n = g.n();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a.symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Partitions of `n` into exactly `k` positive parts:
/// `p(n, k) = p(n - 1, k - 1) + p(n - k, k)`.
pub fn partition_count(n: usize, k: usize) -> u64 {
    let mut p = vec![vec![0u64; k + 1]; n + 1];
    p[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            p[i][j] = p[i - 1][j - 1] + p[i - j][j];
        }
    }
    p[n][k]
}

/// Every composition of `n` into `k` parts, sorted and deduplicated.
pub fn partitions_brute(n: usize, k: usize) -> BTreeSet<Vec<usize>> {
    fn go(rem: usize, k: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if k == 0 {
            if rem == 0 {
                let mut s = cur.clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                out.insert(s);
            }
            return;
        }
        for first in 1..=rem {
            cur.push(first);
            go(rem - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// Cycle lengths present in `g` (n <= 20) by dynamic programming over
/// vertex subsets: paths start at their minimum vertex `s`.
pub fn cycle_lengths_dp(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut found = BTreeSet::new();
    for s in 0..n {
        let allowed: u32 = ((1u32 << n) - 1) & !((1u32 << (s + 1)) - 1);
        // ends[mask] = set of endpoints v of a path s -> v covering mask (s excluded)
        let mut ends = vec![0u32; 1 << n];
        for w in bits(adj[s] & allowed) {
            ends[1 << w] |= 1 << w;
        }
        let mut masks: Vec<u32> = (1..(1u32 << n)).filter(|m| m & !allowed == 0).collect();
        masks.sort_by_key(|m| m.count_ones());
        for m in masks {
            let e = ends[m as usize];
            if e == 0 {
                continue;
            }
            let len = m.count_ones() as usize + 1;
            if len >= 3 && e & adj[s] != 0 {
                found.insert(len);
            }
            for v in bits(e) {
                for w in bits(adj[v] & allowed & !m) {
                    ends[(m | (1 << w)) as usize] |= 1 << w;
                }
            }
        }
    }
    found
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Planarity via Kuratowski: non-planar iff some K5 or K3,3 subdivision
/// exists. Exhaustive over branch sets; only for small graphs.
pub fn planar_kuratowski(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 10);
    if g.edge_count() < 9 {
        return true;
    }
    let verts: Vec<usize> = (0..n).collect();
    for set in subsets(&verts, 5) {
        if set.iter().all(|&v| g.degree(v) >= 4) {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .map(|(i, j)| (set[i], set[j]))
                .collect();
            if disjoint_paths(g, &set, &pairs) {
                return false;
            }
        }
    }
    for six in subsets(&verts, 6) {
        if !six.iter().all(|&v| g.degree(v) >= 3) {
            continue;
        }
        for left in subsets(&six[1..], 2) {
            let mut a = vec![six[0]];
            a.extend(left);
            let b: Vec<usize> = six.iter().copied().filter(|v| !a.contains(v)).collect();
            let pairs: Vec<(usize, usize)> =
                a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect();
            if disjoint_paths(g, &six, &pairs) {
                return false;
            }
        }
    }
    true
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    out.extend(subsets(&items[1..], k));
    out
}

/// Internally vertex-disjoint paths realising every pair, avoiding branch
/// vertices in their interiors.
fn disjoint_paths(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.n()];
    for &b in branch {
        used[b] = true;
    }
    route(g, pairs, 0, &mut used)
}

fn route(g: &Graph, pairs: &[(usize, usize)], i: usize, used: &mut [bool]) -> bool {
    if i == pairs.len() {
        return true;
    }
    let (a, b) = pairs[i];
    let mut interior = Vec::new();
    extend(g, pairs, i, a, b, used, &mut interior)
}

fn extend(
    g: &Graph,
    pairs: &[(usize, usize)],
    i: usize,
    at: usize,
    target: usize,
    used: &mut [bool],
    interior: &mut Vec<usize>,
) -> bool {
    for &w in g.neighbors(at) {
        if w == target {
            if route(g, pairs, i + 1, used) {
                return true;
            }
        } else if !used[w] {
            used[w] = true;
            interior.push(w);
            if extend(g, pairs, i, w, target, used, interior) {
                return true;
            }
            interior.pop();
            used[w] = false;
        }
    }
    false
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Straightforward graph6 writer: size header, then the upper triangle
/// column by column, six bits per printable byte.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let sextets = |value: usize, count: usize| -> Vec<u8> {
        (0..count).rev().map(|i| ((value >> (6 * i)) & 63) as u8 + 63).collect()
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        out.extend(sextets(n, 3));
    } else {
        out.extend(b"~~");
        out.extend(sextets(n, 6));
    }
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for i in 0..6 {
            byte = (byte << 1) | u8::from(chunk.get(i).copied().unwrap_or(false));
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).unwrap()
}
