//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion, in the
//! formulation of Brandes). Only the decision is computed; no embedding is
//! produced.

use crate::graph::Graph;

type EdgeId = usize;

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn single(e: EdgeId) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'g> {
    g: &'g Graph,
    /// Undirected edge ids per vertex, parallel to `g.neighbors(v)`.
    edge_ids: Vec<Vec<EdgeId>>,
    /// Orientation chosen by the DFS: `(tail, head)`.
    oriented: Vec<Option<(usize, usize)>>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out_edges: Vec<Vec<EdgeId>>,
    reference: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl<'g> LrState<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let m = g.edge_count();
        let mut edge_ids = vec![Vec::new(); n];
        let mut next = 0;
        let mut id_of = std::collections::HashMap::with_capacity(m);
        for v in 0..n {
            for &w in g.neighbors(v) {
                let key = (v.min(w), v.max(w));
                let id = *id_of.entry(key).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                edge_ids[v].push(id);
            }
        }
        LrState {
            g,
            edge_ids,
            oriented: vec![None; m],
            height: vec![None; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out_edges: vec![Vec::new(); n],
            reference: vec![None; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn head(&self, e: EdgeId) -> usize {
        self.oriented[e].expect("edge oriented").1
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            let e = self.edge_ids[v][i];
            if self.oriented[e].is_some() {
                continue;
            }
            self.oriented[e] = Some((v, w));
            self.out_edges[v].push(e);
            self.lowpt[e] = hv;
            self.lowpt2[e] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }

            self.nesting_depth[e] = 2 * self.lowpt[e];
            if self.lowpt2[e] < hv {
                self.nesting_depth[e] += 1;
            }

            if let Some(p) = parent {
                if self.lowpt[e] < self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt[p].min(self.lowpt2[e]);
                    self.lowpt[p] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt[e]);
                } else {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        interval.high.is_some_and(|h| self.lowpt[h] > self.lowpt[b])
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        let out = self.out_edges[v].clone();
        for (idx, &ei) in out.iter().enumerate() {
            let w = self.head(ei);
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
            }

            if self.lowpt[ei] < hv {
                if idx == 0 {
                    if let Some(p) = parent {
                        self.lowpt_edge[p] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, parent) {
                    return false;
                }
            }
        }
        if let Some(p) = parent {
            self.remove_back_edges(p);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, parent: Option<EdgeId>) -> bool {
        // A non-first child edge with a return edge never belongs to a root.
        let e = parent.expect("non-root vertex");
        let mut p = ConflictPair::default();

        loop {
            let mut q = self.stack.pop().expect("return edges of ei on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.reference[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }

        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }

        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.oriented[e].expect("oriented").0;
        let hu = self.height[u].expect("visited");

        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }

        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head(h) != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low.take() {
                    self.reference[low] = p.right.low;
                }
            }
            while let Some(h) = p.right.high {
                if self.head(h) != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low.take() {
                    self.reference[low] = p.left.low;
                }
            }
            self.stack.push(p);
        }

        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }
}

/// Returns `true` iff `g` admits a crossing-free drawing in the plane.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n > 2 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    let mut state = LrState::new(g);
    let mut roots = Vec::new();
    for v in 0..n {
        if state.height[v].is_none() {
            state.height[v] = Some(0);
            roots.push(v);
            state.orient(v);
        }
    }
    for v in 0..n {
        let depth = &state.nesting_depth;
        state.out_edges[v].sort_by_key(|&e| depth[e]);
    }
    roots.into_iter().all(|r| state.test(r))
}
