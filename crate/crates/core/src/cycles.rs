//! Cycles of prescribed length: exact search, constructive certificates for
//! two-vertex joins with linear forests, cycle spectra and membership in the
//! class of planar graphs missing some cycle length.

use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{arg_err, Result, SpexError};
use crate::forest::{k2_join, LinearForest, JOIN_A, JOIN_B};
use crate::graph::Graph;
use crate::planarity::is_planar;

pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Tri-state outcome of a cycle search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSearch {
    Found(Vec<usize>),
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Budget,
}

impl CycleSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CycleSearch::Found(_))
    }
}

/// `true` iff `seq` lists distinct vertices forming a cycle of length
/// `seq.len() >= 3` in `g`.
pub fn is_valid_cycle(g: &Graph, seq: &[usize]) -> bool {
    if seq.len() < 3 || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    seq.iter()
        .zip(seq.iter().cycle().skip(1))
        .all(|(&u, &v)| g.has_edge(u, v))
}

struct Search<'g> {
    g: &'g Graph,
    ell: usize,
    budget: u64,
    nodes: u64,
    start: usize,
    dist: Vec<usize>,
    path: Vec<usize>,
    on_path: Vec<bool>,
    mark: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, ell: usize, budget: u64) -> Self {
        let n = g.n();
        Search {
            g,
            ell,
            budget,
            nodes: 0,
            start: 0,
            dist: vec![usize::MAX; n],
            path: Vec::with_capacity(ell),
            on_path: vec![false; n],
            mark: vec![0; n],
            stamp: 0,
            queue: Vec::with_capacity(n),
        }
    }

    /// BFS distances from `start` using vertices `>= start`. Returns the
    /// size of the reached set.
    fn distances_from_start(&mut self) -> usize {
        self.dist.fill(usize::MAX);
        self.dist[self.start] = 0;
        self.queue.clear();
        self.queue.push(self.start);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &w in self.g.neighbors(v) {
                if w > self.start && self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push(w);
                }
            }
        }
        self.queue.len()
    }

    /// Number of unused vertices `> start` reachable from `from` without
    /// touching the current path, capped at `need`.
    fn reachable_unused(&mut self, from: usize, need: usize) -> usize {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.fill(0);
            self.stamp = 1;
        }
        self.queue.clear();
        self.queue.push(from);
        let mut head = 0;
        let mut count = 0;
        while head < self.queue.len() && count < need {
            let v = self.queue[head];
            head += 1;
            for &w in self.g.neighbors(v) {
                if w > self.start && !self.on_path[w] && self.mark[w] != self.stamp {
                    self.mark[w] = self.stamp;
                    self.queue.push(w);
                    count += 1;
                }
            }
        }
        count
    }

    fn extend(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let len = self.path.len();
        let cur = *self.path.last().expect("non-empty path");
        if len == self.ell {
            // each cycle is seen in both directions; keep one
            return if self.path[1] < cur && self.g.has_edge(cur, self.start) {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        let still_needed = self.ell - len;
        if still_needed >= 3 && self.reachable_unused(cur, still_needed) < still_needed {
            return Step::Exhausted;
        }
        for i in 0..self.g.degree(cur) {
            let w = self.g.neighbors(cur)[i];
            if w <= self.start || self.on_path[w] || self.dist[w] > still_needed {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            match self.extend() {
                Step::Exhausted => {}
                other => return other,
            }
            self.on_path[w] = false;
            self.path.pop();
        }
        Step::Exhausted
    }

    fn run(mut self) -> CycleSearch {
        for s in 0..self.g.n() {
            if self.g.degree(s) < 2 || self.g.n() - s < self.ell {
                continue;
            }
            self.start = s;
            if self.distances_from_start() < self.ell {
                continue;
            }
            self.path.clear();
            self.path.push(s);
            self.on_path[s] = true;
            let step = self.extend();
            self.on_path[s] = false;
            match step {
                Step::Found => return CycleSearch::Found(self.path),
                Step::OutOfBudget => return CycleSearch::Budget,
                Step::Exhausted => {}
            }
        }
        CycleSearch::Absent
    }
}

/// Exact backtracking search for a cycle with exactly `ell` vertices.
///
/// Each cycle is rooted at its smallest vertex; branches are cut by BFS
/// distance back to the root and by the number of still-reachable vertices.
/// Exhausting `budget` search nodes yields [`CycleSearch::Budget`].
pub fn find_cycle(g: &Graph, ell: usize, budget: u64) -> Result<CycleSearch> {
    if ell < 3 || ell > g.n() {
        return arg_err(format!("cycle length {ell} outside 3..={}", g.n()));
    }
    let result = Search::new(g, ell, budget).run();
    if let CycleSearch::Found(seq) = &result {
        debug_assert!(is_valid_cycle(g, seq));
    }
    Ok(result)
}

/// A graph recognised as `K2 v L`: two adjacent vertices joined to every
/// other vertex, the rest inducing a linear forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinStructure {
    pub hubs: (usize, usize),
    /// Paths of the forest as vertex sequences, longest first.
    pub paths: Vec<Vec<usize>>,
}

impl JoinStructure {
    pub fn forest(&self) -> LinearForest {
        let parts: Vec<usize> = self.paths.iter().map(Vec::len).collect();
        LinearForest::new(&parts).expect("non-empty forest")
    }

    /// Length of the longest cycle: the two longest paths plus both hubs.
    pub fn circumference(&self) -> usize {
        2 + self.paths.iter().take(2).map(Vec::len).sum::<usize>()
    }

    /// A cycle of length `ell` through both hubs and prefixes of the two
    /// longest paths, or `None` when `ell` exceeds the circumference.
    pub fn certificate(&self, ell: usize) -> Option<Vec<usize>> {
        if ell < 3 || ell > self.circumference() {
            return None;
        }
        let (a, b) = self.hubs;
        let first = &self.paths[0];
        let mut seq = vec![a];
        if ell <= first.len() + 2 {
            seq.extend_from_slice(&first[..ell - 2]);
            seq.push(b);
        } else {
            seq.extend_from_slice(first);
            seq.push(b);
            seq.extend_from_slice(&self.paths[1][..ell - 2 - first.len()]);
        }
        Some(seq)
    }
}

/// Recognises `K2 v L`: two adjacent vertices of degree `n - 1` whose removal
/// leaves a linear forest. More than two such vertices only occur for
/// `n <= 5`, where each pair is tried.
pub fn recognize_join(g: &Graph) -> Option<JoinStructure> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    for (i, &a) in hubs.iter().enumerate() {
        for &b in &hubs[i + 1..] {
            if let Some(paths) = forest_paths(g, a, b) {
                return Some(JoinStructure { hubs: (a, b), paths });
            }
        }
    }
    None
}

fn forest_paths(g: &Graph, a: usize, b: usize) -> Option<Vec<Vec<usize>>> {
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
    let forest = g.induced(&rest);
    if forest.max_degree() > 2 {
        return None;
    }
    let components = forest.components();
    if forest.edge_count() + components.len() != forest.n() {
        return None;
    }
    let mut paths: Vec<Vec<usize>> = components
        .iter()
        .map(|comp| {
            let end = comp
                .iter()
                .copied()
                .find(|&v| forest.degree(v) <= 1)
                .expect("acyclic component has an end");
            let mut walk = vec![end];
            let mut prev = usize::MAX;
            let mut cur = end;
            while let Some(&next) = forest.neighbors(cur).iter().find(|&&w| w != prev) {
                walk.push(next);
                prev = cur;
                cur = next;
            }
            walk.into_iter().map(|i| rest[i]).collect()
        })
        .collect();
    paths.sort_by(|p, q| q.len().cmp(&p.len()).then(p[0].cmp(&q[0])));
    Some(paths)
}

fn layout_structure(forest: &LinearForest) -> JoinStructure {
    let mut next = 2;
    let paths = forest
        .parts()
        .iter()
        .map(|&p| {
            let block: Vec<usize> = (next..next + p).collect();
            next += p;
            block
        })
        .collect();
    JoinStructure {
        hubs: (JOIN_A, JOIN_B),
        paths,
    }
}

/// Constructive cycle of length `ell` in `K2 v L` (dominating edge present,
/// standard layout), or `None` when `ell > n1 + n2 + 2`.
pub fn join_cycle_certificate(forest: &LinearForest, ell: usize) -> Result<Option<Vec<usize>>> {
    if ell < 3 {
        return arg_err(format!("cycle length must be at least 3, got {ell}"));
    }
    let cert = layout_structure(forest).certificate(ell);
    if let Some(seq) = &cert {
        let g = k2_join(forest, true);
        if !is_valid_cycle(&g, seq) {
            return Err(SpexError::Argument(format!(
                "internal error: invalid certificate {seq:?} for {forest}"
            )));
        }
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthStatus {
    Present(Vec<usize>),
    Absent,
    Budget,
}

impl LengthStatus {
    pub fn label(&self) -> &'static str {
        match self {
            LengthStatus::Present(_) => "present",
            LengthStatus::Absent => "absent",
            LengthStatus::Budget => "budget",
        }
    }
}

impl From<CycleSearch> for LengthStatus {
    fn from(s: CycleSearch) -> Self {
        match s {
            CycleSearch::Found(c) => LengthStatus::Present(c),
            CycleSearch::Absent => LengthStatus::Absent,
            CycleSearch::Budget => LengthStatus::Budget,
        }
    }
}

/// Status of one cycle length, as reported by a spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthEntry {
    pub ell: usize,
    pub status: LengthStatus,
}

impl Serialize for LengthEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cert = match &self.status {
            LengthStatus::Present(c) => Some(c),
            _ => None,
        };
        let mut st = s.serialize_struct("LengthEntry", 2 + usize::from(cert.is_some()))?;
        st.serialize_field("ell", &self.ell)?;
        st.serialize_field("status", self.status.label())?;
        if let Some(c) = cert {
            st.serialize_field("certificate", c)?;
        }
        st.end()
    }
}

/// Per-length cycle information for lengths `3..=ell_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSpectrum {
    pub n: usize,
    pub entries: Vec<LengthEntry>,
}

impl CycleSpectrum {
    pub fn status(&self, ell: usize) -> Option<&LengthStatus> {
        self.entries.iter().find(|e| e.ell == ell).map(|e| &e.status)
    }

    /// `false` for lengths above `n` or outside the computed range.
    pub fn present(&self, ell: usize) -> bool {
        matches!(self.status(ell), Some(LengthStatus::Present(_)))
    }

    pub fn present_lengths(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| matches!(e.status, LengthStatus::Present(_)))
            .map(|e| e.ell)
            .collect()
    }

    pub fn has_budget_outcome(&self) -> bool {
        self.entries.iter().any(|e| e.status == LengthStatus::Budget)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMode {
    /// Use join certificates when the graph is recognised as `K2 v L`.
    Auto,
    /// Always run the exact search.
    SearchOnly,
}

fn length_status(g: &Graph, join: Option<&JoinStructure>, ell: usize, budget: u64) -> Result<LengthStatus> {
    match join {
        Some(j) => Ok(match j.certificate(ell) {
            Some(c) => LengthStatus::Present(c),
            None => LengthStatus::Absent,
        }),
        None => Ok(find_cycle(g, ell, budget)?.into()),
    }
}

pub fn cycle_spectrum(g: &Graph, ell_max: usize, budget: u64) -> Result<CycleSpectrum> {
    cycle_spectrum_with(g, ell_max, budget, SpectrumMode::Auto)
}

/// Cycle spectrum over `3..=ell_max`. Lengths are searched in parallel;
/// entries are always in increasing length order.
pub fn cycle_spectrum_with(g: &Graph, ell_max: usize, budget: u64, mode: SpectrumMode) -> Result<CycleSpectrum> {
    if ell_max > g.n() {
        return arg_err(format!("ell_max {ell_max} exceeds n = {}", g.n()));
    }
    let join = match mode {
        SpectrumMode::Auto => recognize_join(g),
        SpectrumMode::SearchOnly => None,
    };
    let entries = (3..=ell_max)
        .into_par_iter()
        .map(|ell| {
            length_status(g, join.as_ref(), ell, budget).map(|status| LengthEntry { ell, status })
        })
        .collect::<Result<Vec<_>>>()?;
    for e in &entries {
        if let LengthStatus::Present(c) = &e.status {
            debug_assert!(is_valid_cycle(g, c) && c.len() == e.ell);
        }
    }
    Ok(CycleSpectrum { n: g.n(), entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// Smallest length in `3..=n-k` with no cycle.
    pub witness: Option<usize>,
}

/// Whether the planar graph `g` misses some cycle length `ell` with
/// `3 <= ell <= n - k`.
pub fn in_gnk(g: &Graph, k: usize, budget: u64) -> Result<Membership> {
    let n = g.n();
    if n < 3 || k > n - 3 {
        return arg_err(format!("need 0 <= k <= n - 3 (n = {n}, k = {k})"));
    }
    if !is_planar(g) {
        return Err(SpexError::NotPlanar);
    }
    let join = recognize_join(g);
    for ell in 3..=n - k {
        match length_status(g, join.as_ref(), ell, budget)? {
            LengthStatus::Present(_) => {}
            LengthStatus::Absent => {
                return Ok(Membership {
                    member: true,
                    witness: Some(ell),
                })
            }
            LengthStatus::Budget => return Err(SpexError::BudgetExhausted { ell, budget }),
        }
    }
    Ok(Membership {
        member: false,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{extremal_graph, join_of_paths};
    use crate::graph::{complete, complete_bipartite, cycle};

    const BUDGET: u64 = DEFAULT_BUDGET;

    #[test]
    fn find_cycle_examples() {
        let c5 = cycle(5).unwrap();
        match find_cycle(&c5, 5, BUDGET).unwrap() {
            CycleSearch::Found(seq) => assert!(is_valid_cycle(&c5, &seq) && seq.len() == 5),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(find_cycle(&c5, 4, BUDGET).unwrap(), CycleSearch::Absent);

        let g = extremal_graph(8, 0).unwrap();
        assert!(find_cycle(&g, 7, BUDGET).unwrap().is_found());
        assert_eq!(find_cycle(&g, 8, BUDGET).unwrap(), CycleSearch::Absent);
    }

    #[test]
    fn find_cycle_range_and_budget() {
        let c5 = cycle(5).unwrap();
        assert!(find_cycle(&c5, 2, BUDGET).is_err());
        assert!(find_cycle(&c5, 6, BUDGET).is_err());
        let g = complete_bipartite(2, 12);
        assert_eq!(find_cycle(&g, 14, 5).unwrap(), CycleSearch::Budget);
    }

    #[test]
    fn join_certificates() {
        let f = LinearForest::new(&[2, 1]).unwrap();
        assert_eq!(join_cycle_certificate(&f, 5).unwrap(), Some(vec![0, 2, 3, 1, 4]));
        assert_eq!(join_cycle_certificate(&f, 6).unwrap(), None);
        let f = LinearForest::new(&[4, 1, 1]).unwrap();
        assert_eq!(join_cycle_certificate(&f, 3).unwrap(), Some(vec![0, 2, 1]));
        assert!(join_cycle_certificate(&f, 2).is_err());
    }

    #[test]
    fn recognition() {
        let g = extremal_graph(8, 0).unwrap();
        let j = recognize_join(&g).unwrap();
        assert_eq!(j.hubs, (0, 1));
        assert_eq!(j.forest().parts(), &[4, 1, 1]);
        assert_eq!(j.circumference(), 7);
        // no dominating edge: the hubs have degree n - 2
        assert!(recognize_join(&join_of_paths(&[4, 1, 1], false)).is_none());
        assert_eq!(recognize_join(&complete(4)).unwrap().forest().parts(), &[2]);
        assert_eq!(recognize_join(&complete(3)).unwrap().circumference(), 3);
        assert!(recognize_join(&complete(5)).is_none());
        // a relabelled copy is still recognised
        let perm = [5, 3, 7, 0, 1, 2, 4, 6];
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(8, &edges).unwrap();
        let j = recognize_join(&h).unwrap();
        assert_eq!((j.hubs.0.min(j.hubs.1), j.hubs.0.max(j.hubs.1)), (3, 5));
        assert_eq!(j.paths[0].len(), 4);
        for ell in 3..=7 {
            assert!(is_valid_cycle(&h, &j.certificate(ell).unwrap()));
        }
    }

    #[test]
    fn spectra() {
        let s = cycle_spectrum(&complete(4), 4, BUDGET).unwrap();
        assert_eq!(s.present_lengths(), vec![3, 4]);

        let g = extremal_graph(8, 0).unwrap();
        let s = cycle_spectrum(&g, 8, BUDGET).unwrap();
        assert_eq!(s.present_lengths(), vec![3, 4, 5, 6, 7]);
        assert!(!s.present(8));
        let exact = cycle_spectrum_with(&g, 8, BUDGET, SpectrumMode::SearchOnly).unwrap();
        assert_eq!(exact.present_lengths(), s.present_lengths());

        // only 4-cycles: each cycle uses both vertices of the small side
        let s = cycle_spectrum(&complete_bipartite(2, 8), 10, BUDGET).unwrap();
        assert_eq!(s.present_lengths(), vec![4]);
        assert!(cycle_spectrum(&complete(4), 5, BUDGET).is_err());
    }

    #[test]
    fn membership() {
        let g = extremal_graph(8, 0).unwrap();
        assert_eq!(
            in_gnk(&g, 0, BUDGET).unwrap(),
            Membership {
                member: true,
                witness: Some(8)
            }
        );
        let c6 = cycle(6).unwrap();
        assert_eq!(in_gnk(&c6, 0, BUDGET).unwrap().witness, Some(3));
        let pancyclic = join_of_paths(&[6], true);
        assert_eq!(
            in_gnk(&pancyclic, 0, BUDGET).unwrap(),
            Membership {
                member: false,
                witness: None
            }
        );
        assert_eq!(in_gnk(&complete(5), 0, BUDGET), Err(SpexError::NotPlanar));
        assert!(in_gnk(&c6, 4, BUDGET).is_err());
    }

    #[test]
    fn certificate_validation() {
        let c4 = cycle(4).unwrap();
        assert!(is_valid_cycle(&c4, &[0, 1, 2, 3]));
        assert!(!is_valid_cycle(&c4, &[0, 1, 2]));
        assert!(!is_valid_cycle(&c4, &[0, 1, 0, 1]));
        assert!(!is_valid_cycle(&c4, &[0, 2, 1, 3]));
    }
}
