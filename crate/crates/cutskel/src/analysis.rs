//! Exact skeleton metrics: diameter by repeated breadth-first search, clique
//! number by branch and bound, plus verifiers for colorings and cliques
//! supplied by the constructions module.

use crate::skeleton::SkeletonGraph;
use serde::Serialize;

/// Search-tree node expansions allowed by default; machine-independent,
/// unlike a wall clock.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("skeleton is disconnected; cut-polytope skeletons never are, so the input is corrupt")]
    DisconnectedSkeleton,
    #[error("coloring covers {got} vertices, skeleton has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("cut index {index} is out of range for a skeleton on {nodes} nodes")]
    UnknownIndex { index: u32, nodes: usize },
}

/// Per-node colors, each a bit-string of `width` bits stored as an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub width: usize,
    pub colors: Vec<u64>,
}

impl Coloring {
    /// Number of distinct colors actually used; at most 2^width.
    pub fn color_count(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Clique search outcome. `exact` is false when the expansion budget ran out
/// and `size` is only a lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted cut indices of the best clique found.
    pub witness: Vec<u32>,
    pub exact: bool,
}

/// Diameter, clique number and the skeleton sizes, with the pinned JSON
/// export shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub node_count: usize,
    pub edge_count: u64,
    pub diameter: u32,
    pub clique: CliqueResult,
}

impl Metrics {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "diameter": self.diameter,
            "clique_number": self.clique.size,
            "clique_exact": self.clique.exact,
            "witness_clique": self.clique.witness,
        })
    }
}

/// Dense bit rows for the skeleton; BFS merges whole rows, which is what
/// makes sweeps over near-complete skeletons (complete multipartite sources)
/// affordable.
struct BitRows {
    words: usize,
    rows: Vec<u64>,
}

impl BitRows {
    fn new(s: &SkeletonGraph) -> BitRows {
        let n = s.node_count();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for a in 0..n {
            let base = a * words;
            for &b in s.neighbors(a as u32) {
                rows[base + (b as usize >> 6)] |= 1 << (b & 63);
            }
        }
        BitRows { words, rows }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

/// Eccentricity of `source`, or None if BFS does not reach every node.
fn eccentricity(bits: &BitRows, n: usize, source: usize) -> Option<u32> {
    let words = bits.words;
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    visited[source >> 6] |= 1 << (source & 63);
    frontier[source >> 6] |= 1 << (source & 63);
    let mut reached = 1usize;
    let mut depth = 0u32;
    while reached < n {
        next.iter_mut().for_each(|w| *w = 0);
        for (wi, &fw) in frontier.iter().enumerate() {
            let mut f = fw;
            while f != 0 {
                let v = (wi << 6) + f.trailing_zeros() as usize;
                f &= f - 1;
                let row = bits.row(v);
                for (nw, &rw) in next.iter_mut().zip(row) {
                    *nw |= rw;
                }
            }
        }
        let mut grew = false;
        for wi in 0..words {
            let fresh = next[wi] & !visited[wi];
            next[wi] = fresh;
            visited[wi] |= fresh;
            if fresh != 0 {
                grew = true;
                reached += fresh.count_ones() as usize;
            }
        }
        if !grew {
            return None;
        }
        std::mem::swap(&mut frontier, &mut next);
        depth += 1;
    }
    Some(depth)
}

/// Exact diameter: maximum eccentricity over all sources, sources split
/// across `workers` threads.
pub fn diameter_with_workers(s: &SkeletonGraph, workers: usize) -> Result<u32, AnalysisError> {
    let n = s.node_count();
    if n <= 1 {
        return Ok(0);
    }
    let bits = BitRows::new(s);
    let workers = workers.clamp(1, n);
    let chunk = n.div_ceil(workers);
    let results: Vec<Option<u32>> = std::thread::scope(|scope| {
        let bits = &bits;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut best = Some(0u32);
                    for source in w * chunk..((w + 1) * chunk).min(n) {
                        match eccentricity(bits, n, source) {
                            Some(e) => best = best.map(|b| b.max(e)),
                            None => return None,
                        }
                    }
                    best
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut diameter = 0;
    for r in results {
        match r {
            Some(e) => diameter = diameter.max(e),
            None => return Err(AnalysisError::DisconnectedSkeleton),
        }
    }
    Ok(diameter)
}

pub fn diameter(s: &SkeletonGraph) -> Result<u32, AnalysisError> {
    diameter_with_workers(s, default_workers())
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(8)
}

/// Candidate set operations for the clique search.
#[derive(Clone)]
struct NodeSet {
    words: Vec<u64>,
}

impl NodeSet {
    fn full(n: usize) -> NodeSet {
        let mut words = vec![u64::MAX; n.div_ceil(64).max(1)];
        let spare = words.len() * 64 - n;
        if spare > 0 {
            *words.last_mut().unwrap() >>= spare;
        }
        NodeSet { words }
    }

    fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1 << (v & 63));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersect_row(&self, row: &[u64]) -> NodeSet {
        NodeSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & b).collect(),
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            std::iter::successors(Some(w), |&w| Some(w & w.wrapping_sub(1)))
                .take_while(|&w| w != 0)
                .map(move |w| (wi << 6) + w.trailing_zeros() as usize)
        })
    }
}

struct CliqueSearch<'a> {
    bits: &'a BitRows,
    budget: u64,
    expanded: u64,
    exhausted: bool,
    best: Vec<u32>,
    current: Vec<u32>,
}

impl CliqueSearch<'_> {
    /// Greedy coloring of `p`; returns candidates paired with color numbers,
    /// colors ascending, so the tail has the strongest bounds.
    fn color_order(&self, p: &NodeSet) -> Vec<(usize, u32)> {
        let mut order: Vec<(usize, u32)> = Vec::new();
        let mut uncolored = p.clone();
        let mut color = 0u32;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while !class.is_empty() {
                let v = class.iter().next().unwrap();
                class.remove(v);
                uncolored.remove(v);
                order.push((v, color));
                // Drop v's neighbors from the class so it stays independent.
                for (cw, &rw) in class.words.iter_mut().zip(self.bits.row(v)) {
                    *cw &= !rw;
                }
            }
        }
        order
    }

    fn record(&mut self) {
        let mut clique = self.current.clone();
        clique.sort_unstable();
        if clique.len() > self.best.len() || (clique.len() == self.best.len() && clique < self.best)
        {
            self.best = clique;
        }
    }

    fn expand(&mut self, p: &NodeSet) {
        self.expanded += 1;
        if self.expanded > self.budget {
            self.exhausted = true;
            return;
        }
        let order = self.color_order(p);
        let mut p = p.clone();
        // Reverse color order: once size + color ≤ best, every earlier
        // candidate is bounded too.
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color as usize <= self.best.len() {
                return;
            }
            self.current.push(v as u32);
            let next = p.intersect_row(self.bits.row(v));
            if next.is_empty() {
                self.record();
            } else {
                self.expand(&next);
            }
            self.current.pop();
            if self.exhausted {
                return;
            }
            p.remove(v);
        }
    }
}

/// Greedy seed clique along a degeneracy order, so the branch and bound
/// starts with a realistic incumbent.
fn greedy_seed(bits: &BitRows, n: usize) -> Vec<u32> {
    // Peel minimum-degree vertices with a bucket queue.
    let mut degree: Vec<u32> = (0..n)
        .map(|v| bits.row(v).iter().map(|w| w.count_ones()).sum())
        .collect();
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); n];
    for v in 0..n {
        buckets[degree[v] as usize].push(v as u32);
    }
    let mut removed = vec![false; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut floor = 0usize;
    while order.len() < n {
        while floor < buckets.len() && buckets[floor].is_empty() {
            floor += 1;
        }
        if floor >= buckets.len() {
            break;
        }
        let v = buckets[floor].pop().unwrap() as usize;
        if removed[v] || degree[v] as usize != floor {
            // Stale entry; the vertex was re-filed at a lower degree.
            continue;
        }
        removed[v] = true;
        order.push(v as u32);
        for wi in 0..bits.words {
            let mut w = bits.row(v)[wi];
            while w != 0 {
                let u = (wi << 6) + w.trailing_zeros() as usize;
                w &= w - 1;
                if !removed[u] {
                    degree[u] -= 1;
                    buckets[degree[u] as usize].push(u as u32);
                    if (degree[u] as usize) < floor {
                        floor = degree[u] as usize;
                    }
                }
            }
        }
    }
    // Later vertices in a degeneracy order have dense back-neighborhoods;
    // grow the clique from that end.
    let mut clique: Vec<u32> = Vec::new();
    for &v in order.iter().rev() {
        if clique
            .iter()
            .all(|&u| bits.row(v as usize)[u as usize >> 6] >> (u & 63) & 1 != 0)
        {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// Maximum clique by branch and bound with greedy-coloring bounds. Within
/// budget the result is exact; otherwise it is the best clique seen,
/// flagged. Single-threaded and deterministic: among visited cliques of the
/// winning size, the lexicographically smallest witness is kept.
pub fn clique_number(s: &SkeletonGraph, budget: u64) -> CliqueResult {
    let n = s.node_count();
    if n == 0 {
        return CliqueResult {
            size: 0,
            witness: Vec::new(),
            exact: true,
        };
    }
    let bits = BitRows::new(s);
    let seed = greedy_seed(&bits, n);
    let mut search = CliqueSearch {
        bits: &bits,
        budget,
        expanded: 0,
        exhausted: false,
        best: seed,
        current: Vec::new(),
    };
    search.expand(&NodeSet::full(n));
    CliqueResult {
        size: search.best.len(),
        witness: search.best,
        exact: !search.exhausted,
    }
}

/// Checks a coloring against every skeleton edge. Ok(None) means proper;
/// Ok(Some((a, b))) is the first equal-colored edge in node order.
pub fn verify_coloring(
    s: &SkeletonGraph,
    col: &Coloring,
) -> Result<Option<(u32, u32)>, AnalysisError> {
    if col.colors.len() != s.node_count() {
        return Err(AnalysisError::SizeMismatch {
            expected: s.node_count(),
            got: col.colors.len(),
        });
    }
    for (a, b) in s.edge_iter() {
        if col.colors[a as usize] == col.colors[b as usize] {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// Checks that the given cut indices are pairwise adjacent. Ok(None) means
/// they form a clique; Ok(Some(pair)) is the first non-edge.
pub fn verify_clique(
    s: &SkeletonGraph,
    members: &[u32],
) -> Result<Option<(u32, u32)>, AnalysisError> {
    for &m in members {
        if m as usize >= s.node_count() {
            return Err(AnalysisError::UnknownIndex {
                index: m,
                nodes: s.node_count(),
            });
        }
    }
    for (p, &a) in members.iter().enumerate() {
        for &b in &members[p + 1..] {
            if !s.is_edge(a, b) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Bundles diameter and clique search over one skeleton.
pub fn metrics(s: &SkeletonGraph, budget: u64, workers: usize) -> Result<Metrics, AnalysisError> {
    Ok(Metrics {
        node_count: s.node_count(),
        edge_count: s.edge_count(),
        diameter: diameter_with_workers(s, workers)?,
        clique: clique_number(s, budget),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::skeleton::build_skeleton;

    fn skel(n: usize, edges: &[(u32, u32)]) -> SkeletonGraph {
        build_skeleton(&Graph::new(n, edges).unwrap(), 16).unwrap()
    }

    fn k(n: usize) -> Vec<(u32, u32)> {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        edges
    }

    fn path(n: usize) -> Vec<(u32, u32)> {
        (0..n as u32 - 1).map(|i| (i, i + 1)).collect()
    }

    fn cycle(n: usize) -> Vec<(u32, u32)> {
        (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect()
    }

    /// Exhaustive subset scan; only usable for tiny skeletons.
    fn clique_oracle(s: &SkeletonGraph) -> usize {
        let n = s.node_count();
        assert!(n <= 20);
        let mut best = 0;
        for subset in 0u32..1 << n {
            let size = subset.count_ones() as usize;
            if size <= best {
                continue;
            }
            let mut ok = true;
            'pairs: for a in 0..n as u32 {
                if subset >> a & 1 == 0 {
                    continue;
                }
                for b in a + 1..n as u32 {
                    if subset >> b & 1 != 0 && !s.is_edge(a, b) {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            if ok {
                best = size;
            }
        }
        best
    }

    #[test]
    fn diameter_of_complete_graph_skeleton_is_one() {
        for n in 3..=5 {
            assert_eq!(diameter(&skel(n, &k(n))).unwrap(), 1);
        }
    }

    #[test]
    fn diameter_of_tree_skeleton_is_vertex_count_minus_one() {
        for n in 2..=7 {
            assert_eq!(diameter(&skel(n, &path(n))).unwrap(), n as u32 - 1);
        }
    }

    #[test]
    fn diameter_of_four_cycle_skeleton_is_two() {
        assert_eq!(diameter(&skel(4, &cycle(4))).unwrap(), 2);
    }

    #[test]
    fn diameter_is_stable_across_worker_counts() {
        let s = skel(6, &cycle(6));
        let reference = diameter_with_workers(&s, 1).unwrap();
        for workers in [2, 5, 32] {
            assert_eq!(diameter_with_workers(&s, workers).unwrap(), reference);
        }
    }

    #[test]
    fn disconnected_input_is_reported() {
        // A legal file, but with all adjacency stripped: two isolated nodes.
        let s = SkeletonGraph::from_json("{\"n\":2,\"cuts\":[0,2],\"adj\":[[],[]]}").unwrap();
        assert_eq!(diameter(&s), Err(AnalysisError::DisconnectedSkeleton));
    }

    #[test]
    fn triangle_skeleton_clique_is_all_four_cuts() {
        let result = clique_number(&skel(3, &k(3)), DEFAULT_CLIQUE_BUDGET);
        assert_eq!(result.size, 4);
        assert_eq!(result.witness, vec![0, 1, 2, 3]);
        assert!(result.exact);
    }

    #[test]
    fn tree_skeleton_clique_is_two() {
        for n in 2..=6 {
            let result = clique_number(&skel(n, &path(n)), DEFAULT_CLIQUE_BUDGET);
            assert_eq!(result.size, 2);
            assert!(result.exact);
        }
    }

    #[test]
    fn clique_matches_exhaustive_oracle_on_small_skeletons() {
        let cases: Vec<SkeletonGraph> = vec![
            skel(4, &k(4)),
            skel(5, &path(5)),
            skel(5, &cycle(5)),
            skel(4, &cycle(4)),
            skel(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)]),
        ];
        for s in &cases {
            let result = clique_number(s, DEFAULT_CLIQUE_BUDGET);
            assert!(result.exact);
            assert_eq!(result.size, clique_oracle(s), "{s:?}");
            assert_eq!(verify_clique(s, &result.witness).unwrap(), None);
        }
    }

    #[test]
    fn exhausted_budget_is_flagged_and_still_a_clique() {
        let s = skel(5, &cycle(5));
        // Zero expansions allowed: the search bails instantly and falls back
        // to the greedy seed, flagged as a lower bound.
        let result = clique_number(&s, 0);
        assert!(!result.exact);
        assert!(result.size >= 2);
        assert_eq!(verify_clique(&s, &result.witness).unwrap(), None);
    }

    #[test]
    fn constant_coloring_fails_on_first_edge() {
        let s = skel(3, &k(3));
        let col = Coloring {
            width: 1,
            colors: vec![0; 4],
        };
        assert_eq!(verify_coloring(&s, &col).unwrap(), Some((0, 1)));
    }

    #[test]
    fn identity_coloring_is_always_proper() {
        for s in [skel(4, &k(4)), skel(5, &cycle(5))] {
            let col = Coloring {
                width: s.graph_n() - 1,
                colors: (0..s.node_count() as u64).collect(),
            };
            assert_eq!(verify_coloring(&s, &col).unwrap(), None);
            assert_eq!(col.color_count(), s.node_count());
        }
    }

    #[test]
    fn coloring_size_mismatch_is_an_error() {
        let s = skel(3, &k(3));
        let col = Coloring {
            width: 1,
            colors: vec![0; 3],
        };
        assert_eq!(
            verify_coloring(&s, &col),
            Err(AnalysisError::SizeMismatch {
                expected: 4,
                got: 3
            })
        );
    }

    #[test]
    fn clique_verifier_reports_first_non_edge() {
        let s = skel(6, &cycle(6));
        // Adjacency in a cycle skeleton is Hamming distance two; indices 0
        // and 1 differ in one cut edge... check against the ground truth.
        let mut non_edge = None;
        'outer: for a in 0..s.node_count() as u32 {
            for b in a + 1..s.node_count() as u32 {
                if !s.is_edge(a, b) {
                    non_edge = Some((a, b));
                    break 'outer;
                }
            }
        }
        let (a, b) = non_edge.expect("cycle skeletons are not complete for n >= 5");
        assert_eq!(verify_clique(&s, &[a, b]).unwrap(), Some((a, b)));
        assert_eq!(verify_clique(&s, &[a]).unwrap(), None);
        assert_eq!(
            verify_clique(&s, &[0, 999]),
            Err(AnalysisError::UnknownIndex {
                index: 999,
                nodes: 32
            })
        );
    }

    #[test]
    fn single_vertex_skeleton_metrics() {
        let s = skel(1, &[]);
        let m = metrics(&s, DEFAULT_CLIQUE_BUDGET, 2).unwrap();
        assert_eq!(m.diameter, 0);
        assert_eq!(m.clique.size, 1);
        assert!(m.clique.exact);
        assert_eq!(m.node_count, 1);
    }

    #[test]
    fn metrics_export_shape_is_pinned() {
        let s = skel(3, &k(3));
        let m = metrics(&s, DEFAULT_CLIQUE_BUDGET, 1).unwrap();
        let v = m.to_json_value();
        assert_eq!(v["diameter"], 1);
        assert_eq!(v["clique_number"], 4);
        assert_eq!(v["clique_exact"], true);
        assert_eq!(v["witness_clique"], serde_json::json!([0, 1, 2, 3]));
        assert_eq!(v.as_object().unwrap().len(), 4);
    }
}
