//! The 1-skeleton of the cut polytope of a connected graph.
//!
//! Two cuts are adjacent exactly when deleting δ(X△Y) leaves two connected
//! components. Everything here flows from that test: `is_adjacent` runs it
//! once, `certify_adjacent` extracts a maximizing objective from the two
//! components, `witness_nonadjacent` extracts a midpoint decomposition from a
//! third component, and `build_skeleton` runs it per symmetric-difference
//! class (adjacency of (X, Y) depends only on X△Y, so one component count per
//! class decides every pair at once).

use crate::graph::{Cut, CutVector, Graph};
use serde::Serialize;

/// Largest graph `build_skeleton` accepts unless overridden.
pub const DEFAULT_SKELETON_CAP: usize = 16;
/// Largest graph whose certificates are verified by a full cut scan.
pub const DEFAULT_VERIFY_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeletonError {
    #[error("the two cuts are equal")]
    EqualCuts,
    #[error("cuts are not adjacent: deleting the symmetric difference cut leaves {components} components")]
    NotAdjacent { components: usize },
    #[error("cuts are adjacent, no non-adjacency witness exists")]
    ActuallyAdjacent,
    #[error("graph has {n} vertices, over the cap {cap}")]
    LimitExceeded { n: usize, cap: usize },
    #[error("not a spanning subgraph: {reason}")]
    NotSubgraph { reason: String },
    #[error("certificate failed its own maximizer scan; this is a bug")]
    CertificateCheckFailed,
    #[error("invalid skeleton file: {0}")]
    InvalidSkeletonFile(String),
}

/// Adjacency structure over all canonical cuts of a graph, nodes indexed by
/// cut index (bitmask order).
#[derive(Clone, PartialEq, Eq)]
pub struct SkeletonGraph {
    graph_n: usize,
    adj: Vec<Vec<u32>>,
}

impl SkeletonGraph {
    /// Vertex count of the underlying graph.
    pub fn graph_n(&self) -> usize {
        self.graph_n
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn cut(&self, node: u32) -> Cut {
        Cut::from_index(node as u64)
    }

    /// Canonical cut masks in node order, the `cuts` field of the JSON form.
    pub fn cut_masks(&self) -> Vec<u64> {
        (0..self.adj.len() as u64).map(|k| k << 1).collect()
    }

    pub fn neighbors(&self, node: u32) -> &[u32] {
        &self.adj[node as usize]
    }

    pub fn degree(&self, node: u32) -> usize {
        self.adj[node as usize].len()
    }

    pub fn is_edge(&self, a: u32, b: u32) -> bool {
        a != b && self.adj[a as usize].binary_search(&b).is_ok()
    }

    pub fn edge_count(&self) -> u64 {
        self.adj.iter().map(|row| row.len() as u64).sum::<u64>() / 2
    }

    /// Skeleton edges as (a, b) with a < b, ascending.
    pub fn edge_iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, row)| {
            let a = a as u32;
            row.iter()
                .copied()
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
        })
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            n: usize,
            cuts: Vec<u64>,
            adj: &'a [Vec<u32>],
        }
        serde_json::to_string(&Export {
            n: self.graph_n,
            cuts: self.cut_masks(),
            adj: &self.adj,
        })
        .expect("skeleton export cannot fail")
    }

    /// Reads the `to_json` form back, validating shape and symmetry.
    pub fn from_json(text: &str) -> Result<SkeletonGraph, SkeletonError> {
        #[derive(serde::Deserialize)]
        struct Import {
            n: usize,
            cuts: Vec<u64>,
            adj: Vec<Vec<u32>>,
        }
        let bad = |reason: &str| SkeletonError::InvalidSkeletonFile(reason.to_string());
        let raw: Import = serde_json::from_str(text)
            .map_err(|e| SkeletonError::InvalidSkeletonFile(e.to_string()))?;
        if raw.n == 0 || raw.n > crate::graph::MAX_VERTICES {
            return Err(bad("vertex count out of range"));
        }
        let nodes = 1usize << (raw.n - 1);
        if raw.adj.len() != nodes {
            return Err(bad("adjacency table length is not 2^(n-1)"));
        }
        if raw.cuts != (0..nodes as u64).map(|k| k << 1).collect::<Vec<_>>() {
            return Err(bad("cut masks are not the canonical enumeration"));
        }
        for (i, row) in raw.adj.iter().enumerate() {
            let mut prev = None;
            for &j in row {
                if j as usize >= nodes || j as usize == i {
                    return Err(bad("adjacency entry out of range"));
                }
                if prev.is_some_and(|p| p >= j) {
                    return Err(bad("adjacency rows must be sorted and duplicate-free"));
                }
                prev = Some(j);
                if raw.adj[j as usize].binary_search(&(i as u32)).is_err() {
                    return Err(bad("adjacency table is not symmetric"));
                }
            }
        }
        Ok(SkeletonGraph {
            graph_n: raw.n,
            adj: raw.adj,
        })
    }
}

impl std::fmt::Debug for SkeletonGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SkeletonGraph(nodes={}, edges={})",
            self.node_count(),
            self.edge_count()
        )
    }
}

/// Adjacency test: exactly two components after deleting δ(X△Y).
pub fn is_adjacent(g: &Graph, x: Cut, y: Cut) -> Result<bool, SkeletonError> {
    if x == y {
        return Err(SkeletonError::EqualCuts);
    }
    Ok(g.components_excluding_cut(x.sym_diff(y).mask()) == 2)
}

/// Objective vector with exactly {v(X), v(Y)} as its maximizers over all cut
/// vectors: +1 on spanning-tree edges cut by both X and Y, −1 on the other
/// spanning-tree edges, 0 elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjacencyCertificate {
    /// Coefficients in edge order, each −1, 0, or +1.
    pub coeffs: Vec<i8>,
    pub x: Cut,
    pub y: Cut,
    /// True when the full cut scan confirmed the maximizer set; false when
    /// the graph was over `verify_cap` and the certificate is construction-
    /// only.
    pub verified: bool,
}

impl AdjacencyCertificate {
    pub fn maximizer_indices(&self) -> [u64; 2] {
        [self.x.index(), self.y.index()]
    }
}

/// Builds the certificate for an adjacent pair. Spanning trees are grown by
/// breadth-first search from the smallest vertex of each component, so the
/// output is deterministic. Verified by scanning all 2^(n−1) cuts when
/// n ≤ `verify_cap`.
pub fn certify_adjacent(
    g: &Graph,
    x: Cut,
    y: Cut,
    verify_cap: usize,
) -> Result<AdjacencyCertificate, SkeletonError> {
    if x == y {
        return Err(SkeletonError::EqualCuts);
    }
    let n = g.n();
    let d_mask = x.sym_diff(y).mask();
    let x_mask = x.mask();

    // Adjacency of H = (V, E ∖ δ(X△Y)), neighbor lists ascending.
    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if (d_mask >> u ^ d_mask >> v) & 1 == 0 {
            adj[u as usize].push((v, i as u32));
            adj[v as usize].push((u, i as u32));
        }
    }

    let mut coeffs = vec![0i8; g.m()];
    let mut seen = 0u64;
    let mut component_count = 0usize;
    let mut queue: Vec<u32> = Vec::new();
    for root in 0..n as u32 {
        if seen >> root & 1 != 0 {
            continue;
        }
        component_count += 1;
        seen |= 1 << root;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &(w, eid) in &adj[u as usize] {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    queue.push(w);
                    // Tree edge. It avoids δ(X△Y), so X and Y either both
                    // cut it or both spare it.
                    let (a, b) = g.edges()[eid as usize];
                    let crossed = (x_mask >> a ^ x_mask >> b) & 1 != 0;
                    coeffs[eid as usize] = if crossed { 1 } else { -1 };
                }
            }
        }
    }
    if component_count != 2 {
        return Err(SkeletonError::NotAdjacent {
            components: component_count,
        });
    }

    let verified = if n <= verify_cap {
        scan_confirms_maximizers(g, &coeffs, x, y)?;
        true
    } else {
        false
    };

    Ok(AdjacencyCertificate {
        coeffs,
        x,
        y,
        verified,
    })
}

fn scan_confirms_maximizers(g: &Graph, coeffs: &[i8], x: Cut, y: Cut) -> Result<(), SkeletonError> {
    let live: Vec<(u32, u32, i64)> = g
        .edges()
        .iter()
        .zip(coeffs)
        .filter(|(_, &c)| c != 0)
        .map(|(&(u, v), &c)| (u, v, c as i64))
        .collect();
    let mut best = i64::MIN;
    let mut maximizers: Vec<u64> = Vec::new();
    for k in 0..g.cut_count() {
        let mask = k << 1;
        let mut value = 0i64;
        for &(u, v, c) in &live {
            value += c * ((mask >> u ^ mask >> v) & 1) as i64;
        }
        if value > best {
            best = value;
            maximizers.clear();
        }
        if value == best {
            maximizers.push(k);
        }
    }
    let mut expected = [x.index(), y.index()];
    expected.sort_unstable();
    if maximizers == expected {
        Ok(())
    } else {
        Err(SkeletonError::CertificateCheckFailed)
    }
}

/// Proof that v(X) and v(Y) are not adjacent: a component L of H with
/// ∅ ≠ δ(L) ⊊ δ(X△Y), giving v(X△L) + v(Y△L) = v(X) + v(Y), a strictly
/// interior midpoint of the segment between the two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonAdjacencyWitness {
    /// Canonical cut of the separating component L.
    pub separator: Cut,
    pub vx: CutVector,
    pub vy: CutVector,
    /// v(X△L) and v(Y△L); summed entrywise they equal vx + vy.
    pub vx_sep: CutVector,
    pub vy_sep: CutVector,
}

/// Finds the first (by smallest vertex) component of H whose cut is a proper
/// nonempty part of δ(X△Y).
pub fn witness_nonadjacent(
    g: &Graph,
    x: Cut,
    y: Cut,
) -> Result<NonAdjacencyWitness, SkeletonError> {
    if x == y {
        return Err(SkeletonError::EqualCuts);
    }
    let d = x.sym_diff(y);
    let d_vec = g.cut_set(d);
    let components = g.components(&d_vec);
    if components.len() == 2 {
        return Err(SkeletonError::ActuallyAdjacent);
    }
    debug_assert!(components.len() > 2, "x != y always separates H");

    for &component in &components {
        let l = Cut::from_mask(component, g.n());
        let l_vec = g.cut_set(l);
        if !l_vec.is_zero() && l_vec != d_vec && l_vec.is_subset_of(&d_vec) {
            let vx = g.cut_set(x);
            let vy = g.cut_set(y);
            let vx_sep = g.cut_set(x.sym_diff(l));
            let vy_sep = g.cut_set(y.sym_diff(l));
            debug_assert!((0..g.m()).all(|e| {
                vx.get(e) as u8 + vy.get(e) as u8 == vx_sep.get(e) as u8 + vy_sep.get(e) as u8
            }));
            return Ok(NonAdjacencyWitness {
                separator: l,
                vx,
                vy,
                vx_sep,
                vy_sep,
            });
        }
    }
    unreachable!("with 3+ components some component cuts a proper nonempty part of δ(X△Y)")
}

/// One adjacency bit per symmetric-difference class. Class d (as a cut
/// index) is adjacent when deleting δ(d) leaves exactly two components; the
/// class range is split across `workers` threads and the result does not
/// depend on the split.
fn adjacency_classes(g: &Graph, workers: usize) -> Vec<bool> {
    let total = g.cut_count() as usize;
    let mut out = vec![false; total];
    if total <= 1 {
        return out;
    }
    let workers = workers.clamp(1, total);
    let chunk = total.div_ceil(workers);
    std::thread::scope(|scope| {
        for (w, slice) in out.chunks_mut(chunk).enumerate() {
            let start = w * chunk;
            scope.spawn(move || {
                for (i, flag) in slice.iter_mut().enumerate() {
                    let d = start + i;
                    if d > 0 {
                        *flag = g.components_excluding_cut((d as u64) << 1) == 2;
                    }
                }
            });
        }
    });
    out
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(8)
}

/// Builds the full skeleton. Nodes are the 2^(n−1) canonical cuts in bitmask
/// order; adjacency lists are sorted. Output is identical for every worker
/// count.
pub fn build_skeleton(g: &Graph, cap: usize) -> Result<SkeletonGraph, SkeletonError> {
    build_skeleton_with_workers(g, cap, default_workers())
}

pub fn build_skeleton_with_workers(
    g: &Graph,
    cap: usize,
    workers: usize,
) -> Result<SkeletonGraph, SkeletonError> {
    if g.n() > cap {
        return Err(SkeletonError::LimitExceeded { n: g.n(), cap });
    }
    let classes = adjacency_classes(g, workers);
    let adjacent_ids: Vec<u32> = classes
        .iter()
        .enumerate()
        .filter_map(|(d, &adj)| adj.then_some(d as u32))
        .collect();
    let nodes = classes.len();
    let adj: Vec<Vec<u32>> = (0..nodes as u32)
        .map(|i| {
            let mut row: Vec<u32> = adjacent_ids.iter().map(|&d| i ^ d).collect();
            row.sort_unstable();
            row
        })
        .collect();
    Ok(SkeletonGraph {
        graph_n: g.n(),
        adj,
    })
}

/// Outcome of sampling cut pairs to confirm that adjacency in a connected
/// spanning subgraph implies adjacency in the host graph.
#[derive(Clone, Debug, Serialize)]
pub struct InheritanceReport {
    pub pairs_checked: u64,
    pub adjacent_in_sub: u64,
    /// First pair adjacent in the subgraph but not in the host; always
    /// expected to be absent.
    pub violation: Option<(Cut, Cut)>,
    pub exhaustive: bool,
}

/// Largest class table the exhaustive path will allocate.
const EXHAUSTIVE_CLASS_LIMIT: u64 = 1 << 21;

/// Samples (or exhausts, when `samples` covers every pair and the class
/// table fits in memory) pairs of cuts, asserting adjacency inheritance from
/// `sub` to `g`.
pub fn check_inheritance(
    g: &Graph,
    sub: &Graph,
    samples: u64,
    seed: u64,
) -> Result<InheritanceReport, SkeletonError> {
    if sub.n() != g.n() {
        return Err(SkeletonError::NotSubgraph {
            reason: format!("{} vertices vs {}", sub.n(), g.n()),
        });
    }
    for &(u, v) in sub.edges() {
        if g.edge_index(u, v).is_none() {
            return Err(SkeletonError::NotSubgraph {
                reason: format!("edge ({u}, {v}) is not in the host graph"),
            });
        }
    }

    let node_count = g.cut_count();
    let total_pairs = (node_count as u128) * (node_count as u128 - 1) / 2;

    if total_pairs <= samples as u128 && node_count <= EXHAUSTIVE_CLASS_LIMIT {
        // Adjacency depends only on the difference class, so one pass over
        // classes decides every pair.
        let mut adjacent_in_sub = 0u64;
        let mut violation = None;
        for d in 1..node_count {
            let mask = d << 1;
            if sub.components_excluding_cut(mask) == 2 {
                adjacent_in_sub += node_count / 2;
                if violation.is_none() && g.components_excluding_cut(mask) != 2 {
                    violation = Some((Cut::EMPTY, Cut::from_index(d)));
                }
            }
        }
        return Ok(InheritanceReport {
            pairs_checked: total_pairs as u64,
            adjacent_in_sub,
            violation,
            exhaustive: true,
        });
    }

    let mut rng = crate::workbench::SplitMix64::new(seed);
    let mut adjacent_in_sub = 0u64;
    let mut violation = None;
    for _ in 0..samples {
        let a = rng.below(node_count);
        let mut b = rng.below(node_count);
        while b == a {
            b = rng.below(node_count);
        }
        let (x, y) = (Cut::from_index(a), Cut::from_index(b));
        let mask = x.sym_diff(y).mask();
        if sub.components_excluding_cut(mask) == 2 {
            adjacent_in_sub += 1;
            if violation.is_none() && g.components_excluding_cut(mask) != 2 {
                violation = Some((x, y));
            }
        }
    }
    Ok(InheritanceReport {
        pairs_checked: samples,
        adjacent_in_sub,
        violation,
        exhaustive: false,
    })
}

/// Component masks of H for a difference class; used by the witness path and
/// handy for callers inspecting near-adjacency structure.
pub fn h_components(g: &Graph, x: Cut, y: Cut) -> Vec<u64> {
    let d_vec = g.cut_set(x.sym_diff(y));
    g.components(&d_vec)
}
