//! Instance supply and end-to-end checks: seeded generators for every
//! structured class, an exhaustive max-cut reference solver, and the report
//! that confronts each class's bounds with exact skeleton metrics.

use crate::analysis::{self, AnalysisError};
use crate::constructions::{self, BoundsRow, CliqueFamily, ConstructionError};
use crate::graph::{Cut, Graph, GraphError, MAX_VERTICES};
use crate::skeleton::{self, SkeletonError};
use serde::Serialize;
use std::collections::BTreeSet;

/// Vertex limit for the exhaustive max-cut scan unless overridden.
pub const DEFAULT_MAXCUT_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WorkbenchError {
    #[error("bad generator spec: {reason}")]
    BadSpec { reason: String },
    #[error("graph has {n} vertices, over the cap {cap}")]
    LimitExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// splitmix64: one 64-bit word of state, the golden-gamma increment
/// 0x9E3779B97F4A7C15 and the Stafford mix constants 0xBF58476D1CE4E5B9,
/// 0x94D049BB133111EB. Chosen because the whole algorithm fits in a dozen
/// lines that any other implementation can reproduce exactly.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw in [0, n); the modulo bias is irrelevant at the
    /// ranges used here and keeps the sequence trivially reproducible.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }
}

/// Everything needed to rebuild a graph deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Tree { n: usize, seed: u64 },
    Cactus { n: usize, seed: u64 },
    AlmostTree2 { n: usize, seed: u64 },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { parts: [usize; 2] },
    CompleteMultipartite { parts: Vec<usize> },
}

fn bad(reason: impl Into<String>) -> WorkbenchError {
    WorkbenchError::BadSpec {
        reason: reason.into(),
    }
}

fn check_n(n: usize) -> Result<(), WorkbenchError> {
    if n == 0 {
        return Err(bad("vertex count must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(bad(format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    Ok(())
}

/// Random tree by decoding a uniform Prüfer sequence; the n ≤ 64 scale makes
/// the quadratic leaf scan a non-issue.
fn random_tree(n: usize, rng: &mut SplitMix64) -> Vec<(u32, u32)> {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<u32> = (0..n - 2).map(|_| rng.below(n as u64) as u32).collect();
    let mut degree = vec![1u32; n];
    for &s in &seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n as u32).find(|&v| degree[v as usize] == 1).unwrap();
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf as usize] = 0;
        degree[s as usize] -= 1;
    }
    let mut last = (0..n as u32).filter(|&v| degree[v as usize] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a.min(b), a.max(b)));
    edges
}

/// Unique tree path between two vertices, as the vertex sequence.
fn tree_path(adj: &[Vec<u32>], from: u32, to: u32) -> Vec<u32> {
    let mut parent = vec![u32::MAX; adj.len()];
    let mut queue = vec![from];
    parent[from as usize] = from;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in &adj[v as usize] {
            if parent[w as usize] == u32::MAX {
                parent[w as usize] = v;
                queue.push(w);
            }
        }
    }
    let mut path = vec![to];
    let mut at = to;
    while at != from {
        at = parent[at as usize];
        path.push(at);
    }
    path.reverse();
    path
}

struct CactusDraft {
    edges: BTreeSet<(u32, u32)>,
    /// Vertex rings of the cycles created so far, for the almost-tree pass.
    cycles: Vec<Vec<u32>>,
}

/// Tree plus chords over edge-disjoint tree paths: each chord closes one
/// simple cycle and the shared marking keeps cycles edge-disjoint, which is
/// exactly the cactus property.
fn random_cactus(n: usize, rng: &mut SplitMix64) -> CactusDraft {
    let tree = random_tree(n, rng);
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in &tree {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut edges: BTreeSet<(u32, u32)> = tree.iter().copied().collect();
    let mut on_cycle: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut cycles = Vec::new();
    if n >= 3 {
        for _ in 0..n {
            let a = rng.below(n as u64) as u32;
            let b = rng.below(n as u64) as u32;
            if a == b {
                continue;
            }
            let path = tree_path(&adj, a.min(b), a.max(b));
            if path.len() < 3 {
                continue;
            }
            let path_edges: Vec<(u32, u32)> = path
                .windows(2)
                .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                .collect();
            if path_edges.iter().any(|e| on_cycle.contains(e)) {
                continue;
            }
            let chord = (a.min(b), a.max(b));
            edges.insert(chord);
            on_cycle.insert(chord);
            on_cycle.extend(path_edges);
            cycles.push(path);
        }
    }
    CactusDraft { edges, cycles }
}

/// Builds the specified graph. Equal specs give byte-identical edge lists.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, WorkbenchError> {
    let g = match spec {
        GeneratorSpec::Tree { n, seed } => {
            check_n(*n)?;
            Graph::new(*n, &random_tree(*n, &mut SplitMix64::new(*seed)))?
        }
        GeneratorSpec::Cactus { n, seed } => {
            check_n(*n)?;
            let draft = random_cactus(*n, &mut SplitMix64::new(*seed));
            let edges: Vec<(u32, u32)> = draft.edges.into_iter().collect();
            Graph::new(*n, &edges)?
        }
        GeneratorSpec::AlmostTree2 { n, seed } => {
            check_n(*n)?;
            let mut rng = SplitMix64::new(*seed);
            let mut draft = random_cactus(*n, &mut rng);
            // A second chord inside a cycle lifts that block's excess to 2
            // while every other edge keeps its cactus structure.
            for ring in &draft.cycles {
                let len = ring.len() as u64;
                if ring.len() < 4 || rng.below(4) == 3 {
                    continue;
                }
                for _ in 0..8 {
                    let i = rng.below(len) as usize;
                    let j = rng.below(len) as usize;
                    let apart = i.abs_diff(j);
                    if apart < 2 || apart > ring.len() - 2 {
                        continue;
                    }
                    let chord = (ring[i].min(ring[j]), ring[i].max(ring[j]));
                    let inserted = draft.edges.insert(chord);
                    debug_assert!(inserted, "ring vertices two apart never share an edge yet");
                    break;
                }
            }
            let edges: Vec<(u32, u32)> = draft.edges.into_iter().collect();
            Graph::new(*n, &edges)?
        }
        GeneratorSpec::Cycle { n } => {
            check_n(*n)?;
            if *n < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            let edges: Vec<(u32, u32)> = (0..*n as u32).map(|i| (i, (i + 1) % *n as u32)).collect();
            Graph::new(*n, &edges)?
        }
        GeneratorSpec::Complete { n } => {
            check_n(*n)?;
            complete_multipartite(&vec![1; *n])?
        }
        GeneratorSpec::CompleteBipartite { parts } => complete_multipartite(&[parts[0], parts[1]])?,
        GeneratorSpec::CompleteMultipartite { parts } => {
            if parts.len() < 2 {
                return Err(bad("multipartite graphs need at least 2 parts"));
            }
            complete_multipartite(parts)?
        }
    };
    assert!(
        generated_class_holds(spec, &g),
        "generated graph fails its own classification"
    );
    Ok(g)
}

fn complete_multipartite(sizes: &[usize]) -> Result<Graph, WorkbenchError> {
    if sizes.contains(&0) {
        return Err(bad("part sizes must be at least 1"));
    }
    let n: usize = sizes.iter().sum();
    check_n(n)?;
    if sizes.len() == 1 {
        return Err(bad("a single part has no edges; need at least 2 parts"));
    }
    let mut part_of = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, s));
    }
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if part_of[u as usize] != part_of[v as usize] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

fn generated_class_holds(spec: &GeneratorSpec, g: &Graph) -> bool {
    let cls = g.classify();
    match spec {
        GeneratorSpec::Tree { .. } => cls.is_tree(),
        GeneratorSpec::Cactus { .. } => cls.is_cactus(),
        GeneratorSpec::AlmostTree2 { .. } => cls.is_almost_tree(2),
        GeneratorSpec::Cycle { .. } => cls.is_cycle(),
        GeneratorSpec::Complete { .. } => cls.is_complete(),
        GeneratorSpec::CompleteBipartite { .. } | GeneratorSpec::CompleteMultipartite { .. } => {
            cls.is_multipartite() || cls.is_complete()
        }
    }
}

/// Exhaustive max-cut optimum and one canonical cut attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxCutResult {
    pub cut: Cut,
    pub weight: i64,
}

/// Scans all 2^(n−1) canonical cuts in Gray-code order, so each step flips
/// one vertex and costs only its degree. Ties go to the smallest cut mask,
/// identical to an ascending scan.
pub fn maxcut_bruteforce(g: &Graph, cap: usize) -> Result<MaxCutResult, WorkbenchError> {
    if g.n() > cap {
        return Err(WorkbenchError::LimitExceeded { n: g.n(), cap });
    }
    let mut weighted_adj: Vec<Vec<(u32, i64)>> = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let w = g.weights()[e];
        weighted_adj[u as usize].push((v, w));
        weighted_adj[v as usize].push((u, w));
    }
    let mut cur_mask = 0u64;
    let mut cur_weight = 0i64;
    let mut best_mask = 0u64;
    let mut best_weight = 0i64;
    for k in 1..g.cut_count() {
        // Gray codes of successive k differ in bit tz(k); vertex 0 never
        // flips, keeping every visited mask canonical.
        let v = k.trailing_zeros() + 1;
        for &(u, w) in &weighted_adj[v as usize] {
            if (cur_mask >> u ^ cur_mask >> v) & 1 != 0 {
                cur_weight -= w;
            } else {
                cur_weight += w;
            }
        }
        cur_mask ^= 1 << v;
        if cur_weight > best_weight || (cur_weight == best_weight && cur_mask < best_mask) {
            best_weight = cur_weight;
            best_mask = cur_mask;
        }
    }
    Ok(MaxCutResult {
        cut: Cut::from_mask(best_mask, g.n()),
        weight: best_weight,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoringSummary {
    pub scheme: &'static str,
    pub width: usize,
    pub colors_used: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Constructions {
    pub coloring: Option<ColoringSummary>,
    pub clique_family: Option<CliqueFamily>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub graph: GraphSummary,
    pub classification: crate::graph::GraphClass,
    pub bounds: BoundsRow,
    /// Pinned metrics document, absent when exact analysis was skipped.
    pub metrics: Option<serde_json::Value>,
    pub constructions: Constructions,
    pub verdicts: Vec<Verdict>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub cap: usize,
    pub workers: usize,
    pub budget: u64,
    /// Skip skeleton construction entirely; bounds and constructions are
    /// still produced, nothing is verified against exact values.
    pub skip_exact: bool,
}

impl Default for ReportOptions {
    fn default() -> ReportOptions {
        ReportOptions {
            cap: skeleton::DEFAULT_SKELETON_CAP,
            workers: 0,
            budget: analysis::DEFAULT_CLIQUE_BUDGET,
            skip_exact: false,
        }
    }
}

fn workers_or_default(requested: usize) -> usize {
    if requested > 0 {
        requested
    } else {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
            .min(8)
    }
}

/// Confronts the class bounds and constructions with exact skeleton metrics.
/// Every verdict false means a guaranteed property failed, which is a bug,
/// not a property of the input.
pub fn report(g: &Graph, opts: &ReportOptions) -> Result<Report, WorkbenchError> {
    let cls = g.classify();
    let bounds = constructions::bounds_for(g);
    let mut verdicts: Vec<Verdict> = Vec::new();

    let skel = if opts.skip_exact {
        None
    } else {
        Some(skeleton::build_skeleton_with_workers(
            g,
            opts.cap,
            workers_or_default(opts.workers),
        )?)
    };

    let coloring = if cls.is_cactus() {
        skel.as_ref()
            .map(|s| constructions::brm_coloring(g, s))
            .transpose()?
            .map(|c| ("brm", c))
    } else if cls.is_almost_tree(2) {
        skel.as_ref()
            .map(|s| constructions::brm_star_coloring(g, s))
            .transpose()?
            .map(|c| ("brm-star", c))
    } else {
        None
    };

    let family = if cls.is_cycle() {
        Some(constructions::hamming_ball_clique(g)?)
    } else if cls.is_multipartite()
        && cls
            .multipartite_parts()
            .unwrap()
            .iter()
            .all(|p| p.len() >= 2)
    {
        Some(constructions::symmetric_cut_clique(g)?)
    } else {
        None
    };

    let metrics = match &skel {
        Some(s) => Some(analysis::metrics(
            s,
            opts.budget,
            workers_or_default(opts.workers),
        )?),
        None => None,
    };

    if let Some(m) = &metrics {
        let d = m.diameter as u64;
        verdicts.push(Verdict {
            check: "diameter-within-bounds",
            pass: (bounds.diameter.lo..=bounds.diameter.hi).contains(&d),
            detail: format!(
                "diameter {d} in [{}, {}]",
                bounds.diameter.lo, bounds.diameter.hi
            ),
        });
        let w = m.clique.size as u64;
        let pass = if m.clique.exact {
            (bounds.clique.lo..=bounds.clique.hi).contains(&w)
        } else {
            // A budgeted lower bound can fall short of the class floor
            // without meaning anything; only the ceiling stays binding.
            w <= bounds.clique.hi
        };
        verdicts.push(Verdict {
            check: "clique-within-bounds",
            pass,
            detail: format!(
                "clique {w}{} in [{}, {}]",
                if m.clique.exact { "" } else { " (lower bound)" },
                bounds.clique.lo,
                bounds.clique.hi
            ),
        });
    }

    if let (Some(s), Some((scheme, col))) = (&skel, &coloring) {
        let violation = analysis::verify_coloring(s, col)?;
        verdicts.push(Verdict {
            check: "coloring-proper",
            pass: violation.is_none(),
            detail: match violation {
                None => format!(
                    "{scheme} coloring proper, {} colors at width {}",
                    col.color_count(),
                    col.width
                ),
                Some((a, b)) => format!("nodes {a} and {b} share a color"),
            },
        });
        if let Some(m) = &metrics {
            if m.clique.exact {
                verdicts.push(Verdict {
                    check: "clique-at-most-color-count",
                    pass: m.clique.size <= col.color_count(),
                    detail: format!("clique {} vs {} colors", m.clique.size, col.color_count()),
                });
            }
        }
    }

    if let (Some(s), Some(f)) = (&skel, &family) {
        let violation = analysis::verify_clique(s, &f.indices())?;
        verdicts.push(Verdict {
            check: "construction-clique-valid",
            pass: violation.is_none(),
            detail: match violation {
                None => format!("{} family of {} cuts", f.construction, f.len()),
                Some((a, b)) => format!("cuts {a} and {b} are not adjacent"),
            },
        });
    }

    if let Some(s) = &skel {
        let limit = if cls.is_cactus() {
            Some(("cactus-edge-difference", 2))
        } else if cls.is_almost_tree(2) {
            Some(("almost-tree-edge-difference", 3))
        } else {
            None
        };
        if let Some((check, limit)) = limit {
            // Adjacency depends only on the xor class, so scanning the
            // classes adjacent to the empty cut covers every skeleton edge.
            let mut worst = 0;
            for &d in s.neighbors(0) {
                worst = worst.max(g.cut_set(s.cut(d)).count_ones());
            }
            verdicts.push(Verdict {
                check,
                pass: worst <= limit,
                detail: format!("max |cut(x xor y)| = {worst}, limit {limit}"),
            });
        }
    }

    let pass = verdicts.iter().all(|v| v.pass);
    Ok(Report {
        schema: 1,
        graph: GraphSummary { n: g.n(), m: g.m() },
        classification: cls,
        bounds,
        metrics: metrics.map(|m| m.to_json_value()),
        constructions: Constructions {
            coloring: coloring.map(|(scheme, c)| ColoringSummary {
                scheme,
                width: c.width,
                colors_used: c.color_count(),
            }),
            clique_family: family,
        },
        verdicts,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0; any reimplementation must match.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn generation_is_deterministic() {
        for spec in [
            GeneratorSpec::Tree { n: 9, seed: 42 },
            GeneratorSpec::Cactus { n: 9, seed: 42 },
            GeneratorSpec::AlmostTree2 { n: 9, seed: 42 },
        ] {
            let a = generate(&spec).unwrap();
            let b = generate(&spec).unwrap();
            assert_eq!(a.to_text(), b.to_text());
        }
    }

    #[test]
    fn generated_trees_are_trees() {
        for seed in 0..30 {
            for n in 1..=10 {
                let g = generate(&GeneratorSpec::Tree { n, seed }).unwrap();
                assert!(g.classify().is_tree());
                assert_eq!(g.m(), n - 1);
            }
        }
    }

    #[test]
    fn generated_cacti_are_cacti() {
        let mut with_cycle = 0;
        for seed in 0..30 {
            let g = generate(&GeneratorSpec::Cactus { n: 9, seed }).unwrap();
            let cls = g.classify();
            assert!(cls.is_cactus());
            if g.m() > 8 {
                with_cycle += 1;
            }
        }
        // The generator must actually produce cycles, not just trees.
        assert!(with_cycle > 20);
    }

    #[test]
    fn generated_almost_trees_have_excess_two() {
        let mut with_excess_two = 0;
        for seed in 0..30 {
            let g = generate(&GeneratorSpec::AlmostTree2 { n: 10, seed }).unwrap();
            let cls = g.classify();
            assert!(cls.is_almost_tree(2));
            if cls.max_block_excess == 2 {
                with_excess_two += 1;
            }
        }
        assert!(with_excess_two > 10);
    }

    #[test]
    fn direct_classes_match_their_specs() {
        let c = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        assert!(c.classify().is_cycle());
        let k = generate(&GeneratorSpec::Complete { n: 5 }).unwrap();
        assert!(k.classify().is_complete());
        // K_{2,2} is a 4-cycle through 0, 2, 1, 3.
        let b = generate(&GeneratorSpec::CompleteBipartite { parts: [2, 2] }).unwrap();
        assert!(b.classify().is_cycle());
        let m = generate(&GeneratorSpec::CompleteMultipartite {
            parts: vec![2, 2, 2],
        })
        .unwrap();
        assert!(m.classify().is_multipartite());
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(generate(&GeneratorSpec::Tree { n: 0, seed: 0 }).is_err());
        assert!(generate(&GeneratorSpec::Cycle { n: 2 }).is_err());
        assert!(generate(&GeneratorSpec::CompleteMultipartite { parts: vec![3] }).is_err());
        assert!(generate(&GeneratorSpec::CompleteMultipartite { parts: vec![2, 0] }).is_err());
        assert!(generate(&GeneratorSpec::Tree { n: 65, seed: 0 }).is_err());
    }

    #[test]
    fn maxcut_on_bipartite_graphs_takes_every_edge() {
        let g = generate(&GeneratorSpec::CompleteBipartite { parts: [2, 2] }).unwrap();
        let result = maxcut_bruteforce(&g, DEFAULT_MAXCUT_CAP).unwrap();
        assert_eq!(result.weight, 4);
        // The optimum separates the parts: cut {2, 3} i.e. one full part.
        assert_eq!(result.cut, Cut::from_vertices([2, 3], 4).unwrap());
    }

    #[test]
    fn maxcut_on_a_path_cuts_all_edges() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let result = maxcut_bruteforce(&g, DEFAULT_MAXCUT_CAP).unwrap();
        assert_eq!(result.weight, 2);
        assert_eq!(result.cut, Cut::from_vertices([1], 3).unwrap());
    }

    #[test]
    fn maxcut_respects_negative_weights() {
        // Five-cycle, weights 1,1,1,1,-5 in sorted edge order, so the -5
        // sits on (3,4). The optimum keeps 3 and 4 on the same side.
        let g = Graph::with_weights(5, &[(0, 1, 1), (0, 4, 1), (1, 2, 1), (2, 3, 1), (3, 4, -5)])
            .unwrap();
        let result = maxcut_bruteforce(&g, DEFAULT_MAXCUT_CAP).unwrap();
        assert_eq!(result.weight, 4);
        assert_eq!(result.cut, Cut::from_vertices([1, 3, 4], 5).unwrap());
    }

    #[test]
    fn maxcut_matches_ascending_scan() {
        for seed in 0..10u64 {
            let g = generate(&GeneratorSpec::Cactus { n: 8, seed }).unwrap();
            let fast = maxcut_bruteforce(&g, DEFAULT_MAXCUT_CAP).unwrap();
            let mut best = (0i64, 0u64);
            for k in 0..g.cut_count() {
                let cut = Cut::from_index(k);
                let w = g.cut_weight(cut);
                if w > best.0 {
                    best = (w, cut.mask());
                }
            }
            assert_eq!(fast.weight, best.0);
            assert_eq!(fast.cut.mask(), best.1);
        }
    }

    #[test]
    fn maxcut_cap_is_enforced() {
        let g = generate(&GeneratorSpec::Tree { n: 10, seed: 0 }).unwrap();
        assert!(matches!(
            maxcut_bruteforce(&g, 9),
            Err(WorkbenchError::LimitExceeded { n: 10, cap: 9 })
        ));
    }

    #[test]
    fn maxcut_weight_is_relabeling_invariant() {
        let base = generate(&GeneratorSpec::Cactus { n: 7, seed: 3 }).unwrap();
        let reference = maxcut_bruteforce(&base, DEFAULT_MAXCUT_CAP).unwrap().weight;
        let mut rng = SplitMix64::new(99);
        for _ in 0..20 {
            // Random permutation by sorting on random keys.
            let mut perm: Vec<u32> = (0..7).collect();
            for i in (1..perm.len()).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                perm.swap(i, j);
            }
            let edges: Vec<(u32, u32)> = base
                .edges()
                .iter()
                .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
                .collect();
            let permuted = Graph::new(7, &edges).unwrap();
            assert_eq!(
                maxcut_bruteforce(&permuted, DEFAULT_MAXCUT_CAP)
                    .unwrap()
                    .weight,
                reference
            );
        }
    }

    #[test]
    fn report_on_a_tree_passes_every_verdict() {
        let g = generate(&GeneratorSpec::Tree { n: 6, seed: 1 }).unwrap();
        let r = report(&g, &ReportOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.verdicts);
        assert_eq!(r.schema, 1);
        let m = r.metrics.unwrap();
        assert_eq!(m["diameter"], 5);
        assert_eq!(m["clique_number"], 2);
    }

    #[test]
    fn report_on_k3_shows_the_full_clique() {
        let g = generate(&GeneratorSpec::Complete { n: 3 }).unwrap();
        let r = report(&g, &ReportOptions::default()).unwrap();
        assert!(r.pass);
        let m = r.metrics.unwrap();
        assert_eq!(m["diameter"], 1);
        assert_eq!(m["clique_number"], 4);
        // C3's Hamming-ball family sits inside that 4-clique.
        let family = r.constructions.clique_family.unwrap();
        assert_eq!(family.len(), 3);
    }

    #[test]
    fn report_on_k33_validates_the_symmetric_clique() {
        let g = generate(&GeneratorSpec::CompleteBipartite { parts: [3, 3] }).unwrap();
        let r = report(&g, &ReportOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.verdicts);
        let m = r.metrics.unwrap();
        assert_eq!(m["diameter"], 2);
        assert!(m["clique_number"].as_u64().unwrap() >= 4);
        assert_eq!(r.constructions.clique_family.unwrap().len(), 4);
    }

    #[test]
    fn report_respects_skip_exact() {
        let g = generate(&GeneratorSpec::Tree { n: 20, seed: 0 }).unwrap();
        let r = report(
            &g,
            &ReportOptions {
                skip_exact: true,
                ..ReportOptions::default()
            },
        )
        .unwrap();
        assert!(r.metrics.is_none());
        assert!(r.verdicts.is_empty());
        assert!(r.pass);
    }

    #[test]
    fn report_is_byte_identical_across_workers() {
        let g = generate(&GeneratorSpec::Cactus { n: 8, seed: 5 }).unwrap();
        let render = |workers| {
            let r = report(
                &g,
                &ReportOptions {
                    workers,
                    ..ReportOptions::default()
                },
            )
            .unwrap();
            serde_json::to_string(&r).unwrap()
        };
        let reference = render(1);
        for workers in [2, 3, 7] {
            assert_eq!(render(workers), reference);
        }
    }
}
