//! Constructive bounds for structured graph classes: binary-representation
//! colorings for cacti and almost trees, explicit cliques for cycles and
//! complete multipartite graphs, and the per-class summary bounds.

use crate::analysis::Coloring;
use crate::graph::{ClassTag, Cut, Graph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("construction needs class {expected}, classification found {found}")]
    WrongClass {
        expected: &'static str,
        found: String,
    },
    #[error("every part must have at least 2 vertices, found one of size {size}")]
    PartTooSmall { size: usize },
    #[error("skeleton has {got} nodes, the graph's cut count is {expected}")]
    SkeletonMismatch { expected: u64, got: usize },
}

fn bit_length(x: u64) -> usize {
    (64 - x.leading_zeros()) as usize
}

/// ⌈log2 x⌉ for x ≥ 1.
fn ceil_log2(x: u64) -> usize {
    bit_length(x - 1)
}

/// 0/1 matrix with k rows of width m, row i stored as an integer whose bit
/// m−1−j is column j (most significant bit first, as printed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryMatrix {
    pub k: usize,
    pub m: usize,
    pub rows: Vec<u64>,
}

impl BinaryMatrix {
    /// Row by 1-based index, matching the defining formulas.
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i - 1]
    }

    /// Row as 0/1 digits, leading zeros included.
    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        let row = self.row(i);
        (0..self.m).rev().map(|j| (row >> j & 1) as u8).collect()
    }
}

impl std::fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 1..=self.k {
            for bit in self.row_bits(i) {
                write!(f, "{bit}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Binary representation matrix: row i is the binary expansion of i. Width
/// is the bit length of k, which promotes exact powers of two by one column
/// so that no row is zero.
pub fn brm(k: usize) -> BinaryMatrix {
    assert!(k >= 1, "brm needs at least one row");
    BinaryMatrix {
        k,
        m: bit_length(k as u64),
        rows: (1..=k as u64).collect(),
    }
}

/// Modified binary representation matrix: row i is the binary expansion of
/// i−1 followed by a parity column set exactly when that expansion has an
/// even number of ones. Every row therefore has odd popcount, so no one,
/// two or three rows can sum to zero modulo 2.
pub fn brm_star(k: usize) -> BinaryMatrix {
    assert!(k >= 1, "brm_star needs at least one row");
    let rows = (0..k as u64)
        .map(|b| b << 1 | (b.count_ones() % 2 == 0) as u64)
        .collect();
    BinaryMatrix {
        k,
        m: ceil_log2(k as u64) + 1,
        rows,
    }
}

/// Pairwise-adjacent cuts produced by one of the explicit constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueFamily {
    pub construction: &'static str,
    pub cuts: Vec<Cut>,
}

impl CliqueFamily {
    /// Cut indices in skeleton node numbering, for verify_clique.
    pub fn indices(&self) -> Vec<u32> {
        self.cuts.iter().map(|c| c.index() as u32).collect()
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }
}

fn check_skeleton(g: &Graph, node_count: usize) -> Result<(), ConstructionError> {
    if node_count as u64 != g.cut_count() {
        return Err(ConstructionError::SkeletonMismatch {
            expected: g.cut_count(),
            got: node_count,
        });
    }
    Ok(())
}

/// Colors every cut of a cactus by multiplying its cut vector with the first
/// |E| rows of the binary representation matrix on |E|+1 rows: edge e
/// contributes row e+1, combined by xor. Proper because any one or two rows
/// xor to a nonzero color, and a cactus skeleton edge differs in at most two
/// cut edges.
pub fn brm_coloring(
    g: &Graph,
    s: &crate::skeleton::SkeletonGraph,
) -> Result<Coloring, ConstructionError> {
    let cls = g.classify();
    if !cls.is_cactus() {
        return Err(ConstructionError::WrongClass {
            expected: "cactus",
            found: cls.most_specific.to_string(),
        });
    }
    check_skeleton(g, s.node_count())?;
    let width = bit_length(g.m() as u64);
    let colors = color_by_rows(g, &(1..=g.m() as u64).collect::<Vec<_>>());
    Ok(Coloring { width, colors })
}

/// Colors every cut of an almost tree (2) with the modified matrix on |E|
/// rows. Proper because any one, two or three rows xor to a nonzero color,
/// and such a skeleton edge differs in at most three cut edges.
pub fn brm_star_coloring(
    g: &Graph,
    s: &crate::skeleton::SkeletonGraph,
) -> Result<Coloring, ConstructionError> {
    let cls = g.classify();
    if !cls.is_almost_tree(2) {
        return Err(ConstructionError::WrongClass {
            expected: "almost-tree(2)",
            found: cls.most_specific.to_string(),
        });
    }
    check_skeleton(g, s.node_count())?;
    let matrix = brm_star(g.m());
    Ok(Coloring {
        width: matrix.m,
        colors: color_by_rows(g, &matrix.rows),
    })
}

/// color(S) = xor of `rows[e]` over the edges e crossing S.
fn color_by_rows(g: &Graph, rows: &[u64]) -> Vec<u64> {
    let edges = g.edges();
    (0..g.cut_count())
        .map(|k| {
            let mask = k << 1;
            edges
                .iter()
                .zip(rows)
                .filter(|(&(u, v), _)| (mask >> u ^ mask >> v) & 1 != 0)
                .fold(0, |acc, (_, &row)| acc ^ row)
        })
        .collect()
}

/// The nested cuts {v1}, {v1,v2}, …, {v1..vn} along a cycle, canonicalized:
/// consecutive prefixes differ in one vertex, any two cut exactly two cycle
/// edges each, so the family is a clique of size n in the skeleton.
pub fn hamming_ball_clique(g: &Graph) -> Result<CliqueFamily, ConstructionError> {
    let cls = g.classify();
    if !cls.is_cycle() {
        return Err(ConstructionError::WrongClass {
            expected: "cycle",
            found: cls.most_specific.to_string(),
        });
    }
    // Walk the cycle from vertex 0 toward its smaller neighbor.
    let n = g.n();
    let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        neighbors[u as usize].push(v);
        neighbors[v as usize].push(u);
    }
    let mut order = Vec::with_capacity(n);
    let mut prev = u32::MAX;
    let mut at = 0u32;
    for _ in 0..n {
        order.push(at);
        let next = *neighbors[at as usize]
            .iter()
            .filter(|&&w| w != prev)
            .min()
            .expect("cycle vertices have two neighbors");
        prev = at;
        at = next;
    }
    let mut prefix = 0u64;
    let cuts = order
        .iter()
        .map(|&v| {
            prefix |= 1 << v;
            Cut::from_mask(prefix, n)
        })
        .collect();
    Ok(CliqueFamily {
        construction: "hamming-ball",
        cuts,
    })
}

/// Symmetric cuts of a complete multipartite graph: with the two largest
/// parts V1, V2 (size descending, smallest vertex breaking ties, members
/// ascending) and t = |V2|, each subset S of {2..t} yields the cut taking
/// positions S in both V1 and V2. All 2^(t−1) cuts are pairwise adjacent.
/// Excluding position 1 keeps one representative of each complementary pair.
pub fn symmetric_cut_clique(g: &Graph) -> Result<CliqueFamily, ConstructionError> {
    let cls = g.classify();
    if !cls.is_multipartite() {
        return Err(ConstructionError::WrongClass {
            expected: "complete multipartite",
            found: cls.most_specific.to_string(),
        });
    }
    let parts = cls
        .multipartite_parts()
        .expect("multipartite tag implies parts")
        .to_vec();
    if let Some(small) = parts.iter().find(|p| p.len() < 2) {
        return Err(ConstructionError::PartTooSmall { size: small.len() });
    }
    let mut parts = parts;
    parts.sort_by_key(|p| (std::cmp::Reverse(p.len()), p[0]));
    let (v1, v2) = (&parts[0], &parts[1]);
    let t = v2.len();
    let cuts = (0..1u64 << (t - 1))
        .map(|bits| {
            // Bit j selects position j+2; position 1 is never taken.
            let members = (0..t - 1)
                .filter(|&j| bits >> j & 1 != 0)
                .flat_map(|j| [v1[j + 1], v2[j + 1]]);
            Cut::from_vertices(members, g.n()).expect("part members are in range")
        })
        .collect();
    Ok(CliqueFamily {
        construction: "symmetric",
        cuts,
    })
}

/// One bound with the name of the argument that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub lo: u64,
    pub hi: u64,
    pub lo_source: &'static str,
    pub hi_source: &'static str,
}

impl Bound {
    fn exact(value: u64, source: &'static str) -> Bound {
        Bound {
            lo: value,
            hi: value,
            lo_source: source,
            hi_source: source,
        }
    }
}

/// Summary-table bounds for the most specific class with a known row. The
/// `class` field names the row that was applied, which can be less specific
/// than the full classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub class: ClassTag,
    pub diameter: Bound,
    pub clique: Bound,
}

pub fn bounds_for(g: &Graph) -> BoundsRow {
    let n = g.n() as u64;
    let m = g.m() as u64;
    let nodes = g.cut_count();
    let cls = g.classify();

    if g.n() == 1 {
        return BoundsRow {
            class: ClassTag::Complete,
            diameter: Bound::exact(0, "single-node-skeleton"),
            clique: Bound::exact(1, "single-node-skeleton"),
        };
    }
    if cls.is_complete() {
        return BoundsRow {
            class: ClassTag::Complete,
            diameter: Bound::exact(1, "complete-all-pairs-adjacent"),
            clique: Bound::exact(nodes, "complete-all-pairs-adjacent"),
        };
    }
    if cls.is_tree() {
        return BoundsRow {
            class: ClassTag::Tree,
            diameter: Bound::exact(n - 1, "tree-hypercube"),
            clique: Bound::exact(2, "tree-hypercube"),
        };
    }
    if let Some(parts) = cls.multipartite_parts() {
        if parts.iter().all(|p| p.len() >= 2) {
            let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            sizes.sort_unstable();
            let second = sizes[sizes.len() - 2] as u64;
            let class = if parts.len() == 2 {
                ClassTag::CompleteBipartite(sizes)
            } else {
                ClassTag::CompleteMultipartite(sizes)
            };
            return BoundsRow {
                class,
                diameter: Bound::exact(2, "multipartite-two-step"),
                clique: Bound {
                    lo: 1 << (second - 1),
                    hi: nodes,
                    lo_source: "symmetric-cut-clique",
                    hi_source: "node-count",
                },
            };
        }
    }
    if cls.is_cactus() {
        return BoundsRow {
            class: ClassTag::Cactus,
            diameter: Bound {
                lo: n / 2,
                hi: n - 1,
                lo_source: "cactus-distance-floor",
                hi_source: "spanning-tree-relaxation",
            },
            clique: Bound {
                lo: 2,
                hi: 1 << bit_length(m),
                lo_source: "any-skeleton-edge",
                hi_source: "cactus-coloring",
            },
        };
    }
    if cls.is_almost_tree(2) {
        return BoundsRow {
            class: ClassTag::AlmostTree(2),
            diameter: Bound {
                lo: n / 3,
                hi: n - 1,
                lo_source: "almost-tree-distance-floor",
                hi_source: "spanning-tree-relaxation",
            },
            clique: Bound {
                lo: 2,
                hi: 1 << (ceil_log2(m) + 1),
                lo_source: "any-skeleton-edge",
                hi_source: "almost-tree-coloring",
            },
        };
    }
    BoundsRow {
        class: ClassTag::Other,
        diameter: Bound {
            lo: 1,
            hi: n - 1,
            lo_source: "distinct-nodes",
            hi_source: "spanning-tree-relaxation",
        },
        clique: Bound {
            lo: 2,
            hi: nodes,
            lo_source: "any-skeleton-edge",
            hi_source: "node-count",
        },
    }
}
