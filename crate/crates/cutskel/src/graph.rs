//! Connected undirected graphs with integer edge weights, their cuts, and
//! structural classification.
//!
//! A cut is the edge set δ(S) between a vertex set S and its complement, so S
//! and V∖S describe the same cut. The side *not* containing vertex 0 is the
//! canonical representative; a connected graph on n vertices therefore has
//! exactly 2^(n−1) distinct cuts and they enumerate as a plain counter over
//! subsets of {1, …, n−1}.

use serde::Serialize;
use std::fmt;

/// Hard ceiling on vertex count; cuts are u64 vertex masks.
pub const MAX_VERTICES: usize = 64;

pub(crate) fn universe_mask(n: usize) -> u64 {
    debug_assert!((1..=MAX_VERTICES).contains(&n));
    if n == MAX_VERTICES {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// One side of a cut as a vertex bitmask. Invariant: bit 0 is clear, so the
/// mask is the canonical representative and `index` is its rank in the
/// canonical enumeration.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cut(u64);

impl Cut {
    pub const EMPTY: Cut = Cut(0);

    /// Canonicalizes an arbitrary side mask: a side containing vertex 0 is
    /// replaced by its complement within the n-vertex universe.
    pub fn from_mask(mask: u64, n: usize) -> Cut {
        let all = universe_mask(n);
        debug_assert_eq!(mask & !all, 0, "mask mentions vertices >= n");
        if mask & 1 != 0 {
            Cut(!mask & all)
        } else {
            Cut(mask)
        }
    }

    /// Builds a cut from explicit vertex ids; `None` if any id is out of
    /// range. The set may describe either side.
    pub fn from_vertices<I>(vertices: I, n: usize) -> Option<Cut>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut mask = 0u64;
        for v in vertices {
            if v as usize >= n {
                return None;
            }
            mask |= 1u64 << v;
        }
        Some(Cut::from_mask(mask, n))
    }

    /// Inverse of `index`: the k-th canonical cut. Bit i of k decides vertex
    /// i+1, so the mask is exactly k shifted past vertex 0.
    pub fn from_index(k: u64) -> Cut {
        Cut(k << 1)
    }

    pub fn index(self) -> u64 {
        self.0 >> 1
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: u32) -> bool {
        self.0 >> v & 1 != 0
    }

    pub fn size(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Symmetric difference of sides. Canonical cuts are closed under xor
    /// because neither operand contains vertex 0.
    pub fn sym_diff(self, other: Cut) -> Cut {
        Cut(self.0 ^ other.0)
    }

    /// Members of the canonical side in ascending order.
    pub fn members(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cut{{")?;
        for (i, v) in self.members().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Cut {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.mask())
    }
}

/// Incidence vector of a cut over the graph's sorted edge order: bit e is set
/// when edge e crosses the cut.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CutVector {
    len: usize,
    blocks: Vec<u64>,
}

impl CutVector {
    pub fn zeros(len: usize) -> CutVector {
        CutVector {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 != 0
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1u64 << (i % 64);
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn xor(&self, other: &CutVector) -> CutVector {
        assert_eq!(self.len, other.len);
        CutVector {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &CutVector) -> bool {
        assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn hamming(&self, other: &CutVector) -> usize {
        assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(w, &b)| {
            let mut rest = b;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * 64 + i)
                }
            })
        })
    }

    /// 0/1 entries in edge order, the shape used by JSON exports.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for CutVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

impl fmt::Display for CutVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for CutVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.bits())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// `line` is the 1-based line of parsed text, or the 1-based edge
    /// position when the graph was built from a slice.
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: u32 },
}

fn malformed(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Malformed {
        line,
        reason: reason.into(),
    }
}

/// A connected graph on vertices 0..n with lexicographically sorted edges
/// (u < v) and integer weights. Connectivity and edge order are established
/// at construction and relied on everywhere else.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    weights: Vec<i64>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        Graph::build(
            n,
            edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| (u, v, 1, i + 1)),
        )
    }

    pub fn with_weights(n: usize, edges: &[(u32, u32, i64)]) -> Result<Graph, GraphError> {
        Graph::build(
            n,
            edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v, w))| (u, v, w, i + 1)),
        )
    }

    /// Reads the plain text format: first significant line `n m`, then m
    /// lines `u v` or `u v w`. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut significant = text.lines().enumerate().filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                None
            } else {
                Some((i + 1, body))
            }
        });

        let (head_line, head) = significant
            .next()
            .ok_or_else(|| malformed(1, "empty input, expected a header line `n m`"))?;
        let mut head_tokens = head.split_whitespace();
        let n: usize = parse_token(head_tokens.next(), head_line, "vertex count")?;
        let m: usize = parse_token(head_tokens.next(), head_line, "edge count")?;
        if head_tokens.next().is_some() {
            return Err(malformed(
                head_line,
                "header has extra tokens, expected `n m`",
            ));
        }

        let mut edges: Vec<(u32, u32, i64, usize)> = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, body) = significant
                .next()
                .ok_or_else(|| malformed(head_line, format!("expected {m} edge lines")))?;
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.len() != 2 && tokens.len() != 3 {
                return Err(malformed(line, "expected `u v` or `u v w`"));
            }
            let u: u32 = parse_token(Some(tokens[0]), line, "endpoint")?;
            let v: u32 = parse_token(Some(tokens[1]), line, "endpoint")?;
            let w: i64 = match tokens.get(2) {
                Some(t) => parse_token(Some(t), line, "weight")?,
                None => 1,
            };
            edges.push((u, v, w, line));
        }
        if let Some((line, _)) = significant.next() {
            return Err(malformed(line, "unexpected content after the edge list"));
        }

        Graph::build(n, edges.into_iter())
    }

    fn build(
        n: usize,
        input: impl Iterator<Item = (u32, u32, i64, usize)>,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(malformed(1, "vertex count must be at least 1"));
        }
        if n > MAX_VERTICES {
            return Err(malformed(
                1,
                format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}"),
            ));
        }

        let mut tagged: Vec<(u32, u32, i64, usize)> = Vec::new();
        for (u, v, w, line) in input {
            if u as usize >= n || v as usize >= n {
                return Err(malformed(
                    line,
                    format!("edge ({u}, {v}) mentions a vertex outside 0..{n}"),
                ));
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            tagged.push((u.min(v), u.max(v), w, line));
        }
        tagged.sort_by_key(|&(u, v, _, line)| (u, v, line));
        for pair in tagged.windows(2) {
            if (pair[0].0, pair[0].1) == (pair[1].0, pair[1].1) {
                return Err(GraphError::DuplicateEdge {
                    line: pair[1].3,
                    u: pair[1].0,
                    v: pair[1].1,
                });
            }
        }

        let edges: Vec<(u32, u32)> = tagged.iter().map(|&(u, v, _, _)| (u, v)).collect();
        let weights: Vec<i64> = tagged.iter().map(|&(_, _, w, _)| w).collect();

        let mut uf = UnionFind::new(n);
        for &(u, v) in &edges {
            uf.union(u as usize, v as usize);
        }
        let root0 = uf.find(0);
        for v in 1..n {
            if uf.find(v) != root0 {
                return Err(GraphError::Disconnected { vertex: v as u32 });
            }
        }

        Ok(Graph { n, edges, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> i64 {
        self.weights[edge]
    }

    pub fn total_weight(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Number of distinct cuts, 2^(n−1).
    pub fn cut_count(&self) -> u64 {
        1u64 << (self.n - 1)
    }

    /// All canonical cuts in bitmask (index) order.
    pub fn cuts(&self) -> impl Iterator<Item = Cut> {
        (0..self.cut_count()).map(Cut::from_index)
    }

    /// δ(S) as an incidence vector over the sorted edge order.
    pub fn cut_set(&self, s: Cut) -> CutVector {
        let mask = s.mask();
        let mut out = CutVector::zeros(self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if (mask >> u ^ mask >> v) & 1 != 0 {
                out.set(i);
            }
        }
        out
    }

    /// Total weight of δ(S).
    pub fn cut_weight(&self, s: Cut) -> i64 {
        let mask = s.mask();
        self.edges
            .iter()
            .zip(&self.weights)
            .filter(|(&(u, v), _)| (mask >> u ^ mask >> v) & 1 != 0)
            .map(|(_, &w)| w)
            .sum()
    }

    /// Connected components of (V, E ∖ removed) as vertex masks, ordered by
    /// smallest member.
    pub fn components(&self, removed: &CutVector) -> Vec<u64> {
        assert_eq!(removed.len(), self.edges.len());
        let mut uf = UnionFind::new(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !removed.get(i) {
                uf.union(u as usize, v as usize);
            }
        }
        uf.component_masks(self.n)
    }

    /// Component count of the graph with δ(side) deleted; the inner loop of
    /// every adjacency test, so it avoids materializing a CutVector.
    pub(crate) fn components_excluding_cut(&self, side_mask: u64) -> usize {
        let mut uf = UnionFind::new(self.n);
        let mut count = self.n;
        for &(u, v) in &self.edges {
            if (side_mask >> u ^ side_mask >> v) & 1 == 0 && uf.union(u as usize, v as usize) {
                count -= 1;
            }
        }
        count
    }

    /// Edge ids grouped into biconnected blocks (iterative depth-first
    /// search with an explicit stack; a bridge is a 1-edge block).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u as usize].push((v, i as u32));
            adj[v as usize].push((u, i as u32));
        }

        let mut disc = vec![0u32; n];
        let mut low = vec![0u32; n];
        let mut timer = 1u32;
        disc[0] = timer;
        low[0] = timer;

        const NO_EDGE: u32 = u32::MAX;
        // frame: (vertex, edge to parent, next adjacency slot)
        let mut stack: Vec<(u32, u32, usize)> = vec![(0, NO_EDGE, 0)];
        let mut edge_stack: Vec<u32> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();

        while !stack.is_empty() {
            let top = stack.len() - 1;
            let (v, parent_edge) = (stack[top].0 as usize, stack[top].1);
            if stack[top].2 < adj[v].len() {
                let (w, eid) = adj[v][stack[top].2];
                stack[top].2 += 1;
                let w = w as usize;
                if eid == parent_edge {
                    continue;
                }
                if disc[w] == 0 {
                    edge_stack.push(eid);
                    timer += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    stack.push((w as u32, eid, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(eid);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    let u = u as usize;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        // v cannot reach above u: everything pushed since the
                        // tree edge (u, v) is one block.
                        let mut block = Vec::new();
                        loop {
                            let e = edge_stack.pop().expect("tree edge on the edge stack");
                            block.push(e as usize);
                            if e == parent_edge {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty());
        blocks
    }

    pub fn classify(&self) -> GraphClass {
        let n = self.n;
        let m = self.edges.len();

        let max_block_excess = self
            .blocks()
            .iter()
            .map(|block| {
                let mut seen = 0u64;
                for &e in block {
                    let (u, v) = self.edges[e];
                    seen |= 1u64 << u | 1u64 << v;
                }
                block.len() + 1 - seen.count_ones() as usize
            })
            .max()
            .unwrap_or(0);

        let is_tree = max_block_excess == 0;
        let is_cycle = n >= 3 && m == n && (0..n as u32).all(|v| self.degree(v) == 2);
        let is_complete = m == n * (n - 1) / 2;
        let parts = self.multipartite_parts();

        let mut tags = Vec::new();
        if is_complete {
            tags.push(ClassTag::Complete);
        }
        if is_cycle {
            tags.push(ClassTag::Cycle);
        }
        if is_tree {
            tags.push(ClassTag::Tree);
        }
        if let Some(parts) = &parts {
            // All parts of size 1 is just the complete graph again.
            if !is_complete {
                let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
                sizes.sort_unstable();
                if parts.len() == 2 {
                    tags.push(ClassTag::CompleteBipartite(sizes));
                } else {
                    tags.push(ClassTag::CompleteMultipartite(sizes));
                }
            }
        }
        if max_block_excess <= 1 {
            tags.push(ClassTag::Cactus);
            tags.push(ClassTag::AlmostTree(1));
        }
        if max_block_excess <= 2 {
            tags.push(ClassTag::AlmostTree(2));
        }
        if tags.is_empty() {
            tags.push(ClassTag::Other);
        }

        let most_specific = tags
            .iter()
            .min_by_key(|t| t.specificity())
            .cloned()
            .expect("at least one tag");

        GraphClass {
            tags,
            most_specific,
            parts,
            max_block_excess,
        }
    }

    /// Parts of a complete multipartite decomposition, if one exists: the
    /// complement's connected components, each of which must be independent
    /// in the graph. Ordered by smallest member, each part ascending.
    fn multipartite_parts(&self) -> Option<Vec<Vec<u32>>> {
        let n = self.n;
        let all = universe_mask(n);
        let mut row = vec![0u64; n];
        for &(u, v) in &self.edges {
            row[u as usize] |= 1u64 << v;
            row[v as usize] |= 1u64 << u;
        }

        let mut part_of = vec![usize::MAX; n];
        let mut parts: Vec<Vec<u32>> = Vec::new();
        let mut unvisited = all;
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= all & !row[v] & !(1u64 << v);
                }
                frontier = next & !comp;
                comp |= frontier;
            }
            unvisited &= !comp;
            let id = parts.len();
            let mut members = Vec::new();
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                part_of[v as usize] = id;
                members.push(v);
            }
            parts.push(members);
        }

        if parts.len() < 2 {
            return None;
        }
        // Parts must be independent sets, otherwise the complement
        // components are not cliques of the complement.
        for &(u, v) in &self.edges {
            if part_of[u as usize] == part_of[v as usize] {
                return None;
            }
        }
        Some(parts)
    }

    /// Writes the same text format `parse` reads.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (&(u, v), &w) in self.edges.iter().zip(&self.weights) {
            if w == 1 {
                out.push_str(&format!("{u} {v}\n"));
            } else {
                out.push_str(&format!("{u} {v} {w}\n"));
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

fn parse_token<T: std::str::FromStr>(
    token: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, GraphError> {
    let token = token.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| malformed(line, format!("cannot parse {what} `{token}`")))
}

/// Structural tags a graph can carry; several may apply at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassTag {
    Tree,
    Cactus,
    AlmostTree(u32),
    Cycle,
    Complete,
    /// Part sizes, ascending.
    CompleteBipartite(Vec<usize>),
    CompleteMultipartite(Vec<usize>),
    Other,
}

impl ClassTag {
    /// Rank used to pick the headline tag; lower is more specific.
    fn specificity(&self) -> u32 {
        match self {
            ClassTag::Complete => 0,
            ClassTag::Cycle => 1,
            ClassTag::Tree => 2,
            ClassTag::CompleteBipartite(_) => 3,
            ClassTag::CompleteMultipartite(_) => 4,
            ClassTag::Cactus => 5,
            ClassTag::AlmostTree(k) => 5 + k,
            ClassTag::Other => u32::MAX,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn sizes(f: &mut fmt::Formatter<'_>, s: &[usize]) -> fmt::Result {
            for (i, x) in s.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
        match self {
            ClassTag::Tree => write!(f, "tree"),
            ClassTag::Cactus => write!(f, "cactus"),
            ClassTag::AlmostTree(k) => write!(f, "almost-tree({k})"),
            ClassTag::Cycle => write!(f, "cycle"),
            ClassTag::Complete => write!(f, "complete"),
            ClassTag::CompleteBipartite(s) => {
                write!(f, "complete-bipartite(")?;
                sizes(f, s)?;
                write!(f, ")")
            }
            ClassTag::CompleteMultipartite(s) => {
                write!(f, "complete-multipartite(")?;
                sizes(f, s)?;
                write!(f, ")")
            }
            ClassTag::Other => write!(f, "other"),
        }
    }
}

impl Serialize for ClassTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Everything classification determines about a graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphClass {
    /// All applicable tags; Tree ⇒ Cactus ⇒ AlmostTree(1) ⇒ AlmostTree(2).
    pub tags: Vec<ClassTag>,
    pub most_specific: ClassTag,
    /// Vertex sets of the multipartite parts when the graph is complete
    /// multipartite (including the all-singleton decomposition of K_n).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<u32>>>,
    /// Largest block excess |E_b| − (|V_b| − 1); 0 for trees.
    pub max_block_excess: usize,
}

impl GraphClass {
    pub fn has(&self, tag: &ClassTag) -> bool {
        self.tags.contains(tag)
    }

    pub fn is_tree(&self) -> bool {
        self.has(&ClassTag::Tree)
    }

    pub fn is_cactus(&self) -> bool {
        self.tags.contains(&ClassTag::Cactus)
    }

    pub fn is_almost_tree(&self, k: u32) -> bool {
        self.max_block_excess <= k as usize
    }

    pub fn is_cycle(&self) -> bool {
        self.has(&ClassTag::Cycle)
    }

    pub fn is_complete(&self) -> bool {
        self.has(&ClassTag::Complete)
    }

    /// True when a bipartite or multipartite tag was assigned. Complete
    /// graphs still carry their singleton parts but not the tag.
    pub fn is_multipartite(&self) -> bool {
        self.tags.iter().any(|t| {
            matches!(
                t,
                ClassTag::CompleteBipartite(_) | ClassTag::CompleteMultipartite(_)
            )
        })
    }

    /// Parts when the graph is complete multipartite with 2 or more parts,
    /// complete graphs included.
    pub fn multipartite_parts(&self) -> Option<&[Vec<u32>]> {
        self.parts.as_deref()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// True when the two were in different sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Smaller root wins so component masks come out in vertex order.
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo as u32;
        true
    }

    fn component_masks(&mut self, n: usize) -> Vec<u64> {
        let mut index_of_root = vec![usize::MAX; n];
        let mut masks: Vec<u64> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = masks.len();
                masks.push(0);
            }
            masks[index_of_root[r]] |= 1u64 << v;
        }
        masks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn parse_accepts_weights_and_comments() {
        let g = Graph::parse("# triangle\n3 3\n0 1\n1 2 4\n\n0 2 -2 # chord\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.weights(), &[1, -2, 4]);
    }

    #[test]
    fn parse_names_offending_lines() {
        assert_eq!(
            Graph::parse("2 1\n0 0\n"),
            Err(GraphError::SelfLoop { line: 2, vertex: 0 })
        );
        assert_eq!(
            Graph::parse("3 3\n0 1\n1 2\n1 0\n"),
            Err(GraphError::DuplicateEdge {
                line: 4,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            Graph::parse("4 2\n0 1\n2 3\n"),
            Err(GraphError::Disconnected { vertex: 2 })
        );
        assert!(matches!(
            Graph::parse("3 2\n0 1\n1 five\n"),
            Err(GraphError::Malformed { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1\n"),
            Err(GraphError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse("2 1\n0 1\n0 1\n"),
            Err(GraphError::Malformed { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1\n1 3\n"),
            Err(GraphError::Malformed { line: 3, .. })
        ));
    }

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::new(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_index(3, 2), Some(2));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn canonical_cut_excludes_vertex_zero() {
        let c = Cut::from_vertices([0u32, 2], 5).unwrap();
        assert_eq!(c.members().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(Cut::from_index(c.index()), c);
        assert!(Cut::from_vertices([5u32], 5).is_none());
    }

    #[test]
    fn cut_set_k3_matches_hand_count() {
        let g = k3();
        let s = Cut::from_vertices([1u32], 3).unwrap();
        assert_eq!(g.cut_set(s).bits(), vec![1, 0, 1]);
        assert_eq!(g.cut_set(Cut::EMPTY).bits(), vec![0, 0, 0]);
    }

    #[test]
    fn cut_set_c4_under_sorted_edge_order() {
        // Sorted edges of C4 are (0,1),(0,3),(1,2),(2,3).
        let g = c4();
        let s = Cut::from_vertices([1u32, 2], 4).unwrap();
        assert_eq!(g.cut_set(s).bits(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn sym_diff_is_xor_of_cut_sets() {
        // Exhaustive on a few small graphs: δ(X△Y) = δ(X) △ δ(Y).
        let graphs = [
            k3(),
            c4(),
            Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]).unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            for x in g.cuts() {
                for y in g.cuts() {
                    assert_eq!(g.cut_set(x.sym_diff(y)), g.cut_set(x).xor(&g.cut_set(y)));
                }
            }
        }
    }

    #[test]
    fn components_split_where_the_cut_is_removed() {
        let g = c4();
        let s = Cut::from_vertices([1u32, 2], 4).unwrap();
        let comps = g.components(&g.cut_set(s));
        assert_eq!(comps, vec![0b1001, 0b0110]);
        let whole = g.components(&CutVector::zeros(4));
        assert_eq!(whole, vec![0b1111]);
    }

    #[test]
    fn blocks_of_a_path_are_single_edges() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut blocks = g.blocks();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        assert_eq!(blocks, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn blocks_separate_a_triangle_from_its_tail() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let mut blocks = g.blocks();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn classify_path_is_tree_and_all_weaker_tags() {
        let cls = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap().classify();
        assert_eq!(cls.most_specific, ClassTag::Tree);
        for tag in [
            ClassTag::Tree,
            ClassTag::Cactus,
            ClassTag::AlmostTree(1),
            ClassTag::AlmostTree(2),
        ] {
            assert!(cls.has(&tag), "missing {tag}");
        }
        assert_eq!(cls.max_block_excess, 0);
    }

    #[test]
    fn classify_recognizes_cycles_completes_and_bipartite() {
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(c6.classify().most_specific, ClassTag::Cycle);
        assert!(c6.classify().is_cactus());

        let k5 = complete(5);
        assert_eq!(k5.classify().most_specific, ClassTag::Complete);

        let k23 = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let cls = k23.classify();
        assert_eq!(cls.most_specific, ClassTag::CompleteBipartite(vec![2, 3]));
        assert_eq!(cls.parts, Some(vec![vec![0, 1], vec![2, 3, 4]]));
    }

    #[test]
    fn classify_triangle_is_complete_first() {
        let cls = k3().classify();
        assert_eq!(cls.most_specific, ClassTag::Complete);
        assert!(cls.is_cycle());
        assert!(cls.is_cactus());
    }

    #[test]
    fn classify_wheel_is_complete_tripartite() {
        // Hub joined to a 4-cycle is K_{1,2,2}: complement is two disjoint
        // edges plus an isolated vertex.
        let wheel = Graph::new(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
            ],
        )
        .unwrap();
        let cls = wheel.classify();
        assert_eq!(
            cls.most_specific,
            ClassTag::CompleteMultipartite(vec![1, 2, 2])
        );
    }

    #[test]
    fn classify_petersen_is_other() {
        let petersen = Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4), // outer
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5), // inner star
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9), // spokes
            ],
        )
        .unwrap();
        let cls = petersen.classify();
        assert_eq!(cls.most_specific, ClassTag::Other);
        assert_eq!(cls.tags, vec![ClassTag::Other]);
    }

    #[test]
    fn classify_five_cycle_with_chord_is_almost_tree_two() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();
        let cls = g.classify();
        assert!(!cls.is_cactus());
        assert!(cls.is_almost_tree(2));
        assert_eq!(cls.max_block_excess, 2);
        assert_eq!(cls.most_specific, ClassTag::AlmostTree(2));
    }

    #[test]
    fn classify_diamond_is_complete_multipartite() {
        // K4 minus one edge has two singleton parts and one pair.
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let cls = g.classify();
        assert_eq!(
            cls.most_specific,
            ClassTag::CompleteMultipartite(vec![1, 1, 2])
        );
        assert!(cls.is_almost_tree(2));
        assert_eq!(cls.max_block_excess, 2);
    }

    #[test]
    fn cut_count_is_half_the_subsets() {
        for n in 1..8usize {
            let g = complete(n);
            assert_eq!(g.cut_count(), 1 << (n - 1));
            assert_eq!(g.cuts().count() as u64, g.cut_count());
        }
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }
}
