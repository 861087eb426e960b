//! The k-uniform hypergraph type.
//!
//! Vertices are dense indices `0..n`. Edges are stored sorted within and
//! sorted lexicographically across, so two hypergraphs with the same edge
//! set compare equal regardless of how they were built. Isolated vertices
//! are allowed; multiple edges are not.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::constructions::SimpleGraph;
use crate::util::DisjointSets;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("a hypergraph needs at least one vertex")]
    NoVertices,
    #[error("edge {index} has {found} vertices, expected {expected}")]
    WrongEdgeSize {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: VertexId },
    #[error("edge {index} uses vertex {vertex}, but n = {n}")]
    VertexOutOfRange {
        index: usize,
        vertex: VertexId,
        n: usize,
    },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
}

/// Length of the shortest cycle, or `Infinite` for acyclic hypergraphs.
///
/// `Finite` sorts before `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    pub cyclomatic: usize,
    pub hypertree: bool,
    pub unicyclic: bool,
    pub bicyclic: bool,
    pub linear: bool,
    pub power: bool,
    pub girth: Girth,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    // m * k vertex ids, one sorted block of k per edge, blocks in lexicographic order
    verts: Vec<VertexId>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("k", &self.k)
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Hypergraph {
    /// Validates and normalizes an edge list.
    pub fn new<I, E>(k: usize, n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[VertexId]>,
    {
        if k < 2 {
            return Err(HypergraphError::UniformityTooSmall(k));
        }
        if n == 0 {
            return Err(HypergraphError::NoVertices);
        }
        let mut blocks: Vec<(Vec<VertexId>, usize)> = Vec::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let edge = edge.as_ref();
            if edge.len() != k {
                return Err(HypergraphError::WrongEdgeSize {
                    index,
                    expected: k,
                    found: edge.len(),
                });
            }
            let mut sorted = edge.to_vec();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::RepeatedVertex {
                        index,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&vertex) = sorted.last().filter(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
            }
            blocks.push((sorted, index));
        }
        blocks.sort();
        for w in blocks.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(HypergraphError::DuplicateEdge {
                    index: w[0].1.max(w[1].1),
                });
            }
        }
        let verts = blocks.into_iter().flat_map(|(e, _)| e).collect();
        Ok(Self { k, n, verts })
    }

    /// `n` isolated vertices, no edges.
    pub fn edgeless(k: usize, n: usize) -> Result<Self, HypergraphError> {
        Self::new(k, n, core::iter::empty::<[VertexId; 0]>())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.verts.len() / self.k
    }

    pub fn edge(&self, i: usize) -> &[VertexId] {
        &self.verts[i * self.k..(i + 1) * self.k]
    }

    pub fn edges(&self) -> core::slice::ChunksExact<'_, VertexId> {
        self.verts.chunks_exact(self.k)
    }

    /// Index of `edge` (given sorted) in the edge list.
    pub fn find_edge(&self, edge: &[VertexId]) -> Option<usize> {
        // edges are sorted, so binary search over blocks
        let m = self.m();
        let (mut lo, mut hi) = (0, m);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(edge) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn degree(&self, v: VertexId) -> usize {
        assert!(v < self.n, "vertex {v} out of range (n = {})", self.n);
        self.verts.iter().filter(|&&u| u == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &v in &self.verts {
            d[v] += 1;
        }
        d
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Applies `map` (old index to new index, a permutation of `0..n`).
    pub fn relabel(&self, map: &[VertexId]) -> Self {
        assert_eq!(map.len(), self.n, "relabeling must cover every vertex");
        let edges: Vec<Vec<VertexId>> = self
            .edges()
            .map(|e| e.iter().map(|&v| map[v]).collect())
            .collect();
        Self::new(self.k, self.n, edges).expect("a permutation preserves validity")
    }

    /// Adds one edge, returning a new hypergraph.
    pub fn with_edge(&self, edge: &[VertexId]) -> Result<Self, HypergraphError> {
        let edges = self
            .edges()
            .map(<[VertexId]>::to_vec)
            .chain([edge.to_vec()]);
        Self::new(self.k, self.n, edges.collect::<Vec<_>>())
    }

    /// Maximal walk-connected vertex classes, ordered by their smallest vertex.
    /// Isolated vertices form singleton classes.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut sets = DisjointSets::new(self.n);
        for e in self.edges() {
            for &v in &e[1..] {
                sets.union(e[0], v);
            }
        }
        let mut slot = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for v in 0..self.n {
            let r = sets.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `m(k-1) - n + l`, where `l` counts components (isolated vertices included).
    pub fn cyclomatic_number(&self) -> usize {
        let l = self.components().len();
        // always nonnegative: each edge merges at most k-1 classes
        self.m() * (self.k - 1) + l - self.n
    }

    /// Shortest cycle length, computed as half the girth of the bipartite
    /// vertex-edge incidence graph.
    pub fn girth(&self) -> Girth {
        let n = self.n;
        let m = self.m();
        let nodes = n + m;
        let mut adj = vec![Vec::new(); nodes];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                adj[v].push(n + i);
                adj[n + i].push(v);
            }
        }
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; nodes];
        let mut parent = vec![usize::MAX; nodes];
        let mut queue = VecDeque::new();
        for root in 0..nodes {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(a) = queue.pop_front() {
                // nothing shorter can be closed from here
                if 2 * dist[a] >= best {
                    break;
                }
                for &b in &adj[a] {
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        parent[b] = a;
                        queue.push_back(b);
                    } else if parent[a] != b {
                        best = best.min(dist[a] + dist[b] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best / 2)
        }
    }

    /// Largest number of vertices shared by two distinct edges (0 when m < 2).
    pub fn max_pair_intersection(&self) -> usize {
        self.intersection_sizes().max().unwrap_or(0)
    }

    fn intersection_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        let m = self.m();
        (0..m).flat_map(move |i| {
            (i + 1..m).map(move |j| sorted_intersection_len(self.edge(i), self.edge(j)))
        })
    }

    pub fn is_linear(&self) -> bool {
        self.max_pair_intersection() <= 1
    }

    /// Every pair of distinct edges meets in 0 or exactly `s` vertices.
    pub fn is_s_hypergraph(&self, s: usize) -> bool {
        self.intersection_sizes().all(|t| t == 0 || t == s)
    }

    /// Recovers the base graph if this hypergraph is a k-th power.
    ///
    /// A hypergraph with `k >= 3` is a power iff it is linear and no edge
    /// holds more than two vertices of degree at least 2. The base takes,
    /// per edge, its high-degree vertices topped up with the edge's
    /// lowest-index degree-1 vertices; isolated vertices carry over.
    /// Returns `None` for `k < 3`.
    pub fn power_base(&self) -> Option<SimpleGraph> {
        if self.k < 3 || !self.is_linear() {
            return None;
        }
        let deg = self.degrees();
        let mut pairs = Vec::with_capacity(self.m());
        for e in self.edges() {
            let mut high = e.iter().copied().filter(|&v| deg[v] >= 2);
            let mut low = e.iter().copied().filter(|&v| deg[v] == 1);
            let mut pick: Vec<VertexId> = high.by_ref().take(3).collect();
            if pick.len() > 2 {
                return None;
            }
            while pick.len() < 2 {
                pick.push(low.next().expect("k >= 3 leaves room for padding"));
            }
            pick.sort_unstable();
            pairs.push((pick[0], pick[1]));
        }
        let mut keep = vec![false; self.n];
        for &(a, b) in &pairs {
            keep[a] = true;
            keep[b] = true;
        }
        for v in 0..self.n {
            if deg[v] == 0 {
                keep[v] = true;
            }
        }
        let mut index = vec![usize::MAX; self.n];
        let mut count = 0;
        for v in 0..self.n {
            if keep[v] {
                index[v] = count;
                count += 1;
            }
        }
        let edges = pairs.into_iter().map(|(a, b)| (index[a], index[b]));
        Some(SimpleGraph::new(count, edges).expect("linearity keeps the base simple"))
    }

    pub fn is_power(&self) -> bool {
        self.power_base().is_some()
    }

    pub fn classify(&self) -> Classification {
        let connected = self.is_connected();
        let cyclomatic = self.cyclomatic_number();
        Classification {
            connected,
            cyclomatic,
            hypertree: connected && cyclomatic == 0,
            unicyclic: connected && cyclomatic == 1,
            bicyclic: connected && cyclomatic == 2,
            linear: self.is_linear(),
            power: self.is_power(),
            girth: self.girth(),
        }
    }
}

fn sorted_intersection_len(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
