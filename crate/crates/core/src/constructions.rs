//! Simple graphs, k-th powers and the named extremal families.
//!
//! Labeling is deterministic everywhere: base-graph vertices keep their
//! indices, fresh padding vertices follow in edge order, and attached
//! hyperstars get their leaves numbered after the host's vertices.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};
use crate::transforms;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("k-th powers need k >= 3, got {0}")]
    UniformityTooSmall(usize),
    #[error("invalid parameters: {0}")]
    Precondition(&'static str),
    #[error("simple graph edge ({0}, {1}) is a loop")]
    Loop(VertexId, VertexId),
    #[error("simple graph edge ({0}, {1}) appears twice")]
    DuplicatePair(VertexId, VertexId),
    #[error("simple graph edge ({0}, {1}) is out of range for n = {2}")]
    OutOfRange(VertexId, VertexId, usize),
}

/// An ordinary graph without loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, ConstructionError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(ConstructionError::Loop(a, b));
            }
            if a >= n || b >= n {
                return Err(ConstructionError::OutOfRange(a, b, n));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(ConstructionError::DuplicatePair(w[0].0, w[0].1));
        }
        Ok(Self { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// `K_{1,m}` with vertex 0 as the center.
    pub fn star(m: usize) -> Self {
        Self::new(m + 1, (1..=m).map(|i| (0, i))).unwrap()
    }

    /// The path `0 - 1 - ... - m`.
    pub fn path(m: usize) -> Self {
        Self::new(m + 1, (0..m).map(|i| (i, i + 1))).unwrap()
    }

    pub fn cycle(g: usize) -> Result<Self, ConstructionError> {
        if g < 3 {
            return Err(ConstructionError::Precondition(
                "a cycle needs at least 3 vertices",
            ));
        }
        Self::new(g, (0..g).map(|i| (i, (i + 1) % g)))
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    /// `K_4` minus the edge `{2, 3}`; vertices 0 and 1 have degree 3.
    pub fn k4_minus_edge() -> Self {
        Self::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    /// A cycle `C_g` on `0..g` with `m - g` pendant edges hung on vertex 0.
    pub fn cycle_with_star(m: usize, g: usize) -> Result<Self, ConstructionError> {
        if g < 3 || m < g {
            return Err(ConstructionError::Precondition("need g >= 3 and m >= g"));
        }
        let cycle = (0..g).map(|i| (i, (i + 1) % g));
        let star = (g..m).map(|i| (0, i));
        Self::new(m, cycle.chain(star))
    }

    /// View as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(2, self.n.max(1), self.edges.iter().map(|&(a, b)| [a, b]))
            .expect("simple graphs are valid 2-uniform hypergraphs")
    }

    /// Reads a 2-uniform hypergraph as a simple graph.
    pub fn from_hypergraph(g: &Hypergraph) -> Result<Self, ConstructionError> {
        if g.k() != 2 {
            return Err(ConstructionError::Precondition(
                "base graphs must be 2-uniform",
            ));
        }
        Self::new(g.n(), g.edges().map(|e| (e[0], e[1])))
    }
}

fn check_k(k: usize) -> Result<(), ConstructionError> {
    if k < 3 {
        Err(ConstructionError::UniformityTooSmall(k))
    } else {
        Ok(())
    }
}

/// The k-th power: every base edge gains `k - 2` fresh vertices.
pub fn power(base: &SimpleGraph, k: usize) -> Result<Hypergraph, ConstructionError> {
    check_k(k)?;
    let pad = k - 2;
    let n = base.n() + base.m() * pad;
    let edges = base.edges().iter().enumerate().map(|(i, &(a, b))| {
        let start = base.n() + i * pad;
        let mut e = vec![a, b];
        e.extend(start..start + pad);
        e
    });
    Ok(Hypergraph::new(k, n.max(1), edges.collect::<Vec<_>>()).expect("powers are simple"))
}

pub fn hyperstar(k: usize, m: usize) -> Result<Hypergraph, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::Precondition("a hyperstar needs m >= 1"));
    }
    power(&SimpleGraph::star(m), k)
}

pub fn loose_path(k: usize, m: usize) -> Result<Hypergraph, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::Precondition("a loose path needs m >= 1"));
    }
    power(&SimpleGraph::path(m), k)
}

/// `power(S_{m,g}, k)`: a linear cycle of length `g` with a hyperstar of
/// `m - g` edges centered at cycle vertex 0.
pub fn s_power(m: usize, g: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    power(&SimpleGraph::cycle_with_star(m, g)?, k)
}

/// Hangs `count` pendant edges (a hyperstar centered at `host`) on `host`.
pub fn attach_hyperstar(
    g: &Hypergraph,
    host: VertexId,
    count: usize,
) -> Result<Hypergraph, ConstructionError> {
    if host >= g.n() {
        return Err(ConstructionError::Precondition(
            "attachment vertex out of range",
        ));
    }
    if count == 0 {
        return Ok(g.clone());
    }
    let star = hyperstar(g.k(), count)?;
    Ok(transforms::glue(g, host, &star, 0).expect("uniformities agree"))
}

/// Two edges sharing exactly the vertices 0 and 1.
pub fn shared_pair(k: usize) -> Result<Hypergraph, ConstructionError> {
    check_k(k)?;
    let e1: Vec<VertexId> = (0..k).collect();
    let mut e2 = vec![0, 1];
    e2.extend(k..2 * k - 2);
    Ok(Hypergraph::new(k, 2 * k - 2, [e1, e2]).unwrap())
}

/// The unicyclic maximizer: the shared-pair hypergraph with a hyperstar of
/// `m - 2` edges centered at shared vertex 0.
pub fn unicyclic_max(m: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    if m < 2 {
        return Err(ConstructionError::Precondition(
            "unicyclic_max needs m >= 2",
        ));
    }
    attach_hyperstar(&shared_pair(k)?, 0, m - 2)
}

/// Vertex roles in [`g5`].
pub mod g5_vertices {
    use crate::hypergraph::VertexId;

    /// The three degree-2 vertices of the central edge.
    pub const V: [VertexId; 3] = [0, 1, 2];

    /// The degree-3 common neighbor; it sits right after the central edge.
    pub fn w(k: usize) -> VertexId {
        k
    }
}

/// Central edge `{0..k}` plus three edges joining vertices 0, 1, 2 to a
/// common outside vertex `w = k`, each padded with `k - 2` fresh vertices.
pub fn g5(k: usize) -> Result<Hypergraph, ConstructionError> {
    check_k(k)?;
    let w = g5_vertices::w(k);
    let mut edges: Vec<Vec<VertexId>> = vec![(0..k).collect()];
    for (i, &v) in g5_vertices::V.iter().enumerate() {
        let start = k + 1 + i * (k - 2);
        let mut e = vec![v, w];
        e.extend(start..start + k - 2);
        edges.push(e);
    }
    Ok(Hypergraph::new(k, 4 * k - 5, edges).unwrap())
}

/// [`g5`] with a hyperstar of `m - 4` edges centered at `w`.
pub fn b_l1(m: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    if m < 4 {
        return Err(ConstructionError::Precondition("B_L1 needs m >= 4"));
    }
    attach_hyperstar(&g5(k)?, g5_vertices::w(k), m - 4)
}

/// [`g5`] with a hyperstar of `m - 4` edges centered at `v_1` (vertex 0).
pub fn b_l2(m: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    b_l2_at(m, k, 0)
}

/// [`b_l2`] with the hyperstar on the chosen degree-2 vertex `V[which]`.
pub fn b_l2_at(m: usize, k: usize, which: usize) -> Result<Hypergraph, ConstructionError> {
    if m < 4 {
        return Err(ConstructionError::Precondition("B_L2 needs m >= 4"));
    }
    let host = *g5_vertices::V
        .get(which)
        .ok_or(ConstructionError::Precondition(
            "G5 has three degree-2 vertices",
        ))?;
    attach_hyperstar(&g5(k)?, host, m - 4)
}

/// `power(K_4 - e, k)` with a hyperstar of `m - 5` edges centered at the
/// degree-3 vertex 0.
pub fn b_p(m: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    if m < 5 {
        return Err(ConstructionError::Precondition("B_P needs m >= 5"));
    }
    let g10 = power(&SimpleGraph::k4_minus_edge(), k)?;
    attach_hyperstar(&g10, 0, m - 5)
}
