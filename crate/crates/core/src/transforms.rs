//! Edge moving, gluing at a vertex, and relocation of a rooted piece.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("edge moving requires a connected hypergraph")]
    NotConnected,
    #[error("edge index {0} is out of range")]
    EdgeOutOfRange(usize),
    #[error("edge {0} is moved more than once")]
    RepeatedEdge(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(VertexId),
    #[error("all moves must share one target vertex")]
    MixedTargets,
    #[error("vertex {vertex} is not in edge {edge}")]
    SourceNotInEdge { edge: usize, vertex: VertexId },
    #[error("target vertex {vertex} already lies in edge {edge}")]
    TargetInEdge { edge: usize, vertex: VertexId },
    #[error("the moved edges produce a multiple edge")]
    MultipleEdges,
    #[error("the transformed hypergraph is disconnected")]
    DisconnectedResult,
    #[error("cannot glue a {0}-uniform hypergraph to a {1}-uniform one")]
    UniformityMismatch(usize, usize),
    #[error("relocation needs two distinct host vertices")]
    SameHost,
}

/// Replace edge `edge_index` by `(e \ {from_vertex}) ∪ {to_vertex}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeMove {
    pub edge_index: usize,
    pub from_vertex: VertexId,
    pub to_vertex: VertexId,
}

/// Moves each listed edge off its `from_vertex` onto the common `to_vertex`.
///
/// The input must be connected, and the result must be simple and
/// connected; violations are reported rather than returned.
pub fn move_edges(g: &Hypergraph, moves: &[EdgeMove]) -> Result<Hypergraph, TransformError> {
    let Some(first) = moves.first() else {
        return Ok(g.clone());
    };
    if !g.is_connected() {
        return Err(TransformError::NotConnected);
    }
    let target = first.to_vertex;
    if target >= g.n() {
        return Err(TransformError::VertexOutOfRange(target));
    }
    let mut replaced = vec![None; g.m()];
    for mv in moves {
        if mv.to_vertex != target {
            return Err(TransformError::MixedTargets);
        }
        let edge = g
            .edges()
            .nth(mv.edge_index)
            .ok_or(TransformError::EdgeOutOfRange(mv.edge_index))?;
        if replaced[mv.edge_index].is_some() {
            return Err(TransformError::RepeatedEdge(mv.edge_index));
        }
        if !edge.contains(&mv.from_vertex) {
            return Err(TransformError::SourceNotInEdge {
                edge: mv.edge_index,
                vertex: mv.from_vertex,
            });
        }
        if edge.contains(&target) {
            return Err(TransformError::TargetInEdge {
                edge: mv.edge_index,
                vertex: target,
            });
        }
        let moved: Vec<VertexId> = edge
            .iter()
            .map(|&v| if v == mv.from_vertex { target } else { v })
            .collect();
        replaced[mv.edge_index] = Some(moved);
    }
    let edges: Vec<Vec<VertexId>> = g
        .edges()
        .zip(replaced)
        .map(|(e, r)| r.unwrap_or_else(|| e.to_vec()))
        .collect();
    let out = Hypergraph::new(g.k(), g.n(), edges).map_err(|e| match e {
        HypergraphError::DuplicateEdge { .. } => TransformError::MultipleEdges,
        other => unreachable!("moving keeps edges well formed: {other}"),
    })?;
    if !out.is_connected() {
        return Err(TransformError::DisconnectedResult);
    }
    Ok(out)
}

/// Identifies vertex `u` of `g2` with vertex `v` of `g1`.
///
/// `g1` keeps its labels; the other vertices of `g2` follow in their
/// original order.
pub fn glue(
    g1: &Hypergraph,
    v: VertexId,
    g2: &Hypergraph,
    u: VertexId,
) -> Result<Hypergraph, TransformError> {
    if v >= g1.n() {
        return Err(TransformError::VertexOutOfRange(v));
    }
    if u >= g2.n() {
        return Err(TransformError::VertexOutOfRange(u));
    }
    if g1.k() != g2.k() && g2.m() > 0 {
        return Err(TransformError::UniformityMismatch(g1.k(), g2.k()));
    }
    let map = glue_map(g1.n(), v, g2.n(), u);
    let edges = g1
        .edges()
        .map(<[VertexId]>::to_vec)
        .chain(g2.edges().map(|e| e.iter().map(|&x| map[x]).collect()));
    Ok(
        Hypergraph::new(g1.k(), g1.n() + g2.n() - 1, edges.collect::<Vec<_>>())
            .expect("glued pieces share only one vertex"),
    )
}

fn glue_map(n1: usize, v: VertexId, n2: usize, u: VertexId) -> Vec<VertexId> {
    let mut next = n1;
    (0..n2)
        .map(|x| {
            if x == u {
                v
            } else {
                next += 1;
                next - 1
            }
        })
        .collect()
}

/// Returns `(G1(v2) * G2(u), G1(v1) * G2(u))`, numbered alike so that vertex
/// indices mean the same thing in both.
pub fn relocate(
    g1: &Hypergraph,
    v1: VertexId,
    v2: VertexId,
    g2: &Hypergraph,
    u: VertexId,
) -> Result<(Hypergraph, Hypergraph), TransformError> {
    if v1 == v2 {
        return Err(TransformError::SameHost);
    }
    Ok((glue(g1, v2, g2, u)?, glue(g1, v1, g2, u)?))
}
