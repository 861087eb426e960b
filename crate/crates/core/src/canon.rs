//! Canonical forms by individualization and refinement.
//!
//! Vertices are split into an ordered partition that is refined until every
//! cell is stable under "which cells do my edges reach". When a cell remains
//! non-singleton, each of its vertices is individualized in turn and the
//! search recurses. Every discrete leaf induces a labeling; the canonical
//! form is the smallest relabeled edge list over all leaves. Automorphisms
//! found along the way (two leaves with equal codes) prune sibling branches
//! in the same orbit.
//!
//! Refinement and branching depend only on isomorphism-invariant data, so
//! the set of leaf codes, and hence the minimum, is the same for every
//! relabeling of the input.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};
use crate::util::DisjointSets;

/// Labels are stored as single bytes.
pub const MAX_VERTICES: usize = 255;
pub const DEFAULT_VERTEX_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("{n} vertices exceeds the canonical-form limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("uniformity {0} does not fit the encoding")]
    UniformityTooLarge(usize),
}

/// Isomorphism-invariant encoding: `[k, n]` followed by the sorted,
/// relabeled edge list, one byte per vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// The hypergraph spelled out by the form.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let k = usize::from(self.0[0]);
        let n = usize::from(self.0[1]);
        let edges: Vec<Vec<VertexId>> = self.0[2..]
            .chunks_exact(k)
            .map(|e| e.iter().map(|&b| usize::from(b)).collect())
            .collect();
        Hypergraph::new(k, n, edges).expect("a canonical form encodes a valid hypergraph")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

pub fn canonical_form(g: &Hypergraph) -> Result<CanonicalForm, CanonError> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form with the labeling that attains it (`labeling[v]` is the
/// new label of `v`).
pub fn canonical_labeling(g: &Hypergraph) -> Result<(CanonicalForm, Vec<VertexId>), CanonError> {
    canonical_labeling_with_limit(g, DEFAULT_VERTEX_LIMIT)
}

pub fn canonical_labeling_with_limit(
    g: &Hypergraph,
    limit: usize,
) -> Result<(CanonicalForm, Vec<VertexId>), CanonError> {
    let limit = limit.min(MAX_VERTICES);
    if g.n() > limit {
        return Err(CanonError::TooManyVertices { n: g.n(), limit });
    }
    if g.k() > usize::from(u8::MAX) {
        return Err(CanonError::UniformityTooLarge(g.k()));
    }
    let mut search = Search::new(g);
    let cells = vec![(0..g.n()).collect::<Vec<_>>()];
    search.descend(cells, &mut Vec::new());
    let best = search.best.expect("the search reaches at least one leaf");
    Ok((CanonicalForm(best.code), best.labeling))
}

/// The relabeled hypergraph attaining the canonical form.
pub fn canonical_hypergraph(g: &Hypergraph) -> Result<Hypergraph, CanonError> {
    let (_, labeling) = canonical_labeling(g)?;
    Ok(g.relabel(&labeling))
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool, CanonError> {
    if a.k() != b.k() || a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

struct Leaf {
    code: Vec<u8>,
    labeling: Vec<VertexId>,
}

struct Search<'a> {
    g: &'a Hypergraph,
    incidence: Vec<Vec<usize>>,
    best: Option<Leaf>,
    first: Option<Leaf>,
    // each automorphism as an image table on vertices
    automorphisms: Vec<Vec<VertexId>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Hypergraph) -> Self {
        Self {
            g,
            incidence: g.incidence(),
            best: None,
            first: None,
            automorphisms: Vec::new(),
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<VertexId>>, path: &mut Vec<VertexId>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<VertexId> = Vec::new();
        for i in 0..cells[target].len() {
            let v = cells[target][i];
            if !tried.is_empty() && self.same_orbit(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&x| x != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }

    /// Splits cells by the multiset of cell-index profiles of incident edges
    /// until nothing changes.
    fn refine(&self, cells: &mut Vec<Vec<VertexId>>) {
        let n = self.g.n();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut changed = false;
            let mut next: Vec<Vec<VertexId>> = Vec::with_capacity(cells.len());
            for c in cells.iter() {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<Vec<usize>>, VertexId)> = c
                    .iter()
                    .map(|&v| (self.signature(v, &cell_of), v))
                    .collect();
                keyed.sort();
                let before = next.len();
                let mut start = 0;
                for j in 1..=keyed.len() {
                    if j == keyed.len() || keyed[j].0 != keyed[start].0 {
                        next.push(keyed[start..j].iter().map(|(_, v)| *v).collect());
                        start = j;
                    }
                }
                if next.len() - before > 1 {
                    changed = true;
                }
            }
            *cells = next;
            if !changed {
                return;
            }
        }
    }

    fn signature(&self, v: VertexId, cell_of: &[usize]) -> Vec<Vec<usize>> {
        let mut sig: Vec<Vec<usize>> = self.incidence[v]
            .iter()
            .map(|&e| {
                let mut profile: Vec<usize> = self
                    .g
                    .edge(e)
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|&w| cell_of[w])
                    .collect();
                profile.sort_unstable();
                profile
            })
            .collect();
        sig.sort();
        sig
    }

    fn same_orbit(&self, path: &[VertexId], tried: &[VertexId], v: VertexId) -> bool {
        let mut sets = DisjointSets::new(self.g.n());
        let mut any = false;
        for a in &self.automorphisms {
            if path.iter().all(|&p| a[p] == p) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    sets.union(x, y);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = sets.find(v);
        tried.iter().any(|&t| sets.find(t) == rv)
    }

    fn leaf(&mut self, cells: &[Vec<VertexId>]) {
        let mut labeling = vec![0; self.g.n()];
        for (i, c) in cells.iter().enumerate() {
            labeling[c[0]] = i;
        }
        let code = encode(self.g, &labeling);
        let leaf = Leaf { code, labeling };

        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.code == leaf.code {
                // known^-1 composed with leaf maps v to the vertex sharing its label
                let mut inverse = vec![0; self.g.n()];
                for (v, &l) in known.labeling.iter().enumerate() {
                    inverse[l] = v;
                }
                let auto: Vec<VertexId> = leaf.labeling.iter().map(|&l| inverse[l]).collect();
                if auto.iter().enumerate().any(|(x, &y)| x != y) {
                    self.automorphisms.push(auto);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some(Leaf {
                code: leaf.code.clone(),
                labeling: leaf.labeling.clone(),
            });
        }
        if self.best.as_ref().is_none_or(|b| leaf.code < b.code) {
            self.best = Some(leaf);
        }
    }
}

fn encode(g: &Hypergraph, labeling: &[VertexId]) -> Vec<u8> {
    let k = g.k();
    let mut edges: Vec<Vec<u8>> = g
        .edges()
        .map(|e| {
            let mut r: Vec<u8> = e.iter().map(|&v| labeling[v] as u8).collect();
            r.sort_unstable();
            r
        })
        .collect();
    edges.sort_unstable();
    let mut out = Vec::with_capacity(2 + g.m() * k);
    out.push(k as u8);
    out.push(g.n() as u8);
    for e in edges {
        out.extend(e);
    }
    out
}
