//! Isomorph-free generation of connected hypergraph classes and the
//! brute-force spectral maximizer over a class.
//!
//! Generation grows connected hypergraphs one edge at a time. Each new edge
//! meets the current vertex set in `t >= 1` vertices and brings `k - t`
//! fresh ones. A child is kept only when its canonical parent (the child
//! minus its canonical deletable edge) is isomorphic to the parent that
//! produced it, so every isomorphism class is reached from exactly one
//! parent; isomorphic siblings are removed locally. Filters that survive
//! edge deletion (linearity, power structure, a girth lower bound, the
//! cyclomatic bound) prune whole subtrees.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;
use core::sync::atomic::{AtomicUsize, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::canon::{canonical_form, canonical_labeling, CanonError, CanonicalForm};
use crate::constructions::{self, ConstructionError};
use crate::hypergraph::{Girth, Hypergraph, VertexId};
use crate::spectral::{
    compare_brackets, spectral_radius, Bracket, RadiusOrder, SpectralError, REFINED_TOLERANCE,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumError {
    #[error("unsupported class request: {0}")]
    Unsupported(&'static str),
    #[error("enumeration budget exceeded: more than {limit} {what}")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// Selects a class of connected hypergraphs with a fixed edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFilter {
    pub connected: bool,
    pub cyclomatic: Option<usize>,
    pub linear: Option<bool>,
    pub power: Option<bool>,
    pub girth: Option<Girth>,
}

impl Default for ClassFilter {
    fn default() -> Self {
        Self::connected()
    }
}

impl ClassFilter {
    pub fn connected() -> Self {
        Self {
            connected: true,
            cyclomatic: None,
            linear: None,
            power: None,
            girth: None,
        }
    }

    pub fn cyclic(c: usize) -> Self {
        Self {
            cyclomatic: Some(c),
            ..Self::connected()
        }
    }

    pub fn hypertrees() -> Self {
        Self::cyclic(0)
    }

    pub fn unicyclic() -> Self {
        Self::cyclic(1)
    }

    pub fn bicyclic() -> Self {
        Self::cyclic(2)
    }

    pub fn linear(self, linear: bool) -> Self {
        Self {
            linear: Some(linear),
            ..self
        }
    }

    pub fn power(self, power: bool) -> Self {
        Self {
            power: Some(power),
            ..self
        }
    }

    pub fn girth(self, girth: Girth) -> Self {
        Self {
            girth: Some(girth),
            ..self
        }
    }

    /// Vertex count forced by the cyclomatic number, if one is set.
    pub fn vertex_count(&self, k: usize, m: usize) -> Option<usize> {
        self.cyclomatic.map(|c| (m * (k - 1) + 1).saturating_sub(c))
    }

    pub fn matches(&self, g: &Hypergraph) -> bool {
        (!self.connected || g.is_connected())
            && self.cyclomatic.is_none_or(|c| g.cyclomatic_number() == c)
            && self.linear.is_none_or(|l| g.is_linear() == l)
            && self.power.is_none_or(|p| g.is_power() == p)
            && self.girth.is_none_or(|gi| g.girth() == gi)
    }

    // Necessary conditions inherited by every connected sub-hypergraph
    // obtained by deleting edges.
    fn admits_ancestor(&self, g: &Hypergraph) -> bool {
        let c = g.cyclomatic_number();
        if self.cyclomatic.is_some_and(|target| c > target) {
            return false;
        }
        if self.linear == Some(true) && !g.is_linear() {
            return false;
        }
        if self.power == Some(true) && !g.is_power() {
            return false;
        }
        match self.girth {
            Some(Girth::Infinite) => c == 0,
            Some(Girth::Finite(target)) => g.girth() >= Girth::Finite(target),
            None => true,
        }
    }
}

/// Hard limits; exceeding either is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Candidate children examined over the whole run.
    pub max_nodes: usize,
    /// Isomorphism classes held at any one level.
    pub max_classes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: 5_000_000,
            max_classes: 500_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumOptions {
    pub budget: Budget,
    /// Shuffles the parent order at every level. The output does not change.
    pub shuffle_seed: Option<u64>,
}

struct Node {
    graph: Hypergraph,
    form: CanonicalForm,
}

pub fn enumerate_class(
    k: usize,
    m: usize,
    filter: &ClassFilter,
) -> Result<Vec<Hypergraph>, EnumError> {
    enumerate_class_with(k, m, filter, &EnumOptions::default())
}

/// One representative per isomorphism class, in canonical labeling, sorted
/// by canonical form.
pub fn enumerate_class_with(
    k: usize,
    m: usize,
    filter: &ClassFilter,
    opts: &EnumOptions,
) -> Result<Vec<Hypergraph>, EnumError> {
    Ok(enumerate_nodes(k, m, filter, opts)?
        .into_iter()
        .map(|node| node.graph)
        .collect())
}

fn enumerate_nodes(
    k: usize,
    m: usize,
    filter: &ClassFilter,
    opts: &EnumOptions,
) -> Result<Vec<Node>, EnumError> {
    if !(2..=4).contains(&k) {
        return Err(EnumError::Unsupported("enumeration supports k in 2..=4"));
    }
    if m == 0 {
        return Err(EnumError::Unsupported("classes need at least one edge"));
    }
    if !filter.connected {
        return Err(EnumError::Unsupported(
            "only connected classes are enumerated",
        ));
    }
    let target_n = filter.vertex_count(k, m);
    if target_n.is_some_and(|n| n < k) {
        return Ok(Vec::new());
    }

    let first = Hypergraph::new(k, k, [(0..k).collect::<Vec<_>>()]).unwrap();
    let mut level = Vec::new();
    if filter.admits_ancestor(&first) {
        let form = canonical_form(&first)?;
        level.push(Node { graph: first, form });
    }
    let mut rng = opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
    let examined = AtomicUsize::new(0);
    let grow = Grow {
        filter,
        target_n,
        budget: opts.budget,
        examined: &examined,
    };

    for _ in 1..m {
        if let Some(rng) = rng.as_mut() {
            level.shuffle(rng);
        }
        let batches = par_map(&level, |parent| grow.children(parent));
        let mut next = Vec::new();
        for batch in batches {
            next.extend(batch?);
        }
        next.sort_by(|a, b| a.form.cmp(&b.form));
        debug_assert!(next.windows(2).all(|w| w[0].form != w[1].form));
        if next.len() > opts.budget.max_classes {
            return Err(EnumError::BudgetExceeded {
                what: "classes in one level",
                limit: opts.budget.max_classes,
            });
        }
        level = next;
    }

    level
        .retain(|node| target_n.is_none_or(|n| node.graph.n() == n) && filter.matches(&node.graph));
    Ok(level)
}

struct Grow<'a> {
    filter: &'a ClassFilter,
    target_n: Option<usize>,
    budget: Budget,
    examined: &'a AtomicUsize,
}

impl Grow<'_> {
    fn children(&self, parent: &Node) -> Result<Vec<Node>, EnumError> {
        let g = &parent.graph;
        let k = g.k();
        let n = g.n();
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut out = Vec::new();
        for shared in 1..=k.min(n) {
            let fresh = k - shared;
            if self.target_n.is_some_and(|t| n + fresh > t) {
                continue;
            }
            for subset in combinations(n, shared) {
                if fresh == 0 && g.find_edge(&subset).is_some() {
                    continue;
                }
                let count = self.examined.fetch_add(1, Ordering::Relaxed) + 1;
                if count > self.budget.max_nodes {
                    return Err(EnumError::BudgetExceeded {
                        what: "candidate hypergraphs examined",
                        limit: self.budget.max_nodes,
                    });
                }
                let mut edge = subset;
                edge.extend(n..n + fresh);
                let edges = g.edges().map(<[VertexId]>::to_vec).chain([edge]);
                let child = Hypergraph::new(k, n + fresh, edges.collect::<Vec<_>>())
                    .expect("new edge is distinct and in range");
                if !self.filter.admits_ancestor(&child) {
                    continue;
                }
                let (form, labeling) = canonical_labeling(&child)?;
                if !seen.insert(form.clone()) {
                    continue;
                }
                if canonical_parent(&child, &labeling)? != parent.form {
                    continue;
                }
                out.push(Node {
                    graph: child.relabel(&labeling),
                    form,
                });
            }
        }
        Ok(out)
    }
}

// The child minus the deletable edge whose canonically relabeled vertex
// tuple is largest. Edges in one automorphism orbit give the same tuple, so
// the result is well defined up to isomorphism.
fn canonical_parent(child: &Hypergraph, labeling: &[VertexId]) -> Result<CanonicalForm, EnumError> {
    let mut best: Option<(Vec<VertexId>, Hypergraph)> = None;
    for i in 0..child.m() {
        let Some(rest) = delete_edge(child, i) else {
            continue;
        };
        let mut key: Vec<VertexId> = child.edge(i).iter().map(|&v| labeling[v]).collect();
        key.sort_unstable();
        if best.as_ref().is_none_or(|(b, _)| key > *b) {
            best = Some((key, rest));
        }
    }
    let (_, parent) = best.expect("every connected hypergraph has a deletable edge");
    Ok(canonical_form(&parent)?)
}

/// Removes edge `i` and the vertices only it covered; `None` if what is
/// left is disconnected.
fn delete_edge(g: &Hypergraph, i: usize) -> Option<Hypergraph> {
    let deg = g.degrees();
    let removed = g.edge(i);
    let mut index = vec![usize::MAX; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if !(deg[v] == 1 && removed.contains(&v)) {
            index[v] = next;
            next += 1;
        }
    }
    let edges: Vec<Vec<VertexId>> = g
        .edges()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, e)| e.iter().map(|&v| index[v]).collect())
        .collect();
    let rest = Hypergraph::new(g.k(), next.max(1), edges).ok()?;
    rest.is_connected().then_some(rest)
}

/// All `size`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (size <= n).then(|| (0..size).collect());
    core::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().unwrap();
        let mut i = size;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - size + i {
                c[i] += 1;
                for j in i + 1..size {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(feature = "parallel")]
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Result of maximizing the spectral radius over a class.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxReport {
    /// Canonical forms of every member whose bracket could not be separated
    /// from the best one (one entry when the maximizer is unique).
    pub argmax: Vec<CanonicalForm>,
    /// The same members as hypergraphs, in canonical labeling.
    pub maximizers: Vec<Hypergraph>,
    /// Hull of the maximizers' brackets; `None` for an empty class.
    pub rho_bracket: Option<Bracket>,
    pub class_size: usize,
    /// Gap between the best lower bound and the best excluded upper bound;
    /// `None` when nothing was excluded.
    pub runner_up_gap: Option<f64>,
}

impl MaxReport {
    pub fn is_unique(&self) -> bool {
        self.argmax.len() == 1
    }
}

pub fn argmax_rho(
    k: usize,
    m: usize,
    filter: &ClassFilter,
    tolerance: f64,
) -> Result<MaxReport, EnumError> {
    argmax_rho_with(k, m, filter, tolerance, &EnumOptions::default())
}

pub fn argmax_rho_with(
    k: usize,
    m: usize,
    filter: &ClassFilter,
    tolerance: f64,
    opts: &EnumOptions,
) -> Result<MaxReport, EnumError> {
    let nodes = enumerate_nodes(k, m, filter, opts)?;
    let (graphs, forms): (Vec<_>, Vec<_>) = nodes.into_iter().map(|n| (n.graph, n.form)).unzip();
    argmax_over_forms(&graphs, &forms, tolerance)
}

/// Maximizer among the given (pairwise non-isomorphic) hypergraphs.
pub fn argmax_over(graphs: &[Hypergraph], tolerance: f64) -> Result<MaxReport, EnumError> {
    let forms = graphs
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>, _>>()?;
    argmax_over_forms(graphs, &forms, tolerance)
}

fn argmax_over_forms(
    graphs: &[Hypergraph],
    forms: &[CanonicalForm],
    tolerance: f64,
) -> Result<MaxReport, EnumError> {
    let mut brackets = par_map(graphs, |g| {
        spectral_radius(g, tolerance).map(|r| r.bracket())
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Ok(MaxReport {
            argmax: Vec::new(),
            maximizers: Vec::new(),
            rho_bracket: None,
            class_size: 0,
            runner_up_gap: None,
        });
    }
    let mut contenders = overlapping_best(&brackets);
    if contenders.len() > 1 {
        let refined = par_map(&contenders, |&i| {
            spectral_radius(&graphs[i], REFINED_TOLERANCE).map(|r| r.bracket())
        });
        for (&i, b) in contenders.iter().zip(refined) {
            brackets[i] = b?;
        }
        contenders = overlapping_best(&brackets);
    }
    let best_lower = contenders
        .iter()
        .map(|&i| brackets[i].lower)
        .fold(f64::NEG_INFINITY, f64::max);
    let runner_up = (0..graphs.len())
        .filter(|i| !contenders.contains(i))
        .map(|i| brackets[i].upper)
        .fold(None, |acc: Option<f64>, u| {
            Some(acc.map_or(u, |a| a.max(u)))
        });
    let hull = Bracket {
        lower: contenders
            .iter()
            .map(|&i| brackets[i].lower)
            .fold(f64::INFINITY, f64::min),
        upper: contenders
            .iter()
            .map(|&i| brackets[i].upper)
            .fold(f64::NEG_INFINITY, f64::max),
    };
    contenders.sort_by(|&a, &b| forms[a].cmp(&forms[b]));
    Ok(MaxReport {
        argmax: contenders.iter().map(|&i| forms[i].clone()).collect(),
        maximizers: contenders.iter().map(|&i| graphs[i].clone()).collect(),
        rho_bracket: Some(hull),
        class_size: graphs.len(),
        runner_up_gap: runner_up.map(|u| (best_lower - u).max(0.0)),
    })
}

// Indices whose upper bound reaches the largest lower bound.
fn overlapping_best(brackets: &[Bracket]) -> Vec<usize> {
    let best_lower = brackets
        .iter()
        .map(|b| b.lower)
        .fold(f64::NEG_INFINITY, f64::max);
    (0..brackets.len())
        .filter(|&i| brackets[i].upper >= best_lower)
        .collect()
}

/// A vertex sharing an edge with every other vertex, if any (the smallest
/// such index).
pub fn dominating_vertex(g: &Hypergraph) -> Option<VertexId> {
    let inc = g.incidence();
    let mut mark = vec![usize::MAX; g.n()];
    (0..g.n()).find(|&u| {
        mark[u] = u;
        let mut reached = 1;
        for &e in &inc[u] {
            for &w in g.edge(e) {
                if mark[w] != u {
                    mark[w] = u;
                    reached += 1;
                }
            }
        }
        reached == g.n()
    })
}

/// One row of the bicyclic comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureRow {
    pub m: usize,
    pub bl1: Bracket,
    pub bl2: Bracket,
    /// Absent for `m < 5`.
    pub bp: Option<Bracket>,
    /// Family names from largest to smallest radius, joined by `>` (brackets
    /// disjoint), `=` (isomorphic hypergraphs) or `~` (undecided).
    pub ordering: String,
}

impl ConjectureRow {
    pub fn decided(&self) -> bool {
        !self.ordering.contains('~')
    }
}

pub fn conjecture_report(
    k: usize,
    m_range: RangeInclusive<usize>,
    tolerance: f64,
) -> Result<Vec<ConjectureRow>, EnumError> {
    if *m_range.start() < 4 {
        return Err(EnumError::Unsupported("the bicyclic families need m >= 4"));
    }
    m_range.map(|m| conjecture_row(k, m, tolerance)).collect()
}

fn conjecture_row(k: usize, m: usize, tolerance: f64) -> Result<ConjectureRow, EnumError> {
    let mut entries: Vec<(&'static str, Hypergraph)> = vec![
        ("BL1", constructions::b_l1(m, k)?),
        ("BL2", constructions::b_l2(m, k)?),
    ];
    if m >= 5 {
        entries.push(("BP", constructions::b_p(m, k)?));
    }
    let mut brackets = entries
        .iter()
        .map(|(_, g)| spectral_radius(g, tolerance).map(|r| r.bracket()))
        .collect::<Result<Vec<_>, _>>()?;
    let forms = entries
        .iter()
        .map(|(_, g)| canonical_form(g))
        .collect::<Result<Vec<_>, _>>()?;

    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| {
        brackets[b]
            .midpoint()
            .partial_cmp(&brackets[a].midpoint())
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    let mut ordering = String::from(entries[order[0]].0);
    for w in order.windows(2) {
        let (a, b) = (w[0], w[1]);
        let sep = if forms[a] == forms[b] {
            '='
        } else {
            let (o, ra, rb) =
                compare_brackets(&entries[a].1, brackets[a], &entries[b].1, brackets[b])?;
            brackets[a] = ra;
            brackets[b] = rb;
            match o {
                RadiusOrder::Greater => '>',
                _ => '~',
            }
        };
        ordering.push(sep);
        ordering.push_str(entries[b].0);
    }
    Ok(ConjectureRow {
        m,
        bl1: brackets[0],
        bl2: brackets[1],
        bp: brackets.get(2).copied(),
        ordering,
    })
}
