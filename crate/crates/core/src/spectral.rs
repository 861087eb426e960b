//! Spectral radius and Perron vector of the adjacency tensor.
//!
//! The order-k tensor is never built. Its action on `x` is the edge sum
//!
//! ```text
//! (A x^{k-1})_u = sum over edges e containing u of prod_{w in e, w != u} x_w
//! ```
//!
//! which already accounts for the `1/(k-1)!` entries. The solver iterates on
//! the shifted tensor `A + s I` (`s = 1` by default), whose positive diagonal
//! makes the min/max Collatz-Wielandt ratios converge for connected inputs.
//! Every iterate yields a rigorous bracket `[lower, upper]` for `rho(A)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::util::{powi, root};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Tolerance used to re-solve when two brackets overlap.
pub const REFINED_TOLERANCE: f64 = 1e-13;
pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("hypergraph is disconnected; use spectral_radius_any")]
    Disconnected,
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
    #[error("no convergence after {iterations} iterations (bracket width {width:e})")]
    IterationCap { iterations: usize, width: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lower: f64,
    pub upper: f64,
}

impl Bracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn overlaps(&self, other: &Bracket) -> bool {
        self.lower <= other.upper && other.lower <= self.upper
    }

    /// `Some` only when the brackets are disjoint.
    pub fn strict_cmp(&self, other: &Bracket) -> Option<Ordering> {
        if self.lower > other.upper {
            Some(Ordering::Greater)
        } else if self.upper < other.lower {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerronResult {
    /// Midpoint of `[lower, upper]`.
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
    /// Unit k-norm; strictly positive for connected inputs.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

impl PerronResult {
    pub fn bracket(&self) -> Bracket {
        Bracket {
            lower: self.lower,
            upper: self.upper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub tolerance: f64,
    pub max_iterations: usize,
    pub shift: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            shift: 1.0,
        }
    }
}

impl SolverOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self {
            tolerance,
            ..Self::default()
        }
    }
}

fn check_len(g: &Hypergraph, x: &[f64]) -> Result<(), SpectralError> {
    if x.len() != g.n() {
        return Err(SpectralError::LengthMismatch {
            expected: g.n(),
            found: x.len(),
        });
    }
    Ok(())
}

/// `A x^{k-1}` as an edge sum.
pub fn apply(g: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, SpectralError> {
    check_len(g, x)?;
    let mut out = vec![0.0; g.n()];
    apply_into(g, x, &mut out);
    Ok(out)
}

// Per edge, the product of all-but-one entries comes from prefix and suffix
// products, so zero entries are handled exactly and nothing is divided.
fn apply_into(g: &Hypergraph, x: &[f64], out: &mut [f64]) {
    out.fill(0.0);
    let k = g.k();
    let mut prefix = vec![1.0; k + 1];
    for e in g.edges() {
        for (i, &v) in e.iter().enumerate() {
            prefix[i + 1] = prefix[i] * x[v];
        }
        let mut suffix = 1.0;
        for i in (0..k).rev() {
            out[e[i]] += prefix[i] * suffix;
            suffix *= x[e[i]];
        }
    }
}

/// `A x^k = k * sum over edges of the product of the edge's entries`.
pub fn rayleigh(g: &Hypergraph, x: &[f64]) -> Result<f64, SpectralError> {
    check_len(g, x)?;
    let total: f64 = g
        .edges()
        .map(|e| e.iter().map(|&v| x[v]).product::<f64>())
        .sum();
    Ok(g.k() as f64 * total)
}

/// `max_u |(A x^{k-1})_u - lambda x_u^{k-1}|`.
pub fn residual(g: &Hypergraph, x: &[f64], lambda: f64) -> Result<f64, SpectralError> {
    let ax = apply(g, x)?;
    Ok(ax
        .iter()
        .zip(x)
        .map(|(&a, &xu)| libm::fabs(a - lambda * powi(xu, g.k() - 1)))
        .fold(0.0, f64::max))
}

fn normalize_k(x: &mut [f64], k: usize) {
    let norm = root(x.iter().map(|&v| powi(v, k)).sum::<f64>(), k);
    for v in x.iter_mut() {
        *v /= norm;
    }
}

fn uniform_vector(n: usize, k: usize) -> Vec<f64> {
    vec![1.0 / root(n as f64, k); n]
}

fn edgeless_result(g: &Hypergraph) -> PerronResult {
    PerronResult {
        rho: 0.0,
        lower: 0.0,
        upper: 0.0,
        vector: uniform_vector(g.n(), g.k()),
        residual: 0.0,
        iterations: 0,
    }
}

pub fn spectral_radius(g: &Hypergraph, tolerance: f64) -> Result<PerronResult, SpectralError> {
    spectral_radius_with(g, &SolverOptions::with_tolerance(tolerance))
}

/// Bracketed power iteration on `A + shift * I` for a connected hypergraph.
///
/// Stops once the Collatz-Wielandt bracket is narrower than the tolerance.
/// Edgeless input returns `rho = 0` without iterating.
pub fn spectral_radius_with(
    g: &Hypergraph,
    opts: &SolverOptions,
) -> Result<PerronResult, SpectralError> {
    if opts.tolerance.is_nan() || opts.tolerance <= 0.0 {
        return Err(SpectralError::NonPositiveTolerance(opts.tolerance));
    }
    if g.m() == 0 {
        return Ok(edgeless_result(g));
    }
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let n = g.n();
    let k = g.k();
    let shift = opts.shift;
    let mut x = uniform_vector(n, k);
    let mut y = vec![0.0; n];
    let mut width = f64::INFINITY;
    for iteration in 0..opts.max_iterations {
        apply_into(g, &x, &mut y);
        let mut lo = f64::INFINITY;
        let mut hi = 0.0_f64;
        for (yu, &xu) in y.iter_mut().zip(&x) {
            let xp = powi(xu, k - 1);
            *yu += shift * xp;
            let ratio = *yu / xp;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        width = hi - lo;
        if width <= opts.tolerance {
            let lower = (lo - shift).max(0.0);
            let upper = hi - shift;
            let rho = 0.5 * (lower + upper);
            let residual = residual(g, &x, rho)?;
            return Ok(PerronResult {
                rho,
                lower,
                upper,
                vector: x,
                residual,
                iterations: iteration + 1,
            });
        }
        for (xu, &yu) in x.iter_mut().zip(&y) {
            *xu = root(yu, k - 1);
        }
        normalize_k(&mut x, k);
    }
    Err(SpectralError::IterationCap {
        iterations: opts.max_iterations,
        width,
    })
}

/// Spectral radius of a possibly disconnected hypergraph: the largest
/// component value, with that component's Perron vector padded by zeros.
pub fn spectral_radius_any(g: &Hypergraph, tolerance: f64) -> Result<PerronResult, SpectralError> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(SpectralError::NonPositiveTolerance(tolerance));
    }
    if g.m() == 0 || g.is_connected() {
        return spectral_radius(g, tolerance);
    }
    let inc = g.incidence();
    let mut best: Option<(PerronResult, Vec<usize>)> = None;
    for comp in g.components() {
        if comp.len() == 1 && inc[comp[0]].is_empty() {
            continue;
        }
        let sub = induced(g, &comp);
        let res = spectral_radius(&sub, tolerance)?;
        if best.as_ref().is_none_or(|(b, _)| res.rho > b.rho) {
            best = Some((res, comp));
        }
    }
    let (res, comp) = best.expect("m > 0 means some component has an edge");
    let mut vector = vec![0.0; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        vector[v] = res.vector[i];
    }
    let residual = residual(g, &vector, res.rho)?;
    Ok(PerronResult {
        vector,
        residual,
        ..res
    })
}

fn induced(g: &Hypergraph, comp: &[usize]) -> Hypergraph {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<Vec<usize>> = g
        .edges()
        .filter(|e| index[e[0]] != usize::MAX)
        .map(|e| e.iter().map(|&v| index[v]).collect())
        .collect();
    Hypergraph::new(g.k(), comp.len(), edges).expect("a component is a valid hypergraph")
}

/// Outcome of comparing two spectral radii by their brackets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusOrder {
    Greater,
    Less,
    /// Brackets still overlap at [`REFINED_TOLERANCE`].
    Undecided,
}

/// Compares `rho(a)` with `rho(b)`. Brackets that overlap at `tolerance`
/// are re-solved at [`REFINED_TOLERANCE`] before giving up.
pub fn compare_radii(
    a: &Hypergraph,
    b: &Hypergraph,
    tolerance: f64,
) -> Result<(RadiusOrder, Bracket, Bracket), SpectralError> {
    let ra = spectral_radius_any(a, tolerance)?.bracket();
    let rb = spectral_radius_any(b, tolerance)?.bracket();
    compare_brackets(a, ra, b, rb)
}

/// Like [`compare_radii`] when the brackets are already known.
pub fn compare_brackets(
    a: &Hypergraph,
    ra: Bracket,
    b: &Hypergraph,
    rb: Bracket,
) -> Result<(RadiusOrder, Bracket, Bracket), SpectralError> {
    let order = |x: &Bracket, y: &Bracket| match x.strict_cmp(y) {
        Some(Ordering::Greater) => Some(RadiusOrder::Greater),
        Some(Ordering::Less) => Some(RadiusOrder::Less),
        _ => None,
    };
    if let Some(o) = order(&ra, &rb) {
        return Ok((o, ra, rb));
    }
    let ra = refine(a, ra)?;
    let rb = refine(b, rb)?;
    Ok((order(&ra, &rb).unwrap_or(RadiusOrder::Undecided), ra, rb))
}

fn refine(g: &Hypergraph, current: Bracket) -> Result<Bracket, SpectralError> {
    if current.width() <= REFINED_TOLERANCE {
        return Ok(current);
    }
    Ok(spectral_radius_any(g, REFINED_TOLERANCE)?.bracket())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hyperstar;

    fn single(k: usize) -> Hypergraph {
        Hypergraph::new(k, k, [(0..k).collect::<Vec<_>>()]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let g = single(3);
        assert_eq!(apply(&g, &[1.0, 1.0, 1.0]).unwrap(), [1.0, 1.0, 1.0]);
        assert_eq!(apply(&g, &[2.0, 3.0, 5.0]).unwrap(), [15.0, 10.0, 6.0]);
        let s = hyperstar(3, 2).unwrap();
        let out = apply(&s, &[1.0; 5]).unwrap();
        assert_eq!(out, [2.0, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(
            apply(&g, &[1.0]),
            Err(SpectralError::LengthMismatch {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn apply_handles_zero_entries() {
        let g = single(3);
        assert_eq!(apply(&g, &[0.0, 2.0, 3.0]).unwrap(), [6.0, 0.0, 0.0]);
    }

    #[test]
    fn rayleigh_examples() {
        let g = single(3);
        let c = 1.0 / libm::cbrt(3.0);
        assert!((rayleigh(&g, &[c, c, c]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(rayleigh(&g, &[0.0; 3]).unwrap(), 0.0);
    }

    #[test]
    fn residual_examples() {
        let g = single(3);
        let c = 1.0 / libm::cbrt(3.0);
        let x = [c, c, c];
        assert!(residual(&g, &x, 1.0).unwrap() < 1e-15);
        let expected = libm::pow(3.0, -2.0 / 3.0);
        assert!((residual(&g, &x, 2.0).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn single_edge_radius() {
        for k in 2..=6 {
            let r = spectral_radius(&single(k), 1e-10).unwrap();
            assert!((r.rho - 1.0).abs() <= 1e-10, "k = {k}: {r:?}");
            let first = r.vector[0];
            assert!(r.vector.iter().all(|&v| (v - first).abs() < 1e-14));
        }
    }

    #[test]
    fn hyperstar_closed_form() {
        let r = spectral_radius(&hyperstar(3, 8).unwrap(), 1e-10).unwrap();
        assert!((r.rho - 2.0).abs() <= 1e-10);
        assert!(r.lower <= r.rho && r.rho <= r.upper);
        assert!(r.residual <= 1e-9);
    }

    #[test]
    fn error_paths() {
        let two = Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(
            spectral_radius(&two, 1e-10),
            Err(SpectralError::Disconnected)
        );
        assert_eq!(
            spectral_radius(&single(3), 0.0),
            Err(SpectralError::NonPositiveTolerance(0.0))
        );
        assert_eq!(
            spectral_radius_any(&single(3), -1.0),
            Err(SpectralError::NonPositiveTolerance(-1.0))
        );
        let capped = SolverOptions {
            tolerance: 1e-12,
            max_iterations: 2,
            shift: 1.0,
        };
        assert!(matches!(
            spectral_radius_with(&hyperstar(3, 5).unwrap(), &capped),
            Err(SpectralError::IterationCap { iterations: 2, .. })
        ));
    }

    #[test]
    fn disconnected_inputs() {
        let two = Hypergraph::new(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert!((spectral_radius_any(&two, 1e-10).unwrap().rho - 1.0).abs() <= 1e-10);

        let star = hyperstar(3, 4).unwrap();
        let mut edges: Vec<Vec<usize>> = star.edges().map(<[usize]>::to_vec).collect();
        edges.push(vec![9, 10, 11]);
        let g = Hypergraph::new(3, 13, edges).unwrap();
        let r = spectral_radius_any(&g, 1e-10).unwrap();
        assert!((r.rho - libm::cbrt(4.0)).abs() <= 1e-10);
        assert_eq!(r.vector[9], 0.0);
        assert_eq!(r.vector[12], 0.0);
        assert!(r.vector[0] > 0.0);

        let empty = Hypergraph::edgeless(3, 4).unwrap();
        assert_eq!(spectral_radius_any(&empty, 1e-10).unwrap().rho, 0.0);
    }

    #[test]
    fn bracket_comparison() {
        let a = Bracket {
            lower: 1.0,
            upper: 1.1,
        };
        let b = Bracket {
            lower: 1.2,
            upper: 1.3,
        };
        assert_eq!(b.strict_cmp(&a), Some(Ordering::Greater));
        assert_eq!(a.strict_cmp(&b), Some(Ordering::Less));
        assert!(a.overlaps(&Bracket {
            lower: 1.05,
            upper: 2.0
        }));
        let (o, _, _) =
            compare_radii(&hyperstar(3, 3).unwrap(), &hyperstar(3, 2).unwrap(), 1e-10).unwrap();
        assert_eq!(o, RadiusOrder::Greater);
        let (o, _, _) = compare_radii(&single(3), &single(3), 1e-10).unwrap();
        assert_eq!(o, RadiusOrder::Undecided);
    }
}
