//! Desk-scale checks of the extremal statements, by exhaustive enumeration
//! or by bracketed comparison of spectral radii.

use std::fmt;
use std::str::FromStr;

use hyperspectral_core::canon::canonical_form;
use hyperspectral_core::constructions::{
    b_l1, b_l2, b_p, g5, hyperstar, power, s_power, unicyclic_max, SimpleGraph,
};
use hyperspectral_core::enumerate::{
    argmax_over, argmax_rho_with, dominating_vertex, enumerate_class_with, ClassFilter,
    EnumOptions, MaxReport,
};
use hyperspectral_core::spectral::{compare_radii, RadiusOrder};
use hyperspectral_core::{
    CanonicalForm, ConstructionError, EnumError, Girth, Hypergraph, SpectralError,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Claim {
    DominatingVertex,
    HypertreeMax,
    UnicyclicMax,
    GirthMax,
    GirthMonotone,
    LinearUnicyclicMax,
    PowerBicyclicMax,
    LinearBicyclicMax,
    FourEdgeLinearBicyclic,
    FiveEdgePowerBicyclic,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::DominatingVertex,
        Claim::HypertreeMax,
        Claim::UnicyclicMax,
        Claim::GirthMax,
        Claim::GirthMonotone,
        Claim::LinearUnicyclicMax,
        Claim::PowerBicyclicMax,
        Claim::LinearBicyclicMax,
        Claim::FourEdgeLinearBicyclic,
        Claim::FiveEdgePowerBicyclic,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::DominatingVertex => "lemma-3.1",
            Claim::HypertreeMax => "cor-3.2",
            Claim::UnicyclicMax => "cor-3.3",
            Claim::GirthMax => "cor-3.5",
            Claim::GirthMonotone => "lemma-3.6",
            Claim::LinearUnicyclicMax => "cor-3.7",
            Claim::PowerBicyclicMax => "thm-3.8",
            Claim::LinearBicyclicMax => "thm-3.9",
            Claim::FourEdgeLinearBicyclic => "class-4edge-linear-bicyclic",
            Claim::FiveEdgePowerBicyclic => "class-5edge-power-bicyclic",
        }
    }

    /// Edge count used when none is given.
    pub fn default_m(self) -> usize {
        match self {
            Claim::DominatingVertex | Claim::HypertreeMax | Claim::UnicyclicMax => 3,
            Claim::GirthMax | Claim::LinearUnicyclicMax | Claim::FourEdgeLinearBicyclic => 4,
            Claim::GirthMonotone | Claim::LinearBicyclicMax | Claim::FiveEdgePowerBicyclic => 5,
            Claim::PowerBicyclicMax => 6,
        }
    }

    fn min_m(self) -> usize {
        match self {
            Claim::DominatingVertex | Claim::HypertreeMax => 1,
            Claim::UnicyclicMax => 2,
            Claim::GirthMax | Claim::LinearUnicyclicMax | Claim::GirthMonotone => 4,
            Claim::FourEdgeLinearBicyclic => 4,
            Claim::LinearBicyclicMax | Claim::FiveEdgePowerBicyclic => 5,
            Claim::PowerBicyclicMax => 6,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| {
            let ids: Vec<_> = Claim::ALL.iter().map(|c| c.id()).collect();
            format!("unknown claim `{s}`; expected one of {}", ids.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Undecided,
    Refuted,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Refuted => 1,
            Verdict::Undecided => 2,
        }
    }
}

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("{claim} needs {what}")]
    Precondition { claim: Claim, what: String },
    #[error(transparent)]
    Enum(#[from] EnumError),
}

impl From<SpectralError> for ClaimError {
    fn from(e: SpectralError) -> Self {
        ClaimError::Enum(e.into())
    }
}

impl From<ConstructionError> for ClaimError {
    fn from(e: ConstructionError) -> Self {
        ClaimError::Enum(e.into())
    }
}

#[derive(Debug, Clone)]
pub struct ClaimParams {
    pub k: usize,
    pub m: Option<usize>,
    /// Girth for `cor-3.5`; every admissible girth when absent.
    pub g: Option<usize>,
    pub tolerance: f64,
    pub options: EnumOptions,
}

impl Default for ClaimParams {
    fn default() -> Self {
        Self {
            k: 3,
            m: None,
            g: None,
            tolerance: hyperspectral_core::spectral::DEFAULT_TOLERANCE,
            options: EnumOptions::default(),
        }
    }
}

/// One sub-check. Forms are hex canonical forms; brackets are `[lower, upper]`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_size: Option<usize>,
    pub expected: Vec<String>,
    pub found: Vec<String>,
    pub brackets: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub k: usize,
    pub m: usize,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
}

impl ClaimReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }
}

pub fn verify(claim: Claim, params: &ClaimParams) -> Result<ClaimReport, ClaimError> {
    let k = params.k;
    let m = params.m.unwrap_or(claim.default_m());
    let fail = |what: String| ClaimError::Precondition { claim, what };
    if !(3..=4).contains(&k) {
        return Err(fail(format!("k in 3..=4, got {k}")));
    }
    if m < claim.min_m() {
        return Err(fail(format!("m >= {}, got {m}", claim.min_m())));
    }
    if matches!(
        claim,
        Claim::FourEdgeLinearBicyclic | Claim::FiveEdgePowerBicyclic
    ) && m != claim.default_m()
    {
        return Err(fail(format!("m = {}", claim.default_m())));
    }
    if params.g.is_some() && claim != Claim::GirthMax {
        return Err(fail("no girth parameter".into()));
    }
    let ctx = Ctx { k, m, params };

    let checks = match claim {
        Claim::DominatingVertex => ctx.dominating()?,
        Claim::HypertreeMax => {
            vec![ctx.argmax(
                "hypertrees",
                ClassFilter::hypertrees(),
                &[hyperstar(k, m)?],
                true,
            )?]
        }
        Claim::UnicyclicMax => vec![ctx.argmax(
            "unicyclic",
            ClassFilter::unicyclic(),
            &[unicyclic_max(m, k)?],
            true,
        )?],
        Claim::GirthMax => {
            let girths = match params.g {
                Some(g) if (3..=m).contains(&g) => g..=g,
                Some(g) => return Err(fail(format!("girth in 3..={m}, got {g}"))),
                None => 3..=m,
            };
            let mut checks = Vec::new();
            for g in girths {
                let expected = [s_power(m, g, k)?];
                let base = ClassFilter::unicyclic().girth(Girth::Finite(g));
                checks.push(ctx.argmax(
                    &format!("unicyclic linear girth {g}"),
                    base.linear(true),
                    &expected,
                    true,
                )?);
                checks.push(ctx.argmax(
                    &format!("unicyclic power girth {g}"),
                    base.power(true),
                    &expected,
                    true,
                )?);
            }
            checks
        }
        Claim::GirthMonotone => {
            let mut checks = Vec::new();
            for g in (4..=m).rev() {
                let shorter = s_power(m, g - 1, k)?;
                let longer = s_power(m, g, k)?;
                let (order, a, b) = compare_radii(&shorter, &longer, params.tolerance)?;
                checks.push(Check {
                    label: format!("girth {} above girth {g}", g - 1),
                    class_size: None,
                    expected: vec![hex(&shorter)?],
                    found: vec![],
                    brackets: vec![[a.lower, a.upper], [b.lower, b.upper]],
                    gap: Some(a.lower - b.upper),
                    verdict: match order {
                        RadiusOrder::Greater => Verdict::Pass,
                        RadiusOrder::Less => Verdict::Refuted,
                        RadiusOrder::Undecided => Verdict::Undecided,
                    },
                });
            }
            checks
        }
        Claim::LinearUnicyclicMax => {
            let expected = [s_power(m, 3, k)?];
            vec![
                ctx.argmax(
                    "unicyclic linear",
                    ClassFilter::unicyclic().linear(true),
                    &expected,
                    true,
                )?,
                ctx.argmax(
                    "unicyclic power",
                    ClassFilter::unicyclic().power(true),
                    &expected,
                    true,
                )?,
            ]
        }
        Claim::PowerBicyclicMax => vec![ctx.argmax(
            "bicyclic power",
            ClassFilter::bicyclic().power(true),
            &[b_p(m, k)?],
            true,
        )?],
        Claim::LinearBicyclicMax => vec![ctx.argmax(
            "bicyclic linear",
            ClassFilter::bicyclic().linear(true),
            &[b_l1(m, k)?, b_l2(m, k)?, b_p(m, k)?],
            false,
        )?],
        Claim::FourEdgeLinearBicyclic => vec![ctx.class_count(
            "bicyclic linear",
            ClassFilter::bicyclic().linear(true),
            2,
            &g5(k)?,
        )?],
        Claim::FiveEdgePowerBicyclic => vec![ctx.class_count(
            "bicyclic power",
            ClassFilter::bicyclic().power(true),
            1,
            &power(&SimpleGraph::k4_minus_edge(), k)?,
        )?],
    };
    let verdict = checks
        .iter()
        .map(|c| c.verdict)
        .max()
        .unwrap_or(Verdict::Pass);
    Ok(ClaimReport {
        claim: claim.id().into(),
        k,
        m,
        tolerance: params.tolerance,
        verdict,
        checks,
    })
}

fn hex(g: &Hypergraph) -> Result<String, EnumError> {
    Ok(canonical_form(g)?.to_string())
}

fn hexes(forms: &[CanonicalForm]) -> Vec<String> {
    forms.iter().map(ToString::to_string).collect()
}

struct Ctx<'a> {
    k: usize,
    m: usize,
    params: &'a ClaimParams,
}

impl Ctx<'_> {
    fn report(&self, filter: &ClassFilter) -> Result<MaxReport, EnumError> {
        argmax_rho_with(
            self.k,
            self.m,
            filter,
            self.params.tolerance,
            &self.params.options,
        )
    }

    /// The maximizer lies in `expected`. With `unique`, `expected` has one
    /// member and the maximizer must be separated from everything else.
    fn argmax(
        &self,
        label: &str,
        filter: ClassFilter,
        expected: &[Hypergraph],
        unique: bool,
    ) -> Result<Check, EnumError> {
        let report = self.report(&filter)?;
        let expected: Vec<CanonicalForm> = expected
            .iter()
            .map(canonical_form)
            .collect::<Result<_, _>>()?;
        let inside = report
            .argmax
            .iter()
            .filter(|f| expected.contains(f))
            .count();
        let verdict = if report.class_size == 0 || inside == 0 {
            Verdict::Refuted
        } else if (unique && !report.is_unique()) || inside < report.argmax.len() {
            Verdict::Undecided
        } else {
            Verdict::Pass
        };
        Ok(max_check(label, expected, &report, verdict))
    }

    /// Every slice of connected hypergraphs with `m` edges and a fixed vertex
    /// count, then all slices together.
    fn dominating(&self) -> Result<Vec<Check>, EnumError> {
        let mut checks = Vec::new();
        let mut everything = Vec::new();
        for c in 0.. {
            let filter = ClassFilter::cyclic(c);
            match filter.vertex_count(self.k, self.m) {
                Some(n) if n >= self.k => {}
                _ => break,
            }
            let class = enumerate_class_with(self.k, self.m, &filter, &self.params.options)?;
            if class.is_empty() {
                continue;
            }
            let report = argmax_over(&class, self.params.tolerance)?;
            let n = class[0].n();
            checks.push(dominating_check(&format!("connected n={n}"), &report));
            everything.extend(class);
        }
        let report = argmax_over(&everything, self.params.tolerance)?;
        checks.push(dominating_check("connected", &report));
        Ok(checks)
    }

    fn class_count(
        &self,
        label: &str,
        filter: ClassFilter,
        count: usize,
        member: &Hypergraph,
    ) -> Result<Check, EnumError> {
        let class = enumerate_class_with(self.k, self.m, &filter, &self.params.options)?;
        let found: Vec<String> = class.iter().map(hex).collect::<Result<_, _>>()?;
        let expected = hex(member)?;
        let verdict = if class.len() == count && found.contains(&expected) {
            Verdict::Pass
        } else {
            Verdict::Refuted
        };
        Ok(Check {
            label: format!("{label}: {count} classes"),
            class_size: Some(class.len()),
            expected: vec![expected],
            found,
            brackets: vec![],
            gap: None,
            verdict,
        })
    }
}

fn max_check(
    label: &str,
    expected: Vec<CanonicalForm>,
    report: &MaxReport,
    verdict: Verdict,
) -> Check {
    Check {
        label: label.into(),
        class_size: Some(report.class_size),
        expected: hexes(&expected),
        found: hexes(&report.argmax),
        brackets: report
            .rho_bracket
            .iter()
            .map(|b| [b.lower, b.upper])
            .collect(),
        gap: report.runner_up_gap,
        verdict,
    }
}

fn dominating_check(label: &str, report: &MaxReport) -> Check {
    let with = report
        .maximizers
        .iter()
        .filter(|g| dominating_vertex(g).is_some())
        .count();
    let verdict = if with == report.maximizers.len() {
        Verdict::Pass
    } else if report.is_unique() {
        Verdict::Refuted
    } else {
        Verdict::Undecided
    };
    max_check(
        &format!("{label}: maximizer has a dominating vertex"),
        vec![],
        report,
        verdict,
    )
}
