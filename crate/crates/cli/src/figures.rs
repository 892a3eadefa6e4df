//! Compares the two steerability conventions against the qualitative trends
//! of the steerability panels: decay with acceleration, ordering of the two
//! directions, which direction dies first, and monotonicity in the mixing.

use std::fmt;

use qtsteer_core::model::R_MAX;
use qtsteer_core::{accelerate_closed, steering_report, Convention, ModelParams, Scenario};

use crate::config::linspace;
use crate::presets::STEERING_P_VALUES;

/// Slack for the monotonicity and ordering comparisons.
pub const TREND_TOL: f64 = 1e-12;

/// Steerability curves over `r` for one scenario and mixing value.
#[derive(Clone, Debug, PartialEq)]
pub struct SteeringCurves {
    pub scenario: Scenario,
    pub p: f64,
    pub r: Vec<f64>,
    pub ab: Vec<f64>,
    pub ba: Vec<f64>,
}

impl SteeringCurves {
    pub fn compute(scenario: Scenario, p: f64, r: &[f64], convention: Convention) -> qtsteer_core::Result<Self> {
        let mut ab = Vec::with_capacity(r.len());
        let mut ba = Vec::with_capacity(r.len());
        for &ri in r {
            let report = steering_report(&accelerate_closed(&ModelParams::new(scenario, p, ri))?, convention)?;
            ab.push(report.steer_ab);
            ba.push(report.steer_ba);
        }
        Ok(Self { scenario, p, r: r.to_vec(), ab, ba })
    }

    /// First `r` at which the curve is zero, if any.
    pub fn vanishing_point(&self, curve: &[f64]) -> Option<f64> {
        curve.iter().position(|&v| v <= 0.0).map(|k| self.r[k])
    }
}

fn non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] <= w[0] + TREND_TOL)
}

/// Qualitative features of one convention.
#[derive(Clone, Debug, PartialEq)]
pub struct ConventionAssessment {
    pub convention: Convention,
    /// Both degrees are non-increasing in `r` for every panel.
    pub decays_in_r: bool,
    /// Both degrees start strictly positive at `r = 0` for every panel.
    pub steerable_at_rest: bool,
    /// `steer_ab >= steer_ba` everywhere.
    pub ab_dominates: bool,
    /// With only the qutrit accelerated, `steer_ba` reaches zero strictly before `steer_ab`.
    pub ba_vanishes_first: bool,
    /// Both degrees are non-increasing in `p` at each `r`.
    pub monotone_in_p: bool,
    /// `steer_ba >= steer_ab` everywhere, the ordering with direction labels exchanged.
    pub ba_dominates: bool,
    /// With only the qutrit accelerated, `steer_ab` reaches zero strictly before `steer_ba`.
    pub ab_vanishes_first: bool,
    /// `(p, r where steer_ab vanishes, r where steer_ba vanishes)` with only the qutrit accelerated.
    pub qutrit_vanishing: Vec<(f64, Option<f64>, Option<f64>)>,
    /// Largest `steer_ba - steer_ab` over all panels.
    pub worst_ordering_violation: f64,
}

impl ConventionAssessment {
    /// Number of the three trend claims satisfied.
    pub fn claims_matched(&self) -> usize {
        [self.ab_dominates, self.ba_vanishes_first, self.monotone_in_p].iter().filter(|&&b| b).count()
    }

    pub fn all_claims_hold(&self) -> bool {
        self.claims_matched() == 3
    }
}

/// Strict "vanishes first": `first` reaches zero and `second` either never does or does later.
fn vanishes_before(first: Option<f64>, second: Option<f64>) -> bool {
    match (first, second) {
        (Some(a), Some(b)) => a < b,
        (Some(_), None) => true,
        _ => false,
    }
}

pub fn assess(convention: Convention, r_points: usize) -> qtsteer_core::Result<ConventionAssessment> {
    let r = linspace(0.0, R_MAX, r_points);
    let scenarios = [Scenario::QubitOnly, Scenario::QutritOnly];
    let mut panels = Vec::new();
    for scenario in scenarios {
        for p in STEERING_P_VALUES {
            panels.push(SteeringCurves::compute(scenario, p, &r, convention)?);
        }
    }

    let decays_in_r = panels.iter().all(|c| non_increasing(&c.ab) && non_increasing(&c.ba));
    let steerable_at_rest = panels.iter().all(|c| c.ab[0] > 0.0 && c.ba[0] > 0.0);
    let worst_ordering_violation =
        panels.iter().flat_map(|c| c.ab.iter().zip(&c.ba).map(|(a, b)| b - a)).fold(f64::NEG_INFINITY, f64::max);
    let ab_dominates = worst_ordering_violation <= TREND_TOL;
    let ba_dominates = panels.iter().all(|c| c.ab.iter().zip(&c.ba).all(|(a, b)| *b >= *a - TREND_TOL));

    let qutrit: Vec<&SteeringCurves> = panels.iter().filter(|c| c.scenario == Scenario::QutritOnly).collect();
    let qutrit_vanishing: Vec<_> =
        qutrit.iter().map(|c| (c.p, c.vanishing_point(&c.ab), c.vanishing_point(&c.ba))).collect();
    let ba_vanishes_first = qutrit_vanishing.iter().all(|&(_, ab, ba)| vanishes_before(ba, ab));
    let ab_vanishes_first = qutrit_vanishing.iter().all(|&(_, ab, ba)| vanishes_before(ab, ba));

    let monotone_in_p = scenarios.iter().all(|&scenario| {
        let by_p: Vec<&SteeringCurves> = panels.iter().filter(|c| c.scenario == scenario).collect();
        by_p.windows(2)
            .all(|w| (0..r.len()).all(|k| w[1].ab[k] <= w[0].ab[k] + TREND_TOL && w[1].ba[k] <= w[0].ba[k] + TREND_TOL))
    });

    Ok(ConventionAssessment {
        convention,
        decays_in_r,
        steerable_at_rest,
        ab_dominates,
        ba_vanishes_first,
        monotone_in_p,
        ba_dominates,
        ab_vanishes_first,
        qutrit_vanishing,
        worst_ordering_violation,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureComparison {
    pub assessments: Vec<ConventionAssessment>,
    /// The convention reproducing the decay in `r` and the most trend claims.
    /// Ties go to the convention the presets use. `None` when neither decays.
    pub figure_matching: Option<Convention>,
}

impl FigureComparison {
    pub fn assessment(&self, convention: Convention) -> Option<&ConventionAssessment> {
        self.assessments.iter().find(|a| a.convention == convention)
    }

    pub fn matching_assessment(&self) -> Option<&ConventionAssessment> {
        self.figure_matching.and_then(|c| self.assessment(c))
    }
}

pub fn compare_conventions(r_points: usize) -> qtsteer_core::Result<FigureComparison> {
    let assessments: Vec<ConventionAssessment> =
        Convention::ALL.into_iter().map(|c| assess(c, r_points)).collect::<Result<_, _>>()?;
    let mut figure_matching: Option<&ConventionAssessment> = None;
    for a in assessments.iter().filter(|a| a.decays_in_r) {
        if figure_matching.is_none_or(|best| a.claims_matched() > best.claims_matched()) {
            figure_matching = Some(a);
        }
    }
    let figure_matching = figure_matching.map(|a| a.convention);
    Ok(FigureComparison { assessments, figure_matching })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_r(r: Option<f64>) -> String {
    r.map_or_else(|| "never".to_string(), |v| format!("{v:.4}"))
}

impl fmt::Display for ConventionAssessment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "convention {}", self.convention)?;
        writeln!(f, "  decays in r:                   {}", yes(self.decays_in_r))?;
        writeln!(f, "  steerable at r = 0:            {}", yes(self.steerable_at_rest))?;
        writeln!(
            f,
            "  steer_ab >= steer_ba:          {} (worst steer_ba - steer_ab = {:.4})",
            yes(self.ab_dominates),
            self.worst_ordering_violation
        )?;
        writeln!(f, "  steer_ba vanishes first:       {}", yes(self.ba_vanishes_first))?;
        writeln!(f, "  non-increasing in p:           {}", yes(self.monotone_in_p))?;
        writeln!(
            f,
            "  with directions exchanged:     ordering {}, vanishing order {}",
            yes(self.ba_dominates),
            yes(self.ab_vanishes_first)
        )?;
        for (p, ab, ba) in &self.qutrit_vanishing {
            writeln!(f, "  qutrit p={p:<5} steer_ab -> 0 at r={}, steer_ba -> 0 at r={}", fmt_r(*ab), fmt_r(*ba))?;
        }
        Ok(())
    }
}

impl fmt::Display for FigureComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.assessments {
            write!(f, "{a}")?;
        }
        match self.figure_matching {
            Some(c) => writeln!(f, "figure-matching convention: {c}"),
            None => writeln!(f, "figure-matching convention: none (no convention decays in r)"),
        }
    }
}
