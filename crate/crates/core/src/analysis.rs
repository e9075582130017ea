//! Classifier dominance and constrained operating points.

use serde::{Deserialize, Serialize};

use crate::curves::roc_curve;
use crate::error::{Error, Result};
use crate::leakage::{check_grid, LeakageCurve};
use crate::score_model::ClassPriors;

/// Default dominance tolerance for curves with at least one analytic side.
pub const ANALYTIC_EPSILON: f64 = 1e-9;

/// Dominance of the first classifier over the second, read from the margins
/// `G2(u) - G1(u)` on the interior grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DominanceVerdict {
    /// Every margin exceeds `epsilon`.
    GlobalStrict,
    /// No margin is below `-epsilon`, but some are within tolerance of zero.
    GlobalNonStrict,
    /// No margin exceeds `epsilon`, some are below `-epsilon` and some are
    /// within tolerance: the second classifier wins on part of the range and
    /// the two coincide elsewhere.
    Local,
    /// Every margin is below `-epsilon`.
    None,
    /// Margins of both signs beyond `epsilon`.
    Incomparable,
}

impl std::fmt::Display for DominanceVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DominanceVerdict::GlobalStrict => "global_strict",
            DominanceVerdict::GlobalNonStrict => "global_non_strict",
            DominanceVerdict::Local => "local",
            DominanceVerdict::None => "none",
            DominanceVerdict::Incomparable => "incomparable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub verdict: DominanceVerdict,
    pub epsilon: f64,
    /// Interior evaluation points `u_i = i / (grid_size - 1)`.
    pub grid: Vec<f64>,
    pub margins: Vec<f64>,
    /// Maximal `[u_start, u_end]` runs of grid points where the first curve
    /// leaks less than the second by more than `epsilon`.
    pub dominant_intervals: Vec<(f64, f64)>,
}

/// Compact form of a [`DominanceReport`] without the per-point arrays.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceSummary {
    pub verdict: DominanceVerdict,
    pub epsilon: f64,
    pub grid_size: usize,
    pub min_margin: f64,
    pub max_margin: f64,
    pub dominant_intervals: Vec<(f64, f64)>,
}

impl DominanceReport {
    pub fn summary(&self) -> DominanceSummary {
        DominanceSummary {
            verdict: self.verdict,
            epsilon: self.epsilon,
            grid_size: self.grid.len() + 2,
            min_margin: self.margins.iter().copied().fold(f64::INFINITY, f64::min),
            max_margin: self
                .margins
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max),
            dominant_intervals: self.dominant_intervals.clone(),
        }
    }
}

/// 0 when both curves are empirical staircases, [`ANALYTIC_EPSILON`] otherwise.
pub fn default_dominance_epsilon(g1: &LeakageCurve, g2: &LeakageCurve) -> f64 {
    if g1.is_step() && g2.is_step() {
        0.0
    } else {
        ANALYTIC_EPSILON
    }
}

/// Compares two leakage curves on the interior of a uniform grid of
/// `grid_size` points over `[0, 1]`. The endpoints are skipped because every
/// curve is pinned there.
pub fn compare_dominance(
    g1: &LeakageCurve,
    g2: &LeakageCurve,
    grid_size: usize,
    epsilon: f64,
) -> Result<DominanceReport> {
    check_grid(grid_size, 3)?;
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be nonnegative, got {epsilon}"
        )));
    }
    let last = (grid_size - 1) as f64;
    let grid: Vec<f64> = (1..grid_size - 1).map(|i| i as f64 / last).collect();
    let margins: Vec<f64> = grid.iter().map(|&u| g2.eval(u) - g1.eval(u)).collect();

    let above = margins.iter().filter(|&&m| m > epsilon).count();
    let below = margins.iter().filter(|&&m| m < -epsilon).count();
    let n = margins.len();
    let verdict = if above == n {
        DominanceVerdict::GlobalStrict
    } else if below == n {
        DominanceVerdict::None
    } else if below == 0 {
        DominanceVerdict::GlobalNonStrict
    } else if above > 0 {
        DominanceVerdict::Incomparable
    } else {
        DominanceVerdict::Local
    };

    let mut dominant_intervals = Vec::new();
    let mut start: Option<usize> = None;
    for (i, &m) in margins.iter().enumerate() {
        match (m > epsilon, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                dominant_intervals.push((grid[s], grid[i - 1]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        dominant_intervals.push((grid[s], grid[n - 1]));
    }

    Ok(DominanceReport {
        verdict,
        epsilon,
        grid,
        margins,
        dominant_intervals,
    })
}

/// A line `tpr = slope * fpr + intercept` in ROC coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryLine {
    pub slope: f64,
    pub intercept: f64,
}

impl BoundaryLine {
    pub fn tpr_at(&self, fpr: f64) -> f64 {
        self.slope * fpr + self.intercept
    }

    /// `fpr` where the line meets `tpr = 0`, if it is not horizontal.
    pub fn fpr_intercept(&self) -> Option<f64> {
        (self.slope != 0.0).then(|| -self.intercept / self.slope)
    }
}

/// At most a fraction `m` of all samples may be predicted positive:
/// `pi_p tpr + pi_n fpr <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdmissionCap {
    pub m: f64,
    pub priors: ClassPriors,
}

impl AdmissionCap {
    pub fn new(m: f64, priors: ClassPriors) -> Result<Self> {
        if !(0.0..=1.0).contains(&m) {
            return Err(Error::InvalidParameter(format!(
                "cap m must lie in [0, 1], got {m}"
            )));
        }
        Ok(Self { m, priors })
    }

    pub fn admission(&self, fpr: f64, tpr: f64) -> f64 {
        self.priors.pi_p() * tpr + self.priors.pi_n() * fpr
    }

    pub fn is_satisfied(&self, fpr: f64, tpr: f64) -> bool {
        self.admission(fpr, tpr) <= self.m
    }

    /// Edge of the feasible region, slope `-pi_n / pi_p`. `None` when
    /// `pi_p = 0` (the edge is vertical).
    pub fn boundary(&self) -> Option<BoundaryLine> {
        let pi_p = self.priors.pi_p();
        (pi_p > 0.0).then(|| BoundaryLine {
            slope: -self.priors.pi_n() / pi_p,
            intercept: self.m / pi_p,
        })
    }
}

/// Expected misclassification cost bound:
/// `cost_fp pi_n fpr + cost_fn pi_p (1 - tpr) <= max_cost`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundedRisk {
    pub cost_fp: f64,
    pub cost_fn: f64,
    pub max_cost: f64,
    pub priors: ClassPriors,
}

impl BoundedRisk {
    pub fn new(cost_fp: f64, cost_fn: f64, max_cost: f64, priors: ClassPriors) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v >= 0.0;
        if !ok(cost_fp) || !ok(cost_fn) || !ok(max_cost) {
            return Err(Error::InvalidParameter(
                "costs and the risk bound must be finite and nonnegative".into(),
            ));
        }
        if cost_fp == 0.0 && cost_fn == 0.0 {
            return Err(Error::InvalidParameter(
                "at least one cost must be positive".into(),
            ));
        }
        Ok(Self {
            cost_fp,
            cost_fn,
            max_cost,
            priors,
        })
    }

    pub fn risk(&self, fpr: f64, tpr: f64) -> f64 {
        self.cost_fp * self.priors.pi_n() * fpr + self.cost_fn * self.priors.pi_p() * (1.0 - tpr)
    }

    /// Edge of the feasible region, slope `cost_fp pi_n / (cost_fn pi_p)`.
    /// `None` when `cost_fn pi_p = 0` (the edge is vertical).
    pub fn boundary(&self) -> Option<BoundaryLine> {
        let w = self.cost_fn * self.priors.pi_p();
        (w > 0.0).then(|| BoundaryLine {
            slope: self.cost_fp * self.priors.pi_n() / w,
            intercept: 1.0 - self.max_cost / w,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OperatingConstraint {
    CappedAdmission(AdmissionCap),
    BoundedRisk(BoundedRisk),
}

impl OperatingConstraint {
    pub fn priors(&self) -> ClassPriors {
        match self {
            OperatingConstraint::CappedAdmission(c) => c.priors,
            OperatingConstraint::BoundedRisk(r) => r.priors,
        }
    }

    pub fn is_satisfied(&self, fpr: f64, tpr: f64) -> bool {
        match self {
            OperatingConstraint::CappedAdmission(c) => c.is_satisfied(fpr, tpr),
            OperatingConstraint::BoundedRisk(r) => bounded_risk_region_check((fpr, tpr), r),
        }
    }

    pub fn boundary(&self) -> Option<BoundaryLine> {
        match self {
            OperatingConstraint::CappedAdmission(c) => c.boundary(),
            OperatingConstraint::BoundedRisk(r) => r.boundary(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdmissionPoint {
    /// Score threshold, when the curve has one.
    pub tau: Option<f64>,
    pub fpr: f64,
    pub tpr: f64,
    /// Achieved `pi_p tpr + pi_n fpr`.
    pub admission: f64,
    pub m: f64,
}

const MAX_BISECTIONS: usize = 2_000;

/// The ROC point whose admission rate `pi_p tpr + pi_n fpr` equals `m`.
///
/// Continuous curves are solved by bisection on the negative quantile level
/// `u = 1 - fpr`. A jump in `G` is crossed along its vertical ROC segment.
/// Empirical staircases return the corner with the largest admission not
/// exceeding `m`.
pub fn capped_admission_point(
    curve: &LeakageCurve,
    priors: ClassPriors,
    m: f64,
) -> Result<AdmissionPoint> {
    if m.is_nan() || m <= 0.0 {
        return Err(Error::InfeasibleCap(m));
    }
    if m >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "cap m must be below 1, got {m}"
        )));
    }
    let (pi_p, pi_n) = (priors.pi_p(), priors.pi_n());
    if pi_p <= 0.0 {
        return Err(Error::DegeneratePriors);
    }

    if let Some(emp) = curve.as_empirical() {
        let mut best: Option<AdmissionPoint> = None;
        for (fpr, tpr, tau) in emp.staircase() {
            let admission = pi_p * tpr + pi_n * fpr;
            if admission <= m && best.is_none_or(|b| admission >= b.admission) {
                best = Some(AdmissionPoint {
                    tau: tau.is_finite().then_some(tau),
                    fpr,
                    tpr,
                    admission,
                    m,
                });
            }
        }
        // the (0, 0) corner always qualifies
        return best.ok_or_else(|| Error::NumericalFailure("empty staircase".into()));
    }

    let admission_at = |u: f64| pi_p * (1.0 - curve.eval(u)) + pi_n * (1.0 - u);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut converged = false;
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            converged = true;
            break;
        }
        if admission_at(mid) > m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if !converged {
        return Err(Error::NumericalFailure(
            "capped admission bisection did not converge".into(),
        ));
    }
    let fpr = 1.0 - hi;
    let tpr_hi = 1.0 - curve.eval(lo);
    let tpr_lo = 1.0 - curve.eval(hi);
    let tpr = ((m - pi_n * fpr) / pi_p).clamp(tpr_lo.min(tpr_hi), tpr_hi.max(tpr_lo));
    Ok(AdmissionPoint {
        tau: curve.threshold_at_level(hi),
        fpr,
        tpr,
        admission: pi_p * tpr + pi_n * fpr,
        m,
    })
}

/// True iff `(fpr, tpr)` has risk at most `max_cost`.
pub fn bounded_risk_region_check(point: (f64, f64), constraint: &BoundedRisk) -> bool {
    constraint.risk(point.0, point.1) <= constraint.max_cost
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiskPoint {
    pub tau: Option<f64>,
    pub fpr: f64,
    pub tpr: f64,
    pub risk: f64,
    /// Whether `risk <= max_cost`.
    pub feasible: bool,
}

/// Risks closer than this are treated as equal when picking the minimum.
const RISK_TIE: f64 = 1e-12;

/// The point of the ROC table of `curve` with the least risk. Ties (within
/// `1e-12`) go to the smallest `fpr`.
pub fn min_risk_point(
    curve: &LeakageCurve,
    constraint: &BoundedRisk,
    grid_size: usize,
) -> Result<RiskPoint> {
    let table = roc_curve(curve, grid_size)?;
    let mut best: Option<RiskPoint> = None;
    for p in &table.points {
        let risk = constraint.risk(p.x, p.y);
        if best.is_none_or(|b| risk < b.risk - RISK_TIE) {
            best = Some(RiskPoint {
                tau: p.tau,
                fpr: p.x,
                tpr: p.y,
                risk,
                feasible: risk <= constraint.max_cost,
            });
        }
    }
    best.ok_or_else(|| Error::NumericalFailure("empty ROC table".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParetoCandidate {
    pub performance: f64,
    /// Normalized cost in `[0, 1]`.
    pub cost: f64,
    pub tau: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParetoPoint {
    pub lambda: f64,
    /// Index of the selected candidate.
    pub candidate: usize,
    pub performance: f64,
    pub cost: f64,
    /// `(1 - lambda) performance + lambda (1 - cost)`.
    pub objective: f64,
    pub operating_tau: Option<f64>,
}

/// `true` if `a` is at least as good as `b` in both coordinates and strictly
/// better in one.
fn dominates(a: &ParetoCandidate, b: &ParetoCandidate) -> bool {
    a.performance >= b.performance
        && a.cost <= b.cost
        && (a.performance > b.performance || a.cost < b.cost)
}

/// For each `lambda` picks the candidate maximizing the weighted objective
/// (ties: lower cost, then lower index) and keeps the selections that no
/// other selection dominates, in `lambdas` order.
pub fn pareto_front(candidates: &[ParetoCandidate], lambdas: &[f64]) -> Result<Vec<ParetoPoint>> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidateSet);
    }
    if let Some(c) = candidates
        .iter()
        .find(|c| !c.performance.is_finite() || !(0.0..=1.0).contains(&c.cost))
    {
        return Err(Error::InvalidParameter(format!(
            "candidate needs finite performance and cost in [0, 1], got ({}, {})",
            c.performance, c.cost
        )));
    }
    if let Some(l) = lambdas.iter().find(|l| !(0.0..=1.0).contains(*l)) {
        return Err(Error::InvalidParameter(format!(
            "lambda must lie in [0, 1], got {l}"
        )));
    }

    let objective = |c: &ParetoCandidate, l: f64| (1.0 - l) * c.performance + l * (1.0 - c.cost);
    let selected: Vec<ParetoPoint> = lambdas
        .iter()
        .map(|&l| {
            let mut best = 0;
            for (i, c) in candidates.iter().enumerate().skip(1) {
                let (o, ob) = (objective(c, l), objective(&candidates[best], l));
                if o > ob || (o == ob && c.cost < candidates[best].cost) {
                    best = i;
                }
            }
            let c = &candidates[best];
            ParetoPoint {
                lambda: l,
                candidate: best,
                performance: c.performance,
                cost: c.cost,
                objective: objective(c, l),
                operating_tau: c.tau,
            }
        })
        .collect();

    Ok(selected
        .iter()
        .filter(|p| {
            !selected
                .iter()
                .any(|q| dominates(&candidates[q.candidate], &candidates[p.candidate]))
        })
        .copied()
        .collect())
}
