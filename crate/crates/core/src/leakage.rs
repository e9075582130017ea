//! The positive-to-negative class leakage function `G = F_p o F_n^-1`.
//!
//! A [`LeakageCurve`] is an evaluable nondecreasing map `[0, 1] -> [0, 1]`
//! with an inverse and, for smooth sources, a density `g = G'`. Everything
//! downstream (ROC, PR, AUROC, dominance, operating points) is a function of
//! it.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::binormal::{probit, std_normal_cdf, std_normal_quantile, BinormalModel};
use crate::error::{Error, Result};
use crate::quadrature::{probit_trapezoid, unit_area};
use crate::score_model::{conditional_cdf, EmpiricalCdf, Label, LabeledScores};

/// Default number of grid points for curve sampling and quadrature.
pub const DEFAULT_GRID: usize = 100_000;

/// Endpoint cutoff for the KL integral.
pub const KL_EPSILON: f64 = 1e-6;

type CurveFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Leakage curve of a finite dataset: a left-continuous step function.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalLeakage {
    negatives: EmpiricalCdf,
    positives: EmpiricalCdf,
    /// `#{positives <= x_(k)}` for the k-th smallest negative score.
    leaked: Vec<usize>,
    /// Distinct scores of both classes, ascending.
    pooled: Vec<f64>,
}

impl EmpiricalLeakage {
    pub fn new(negatives: EmpiricalCdf, positives: EmpiricalCdf) -> Self {
        let leaked = negatives
            .sorted_scores()
            .iter()
            .map(|&x| positives.count_le(x))
            .collect();
        let mut pooled: Vec<f64> = negatives
            .sorted_scores()
            .iter()
            .chain(positives.sorted_scores())
            .copied()
            .collect();
        pooled.sort_by(f64::total_cmp);
        pooled.dedup();
        Self {
            negatives,
            positives,
            leaked,
            pooled,
        }
    }

    pub fn negatives(&self) -> &EmpiricalCdf {
        &self.negatives
    }

    pub fn positives(&self) -> &EmpiricalCdf {
        &self.positives
    }

    fn n(&self) -> usize {
        self.negatives.len()
    }

    fn p(&self) -> usize {
        self.positives.len()
    }

    /// `F_p(F_n^-1(u))`, with `G(0) = 0`. At `u = 1` this is the raw value
    /// `F_p(max negative)`, which is below 1 when some positive outscores
    /// every negative.
    pub fn eval(&self, u: f64) -> f64 {
        if u <= 0.0 {
            return 0.0;
        }
        let k = self.negatives.quantile_rank(u.min(1.0));
        self.leaked[k - 1] as f64 / self.p() as f64
    }

    /// Lower generalized inverse `inf{u : G(u) >= v}`.
    pub fn inverse(&self, v: f64) -> f64 {
        if v <= 0.0 {
            return 0.0;
        }
        let p = self.p() as f64;
        // smallest k with leaked[k-1] / P >= v
        let idx = self.leaked.partition_point(|&c| (c as f64) / p < v);
        if idx == self.leaked.len() {
            1.0
        } else {
            idx as f64 / self.n() as f64
        }
    }

    /// Upper generalized inverse `sup{u : G(u) <= v}`.
    pub fn inverse_upper(&self, v: f64) -> f64 {
        if v < 0.0 {
            return 0.0;
        }
        let p = self.p() as f64;
        let k = self.leaked.partition_point(|&c| (c as f64) / p <= v);
        k as f64 / self.n() as f64
    }

    /// Decision threshold (rule `score >= tau`) realizing `fpr = 1 - u` on
    /// the staircase: the smallest observed score above `F_n^-1(u)`, or
    /// `+inf` when none exists. At `u = 0` every sample is admitted and the
    /// smallest observed score is returned.
    pub fn threshold_at_level(&self, u: f64) -> f64 {
        if u <= 0.0 {
            return self.pooled[0];
        }
        let q = self.negatives.sorted_scores()[self.negatives.quantile_rank(u.min(1.0)) - 1];
        let idx = self.pooled.partition_point(|&s| s <= q);
        self.pooled.get(idx).copied().unwrap_or(f64::INFINITY)
    }

    /// Exact ROC corners `(fpr, tpr, tau)` for every distinct threshold,
    /// starting from `(0, 0)` at `tau = +inf`.
    pub fn staircase(&self) -> Vec<(f64, f64, f64)> {
        let (n, p) = (self.n() as f64, self.p() as f64);
        let nn = self.n();
        let pp = self.p();
        let mut out = Vec::with_capacity(self.pooled.len() + 1);
        out.push((0.0, 0.0, f64::INFINITY));
        for &s in self.pooled.iter().rev() {
            let fp = nn - self.negatives.count_lt(s);
            let tp = pp - self.positives.count_lt(s);
            out.push((fp as f64 / n, tp as f64 / p, s));
        }
        out
    }

    /// Exact area under the step function `G`, with ties between a negative
    /// and a positive score counted at half height, as a pair count.
    pub fn staircase_pairs(&self) -> PairCount {
        let (mut below, mut tied) = (0u64, 0u64);
        for &x in self.negatives.sorted_scores() {
            let lt = self.positives.count_lt(x) as u64;
            let le = self.positives.count_le(x) as u64;
            below += lt;
            tied += le - lt;
        }
        let pairs = (self.n() * self.p()) as u64;
        PairCount {
            greater: pairs - below - tied,
            ties: tied,
            pairs,
        }
    }
}

/// User-supplied leakage function with optional inverse and density.
#[derive(Clone)]
pub struct CustomLeakage {
    eval: CurveFn,
    inverse: Option<CurveFn>,
    density: Option<CurveFn>,
}

impl fmt::Debug for CustomLeakage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomLeakage")
            .field("inverse", &self.inverse.is_some())
            .field("density", &self.density.is_some())
            .finish()
    }
}

#[derive(Debug, Clone)]
enum Source {
    Empirical(EmpiricalLeakage),
    Binormal(BinormalModel),
    Identity,
    Ideal,
    Custom(CustomLeakage),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceKind {
    Empirical,
    Binormal,
    Identity,
    Ideal,
    Custom,
}

impl fmt::Display for SourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SourceKind::Empirical => "empirical",
            SourceKind::Binormal => "binormal",
            SourceKind::Identity => "identity",
            SourceKind::Ideal => "ideal",
            SourceKind::Custom => "custom",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct LeakageCurve {
    source: Source,
}

impl LeakageCurve {
    pub fn empirical(f_n: EmpiricalCdf, f_p: EmpiricalCdf) -> Result<Self> {
        if f_n.is_empty() || f_p.is_empty() {
            return Err(Error::MissingClass);
        }
        Ok(Self {
            source: Source::Empirical(EmpiricalLeakage::new(f_n, f_p)),
        })
    }

    /// Convenience: both conditional CDFs from a dataset.
    pub fn from_data(data: &LabeledScores) -> Result<Self> {
        Self::empirical(
            conditional_cdf(data, Label::Negative)?,
            conditional_cdf(data, Label::Positive)?,
        )
    }

    pub fn binormal(model: BinormalModel) -> Self {
        Self {
            source: Source::Binormal(model),
        }
    }

    /// `G(u) = u`: a classifier whose scores ignore the label.
    pub fn identity() -> Self {
        Self {
            source: Source::Identity,
        }
    }

    /// `G = 0` on `[0, 1)`: fully separated classes.
    pub fn ideal() -> Self {
        Self {
            source: Source::Ideal,
        }
    }

    /// Arbitrary nondecreasing `G` on `[0, 1]`. Without an explicit inverse
    /// the generalized inverse is found by bisection.
    pub fn from_fn<F>(eval: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            source: Source::Custom(CustomLeakage {
                eval: Arc::new(eval),
                inverse: None,
                density: None,
            }),
        }
    }

    pub fn with_inverse<F>(mut self, inverse: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if let Source::Custom(c) = &mut self.source {
            c.inverse = Some(Arc::new(inverse));
        }
        self
    }

    pub fn with_density<F>(mut self, density: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if let Source::Custom(c) = &mut self.source {
            c.density = Some(Arc::new(density));
        }
        self
    }

    pub fn kind(&self) -> SourceKind {
        match &self.source {
            Source::Empirical(_) => SourceKind::Empirical,
            Source::Binormal(_) => SourceKind::Binormal,
            Source::Identity => SourceKind::Identity,
            Source::Ideal => SourceKind::Ideal,
            Source::Custom(_) => SourceKind::Custom,
        }
    }

    pub fn as_empirical(&self) -> Option<&EmpiricalLeakage> {
        match &self.source {
            Source::Empirical(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_binormal(&self) -> Option<&BinormalModel> {
        match &self.source {
            Source::Binormal(m) => Some(m),
            _ => None,
        }
    }

    /// Step functions have no density.
    pub fn is_step(&self) -> bool {
        matches!(self.source, Source::Empirical(_) | Source::Ideal)
    }

    pub fn has_density(&self) -> bool {
        match &self.source {
            Source::Binormal(_) | Source::Identity => true,
            Source::Custom(c) => c.density.is_some(),
            Source::Empirical(_) | Source::Ideal => false,
        }
    }

    pub fn eval(&self, u: f64) -> f64 {
        match &self.source {
            Source::Empirical(e) => e.eval(u),
            Source::Binormal(m) => m.leakage(u),
            Source::Identity => u.clamp(0.0, 1.0),
            Source::Ideal => {
                if u >= 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Source::Custom(c) => {
                if u <= 0.0 {
                    0.0
                } else if u >= 1.0 {
                    1.0
                } else {
                    (c.eval)(u)
                }
            }
        }
    }

    /// `G^-1(v)`; for step curves the lower generalized inverse
    /// `inf{u : G(u) >= v}`.
    pub fn inverse(&self, v: f64) -> f64 {
        match &self.source {
            Source::Empirical(e) => e.inverse(v),
            Source::Binormal(m) => m.leakage_inverse(v),
            Source::Identity => v.clamp(0.0, 1.0),
            Source::Ideal => {
                if v <= 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
            Source::Custom(c) => match &c.inverse {
                Some(inv) if v > 0.0 && v < 1.0 => inv(v),
                _ => self.bisect_lower(v),
            },
        }
    }

    /// Upper generalized inverse `sup{u : G(u) <= v}`: the largest negative
    /// quantile level whose leakage does not exceed `v`. Coincides with
    /// [`LeakageCurve::inverse`] wherever `G` is continuous and strictly
    /// increasing.
    pub fn inverse_upper(&self, v: f64) -> f64 {
        match &self.source {
            Source::Empirical(e) => e.inverse_upper(v),
            Source::Binormal(m) => m.leakage_inverse(v),
            Source::Identity => v.clamp(0.0, 1.0),
            Source::Ideal => {
                if v < 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
            Source::Custom(c) => match &c.inverse {
                Some(inv) if v > 0.0 && v < 1.0 => inv(v),
                _ => self.bisect_upper(v),
            },
        }
    }

    /// ROC ordinate `1 - G(1 - fpr)`. Binormal curves use
    /// `Phi(b + alpha Phi^-1(fpr))`, which keeps full relative precision
    /// for small rates.
    pub fn tpr_at_fpr(&self, fpr: f64) -> f64 {
        match &self.source {
            Source::Binormal(m) => std_normal_cdf(m.b() + m.alpha() * probit(fpr)),
            Source::Identity => fpr.clamp(0.0, 1.0),
            _ => 1.0 - self.eval(1.0 - fpr),
        }
    }

    /// Smallest `fpr` reaching `tpr`, `1 - G^-1(1 - tpr)` with the upper
    /// inverse. Binormal curves use `Phi((Phi^-1(tpr) - b) / alpha)`.
    pub fn fpr_at_tpr(&self, tpr: f64) -> f64 {
        match &self.source {
            Source::Binormal(m) => std_normal_cdf((probit(tpr) - m.b()) / m.alpha()),
            Source::Identity => tpr.clamp(0.0, 1.0),
            _ => 1.0 - self.inverse_upper(1.0 - tpr),
        }
    }

    fn bisect_lower(&self, v: f64) -> f64 {
        if v <= 0.0 {
            return 0.0;
        }
        if self.eval(1.0) < v {
            return 1.0;
        }
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid) >= v {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    fn bisect_upper(&self, v: f64) -> f64 {
        if v >= 1.0 {
            return 1.0;
        }
        if self.eval(0.0) > v {
            return 0.0;
        }
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid) <= v {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Leakage density `g(u)` on `(0, 1)`.
    pub fn density(&self, u: f64) -> Result<f64> {
        match &self.source {
            Source::Binormal(m) => Ok(m.leakage_density(u)),
            Source::Identity => Ok(1.0),
            Source::Custom(c) => c
                .density
                .as_ref()
                .map(|d| d(u))
                .ok_or(Error::DensityUnavailable),
            Source::Empirical(_) | Source::Ideal => Err(Error::DensityUnavailable),
        }
    }

    /// Threshold associated with negative quantile level `u` (so that
    /// `fpr = 1 - u`). Empirical curves give an observed score for the rule
    /// `score >= tau`; binormal curves give `mu_n + sigma_n Phi^-1(u)`.
    /// Other sources expose no threshold.
    pub fn threshold_at_level(&self, u: f64) -> Option<f64> {
        match &self.source {
            Source::Empirical(e) => Some(e.threshold_at_level(u)),
            Source::Binormal(m) => Some(m.threshold(probit(u))),
            _ => None,
        }
    }

    /// `G` evaluated at `u = Phi(z)`. Binormal curves skip the round trip
    /// through `u`, which keeps the tails accurate.
    fn eval_standardized(&self, z: f64) -> f64 {
        match &self.source {
            Source::Binormal(m) => std_normal_cdf(m.alpha() * z - m.b()),
            Source::Identity => std_normal_cdf(z),
            _ => self.eval(std_normal_cdf(z)),
        }
    }
}

/// Pair comparison counts between positive and negative scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    /// Pairs with `x_p > x_n`.
    pub greater: u64,
    /// Pairs with `x_p == x_n`.
    pub ties: u64,
    /// `P * N`.
    pub pairs: u64,
}

impl PairCount {
    /// `(greater + ties / 2) / pairs`.
    pub fn auroc(&self) -> f64 {
        (2 * self.greater + self.ties) as f64 / (2 * self.pairs) as f64
    }

    /// Complement `Pr(x_n >= x_p)` under the same half-credit convention.
    pub fn complement(&self) -> f64 {
        (2 * (self.pairs - self.greater) - self.ties) as f64 / (2 * self.pairs) as f64
    }
}

/// `int_0^1 G(v) dv`.
///
/// Step curves are integrated exactly. Smooth curves use a composite
/// trapezoid on `grid_size` points spaced uniformly in `z = Phi^-1(u)`,
/// which stays accurate when `G` has unbounded slope at the endpoints.
fn leakage_area(curve: &LeakageCurve, grid_size: usize) -> Result<Area> {
    check_grid(grid_size, 2)?;
    Ok(match &curve.source {
        Source::Empirical(e) => Area::Pairs(e.staircase_pairs()),
        Source::Ideal => Area::Numeric(0.0),
        Source::Identity => Area::Numeric(0.5),
        _ => Area::Numeric(unit_area(|z| curve.eval_standardized(z), grid_size)),
    })
}

enum Area {
    Pairs(PairCount),
    Numeric(f64),
}

/// `AUROC = 1 - int_0^1 G`. Empirical curves return the exact pair-count
/// value of the staircase.
pub fn auroc_from_leakage(curve: &LeakageCurve, grid_size: usize) -> Result<f64> {
    Ok(match leakage_area(curve, grid_size)? {
        Area::Pairs(pc) => pc.auroc(),
        Area::Numeric(area) => 1.0 - area,
    })
}

/// `Pr(x_n >= x_p) = int_0^1 G`, computed as the complement of
/// [`auroc_from_leakage`] so that the two sum to exactly one.
pub fn prob_negative_ge_positive(curve: &LeakageCurve, grid_size: usize) -> Result<f64> {
    Ok(1.0 - auroc_from_leakage(curve, grid_size)?)
}

/// Mann-Whitney pair count: positives above negatives, ties at half credit.
pub fn auroc_rank_oracle(data: &LabeledScores) -> Result<PairCount> {
    let mut neg: Vec<f64> = data.scores_of(Label::Negative).collect();
    let mut pos: Vec<f64> = data.scores_of(Label::Positive).collect();
    if neg.is_empty() || pos.is_empty() {
        return Err(Error::MissingClass);
    }
    neg.sort_by(f64::total_cmp);
    pos.sort_by(f64::total_cmp);
    // merge walk: for each positive, count negatives strictly below and equal
    let (mut greater, mut ties) = (0u64, 0u64);
    let (mut lt, mut le) = (0usize, 0usize);
    for &x in &pos {
        while lt < neg.len() && neg[lt] < x {
            lt += 1;
        }
        le = le.max(lt);
        while le < neg.len() && neg[le] <= x {
            le += 1;
        }
        greater += lt as u64;
        ties += (le - lt) as u64;
    }
    Ok(PairCount {
        greater,
        ties,
        pairs: (neg.len() * pos.len()) as u64,
    })
}

/// KL divergence estimate together with the integration settings used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KlEstimate {
    /// `D_KL(f_p || f_n)` in nats.
    pub nats: f64,
    pub epsilon: f64,
    pub grid_size: usize,
}

/// `D_KL(f_p || f_n) = int g ln g` over `(epsilon, 1 - epsilon)`, with the
/// default cutoff [`KL_EPSILON`].
pub fn kl_divergence_from_leakage(curve: &LeakageCurve, grid_size: usize) -> Result<KlEstimate> {
    kl_divergence_with_cutoff(curve, grid_size, KL_EPSILON)
}

pub fn kl_divergence_with_cutoff(
    curve: &LeakageCurve,
    grid_size: usize,
    epsilon: f64,
) -> Result<KlEstimate> {
    check_grid(grid_size, 2)?;
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(Error::InvalidParameter(format!(
            "KL cutoff must lie in (0, 0.5), got {epsilon}"
        )));
    }
    if !curve.has_density() {
        return Err(Error::DensityUnavailable);
    }
    let z_lo = std_normal_quantile(epsilon)?;
    let z_hi = -z_lo;
    let g_ln_g = |g: f64| if g > 0.0 { g * g.ln() } else { 0.0 };
    let nats = match &curve.source {
        Source::Identity => 0.0,
        Source::Binormal(m) => probit_trapezoid(
            |z| g_ln_g(m.density_at_standardized(z)),
            z_lo,
            z_hi,
            grid_size,
        ),
        _ => probit_trapezoid(
            |z| g_ln_g(curve.density(std_normal_cdf(z)).unwrap_or(0.0)),
            z_lo,
            z_hi,
            grid_size,
        ),
    };
    Ok(KlEstimate {
        nats,
        epsilon,
        grid_size,
    })
}

pub(crate) fn check_grid(grid_size: usize, min: usize) -> Result<()> {
    if grid_size < min {
        return Err(Error::InvalidParameter(format!(
            "grid size must be at least {min}, got {grid_size}"
        )));
    }
    Ok(())
}
