//! Binary-classifier evaluation through the class leakage function
//! `G = F_p o F_n^-1`.
//!
//! ROC and PR curves, AUROC, classifier dominance, constrained operating
//! points and the KL divergence between class score densities are all
//! computed from a [`LeakageCurve`], built either from labeled scores or
//! from an analytical [`BinormalModel`].

pub mod analysis;
pub mod binormal;
pub mod curves;
pub mod error;
pub mod leakage;
pub mod metrics;
pub mod quadrature;
pub mod score_model;

pub use analysis::{
    bounded_risk_region_check, capped_admission_point, compare_dominance,
    default_dominance_epsilon, min_risk_point, pareto_front, AdmissionCap, AdmissionPoint,
    BoundaryLine, BoundedRisk, DominanceReport, DominanceSummary, DominanceVerdict,
    OperatingConstraint, ParetoCandidate, ParetoPoint, RiskPoint, ANALYTIC_EPSILON,
};
pub use binormal::{std_normal_cdf, std_normal_pdf, std_normal_quantile, BinormalModel};
pub use curves::{
    binormal_family, leakage_table, miss_rate_from_specificity, pr_curve, roc_curve, roc_inverse,
    CurveKind, CurvePoint, CurveTable, FamilyMember,
};
pub use error::{Error, Result};
pub use leakage::{
    auroc_from_leakage, auroc_rank_oracle, kl_divergence_from_leakage, kl_divergence_with_cutoff,
    prob_negative_ge_positive, KlEstimate, LeakageCurve, PairCount, SourceKind, DEFAULT_GRID,
    KL_EPSILON,
};
pub use metrics::{
    accuracy, brier_score, confusion_at, f_beta, f_beta_harmonic, key_value_text, precision_at,
    rates_from_counts, reliability_bins, structured_text, threshold_sweep, ConfusionCounts,
    MetricsReport, RateSet, ReliabilityBin,
};
pub use score_model::{conditional_cdf, ClassPriors, EmpiricalCdf, Label, LabeledScores};
