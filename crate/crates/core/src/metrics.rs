//! Threshold-indexed confusion counts, rates, accuracy, F-beta and
//! calibration scores.
//!
//! A sample is predicted positive iff its score is `>= tau`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::score_model::{ClassPriors, Label, LabeledScores};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tau: f64,
    pub tp: usize,
    pub fp: usize,
    pub tn: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
}

impl ConfusionCounts {
    pub fn positives(&self) -> usize {
        self.tp + self.fn_
    }

    pub fn negatives(&self) -> usize {
        self.tn + self.fp
    }

    pub fn total(&self) -> usize {
        self.tp + self.fp + self.tn + self.fn_
    }

    pub fn predicted_positive(&self) -> usize {
        self.tp + self.fp
    }
}

pub fn confusion_at(data: &LabeledScores, tau: f64) -> ConfusionCounts {
    let mut c = ConfusionCounts {
        tau,
        tp: 0,
        fp: 0,
        tn: 0,
        fn_: 0,
    };
    for &(score, label) in data.entries() {
        match (score >= tau, label) {
            (true, Label::Positive) => c.tp += 1,
            (true, Label::Negative) => c.fp += 1,
            (false, Label::Negative) => c.tn += 1,
            (false, Label::Positive) => c.fn_ += 1,
        }
    }
    c
}

/// Confusion counts at every distinct score (ascending) followed by
/// `tau = +inf`, so the sweep runs from "all positive" to "all negative".
pub fn threshold_sweep(data: &LabeledScores) -> Vec<ConfusionCounts> {
    let mut sorted: Vec<(f64, Label)> = data.entries().to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut c = ConfusionCounts {
        tau: f64::NEG_INFINITY,
        tp: data.positives(),
        fp: data.negatives(),
        tn: 0,
        fn_: 0,
    };
    let mut out = Vec::with_capacity(sorted.len() + 1);
    let mut i = 0;
    while i < sorted.len() {
        let s = sorted[i].0;
        c.tau = s;
        out.push(c);
        while i < sorted.len() && sorted[i].0 == s {
            match sorted[i].1 {
                Label::Positive => {
                    c.tp -= 1;
                    c.fn_ += 1;
                }
                Label::Negative => {
                    c.fp -= 1;
                    c.tn += 1;
                }
            }
            i += 1;
        }
    }
    c.tau = f64::INFINITY;
    out.push(c);
    out
}

/// Class-conditional rates. `tnr = 1 - fpr` and `fnr = 1 - tpr` hold exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateSet {
    pub tpr: f64,
    pub fpr: f64,
    pub tnr: f64,
    pub fnr: f64,
}

impl RateSet {
    pub fn new(tpr: f64, fpr: f64) -> Result<Self> {
        for r in [tpr, fpr] {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::DomainError(r));
            }
        }
        Ok(Self {
            tpr,
            fpr,
            tnr: 1.0 - fpr,
            fnr: 1.0 - tpr,
        })
    }

    pub fn recall(&self) -> f64 {
        self.tpr
    }

    pub fn specificity(&self) -> f64 {
        self.tnr
    }

    pub fn miss_rate(&self) -> f64 {
        self.fnr
    }
}

pub fn rates_from_counts(
    c: &ConfusionCounts,
    positives: usize,
    negatives: usize,
) -> Result<RateSet> {
    if positives == 0 || negatives == 0 {
        return Err(Error::MissingClass);
    }
    if c.positives() != positives || c.negatives() != negatives {
        return Err(Error::InvalidParameter(format!(
            "counts cover {} positives and {} negatives, expected {positives} and {negatives}",
            c.positives(),
            c.negatives()
        )));
    }
    RateSet::new(
        c.tp as f64 / positives as f64,
        c.fp as f64 / negatives as f64,
    )
}

/// `pi_p * tpr + pi_n * tnr`.
pub fn accuracy(rates: &RateSet, priors: ClassPriors) -> f64 {
    priors.pi_p() * rates.tpr + priors.pi_n() * rates.tnr
}

/// `pi_p tpr / (pi_p tpr + pi_n fpr)`.
pub fn precision_at(rates: &RateSet, priors: ClassPriors) -> Result<f64> {
    let tp = priors.pi_p() * rates.tpr;
    let denom = tp + priors.pi_n() * rates.fpr;
    if denom <= 0.0 {
        return Err(Error::UndefinedPrecision);
    }
    Ok(tp / denom)
}

fn check_beta(beta: f64) -> Result<()> {
    if beta.is_finite() && beta > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "beta must be positive, got {beta}"
        )))
    }
}

/// `F_beta` directly from rates:
/// `(1 + beta^2) tpr / (tpr + beta^2 + (pi_n / pi_p) fpr)`.
///
/// Zero when `tpr = 0`.
pub fn f_beta(rates: &RateSet, priors: ClassPriors, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    if priors.pi_p() <= 0.0 {
        return Err(Error::DegeneratePriors);
    }
    if rates.tpr == 0.0 {
        return Ok(0.0);
    }
    let b2 = beta * beta;
    Ok((1.0 + b2) * rates.tpr / (rates.tpr + b2 + priors.odds_negative() * rates.fpr))
}

/// `F_beta` as the weighted harmonic mean of precision and recall,
/// `1 / F = (1 / P + beta^2 / R) / (1 + beta^2)`.
pub fn f_beta_harmonic(rates: &RateSet, priors: ClassPriors, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    if priors.pi_p() <= 0.0 {
        return Err(Error::DegeneratePriors);
    }
    if rates.tpr == 0.0 {
        return Ok(0.0);
    }
    let p = precision_at(rates, priors)?;
    let r = rates.tpr;
    let b2 = beta * beta;
    Ok((1.0 + b2) * p * r / (b2 * p + r))
}

fn check_probabilities(data: &LabeledScores) -> Result<()> {
    match data
        .entries()
        .iter()
        .position(|(s, _)| !(0.0..=1.0).contains(s))
    {
        Some(idx) => Err(Error::NotAProbability(idx)),
        None => Ok(()),
    }
}

/// Mean of `(score - label)^2`, scores read as positive-class probabilities.
pub fn brier_score(data: &LabeledScores) -> Result<f64> {
    check_probabilities(data)?;
    let sum: f64 = data
        .entries()
        .iter()
        .map(|&(s, l)| (s - l.as_f64()).powi(2))
        .sum();
    Ok(sum / data.total() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReliabilityBin {
    pub lower: f64,
    pub upper: f64,
    pub center: f64,
    /// `None` for empty bins.
    pub mean_score: Option<f64>,
    pub positive_fraction: Option<f64>,
    pub count: usize,
}

/// Equal-width bins over `[0, 1]`. A score `s` lands in bin
/// `min(floor(s * n), n - 1)`, so bins are `[k/n, (k+1)/n)` and the top bin
/// also holds 1.
pub fn reliability_bins(data: &LabeledScores, n_bins: usize) -> Result<Vec<ReliabilityBin>> {
    if n_bins == 0 {
        return Err(Error::InvalidParameter("n_bins must be at least 1".into()));
    }
    check_probabilities(data)?;
    let mut sums = vec![(0.0f64, 0usize, 0usize); n_bins];
    for &(s, l) in data.entries() {
        let k = ((s * n_bins as f64) as usize).min(n_bins - 1);
        sums[k].0 += s;
        sums[k].1 += usize::from(l == Label::Positive);
        sums[k].2 += 1;
    }
    let width = 1.0 / n_bins as f64;
    Ok(sums
        .into_iter()
        .enumerate()
        .map(|(k, (score_sum, pos, count))| {
            let nonempty = count > 0;
            ReliabilityBin {
                lower: k as f64 * width,
                upper: (k + 1) as f64 * width,
                center: (k as f64 + 0.5) * width,
                mean_score: nonempty.then(|| score_sum / count as f64),
                positive_fraction: nonempty.then(|| pos as f64 / count as f64),
                count,
            }
        })
        .collect())
}

/// Everything computable at a single threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub tau: f64,
    pub tp: usize,
    pub fp: usize,
    pub tn: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tpr: f64,
    pub fpr: f64,
    pub tnr: f64,
    pub fnr: f64,
    pub accuracy: f64,
    pub precision: Option<f64>,
    pub f_beta: f64,
    pub beta: f64,
    pub pi_p: f64,
    /// Present only when every score lies in `[0, 1]`.
    pub brier: Option<f64>,
}

impl MetricsReport {
    /// `priors` defaults to the class frequencies of `data`.
    pub fn compute(
        data: &LabeledScores,
        tau: f64,
        priors: Option<ClassPriors>,
        beta: f64,
    ) -> Result<Self> {
        let c = confusion_at(data, tau);
        let rates = rates_from_counts(&c, data.positives(), data.negatives())?;
        let priors = priors.unwrap_or_else(|| ClassPriors::estimate(data));
        let precision = match precision_at(&rates, priors) {
            Ok(p) => Some(p),
            Err(Error::UndefinedPrecision) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            tau,
            tp: c.tp,
            fp: c.fp,
            tn: c.tn,
            fn_: c.fn_,
            tpr: rates.tpr,
            fpr: rates.fpr,
            tnr: rates.tnr,
            fnr: rates.fnr,
            accuracy: accuracy(&rates, priors),
            precision,
            f_beta: f_beta(&rates, priors, beta)?,
            beta,
            pi_p: priors.pi_p(),
            brier: brier_score(data).ok(),
        })
    }
}

/// Flattens a serializable report into `name=value` lines. Nested objects
/// use dotted names, arrays use the element index, and missing or
/// non-finite values are written as `none`.
pub fn key_value_text<T: Serialize>(report: &T) -> Result<String> {
    let value = serde_json::to_value(report)
        .map_err(|e| Error::NumericalFailure(format!("report serialization: {e}")))?;
    let mut out = String::new();
    flatten("", &value, &mut out);
    Ok(out)
}

fn flatten(prefix: &str, value: &Value, out: &mut String) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        Value::Null => out.push_str(&format!("{prefix}=none\n")),
        Value::String(s) => out.push_str(&format!("{prefix}={s}\n")),
        other => out.push_str(&format!("{prefix}={other}\n")),
    }
}

/// Pretty-printed JSON document for a report.
pub fn structured_text<T: Serialize>(report: &T) -> Result<String> {
    serde_json::to_string_pretty(report)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::NumericalFailure(format!("report serialization: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binormal::std_normal_cdf;
    use proptest::prelude::*;

    fn four() -> LabeledScores {
        LabeledScores::from_classes(&[1.0, 2.0], &[3.0, 4.0]).unwrap()
    }

    fn counts(tp: usize, fp: usize, tn: usize, fn_: usize) -> ConfusionCounts {
        ConfusionCounts {
            tau: 0.0,
            tp,
            fp,
            tn,
            fn_,
        }
    }

    #[test]
    fn confusion_examples() {
        let c = confusion_at(&four(), 2.5);
        assert_eq!((c.tp, c.fp, c.tn, c.fn_), (2, 0, 2, 0));
        let c = confusion_at(&four(), 1.5);
        assert_eq!((c.tp, c.fp, c.tn, c.fn_), (2, 1, 1, 0));
        let c = confusion_at(&four(), f64::NEG_INFINITY);
        assert_eq!((c.tp, c.fp, c.tn, c.fn_), (2, 2, 0, 0));
        // the boundary score is predicted positive
        let c = confusion_at(&four(), 2.0);
        assert_eq!((c.tp, c.fp), (2, 1));
    }

    #[test]
    fn rates_examples() {
        let r = rates_from_counts(&counts(2, 1, 1, 0), 2, 2).unwrap();
        assert_eq!((r.tpr, r.fpr), (1.0, 0.5));
        let r = rates_from_counts(&counts(3, 0, 5, 0), 3, 5).unwrap();
        assert_eq!((r.tpr, r.fpr), (1.0, 0.0));
        let r = rates_from_counts(&counts(0, 0, 5, 3), 3, 5).unwrap();
        assert_eq!(r.tpr, 0.0);
        assert_eq!(r.fnr, 1.0);
        assert_eq!(
            rates_from_counts(&counts(0, 0, 5, 0), 0, 5),
            Err(Error::MissingClass)
        );
        assert!(rates_from_counts(&counts(1, 0, 5, 0), 2, 5).is_err());
    }

    #[test]
    fn accuracy_examples() {
        let pri = ClassPriors::new(0.3).unwrap();
        assert_eq!(accuracy(&RateSet::new(1.0, 0.0).unwrap(), pri), 1.0);
        assert!((accuracy(&RateSet::new(1.0, 1.0).unwrap(), pri) - 0.3).abs() < 1e-15);
        // binormal alpha = 1, b = 2 at t = 1: tpr = tnr = Phi(1)
        let phi1 = std_normal_cdf(1.0);
        let r = RateSet::new(phi1, 1.0 - phi1).unwrap();
        for p in [0.1, 0.5, 0.9] {
            let a = accuracy(&r, ClassPriors::new(p).unwrap());
            assert!((a - 0.841_345).abs() < 1e-6);
        }
    }

    #[test]
    fn f_beta_examples() {
        let half = ClassPriors::new(0.5).unwrap();
        assert_eq!(
            f_beta(&RateSet::new(1.0, 0.0).unwrap(), half, 1.0).unwrap(),
            1.0
        );
        assert_eq!(
            f_beta(&RateSet::new(0.0, 0.3).unwrap(), half, 2.0).unwrap(),
            0.0
        );

        let r = RateSet::new(0.5, 1.0 - std_normal_cdf(1.0)).unwrap();
        let p = precision_at(&r, half).unwrap();
        let f1 = f_beta(&r, half, 1.0).unwrap();
        assert!((f1 - 2.0 * p * 0.5 / (p + 0.5)).abs() < 1e-15);
        assert!((f1 - 0.602_898).abs() < 1e-6);

        // precision = recall = 0.4 at pi_p = 0.5 needs fpr = 0.6
        let r = RateSet::new(0.4, 0.6).unwrap();
        assert!((precision_at(&r, half).unwrap() - 0.4).abs() < 1e-15);
        for beta in [0.25, 1.0, 3.0] {
            assert!((f_beta(&r, half, beta).unwrap() - 0.4).abs() < 1e-15);
        }

        assert!(f_beta(&r, half, 0.0).is_err());
        assert_eq!(
            f_beta(&r, ClassPriors::new(0.0).unwrap(), 1.0),
            Err(Error::DegeneratePriors)
        );
    }

    #[test]
    fn precision_examples() {
        let pri = ClassPriors::new(0.2).unwrap();
        assert_eq!(
            precision_at(&RateSet::new(0.7, 0.0).unwrap(), pri).unwrap(),
            1.0
        );
        let p = precision_at(&RateSet::new(0.35, 0.35).unwrap(), pri).unwrap();
        assert!((p - 0.2).abs() < 1e-15);
        assert_eq!(
            precision_at(&RateSet::new(0.0, 0.0).unwrap(), pri),
            Err(Error::UndefinedPrecision)
        );
    }

    #[test]
    fn brier_examples() {
        let perfect = LabeledScores::from_classes(&[0.0, 0.0], &[1.0]).unwrap();
        assert_eq!(brier_score(&perfect).unwrap(), 0.0);
        let inverted = LabeledScores::from_classes(&[1.0], &[0.0, 0.0]).unwrap();
        assert_eq!(brier_score(&inverted).unwrap(), 1.0);
        let flat = LabeledScores::from_classes(&[0.5, 0.5], &[0.5]).unwrap();
        assert_eq!(brier_score(&flat).unwrap(), 0.25);
        let d = LabeledScores::from_classes(&[0.2], &[0.7]).unwrap();
        assert!((brier_score(&d).unwrap() - 0.065).abs() < 1e-15);
        let bad = LabeledScores::from_classes(&[0.2, 1.5], &[0.7]).unwrap();
        assert_eq!(brier_score(&bad), Err(Error::NotAProbability(1)));
    }

    #[test]
    fn reliability_examples() {
        let mut entries = vec![(0.7, Label::Positive); 7];
        entries.extend(vec![(0.7, Label::Negative); 3]);
        let d = LabeledScores::new(entries).unwrap();
        let bins = reliability_bins(&d, 10).unwrap();
        assert_eq!(bins.len(), 10);
        assert_eq!(bins[7].count, 10);
        assert!((bins[7].positive_fraction.unwrap() - 0.7).abs() < 1e-15);
        assert!(bins.iter().enumerate().all(|(k, b)| k == 7 || b.count == 0));
        assert_eq!(bins[0].mean_score, None);

        let one = LabeledScores::from_classes(&[], &[1.0]).unwrap();
        let bins = reliability_bins(&one, 4).unwrap();
        assert_eq!(bins.iter().filter(|b| b.count > 0).count(), 1);
        assert_eq!(bins[3].count, 1);
        let zero = LabeledScores::from_classes(&[0.0], &[]).unwrap();
        assert_eq!(reliability_bins(&zero, 4).unwrap()[0].count, 1);
        assert!(reliability_bins(&one, 0).is_err());
    }

    #[test]
    fn sweep_runs_from_all_positive_to_all_negative() {
        let d = LabeledScores::from_classes(&[1.0, 3.0, 3.0], &[2.0, 3.0]).unwrap();
        let sweep = threshold_sweep(&d);
        assert_eq!(sweep.len(), 4);
        assert_eq!((sweep[0].tp, sweep[0].fp), (2, 3));
        assert_eq!((sweep[3].tp, sweep[3].fp), (0, 0));
        assert_eq!(sweep[3].tau, f64::INFINITY);
        for c in &sweep[..3] {
            assert_eq!(*c, confusion_at(&d, c.tau));
        }
    }

    #[test]
    fn report_formats() {
        let r = MetricsReport::compute(&four(), 2.5, None, 1.0).unwrap();
        assert_eq!(r.precision, Some(1.0));
        assert_eq!(r.brier, None);
        let kv = key_value_text(&r).unwrap();
        let lines: Vec<&str> = kv.lines().collect();
        assert_eq!(lines[0], "tau=2.5");
        assert_eq!(lines[4], "fn=0");
        assert!(lines.contains(&"brier=none"));
        let json: serde_json::Value = serde_json::from_str(&structured_text(&r).unwrap()).unwrap();
        for key in [
            "tau",
            "tp",
            "fp",
            "tn",
            "fn",
            "tpr",
            "fpr",
            "tnr",
            "fnr",
            "accuracy",
            "precision",
            "f_beta",
            "brier",
        ] {
            assert!(json.get(key).is_some(), "{key}");
        }
        let r = MetricsReport::compute(&four(), 10.0, None, 1.0).unwrap();
        assert_eq!(r.precision, None);
        assert_eq!(r.f_beta, 0.0);
    }

    fn dataset() -> impl Strategy<Value = LabeledScores> {
        (
            prop::collection::vec(-5i32..5, 1..30),
            prop::collection::vec(-5i32..5, 1..30),
        )
            .prop_map(|(n, p)| {
                let n: Vec<f64> = n.into_iter().map(|v| f64::from(v) / 4.0).collect();
                let p: Vec<f64> = p.into_iter().map(|v| f64::from(v) / 4.0).collect();
                LabeledScores::from_classes(&n, &p).unwrap()
            })
    }

    proptest! {
        #[test]
        fn sweep_rates_are_monotone(d in dataset()) {
            let sweep = threshold_sweep(&d);
            let rates: Vec<RateSet> = sweep
                .iter()
                .map(|c| rates_from_counts(c, d.positives(), d.negatives()).unwrap())
                .collect();
            for w in rates.windows(2) {
                prop_assert!(w[1].tpr <= w[0].tpr && w[1].fpr <= w[0].fpr);
            }
            for c in &sweep {
                prop_assert_eq!(c.positives(), d.positives());
                prop_assert_eq!(c.negatives(), d.negatives());
                prop_assert_eq!(c.total(), d.total());
            }
        }

        #[test]
        fn accuracy_matches_counts(d in dataset(), tau in -2.0f64..2.0) {
            let c = confusion_at(&d, tau);
            let r = rates_from_counts(&c, d.positives(), d.negatives()).unwrap();
            let from_rates = accuracy(&r, ClassPriors::estimate(&d));
            let from_counts = (c.tp + c.tn) as f64 / c.total() as f64;
            prop_assert!((from_rates - from_counts).abs() <= 4.0 * f64::EPSILON);
        }

        #[test]
        fn f_beta_forms_agree(tpr in 1e-6f64..1.0, fpr in 0.0f64..1.0, pi in 0.01f64..0.99, beta in 0.05f64..10.0) {
            let r = RateSet::new(tpr, fpr).unwrap();
            let pri = ClassPriors::new(pi).unwrap();
            let a = f_beta(&r, pri, beta).unwrap();
            let b = f_beta_harmonic(&r, pri, beta).unwrap();
            prop_assert!((a - b).abs() <= 1e-12);
        }

        #[test]
        fn reliability_counts_cover_data(d in dataset(), bins in 1usize..20) {
            let d = LabeledScores::new(
                d.entries().iter().map(|&(s, l)| ((s + 1.25) / 2.5, l)).collect(),
            ).unwrap();
            let rb = reliability_bins(&d, bins).unwrap();
            prop_assert_eq!(rb.iter().map(|b| b.count).sum::<usize>(), d.total());
            for b in rb.iter().filter(|b| b.count > 0) {
                let m = b.mean_score.unwrap();
                prop_assert!(m >= b.lower - 1e-12 && m <= b.upper + 1e-12);
            }
        }
    }
}
