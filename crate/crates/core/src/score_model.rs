//! Labeled score datasets, class priors and class-conditional empirical CDFs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Negative,
    Positive,
}

impl Label {
    pub fn from_bit(bit: u8) -> Option<Label> {
        match bit {
            0 => Some(Label::Negative),
            1 => Some(Label::Positive),
            _ => None,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Label::Negative => 0.0,
            Label::Positive => 1.0,
        }
    }
}

/// Raw `(score, label)` pairs in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledScores {
    entries: Vec<(f64, Label)>,
    positives: usize,
    negatives: usize,
}

impl LabeledScores {
    pub fn new(entries: Vec<(f64, Label)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if let Some(idx) = entries.iter().position(|(s, _)| !s.is_finite()) {
            return Err(Error::InvalidScore(idx));
        }
        let positives = entries
            .iter()
            .filter(|(_, l)| *l == Label::Positive)
            .count();
        let negatives = entries.len() - positives;
        Ok(Self {
            entries,
            positives,
            negatives,
        })
    }

    /// Builds a dataset from separate negative and positive score lists.
    pub fn from_classes(negatives: &[f64], positives: &[f64]) -> Result<Self> {
        let entries = negatives
            .iter()
            .map(|&s| (s, Label::Negative))
            .chain(positives.iter().map(|&s| (s, Label::Positive)))
            .collect();
        Self::new(entries)
    }

    /// Parses `score,label` records, one per line, label in {0, 1}.
    ///
    /// A leading `score,label` header is skipped. Blank lines and lines
    /// starting with `#` are ignored. Line numbers in errors are 1-based.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if entries.is_empty() && is_header(line) {
                continue;
            }
            let mut fields = line.split(',').map(str::trim);
            let (Some(score), Some(label), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected 2 fields `score,label`, got `{line}`"),
                });
            };
            let score: f64 = score.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("cannot parse score `{score}`"),
            })?;
            if !score.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("score `{score}` is not finite"),
                });
            }
            let label = label
                .parse::<u8>()
                .ok()
                .and_then(Label::from_bit)
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: format!("label must be 0 or 1, got `{label}`"),
                })?;
            entries.push((score, label));
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(f64, Label)] {
        &self.entries
    }

    pub fn positives(&self) -> usize {
        self.positives
    }

    pub fn negatives(&self) -> usize {
        self.negatives
    }

    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn scores_of(&self, label: Label) -> impl Iterator<Item = f64> + '_ {
        self.entries
            .iter()
            .filter(move |(_, l)| *l == label)
            .map(|(s, _)| *s)
    }

    /// Distinct scores in ascending order.
    pub fn distinct_scores(&self) -> Vec<f64> {
        let mut scores: Vec<f64> = self.entries.iter().map(|(s, _)| *s).collect();
        scores.sort_by(f64::total_cmp);
        scores.dedup();
        scores
    }
}

fn is_header(line: &str) -> bool {
    let mut fields = line.split(',').map(|f| f.trim().to_ascii_lowercase());
    matches!(
        (
            fields.next().as_deref(),
            fields.next().as_deref(),
            fields.next()
        ),
        (Some("score"), Some("label"), None)
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassPriors {
    pi_p: f64,
    pi_n: f64,
}

impl ClassPriors {
    pub fn new(pi_p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&pi_p) {
            return Err(Error::InvalidParameter(format!(
                "pi_p must lie in [0, 1], got {pi_p}"
            )));
        }
        Ok(Self {
            pi_p,
            pi_n: 1.0 - pi_p,
        })
    }

    /// `pi_p = P/T`, `pi_n = N/T`.
    pub fn estimate(data: &LabeledScores) -> Self {
        let t = data.total() as f64;
        Self {
            pi_p: data.positives() as f64 / t,
            pi_n: data.negatives() as f64 / t,
        }
    }

    pub fn pi_p(&self) -> f64 {
        self.pi_p
    }

    pub fn pi_n(&self) -> f64 {
        self.pi_n
    }

    /// `pi_n / pi_p`; infinite when there are no positives.
    pub fn odds_negative(&self) -> f64 {
        self.pi_n / self.pi_p
    }
}

/// Right-continuous step CDF `F(x) = #{samples <= x} / n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(samples: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut sorted: Vec<f64> = samples.into_iter().collect();
        if sorted.is_empty() {
            return Err(Error::MissingClass);
        }
        if let Some(idx) = sorted.iter().position(|s| !s.is_finite()) {
            return Err(Error::InvalidScore(idx));
        }
        sorted.sort_by(f64::total_cmp);
        Ok(Self { sorted })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted_scores(&self) -> &[f64] {
        &self.sorted
    }

    pub fn count_le(&self, x: f64) -> usize {
        self.sorted.partition_point(|&s| s <= x)
    }

    pub fn count_lt(&self, x: f64) -> usize {
        self.sorted.partition_point(|&s| s < x)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.count_le(x) as f64 / self.len() as f64
    }

    /// CDF with ties at `x` given half weight: `(#{< x} + #{= x}/2) / n`.
    pub fn eval_mid(&self, x: f64) -> f64 {
        let lt = self.count_lt(x);
        let le = self.count_le(x);
        (lt as f64 + 0.5 * (le - lt) as f64) / self.len() as f64
    }

    /// Generalized inverse `inf{x : F(x) >= u}` for `u` in `(0, 1]`.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(Error::DomainError(u));
        }
        Ok(self.sorted[self.quantile_rank(u) - 1])
    }

    /// Smallest `k` in `1..=n` with `k/n >= u`, evaluated in the same
    /// floating-point arithmetic as [`EmpiricalCdf::eval`].
    pub(crate) fn quantile_rank(&self, u: f64) -> usize {
        let n = self.len();
        let nf = n as f64;
        let mut k = ((u * nf).ceil() as usize).clamp(1, n);
        while k > 1 && (k - 1) as f64 / nf >= u {
            k -= 1;
        }
        while k < n && (k as f64) / nf < u {
            k += 1;
        }
        k
    }
}

pub fn conditional_cdf(data: &LabeledScores, label: Label) -> Result<EmpiricalCdf> {
    EmpiricalCdf::new(data.scores_of(label))
}
