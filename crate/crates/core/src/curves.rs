//! ROC and PR curves sampled from a leakage curve.
//!
//! `tpr = 1 - G(1 - fpr)` and
//! `ppv = tpr / (tpr + (pi_n / pi_p) * (1 - G^-1(1 - tpr)))`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::leakage::{check_grid, LeakageCurve, SourceKind};
use crate::score_model::ClassPriors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveKind {
    #[serde(rename = "ROC")]
    Roc,
    #[serde(rename = "PR")]
    Pr,
    /// `(u, G(u))` samples of the leakage function itself.
    #[serde(rename = "LEAKAGE")]
    Leakage,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveKind::Roc => "ROC",
            CurveKind::Pr => "PR",
            CurveKind::Leakage => "LEAKAGE",
        })
    }
}

impl FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ROC" => Ok(CurveKind::Roc),
            "PR" => Ok(CurveKind::Pr),
            "LEAKAGE" => Ok(CurveKind::Leakage),
            other => Err(Error::InvalidParameter(format!(
                "unknown curve kind `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub x: f64,
    pub y: f64,
    /// Threshold or curve parameter that produced the point, when known.
    pub tau: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveTable {
    pub kind: CurveKind,
    pub points: Vec<CurvePoint>,
    pub source: Option<SourceKind>,
    /// Priors used to build the table; always present for PR, never for ROC.
    pub priors: Option<ClassPriors>,
    pub grid: usize,
}

impl CurveTable {
    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.x)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.y)
    }

    /// Trapezoid area under the polyline through the points in table order.
    pub fn area(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[1].x - w[0].x) * 0.5 * (w[0].y + w[1].y))
            .sum()
    }

    /// `y` at `x` by linear interpolation; for repeated `x` the last
    /// (highest) point is used.
    pub fn y_at(&self, x: f64) -> Option<f64> {
        let pts = &self.points;
        let idx = pts.partition_point(|p| p.x <= x);
        if idx == 0 {
            return None;
        }
        let left = pts[idx - 1];
        if left.x == x || idx == pts.len() {
            return (left.x == x).then_some(left.y);
        }
        let right = pts[idx];
        let w = (x - left.x) / (right.x - left.x);
        Some(left.y + w * (right.y - left.y))
    }

    /// Delimited text: a `# kind=.. grid=.. pi_p=..` comment, a `# source=..`
    /// comment, the `x,y,tau` header and one row per point. Unknown
    /// thresholds are written as `nan`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let pi_p = self
            .priors
            .map(|p| p.pi_p().to_string())
            .unwrap_or_else(|| "none".into());
        let _ = writeln!(out, "# kind={} grid={} pi_p={}", self.kind, self.grid, pi_p);
        if let Some(src) = self.source {
            let _ = writeln!(out, "# source={src}");
        }
        out.push_str("x,y,tau\n");
        for p in &self.points {
            let tau = p.tau.unwrap_or(f64::NAN);
            let _ = writeln!(out, "{},{},{}", p.x, p.y, tau);
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut kind = None;
        let mut grid = 0;
        let mut priors = None;
        let mut source = None;
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if line.is_empty() || line == "x,y,tau" {
                continue;
            }
            if let Some(meta) = line.strip_prefix('#') {
                for pair in meta.split_whitespace() {
                    let Some((key, value)) = pair.split_once('=') else {
                        continue;
                    };
                    match key {
                        "kind" => kind = Some(value.parse::<CurveKind>()?),
                        "grid" => {
                            grid = value
                                .parse()
                                .map_err(|_| parse_err(format!("bad grid `{value}`")))?
                        }
                        "pi_p" if value != "none" => {
                            let v: f64 = value
                                .parse()
                                .map_err(|_| parse_err(format!("bad pi_p `{value}`")))?;
                            priors = Some(ClassPriors::new(v)?);
                        }
                        "source" => {
                            source =
                                serde_json::from_value(serde_json::Value::String(value.to_string()))
                                    .ok()
                        }
                        _ => {}
                    }
                }
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(parse_err(format!("expected `x,y,tau`, got `{line}`")));
            }
            let num = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| parse_err(format!("cannot parse number `{s}`")))
            };
            let tau = num(fields[2])?;
            points.push(CurvePoint {
                x: num(fields[0])?,
                y: num(fields[1])?,
                tau: (!tau.is_nan()).then_some(tau),
            });
        }
        let kind = kind.ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing `# kind=` metadata line".into(),
        })?;
        Ok(Self {
            kind,
            points,
            source,
            priors,
            grid,
        })
    }
}

/// ROC table on a uniform `fpr` grid of `grid_size` points including 0 and 1.
///
/// Priors are never consulted. Empirical curves additionally carry every
/// exact staircase corner, and grid points that fall inside a diagonal
/// segment (tied negative and positive scores) are placed on that segment.
/// The ideal curve also carries the `(0, 1)` corner.
pub fn roc_curve(curve: &LeakageCurve, grid_size: usize) -> Result<CurveTable> {
    check_grid(grid_size, 2)?;
    let last = (grid_size - 1) as f64;
    let mut points: Vec<CurvePoint> = (0..grid_size)
        .map(|i| {
            let fpr = i as f64 / last;
            let u = (grid_size - 1 - i) as f64 / last;
            let tpr = if curve.as_binormal().is_some() {
                curve.tpr_at_fpr(fpr)
            } else {
                1.0 - curve.eval(u)
            };
            CurvePoint {
                x: fpr,
                y: tpr,
                tau: curve.threshold_at_level(u),
            }
        })
        .collect();

    if let Some(emp) = curve.as_empirical() {
        let corners: Vec<CurvePoint> = emp
            .staircase()
            .into_iter()
            .map(|(x, y, tau)| CurvePoint {
                x,
                y,
                tau: Some(tau),
            })
            .collect();
        for seg in corners.windows(2) {
            let (a, b) = (seg[0], seg[1]);
            if a.x < b.x && a.y < b.y {
                for p in points.iter_mut().filter(|p| p.x > a.x && p.x < b.x) {
                    p.y = a.y + (p.x - a.x) / (b.x - a.x) * (b.y - a.y);
                    p.tau = b.tau;
                }
            }
        }
        points.extend(corners);
        points.sort_by(|p, q| p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y)));
        points.dedup_by(|p, q| p.x == q.x && p.y == q.y);
    } else if curve.kind() == SourceKind::Ideal {
        // the whole jump of G at u = 1 is a vertical segment at fpr = 0
        points.insert(
            1,
            CurvePoint {
                x: 0.0,
                y: 1.0,
                tau: None,
            },
        );
    }

    Ok(CurveTable {
        kind: CurveKind::Roc,
        points,
        source: Some(curve.kind()),
        priors: None,
        grid: grid_size,
    })
}

/// `fpr = 1 - G^-1(1 - tpr)`: the smallest false-positive rate at which the
/// curve reaches the given true-positive rate.
pub fn roc_inverse(curve: &LeakageCurve, tpr: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&tpr) {
        return Err(Error::DomainError(tpr));
    }
    Ok(curve.fpr_at_tpr(tpr))
}

/// `miss-rate = G(specificity)`.
pub fn miss_rate_from_specificity(curve: &LeakageCurve, specificity: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&specificity) {
        return Err(Error::DomainError(specificity));
    }
    Ok(curve.eval(specificity))
}

/// PR table on a uniform recall grid over `(0, 1]` (recall 0 is omitted).
pub fn pr_curve(curve: &LeakageCurve, priors: ClassPriors, grid_size: usize) -> Result<CurveTable> {
    check_grid(grid_size, 2)?;
    if priors.pi_p() <= 0.0 {
        return Err(Error::DegeneratePriors);
    }
    let odds = priors.odds_negative();
    let last = (grid_size - 1) as f64;
    let points = (1..grid_size)
        .map(|i| {
            let recall = i as f64 / last;
            let (fpr, u) = if curve.as_binormal().is_some() {
                let fpr = curve.fpr_at_tpr(recall);
                (fpr, 1.0 - fpr)
            } else {
                let u = curve.inverse_upper((grid_size - 1 - i) as f64 / last);
                (1.0 - u, u)
            };
            CurvePoint {
                x: recall,
                y: recall / (recall + odds * fpr),
                tau: curve.threshold_at_level(u),
            }
        })
        .collect();
    Ok(CurveTable {
        kind: CurveKind::Pr,
        points,
        source: Some(curve.kind()),
        priors: Some(priors),
        grid: grid_size,
    })
}

/// `(u, G(u))` on a uniform grid of `grid_size` points over `[0, 1]`.
pub fn leakage_table(curve: &LeakageCurve, grid_size: usize) -> Result<CurveTable> {
    check_grid(grid_size, 2)?;
    let last = (grid_size - 1) as f64;
    let points = (0..grid_size)
        .map(|i| {
            let u = i as f64 / last;
            CurvePoint {
                x: u,
                y: curve.eval(u),
                tau: curve.threshold_at_level(u),
            }
        })
        .collect();
    Ok(CurveTable {
        kind: CurveKind::Leakage,
        points,
        source: Some(curve.kind()),
        priors: None,
        grid: grid_size,
    })
}

/// One table of a binormal sweep. `pi_p` is set for PR tables only.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyMember {
    pub alpha: f64,
    pub b: f64,
    pub pi_p: Option<f64>,
    pub table: CurveTable,
}

/// ROC tables for every `(alpha, b)` and PR tables for every
/// `(alpha, b, pi_p)`, in nested input order (alpha outermost, the ROC table
/// before the PR tables of the same model).
pub fn binormal_family(
    alphas: &[f64],
    bs: &[f64],
    pi_ps: &[f64],
    grid_size: usize,
) -> Result<Vec<FamilyMember>> {
    let mut out = Vec::with_capacity(alphas.len() * bs.len() * (1 + pi_ps.len()));
    for &alpha in alphas {
        for &b in bs {
            let curve =
                LeakageCurve::binormal(crate::binormal::BinormalModel::from_alpha_b(alpha, b)?);
            out.push(FamilyMember {
                alpha,
                b,
                pi_p: None,
                table: roc_curve(&curve, grid_size)?,
            });
            for &pi_p in pi_ps {
                out.push(FamilyMember {
                    alpha,
                    b,
                    pi_p: Some(pi_p),
                    table: pr_curve(&curve, ClassPriors::new(pi_p)?, grid_size)?,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binormal::{std_normal_cdf, BinormalModel};
    use crate::score_model::LabeledScores;
    use proptest::prelude::*;

    fn binormal(a: f64, b: f64) -> LeakageCurve {
        LeakageCurve::binormal(BinormalModel::from_alpha_b(a, b).unwrap())
    }

    #[test]
    fn roc_of_identity_is_diagonal() {
        let t = roc_curve(&LeakageCurve::identity(), 101).unwrap();
        assert_eq!(t.points.len(), 101);
        for p in &t.points {
            assert!((p.y - p.x).abs() < 1e-15);
            assert_eq!(p.tau, None);
        }
        assert!(t.priors.is_none());
    }

    #[test]
    fn roc_of_ideal_jumps() {
        let t = roc_curve(&LeakageCurve::ideal(), 11).unwrap();
        assert_eq!(t.points.len(), 12);
        assert_eq!((t.points[0].x, t.points[0].y), (0.0, 0.0));
        assert_eq!((t.points[1].x, t.points[1].y), (0.0, 1.0));
        assert!(t.points[1..].iter().all(|p| p.y == 1.0));
        assert_eq!(t.area(), 1.0);
    }

    #[test]
    fn roc_binormal_point() {
        // fpr = 1 - Phi(1)  =>  tpr = 1 - G(Phi(1)) = 1 - Phi(0) = 0.5
        let g = binormal(1.0, 1.0);
        let fpr = 1.0 - std_normal_cdf(1.0);
        assert!((1.0 - g.eval(1.0 - fpr) - 0.5).abs() < 1e-12);
        let t = roc_curve(&g, 5).unwrap();
        assert_eq!(t.points[0].tau, Some(f64::INFINITY));
        assert_eq!(t.points[4].tau, Some(f64::NEG_INFINITY));
        assert_eq!(t.points[2].tau, Some(0.0));
    }

    #[test]
    fn roc_inverse_examples() {
        assert!((roc_inverse(&LeakageCurve::identity(), 0.3).unwrap() - 0.3).abs() < 1e-15);
        let g = binormal(1.0, 1.0);
        let fpr = roc_inverse(&g, 0.5).unwrap();
        assert!((fpr - (1.0 - std_normal_cdf(1.0))).abs() < 1e-12);
        assert!((fpr - 0.158_655).abs() < 1e-6);
        assert_eq!(roc_inverse(&g, 1.0).unwrap(), 1.0);
        assert_eq!(roc_inverse(&LeakageCurve::identity(), 1.0).unwrap(), 1.0);
        assert!(roc_inverse(&g, 1.5).is_err());
    }

    #[test]
    fn miss_rate_examples() {
        assert_eq!(
            miss_rate_from_specificity(&LeakageCurve::identity(), 0.9).unwrap(),
            0.9
        );
        assert_eq!(
            miss_rate_from_specificity(&LeakageCurve::ideal(), 0.999).unwrap(),
            0.0
        );
        let m = miss_rate_from_specificity(&binormal(1.0, 1.0), 0.5).unwrap();
        assert!((m - std_normal_cdf(-1.0)).abs() < 1e-12);
        assert!((m - 0.158_655).abs() < 1e-6);
    }

    #[test]
    fn pr_examples() {
        let pri = ClassPriors::new(0.3).unwrap();
        let t = pr_curve(&LeakageCurve::identity(), pri, 11).unwrap();
        assert_eq!(t.points.len(), 10);
        assert!(t.points[0].x > 0.0);
        for p in &t.points {
            assert!((p.y - 0.3).abs() < 1e-12);
        }
        assert_eq!(t.priors, Some(pri));

        let t = pr_curve(&LeakageCurve::ideal(), pri, 11).unwrap();
        assert!(t.points.iter().all(|p| p.y == 1.0));

        // fpr(recall = 0.5) = 1 - Phi(1); precision = 0.5 / (0.5 + 1 - Phi(1))
        let t = pr_curve(&binormal(1.0, 1.0), ClassPriors::new(0.5).unwrap(), 3).unwrap();
        let expected = 0.5 / (0.5 + (1.0 - std_normal_cdf(1.0)));
        assert_eq!(t.points[0].x, 0.5);
        assert!((t.points[0].y - expected).abs() < 1e-12);
        assert!((t.points[0].y - 0.759_122_5).abs() < 1e-6);

        assert_eq!(
            pr_curve(
                &LeakageCurve::identity(),
                ClassPriors::new(0.0).unwrap(),
                11
            ),
            Err(Error::DegeneratePriors)
        );
    }

    #[test]
    fn empirical_roc_is_lossless_staircase() {
        let d = LabeledScores::from_classes(&[1.0, 3.0], &[2.0, 4.0]).unwrap();
        let g = LeakageCurve::from_data(&d).unwrap();
        for grid in [2, 3, 7, 100] {
            let t = roc_curve(&g, grid).unwrap();
            assert_eq!(t.area(), 0.75, "grid={grid}");
            assert!(t.points.windows(2).all(|w| w[0].x <= w[1].x));
        }
    }

    #[test]
    fn empirical_roc_with_ties_uses_half_credit() {
        let d = LabeledScores::from_classes(&[1.0], &[1.0]).unwrap();
        let t = roc_curve(&LeakageCurve::from_data(&d).unwrap(), 11).unwrap();
        assert!((t.area() - 0.5).abs() < 1e-15);
        let d = LabeledScores::from_classes(&[0.0, 1.0, 1.0, 2.0], &[1.0, 1.0, 3.0]).unwrap();
        let g = LeakageCurve::from_data(&d).unwrap();
        let exact = crate::leakage::auroc_rank_oracle(&d).unwrap().auroc();
        let t = roc_curve(&g, 50).unwrap();
        assert!((t.area() - exact).abs() < 1e-12);
    }

    #[test]
    fn small_rates_keep_precision() {
        let g = binormal(0.5, 1.0);
        // exact: Phi((Phi^-1(1e-4) - 1) / 0.5), about 1.9e-21
        let fpr = roc_inverse(&g, 1e-4).unwrap();
        assert!(fpr > 1e-22 && fpr < 1e-20);
        assert!((g.tpr_at_fpr(fpr) / 1e-4 - 1.0).abs() < 1e-9);
        let t = pr_curve(&g, ClassPriors::new(0.5).unwrap(), 1001).unwrap();
        assert!(t.points[0].y < 1.0);
    }

    #[test]
    fn family_layout() {
        let f = binormal_family(&[1.0, 2.0], &[0.0, 1.0, 2.0], &[0.2, 0.8], 11).unwrap();
        assert_eq!(f.len(), 2 * 3 * 3);
        assert_eq!((f[0].alpha, f[0].b, f[0].pi_p), (1.0, 0.0, None));
        assert_eq!(f[0].table.kind, CurveKind::Roc);
        assert_eq!((f[2].pi_p, f[2].table.kind), (Some(0.8), CurveKind::Pr));
        assert_eq!((f[3].b, f[3].pi_p), (1.0, None));
        assert!(binormal_family(&[0.0], &[1.0], &[], 11).is_err());
        assert!(binormal_family(&[1.0], &[1.0], &[1.5], 11).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let t = roc_curve(&binormal(1.3, 0.7), 9).unwrap();
        let text = t.to_csv();
        assert!(text.starts_with("# kind=ROC grid=9 pi_p=none\n# source=binormal\nx,y,tau\n"));
        assert_eq!(CurveTable::from_csv(&text).unwrap(), t);
        let t = pr_curve(
            &LeakageCurve::identity(),
            ClassPriors::new(0.25).unwrap(),
            5,
        )
        .unwrap();
        let text = t.to_csv();
        assert!(text.starts_with("# kind=PR grid=5 pi_p=0.25\n"));
        assert_eq!(CurveTable::from_csv(&text).unwrap(), t);
        assert!(matches!(
            CurveTable::from_csv("# kind=ROC grid=2 pi_p=none\nx,y,tau\n0,0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    proptest! {
        #[test]
        fn roc_inverse_recovers_grid(a in 0.5f64..3.0, b in -1.0f64..2.5) {
            let g = binormal(a, b);
            let t = roc_curve(&g, 201).unwrap();
            for p in &t.points[1..t.points.len() - 1] {
                let fpr = roc_inverse(&g, p.y).unwrap();
                prop_assert!((1.0 - g.eval(1.0 - fpr) - p.y).abs() < 1e-9);
                if p.y > 1e-6 && p.y < 1.0 - 1e-6 {
                    prop_assert!((fpr - p.x).abs() < 1e-6);
                }
            }
        }

        #[test]
        fn precision_increases_with_prevalence(a in 0.3f64..3.0, b in 0.1f64..3.0, p1 in 0.05f64..0.95, dp in 0.01f64..0.5) {
            let p2 = (p1 + dp).min(0.99);
            prop_assume!(p2 > p1);
            let g = binormal(a, b);
            let lo = pr_curve(&g, ClassPriors::new(p1).unwrap(), 51).unwrap();
            let hi = pr_curve(&g, ClassPriors::new(p2).unwrap(), 51).unwrap();
            for (l, h) in lo.points.iter().zip(&hi.points) {
                prop_assert!(h.y >= l.y);
            }
        }

        #[test]
        fn better_than_chance_roc_above_diagonal(b in 0.2f64..3.0) {
            // with alpha = 1 and b > 0, G(u) < u on (0, 1)
            let g = binormal(1.0, b);
            let t = roc_curve(&g, 101).unwrap();
            for p in &t.points[1..100] {
                prop_assert!(p.y > p.x);
            }
        }

        #[test]
        fn empirical_table_area_is_exact(
            neg in prop::collection::vec(-4i32..4, 1..15),
            pos in prop::collection::vec(-4i32..4, 1..15),
            grid in 2usize..40,
        ) {
            let neg: Vec<f64> = neg.into_iter().map(f64::from).collect();
            let pos: Vec<f64> = pos.into_iter().map(f64::from).collect();
            let d = LabeledScores::from_classes(&neg, &pos).unwrap();
            let g = LeakageCurve::from_data(&d).unwrap();
            let t = roc_curve(&g, grid).unwrap();
            let exact = crate::leakage::auroc_rank_oracle(&d).unwrap().auroc();
            prop_assert!((t.area() - exact).abs() < 1e-12);
            prop_assert!(t.points.iter().all(|p| (0.0..=1.0).contains(&p.x) && (0.0..=1.0).contains(&p.y)));
        }
    }
}
