//! Browser bindings for the classleak demo page.
//!
//! Each exported function has a plain Rust counterpart returning
//! `classleak::Result`, so the logic is testable natively.

use classleak::{
    auroc_from_leakage, auroc_rank_oracle, capped_admission_point, kl_divergence_from_leakage,
    leakage_table, pr_curve, roc_curve, AdmissionCap, BinormalModel, ClassPriors, CurveTable,
    LabeledScores, LeakageCurve,
};
use wasm_bindgen::prelude::*;

/// Points per sampled curve. Enough for a canvas a few hundred pixels wide.
const PLOT_GRID: usize = 401;
const INTEGRAL_GRID: usize = classleak::DEFAULT_GRID;

fn split(table: &CurveTable) -> (Vec<f64>, Vec<f64>) {
    table.points.iter().map(|p| (p.x, p.y)).unzip()
}

fn js_err(e: classleak::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct BinormalCurves {
    roc: (Vec<f64>, Vec<f64>),
    leakage: (Vec<f64>, Vec<f64>),
    pr: (Vec<f64>, Vec<f64>),
    auroc: f64,
    auroc_closed_form: f64,
    kl: f64,
    kl_closed_form: f64,
}

#[wasm_bindgen]
impl BinormalCurves {
    pub fn roc_x(&self) -> Vec<f64> {
        self.roc.0.clone()
    }
    pub fn roc_y(&self) -> Vec<f64> {
        self.roc.1.clone()
    }
    pub fn leakage_x(&self) -> Vec<f64> {
        self.leakage.0.clone()
    }
    pub fn leakage_y(&self) -> Vec<f64> {
        self.leakage.1.clone()
    }
    pub fn pr_x(&self) -> Vec<f64> {
        self.pr.0.clone()
    }
    pub fn pr_y(&self) -> Vec<f64> {
        self.pr.1.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn auroc(&self) -> f64 {
        self.auroc
    }
    #[wasm_bindgen(getter)]
    pub fn auroc_closed_form(&self) -> f64 {
        self.auroc_closed_form
    }
    #[wasm_bindgen(getter)]
    pub fn kl(&self) -> f64 {
        self.kl
    }
    #[wasm_bindgen(getter)]
    pub fn kl_closed_form(&self) -> f64 {
        self.kl_closed_form
    }
}

pub fn binormal_curves_native(alpha: f64, b: f64, pi_p: f64) -> classleak::Result<BinormalCurves> {
    let model = BinormalModel::from_alpha_b(alpha, b)?;
    let curve = LeakageCurve::binormal(model);
    Ok(BinormalCurves {
        roc: split(&roc_curve(&curve, PLOT_GRID)?),
        leakage: split(&leakage_table(&curve, PLOT_GRID)?),
        pr: split(&pr_curve(&curve, ClassPriors::new(pi_p)?, PLOT_GRID)?),
        auroc: auroc_from_leakage(&curve, INTEGRAL_GRID)?,
        auroc_closed_form: model.auroc(),
        kl: kl_divergence_from_leakage(&curve, INTEGRAL_GRID)?.nats,
        kl_closed_form: model.kl_pn(),
    })
}

/// ROC, leakage and PR samples plus AUROC and KL for a binormal model.
#[wasm_bindgen]
pub fn binormal_curves(alpha: f64, b: f64, pi_p: f64) -> Result<BinormalCurves, JsError> {
    binormal_curves_native(alpha, b, pi_p).map_err(js_err)
}

#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapPoint {
    pub fpr: f64,
    pub tpr: f64,
    pub tau: f64,
    pub admission: f64,
    /// Boundary line `tpr = slope fpr + intercept`.
    pub slope: f64,
    pub intercept: f64,
}

pub fn capped_admission_native(
    alpha: f64,
    b: f64,
    pi_p: f64,
    m: f64,
) -> classleak::Result<CapPoint> {
    let curve = LeakageCurve::binormal(BinormalModel::from_alpha_b(alpha, b)?);
    let priors = ClassPriors::new(pi_p)?;
    let p = capped_admission_point(&curve, priors, m)?;
    let line = AdmissionCap::new(m, priors)?
        .boundary()
        .ok_or(classleak::Error::DegeneratePriors)?;
    Ok(CapPoint {
        fpr: p.fpr,
        tpr: p.tpr,
        tau: p.tau.unwrap_or(f64::NAN),
        admission: p.admission,
        slope: line.slope,
        intercept: line.intercept,
    })
}

/// Operating point on a binormal ROC where `pi_p tpr + pi_n fpr = m`.
#[wasm_bindgen]
pub fn capped_admission(alpha: f64, b: f64, pi_p: f64, m: f64) -> Result<CapPoint, JsError> {
    capped_admission_native(alpha, b, pi_p, m).map_err(js_err)
}

#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct EmpiricalRoc {
    x: Vec<f64>,
    y: Vec<f64>,
    auroc: f64,
    rank_auroc: f64,
    positives: usize,
    negatives: usize,
}

#[wasm_bindgen]
impl EmpiricalRoc {
    pub fn x(&self) -> Vec<f64> {
        self.x.clone()
    }
    pub fn y(&self) -> Vec<f64> {
        self.y.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn auroc(&self) -> f64 {
        self.auroc
    }
    #[wasm_bindgen(getter)]
    pub fn rank_auroc(&self) -> f64 {
        self.rank_auroc
    }
    #[wasm_bindgen(getter)]
    pub fn positives(&self) -> usize {
        self.positives
    }
    #[wasm_bindgen(getter)]
    pub fn negatives(&self) -> usize {
        self.negatives
    }
}

pub fn empirical_roc_native(csv: &str) -> classleak::Result<EmpiricalRoc> {
    let data = LabeledScores::parse_csv(csv)?;
    let curve = LeakageCurve::from_data(&data)?;
    let (x, y) = split(&roc_curve(&curve, PLOT_GRID)?);
    Ok(EmpiricalRoc {
        x,
        y,
        auroc: auroc_from_leakage(&curve, INTEGRAL_GRID)?,
        rank_auroc: auroc_rank_oracle(&data)?.auroc(),
        positives: data.positives(),
        negatives: data.negatives(),
    })
}

/// Staircase ROC and AUROC for pasted `score,label` lines.
#[wasm_bindgen]
pub fn empirical_roc(csv: &str) -> Result<EmpiricalRoc, JsError> {
    empirical_roc_native(csv).map_err(js_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binormal_explorer() {
        let c = binormal_curves_native(1.0, 1.0, 0.3).unwrap();
        assert_eq!(c.roc_x().len(), PLOT_GRID);
        assert_eq!(c.pr_x().len(), PLOT_GRID - 1);
        assert!((c.auroc - c.auroc_closed_form).abs() < 1e-9);
        assert!((c.kl - 0.5).abs() < 1e-3);
        assert!(binormal_curves_native(-1.0, 1.0, 0.3).is_err());
    }

    #[test]
    fn cap_slider_point() {
        let p = capped_admission_native(1.0, 2.0, 0.5, 0.5).unwrap();
        assert!((p.tau - 1.0).abs() < 1e-6);
        assert!((p.admission - 0.5).abs() < 1e-9);
        assert!((p.slope + 1.0).abs() < 1e-15 && (p.intercept - 1.0).abs() < 1e-15);
        assert!(capped_admission_native(1.0, 2.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn pasted_scores() {
        let r = empirical_roc_native("score,label\n1,0\n3,0\n2,1\n4,1\n").unwrap();
        assert_eq!(r.auroc, 0.75);
        assert_eq!(r.rank_auroc, 0.75);
        assert_eq!((r.positives, r.negatives), (2, 2));
        let e = empirical_roc_native("1,0\n2,x\n").unwrap_err();
        assert_eq!(e.to_string(), "line 2: label must be 0 or 1, got `x`");
    }
}
