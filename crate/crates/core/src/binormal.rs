//! Gaussian class-conditional score model.
//!
//! With negatives `N(mu_n, sigma_n^2)` and positives `N(mu_p, sigma_p^2)` the
//! leakage function reduces to `G(u) = Phi(alpha * Phi^-1(u) - b)` where
//! `alpha = sigma_n / sigma_p` and `b = (mu_p - mu_n) / sigma_p`.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Standard normal density.
pub fn std_normal_pdf(z: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * z * z).exp()
}

/// Standard normal CDF, `0.5 * erfc(-z / sqrt(2))`.
///
/// Evaluated through `erfc` so that the lower tail keeps full relative
/// precision.
pub fn std_normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z * FRAC_1_SQRT_2)
}

// Rational approximation for the lower tail and the central region,
// refined by Halley steps against `std_normal_cdf`.
const A: [f64; 6] = [
    -3.969683028665376e+01,
    2.209460984245205e+02,
    -2.759285104469687e+02,
    1.38357751867269e+02,
    -3.066479806614716e+01,
    2.506628277459239e+00,
];
const B: [f64; 5] = [
    -5.447609879822406e+01,
    1.615858368580409e+02,
    -1.556989798598866e+02,
    6.680131188771972e+01,
    -1.328068155288572e+01,
];
const C: [f64; 6] = [
    -7.784894002430293e-03,
    -3.223964580411365e-01,
    -2.400758277161838e+00,
    -2.549732539343734e+00,
    4.374664141464968e+00,
    2.938163982698783e+00,
];
const D: [f64; 4] = [
    7.784695709041462e-03,
    3.224671290700398e-01,
    2.445134137142996e+00,
    3.754408661907416e+00,
];
const P_LOW: f64 = 0.02425;

fn initial_lower_quantile(p: f64) -> f64 {
    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    }
}

/// Inverse of the standard normal CDF on `(0, 1)`.
pub fn std_normal_quantile(u: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::DomainError(u));
    }
    if u == 0.5 {
        return Ok(0.0);
    }
    // Work in the lower tail so the target keeps its relative precision.
    let (p, sign) = if u < 0.5 { (u, 1.0) } else { (1.0 - u, -1.0) };
    let mut x = initial_lower_quantile(p);
    for _ in 0..3 {
        let density = std_normal_pdf(x);
        if density < 1e-300 {
            break;
        }
        let step = (std_normal_cdf(x) - p) / density;
        if step == 0.0 {
            break;
        }
        x -= step / (1.0 + 0.5 * x * step);
    }
    Ok(sign * x)
}

/// `Phi^-1` extended to the closed interval with `Phi^-1(0) = -inf` and
/// `Phi^-1(1) = +inf`.
pub(crate) fn probit(u: f64) -> f64 {
    if u <= 0.0 {
        f64::NEG_INFINITY
    } else if u >= 1.0 {
        f64::INFINITY
    } else {
        std_normal_quantile(u).expect("u checked to lie in (0, 1)")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BinormalModel {
    mu_n: f64,
    sigma_n: f64,
    mu_p: f64,
    sigma_p: f64,
}

impl BinormalModel {
    pub fn new(mu_n: f64, sigma_n: f64, mu_p: f64, sigma_p: f64) -> Result<Self> {
        if ![mu_n, sigma_n, mu_p, sigma_p].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter(
                "binormal parameters must be finite".into(),
            ));
        }
        if sigma_n <= 0.0 || sigma_p <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "standard deviations must be positive, got sigma_n={sigma_n}, sigma_p={sigma_p}"
            )));
        }
        Ok(Self {
            mu_n,
            sigma_n,
            mu_p,
            sigma_p,
        })
    }

    /// Canonical model with `mu_n = 0`, `sigma_p = 1`, `sigma_n = alpha`, `mu_p = b`.
    pub fn from_alpha_b(alpha: f64, b: f64) -> Result<Self> {
        Self::new(0.0, alpha, b, 1.0)
    }

    pub fn mu_n(&self) -> f64 {
        self.mu_n
    }

    pub fn sigma_n(&self) -> f64 {
        self.sigma_n
    }

    pub fn mu_p(&self) -> f64 {
        self.mu_p
    }

    pub fn sigma_p(&self) -> f64 {
        self.sigma_p
    }

    /// Variance ratio `sigma_n / sigma_p`.
    pub fn alpha(&self) -> f64 {
        self.sigma_n / self.sigma_p
    }

    /// Normalized mean gap `(mu_p - mu_n) / sigma_p`.
    pub fn b(&self) -> f64 {
        (self.mu_p - self.mu_n) / self.sigma_p
    }

    /// `G(u) = Phi(alpha * Phi^-1(u) - b)` with exact endpoints.
    pub fn leakage(&self, u: f64) -> f64 {
        if u <= 0.0 {
            0.0
        } else if u >= 1.0 {
            1.0
        } else {
            std_normal_cdf(self.alpha() * probit(u) - self.b())
        }
    }

    /// `G^-1(v) = Phi((Phi^-1(v) + b) / alpha)`.
    pub fn leakage_inverse(&self, v: f64) -> f64 {
        if v <= 0.0 {
            0.0
        } else if v >= 1.0 {
            1.0
        } else {
            std_normal_cdf((probit(v) + self.b()) / self.alpha())
        }
    }

    /// `g(u) = alpha * phi(alpha z - b) / phi(z)` with `z = Phi^-1(u)`.
    pub fn leakage_density(&self, u: f64) -> f64 {
        let z = probit(u);
        self.density_at_standardized(z)
    }

    /// Leakage density expressed in the standardized negative-class score `z`.
    ///
    /// Computed as a single exponential so the ratio stays finite deep in the tails.
    pub(crate) fn density_at_standardized(&self, z: f64) -> f64 {
        let a = self.alpha();
        let w = a * z - self.b();
        a * (0.5 * (z * z - w * w)).exp()
    }

    /// ROC point at standardized threshold `t = (tau - mu_n) / sigma_n`.
    pub fn roc_point(&self, t: f64) -> (f64, f64) {
        let fpr = std_normal_cdf(-t);
        let tpr = std_normal_cdf(-(self.alpha() * t - self.b()));
        (fpr, tpr)
    }

    /// Raw score threshold for a standardized parameter.
    pub fn threshold(&self, t: f64) -> f64 {
        self.mu_n + self.sigma_n * t
    }

    /// Standardized parameter for a raw score threshold.
    pub fn standardize(&self, tau: f64) -> f64 {
        (tau - self.mu_n) / self.sigma_n
    }

    /// Closed-form AUROC `Phi((mu_p - mu_n) / sqrt(sigma_n^2 + sigma_p^2))`.
    pub fn auroc(&self) -> f64 {
        std_normal_cdf((self.mu_p - self.mu_n) / self.sigma_n.hypot(self.sigma_p))
    }

    /// Closed-form `D_KL(f_p || f_n)` in nats.
    pub fn kl_pn(&self) -> f64 {
        let dm = self.mu_p - self.mu_n;
        (self.sigma_n / self.sigma_p).ln()
            + (self.sigma_p * self.sigma_p + dm * dm) / (2.0 * self.sigma_n * self.sigma_n)
            - 0.5
    }

    /// Negative-class density at a raw score.
    pub fn negative_pdf(&self, x: f64) -> f64 {
        std_normal_pdf((x - self.mu_n) / self.sigma_n) / self.sigma_n
    }

    /// Positive-class density at a raw score.
    pub fn positive_pdf(&self, x: f64) -> f64 {
        std_normal_pdf((x - self.mu_p) / self.sigma_p) / self.sigma_p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    /// Maclaurin series of erf, summed to convergence. Accurate to ~1e-15
    /// for |x| <= 3; independent of the libm path.
    fn erf_series(x: f64) -> f64 {
        let mut term = x;
        let mut sum = x;
        let mut n = 0.0;
        loop {
            n += 1.0;
            term *= -x * x / n;
            let add = term / (2.0 * n + 1.0);
            sum += add;
            if add.abs() < 1e-18 {
                break;
            }
        }
        2.0 / PI.sqrt() * sum
    }

    fn phi_oracle(z: f64) -> f64 {
        0.5 * (1.0 + erf_series(z / 2f64.sqrt()))
    }

    #[test]
    fn cdf_values() {
        assert_eq!(std_normal_cdf(0.0), 0.5);
        // series oracle, frozen: Phi(1) = 0.841344746068543
        let phi1 = phi_oracle(1.0);
        assert!((phi1 - 0.841_344_746_068_543).abs() < 1e-14);
        assert!((std_normal_cdf(1.0) - phi1).abs() < 1e-12);
        assert!((std_normal_cdf(-1.0) - (1.0 - std_normal_cdf(1.0))).abs() < 1e-15);
        for i in -30..=30 {
            let z = i as f64 / 10.0;
            assert!((std_normal_cdf(z) - phi_oracle(z)).abs() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn quantile_values() {
        assert_eq!(std_normal_quantile(0.5).unwrap(), 0.0);
        assert!((std_normal_quantile(std_normal_cdf(1.0)).unwrap() - 1.0).abs() < 1e-10);
        assert_eq!(std_normal_quantile(0.0), Err(Error::DomainError(0.0)));
        assert_eq!(std_normal_quantile(1.0), Err(Error::DomainError(1.0)));
        assert!(std_normal_quantile(f64::NAN).is_err());
    }

    #[test]
    fn quantile_round_trip_on_range() {
        // Above z ~ 5 the spacing of doubles near 1 exceeds what 1e-9 in z
        // can resolve, so the upper half is checked through the reflection.
        for i in 0..=1100 {
            let z = -6.0 + i as f64 * 0.01;
            let back = std_normal_quantile(std_normal_cdf(z)).unwrap();
            assert!((back - z).abs() < 1e-9, "z={z} back={back}");
        }
        for i in 0..=600 {
            let z = i as f64 * 0.01;
            let back = -std_normal_quantile(std_normal_cdf(-z)).unwrap();
            assert!((back - z).abs() < 1e-9, "z={z} back={back}");
        }
        for &u in &[
            1e-300,
            1e-100,
            1e-20,
            1e-8,
            0.02,
            0.3,
            0.7,
            0.99,
            1.0 - 1e-12,
        ] {
            let x = std_normal_quantile(u).unwrap();
            assert!((std_normal_cdf(x) - u).abs() <= 1e-10 * u.clamp(1e-10, 1.0));
        }
    }

    #[test]
    fn model_validation() {
        assert!(BinormalModel::new(0.0, 0.0, 1.0, 1.0).is_err());
        assert!(BinormalModel::new(0.0, 1.0, 1.0, -1.0).is_err());
        assert!(BinormalModel::new(f64::NAN, 1.0, 1.0, 1.0).is_err());
        let m = BinormalModel::new(1.0, 2.0, 4.0, 0.5).unwrap();
        assert_eq!(m.alpha(), 4.0);
        assert_eq!(m.b(), 6.0);
    }

    #[test]
    fn leakage_examples() {
        let id = BinormalModel::from_alpha_b(1.0, 0.0).unwrap();
        assert!((id.leakage(0.3) - 0.3).abs() < 1e-15);
        let m = BinormalModel::from_alpha_b(1.0, 1.0).unwrap();
        assert!((m.leakage(0.5) - phi_oracle(-1.0)).abs() < 1e-12);
        assert!((m.leakage(0.5) - 0.158_655_253_931_457).abs() < 1e-12);
        for &(a, b) in &[(0.3, -2.0), (1.0, 1.0), (4.0, 3.0)] {
            let m = BinormalModel::from_alpha_b(a, b).unwrap();
            assert_eq!(m.leakage(1.0), 1.0);
            assert_eq!(m.leakage(0.0), 0.0);
        }
    }

    #[test]
    fn roc_point_examples() {
        let id = BinormalModel::from_alpha_b(1.0, 0.0).unwrap();
        assert_eq!(id.roc_point(0.0), (0.5, 0.5));
        let m = BinormalModel::from_alpha_b(1.0, 2.0).unwrap();
        let (fpr, tpr) = m.roc_point(1.0);
        assert!((fpr - (1.0 - phi_oracle(1.0))).abs() < 1e-12);
        assert!((tpr - (1.0 - phi_oracle(-1.0))).abs() < 1e-12);
        assert!((fpr - 0.158_655).abs() < 1e-6 && (tpr - 0.841_345).abs() < 1e-6);
        let (fpr, tpr) = m.roc_point(60.0);
        assert!(fpr < 1e-300 && tpr < 1e-300);
    }

    #[test]
    fn auroc_examples() {
        let m = BinormalModel::new(2.0, 1.0, 2.0, 3.0).unwrap();
        assert_eq!(m.auroc(), 0.5);
        let m = BinormalModel::new(0.0, 1.0, 1.0, 1.0).unwrap();
        assert!((m.auroc() - phi_oracle(1.0 / 2f64.sqrt())).abs() < 1e-12);
        assert!((m.auroc() - 0.760_250).abs() < 1e-6);
        let m = BinormalModel::from_alpha_b(1.0, 40.0).unwrap();
        assert_eq!(m.auroc(), 1.0);
        // alternative parameterization
        let m = BinormalModel::new(0.3, 1.7, 1.1, 0.6).unwrap();
        let alt = std_normal_cdf(m.b() / (1.0 + m.alpha().powi(2)).sqrt());
        assert!((m.auroc() - alt).abs() < 1e-14);
    }

    #[test]
    fn kl_examples() {
        let m = BinormalModel::new(0.5, 1.3, 0.5, 1.3).unwrap();
        assert_eq!(m.kl_pn(), 0.0);
        let m = BinormalModel::new(0.0, 1.0, 1.0, 1.0).unwrap();
        assert!((m.kl_pn() - 0.5).abs() < 1e-15);
        let m = BinormalModel::new(0.0, 2.0, 0.0, 1.0).unwrap();
        assert!((m.kl_pn() - (2f64.ln() + 0.125 - 0.5)).abs() < 1e-15);
        assert!((m.kl_pn() - 0.318_147).abs() < 1e-6);
    }

    #[test]
    fn density_closed_form() {
        let m = BinormalModel::from_alpha_b(2.0, 0.0).unwrap();
        assert!((m.leakage(0.5) - 0.5).abs() < 1e-15);
        assert!((m.leakage_density(0.5) - 2.0).abs() < 1e-15);
        // finite-difference check of g = G'
        let m = BinormalModel::from_alpha_b(0.7, 1.2).unwrap();
        for &u in &[0.1, 0.4, 0.8] {
            let h = 1e-6;
            let fd = (m.leakage(u + h) - m.leakage(u - h)) / (2.0 * h);
            assert!((fd - m.leakage_density(u)).abs() < 1e-6);
        }
    }

    #[test]
    fn trapezoid_area_matches_auroc() {
        // uniform grid of 1e5 points, alpha = 1 so G is smooth at the ends
        let m = BinormalModel::from_alpha_b(1.0, 0.8).unwrap();
        let n = 100_000;
        let h = 1.0 / (n - 1) as f64;
        let mut s = 0.0;
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            s += w * m.leakage(i as f64 * h);
        }
        assert!((s * h - (1.0 - m.auroc())).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn leakage_monotone_in_u(a in 0.1f64..5.0, b in -3.0f64..3.0, u1 in 0.0f64..=1.0, u2 in 0.0f64..=1.0) {
            let m = BinormalModel::from_alpha_b(a, b).unwrap();
            let (lo, hi) = if u1 <= u2 { (u1, u2) } else { (u2, u1) };
            prop_assert!(m.leakage(lo) <= m.leakage(hi));
        }

        #[test]
        fn leakage_decreases_with_b(a in 0.2f64..4.0, b in -2.0f64..2.0, db in 0.1f64..2.0, u in 0.01f64..0.99) {
            let m1 = BinormalModel::from_alpha_b(a, b).unwrap();
            let m2 = BinormalModel::from_alpha_b(a, b + db).unwrap();
            prop_assert!(m2.leakage(u) <= m1.leakage(u));
        }

        #[test]
        fn roc_point_lies_on_leakage_curve(a in 0.2f64..4.0, b in -2.0f64..3.0, t in -4.0f64..4.0) {
            let m = BinormalModel::from_alpha_b(a, b).unwrap();
            let (fpr, tpr) = m.roc_point(t);
            prop_assert!((tpr - (1.0 - m.leakage(1.0 - fpr))).abs() < 1e-9);
        }

        #[test]
        fn leakage_inverse_round_trip(a in 0.5f64..4.0, b in -2.0f64..2.0, v in 0.001f64..0.999) {
            let m = BinormalModel::from_alpha_b(a, b).unwrap();
            prop_assert!((m.leakage(m.leakage_inverse(v)) - v).abs() < 1e-9);
        }
    }
}
