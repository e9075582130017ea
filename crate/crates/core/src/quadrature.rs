//! Composite trapezoid rules used by the leakage integrals.

use crate::binormal::{std_normal_cdf, std_normal_pdf};

/// Half-width of the standardized range used for whole-interval integrals.
/// `Phi(-8.3)` is below 1e-16, so the truncated tails are negligible.
pub(crate) const PROBIT_HALF_WIDTH: f64 = 8.3;

/// Composite trapezoid of `f` over `[a, b]` on `n >= 2` uniform points.
pub fn trapezoid<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    assert!(n >= 2, "trapezoid needs at least two points");
    let h = (b - a) / (n - 1) as f64;
    let inner: f64 = (1..n - 1).map(|i| f(a + i as f64 * h)).sum();
    h * (0.5 * (f(a) + f(b)) + inner)
}

/// Trapezoid estimate of `int h(u) du` over `(Phi(z_lo), Phi(z_hi))`, taken
/// on `n` points spaced uniformly in `z = Phi^-1(u)`.
///
/// `h_of_z` receives the standardized coordinate `z`, so callers with a
/// closed form in `z` avoid the round trip through `u`. Endpoint
/// singularities of `h` in `u` become smooth, decaying tails in `z`.
pub(crate) fn probit_trapezoid<F: Fn(f64) -> f64>(
    h_of_z: F,
    z_lo: f64,
    z_hi: f64,
    n: usize,
) -> f64 {
    trapezoid(|z| h_of_z(z) * std_normal_pdf(z), z_lo, z_hi, n)
}

/// `int_0^1 G(u) du` for a bounded nondecreasing `G` with `G(1) = 1`.
pub(crate) fn unit_area<F: Fn(f64) -> f64>(g_of_z: F, n: usize) -> f64 {
    let l = PROBIT_HALF_WIDTH;
    // the upper tail contributes G ~ 1 times its mass, the lower tail ~ 0
    probit_trapezoid(&g_of_z, -l, l, n) + g_of_z(l) * std_normal_cdf(-l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trapezoid_is_exact_for_lines() {
        let v = trapezoid(|x| 3.0 * x + 1.0, 0.0, 2.0, 2);
        assert!((v - 8.0).abs() < 1e-14);
    }

    #[test]
    fn trapezoid_converges_quadratically() {
        let exact = 1.0 / 3.0;
        let e1 = (trapezoid(|x| x * x, 0.0, 1.0, 11) - exact).abs();
        let e2 = (trapezoid(|x| x * x, 0.0, 1.0, 21) - exact).abs();
        assert!((e1 / e2 - 4.0).abs() < 0.1);
    }

    #[test]
    fn unit_area_of_simple_curves() {
        let id = unit_area(std_normal_cdf, 100_000);
        assert!((id - 0.5).abs() < 1e-12);
        let sq = unit_area(|z| std_normal_cdf(z).powi(2), 100_000);
        assert!((sq - 1.0 / 3.0).abs() < 1e-12);
    }
}
