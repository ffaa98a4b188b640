//! Interval-by-interval closed form of ∫φ(s)/(s + x) ds and the Euler–Maclaurin
//! tail of ∫{s} g(s) ds.
//!
//! On [k, k + 1] the φ integral is
//! t_k(x) = (1 + k/x) ln(1 + 1/(x + k)) − (k/x) ln(1 + 1/k),
//! and on [0, 1] it is −1 + (x + 1) ln(1 + 1/x). The two logarithms in t_k
//! must stay paired; summed separately they diverge.
//!
//! For smooth g with g⁽⁵⁾ of one sign, integrating {s} = ½ + B̃₁(s) by parts
//! gives
//! ∫_N^∞ {s} g(s) ds = ½∫_N^∞ g − g(N)/12 + g''(N)/720 − g⁽⁴⁾(N)/30240 + R,
//! with |R| ≤ |g⁽⁴⁾(N)|/30240.

use super::adaptive::integrate_panels;
use super::{QuadratureEstimate, Scalar};
use crate::error::{domain, Result};

/// t ln(1 + 1/t) − 1 + 1/(2t) = Σ_{j ≥ 2} (−1)^j / ((j + 1) t^j).
fn smooth_remainder(t: f64) -> f64 {
    if t < 20.0 {
        return t * (1.0 / t).ln_1p() - 1.0 + 0.5 / t;
    }
    let w = -1.0 / t;
    let mut sum = 0.0;
    for j in (2..=16).rev() {
        sum = (sum + 1.0 / (j as f64 + 1.0)) * w;
    }
    sum * w
}

/// (x + k) ln(1 + 1/(x + k)) − k ln(1 + 1/k); equals x·t_k(x).
///
/// Written as x/(2k(k + x)) + G(x + k) − G(k) so that the leading 1 and 1/(2t)
/// parts cancel exactly.
pub(crate) fn identity_term(x: f64, k: f64) -> f64 {
    x / (2.0 * k * (k + x)) + (smooth_remainder(x + k) - smooth_remainder(k))
}

/// Absolute size of the pieces of `identity_term`, for rounding bounds.
fn identity_term_scale(x: f64, k: f64) -> f64 {
    x / (2.0 * k * (k + x)) + smooth_remainder(x + k).abs() + smooth_remainder(k).abs()
}

/// g, g'' and g⁽⁴⁾ at s for g(s) = 1/(s (s + c)^m).
fn kernel_derivatives<T: Scalar>(s: f64, c: T, m: u32) -> [T; 3] {
    let w = T::from_real(s) + c;
    let mf = m as f64;
    // K⁽ⁱ⁾ = (−1)^i m(m+1)…(m+i−1) (s + c)^{−m−i}
    let mut k = [T::zero(); 5];
    let mut rising = 1.0;
    for (i, slot) in k.iter_mut().enumerate() {
        *slot = w.powi(m as i32 + i as i32).recip() * rising;
        rising *= -(mf + i as f64);
    }
    // (1/s)⁽ʲ⁾ = (−1)^j j! / s^{j+1}
    let mut inv = [0.0; 5];
    let mut fact = 1.0;
    for (j, slot) in inv.iter_mut().enumerate() {
        if j > 0 {
            fact *= -(j as f64);
        }
        *slot = fact / s.powi(j as i32 + 1);
    }
    let derivative = |r: usize| {
        let mut binom = 1.0;
        let mut acc = T::zero();
        for j in 0..=r {
            acc += k[r - j] * (binom * inv[j]);
            binom = binom * (r - j) as f64 / (j + 1) as f64;
        }
        acc
    };
    [derivative(0), derivative(2), derivative(4)]
}

fn correction<T: Scalar>(g: [T; 3]) -> T {
    -(g[0] * (1.0 / 12.0)) + g[1] * (1.0 / 720.0) - g[2] * (1.0 / 30240.0)
}

/// ∫_N^∞ {s}/(s (s + x)) ds = Σ_{k ≥ N} t_k(x) and its remainder bound.
fn phi_tail(n: f64, x: f64) -> (f64, f64) {
    let g = kernel_derivatives(n, x, 1);
    let u = x / n;
    let smooth = if u == 0.0 { 1.0 } else { u.ln_1p() / u } / n;
    (0.5 * smooth + correction(g), g[2].abs() / 30240.0)
}

/// x·`phi_tail`, written so that x = 0 gives exactly 0.
pub(crate) fn scaled_phi_tail(n: f64, x: f64) -> (f64, f64) {
    let g = kernel_derivatives(n, x, 1);
    let value = 0.5 * (x / n).ln_1p() + x * correction(g);
    (value, x * g[2].abs() / 30240.0)
}

/// Tail ∫_S^∞ {s} / (s (s + c)^m) ds for a general shift and kernel power.
pub(crate) struct FractionalTail<T> {
    pub value: T,
    /// Euler–Maclaurin remainder bound.
    pub bound: f64,
    /// Quadrature error of the smooth part.
    pub quad_error: f64,
}

/// The result is multiplied by `scale`.
pub(crate) fn fractional_tail<T: Scalar>(s: f64, c: T, m: u32, scale: f64) -> FractionalTail<T> {
    let mi = m as i32;
    // ∫_S^∞ ds/(s (s+c)^m) with s = S/u
    let smooth = integrate_panels(
        |u: f64| (T::from_real(s) + c * u).powi(mi).recip() * u.powi(mi - 1),
        &[0.0, 1.0],
        1e-17,
        200,
    );
    let g = kernel_derivatives(s, c, m);
    FractionalTail {
        value: (smooth.value * 0.5 + correction(g)) * scale,
        // complex shifts lose the one-sign property of g⁽⁵⁾; allow a factor 2
        bound: 2.0 * g[2].modulus() / 30240.0 * scale,
        quad_error: 0.5 * smooth.error * scale,
    }
}

/// −1 + (x + 1) ln(1 + 1/x) + Σ_{k=1}^{K} t_k(x), without any tail.
pub fn phi_series_partial_sum(x: f64, terms: usize) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("phi_series_partial_sum", x, "x > 0"));
    }
    let head = -1.0 + (x + 1.0) * (1.0 / x).ln_1p();
    let body: f64 = (1..=terms).map(|k| identity_term(x, k as f64) / x).sum();
    Ok(head + body)
}

/// ∫₀^∞ φ(s)/(s + x) ds from the first `terms` closed-form interval terms
/// plus the Euler–Maclaurin tail for k > `terms`. `truncation_error` bounds
/// the tail remainder and `discretization_error` the accumulated rounding.
pub fn phi_integral_closed_form(x: f64, terms: usize) -> Result<QuadratureEstimate> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("phi_integral_closed_form", x, "x > 0"));
    }
    let partial = phi_series_partial_sum(x, terms)?;
    let n = terms as f64 + 1.0;
    let (tail, bound) = phi_tail(n, x);
    let head_scale = 1.0 + (x + 1.0) * (1.0 / x).ln_1p();
    let body_scale: f64 = (1..=terms)
        .map(|k| identity_term_scale(x, k as f64))
        .sum::<f64>()
        / x;
    let rounding = 8.0 * f64::EPSILON * (head_scale + body_scale + tail.abs());
    Ok(QuadratureEstimate {
        value: partial + tail,
        discretization_error: rounding,
        truncation_error: bound,
        intervals_used: terms + 1,
        s_max: n,
        budget_met: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn tail_matches_brute_force_partial_sums() {
        // Σ_{k ≥ 10} t_k(x) against a long partial sum plus a far tail
        for &x in &[0.3, 1.0, 7.0] {
            let (tail, bound) = phi_tail(10.0, x);
            let body: f64 = (10..200_000).map(|k| identity_term(x, k as f64) / x).sum();
            let (far, _) = phi_tail(200_000.0, x);
            assert!((tail - body - far).abs() <= bound + 1e-13, "x = {x}");
        }
    }

    #[test]
    fn scaled_tail_is_x_times_tail() {
        for &x in &[0.5, 2.0, 20.0] {
            let (a, ba) = phi_tail(50.0, x);
            let (b, bb) = scaled_phi_tail(50.0, x);
            assert!((x * a - b).abs() < 1e-15);
            assert!((x * ba - bb).abs() < 1e-24);
        }
        assert_eq!(scaled_phi_tail(10.0, 0.0).0, 0.0);
    }

    #[test]
    fn generic_tail_agrees_with_real_formula() {
        for &x in &[0.5, 3.0] {
            let (want, _) = phi_tail(64.0, x);
            let got = fractional_tail(64.0, x, 1, 1.0);
            assert!((got.value - want).abs() < 1e-15);
            let gotc = fractional_tail(64.0, Complex64::new(x, 0.0), 1, 1.0);
            assert!((gotc.value.re - want).abs() < 1e-15);
            assert!(gotc.value.im.abs() < 1e-18);
        }
    }

    #[test]
    fn kernel_derivatives_match_closed_forms() {
        let (s, x) = (7.0, 1.5);
        let [g, g2, g4] = kernel_derivatives(s, x, 1);
        assert!((g - 1.0 / (s * (s + x))).abs() < 1e-17);
        let want2 = 2.0 * (3.0 * s * s + 3.0 * s * x + x * x) / (s.powi(3) * (s + x).powi(3));
        assert!((g2 - want2).abs() < 1e-15 * want2);
        // 1/(s(s+x)) = (1/s − 1/(s+x))/x
        let want4 = 24.0 * (1.0 / s.powi(5) - 1.0 / (s + x).powi(5)) / x;
        assert!((g4 - want4).abs() < 1e-13 * want4);
    }

    #[test]
    fn smooth_remainder_switch_is_continuous() {
        let below = 20.0 * (1.0 / 20.0f64).ln_1p() - 1.0 + 0.5 / 20.0;
        assert!((smooth_remainder(20.0) - below).abs() < 1e-16);
        assert!((smooth_remainder(20.0) - below).abs() / below < 1e-12);
    }

    #[test]
    fn prefix_at_one() {
        let v = phi_series_partial_sum(1.0, 0).unwrap();
        assert!((v - (-1.0 + 2.0 * std::f64::consts::LN_2)).abs() < 1e-15);
    }
}
