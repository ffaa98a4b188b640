//! ln Γ on the positive axis and on the cut plane.
//!
//! Real arguments use three regimes:
//!
//! * `|x − 2| ≤ ½` and `|x − 1| ≤ ½`: the Taylor series
//!   ln Γ(2 + δ) = (1 − γ) δ + Σ_{k≥2} (−1)^k (ζ(k) − 1) δ^k / k,
//!   which keeps full relative accuracy next to the zeros of ln Γ at 1 and 2;
//! * `x ≥ 15`: the Stirling series with ten Bernoulli terms;
//! * everything else: the recurrence Γ(x + 1) = x Γ(x) into one of the above.
//!
//! The complex branch is the one that is real on (0, ∞). It is built by
//! promoting `z` into the half-plane Re w ≥ 15 with the recurrence and
//! subtracting Σ Log(z + k), each factor taken with the principal logarithm.
//! Far to the left (Re z < −20) the reflection formula is used instead, with a
//! logarithm of sin(πz) that is continuous on the upper half-plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::constants::{EULER_GAMMA, HALF_LN_TWO_PI, LN_PI, STIRLING_COEFFS, ZETA_MINUS_ONE};
use super::{ln_1p_complex, CutPlanePoint};
use crate::error::{domain, Result};

/// Promotion target for the Stirling series.
const STIRLING_MIN: f64 = 15.0;
/// Below this real part the complex evaluator switches to reflection.
const REFLECTION_BELOW: f64 = -20.0;

/// ln Γ(x) for finite `x > 0`.
pub fn log_gamma_pos(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain("log_gamma_pos", x, "finite x > 0"));
    }
    Ok(ln_gamma(x))
}

/// ln Γ(1 + ε) for |ε| ≤ ½, without forming 1 + ε.
pub(crate) fn ln_gamma_1p(eps: f64) -> f64 {
    debug_assert!(eps.abs() <= 0.5);
    series_at_two(eps) - eps.ln_1p()
}

/// ln Γ(x) for x > 0; no argument checks.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) = Γ(1 + x) / x
        ln_gamma_1p(x) - x.ln()
    } else if x <= 1.5 {
        ln_gamma_1p(x - 1.0)
    } else if x <= 2.5 {
        series_at_two(x - 2.0)
    } else if x < STIRLING_MIN {
        // step down into (1.5, 2.5]; every x − k is exact
        let mut base = x;
        let mut product = 1.0;
        while base > 2.5 {
            base -= 1.0;
            product *= base;
        }
        series_at_two(base - 2.0) + product.ln()
    } else {
        stirling(x)
    }
}

/// ln Γ(2 + δ), |δ| ≤ ½.
fn series_at_two(delta: f64) -> f64 {
    // Horner over k = 40 down to 2 on (−1)^k (ζ(k)−1)/k δ^{k−2}
    let mut acc = 0.0;
    for (i, z) in ZETA_MINUS_ONE.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc * delta + sign * z / k;
    }
    delta * ((1.0 - EULER_GAMMA) + delta * acc)
}

fn series_at_two_complex(delta: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, z) in ZETA_MINUS_ONE.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc * delta + sign * z / k;
    }
    delta * ((1.0 - EULER_GAMMA) + delta * acc)
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for c in STIRLING_COEFFS.iter().rev() {
        corr = corr * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + corr * inv
}

fn stirling_complex(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    for c in STIRLING_COEFFS.iter().rev() {
        corr = corr * inv2 + c;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_TWO_PI + corr * inv
}

/// Holomorphic branch of ln Γ on the cut plane, real on the positive axis.
///
/// This is not the principal logarithm of Γ(z): its imaginary part grows
/// without bound as `z` moves left above the cut.
pub fn log_gamma_cut(z: CutPlanePoint) -> Complex64 {
    ln_gamma_complex(z.to_complex())
}

/// Same as [`log_gamma_cut`] for a raw complex number; the caller guarantees
/// `z` is off the cut.
pub(crate) fn ln_gamma_complex(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(ln_gamma(z.re), 0.0);
    }
    if z.im < 0.0 {
        return ln_gamma_complex(z.conj()).conj();
    }
    let near_one = z - 1.0;
    if near_one.norm_sqr() <= 0.25 {
        return series_at_two_complex(near_one) - ln_1p_complex(near_one);
    }
    let near_two = z - 2.0;
    if near_two.norm_sqr() <= 0.25 {
        return series_at_two_complex(near_two);
    }
    if z.re < REFLECTION_BELOW {
        return reflected(z);
    }
    if z.re >= STIRLING_MIN {
        return stirling_complex(z);
    }
    let shift = (STIRLING_MIN - z.re).ceil() as usize;
    let mut logs = Complex64::new(0.0, 0.0);
    for k in 0..shift {
        logs += (z + k as f64).ln();
    }
    stirling_complex(z + shift as f64) - logs
}

/// ln Γ(z) = ln π − ln sin(πz) − ln Γ(1 − z) for Im z > 0.
///
/// On the upper half-plane sin(πz) = (i/2) e^{−iπz} (1 − e^{2πiz}) and
/// |e^{2πiz}| < 1, so −ln 2 + iπ/2 − iπz + Log(1 − e^{2πiz}) is a continuous
/// logarithm of sin(πz) there. It matches the real branch at z = ½, which
/// fixes the additive 2πik constant at zero.
fn reflected(z: Complex64) -> Complex64 {
    debug_assert!(z.im > 0.0);
    // reduce Re z mod 1 before forming the oscillating exponential
    let frac = z.re - z.re.round();
    let e = Complex64::from_polar((-2.0 * PI * z.im).exp(), 2.0 * PI * frac);
    let i = Complex64::i();
    let ln_sin = -std::f64::consts::LN_2 + i * (PI / 2.0) - i * PI * z + ln_1p_complex(-e);
    LN_PI - ln_sin - ln_gamma_complex(1.0 - z)
}

/// ln Γ(1 + z) for complex `z` with 1 + z off the cut, computed without
/// rounding `1 + z` when `z` is small.
pub(crate) fn ln_gamma_1p_complex(z: Complex64) -> Complex64 {
    if z.norm_sqr() <= 0.25 {
        if z.im == 0.0 {
            return Complex64::new(ln_gamma_1p(z.re), 0.0);
        }
        return series_at_two_complex(z) - ln_1p_complex(z);
    }
    ln_gamma_complex(z + 1.0)
}

/// ln |Γ(1 − s)| for s ≥ 0, s not a positive integer.
///
/// For s > 1 the reflection formula ln π − ln|sin πs| − ln Γ(s) is used, with
/// sin(πs) evaluated from s reduced to [−½, ½] around its nearest integer.
pub fn log_abs_gamma_one_minus(s: f64) -> Result<f64> {
    if !s.is_finite() || s < 0.0 {
        return Err(domain("log_abs_gamma_one_minus", s, "finite s >= 0"));
    }
    if s >= 1.0 && s.fract() == 0.0 {
        return Err(domain(
            "log_abs_gamma_one_minus",
            s,
            "s not a positive integer (pole of Γ(1 − s))",
        ));
    }
    Ok(ln_abs_gamma_one_minus(s))
}

pub(crate) fn ln_abs_gamma_one_minus(s: f64) -> f64 {
    if s < 0.5 {
        ln_gamma_1p(-s)
    } else if s < 1.0 {
        ln_gamma(1.0 - s)
    } else {
        let r = s - s.round();
        LN_PI - (PI * r).sin().abs().ln() - ln_gamma(s)
    }
}
