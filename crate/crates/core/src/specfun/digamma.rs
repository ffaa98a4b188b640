use crate::error::{domain, Result};

/// Terms of the series are summed explicitly until x + k reaches this point;
/// the remainder is closed with Euler-Maclaurin.
const TAIL_START: f64 = 64.0;

/// Digamma ψ(x) for x > 0, from the series
///
/// ψ(x) = ln x + Σ_{k≥0} [ ln(1 + 1/(x+k)) − 1/(x+k) ].
///
/// With g(t) = ln(1 + 1/t) − 1/t the remainder Σ_{k≥0} g(T + k) is
/// ∫_T^∞ g + g(T)/2 − g′(T)/12 + g‴(T)/720 up to O(T⁻⁷), and
/// ∫_T^∞ g = 1 − (T + 1) ln(1 + 1/T) in closed form.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain("digamma", x, "finite x > 0"));
    }
    Ok(psi(x))
}

pub(crate) fn psi(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut t = x;
    while t < TAIL_START {
        sum += term(t);
        t += 1.0;
    }
    x.ln() + (sum + tail(t))
}

fn term(t: f64) -> f64 {
    let inv = 1.0 / t;
    inv.ln_1p() - inv
}

fn tail(t: f64) -> f64 {
    let integral = 1.0 - (t + 1.0) * (1.0 / t).ln_1p();
    let t2 = t * t;
    let d1 = 1.0 / (t2 * (t + 1.0));
    let tp1_3 = (t + 1.0).powi(3);
    let d3 = (12.0 * t2 + 16.0 * t + 6.0) / (t2 * t2 * tp1_3);
    integral + 0.5 * term(t) - d1 / 12.0 + d3 / 720.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::constants::EULER_GAMMA;

    #[test]
    fn tail_derivatives_match_finite_differences() {
        // g' and g''' from the closed forms against centered differences
        let t = 40.0_f64;
        let h = 1e-3;
        let g1 = (term(t + h) - term(t - h)) / (2.0 * h);
        let d1 = 1.0 / (t * t * (t + 1.0));
        assert!((g1 - d1).abs() < 1e-11, "{g1} vs {d1}");
        let g = |u: f64| term(u);
        let h3 = 2e-2;
        let g3 = (g(t + 2.0 * h3) - 2.0 * g(t + h3) + 2.0 * g(t - h3) - g(t - 2.0 * h3))
            / (2.0 * h3 * h3 * h3);
        let d3 = (12.0 * t * t + 16.0 * t + 6.0) / (t.powi(4) * (t + 1.0).powi(3));
        assert!(((g3 - d3) / d3).abs() < 1e-3, "{g3} vs {d3}");
    }

    #[test]
    fn known_values() {
        assert!((psi(1.0) + EULER_GAMMA).abs() < 1e-14);
        assert!((psi(2.0) - (1.0 - EULER_GAMMA)).abs() < 1e-14);
        let half = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((psi(0.5) - half).abs() < 1e-14);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
        assert!(digamma(f64::NAN).is_err());
    }
}
