//! Φ(x) = Γ(x+1)^{1/x} (1 + 1/x)^x / x and ln Φ by every available route.
//!
//! Direct: ln Φ(x) = ln Γ(x+1)/x − ln x + x ln(1 + 1/x), on (0, ∞) and, with
//! the holomorphic ln Γ branch and principal logarithms, on the cut plane.
//!
//! Series: ln Φ(x) = −1 + (x + 1) ln(1 + 1/x) + Σ_k t_k(x), the interval-wise
//! integral of φ(s)/(s + x).
//!
//! Stieltjes: ln Φ(x) = ∫ φ(s)/(s + x) ds, and
//! Φ(x) = 1 + e^{−γ}/x + ∫ h(s)/(s + x) ds.
//! The measure representing Φ has a point mass e^{−γ} at s = 0 on top of the
//! density h; without it the right side falls short by exactly e^{−γ}/x.

use num_complex::Complex64;
use serde::Serialize;

use crate::densities::{make_h_density, make_phi_density, PiecewiseDensity};
use crate::error::{domain, Error, Result};
use crate::quadrature::{
    identity_term, integrate_scaled, integrate_stieltjes, integrate_stieltjes_complex,
    phi_integral_closed_form, scaled_phi_tail, IntegrationRequest, QuadratureEstimate,
};
use crate::specfun::{
    ln_1p_complex, ln_gamma, ln_gamma_1p, ln_gamma_1p_complex, CutPlanePoint, EXP_NEG_EULER_GAMMA,
};

/// Closed-form terms summed explicitly by the series routes; the rest is an
/// Euler–Maclaurin tail.
pub const SERIES_TERMS: usize = 2000;

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Direct,
    Series,
    Stieltjes,
}

/// Φ and ln Φ at a real point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhiValue {
    pub x: f64,
    pub phi: f64,
    pub log_phi: f64,
    pub route: Route,
}

/// Φ and ln Φ at a cut-plane point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexPhiValue {
    pub z: CutPlanePoint,
    pub phi: Complex64,
    pub log_phi: Complex64,
    pub route: Route,
}

fn check_positive(op: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(op, x, "x > 0"))
    }
}

/// ln Γ(1 + x) for x > −½.
fn ln_gamma_shifted(x: f64) -> f64 {
    if x.abs() <= 0.5 {
        ln_gamma_1p(x)
    } else {
        ln_gamma(1.0 + x)
    }
}

fn log_phi_real(x: f64) -> f64 {
    ln_gamma_shifted(x) / x - x.ln() + x * (1.0 / x).ln_1p()
}

/// Φ(x) from its defining formula, evaluated in the log domain.
pub fn phi_direct(x: f64) -> Result<PhiValue> {
    check_positive("phi_direct", x)?;
    let log_phi = log_phi_real(x);
    Ok(PhiValue {
        x,
        phi: log_phi.exp(),
        log_phi,
        route: Route::Direct,
    })
}

/// ln Φ(z) = ln Γ(1 + z)/z − Log z + z Log(1 + 1/z) on the cut plane.
pub(crate) fn log_phi_complex(z: Complex64) -> Complex64 {
    ln_gamma_1p_complex(z) / z - z.ln() + z * ln_1p_complex(z.inv())
}

/// Holomorphic extension of Φ to the cut plane.
pub fn phi_complex(z: CutPlanePoint) -> ComplexPhiValue {
    let log_phi = if z.im() == 0.0 {
        Complex64::new(log_phi_real(z.re()), 0.0)
    } else {
        log_phi_complex(z.to_complex())
    };
    ComplexPhiValue {
        z,
        phi: log_phi.exp(),
        log_phi,
        route: Route::Direct,
    }
}

/// ln Φ(x) from the interval-wise closed form of ∫φ(s)/(s + x) ds.
pub fn log_phi_series(x: f64) -> Result<f64> {
    check_positive("log_phi_series", x)?;
    Ok(phi_integral_closed_form(x, SERIES_TERMS)?.value)
}

/// Φ and ln Φ through [`log_phi_series`].
pub fn phi_series(x: f64) -> Result<PhiValue> {
    let log_phi = log_phi_series(x)?;
    Ok(PhiValue {
        x,
        phi: log_phi.exp(),
        log_phi,
        route: Route::Series,
    })
}

/// Both sides of ln Γ(x + 1) = x(ln(1 + x) − 1) + Σ_{k≥1}[(k + x) ln(1 + 1/(x + k)) − k ln(1 + 1/k)].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// The right side of the identity, summed to [`SERIES_TERMS`] plus its tail.
pub(crate) fn identity_rhs(x: f64) -> f64 {
    let head = x * x.ln_1p() - x;
    let body: f64 = (1..=SERIES_TERMS).map(|k| identity_term(x, k as f64)).sum();
    let (tail, _) = scaled_phi_tail(SERIES_TERMS as f64 + 1.0, x);
    head + body + tail
}

/// Evaluates both sides of the ln Γ series identity at x ≥ 0.
pub fn log_gamma_identity_check(x: f64) -> Result<IdentityCheck> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("log_gamma_identity_check", x, "x >= 0"));
    }
    let lhs = if x == 0.0 { 0.0 } else { ln_gamma_shifted(x) };
    let rhs = if x == 0.0 { 0.0 } else { identity_rhs(x) };
    Ok(IdentityCheck {
        x,
        lhs,
        rhs,
        residual: lhs - rhs,
    })
}

/// f(x) = a + c/x + ∫ density(s)/(s + x) ds, i.e. a Stieltjes transform whose
/// measure is a point mass c at 0 plus an absolutely continuous part.
#[derive(Clone, Debug)]
pub struct StieltjesRepresentation {
    pub constant_a: f64,
    pub point_mass: f64,
    pub density: PiecewiseDensity,
    pub label: String,
}

/// Φ = 1 + e^{−γ}/x + ∫ h(s)/(s + x) ds.
pub fn stieltjes_phi() -> StieltjesRepresentation {
    StieltjesRepresentation {
        constant_a: 1.0,
        point_mass: EXP_NEG_EULER_GAMMA,
        density: make_h_density(),
        label: "Phi".into(),
    }
}

/// ln Φ = ∫ φ(s)/(s + x) ds.
pub fn stieltjes_log_phi() -> StieltjesRepresentation {
    StieltjesRepresentation {
        constant_a: 0.0,
        point_mass: 0.0,
        density: make_phi_density(),
        label: "log Phi".into(),
    }
}

impl StieltjesRepresentation {
    /// a + c/x + ∫ density/(s + x) with the quadrature's error bookkeeping.
    pub fn evaluate(&self, x: f64, target_abs_error: f64) -> Result<QuadratureEstimate> {
        let q = integrate_stieltjes(&IntegrationRequest::new(
            self.density.clone(),
            x,
            target_abs_error,
        ))?;
        Ok(QuadratureEstimate {
            value: self.constant_a + self.point_mass / x + q.value,
            ..q
        })
    }

    /// The same at a cut-plane point.
    pub fn evaluate_complex(
        &self,
        z: CutPlanePoint,
        target_abs_error: f64,
    ) -> Result<QuadratureEstimate<Complex64>> {
        let q = integrate_stieltjes_complex(&self.density, z, target_abs_error)?;
        let w = z.to_complex();
        Ok(QuadratureEstimate {
            value: w.inv() * self.point_mass + self.constant_a + q.value,
            ..q
        })
    }

    /// n-th derivative, (−1)ⁿ n! [c/x^{n+1} + ∫ density/(s + x)^{n+1} ds],
    /// to relative accuracy about `rel_tol`.
    pub fn derivative(&self, x: f64, n: u32, rel_tol: f64) -> Result<QuadratureEstimate> {
        check_positive("derivative", x)?;
        if n == 0 {
            return Err(Error::InvalidParameter(
                "derivative order must be at least 1".into(),
            ));
        }
        let m = n + 1;
        // x^m ∫ density/(s+x)^m is O(1), so an absolute target on it is relative
        let q = integrate_scaled(
            &self.density,
            x,
            m,
            rel_tol.max(crate::quadrature::MIN_TARGET_ABS_ERROR),
        )?;
        let factorial: f64 = (1..=n).map(f64::from).product();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let unscale = factorial / x.powi(m as i32);
        Ok(QuadratureEstimate {
            value: sign * unscale * (self.point_mass + q.value),
            discretization_error: unscale * q.discretization_error,
            truncation_error: unscale * q.truncation_error,
            ..q
        })
    }
}

/// Φ(x) through the Stieltjes representation, with its error estimate.
pub fn phi_stieltjes(x: f64, target_abs_error: f64) -> Result<(PhiValue, QuadratureEstimate)> {
    check_positive("phi_stieltjes", x)?;
    let q = stieltjes_phi().evaluate(x, target_abs_error)?;
    Ok((
        PhiValue {
            x,
            phi: q.value,
            log_phi: q.value.ln(),
            route: Route::Stieltjes,
        },
        q,
    ))
}

/// Largest derivative order accepted by [`phi_derivative_via_rep`].
pub const MAX_REP_ORDER: u32 = 12;

/// Φ⁽ⁿ⁾(x) for 1 ≤ n ≤ 12 by differentiating the Stieltjes representation.
/// Fails with [`Error::BudgetNotMet`] if the quadrature cannot reach a
/// relative accuracy of 1e-9.
pub fn phi_derivative_via_rep(x: f64, n: u32) -> Result<f64> {
    check_positive("phi_derivative_via_rep", x)?;
    if n == 0 || n > MAX_REP_ORDER {
        return Err(Error::InvalidParameter(format!(
            "derivative order {n} outside 1..={MAX_REP_ORDER}"
        )));
    }
    let rel_tol = 1e-9;
    let q = stieltjes_phi().derivative(x, n, rel_tol)?;
    if !q.budget_met {
        let factorial: f64 = (1..=n).map(f64::from).product();
        let scale = factorial / x.powi(n as i32 + 1);
        return Err(Error::BudgetNotMet {
            achieved: q.total_error() / scale,
            requested: rel_tol,
        });
    }
    Ok(q.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_examples() {
        assert!((phi_direct(1.0).unwrap().phi - 2.0).abs() < 1e-15);
        let want = 9.0 * 2f64.sqrt() / 8.0;
        assert!((phi_direct(2.0).unwrap().phi - want).abs() < 2e-16 * want * 4.0);
        assert!(phi_direct(0.0).is_err());
        assert!(phi_direct(f64::NAN).is_err());
    }

    #[test]
    fn small_argument_uses_shifted_log_gamma() {
        // x Φ(x) = e^{−γ} (1 + O(x ln x)) as x → 0
        let x = 1e-12;
        let v = phi_direct(x).unwrap().phi * x;
        assert!((v - EXP_NEG_EULER_GAMMA).abs() < 1e-10);
    }

    #[test]
    fn complex_agrees_with_real_off_axis_limit() {
        let z = CutPlanePoint::new(3.0, 1e-13).unwrap();
        let a = phi_complex(z).phi;
        let b = phi_direct(3.0).unwrap().phi;
        assert!((a.re - b).abs() < 1e-13);
    }

    #[test]
    fn derivative_rejects_bad_orders() {
        assert!(phi_derivative_via_rep(1.0, 0).is_err());
        assert!(phi_derivative_via_rep(1.0, 13).is_err());
        assert!(phi_derivative_via_rep(-1.0, 2).is_err());
    }
}
