//! Recovery of a representing density from boundary values,
//! density(x) = lim_{y→0⁺} −(1/π) Im f(−x + iy).

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::specfun::CutPlanePoint;

/// Boundary values and their extrapolation to y = 0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InversionEstimate {
    pub x: f64,
    pub y_sequence: Vec<f64>,
    pub raw_values: Vec<f64>,
    pub extrapolated: f64,
    pub error_estimate: f64,
    /// Successive extrapolants move apart instead of settling.
    pub unstable: bool,
}

/// y = 10⁻², 10⁻³, …, 10⁻¹².
///
/// The tiny end is needed at the integers n ≥ 2, where h behaves like
/// |s − n|^{1/n} and the boundary values approach 0 only like y^{1/n}.
pub fn default_y_sequence() -> Vec<f64> {
    (2..=12).map(|k| 10f64.powi(-k)).collect()
}

/// Value at 0 of the quadratic through three points.
fn extrapolate(y: &[f64], v: &[f64]) -> f64 {
    let (y0, y1, y2) = (y[0], y[1], y[2]);
    let l0 = y1 * y2 / ((y0 - y1) * (y0 - y2));
    let l1 = y0 * y2 / ((y1 - y0) * (y1 - y2));
    let l2 = y0 * y1 / ((y2 - y0) * (y2 - y1));
    l0 * v[0] + l1 * v[1] + l2 * v[2]
}

/// Evaluates −(1/π) Im f(−x + iy) along `y_sequence` (strictly decreasing,
/// positive, at least four values) and extrapolates to y = 0 with the
/// quadratic through the three smallest y. The error estimate is the change
/// from the extrapolant one step earlier.
pub fn stieltjes_invert(
    f: &dyn Fn(CutPlanePoint) -> Complex64,
    x: f64,
    y_sequence: &[f64],
) -> Result<InversionEstimate> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain("stieltjes_invert", x, "x >= 0"));
    }
    if y_sequence.len() < 4 {
        return Err(Error::InvalidParameter(
            "y sequence needs at least four values".into(),
        ));
    }
    if !y_sequence.iter().all(|&y| y > 0.0 && y.is_finite())
        || !y_sequence.windows(2).all(|w| w[1] < w[0])
    {
        return Err(Error::InvalidParameter(
            "y sequence must be positive and strictly decreasing".into(),
        ));
    }

    let raw: Vec<f64> = y_sequence
        .iter()
        .map(|&y| {
            let z = CutPlanePoint::new(-x, y).expect("y > 0 is off the cut");
            -f(z).im / std::f64::consts::PI
        })
        .collect();

    let extrapolants: Vec<f64> = (0..=y_sequence.len() - 3)
        .map(|i| extrapolate(&y_sequence[i..i + 3], &raw[i..i + 3]))
        .collect();
    let n = extrapolants.len();
    let last = extrapolants[n - 1];
    let error_estimate = (last - extrapolants[n - 2]).abs();
    let growing = n >= 3 && error_estimate > (extrapolants[n - 2] - extrapolants[n - 3]).abs();
    let unstable = !last.is_finite()
        || raw.iter().any(|v| !v.is_finite())
        || (growing && error_estimate > 1e-9 * last.abs().max(1.0));

    Ok(InversionEstimate {
        x,
        y_sequence: y_sequence.to_vec(),
        raw_values: raw,
        extrapolated: last,
        error_estimate,
        unstable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_extrapolation_is_exact_on_quadratics() {
        let y = [0.3, 0.2, 0.1];
        let v: Vec<f64> = y.iter().map(|t| 2.0 - 3.0 * t + 5.0 * t * t).collect();
        assert!((extrapolate(&y, &v) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn inverts_a_single_pole() {
        // f(z) = 1/(z + 1) has density δ(s − 1); away from 1 the density is 0
        let f = |z: CutPlanePoint| (z.to_complex() + 1.0).inv();
        let r = stieltjes_invert(&f, 0.5, &default_y_sequence()).unwrap();
        assert!(r.extrapolated.abs() < 1e-12);
        assert!(!r.unstable);
    }

    #[test]
    fn rejects_bad_sequences() {
        let f = |z: CutPlanePoint| z.to_complex();
        assert!(stieltjes_invert(&f, 1.0, &[1e-1, 1e-2, 1e-3]).is_err());
        assert!(stieltjes_invert(&f, 1.0, &[1e-1, 1e-2, 1e-2, 1e-3]).is_err());
        assert!(stieltjes_invert(&f, -1.0, &default_y_sequence()).is_err());
    }
}
