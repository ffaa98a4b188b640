//! Breakpoint-aware adaptive integration of a density against the Stieltjes
//! kernel 1/(s + x)^m on [0, ∞), and the closed-form series for the φ
//! integral.

mod adaptive;
mod gauss_kronrod;
mod series;
mod stieltjes;

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

pub use adaptive::{integrate_panels, integrate_panels_smoothed, AdaptiveResult};
pub use series::{phi_integral_closed_form, phi_series_partial_sum};
pub use stieltjes::{integrate_stieltjes, integrate_stieltjes_complex, IntegrationRequest};

pub(crate) use series::{identity_term, scaled_phi_tail};
pub(crate) use stieltjes::integrate_scaled;

/// Smallest absolute error target accepted; the special-function kernel is
/// not more accurate than this.
pub const MIN_TARGET_ABS_ERROR: f64 = 1e-13;

/// Field the integrator works over: `f64` or `Complex64`.
pub trait Scalar:
    Copy
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Mul<f64, Output = Self>
    + Neg<Output = Self>
    + AddAssign
{
    fn zero() -> Self;
    fn from_real(x: f64) -> Self;
    fn modulus(self) -> f64;
    fn recip(self) -> Self;
    fn powi(self, n: i32) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn recip(self) -> Self {
        1.0 / self
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn recip(self) -> Self {
        self.inv()
    }
    fn powi(self, n: i32) -> Self {
        Complex64::powi(&self, n)
    }
}

/// An integral value with its error bound split by origin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureEstimate<T = f64> {
    pub value: T,
    /// Summed local error estimates of the quadrature panels.
    pub discretization_error: f64,
    /// Bound on everything beyond `s_max` not captured in `value`.
    pub truncation_error: f64,
    pub intervals_used: usize,
    pub s_max: f64,
    /// Whether the total bound is within the requested target.
    pub budget_met: bool,
}

impl<T> QuadratureEstimate<T> {
    pub fn total_error(&self) -> f64 {
        self.discretization_error + self.truncation_error
    }
}
