//! The two explicit densities of the Stieltjes representations.
//!
//! φ(s) is the density of ln Φ: 1 − s on [0, 1) and 1 − n/s on [n, n + 1),
//! i.e. {s}/s beyond 1. The density of Φ itself is
//!
//! h(s) = (1/π) s^{s−1} / (|1 − s|^s |Γ(1 − s)|^{1/s}) · sin(π φ(s)),
//!
//! evaluated here in the log domain. h is continuous on [0, ∞), equals
//! e^{−γ} at 0 and vanishes at every positive integer.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::specfun::constants::{EULER_GAMMA, LN_PI, ZETA_3};
use crate::specfun::{ln_abs_gamma_one_minus, ln_gamma};

/// Below this point h uses its small-s expansion.
pub const H_SMALL_S: f64 = 1e-6;
/// Within this distance of a positive integer h is exactly zero.
pub const H_INTEGER_EPS: f64 = 1e-12;

/// Where a density may be non-smooth.
#[derive(Clone, Debug, PartialEq)]
pub enum Breakpoints {
    /// Every non-negative integer.
    Integers,
    /// An explicit ascending list.
    Points(Vec<f64>),
}

/// Large-s behaviour of a density, used to truncate [0, ∞).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailHint {
    /// The density vanishes on [end, ∞).
    Compact { end: f64 },
    /// The density decays on average like s^exponent beyond `onset`.
    PowerLaw { exponent: f64, onset: f64 },
    /// Beyond `onset` the density follows {s}/s, whose tail integral is known
    /// in closed form. `residual_exponent` bounds the decay of the difference,
    /// `None` meaning the density equals {s}/s exactly there.
    FractionalPart {
        onset: f64,
        residual_exponent: Option<f64>,
    },
}

/// A non-negative density on [0, ∞) with known breakpoints and tail.
#[derive(Clone)]
pub struct PiecewiseDensity {
    label: String,
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    breakpoints: Breakpoints,
    tail: TailHint,
}

impl PiecewiseDensity {
    pub fn new(
        label: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        breakpoints: Breakpoints,
        tail: TailHint,
    ) -> Self {
        Self {
            label: label.into(),
            eval: Arc::new(eval),
            breakpoints,
            tail,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, s: f64) -> f64 {
        (self.eval)(s)
    }

    pub fn breakpoints(&self) -> &Breakpoints {
        &self.breakpoints
    }

    pub fn tail_hint(&self) -> TailHint {
        self.tail
    }

    /// Breakpoints in [0, limit], always including both ends.
    pub fn breakpoints_up_to(&self, limit: f64) -> Vec<f64> {
        self.breakpoints_in(0.0, limit)
    }

    /// Breakpoints in [a, b], always including both ends.
    pub fn breakpoints_in(&self, a: f64, b: f64) -> Vec<f64> {
        let mut points = vec![a];
        match &self.breakpoints {
            Breakpoints::Integers => {
                let mut n = a.floor() + 1.0;
                while n < b {
                    points.push(n);
                    n += 1.0;
                }
            }
            Breakpoints::Points(list) => {
                points.extend(list.iter().copied().filter(|&p| p > a && p < b));
            }
        }
        points.push(b);
        points
    }
}

impl fmt::Debug for PiecewiseDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PiecewiseDensity")
            .field("label", &self.label)
            .field("breakpoints", &self.breakpoints)
            .field("tail", &self.tail)
            .finish()
    }
}

/// One evaluation of h.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DensityPoint {
    pub s: f64,
    pub value: f64,
    /// ln h(s); −∞ where h vanishes.
    pub log_value: f64,
}

/// φ(s) for finite s ≥ 0. Right-continuous at the integers.
pub fn phi_density(s: f64) -> Result<f64> {
    if !s.is_finite() || s < 0.0 {
        return Err(domain("phi_density", s, "finite s >= 0"));
    }
    Ok(phi_value(s))
}

pub(crate) fn phi_value(s: f64) -> f64 {
    if s < 1.0 {
        1.0 - s
    } else {
        (s - s.floor()) / s
    }
}

/// h(s) for finite s ≥ 0.
pub fn h_density(s: f64) -> Result<DensityPoint> {
    if !s.is_finite() || s < 0.0 {
        return Err(domain("h_density", s, "finite s >= 0"));
    }
    let log_value = ln_h(s);
    Ok(DensityPoint {
        s,
        value: log_value.exp(),
        log_value,
    })
}

pub(crate) fn h_value(s: f64) -> f64 {
    ln_h(s).exp()
}

/// Coefficient of s² in the small-s expansion of ln h.
const LN_H_S2: f64 = 1.0 - ZETA_3 / 3.0 - PI * PI / 6.0;

fn ln_h(s: f64) -> f64 {
    if s < H_SMALL_S {
        // ln h = −γ + s ln s − (π²/12) s + (1 − ζ(3)/3 − π²/6) s² + O(s³)
        if s == 0.0 {
            return -EULER_GAMMA;
        }
        return -EULER_GAMMA + s * s.ln() - PI * PI / 12.0 * s + LN_H_S2 * s * s;
    }
    let nearest = s.round();
    if nearest >= 1.0 && (s - nearest).abs() < H_INTEGER_EPS {
        return f64::NEG_INFINITY;
    }
    if s < 1.0 {
        // sin(π φ) = sin(π s); use the closer of s, 1 − s as argument
        let sin_arg = if s < 0.5 { s } else { 1.0 - s };
        (s - 1.0) * s.ln() - s * (-s).ln_1p() - ln_abs_gamma_one_minus(s) / s
            + (PI * sin_arg).sin().ln()
            - LN_PI
    } else {
        let n = s.floor();
        let r = s - nearest;
        // (s−1) ln s − s ln(s−1) = −ln s − s ln(1 − 1/s), and
        // −ln|Γ(1−s)|/s = (ln Γ(s) − ln π + ln|sin πs|)/s by reflection
        let powers = -s.ln() - s * (-1.0 / s).ln_1p();
        let gamma_part = (ln_gamma(s) - LN_PI + (PI * r).sin().abs().ln()) / s;
        let sin_phi = (PI * (s - n) / s).sin();
        powers + gamma_part + sin_phi.ln() - LN_PI
    }
}

/// φ packaged for the quadrature engine.
pub fn make_phi_density() -> PiecewiseDensity {
    PiecewiseDensity::new(
        "phi",
        phi_value,
        Breakpoints::Integers,
        TailHint::FractionalPart {
            onset: 1.0,
            residual_exponent: None,
        },
    )
}

/// Decay exponent of |h(s) − {s}/s| on average, fitted over s ∈ [10, 10³].
///
/// The fit (see `h_residual_envelope` in the tests) gives a local slope of
/// about −1.8 to −1.9 on log-log axes, i.e. ln s / s² behaviour; −1.5 is used
/// as a conservative bound.
pub const H_RESIDUAL_EXPONENT: f64 = -1.5;

/// h packaged for the quadrature engine.
pub fn make_h_density() -> PiecewiseDensity {
    PiecewiseDensity::new(
        "h",
        h_value,
        Breakpoints::Integers,
        TailHint::FractionalPart {
            onset: 16.0,
            residual_exponent: Some(H_RESIDUAL_EXPONENT),
        },
    )
}
