//! ∫₀^∞ density(s) / (s + c)^m ds for real c > 0 or c in the cut plane.
//!
//! The range is split into a head [0, S₀] integrated over the density's
//! breakpoints and a tail handled according to the density's [`TailHint`].
//! For a `FractionalPart` hint the {s}/s part of the tail is integrated up to
//! a point where its Euler–Maclaurin closed form is accurate enough, and any
//! residual density − {s}/s is integrated octave by octave, [S, 2S], until an
//! octave contributes less than a tenth of the budget.

use num_complex::Complex64;

use super::adaptive::{integrate_panels, integrate_panels_smoothed};
use super::series::fractional_tail;
use super::{QuadratureEstimate, Scalar, MIN_TARGET_ABS_ERROR};
use crate::densities::{PiecewiseDensity, TailHint};
use crate::error::{domain, Error, Result};
use crate::specfun::CutPlanePoint;

/// Panels allowed beyond the initial breakpoint seeds of each sub-integral.
const EXTRA_PANELS: usize = 20_000;
/// Octave doubling stops here whether or not the tail is small.
const OCTAVE_CAP: f64 = 4_194_304.0;
/// Geometric ratio of the error shares given to successive octaves.
const OCTAVE_SHARE_RATIO: f64 = 0.8;
/// The {s}/s comparison tail is taken in closed form from at least here.
const CLOSED_TAIL_START: f64 = 64.0;

/// Integrate `density(s) / (s + x)^kernel_power` over [0, ∞).
#[derive(Clone, Debug)]
pub struct IntegrationRequest {
    pub density: PiecewiseDensity,
    pub x: f64,
    pub target_abs_error: f64,
    pub kernel_power: u32,
}

impl IntegrationRequest {
    pub fn new(density: PiecewiseDensity, x: f64, target_abs_error: f64) -> Self {
        Self {
            density,
            x,
            target_abs_error,
            kernel_power: 1,
        }
    }

    pub fn with_kernel_power(mut self, m: u32) -> Self {
        self.kernel_power = m;
        self
    }
}

fn check_target(target: f64, m: u32) -> Result<()> {
    if !(target >= MIN_TARGET_ABS_ERROR) || !target.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "target_abs_error {target:e} must be finite and at least {MIN_TARGET_ABS_ERROR:e}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidParameter(
            "kernel_power must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Real shift x > 0.
pub fn integrate_stieltjes(req: &IntegrationRequest) -> Result<QuadratureEstimate> {
    check_target(req.target_abs_error, req.kernel_power)?;
    if !(req.x > 0.0) || !req.x.is_finite() {
        return Err(domain("integrate_stieltjes", req.x, "x > 0"));
    }
    Ok(run(
        &req.density,
        req.x,
        req.kernel_power,
        1.0,
        req.target_abs_error,
    ))
}

/// ∫ density(s) (x/(s + x))^m ds, i.e. x^m times the Stieltjes integral with
/// kernel power m. The target applies to this O(1)-scaled integral, which
/// keeps high kernel powers at small or large x meaningful.
pub(crate) fn integrate_scaled(
    density: &PiecewiseDensity,
    x: f64,
    m: u32,
    target: f64,
) -> Result<QuadratureEstimate> {
    check_target(target, m)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("integrate_scaled", x, "x > 0"));
    }
    Ok(run(density, x, m, x.powi(m as i32), target))
}

/// Complex shift z in the cut plane, kernel 1/(s + z).
pub fn integrate_stieltjes_complex(
    density: &PiecewiseDensity,
    z: CutPlanePoint,
    target_abs_error: f64,
) -> Result<QuadratureEstimate<Complex64>> {
    check_target(target_abs_error, 1)?;
    Ok(run(density, z.to_complex(), 1, 1.0, target_abs_error))
}

#[derive(Default)]
struct Tally {
    discretization: f64,
    truncation: f64,
    intervals: usize,
    converged: bool,
}

fn run<T: Scalar>(
    density: &PiecewiseDensity,
    c: T,
    m: u32,
    scale: f64,
    target: f64,
) -> QuadratureEstimate<T> {
    let mi = m as i32;
    let kernel = move |s: f64| (T::from_real(s) + c).powi(mi).recip() * scale;
    let full = |s: f64| kernel(s) * density.eval(s);
    let mut tally = Tally {
        converged: true,
        ..Tally::default()
    };
    let mut value = T::zero();

    // Residuals against {s}/s have |s − n|^{1/n}-type layers at every integer;
    // only those get the endpoint-smoothing substitution, which costs accuracy
    // on integrands that are already smooth.
    let mut add = |tally: &mut Tally,
                   value: &mut T,
                   f: &dyn Fn(f64) -> T,
                   a: f64,
                   b: f64,
                   tol: f64,
                   smooth: bool| {
        let points = density.breakpoints_in(a, b);
        let limit = 8 * points.len() + EXTRA_PANELS;
        let r = if smooth {
            integrate_panels_smoothed(f, &points, tol, limit)
        } else {
            integrate_panels(f, &points, tol, limit)
        };
        *value += r.value;
        tally.discretization += r.error;
        tally.intervals += r.intervals;
        tally.converged &= r.converged;
        r
    };

    let s_max = match density.tail_hint() {
        TailHint::Compact { end } => {
            add(&mut tally, &mut value, &full, 0.0, end, target, false);
            end
        }
        TailHint::PowerLaw { exponent, onset } => {
            let s0 = onset.max(1.0).ceil();
            add(&mut tally, &mut value, &full, 0.0, s0, 0.4 * target, false);
            let ratio = 2f64.powf(exponent - m as f64 + 1.0);
            octaves(
                &mut tally, &mut value, &full, s0, ratio, target, false, &mut add,
            )
        }
        TailHint::FractionalPart {
            onset,
            residual_exponent,
        } => {
            let s0 = onset.max(1.0).ceil();
            add(&mut tally, &mut value, &full, 0.0, s0, 0.4 * target, false);

            let frac = |s: f64| kernel(s) * (s.fract() / s);
            let mut sc = s0.max(CLOSED_TAIL_START);
            let mut tail = fractional_tail(sc, c, m, scale);
            while tail.bound > 0.05 * target && sc < OCTAVE_CAP {
                sc *= 2.0;
                tail = fractional_tail(sc, c, m, scale);
            }
            if sc > s0 {
                add(&mut tally, &mut value, &frac, s0, sc, 0.1 * target, false);
            }
            value += tail.value;
            tally.discretization += tail.quad_error;
            tally.truncation += tail.bound;

            match residual_exponent {
                None => sc,
                Some(p) => {
                    let residual = |s: f64| kernel(s) * (density.eval(s) - s.fract() / s);
                    let ratio = 2f64.powf(p - m as f64 + 1.0);
                    let reached = octaves(
                        &mut tally, &mut value, &residual, s0, ratio, target, true, &mut add,
                    );
                    reached.max(sc)
                }
            }
        }
    };

    let total = tally.discretization + tally.truncation;
    QuadratureEstimate {
        value,
        discretization_error: tally.discretization,
        truncation_error: tally.truncation,
        intervals_used: tally.intervals,
        s_max,
        budget_met: tally.converged && total <= target,
    }
}

type Adder<'a, T> = dyn FnMut(&mut Tally, &mut T, &dyn Fn(f64) -> T, f64, f64, f64, bool) -> super::AdaptiveResult<T>
    + 'a;

/// Integrates `f` over [s0, 2 s0], [2 s0, 4 s0], … until an octave is below a
/// tenth of the budget; that octave, scaled by the geometric ratio of the
/// assumed decay, becomes the truncation bound. Returns the stopping point.
fn octaves<T: Scalar>(
    tally: &mut Tally,
    value: &mut T,
    f: &dyn Fn(f64) -> T,
    s0: f64,
    ratio: f64,
    target: f64,
    smooth: bool,
    add: &mut Adder<'_, T>,
) -> f64 {
    let factor = if ratio < 1.0 {
        (ratio / (1.0 - ratio)).max(1.0)
    } else {
        f64::INFINITY
    };
    let mut a = s0;
    // discretization shares 0.3·target·(1 − ρ)ρ^k sum to 0.3·target
    let mut share = 0.3 * target * (1.0 - OCTAVE_SHARE_RATIO);
    loop {
        let b = 2.0 * a;
        let r = add(tally, value, f, a, b, share, smooth);
        let size = r.value.modulus() + r.error;
        a = b;
        share *= OCTAVE_SHARE_RATIO;
        if size < 0.1 * target || a >= OCTAVE_CAP {
            tally.truncation += size * factor;
            return a;
        }
    }
}
