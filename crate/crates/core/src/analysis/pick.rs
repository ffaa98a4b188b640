//! Random sampling of the Pick condition Im f(z) ≤ 0 on the upper half-plane.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::CutPlanePoint;

/// Points closer than this to the real axis are redrawn.
const MIN_IM: f64 = 1e-9;
/// Im f counts as positive above this multiple of max(1, |f|).
const IM_TOLERANCE: f64 = 1e-12;

/// Rectangle [re_min, re_max] × [im_min, im_max] in the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PickRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl PickRegion {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        let ok = [re_min, re_max, im_min, im_max]
            .iter()
            .all(|v| v.is_finite())
            && re_min < re_max
            && im_min >= 0.0
            && im_min < im_max
            && im_max > MIN_IM;
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "invalid Pick region [{re_min}, {re_max}] x [{im_min}, {im_max}]"
            )));
        }
        Ok(Self {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }
}

impl Default for PickRegion {
    /// [−5, 5] × (0, 5].
    fn default() -> Self {
        Self {
            re_min: -5.0,
            re_max: 5.0,
            im_min: 0.0,
            im_max: 5.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PickViolation {
    pub re: f64,
    pub im: f64,
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PickReport {
    pub count: usize,
    pub seed: u64,
    pub violations: Vec<PickViolation>,
    /// Largest Im f seen in the upper half-plane.
    pub max_im: f64,
    /// Points x > 0 where f(x) is negative or not real.
    pub axis_violations: Vec<f64>,
}

impl PickReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.axis_violations.is_empty()
    }
}

/// Samples `count` points uniformly from `region` with a seeded generator and
/// records every z with Im f(z) > 1e-12·max(1, |f(z)|). Also checks that f is
/// real and non-negative on 64 log-spaced points of [1e-3, 1e3].
pub fn pick_sample(
    f: &dyn Fn(CutPlanePoint) -> Complex64,
    count: usize,
    region: PickRegion,
    seed: u64,
) -> PickReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    let mut max_im = f64::NEG_INFINITY;
    for _ in 0..count {
        let re = rng.gen_range(region.re_min..=region.re_max);
        let im = loop {
            let im = rng.gen_range(region.im_min..=region.im_max);
            if im >= MIN_IM {
                break im;
            }
        };
        let z = CutPlanePoint::new(re, im).expect("upper half-plane point is off the cut");
        let w = f(z);
        max_im = max_im.max(w.im);
        if !(w.im <= IM_TOLERANCE * w.norm().max(1.0)) {
            violations.push(PickViolation { re, im, value: w });
        }
    }

    let mut axis_violations = Vec::new();
    for i in 0..64 {
        let x = 10f64.powf(-3.0 + 6.0 * i as f64 / 63.0);
        let w = f(CutPlanePoint::new(x, 0.0).expect("positive axis"));
        if !(w.re >= 0.0) || w.im.abs() > IM_TOLERANCE * w.norm().max(1.0) {
            axis_violations.push(x);
        }
    }

    PickReport {
        count,
        seed,
        violations,
        max_im,
        axis_violations,
    }
}
