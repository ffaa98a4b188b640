//! Self-contained special-function kernel: ln Γ on (0, ∞) and on the cut
//! plane, the digamma function, and ln|Γ(1 − s)| for s ≥ 0.

pub mod constants;
mod digamma;
mod log_gamma;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use constants::{EULER_GAMMA, EXP_NEG_EULER_GAMMA};
pub use digamma::digamma;
pub use log_gamma::{log_abs_gamma_one_minus, log_gamma_cut, log_gamma_pos};

pub(crate) use log_gamma::{ln_abs_gamma_one_minus, ln_gamma, ln_gamma_1p, ln_gamma_1p_complex};

/// A point of the cut plane ℂ \ (−∞, 0].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CutPlanePoint {
    re: f64,
    im: f64,
}

impl CutPlanePoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() || (im == 0.0 && re <= 0.0) {
            return Err(Error::OnCut {
                op: "CutPlanePoint::new",
                re,
                im,
            });
        }
        Ok(Self { re, im })
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl TryFrom<Complex64> for CutPlanePoint {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }
}

impl From<CutPlanePoint> for Complex64 {
    fn from(z: CutPlanePoint) -> Self {
        z.to_complex()
    }
}

/// Principal Log(1 + w) without cancellation for small |w|.
pub(crate) fn ln_1p_complex(w: Complex64) -> Complex64 {
    if w.norm_sqr() > 0.25 {
        return (w + 1.0).ln();
    }
    let re = 0.5 * (w.re * (2.0 + w.re) + w.im * w.im).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    Complex64::new(re, im)
}
