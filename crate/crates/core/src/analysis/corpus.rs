//! Six functions derived from Φ that are again Stieltjes transforms, each in
//! exp∘(branch-tracked log) form so that no power introduces a spurious cut.

use num_complex::Complex64;

use crate::specfun::{ln_1p_complex, ln_gamma_1p_complex, CutPlanePoint};

/// A named function given by its logarithm on the cut plane.
#[derive(Clone, Copy, Debug)]
pub struct CorpusMember {
    pub name: &'static str,
    pub formula: &'static str,
    log_eval: fn(Complex64) -> Complex64,
}

impl CorpusMember {
    pub fn log_value(&self, z: CutPlanePoint) -> Complex64 {
        (self.log_eval)(z.to_complex())
    }

    pub fn value(&self, z: CutPlanePoint) -> Complex64 {
        self.log_value(z).exp()
    }

    /// Value at x > 0; panics on x ≤ 0.
    pub fn real_value(&self, x: f64) -> f64 {
        let z = CutPlanePoint::new(x, 0.0).expect("x > 0");
        self.value(z).re
    }
}

fn lg(z: Complex64) -> Complex64 {
    ln_gamma_1p_complex(z)
}

/// 1 / ([Γ(1+x)]^{1/x} (1+1/x)^x)
fn reciprocal_main(z: Complex64) -> Complex64 {
    -(lg(z) / z + z * ln_1p_complex(z.inv()))
}

/// [Γ(1+1/x)]^x (1+x)^{1/x}
fn inverted_argument(z: Complex64) -> Complex64 {
    let w = z.inv();
    z * lg(w) + ln_1p_complex(z) * w
}

/// 1 / (x [Γ(1+1/x)]^x (1+x)^{1/x})
fn reciprocal_inverted(z: Complex64) -> Complex64 {
    -z.ln() - inverted_argument(z)
}

/// [Γ(1+x)]^{1/x} / x
fn gamma_root_over_x(z: Complex64) -> Complex64 {
    lg(z) / z - z.ln()
}

/// 1 / [Γ(1+x)]^{1/x}
fn reciprocal_gamma_root(z: Complex64) -> Complex64 {
    -lg(z) / z
}

/// 1 / (x [Γ(1+1/x)]^x)
fn reciprocal_x_gamma_power(z: Complex64) -> Complex64 {
    -z.ln() - z * lg(z.inv())
}

/// The six members in a fixed order.
pub fn remark_corpus() -> Vec<CorpusMember> {
    vec![
        CorpusMember {
            name: "reciprocal-main",
            formula: "1/([Gamma(1+x)]^(1/x) (1+1/x)^x)",
            log_eval: reciprocal_main,
        },
        CorpusMember {
            name: "inverted-argument",
            formula: "[Gamma(1+1/x)]^x (1+x)^(1/x)",
            log_eval: inverted_argument,
        },
        CorpusMember {
            name: "reciprocal-inverted",
            formula: "1/(x [Gamma(1+1/x)]^x (1+x)^(1/x))",
            log_eval: reciprocal_inverted,
        },
        CorpusMember {
            name: "gamma-root-over-x",
            formula: "[Gamma(1+x)]^(1/x)/x",
            log_eval: gamma_root_over_x,
        },
        CorpusMember {
            name: "reciprocal-gamma-root",
            formula: "1/[Gamma(1+x)]^(1/x)",
            log_eval: reciprocal_gamma_root,
        },
        CorpusMember {
            name: "reciprocal-x-gamma-power",
            formula: "1/(x [Gamma(1+1/x)]^x)",
            log_eval: reciprocal_x_gamma_power,
        },
    ]
}
