//! Φ(x) = Γ(x+1)^{1/x} (1 + 1/x)^x / x, its Stieltjes representations, and
//! numerical checks of complete monotonicity and the Pick property.
//!
//! ```
//! use phi_stieltjes::phi::phi_direct;
//!
//! assert!((phi_direct(1.0).unwrap().phi - 2.0).abs() < 1e-15);
//! ```

pub mod analysis;
pub mod densities;
pub mod error;
pub mod phi;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};

/// The guide's chapters, compiled so that their examples run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/evaluating.md")]
    mod evaluating {}
    #[doc = include_str!("../../../book/src/densities.md")]
    mod densities {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/monotonicity.md")]
    mod monotonicity {}
    #[doc = include_str!("../../../book/src/pick.md")]
    mod pick {}
    #[doc = include_str!("../../../book/src/inversion.md")]
    mod inversion {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
