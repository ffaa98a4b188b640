//! Numerical witnesses for complete monotonicity, logarithmic complete
//! monotonicity and the Pick property, plus Stieltjes–Perron inversion.

mod corpus;
mod inversion;
mod monotone;
mod pick;

pub use corpus::{remark_corpus, CorpusMember};
pub use inversion::{default_y_sequence, stieltjes_invert, InversionEstimate};
pub use monotone::{
    check_cm, check_cm_via_representation, check_lcm, check_power_cm, Method, MonotonicityReport,
    Verdict, MAX_FD_ORDER,
};
pub use pick::{pick_sample, PickRegion, PickReport, PickViolation};
