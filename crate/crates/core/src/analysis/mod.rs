//! Exhaustive stable-set enumeration, ratio sweeps, and checkers for the
//! uniqueness regimes and the link-addition bound.

mod claims;
mod enumerate;
mod sweep;

pub use claims::{
    check_theorem1, check_theorem1_exhaustive, check_window, corollary1_applies, expected_network,
    lemma1_applies, lemma2_applies, theorem1_threshold, verify_nonuniqueness, verify_regime_claim,
    ExpectedKind, Outcome, RegimeCheck, Theorem1Sweep, TheoremBound, WindowCheck, REPORTED_WINDOW,
    WINDOW_TOLERANCE,
};
pub use enumerate::{enumerate_stable, StableNetwork, StableSetReport, MAX_ENUMERATION_AGENTS};
pub use sweep::{sweep_ratio, RatioGrid, SweepPoint, SweepReport, DEFAULT_BETA_ANCHOR};
