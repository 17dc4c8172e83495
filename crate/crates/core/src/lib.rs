//! Link formation and stability in friend-to-friend backup networks whose
//! agents weigh each other's welfare with signed social weights.
//!
//! Agents pick backup partners. Each link costs `c` to maintain and raises
//! the chance that at least one replica survives a disk failure of
//! probability `λ`. Agents value each other's welfare through a symmetric
//! social range matrix, and a link forms or dissolves only with the consent
//! of both endpoints.
//!
//! - [`model`]: networks, the social range matrix, parameters, utilities.
//! - [`dynamics`]: link conditions, bilateral stability, pass-based dynamics.
//! - [`analysis`]: exhaustive stable-set enumeration, ratio sweeps and
//!   checkers for the uniqueness regimes and the addition bound.
//! - [`cli`]: configuration, reports and the command implementations.

pub mod analysis;
pub mod case_study;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod model;

pub use error::{Error, Result};
