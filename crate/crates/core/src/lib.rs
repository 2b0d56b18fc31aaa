//! Integer vertex weights that decide tangles.
//!
//! Given a small graph, hypergraph or set-separation universe and a k-tangle
//! (or regular k-profile) on it, [`decider::synthesize_weights`] builds
//! `w: V → ℕ` such that a separation `(A,B)` of order `< k` is in the tangle
//! exactly when `w(A) < w(B)`. All arithmetic is exact; [`oracle`] re-checks
//! the result against every separation.

pub mod decider;
pub mod error;
pub mod io;
pub mod oracle;
pub mod ratlp;
pub mod sepsys;
pub mod tangles;

pub use error::{Error, Result};
