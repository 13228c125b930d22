//! Connected components of Hurwitz spaces of A6 covers branched over
//! double transpositions, computed from Nielsen tuples.
//!
//! The library is organised bottom-up:
//!
//! - [`perm`]: permutations, explicit group closure, subgroup chains.
//! - [`a6val`]: A6, its 45 double transpositions, the Valentiner cover.
//! - [`nielsen`]: tuples, braid moves, canonical forms, orbit search.
//! - [`lifting`]: the lifting invariant in the centre of the cover.
//! - [`reduce`]: fixed-point reductions and generator pruning.
//! - [`classify`]: orbit classification and the reproduction checks.
//! - [`cli`]: the command-line front end.

pub mod a6val;
pub mod classify;
pub mod cli;
pub mod error;
pub mod lifting;
pub mod nielsen;
pub mod perm;
pub mod reduce;

pub use error::{Error, Result};
