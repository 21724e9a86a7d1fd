//! Exact rational arithmetic for the discrete orthogonal polynomial families
//! on `{0, ..., N}`: Hahn (classical and steep-parameter), Krawtchouk, dual
//! Hahn, and discrete Chebyshev.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point is involved except in the explicit limit diagnostics. On top of the
//! evaluators the crate provides:
//!
//! * exact verification of the sum-of-squares identities these families
//!   satisfy (the discrete relatives of `sin^2 + cos^2 = 1`), proved as
//!   polynomial identities by evaluation at enough rational points
//!   ([`identities`]);
//! * Hankel moment determinants, principal-representation endpoints, and
//!   the closed-form determinant ratios behind those identities
//!   ([`moments`]);
//! * degree thresholds in exact radical form and sup-norm bound scans over
//!   `[0, N]` with exact comparisons ([`bounds`]).
//!
//! Start with the runnable examples (`cargo run --example evaluate_families`
//! and friends); the thin `dopoly` binary exposes the same machinery as
//! `eval` / `verify` / `bounds` / `table` subcommands.

pub mod bounds;
pub mod cli;
pub mod exact;
pub mod identities;
pub mod moments;
pub mod polys;

pub use exact::Rational;
