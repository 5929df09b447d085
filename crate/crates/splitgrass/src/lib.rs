//! Exact computational geometry of split, Veronese and Grassmann varieties.
//!
//! Everything here runs over exact coefficient fields (arbitrary-precision
//! rationals or a prime field F_p); no floating point is used anywhere.
//!
//! The main capabilities, each demonstrated by a runnable example:
//!
//! * secant-variety dimensions via tangent-span ranks at random points
//!   (`cargo run --example secant_dimensions`),
//! * the embedding of the d-uple Veronese variety into a Grassmannian by
//!   banded-matrix minors, with the exact identification between Plücker
//!   coordinates and degree-d forms (`cargo run --example veronese_embedding`),
//! * decomposable-vector and rational-normal-curve oracles on Plücker
//!   coordinates (`cargo run --example split_line`),
//! * a worked family of lines whose cubics split into three linear factors
//!   (`cargo run --example five_lines`),
//! * the defect/codimension law for second Veronese and line-Grassmannian
//!   secants (`cargo run --example codim_grid`),
//! * the full randomized scenario suite (`cargo run --example scenario_suite`).
//!
//! A thin `splitgrass` binary exposes the same entry points as `secant`,
//! `identify` and `verify` subcommands with JSON/CSV/text output.

pub mod checks;
pub mod cli;
pub mod comb;
pub mod error;
pub mod exactla;
pub mod grassmann;
pub mod polyalg;
pub mod terracini;
pub mod verograss;

pub use error::{Error, Result};
