//! Exact construction and verification of the triangles that appear embedded
//! in Taylor-series families of linear recursive sequences.
//!
//! A family is given by `q >= 1` and integers `a_2..a_q` ([`FamilySpec`]).
//! Its member of order `k` runs the recursion whose characteristic polynomial
//! is the degree-`k` truncation of
//! `2 - 1/(1-X) - sum_{i=2}^{q} (a_i - 1) X^(i-1)`, starting from
//! `G_1 = 1, G_2 = ... = G_k = 0`. For `k = 1 + r q` the terms after `G_k`,
//! laid out in rows of `c = 2 + (r - 1) q`, form a triangle: row `t` ends in
//! zeros after column `2 + (t - 1) q`.
//!
//! ```
//! use embedded_triangles::{FamilySpec, triangle};
//!
//! let spec = FamilySpec::new(3, vec![1, 25]).unwrap();
//! let rect = triangle::fill_rectangle_fast(&spec, 2).unwrap();
//! let row2: Vec<i64> = rect.row(2).iter().map(|v| i64::try_from(v).unwrap()).collect();
//! assert_eq!(row2, [-24, 48, -22, -3, 1]);
//! ```
//!
//! All arithmetic is on [`num_bigint::BigInt`]; entries grow geometrically
//! down the first column.

pub mod bench;
pub mod cli;
pub mod error;
pub mod family;
mod json;
pub mod render;
pub mod series;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use family::{FamilySpec, Provenance, SequenceWindow, TruncatedCharPoly};
pub use triangle::{Rectangle, TRecursionCoeffs, TriangleProfile};
pub use verify::{Clause, Exploration, LeadingPolicy, VerificationReport};
