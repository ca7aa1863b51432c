//! Exact generating functions for counts of nodal curves on surfaces.
//!
//! The crate computes plane Severi degrees with the Caporaso–Harris recursion,
//! fits the two unknown universal series `B1(q)`, `B2(q)` from them, and
//! evaluates the conjectural generating function
//!
//! ```text
//! sum_d t_d(L) DG2^d = (DG2/q)^chi(L) B1^(K^2) B2^(L.K) / (Delta D^2G2 / q^2)^(chi(O)/2)
//! ```
//!
//! either numerically for a given surface or symbolically, giving the
//! universal polynomials `T_d(L^2, L.K, K^2, c2)`.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cli;
pub mod error;
pub mod modforms;
pub mod multipoly;
pub mod qseries;
pub mod severi;
pub mod surfaces;
pub mod universal;

pub use error::{Error, Result};
pub use multipoly::{Poly1, Poly4};
pub use qseries::{QSeries, Rational};
