//! Exact q-series algebra for Bing doubles.
//!
//! The crate computes, over `Z[q^(1/2), q^(-1/2)]` with big-integer
//! coefficients, the Bing-double coefficients of the reduced colored Jones
//! polynomial, their cyclotomic orders, reduced colored Jones values of
//! Milnor's links, and truncated unified WRT invariants of surgeries on the
//! Borromean rings.

pub mod bing;
pub mod cli;
pub mod error;
pub mod habiro;
pub mod laurent;
pub mod milnor;
pub mod qnum;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{HbarSeries, LaurentV};
