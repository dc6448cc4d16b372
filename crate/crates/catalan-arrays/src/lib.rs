//! Exact Riordan-array toolkit.
//!
//! Everything is computed over exact coefficient rings (big integers, big
//! rationals, or integer polynomials in a parameter `r`); there is no
//! floating point and no modular shortcut. The crate provides:
//!
//! - truncated formal power series with ring-closed and partial operations,
//! - lower-triangular arrays built from a series pair, with the full group
//!   structure (product, inverse, action on sequences),
//! - the Catalan triangle, its square, Pascal's triangle, and the
//!   one-parameter family interpolating them, each available numerically or
//!   with the parameter kept symbolic,
//! - polynomial sequences read off triangle rows, including the connection
//!   to Chebyshev polynomials of the second kind,
//! - a verification engine that mechanically confirms a catalog of closed
//!   forms and summation identities to any requested depth.
//!
//! Start with the `examples/` directory: each file exercises one capability
//! end to end.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod identities;
pub mod riordan;
pub mod series;
pub mod sheffer;

pub use error::{Error, Result};
pub use exact::{BigInt, IntPoly, Poly, Ratio, Ring};
pub use identities::{IdentityReport, Status};
pub use riordan::{RiordanArray, Triangle};
pub use series::Series;
