//! The coefficient substrate: sparse Laurent polynomials over the rationals,
//! truncated bivariate power series, and exact half-integral powers of `q`.
//!
//! Everything is exact; there is no floating point. Ring arithmetic only —
//! no factorization, GCDs, or Groebner machinery.

pub mod halfpow;
pub mod laurent;
pub mod series;

pub use halfpow::HalfPowerScalar;
pub use laurent::LaurentPoly;
pub use series::{BiSeries, Coeff};
