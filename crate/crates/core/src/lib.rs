//! Exact-arithmetic engine for Schur calculus on GL weights and the
//! combinatorics sitting underneath unramified Rankin-Selberg local factors.
//!
//! Everything here is computed over exact rationals; there is no floating
//! point anywhere. The main layers, bottom up:
//!
//! - [`weights`]: partitions, dominant GL weights, and the weight surgery
//!   (star duals, middle-zero padding, the tilde/lambda constructions) used
//!   to move between `GL_m * GL_n` data and `GL_l` data.
//! - [`polyring`]: sparse Laurent polynomials over the rationals, truncated
//!   bivariate power series, and integer powers of `q^(1/2)`.
//! - [`schur`]: Schur polynomials by Jacobi-Trudi determinants, with an
//!   independent semistandard-tableau oracle, extended to dominant weights
//!   with negative entries via determinant twists.
//! - [`hive`]: the Knutson-Tao hive model; exact lattice-point counting of
//!   hives and anti-hives with prescribed boundaries.
//! - [`lr`]: Littlewood-Richardson coefficients by the tableau rule,
//!   Schur product expansion, and the hive-backed product identity
//!   `c_{v~,u}^lambda = sum_z c_{x,z}^u c_{y,z}^v`.
//! - [`unramified`]: modulus characters, Casselman-Shalika Whittaker values,
//!   symmetric-power traces two ways, and the truncated series identity
//!   equating the local zeta sum with its L-factor ratio.
//! - [`sweep`]: exhaustive and randomized verification drivers shared by the
//!   CLI and the acceptance suite.

pub mod error;
pub mod hive;
pub mod lr;
pub mod polyring;
pub mod rational;
pub mod schur;
pub mod sweep;
pub mod unramified;
pub mod weights;

pub use error::{Error, Result};
pub use polyring::{BiSeries, Coeff, HalfPowerScalar, LaurentPoly};
pub use rational::Rat;
pub use weights::{GLWeight, Partition};
