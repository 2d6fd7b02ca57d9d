//! Exact arithmetic for restricted partition functions `P_A(n)`, their
//! quasi-polynomial structure, and Diophantine equations of the shapes
//! `P_A(x) = P_B(y)`, `y^2 = P_A(x)` and `f(y) = P_A(x)`.
//!
//! Everything is exact: big integers for counting tables, big rationals for
//! polynomial algebra, and no floating point anywhere. Results obtained from
//! bounded enumeration are labeled as such and never claimed beyond their
//! bound.
//!
//! Start with the `examples/` directory for runnable tours of each
//! capability, or with:
//!
//! - [`partcount`]: coin-DP tables for `P_A(n)`, the ground-truth oracle
//! - [`quasipoly`]: residue pieces `P_A(Ln+i)` as exact polynomials
//! - [`pell`] and [`conic`]: Pell streams and equal-quadratic equations
//! - [`diopheq`]: the equal-values engine with verified certificates
//! - [`squarehunt`]: square-value searches and censuses
//! - [`families`]: the registry of closed-form solution families

pub mod bipoly;
pub mod partcount;
pub mod quasipoly;
pub mod partset;
pub mod ratpoly;

pub use partcount::{count_table, sertoz_count, PartitionTable};
pub use partset::PartSet;
pub use ratpoly::RatPoly;
