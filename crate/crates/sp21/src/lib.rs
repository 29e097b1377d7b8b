//! Exact symbolic toolkit for the rank-one non-compact algebra sp(2,1) and its
//! complexification sp(3,C): the 6x6 matrix realization, C3 root data, the
//! multiplet graphs of elementary representations, singular vectors of Verma
//! modules, and the invariant differential operators they induce.
//!
//! Everything is computed over exact rationals (or rational functions in the
//! Dynkin labels); there is no floating point in the crate.

pub mod exact;
pub mod poly;
pub mod ratfunc;
pub mod roots;

pub mod lie;

pub use exact::{GaussRat, Rat, Scalar};
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
