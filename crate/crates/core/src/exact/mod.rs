//! Exact scalars, polynomials and the small algebraic structures built on them.

mod ext;
mod offset;
mod poly;
mod rational;
mod series;

pub use ext::{ext_mul, poly_eval_ext, ExtElem};
pub use offset::{apply_a, apply_a_pow, Offset, OffsetPoly};
pub use poly::{poly_add, poly_mul, Poly, PolyDisplay};
pub use rational::{binomial, factorial, pow2, Rational};
pub use series::{series_exp_sin, Series2};
