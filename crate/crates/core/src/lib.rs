//! Exact central factorial numbers and the Kontorovich–Lebedev transform on
//! polynomials.
//!
//! The KL transforms `KL_s` and `KL_c` act on polynomials as
//! `KL_s[xⁿ] = ∏_{σ=1}^{n} (σ² + τ)` and `KL_c[xⁿ] = ∏_{σ=0}^{n−1} ((½+σ)² + τ)`.
//! Both are automorphisms of the polynomial space; the families `Pₙ` and `P̃ₙ`
//! are the preimages of `τⁿ`.
//!
//! Everything symbolic is exact over arbitrary-precision rationals. The
//! [`numeric`] module checks the integral representations with double
//! precision quadrature.

mod cache;
pub mod cli;
pub mod error;
pub mod euler;
pub mod exact;
pub mod identities;
pub mod kl;
pub mod numbers;
pub mod numeric;

pub use error::{Error, Result};
