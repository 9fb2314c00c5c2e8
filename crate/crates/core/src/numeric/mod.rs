//! Double precision checks of the integral representations behind the exact
//! transforms: `K₀`, the imaginary-order kernel and adaptive quadrature.

mod bessel;
mod quad;
mod verify;

pub use bessel::{k0, k_imag_order, kernel_cutoff};
pub use quad::{integrate, QuadConfig, QuadResult};
pub use verify::{
    kl_monomial_numeric, verify_euler_integral, verify_euler_integral_with,
    verify_genocchi_integral, verify_genocchi_integral_with, verify_kl_monomial,
    verify_kl_monomial_with, verify_moments_k0, verify_moments_k0_with, NumericCheck,
};
