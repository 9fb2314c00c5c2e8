// K₀, the imaginary-order kernel and quadrature checks of the moment integrals.

use cfkl::numeric::{k0, k_imag_order, verify_genocchi_integral, verify_kl_monomial, QuadConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = QuadConfig::default();
    println!("K0(2) = {:.15}", k0(2.0)?);
    for tau in [0.0, 0.5, 2.0] {
        println!("K_(2i sqrt {tau})(2) = {:.15}", k_imag_order(tau, 1.0, &cfg)?);
    }
    for c in verify_genocchi_integral(4, 1e-8) {
        println!("{:<24} {:>14.10} {:>14.10} {:.1e}", c.name, c.computed, c.expected, c.rel_error);
        assert!(c.passed);
    }
    for c in verify_kl_monomial(2, &[1.0], 1e-6) {
        println!("{:<24} {:>14.10} {:>14.10} {:.1e}", c.name, c.computed, c.expected, c.rel_error);
        assert!(c.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
