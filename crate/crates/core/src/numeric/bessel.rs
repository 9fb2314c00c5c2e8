use std::f64::consts::PI;

use super::quad::{integrate, QuadConfig};
use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Modified Bessel function `K₀(z)` for `z > 0`.
///
/// Power series for `z ≤ 2`, Steed's continued fraction above.
pub fn k0(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("k0 needs z > 0, got {z}")));
    }
    Ok(if z <= 2.0 { k0_series(z) } else { k0_cf(z) })
}

fn k0_series(z: f64) -> f64 {
    let q = z * z / 4.0;
    let lead = -((z / 2.0).ln() + EULER_GAMMA);
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term < 1e-18 * i0 {
            break;
        }
    }
    lead * i0 + tail
}

fn k0_cf(x: f64) -> f64 {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-16 {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() / s
}

/// Truncation point `U` of the kernel integral at `x`: past it the scaled
/// integrand `exp(−2√x (cosh u − 1))` is below `1e−18`.
pub fn kernel_cutoff(x: f64) -> f64 {
    let r = 18.0 * std::f64::consts::LN_10 / (2.0 * x.sqrt());
    (1.0 + r).acosh()
}

/// `e^{2√x} · K_{2i√τ}(2√x)`, the kernel with its exponential decay removed.
pub(crate) fn k_imag_order_scaled(tau: f64, x: f64, cfg: &QuadConfig) -> f64 {
    let z = 2.0 * x.sqrt();
    let w = 2.0 * tau.sqrt();
    let upper = cfg.kernel_fourier_cutoff.unwrap_or_else(|| kernel_cutoff(x));
    integrate(|u| (-z * (u.cosh() - 1.0)).exp() * (w * u).cos(), 0.0, upper, cfg).value
}

/// `K_{2i√τ}(2√x) = ∫₀^∞ exp(−2√x cosh u) cos(2√τ u) du`, truncated at the
/// configured cutoff.
pub fn k_imag_order(tau: f64, x: f64, cfg: &QuadConfig) -> Result<f64> {
    if !(x > 0.0) || !(tau >= 0.0) {
        return Err(Error::Domain(format!(
            "kernel needs x > 0 and tau >= 0, got x = {x}, tau = {tau}"
        )));
    }
    Ok((-2.0 * x.sqrt()).exp() * k_imag_order_scaled(tau, x, cfg))
}
