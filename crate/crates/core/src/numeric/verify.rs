use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bessel::{k0, k_imag_order_scaled};
use super::quad::{integrate, QuadConfig};
use crate::exact::{factorial, pow2, Rational};
use crate::kl::{family, kl_monomial, Family, KLKind};
use crate::numbers::{euler_number, genocchi};

/// One quadrature value compared with its exact counterpart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericCheck {
    pub name: String,
    pub computed: f64,
    pub expected: f64,
    pub rel_error: f64,
    pub passed: bool,
}

impl NumericCheck {
    pub fn new(name: impl Into<String>, computed: f64, expected: f64, tol: f64) -> Self {
        let rel_error = if expected == 0.0 {
            computed.abs()
        } else {
            ((computed - expected) / expected).abs()
        };
        NumericCheck {
            name: name.into(),
            computed,
            expected,
            rel_error,
            passed: rel_error <= tol,
        }
    }
}

/// Upper limit `T` for integrands bounded by `t^power · e^{−2t}`: the
/// neglected tail is below `e^{−45}` relative to the integrand's peak scale.
fn outer_cutoff(power: usize) -> f64 {
    let p = power as f64;
    let mut t = 10.0_f64;
    while 2.0 * t - p * t.ln() < 45.0 + p * (p / 2.0).max(1.0).ln() {
        t += 1.0;
    }
    t
}

/// `∫₀^∞ 2K₀(2√x) xⁿ dx = (n!)²`, integrated as `∫ 4t^{2n+1} K₀(2t) dt`.
pub fn verify_moments_k0_with(nmax: usize, tol: f64, cfg: &QuadConfig) -> Vec<NumericCheck> {
    (0..=nmax)
        .map(|n| {
            let upper = outer_cutoff(2 * n + 1);
            let f = |t: f64| 4.0 * t.powi(2 * n as i32 + 1) * k0(2.0 * t).unwrap_or(0.0);
            let got = integrate(f, 0.0, upper, cfg).value;
            let fact = factorial(n);
            NumericCheck::new(format!("moment_k0[{n}]"), got, (&fact * &fact).to_f64(), tol)
        })
        .collect()
}

pub fn verify_moments_k0(nmax: usize, tol: f64) -> Vec<NumericCheck> {
    verify_moments_k0_with(nmax, tol, &QuadConfig::default())
}

/// `∫₀^∞ e^{−2√x} Pₙ(x) dx = (−1)^{n+1} G_{2n+2} / (2n+2)`.
pub fn verify_genocchi_integral_with(nmax: usize, tol: f64, cfg: &QuadConfig) -> Vec<NumericCheck> {
    (0..=nmax)
        .map(|n| {
            let p = family(Family::P, n);
            let upper = outer_cutoff(2 * n + 1);
            let f = |t: f64| 2.0 * t * (-2.0 * t).exp() * p.eval_f64(t * t);
            let got = integrate(f, 0.0, upper, cfg).value;
            let want = Rational::sign_pow(n + 1) * genocchi(2 * n + 2)
                / Rational::from_int(2 * n as i64 + 2);
            NumericCheck::new(format!("genocchi_integral[{n}]"), got, want.to_f64(), tol)
        })
        .collect()
}

pub fn verify_genocchi_integral(nmax: usize, tol: f64) -> Vec<NumericCheck> {
    verify_genocchi_integral_with(nmax, tol, &QuadConfig::default())
}

/// `∫₀^∞ e^{−2√x} P̃ₙ(x) dx/√x = (−1)ⁿ E_{2n} / 4ⁿ`.
pub fn verify_euler_integral_with(nmax: usize, tol: f64, cfg: &QuadConfig) -> Vec<NumericCheck> {
    (0..=nmax)
        .map(|n| {
            let p = family(Family::PTilde, n);
            let upper = outer_cutoff(2 * n);
            let f = |t: f64| 2.0 * (-2.0 * t).exp() * p.eval_f64(t * t);
            let got = integrate(f, 0.0, upper, cfg).value;
            let want = Rational::sign_pow(n) * euler_number(2 * n) / pow2(2 * n);
            NumericCheck::new(format!("euler_integral[{n}]"), got, want.to_f64(), tol)
        })
        .collect()
}

pub fn verify_euler_integral(nmax: usize, tol: f64) -> Vec<NumericCheck> {
    verify_euler_integral_with(nmax, tol, &QuadConfig::default())
}

/// Numerical `KL[xⁿ](τ)` from the integral definition.
pub fn kl_monomial_numeric(kind: KLKind, n: usize, tau: f64, cfg: &QuadConfig) -> f64 {
    let r = tau.sqrt();
    let kernel = |t: f64| (-2.0 * t).exp() * k_imag_order_scaled(tau, t * t, cfg);
    let upper = outer_cutoff(2 * n + 1);
    match kind {
        KLKind::S => {
            let prefactor = if r == 0.0 {
                2.0
            } else {
                2.0 * (PI * r).sinh() / (PI * r)
            };
            let f = |t: f64| kernel(t) * t.powi(2 * n as i32) * 2.0 * t;
            prefactor * integrate(f, 0.0, upper, cfg).value
        }
        KLKind::C => {
            let prefactor = 2.0 * (PI * r).cosh() / PI;
            let f = |t: f64| 2.0 * kernel(t) * t.powi(2 * n as i32);
            prefactor * integrate(f, 0.0, upper, cfg).value
        }
    }
}

/// `KL_s[xⁿ](τ)` and `KL_c[xⁿ](τ)` by quadrature against the exact products.
pub fn verify_kl_monomial_with(
    n: usize,
    taus: &[f64],
    tol: f64,
    cfg: &QuadConfig,
) -> Vec<NumericCheck> {
    let jobs: Vec<(KLKind, f64)> = [KLKind::S, KLKind::C]
        .into_iter()
        .flat_map(|k| taus.iter().map(move |&t| (k, t)))
        .collect();
    jobs.par_iter()
        .map(|&(kind, tau)| {
            let got = kl_monomial_numeric(kind, n, tau, cfg);
            let want = kl_monomial(kind, n).eval_f64(tau);
            let tag = match kind {
                KLKind::S => "kl_s",
                KLKind::C => "kl_c",
            };
            NumericCheck::new(format!("{tag}[x^{n}](tau={tau})"), got, want, tol)
        })
        .collect()
}

pub fn verify_kl_monomial(n: usize, taus: &[f64], tol: f64) -> Vec<NumericCheck> {
    verify_kl_monomial_with(n, taus, tol, &QuadConfig::default())
}
