//! Euler polynomials and their values at `y` and `y + 1/2` in the extension ring.

use std::sync::Arc;

use serde::Serialize;

use crate::cache::RowCache;
use crate::exact::{binomial, pow2, poly_eval_ext, ExtElem, Poly, Rational};
use crate::numbers::{euler_number, genocchi};

// E_n(x) = 1/(n+1) Σ_ν C(n+1,ν) G_{n+1−ν} x^ν
fn euler_step(n: usize, _prev: &[Arc<Poly>]) -> Poly {
    let scale = Rational::new(1, n as i64 + 1);
    let coeffs = (0..=n)
        .map(|v| binomial(n + 1, v) * genocchi(n + 1 - v) * &scale)
        .collect();
    Poly::from_coeffs(coeffs)
}

static EULER: RowCache<Poly> = RowCache::new(euler_step);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerPoly {
    pub n: usize,
    pub poly: Poly,
}

impl EulerPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("euler polynomial serializes")
    }
}

pub fn euler_poly(n: usize) -> EulerPoly {
    EulerPoly {
        n,
        poly: EULER.get(n).as_ref().clone(),
    }
}

/// `E_n(y)` with `y² = −τ`.
pub fn euler_at_y(n: usize) -> ExtElem {
    poly_eval_ext(&euler_poly(n).poly, &ExtElem::y())
}

/// `E_n(y + 1/2)`; purely real for even `n`, a pure multiple of `y` for odd `n`.
pub fn euler_at_y_plus_half(n: usize) -> ExtElem {
    poly_eval_ext(&euler_poly(n).poly, &ExtElem::y_plus(Rational::half()))
}

/// `E_n(y + 1/2)` assembled from Euler numbers instead of by evaluation:
/// `Σ_k (−1)^k C(2m,2k) E_{2m−2k} 2^{2k−2m} τ^k` for `n = 2m`, and
/// `y · Σ_k (−1)^k C(2m+1,2k+1) E_{2m−2k} 2^{2k−2m} τ^k` for `n = 2m+1`.
pub fn half_shift_expansion(n: usize) -> ExtElem {
    let m = n / 2;
    let coeffs: Vec<Rational> = (0..=m)
        .map(|k| {
            let c = if n % 2 == 0 {
                binomial(n, 2 * k)
            } else {
                binomial(n, 2 * k + 1)
            };
            Rational::sign_pow(k) * c * euler_number(2 * m - 2 * k) / pow2(2 * m - 2 * k)
        })
        .collect();
    let p = Poly::from_coeffs(coeffs);
    if n % 2 == 0 {
        ExtElem::from_poly(p)
    } else {
        ExtElem::new(Poly::zero(), p)
    }
}
