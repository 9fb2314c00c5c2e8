//! Bounded-range exact checks of identities linking central factorial numbers,
//! Genocchi and Euler numbers, and Euler polynomials at `y` and `y + ½`.
//!
//! Right-hand sides of the form `y⁻¹·(…)` use [`ExtElem::cofactor_of_y`], so a
//! nonzero real part is reported as a failure rather than silently dropped.

use super::report::{broken, compare, IdentityReport, Witness};
use crate::error::Result;
use crate::euler::{euler_at_y, euler_at_y_plus_half};
use crate::exact::{binomial, factorial, pow2, ExtElem, Poly, Rational};
use crate::kl::{
    family, genocchi_weight_even as gw, genocchi_weight_odd as gwo, kl_forward, kl_monomial,
    Family, KLKind,
};
use crate::numbers::views::{t_e, t_o, T_e, T_o};
use crate::numbers::{euler_number, genocchi, Parity};

fn sign(k: usize) -> Rational {
    Rational::sign_pow(k)
}

/// `∏_{σ=1}^{n} (τ + σ²)`.
fn prod_s(n: usize) -> Poly {
    kl_monomial(KLKind::S, n).as_ref().clone()
}

/// `∏_{σ=0}^{n−1} (τ + (σ+½)²)`.
fn prod_c(n: usize) -> Poly {
    kl_monomial(KLKind::C, n).as_ref().clone()
}

/// `τ·E_a(y) + E_{a+2}(y)`.
fn tau_pair(a: usize) -> ExtElem {
    &ExtElem::from_poly(Poly::x()) * &euler_at_y(a) + euler_at_y(a + 2)
}

fn poly_case(n: usize, detail: &str, lhs: Poly, rhs: Result<Poly>) -> Option<Witness> {
    match rhs {
        Ok(rhs) => compare(n, detail, &lhs, &rhs),
        Err(e) => Some(broken(n, detail, e)),
    }
}

pub fn check_genocchi_central(nmax: usize) -> IdentityReport {
    IdentityReport::scan("genocchi-central", nmax, |n| {
        let lhs: Rational = (0..=n)
            .map(|v| {
                let f = factorial(v + 1);
                sign(v) * T_e(n + 1, v + 1) * &f * &f
            })
            .sum();
        compare(n, "", &lhs, &genocchi(2 * n + 4))
    })
}

pub fn check_cfact_to_euler(parity: Parity, nmax: usize) -> IdentityReport {
    match parity {
        Parity::Even => IdentityReport::scan("cfact-to-euler-even", nmax, |n| {
            let lhs: Poly = (0..=n)
                .map(|v| prod_s(v + 1).scale(&(sign(v) * T_e(n + 1, v + 1))))
                .sum();
            poly_case(n, "", lhs, tau_pair(2 * n + 2).cofactor_of_y())
        }),
        Parity::Odd => IdentityReport::scan("cfact-to-euler-odd", nmax, |n| {
            let lhs: Poly = (0..=n)
                .map(|v| prod_c(v + 1).scale(&(sign(n + v) * T_o(n, v))))
                .sum();
            let rhs = tau_pair(2 * n + 1).scale(&sign(n)).into_real();
            poly_case(n, "", lhs, rhs)
        }),
    }
}

pub fn check_half_shift(parity: Parity, nmax: usize) -> IdentityReport {
    match parity {
        Parity::Even => IdentityReport::scan("half-shift-even", nmax, |n| {
            let lhs: Poly = (0..=n)
                .map(|v| prod_c(v + 1).scale(&(sign(v) * T_e(n + 1, v + 1))))
                .sum();
            let rhs = (-euler_at_y_plus_half(2 * n + 2)).into_real();
            poly_case(n, "", lhs, rhs)
        }),
        Parity::Odd => IdentityReport::scan("half-shift-odd", nmax, |n| {
            let lhs: Poly = (0..=n)
                .map(|v| prod_s(v).scale(&(sign(v) * T_o(n, v))))
                .sum();
            poly_case(n, "", lhs, euler_at_y_plus_half(2 * n + 1).cofactor_of_y())
        }),
    }
}

/// `C(2n+2,2k) E_{2n+2−2k} / 2^{2n+2−2k}`.
fn euler_weight_even(n: usize, k: usize) -> Rational {
    let m = 2 * n + 2 - 2 * k;
    binomial(2 * n + 2, 2 * k) * euler_number(m) / pow2(m)
}

/// `C(2n+1,2k+1) E_{2n−2k} / 2^{2n−2k}`.
fn euler_weight_odd(n: usize, k: usize) -> Rational {
    let m = 2 * n - 2 * k;
    binomial(2 * n + 1, 2 * k + 1) * euler_number(m) / pow2(m)
}

/// One of the four triangle recurrences, `which ∈ 1..=4`:
///
/// 1. `T_E(n+1,ν) = −Σ_{k=ν}^{n+1} gw(n,k) T_E(k+1,ν+1)`
/// 2. `T_O(n,ν−1) = −Σ_{k=ν}^{n+1} gwo(n,k) T_O(k,ν)` (left side 0 at ν = 0)
/// 3. `T_E(n+1,ν) = Σ_{k=ν}^{n+1} C(2n+2,2k) E_{2n+2−2k} 2^{2k−2n−2} T_O(k,ν)`
/// 4. `T_O(n,ν) = Σ_{k=ν}^{n} C(2n+1,2k+1) E_{2n−2k} 2^{2k−2n} T_E(k+1,ν+1)`
///
/// where `gw`, `gwo` are [`genocchi_weight_even`](crate::kl::genocchi_weight_even)
/// and [`genocchi_weight_odd`](crate::kl::genocchi_weight_odd).
pub fn check_triangle_recurrence(which: u8, nmax: usize) -> IdentityReport {
    let id = format!("triangle-recurrence-{which}");
    IdentityReport::scan(&id, nmax, |n| {
        let top = if which == 4 { n } else { n + 1 };
        (0..=top).find_map(|v| {
            let (lhs, rhs): (Rational, Rational) = match which {
                1 => (
                    T_e(n + 1, v),
                    -(v..=n + 1).map(|k| gw(n, k) * T_e(k + 1, v + 1)).sum::<Rational>(),
                ),
                2 => (
                    if v == 0 { Rational::zero() } else { T_o(n, v - 1) },
                    -(v..=n + 1).map(|k| gwo(n, k) * T_o(k, v)).sum::<Rational>(),
                ),
                3 => (
                    T_e(n + 1, v),
                    (v..=n + 1).map(|k| euler_weight_even(n, k) * T_o(k, v)).sum(),
                ),
                _ => (
                    T_o(n, v),
                    (v..=n).map(|k| euler_weight_odd(n, k) * T_e(k + 1, v + 1)).sum(),
                ),
            };
            compare(n, format!("nu={v}"), &lhs, &rhs)
        })
    })
}

pub fn check_triangle_recurrences(nmax: usize) -> IdentityReport {
    let parts = (1..=4).map(|w| check_triangle_recurrence(w, nmax)).collect();
    IdentityReport::merge("triangle-recurrences", parts)
}

/// `Σ_ν T_E(n+1,ν+1) t_E(ν+2,μ+1) = −gw(n,μ)` (even) and
/// `Σ_ν T_O(n,ν) t_O(ν+1,μ) = −gwo(n,μ)` (odd), for `μ = 0..=n+1`.
#[allow(non_snake_case)]
pub fn check_t_T_genocchi_convolution(parity: Parity, nmax: usize) -> IdentityReport {
    let id = match parity {
        Parity::Even => "convolution-even",
        Parity::Odd => "convolution-odd",
    };
    IdentityReport::scan(id, nmax, |n| {
        (0..=n + 1).find_map(|mu| {
            let (lhs, rhs): (Rational, Rational) = match parity {
                Parity::Even => (
                    (0..=n).map(|v| T_e(n + 1, v + 1) * t_e(v + 2, mu + 1)).sum(),
                    -gw(n, mu),
                ),
                Parity::Odd => (
                    (0..=n).map(|v| T_o(n, v) * t_o(v + 1, mu)).sum(),
                    -gwo(n, mu),
                ),
            };
            compare(n, format!("mu={mu}"), &lhs, &rhs)
        })
    })
}

#[allow(non_snake_case)]
pub fn check_t_T_genocchi_convolutions(nmax: usize) -> IdentityReport {
    let parts = vec![
        check_t_T_genocchi_convolution(Parity::Even, nmax),
        check_t_T_genocchi_convolution(Parity::Odd, nmax),
    ];
    IdentityReport::merge("convolutions", parts)
}

/// Central factorial products as t-weighted Euler combinations, `which ∈ 1..=4`:
///
/// 1. `∏_{σ=1}^{n+1}(σ²+τ) = y⁻¹ (−1)ⁿ Σ_ν t_E(n+1,ν+1) (τE_{2ν+2}(y) + E_{2ν+4}(y))`
/// 2. `∏_{σ=0}^{n}((½+σ)²+τ) = (−1)ⁿ Σ_ν t_O(n,ν) (τE_{2ν+1}(y) + E_{2ν+3}(y))`
/// 3. `∏_{σ=0}^{n}((½+σ)²+τ) = (−1)^{n+1} Σ_ν t_E(n+1,ν+1) E_{2ν+2}(y+½)`
/// 4. `∏_{σ=1}^{n}(σ²+τ) = y⁻¹ (−1)ⁿ Σ_ν t_O(n,ν) E_{2ν+1}(y+½)`
pub fn check_factorial_to_euler(which: u8, nmax: usize) -> IdentityReport {
    let id = format!("factorials-to-eulers-{which}");
    IdentityReport::scan(&id, nmax, |n| {
        let combo = |f: &dyn Fn(usize) -> ExtElem| -> ExtElem {
            (0..=n).fold(ExtElem::default(), |acc, v| &acc + &f(v))
        };
        match which {
            1 => {
                let rhs = combo(&|v| tau_pair(2 * v + 2).scale(&t_e(n + 1, v + 1))).scale(&sign(n));
                poly_case(n, "", prod_s(n + 1), rhs.cofactor_of_y())
            }
            2 => {
                let rhs = combo(&|v| tau_pair(2 * v + 1).scale(&t_o(n, v))).scale(&sign(n));
                poly_case(n, "", prod_c(n + 1), rhs.into_real())
            }
            3 => {
                let rhs =
                    combo(&|v| euler_at_y_plus_half(2 * v + 2).scale(&t_e(n + 1, v + 1))).scale(&sign(n + 1));
                poly_case(n, "", prod_c(n + 1), rhs.into_real())
            }
            _ => {
                let rhs = combo(&|v| euler_at_y_plus_half(2 * v + 1).scale(&t_o(n, v))).scale(&sign(n));
                poly_case(n, "", prod_s(n), rhs.cofactor_of_y())
            }
        }
    })
}

pub fn check_factorials_to_eulers(nmax: usize) -> IdentityReport {
    let parts = (1..=4).map(|w| check_factorial_to_euler(w, nmax)).collect();
    IdentityReport::merge("factorials-to-eulers", parts)
}

/// 1. `−t_E(n+2,μ+1) = Σ_ν t_E(n+1,ν+1) gw(ν,μ)` for `μ = 0..=n+1`
/// 2. `((n+1)!)² = (−1)ⁿ Σ_ν t_E(n+1,ν+1) G_{2ν+4}`
pub fn check_final_pair_line(line: u8, nmax: usize) -> IdentityReport {
    let id = format!("final-pair-{line}");
    IdentityReport::scan(&id, nmax, |n| {
        if line == 1 {
            (0..=n + 1).find_map(|mu| {
                let lhs = -t_e(n + 2, mu + 1);
                let rhs: Rational = (0..=n).map(|v| t_e(n + 1, v + 1) * gw(v, mu)).sum();
                compare(n, format!("mu={mu}"), &lhs, &rhs)
            })
        } else {
            let f = factorial(n + 1);
            let rhs: Rational = (0..=n)
                .map(|v| t_e(n + 1, v + 1) * genocchi(2 * v + 4))
                .sum::<Rational>()
                * sign(n);
            compare(n, "", &(&f * &f), &rhs)
        }
    })
}

pub fn check_final_pair(nmax: usize) -> IdentityReport {
    let parts = vec![check_final_pair_line(1, nmax), check_final_pair_line(2, nmax)];
    IdentityReport::merge("final-pair", parts)
}

/// `G_{2n+2} = (2n+2) Σ_ν (−1)^{ν+1} T_E(n+1,ν+1) (2ν+1)! / 2^{2ν+1}`.
pub fn check_genocchi_number_sum(nmax: usize) -> IdentityReport {
    IdentityReport::scan("genocchi-number-sum", nmax, |n| {
        let s: Rational = (0..=n)
            .map(|v| sign(v + 1) * T_e(n + 1, v + 1) * factorial(2 * v + 1) / pow2(2 * v + 1))
            .sum();
        compare(n, "", &genocchi(2 * n + 2), &(s * Rational::from_int(2 * n as i64 + 2)))
    })
}

/// `E_{2n} / 4ⁿ = Σ_ν (−1)^ν T_O(n,ν) (2ν)! / 4^ν`.
pub fn check_euler_number_sum(nmax: usize) -> IdentityReport {
    IdentityReport::scan("euler-number-sum", nmax, |n| {
        let s: Rational = (0..=n)
            .map(|v| sign(v) * T_o(n, v) * factorial(2 * v) / pow2(2 * v))
            .sum();
        compare(n, "", &(euler_number(2 * n) / pow2(2 * n)), &s)
    })
}

fn x_times(fam: Family, n: usize) -> Poly {
    family(fam, n).shift_up(1)
}

/// `KL_s[x·Pₙ] = y⁻¹ (−1)ⁿ (τE_{2n+2}(y) + E_{2n+4}(y))`.
pub fn check_kl_xp_euler(nmax: usize) -> IdentityReport {
    IdentityReport::scan("kl-s-xp-euler", nmax, |n| {
        let rhs = tau_pair(2 * n + 2).scale(&sign(n)).cofactor_of_y();
        poly_case(n, "", kl_forward(KLKind::S, &x_times(Family::P, n)), rhs)
    })
}

/// `KL_c[x·P̃ₙ] = (−1)ⁿ (τE_{2n+1}(y) + E_{2n+3}(y))`.
pub fn check_kl_xptilde_euler(nmax: usize) -> IdentityReport {
    IdentityReport::scan("kl-c-xptilde-euler", nmax, |n| {
        let rhs = tau_pair(2 * n + 1).scale(&sign(n)).into_real();
        poly_case(n, "", kl_forward(KLKind::C, &x_times(Family::PTilde, n)), rhs)
    })
}

/// `KL_c[x·Pₙ] = (−1)^{n+1} E_{2n+2}(y+½)`.
pub fn check_kl_c_xp(nmax: usize) -> IdentityReport {
    IdentityReport::scan("kl-c-xp-half-shift", nmax, |n| {
        let rhs = euler_at_y_plus_half(2 * n + 2).scale(&sign(n + 1)).into_real();
        poly_case(n, "", kl_forward(KLKind::C, &x_times(Family::P, n)), rhs)
    })
}

/// `KL_s[P̃ₙ] = y⁻¹ (−1)ⁿ E_{2n+1}(y+½)`.
pub fn check_kl_s_ptilde(nmax: usize) -> IdentityReport {
    IdentityReport::scan("kl-s-ptilde-half-shift", nmax, |n| {
        let rhs = euler_at_y_plus_half(2 * n + 1).scale(&sign(n)).cofactor_of_y();
        poly_case(n, "", kl_forward(KLKind::S, family(Family::PTilde, n).as_ref()), rhs)
    })
}
