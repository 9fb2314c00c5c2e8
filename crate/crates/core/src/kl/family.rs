use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cache::RowCache;
use crate::exact::{apply_a_pow, pow2, Offset, OffsetPoly, Poly, Rational};
use crate::numbers::views::{t_e, t_o, T_e, T_o};

/// The polynomial families with monomial KL images, plus the integer rescaling
/// `P̂ₙ(x) = 4ⁿ P̃ₙ(x/4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    P,
    #[serde(rename = "Ptilde")]
    PTilde,
    #[serde(rename = "Phat")]
    PHat,
}

/// How a family member is constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Signed central factorial numbers of the second kind.
    Explicit,
    /// The second-order differential recurrence.
    Recurrence,
    /// Powers of the operator `𝒜` on `x` or `√x`.
    Operator,
}

fn explicit(fam: Family, n: usize) -> Poly {
    let coeffs = (0..=n)
        .map(|v| {
            let sign = Rational::sign_pow(n + v);
            match fam {
                Family::P => sign * T_e(n + 1, v + 1),
                _ => sign * T_o(n, v),
            }
        })
        .collect();
    let p = Poly::from_coeffs(coeffs);
    match fam {
        Family::PHat => hat_of(&p, n),
        _ => p,
    }
}

fn hat_of(ptilde: &Poly, n: usize) -> Poly {
    ptilde.rescale_arg(&Rational::new(1, 4)).scale(&pow2(2 * n))
}

static EXPLICIT_P: RowCache<Poly> = RowCache::new(|n, _| explicit(Family::P, n));
static EXPLICIT_PTILDE: RowCache<Poly> = RowCache::new(|n, _| explicit(Family::PTilde, n));
static EXPLICIT_PHAT: RowCache<Poly> = RowCache::new(|n, _| explicit(Family::PHat, n));

/// Cached n-th member, built by the explicit route.
pub fn family(fam: Family, n: usize) -> Arc<Poly> {
    match fam {
        Family::P => EXPLICIT_P.get(n),
        Family::PTilde => EXPLICIT_PTILDE.get(n),
        Family::PHat => EXPLICIT_PHAT.get(n),
    }
}

// P_{n+1} = −x²P'' − 3xP' − (1−x)P,  P̃_{n+1} = −x²P̃'' − 2xP̃' − (¼−x)P̃
fn recurrence_step(p: &Poly, first: i64, c0: Rational) -> Poly {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let x = Poly::x();
    let x2 = Poly::monomial(Rational::one(), 2);
    let lin = Poly::linear(c0, Rational::from_int(-1));
    -(&(&(&x2 * &d2) + &(&x * &d1).scale(&Rational::from_int(first))) + &(&lin * p))
}

fn by_recurrence(fam: Family, n: usize) -> Poly {
    let (first, c0) = match fam {
        Family::P => (3, Rational::one()),
        _ => (2, Rational::new(1, 4)),
    };
    (0..n).fold(Poly::one(), |p, _| recurrence_step(&p, first, c0.clone()))
}

fn by_operator(fam: Family, n: usize) -> Poly {
    let offset = match fam {
        Family::P => Offset::One,
        _ => Offset::Half,
    };
    let body = apply_a_pow(&OffsetPoly::power(offset, 0), n)
        .strip(offset)
        .expect("𝒜 preserves the offset");
    body.scale(&Rational::sign_pow(n))
}

pub fn make_family(fam: Family, n: usize, route: Route) -> Poly {
    let p = match route {
        Route::Explicit => return family(fam, n).as_ref().clone(),
        Route::Recurrence => by_recurrence(fam, n),
        Route::Operator => by_operator(fam, n),
    };
    match fam {
        Family::PHat => hat_of(&p, n),
        _ => p,
    }
}

pub fn p_hat(n: usize) -> Poly {
    family(Family::PHat, n).as_ref().clone()
}

/// Coefficients `c_k` with `xⁿ = Σ c_k family_k(x)`.
pub fn expand_monomial(fam: Family, n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|k| {
            let sign = Rational::sign_pow(n + k);
            match fam {
                Family::P => sign * t_e(n + 1, k + 1),
                Family::PTilde => sign * t_o(n, k),
                Family::PHat => sign * t_o(n, k) * pow2(2 * (n - k)),
            }
        })
        .collect()
}

/// `Σ c_k family_k(x)`.
pub fn combine(fam: Family, coeffs: &[Rational]) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| family(fam, k).scale(c))
        .sum()
}

/// JSON row `{"family": .., "n": .., "coeffs": [..]}`.
pub fn family_row_json(fam: Family, n: usize) -> serde_json::Value {
    serde_json::json!({
        "family": fam,
        "n": n,
        "coeffs": family(fam, n).as_ref(),
    })
}
