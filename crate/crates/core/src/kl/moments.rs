use super::family::Family;
use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};
use crate::numbers::views::{t_e, t_o};

/// `(uₙ)_k = ⟨uₙ, x^k⟩` for the dual sequence of `P` (or `P̃`):
/// `(−1)^{n+k} t_E(k+1,n+1)` (or `(−1)^{n+k} t_O(k,n)`).
pub fn dual_moment(fam: Family, n: usize, k: usize) -> Result<Rational> {
    if n > k {
        return Err(Error::Index {
            what: "dual moment",
            n,
            k,
        });
    }
    let sign = Rational::sign_pow(n + k);
    match fam {
        Family::P => Ok(sign * t_e(k + 1, n + 1)),
        Family::PTilde => Ok(sign * t_o(k, n)),
        Family::PHat => Err(Error::Domain("dual moments are defined for P and Ptilde".into())),
    }
}

/// Moments of the canonical form: `(k!)²` for `P`, `∏_{σ<k} (½+σ)²` for `P̃`.
pub fn canonical_moments(fam: Family, count: usize) -> Vec<Rational> {
    (0..count)
        .map(|k| match fam {
            Family::P => {
                let f = factorial(k);
                &f * &f
            }
            _ => (0..k)
                .map(|s| {
                    let h = Rational::new(2 * s as i64 + 1, 2);
                    &h * &h
                })
                .product(),
        })
        .collect()
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let size = m.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..size {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// `det[(m_{i+j})]_{0≤i,j≤order}`.
pub fn hankel_determinant(moments: &[Rational], order: usize) -> Result<Rational> {
    if moments.len() < 2 * order + 1 {
        return Err(Error::Domain(format!(
            "order {order} needs {} moments, got {}",
            2 * order + 1,
            moments.len()
        )));
    }
    let m = (0..=order)
        .map(|i| (0..=order).map(|j| moments[i + j].clone()).collect())
        .collect();
    Ok(determinant(m))
}
