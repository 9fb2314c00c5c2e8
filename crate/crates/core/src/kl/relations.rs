use super::family::{family, Family};
use crate::exact::{binomial, pow2, Poly, Rational};
use crate::numbers::{euler_number, genocchi};

fn r(n: usize) -> Rational {
    Rational::from_int(n as i64)
}

/// `C(2n+2,2k)(n+k+2) G_{2n−2k+4} / ((2k+1)(n−k+2))`, zero for `k > n+1`.
///
/// Up to the sign `(−1)^{n+k}` this is the coefficient of `τ^k` in
/// `KL_s[x·Pₙ]`, hence of `P_k` in `x·Pₙ`.
pub fn genocchi_weight_even(n: usize, k: usize) -> Rational {
    if k > n + 1 {
        return Rational::zero();
    }
    binomial(2 * n + 2, 2 * k) * r(n + k + 2) * genocchi(2 * n + 4 - 2 * k)
        / (r(2 * k + 1) * r(n + 2 - k))
}

/// `C(2n+2,2k)(n+k+1) G_{2n−2k+4} / (2(n+1)(n−k+2))`, zero for `k > n+1`;
/// the `KL_c[x·P̃ₙ]` analogue of [`genocchi_weight_even`].
pub fn genocchi_weight_odd(n: usize, k: usize) -> Rational {
    if k > n + 1 {
        return Rational::zero();
    }
    binomial(2 * n + 2, 2 * k) * r(n + k + 1) * genocchi(2 * n + 4 - 2 * k)
        / (r(2 * (n + 1)) * r(n + 2 - k))
}

/// Coefficients of `x·Fₙ` on `F_0, …, F_{n+1}` for `F = P` or `P̃`.
pub fn x_times_family(fam: Family, n: usize) -> Vec<Rational> {
    (0..=n + 1)
        .map(|k| {
            let w = match fam {
                Family::P => genocchi_weight_even(n, k),
                _ => genocchi_weight_odd(n, k),
            };
            Rational::sign_pow(n + k) * w
        })
        .collect()
}

/// `F_{n+2}` from `F_0, …, F_{n+1}` through the structure relation
/// `F_{n+2} = (x − β_{n+1}) F_{n+1} − Σ_{k≤n} γ_{n,k} F_k`,
/// with `β = (n+2)²` for `P` and `(n+3/2)²` for `P̃`.
pub fn structure_next(fam: Family, n: usize) -> Poly {
    let fam = match fam {
        Family::P => Family::P,
        _ => Family::PTilde,
    };
    let beta = match fam {
        Family::P => r((n + 2) * (n + 2)),
        _ => {
            let h = Rational::new(2 * n as i64 + 3, 2);
            &h * &h
        }
    };
    let lead = Poly::linear(-beta, Rational::one());
    let mut out = &lead * family(fam, n + 1).as_ref();
    let weights = x_times_family(fam, n + 1);
    for (k, w) in weights.iter().enumerate().take(n + 1) {
        out = &out - &family(fam, k).scale(w);
    }
    out
}

/// `x·Pₙ = Σ_{k=0}^{n+1} c_k P̃_k` with
/// `c_k = (−1)^{n+k+1} C(2n+2,2k) E_{2n+2−2k} / 2^{2n−2k+2}`.
pub fn connect_xp_to_ptilde(n: usize) -> Vec<Rational> {
    (0..=n + 1)
        .map(|k| {
            let m = 2 * n + 2 - 2 * k;
            Rational::sign_pow(n + k + 1) * binomial(2 * n + 2, 2 * k) * euler_number(m) / pow2(m)
        })
        .collect()
}

/// `P̃ₙ = Σ_{k=0}^{n} c_k P_k` with
/// `c_k = (−1)^{n+k} C(2n+1,2k+1) E_{2n−2k} / 2^{2n−2k}`.
pub fn connect_ptilde_to_p(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|k| {
            let m = 2 * n - 2 * k;
            Rational::sign_pow(n + k) * binomial(2 * n + 1, 2 * k + 1) * euler_number(m) / pow2(m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::family::{combine, make_family, Route};

    #[test]
    fn structure_examples() {
        assert_eq!(structure_next(Family::P, 0), Poly::from_ints(&[1, -5, 1]));
        assert_eq!(structure_next(Family::P, 1), Poly::from_ints(&[-1, 21, -14, 1]));
        let pt2 = make_family(Family::PTilde, 2, Route::Explicit);
        assert_eq!(structure_next(Family::PTilde, 0), pt2);
    }

    #[test]
    fn x_times_p3_touches_p0() {
        let c = x_times_family(Family::P, 3);
        let want: Vec<Rational> = [155, 238, 98, 16, 1].iter().map(|&v| Rational::from_int(v)).collect();
        assert_eq!(c, want);
        let xp3 = &Poly::x() * family(Family::P, 3).as_ref();
        assert_eq!(combine(Family::P, &c), xp3);
    }

    #[test]
    fn connection_examples() {
        assert_eq!(connect_xp_to_ptilde(0), vec![Rational::new(1, 4), Rational::one()]);
        assert_eq!(connect_ptilde_to_p(0), vec![Rational::one()]);
        for n in 0..6 {
            let xp = &Poly::x() * family(Family::P, n).as_ref();
            assert_eq!(combine(Family::PTilde, &connect_xp_to_ptilde(n)), xp);
            assert_eq!(connect_xp_to_ptilde(n).last(), Some(&Rational::one()));
            let pt = family(Family::PTilde, n);
            assert_eq!(&combine(Family::P, &connect_ptilde_to_p(n)), pt.as_ref());
        }
    }
}
