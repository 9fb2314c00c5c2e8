use super::{factorial, Poly, Rational};

/// Truncated power series in `u` whose coefficients are polynomials in `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    coeffs: Vec<Poly>,
}

impl Series2 {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `u^k`.
    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    /// `k! · [u^k]`, i.e. the k-th u-derivative at `u = 0`.
    pub fn derivative_at_zero(&self, k: usize) -> Poly {
        self.coeffs[k].scale(&factorial(k))
    }

    pub fn truncate(&self, order: usize) -> Series2 {
        Series2 {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }
}

/// Taylor coefficients of `2 sin(u/2)` up to `u^order`.
fn two_sin_half(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                return Rational::zero();
            }
            let j = (k - 1) / 2;
            // (−1)^j · 2 · (1/2)^k / k!
            Rational::sign_pow(j) * Rational::new(1, 2).pow(k as u32 - 1) / factorial(k)
        })
        .collect()
}

/// Expansion of `exp(2s·sin(u/2))` in `u` through `u^order`.
///
/// Uses `f' = s·w'·f` with `w = 2 sin(u/2)`, giving
/// `k·f_k = s · Σ_{j=1..k} j·w_j·f_{k−j}`.
pub fn series_exp_sin(order: usize) -> Series2 {
    let w = two_sin_half(order);
    let s = Poly::x();
    let mut f: Vec<Poly> = Vec::with_capacity(order + 1);
    f.push(Poly::one());
    for k in 1..=order {
        let mut acc = Poly::zero();
        for j in 1..=k {
            if w[j].is_zero() {
                continue;
            }
            let weight = &w[j] * Rational::from_int(j as i64);
            acc = &acc + &f[k - j].scale(&weight);
        }
        let fk = (&acc * &s).scale(&Rational::new(1, k as i64));
        f.push(fk);
    }
    Series2 { coeffs: f }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        let s = series_exp_sin(3);
        assert_eq!(s.coeff(0), &Poly::one());
        assert_eq!(s.coeff(1), &Poly::x());
        // 3!·[u³] = s³ − s/4
        let expect = Poly::from_coeffs(vec![
            Rational::zero(),
            Rational::new(-1, 4),
            Rational::zero(),
            Rational::one(),
        ]);
        assert_eq!(s.derivative_at_zero(3), expect);
    }

    #[test]
    fn truncation_is_prefix() {
        let big = series_exp_sin(12);
        for n in 0..12 {
            assert_eq!(big.truncate(n), series_exp_sin(n));
        }
    }
}
