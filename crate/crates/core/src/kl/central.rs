use crate::exact::{Poly, Rational};

/// `(x − n/2 + ½)ₙ = ∏_{j=0}^{n−1} (x − n/2 + ½ + j)`.
pub fn central_factorial_poly(n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, j| {
        let shift = Rational::new(2 * j as i64 + 1 - n as i64, 2);
        &acc * &Poly::linear(shift, Rational::one())
    })
}

/// `(δp)(x) = p(x + ½) − p(x − ½)`.
pub fn central_difference(p: &Poly) -> Poly {
    let h = Rational::half();
    &p.translate(&h) - &p.translate(&-&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::TriangleKind;

    #[test]
    fn examples() {
        assert_eq!(central_factorial_poly(0), Poly::one());
        let quarter = Rational::new(-1, 4);
        assert_eq!(
            central_factorial_poly(2),
            Poly::from_coeffs(vec![quarter, Rational::zero(), Rational::one()])
        );
        let four = Poly::from_coeffs(vec![
            Rational::new(9, 16),
            Rational::zero(),
            Rational::new(-5, 2),
            Rational::zero(),
            Rational::one(),
        ]);
        assert_eq!(central_factorial_poly(4), four);
        assert_eq!(central_difference(&Poly::x()), Poly::one());
        let x2 = Poly::monomial(Rational::one(), 2);
        assert_eq!(central_difference(&x2), Poly::from_ints(&[0, 2]));
        assert_eq!(
            central_difference(&central_factorial_poly(3)),
            central_factorial_poly(2).scale(&Rational::from_int(3))
        );
    }

    #[test]
    fn coefficients_are_first_kind_numbers() {
        for n in 0..16 {
            let want: Vec<Rational> = (0..=n)
                .map(|v| TriangleKind::CentralFirst.value(n as isize + 1, v as isize + 1))
                .collect();
            assert_eq!(central_factorial_poly(n), Poly::from_coeffs(want), "n = {n}");
        }
    }
}
