use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Element `a(τ) + y·b(τ)` of `Q[τ][y]/(y² + τ)`; `y` stands for `i√τ`.
///
/// Products reduce `y²` to `−τ` immediately, so the y-degree never exceeds 1.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExtElem {
    pub real: Poly,
    pub y_part: Poly,
}

impl ExtElem {
    pub fn new(real: Poly, y_part: Poly) -> Self {
        ExtElem { real, y_part }
    }

    pub fn from_poly(real: Poly) -> Self {
        ExtElem::new(real, Poly::zero())
    }

    pub fn constant(c: Rational) -> Self {
        ExtElem::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        ExtElem::constant(Rational::one())
    }

    /// The generator `y`.
    pub fn y() -> Self {
        ExtElem::new(Poly::zero(), Poly::one())
    }

    /// `y + c`.
    pub fn y_plus(c: Rational) -> Self {
        ExtElem::new(Poly::constant(c), Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.y_part.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExtElem::new(self.real.scale(c), self.y_part.scale(c))
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        ExtElem::new(&self.real * p, &self.y_part * p)
    }

    /// The polynomial `q` with `self = y·q`; fails unless the real part is zero.
    pub fn cofactor_of_y(&self) -> Result<Poly> {
        if !self.real.is_zero() {
            return Err(Error::NotMultipleOfY(self.real.display_var("tau").to_string()));
        }
        Ok(self.y_part.clone())
    }

    /// The real part, asserting the y-part vanishes.
    pub fn into_real(self) -> Result<Poly> {
        if !self.y_part.is_zero() {
            return Err(Error::NonzeroYPart(self.y_part.display_var("tau").to_string()));
        }
        Ok(self.real)
    }
}

fn tau() -> Poly {
    Poly::x()
}

impl Add for &ExtElem {
    type Output = ExtElem;
    fn add(self, rhs: &ExtElem) -> ExtElem {
        ExtElem::new(&self.real + &rhs.real, &self.y_part + &rhs.y_part)
    }
}

impl Sub for &ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: &ExtElem) -> ExtElem {
        ExtElem::new(&self.real - &rhs.real, &self.y_part - &rhs.y_part)
    }
}

impl Mul for &ExtElem {
    type Output = ExtElem;
    fn mul(self, rhs: &ExtElem) -> ExtElem {
        // (a + y b)(c + y d) = ac − τ bd + y(ad + bc)
        let bd = &self.y_part * &rhs.y_part;
        let real = &(&self.real * &rhs.real) - &(&bd * &tau());
        let y_part = &(&self.real * &rhs.y_part) + &(&self.y_part * &rhs.real);
        ExtElem::new(real, y_part)
    }
}

impl Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem::new(-&self.real, -&self.y_part)
    }
}

impl Add for ExtElem {
    type Output = ExtElem;
    fn add(self, rhs: ExtElem) -> ExtElem {
        &self + &rhs
    }
}

impl Sub for ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: ExtElem) -> ExtElem {
        &self - &rhs
    }
}

impl Mul for ExtElem {
    type Output = ExtElem;
    fn mul(self, rhs: ExtElem) -> ExtElem {
        &self * &rhs
    }
}

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        -&self
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + y*({})",
            self.real.display_var("tau"),
            self.y_part.display_var("tau")
        )
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElem[{self}]")
    }
}

pub fn ext_mul(a: &ExtElem, b: &ExtElem) -> ExtElem {
    a * b
}

/// Horner evaluation of a rational polynomial at a point of the ring.
pub fn poly_eval_ext(p: &Poly, point: &ExtElem) -> ExtElem {
    p.coeffs().iter().rev().fold(ExtElem::default(), |acc, c| {
        &(&acc * point) + &ExtElem::constant(c.clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn defining_relation() {
        let y = ExtElem::y();
        assert_eq!(ext_mul(&y, &y), ExtElem::from_poly(t(&[0, -1])));
    }

    #[test]
    fn conjugate_product() {
        let a = ExtElem::new(t(&[1]), t(&[1]));
        let b = ExtElem::new(t(&[1]), t(&[-1]));
        assert_eq!(ext_mul(&a, &b), ExtElem::from_poly(t(&[1, 1])));
    }

    #[test]
    fn scalar_action() {
        let out = ext_mul(&ExtElem::y(), &ExtElem::from_poly(t(&[1, 1])));
        assert_eq!(out, ExtElem::new(Poly::zero(), t(&[1, 1])));
    }

    #[test]
    fn eval_examples() {
        // x² − x at y
        let e2 = t(&[0, -1, 1]);
        assert_eq!(poly_eval_ext(&e2, &ExtElem::y()), ExtElem::new(t(&[0, -1]), t(&[-1])));
        assert_eq!(poly_eval_ext(&Poly::one(), &ExtElem::y()), ExtElem::one());
        let half = ExtElem::y_plus(Rational::half());
        assert_eq!(poly_eval_ext(&Poly::x(), &half), half);
    }

    #[test]
    fn cofactor() {
        let e = ExtElem::new(Poly::zero(), t(&[1, 1]));
        assert_eq!(e.cofactor_of_y().unwrap(), t(&[1, 1]));
        assert!(ExtElem::one().cofactor_of_y().is_err());
        assert!(ExtElem::y().into_real().is_err());
    }
}
