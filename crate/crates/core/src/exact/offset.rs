use std::fmt;

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Fractional power carried in front of an [`OffsetPoly`] body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Offset {
    Zero,
    Half,
    One,
}

impl Offset {
    pub fn value(self) -> Rational {
        match self {
            Offset::Zero => Rational::zero(),
            Offset::Half => Rational::half(),
            Offset::One => Rational::one(),
        }
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Offset::Zero => "0",
            Offset::Half => "1/2",
            Offset::One => "1",
        })
    }
}

/// `x^offset · body(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffsetPoly {
    pub offset: Offset,
    pub body: Poly,
}

impl OffsetPoly {
    pub fn new(offset: Offset, body: Poly) -> Self {
        OffsetPoly { offset, body }
    }

    /// `x^(offset + k)`.
    pub fn power(offset: Offset, k: usize) -> Self {
        OffsetPoly::new(offset, Poly::monomial(Rational::one(), k))
    }

    /// Divide by `x^expected`, which must be exactly the stored offset.
    pub fn strip(self, expected: Offset) -> Result<Poly> {
        if self.offset != expected {
            return Err(Error::OffsetMismatch {
                expected: expected.to_string(),
                found: self.offset.to_string(),
            });
        }
        Ok(self.body)
    }
}

/// The operator `x d/dx x d/dx − x`.
///
/// On `x^(α+m)` it gives `(α+m)² x^(α+m) − x^(α+m+1)`, so the offset is
/// preserved and only the body changes.
pub fn apply_a(p: &OffsetPoly) -> OffsetPoly {
    let alpha = p.offset.value();
    let b = p.body.coeffs();
    let mut out = Vec::with_capacity(b.len() + 1);
    for m in 0..=b.len() {
        let mut c = Rational::zero();
        if let Some(bm) = b.get(m) {
            let e = &alpha + Rational::from_int(m as i64);
            c += &e * &e * bm;
        }
        if m > 0 {
            c -= &b[m - 1];
        }
        out.push(c);
    }
    OffsetPoly::new(p.offset, Poly::from_coeffs(out))
}

/// `A^m` applied to `p`.
pub fn apply_a_pow(p: &OffsetPoly, m: usize) -> OffsetPoly {
    (0..m).fold(p.clone(), |acc, _| apply_a(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_on_x() {
        let out = apply_a(&OffsetPoly::power(Offset::One, 0));
        assert_eq!(out, OffsetPoly::new(Offset::One, Poly::from_ints(&[1, -1])));
    }

    #[test]
    fn a_on_sqrt_x() {
        let out = apply_a(&OffsetPoly::power(Offset::Half, 0));
        let body = Poly::from_coeffs(vec![Rational::new(1, 4), Rational::from_int(-1)]);
        assert_eq!(out, OffsetPoly::new(Offset::Half, body));
    }

    #[test]
    fn a_on_constant() {
        let out = apply_a(&OffsetPoly::power(Offset::Zero, 0));
        assert_eq!(out.body, Poly::from_ints(&[0, -1]));
    }

    #[test]
    fn strip_checks_offset() {
        let p = OffsetPoly::power(Offset::Half, 2);
        assert!(p.clone().strip(Offset::One).is_err());
        assert_eq!(p.strip(Offset::Half).unwrap(), Poly::monomial(Rational::one(), 2));
    }
}
