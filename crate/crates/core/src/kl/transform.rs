use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::family::{family, Family};
use crate::cache::RowCache;
use crate::exact::{Poly, Rational};

/// Which of the two KL transforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KLKind {
    /// `KL_s[xⁿ] = ∏_{σ=1}^{n} (σ² + τ)`.
    S,
    /// `KL_c[xⁿ] = ∏_{σ=0}^{n−1} ((½+σ)² + τ)`.
    C,
}

impl KLKind {
    /// The family whose transform is the monomial basis.
    pub fn family(self) -> Family {
        match self {
            KLKind::S => Family::P,
            KLKind::C => Family::PTilde,
        }
    }

    fn node(self, sigma: usize) -> Rational {
        match self {
            KLKind::S => Rational::from_int(((sigma + 1) * (sigma + 1)) as i64),
            KLKind::C => {
                let h = Rational::new(2 * sigma as i64 + 1, 2);
                &h * &h
            }
        }
    }
}

fn image_step(kind: KLKind, n: usize, prev: &[Arc<Poly>]) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    prev[n - 1].as_ref() * &Poly::linear(kind.node(n - 1), Rational::one())
}

static IMAGE_S: RowCache<Poly> = RowCache::new(|n, p| image_step(KLKind::S, n, p));
static IMAGE_C: RowCache<Poly> = RowCache::new(|n, p| image_step(KLKind::C, n, p));

/// `KL[xⁿ]` as a polynomial in `τ`.
pub fn kl_monomial(kind: KLKind, n: usize) -> Arc<Poly> {
    match kind {
        KLKind::S => IMAGE_S.get(n),
        KLKind::C => IMAGE_C.get(n),
    }
}

pub fn kl_forward(kind: KLKind, p: &Poly) -> Poly {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| kl_monomial(kind, n).scale(c))
        .sum()
}

/// Preimage of `q(τ)`: each `τⁿ` pulls back to the n-th family member.
pub fn kl_inverse(kind: KLKind, q: &Poly) -> Poly {
    q.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| family(kind.family(), n).scale(c))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_examples() {
        let x2 = Poly::monomial(Rational::one(), 2);
        assert_eq!(kl_forward(KLKind::S, &x2), Poly::from_ints(&[4, 5, 1]));
        assert_eq!(kl_forward(KLKind::S, &Poly::one()), Poly::one());
        let p2 = Poly::from_ints(&[1, -5, 1]);
        assert_eq!(kl_forward(KLKind::S, &p2), x2);
        assert!(kl_forward(KLKind::C, &Poly::zero()).is_zero());
    }

    #[test]
    fn inverse_examples() {
        let t3 = Poly::monomial(Rational::one(), 3);
        assert_eq!(kl_inverse(KLKind::S, &t3), Poly::from_ints(&[-1, 21, -14, 1]));
        assert_eq!(kl_inverse(KLKind::S, &Poly::one()), Poly::one());
        let want = Poly::from_coeffs(vec![Rational::new(-1, 4), Rational::one()]);
        assert_eq!(kl_inverse(KLKind::C, &Poly::x()), want);
    }
}
