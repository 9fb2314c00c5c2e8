use super::family::{family, Family};
use super::transform::{kl_forward, KLKind};
use crate::exact::{apply_a_pow, Offset, OffsetPoly, Poly, Rational};
use crate::numbers::views::{t_e, t_o};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorParity {
    /// `(−1)^m x⁻¹ 𝒜^m x^{k+1}` against `P`.
    EvenP,
    /// `(−1)^m x^{−½} 𝒜^m x^{k+½}` against `P̃`.
    OddPtilde,
}

/// Checks `(−1)^m x^{−α} 𝒜^m x^{k+α} = Σ_ν (−1)^{k+ν} c(k,ν) F_{m+ν}` with
/// `(α, c, F) = (1, t_E(k+1,ν+1), P)` or `(½, t_O(k,ν), P̃)`.
pub fn operator_power_identity(m: usize, k: usize, parity: OperatorParity) -> bool {
    let (offset, fam) = match parity {
        OperatorParity::EvenP => (Offset::One, Family::P),
        OperatorParity::OddPtilde => (Offset::Half, Family::PTilde),
    };
    let lhs = match apply_a_pow(&OffsetPoly::power(offset, k), m).strip(offset) {
        Ok(body) => body.scale(&Rational::sign_pow(m)),
        Err(_) => return false,
    };
    let rhs: Poly = (0..=k)
        .map(|v| {
            let c = match parity {
                OperatorParity::EvenP => t_e(k + 1, v + 1),
                OperatorParity::OddPtilde => t_o(k, v),
            };
            family(fam, m + v).scale(&(Rational::sign_pow(k + v) * c))
        })
        .sum();
    lhs == rhs
}

/// Checks `KL[x^{−α} 𝒜^m x^{k+α} B] = (−1)^m τ^m KL[x^k B]`, with `α = 1` for
/// `KL_s` and `α = ½` for `KL_c`.
pub fn lemma_kl_a_power(kind: KLKind, m: usize, k: usize, b: &Poly) -> bool {
    let offset = match kind {
        KLKind::S => Offset::One,
        KLKind::C => Offset::Half,
    };
    let xk_b = b.shift_up(k);
    let lhs = match apply_a_pow(&OffsetPoly::new(offset, xk_b.clone()), m).strip(offset) {
        Ok(body) => kl_forward(kind, &body),
        Err(_) => return false,
    };
    let rhs = kl_forward(kind, &xk_b)
        .shift_up(m)
        .scale(&Rational::sign_pow(m));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_examples() {
        assert!(operator_power_identity(0, 0, OperatorParity::EvenP));
        assert!(operator_power_identity(2, 1, OperatorParity::EvenP));
        assert!(operator_power_identity(1, 2, OperatorParity::OddPtilde));
        for m in 0..6 {
            for k in 0..6 {
                assert!(operator_power_identity(m, k, OperatorParity::EvenP));
                assert!(operator_power_identity(m, k, OperatorParity::OddPtilde));
            }
        }
    }

    #[test]
    fn a_power_examples() {
        assert!(lemma_kl_a_power(KLKind::S, 0, 0, &Poly::one()));
        assert!(lemma_kl_a_power(KLKind::S, 1, 0, &Poly::one()));
        assert!(lemma_kl_a_power(KLKind::C, 2, 1, &Poly::from_ints(&[-1, 1])));
        let b = Poly::from_ints(&[3, 0, -2, 1]);
        for m in 0..5 {
            for k in 0..4 {
                assert!(lemma_kl_a_power(KLKind::S, m, k, &b));
                assert!(lemma_kl_a_power(KLKind::C, m, k, &b));
            }
        }
    }
}
