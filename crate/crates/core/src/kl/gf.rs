use super::family::{family, Family};
use crate::exact::series_exp_sin;

/// Compares the Taylor coefficients of `exp(2s·sin(u/2))`, `s = √x`, with the
/// families for all `n ≤ max_n`:
/// `(2n+1)!·[u^{2n+1}] = s·P̃ₙ(s²)` and `(2n+2)!·[u^{2n+2}] = s²·Pₙ(s²)`.
pub fn gf_coefficient_check(fam: Family, max_n: usize) -> bool {
    let series = series_exp_sin(2 * max_n + 2);
    (0..=max_n).all(|n| match fam {
        Family::P => {
            let want = family(Family::P, n).substitute_square().shift_up(2);
            series.derivative_at_zero(2 * n + 2) == want
        }
        Family::PTilde => {
            let want = family(Family::PTilde, n).substitute_square().shift_up(1);
            series.derivative_at_zero(2 * n + 1) == want
        }
        Family::PHat => false,
    })
}
