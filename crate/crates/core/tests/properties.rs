use cfkl::euler::euler_poly;
use cfkl::exact::{factorial, poly_eval_ext, ExtElem, Poly, Rational};
use cfkl::kl::{
    connect_ptilde_to_p, connect_xp_to_ptilde, family, kl_forward, kl_inverse, x_times_family,
    Family, KLKind,
};
use cfkl::numbers::{bernoulli, central_T, central_t, euler_number, genocchi};
use cfkl::numeric::{k0, k_imag_order, kl_monomial_numeric, QuadConfig};
use proptest::prelude::*;

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-20i64..=20, 0..=max_len).prop_map(|c| Poly::from_ints(&c))
}

fn ext_strategy() -> impl Strategy<Value = ExtElem> {
    (poly_strategy(4), poly_strategy(4)).prop_map(|(a, b)| ExtElem::new(a, b))
}

/// Quotient of power series `num / den` through `t^order`.
fn series_div(num: &[Rational], den: &[Rational], order: usize) -> Vec<Rational> {
    let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut c = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k.min(den.len() - 1) {
            c -= &den[j] * &q[k - j];
        }
        q.push(c / den[0].clone());
    }
    q
}

fn exp_coeffs(order: usize) -> Vec<Rational> {
    (0..=order).map(|k| factorial(k).recip()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly_strategy(6), b in poly_strategy(6), c in poly_strategy(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn ext_ring_axioms(a in ext_strategy(), b in ext_strategy(), c in ext_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &ExtElem::one(), a.clone());
    }

    #[test]
    fn evaluation_is_homomorphism(a in poly_strategy(6), b in poly_strategy(6), n in -7i64..7, d in 1i64..5) {
        let at = Rational::new(n, d);
        prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
        let y = ExtElem::y_plus(at);
        prop_assert_eq!(poly_eval_ext(&(&a * &b), &y), &poly_eval_ext(&a, &y) * &poly_eval_ext(&b, &y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn automorphism_round_trips(p in poly_strategy(26)) {
        for kind in [KLKind::S, KLKind::C] {
            prop_assert_eq!(kl_inverse(kind, &kl_forward(kind, &p)), p.clone());
            prop_assert_eq!(kl_forward(kind, &kl_inverse(kind, &p)), p.clone());
        }
    }
}

#[test]
fn triangle_parity_rule() {
    for n in 0..=30 {
        for v in 0..=n {
            if (n + v) % 2 == 1 {
                assert!(central_t(n, v).unwrap().is_zero(), "t({n},{v})");
                assert!(central_T(n, v).unwrap().is_zero(), "T({n},{v})");
            }
        }
    }
}

#[test]
fn genocchi_matches_series_and_bernoulli() {
    // 2t/(e^t+1)
    const N: usize = 40;
    let mut den = exp_coeffs(N);
    den[0] += Rational::one();
    let mut num = vec![Rational::zero(); N + 1];
    num[1] = Rational::from_int(2);
    let series = series_div(&num, &den, N);
    for n in 0..=N {
        let g = genocchi(n);
        assert_eq!(g, &series[n] * &factorial(n), "G_{n}");
        let link = Rational::from_int(2) * (Rational::one() - Rational::from_int(2).pow(n as u32)) * bernoulli(n);
        assert_eq!(g, link, "G_{n} vs Bernoulli");
        assert!(g.is_integer());
    }
}

#[test]
fn euler_numbers_match_sech() {
    const N: usize = 31;
    let cosh: Vec<Rational> = (0..=N)
        .map(|k| if k % 2 == 0 { factorial(k).recip() } else { Rational::zero() })
        .collect();
    let mut one = vec![Rational::zero(); N + 1];
    one[0] = Rational::one();
    let sech = series_div(&one, &cosh, N);
    for n in 0..=N {
        assert_eq!(euler_number(n), &sech[n] * &factorial(n), "E_{n}");
    }
    for k in 0..=15 {
        assert!(euler_number(2 * k + 1).is_zero());
    }
}

#[test]
fn euler_polynomials_match_generating_function() {
    // 2e^{tx}/(e^t+1) = Σ E_n(x) t^n/n!, checked at x = 3/2.
    const N: usize = 16;
    let x = Rational::new(3, 2);
    let num: Vec<Rational> = (0..=N)
        .map(|k| Rational::from_int(2) * x.pow(k as u32) / factorial(k))
        .collect();
    let mut den = exp_coeffs(N);
    den[0] += Rational::one();
    let s = series_div(&num, &den, N);
    for n in 0..=N {
        assert_eq!(euler_poly(n).poly.eval(&x), &s[n] * &factorial(n), "E_{n}(3/2)");
    }
}

#[test]
fn connection_round_trip() {
    // x·P_n → P̃ basis → P basis recovers the x·P_n expansion.
    for n in 0..=10 {
        let via: Vec<Rational> = connect_xp_to_ptilde(n)
            .iter()
            .enumerate()
            .fold(vec![Rational::zero(); n + 2], |mut acc, (k, c)| {
                for (j, d) in connect_ptilde_to_p(k).iter().enumerate() {
                    acc[j] += c * d;
                }
                acc
            });
        let mut direct = x_times_family(Family::P, n);
        direct.resize(n + 2, Rational::zero());
        assert_eq!(via, direct, "n = {n}");
    }
}

#[test]
fn inverse_of_product_basis() {
    // KL_s maps P_n to τ^n, so the inverse of ∏(σ²+τ) is x^n.
    for n in 0..=12 {
        let prod = (1..=n as i64).fold(Poly::one(), |acc, s| &acc * &Poly::from_ints(&[s * s, 1]));
        assert_eq!(kl_inverse(KLKind::S, &prod), Poly::monomial(Rational::one(), n));
        assert_eq!(kl_inverse(KLKind::S, &Poly::monomial(Rational::one(), n)), *family(Family::P, n));
    }
}

#[test]
fn kernel_bounded_by_k0() {
    let cfg = QuadConfig::default();
    for &x in &[0.05, 0.3, 1.0, 4.0, 12.0] {
        let bound = k0(2.0 * f64::sqrt(x)).unwrap();
        for &tau in &[0.0, 0.1, 1.0, 5.0, 20.0] {
            let k = k_imag_order(tau, x, &cfg).unwrap();
            assert!(k.abs() <= bound * (1.0 + 1e-9), "tau={tau}, x={x}: {k} > {bound}");
        }
        let at_zero = k_imag_order(0.0, x, &cfg).unwrap();
        assert!((at_zero - bound).abs() <= 1e-9 * bound, "x={x}");
    }
}

#[test]
fn tau_zero_moments() {
    let cfg = QuadConfig::default();
    for n in 0..=5 {
        let want = factorial(n).to_f64().powi(2);
        let got = kl_monomial_numeric(KLKind::S, n, 0.0, &cfg);
        assert!(((got - want) / want).abs() < 1e-8, "n={n}: {got} vs {want}");
    }
}

#[test]
fn refinement_converges() {
    let loose = QuadConfig { rel_tol: 1e-6, ..QuadConfig::default() };
    let tight = QuadConfig { rel_tol: 1e-11, ..QuadConfig::default() };
    for kind in [KLKind::S, KLKind::C] {
        let a = kl_monomial_numeric(kind, 2, 1.0, &loose);
        let b = kl_monomial_numeric(kind, 2, 1.0, &tight);
        let exact = kl_forward(kind, &Poly::monomial(Rational::one(), 2)).eval_f64(1.0);
        assert!((b - exact).abs() <= (a - exact).abs().max(1e-12 * exact));
        assert!(((a - b) / b).abs() < 1e-5);
    }
}
