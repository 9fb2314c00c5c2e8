//! Acceptance criteria 1-11. Prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cfkl::euler::{euler_at_y_plus_half, half_shift_expansion};
use cfkl::exact::{binomial, Poly, Rational};
use cfkl::identities::{
    check_cfact_to_euler, check_factorial_to_euler, check_final_pair, check_genocchi_central,
    check_half_shift, check_t_T_genocchi_convolution, check_triangle_recurrence, IdentityReport,
};
use cfkl::kl::{
    canonical_moments, combine, connect_ptilde_to_p, connect_xp_to_ptilde, family,
    gf_coefficient_check, hankel_determinant, kl_forward, make_family, structure_next,
    table1_text, Family, KLKind, Route,
};
use cfkl::numbers::{central_T, central_T_closed_form, genocchi, stirling2, views, Parity};
use cfkl::numeric::{
    verify_euler_integral, verify_genocchi_integral, verify_kl_monomial, verify_moments_k0,
    NumericCheck,
};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tau_pow(n: usize) -> Poly {
    Poly::monomial(Rational::one(), n)
}

fn c1_table() -> Outcome {
    let want = include_str!("data/table1.txt");
    let got = table1_text(9);
    for (i, (g, w)) in got.lines().zip(want.lines()).enumerate() {
        ensure(g == w, || format!("line {}: got {g:?}, want {w:?}", i + 1))?;
    }
    ensure(got.lines().count() == want.lines().count(), || "line count differs".into())
}

fn c2_transform() -> Outcome {
    for n in 0..=30 {
        for (kind, fam) in [(KLKind::S, Family::P), (KLKind::C, Family::PTilde)] {
            let image = kl_forward(kind, &family(fam, n));
            ensure(image == tau_pow(n), || format!("{kind:?} image of {fam:?}_{n} is {image}"))?;
        }
    }
    Ok(())
}

fn c3_routes() -> Outcome {
    for fam in [Family::P, Family::PTilde] {
        for n in 0..=30 {
            let explicit = make_family(fam, n, Route::Explicit);
            for route in [Route::Recurrence, Route::Operator] {
                ensure(make_family(fam, n, route) == explicit, || {
                    format!("{fam:?}_{n}: {route:?} differs from explicit")
                })?;
            }
        }
    }
    Ok(())
}

#[allow(non_snake_case)]
fn c4_duality() -> Outcome {
    const SIZE: usize = 25;
    let pairs: [(&str, fn(usize, usize) -> Rational, fn(usize, usize) -> Rational); 2] =
        [("even", views::t_e, views::T_e), ("odd", views::t_o, views::T_o)];
    for (name, t, T) in pairs {
        for n in 0..SIZE {
            for k in 0..SIZE {
                let tT: Rational = (0..SIZE).map(|j| t(n, j) * T(j, k)).sum();
                let Tt: Rational = (0..SIZE).map(|j| T(n, j) * t(j, k)).sum();
                let delta = if n == k { Rational::one() } else { Rational::zero() };
                ensure(tT == delta && Tt == delta, || format!("{name} parity fails at ({n},{k})"))?;
            }
        }
    }
    Ok(())
}

/// `Σ_μ C(n,μ) S(n−μ,ν) (−ν/2)^μ`.
fn binomial_stirling_sum(n: usize, v: usize) -> Rational {
    let shift = Rational::new(-(v as i64), 2);
    (0..=n - v)
        .map(|mu| binomial(n, mu) * stirling2(n - mu, v).unwrap() * shift.pow(mu as u32))
        .sum()
}

fn c5_closed_forms() -> Outcome {
    for n in 0..=24 {
        for v in 0..=n {
            let want = central_T(n, v).map_err(|e| e.to_string())?;
            let got = central_T_closed_form(n, v).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("closed form T({n},{v}) = {got}, want {want}"))?;
        }
    }
    for n in 0..=20 {
        for v in 0..=n {
            let want = central_T(n, v).map_err(|e| e.to_string())?;
            let got = binomial_stirling_sum(n, v);
            ensure(got == want, || format!("Stirling sum T({n},{v}) = {got}, want {want}"))?;
        }
    }
    Ok(())
}

fn c6_structure() -> Outcome {
    ensure(genocchi(2) == Rational::from_int(-1), || "G_2 != -1".into())?;
    ensure(genocchi(4) == Rational::one(), || "G_4 != 1".into())?;
    for fam in [Family::P, Family::PTilde] {
        for n in 0..=18 {
            ensure(&structure_next(fam, n) == family(fam, n + 2).as_ref(), || {
                format!("structure relation fails for {fam:?}_{}", n + 2)
            })?;
        }
    }
    Ok(())
}

fn c7_connections() -> Outcome {
    for n in 0..=15 {
        let xp = &Poly::x() * family(Family::P, n).as_ref();
        ensure(combine(Family::PTilde, &connect_xp_to_ptilde(n)) == xp, || {
            format!("x P_{n} in the Ptilde basis")
        })?;
        ensure(
            &combine(Family::P, &connect_ptilde_to_p(n)) == family(Family::PTilde, n).as_ref(),
            || format!("Ptilde_{n} in the P basis"),
        )?;
    }
    for n in 0..=12 {
        ensure(euler_at_y_plus_half(n) == half_shift_expansion(n), || {
            format!("half-shift expansion of E_{n}")
        })?;
    }
    for parity in [Parity::Even, Parity::Odd] {
        reports_ok(&[check_half_shift(parity, 12)])?;
    }
    Ok(())
}

fn reports_ok(reports: &[IdentityReport]) -> Outcome {
    for r in reports {
        ensure(r.passed(), || format!("{} failed: {:?}", r.identity_id, r.first_failure))?;
    }
    Ok(())
}

#[allow(non_snake_case)]
fn c8_identities() -> Outcome {
    const N: usize = 12;
    let mut reports = vec![check_genocchi_central(N), check_final_pair(N)];
    for parity in [Parity::Even, Parity::Odd] {
        reports.push(check_cfact_to_euler(parity, N));
        reports.push(check_half_shift(parity, N));
        reports.push(check_t_T_genocchi_convolution(parity, N));
    }
    for which in 1..=4 {
        reports.push(check_triangle_recurrence(which, N));
        reports.push(check_factorial_to_euler(which, N));
    }
    reports_ok(&reports)
}

fn c9_generating_function() -> Outcome {
    for fam in [Family::P, Family::PTilde] {
        ensure(gf_coefficient_check(fam, 10), || format!("{fam:?} coefficients"))?;
    }
    Ok(())
}

fn numeric_ok(checks: Vec<NumericCheck>, tol: f64) -> Outcome {
    for c in checks {
        ensure(c.passed && c.rel_error <= tol, || {
            format!("{}: {} vs {} (rel {:.2e})", c.name, c.computed, c.expected, c.rel_error)
        })?;
    }
    Ok(())
}

fn c10_numeric() -> Outcome {
    numeric_ok(verify_moments_k0(8, 1e-8), 1e-8)?;
    numeric_ok(verify_genocchi_integral(6, 1e-8), 1e-8)?;
    numeric_ok(verify_euler_integral(6, 1e-8), 1e-8)?;
    for n in 0..=4 {
        numeric_ok(verify_kl_monomial(n, &[0.25, 1.0, 2.5], 1e-6), 1e-6)?;
    }
    Ok(())
}

fn c11_hankel() -> Outcome {
    for fam in [Family::P, Family::PTilde] {
        let m = canonical_moments(fam, 13);
        for order in 0..=6 {
            let d = hankel_determinant(&m, order).map_err(|e| e.to_string())?;
            ensure(d.is_positive(), || format!("{fam:?} Hankel order {order} = {d}"))?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s: u64| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "table1 reproduction", budget: secs(1), run: c1_table },
        Criterion { id: 2, name: "transform images are tau^n", budget: secs(5), run: c2_transform },
        Criterion { id: 3, name: "construction routes agree", budget: None, run: c3_routes },
        Criterion { id: 4, name: "triangle duality", budget: None, run: c4_duality },
        Criterion { id: 5, name: "closed form and Stirling sum", budget: None, run: c5_closed_forms },
        Criterion { id: 6, name: "structure relations", budget: None, run: c6_structure },
        Criterion { id: 7, name: "connection coefficients", budget: None, run: c7_connections },
        Criterion { id: 8, name: "identity suite", budget: secs(30), run: c8_identities },
        Criterion { id: 9, name: "generating function", budget: None, run: c9_generating_function },
        Criterion { id: 10, name: "numeric quadrature", budget: secs(60), run: c10_numeric },
        Criterion { id: 11, name: "Hankel positivity", budget: None, run: c11_hankel },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(b)) = (&outcome, c.budget) {
            if elapsed > b {
                outcome = Err(format!("took {elapsed:.2?}, budget {b:.0?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {} ({elapsed:.2?})", c.id, c.name),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {} ({elapsed:.2?}): {msg}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
