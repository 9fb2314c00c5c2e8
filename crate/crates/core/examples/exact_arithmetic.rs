// Rationals, polynomials, the ring Q[τ][y]/(y²+τ) and the exp-sin series.

use cfkl::exact::{poly_eval_ext, series_exp_sin, ExtElem, Poly, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r: Rational = "6/8".parse()?;
    println!("6/8 reduces to {r}");

    let p = Poly::from_ints(&[4, 5, 1]);
    let q = &Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[4, 1]);
    assert_eq!(p, q);
    println!("(1+x)(4+x) = {}", p.display_var("tau"));
    println!("as JSON: {}", serde_json::to_string(&p)?);

    let e2 = Poly::from_ints(&[0, -1, 1]);
    let at_y = poly_eval_ext(&e2, &ExtElem::y());
    println!("x^2 - x at y: {at_y}");

    let s = series_exp_sin(5);
    for k in 0..=5 {
        println!("{k}! [u^{k}] exp(2s sin(u/2)) = {}", s.derivative_at_zero(k).display_var("s"));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
