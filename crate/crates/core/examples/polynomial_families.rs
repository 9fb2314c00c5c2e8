// Constructing P, P̃ and P̂ by all three routes and expanding monomials in them.

use cfkl::exact::Poly;
use cfkl::kl::{combine, expand_monomial, make_family, p_hat, table_style, Family, Route};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=4 {
        let p = make_family(Family::P, n, Route::Explicit);
        assert_eq!(p, make_family(Family::P, n, Route::Recurrence));
        assert_eq!(p, make_family(Family::P, n, Route::Operator));
        let pt = make_family(Family::PTilde, n, Route::Operator);
        println!("P_{n} = {}   Ptilde_{n} = {}   Phat_{n} = {}", table_style(&p), table_style(&pt), table_style(&p_hat(n)));
    }

    let c = expand_monomial(Family::P, 3);
    let shown: Vec<String> = c.iter().map(|r| r.to_string()).collect();
    println!("x^3 in P_0..P_3: [{}]", shown.join(", "));
    assert_eq!(combine(Family::P, &c), Poly::from_ints(&[0, 0, 0, 1]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
