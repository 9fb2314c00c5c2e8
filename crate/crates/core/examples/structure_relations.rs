// Structure relations and connection coefficients between P and P̃.

use cfkl::exact::Poly;
use cfkl::kl::{
    combine, connect_ptilde_to_p, connect_xp_to_ptilde, family, make_family, structure_next,
    x_times_family, Family, Route,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=4 {
        assert_eq!(structure_next(Family::P, n), make_family(Family::P, n + 2, Route::Explicit));
        assert_eq!(
            structure_next(Family::PTilde, n),
            make_family(Family::PTilde, n + 2, Route::Explicit)
        );
    }
    println!("structure relations reproduce P_2..P_6 and Ptilde_2..Ptilde_6");

    let c: Vec<String> = x_times_family(Family::P, 3).iter().map(|r| r.to_string()).collect();
    println!("x P_3 in P_0..P_4: [{}]", c.join(", "));

    let n = 2;
    let xp = &Poly::x() * family(Family::P, n).as_ref();
    assert_eq!(combine(Family::PTilde, &connect_xp_to_ptilde(n)), xp);
    assert_eq!(&combine(Family::P, &connect_ptilde_to_p(n)), family(Family::PTilde, n).as_ref());
    let c: Vec<String> = connect_ptilde_to_p(n).iter().map(|r| r.to_string()).collect();
    println!("Ptilde_{n} in P_0..P_{n}: [{}]", c.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
