// Taylor coefficients of exp(2√x sin(u/2)) against both families.

use cfkl::exact::series_exp_sin;
use cfkl::kl::{gf_coefficient_check, Family};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = series_exp_sin(7);
    for k in 1..=7 {
        println!("{k}! [u^{k}] = {}", s.derivative_at_zero(k).display_var("s"));
    }
    for fam in [Family::P, Family::PTilde] {
        let ok = gf_coefficient_check(fam, 10);
        println!("{fam:?} coefficients match through n = 10: {ok}");
        assert!(ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
