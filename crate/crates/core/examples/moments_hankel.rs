// Dual-sequence moments and Hankel determinants of the canonical forms.

use cfkl::kl::{canonical_moments, dual_moment, hankel_determinant, Family};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for fam in [Family::P, Family::PTilde] {
        let row: Vec<String> = (0..5)
            .map(|k| dual_moment(fam, 1, k + 1).map(|r| r.to_string()))
            .collect::<Result<_, _>>()?;
        println!("{fam:?}: (u_1)_1..5 = [{}]", row.join(", "));

        let m = canonical_moments(fam, 13);
        for order in 0..=6 {
            let d = hankel_determinant(&m, order)?;
            assert!(d.is_positive());
            println!("{fam:?}: Hankel determinant of order {order} = {d}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
