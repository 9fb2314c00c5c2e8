// Euler polynomials and their values at y = i√τ and y + ½.

use cfkl::euler::{euler_at_y, euler_at_y_plus_half, euler_poly, half_shift_expansion};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 0..=5 {
        println!("E_{n}(x) = {}", euler_poly(n).poly);
    }
    println!("E_4(y) = {}", euler_at_y(4));
    for n in 1..=6 {
        let direct = euler_at_y_plus_half(n);
        assert_eq!(direct, half_shift_expansion(n));
        println!("E_{n}(y + 1/2) = {direct}");
    }
    println!("{}", euler_poly(3).to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
