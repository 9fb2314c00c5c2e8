// Bernoulli, Genocchi and Euler numbers and the central factorial triangles.

use cfkl::numbers::{
    central_T, central_T_closed_form, central_t, stirling2, NumberSeq, SeqKind, Triangle,
    TriangleKind,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for kind in [SeqKind::Bernoulli, SeqKind::Genocchi, SeqKind::EulerNumber] {
        let s = NumberSeq::new(kind, 10);
        println!("{}", serde_json::to_string(&s)?);
    }

    println!("t(4,2) = {}", central_t(4, 2)?);
    println!("T(6,4) = {} (closed form {})", central_T(6, 4)?, central_T_closed_form(6, 4)?);
    println!("S(4,2) = {}", stirling2(4, 2)?);

    print!("{}", Triangle::build(TriangleKind::CentralSecond, 6).to_csv());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
