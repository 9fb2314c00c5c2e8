// The operator 𝒜 = x d/dx x d/dx − x and its behaviour under the transforms.

use cfkl::exact::{apply_a_pow, Offset, OffsetPoly, Poly};
use cfkl::kl::{lemma_kl_a_power, operator_power_identity, KLKind, OperatorParity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for m in 0..=3 {
        let p = apply_a_pow(&OffsetPoly::power(Offset::One, 0), m);
        println!("A^{m} x = x * ({})", p.body);
    }
    for (m, k) in [(2, 1), (3, 2), (4, 0)] {
        assert!(operator_power_identity(m, k, OperatorParity::EvenP));
        assert!(operator_power_identity(m, k, OperatorParity::OddPtilde));
    }
    let b = Poly::from_ints(&[-1, 1]);
    assert!(lemma_kl_a_power(KLKind::S, 2, 1, &b));
    assert!(lemma_kl_a_power(KLKind::C, 2, 1, &b));
    println!("operator identities hold for the sampled (m, k)");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
