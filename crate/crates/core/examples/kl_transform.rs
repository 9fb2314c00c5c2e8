// The two KL transforms as automorphisms of the polynomial space.

use cfkl::exact::Poly;
use cfkl::kl::{kl_forward, kl_inverse, KLKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = Poly::from_ints(&[1, -5, 1]);
    for kind in [KLKind::S, KLKind::C] {
        let image = kl_forward(kind, &p);
        println!("KL_{kind:?}[{p}] = {}", image.display_var("tau"));
        assert_eq!(kl_inverse(kind, &image), p);
    }

    let tau3 = Poly::from_ints(&[0, 0, 0, 1]);
    println!("KL_s^-1[tau^3] = {}", kl_inverse(KLKind::S, &tau3));
    println!("KL_c^-1[tau^3] = {}", kl_inverse(KLKind::C, &tau3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
