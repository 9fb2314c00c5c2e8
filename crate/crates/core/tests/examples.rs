//! Runs every example so they stay in sync with the library.

#[allow(dead_code)]
mod bessel_quadrature {
    include!("../examples/bessel_quadrature.rs");
}

#[allow(dead_code)]
mod euler_polynomials {
    include!("../examples/euler_polynomials.rs");
}

#[allow(dead_code)]
mod exact_arithmetic {
    include!("../examples/exact_arithmetic.rs");
}

#[allow(dead_code)]
mod generating_function {
    include!("../examples/generating_function.rs");
}

#[allow(dead_code)]
mod identity_suite {
    include!("../examples/identity_suite.rs");
}

#[allow(dead_code)]
mod kl_transform {
    include!("../examples/kl_transform.rs");
}

#[allow(dead_code)]
mod moments_hankel {
    include!("../examples/moments_hankel.rs");
}

#[allow(dead_code)]
mod number_tables {
    include!("../examples/number_tables.rs");
}

#[allow(dead_code)]
mod operator_powers {
    include!("../examples/operator_powers.rs");
}

#[allow(dead_code)]
mod polynomial_families {
    include!("../examples/polynomial_families.rs");
}

#[allow(dead_code)]
mod structure_relations {
    include!("../examples/structure_relations.rs");
}

#[allow(dead_code)]
mod table1 {
    include!("../examples/table1.rs");
}

#[test]
fn examples_run() {
    bessel_quadrature::run_example().unwrap();
    euler_polynomials::run_example().unwrap();
    exact_arithmetic::run_example().unwrap();
    generating_function::run_example().unwrap();
    identity_suite::run_example().unwrap();
    kl_transform::run_example().unwrap();
    moments_hankel::run_example().unwrap();
    number_tables::run_example().unwrap();
    operator_powers::run_example().unwrap();
    polynomial_families::run_example().unwrap();
    structure_relations::run_example().unwrap();
    table1::run_example().unwrap();
}
