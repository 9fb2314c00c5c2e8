// Prints P_0..P_9 and the integer rescaling Phat_0..Phat_9.

use cfkl::kl::table1_text;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", table1_text(9));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
