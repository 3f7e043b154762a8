//! Hochschild homology of small algebras and linear categories through the
//! cyclic bar construction.

use bypass_thh::suite::algebra_zoo;
use bypass_thh::thh::{commutator_quotient_dim, cyclic_bar, LinearEnrichedCategory};

fn main() {
    for (name, c) in algebra_zoo() {
        let bar = cyclic_bar(&c, 4).unwrap();
        println!(
            "{name:>14}: HH_0..3 = {:?}, chain dims {:?}, normalized {:?}, A/[A,A] = {}",
            bar.betti(),
            bar.dims(),
            bar.normalized_dims(),
            commutator_quotient_dim(&c)
        );
    }
    let json = LinearEnrichedCategory::dual_numbers().to_json();
    println!("\ndual numbers as JSON: {json}");
}
