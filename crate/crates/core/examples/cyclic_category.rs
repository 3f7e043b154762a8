//! Arrows of the cyclic category, the strict duality, and the cyclic nerve
//! of a finite set.

use bypass_thh::cyclic::{cyclic_nerve_triv, LambdaArrow};
use bypass_thh::graphcat::VertexSet;

fn main() {
    for m in 0..=2 {
        for n in 0..=2 {
            println!("|Λ(T_{m}, T_{n})| = {}", LambdaArrow::hom(m, n).len());
        }
    }
    let t = LambdaArrow::rotation(2);
    let d = LambdaArrow::coface(2, 1);
    println!("rotation {t}, coface {d}");
    println!("dual of the coface: {}", d.dual());
    println!("rotation ∘ coface = {}", t.compose(&d).unwrap());

    let nerve = cyclic_nerve_triv(&VertexSet::alphabetic(2), 3);
    println!("cyclic nerve of {{A, B}}: level sizes {:?}", nerve.sizes());
    nerve.check_identities().unwrap();
    let ops = nerve.operators(2).unwrap();
    println!("t_2 on level 2: {:?}", ops.rotation);
    println!("π0 classes: {}", nerve.set_colimit().unwrap().len());
}
