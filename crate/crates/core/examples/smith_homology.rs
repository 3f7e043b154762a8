//! Smith normal form and integer homology of a small complex with torsion.

use bypass_thh::homology::{smith_normal_form, ChainComplex, IntMatrix, SparseMatrix};
use num_bigint::BigInt;

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    snf.verify(&m).unwrap();
    println!("invariant factors of {m:?}: {:?}", snf.invariant_factors());

    // the real projective plane: one cell in each degree, ∂₂ = 2, ∂₁ = 0
    let d1 = SparseMatrix::<BigInt>::zeros(1, 1);
    let d2 = SparseMatrix::from_triplets(1, 1, [(0, 0, BigInt::from(2))]);
    let rp2 = ChainComplex::new(vec![1, 1, 1, 0], vec![d1, d2, SparseMatrix::zeros(1, 0)]).unwrap();
    for h in rp2.homology_all() {
        println!("{h}");
    }
}
