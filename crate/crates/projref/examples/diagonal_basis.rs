//! Exponent matrices indexing the diagonal module basis, their
//! decoding into group tuples, and the Hilbert-series factorization.
//!
//!     cargo run --example diagonal_basis

use projref::diagonal::{
    basis_exponents_by_entry, diagonal_invariant_hilbert, matrix_to_tuple,
    module_basis_hilbert, tensor_invariant_hilbert, tuple_to_matrix,
};
use projref::group::GroupParams;

fn main() {
    let prm = GroupParams::new(2, 1, 2, 2).unwrap();

    // The basis matrices for two alphabets with entries up to 2: each
    // decodes to a pair of dual-group elements with product 1 carrying
    // compatible exponent partitions.
    let matrices = basis_exponents_by_entry(prm, 2, 2);
    println!("{prm}: {} basis matrices with entries <= 2", matrices.len());
    for m in matrices.iter().take(6) {
        let tuple = matrix_to_tuple(m, prm).unwrap();
        let labels: Vec<String> = tuple
            .iter()
            .map(|pair| format!("({} | {})", pair.g.to_text(), pair.lambda))
            .collect();
        println!("  {m}  ->  {}", labels.join("  "));
        assert_eq!(tuple_to_matrix(&tuple).unwrap(), *m);
    }

    // The full diagonal-invariant Hilbert series factors through the
    // module basis times the tensor invariants, coefficient by
    // coefficient.
    let bound = 8;
    let diagonal = diagonal_invariant_hilbert(prm, 2, bound).unwrap();
    let module = module_basis_hilbert(prm, 2, bound, 100_000).unwrap();
    let tensor = tensor_invariant_hilbert(prm, 2, bound).unwrap();
    let product = module.mul_truncated(&tensor, bound);
    assert_eq!(diagonal.first_difference(&product), None);
    println!(
        "diagonal invariants ({} terms) = module basis ({}) x tensor invariants ({}) up to degree {bound}",
        diagonal.num_terms(),
        module.num_terms(),
        tensor.num_terms()
    );

    // Collapsing multipartition degrees to total degree gives ordinary
    // power series; print the first few coefficients of each side.
    println!("collapsed diagonal side: {}", diagonal.collapse_total_degree());
    println!("collapsed product side:  {}", product.collapse_total_degree());
}
