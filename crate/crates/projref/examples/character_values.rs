//! Exact character values of wreath products, coarse tensor
//! coefficients of the quotient groups, and fake-degree polynomials.
//!
//!     cargo run --example character_values

use projref::characters::{
    coarse_kronecker, cycle_type_counts, fake_degree_poly, wreath_character,
};
use projref::group::GroupParams;
use projref::tableaux::{enumerate_fer, enumerate_fer_classes};

fn main() {
    // The character table of the order-8 group of signed permutations
    // on two letters, computed by the cycle-peeling recursion.  Values
    // live in the ring of integers of a cyclotomic field and print as
    // coefficient vectors; here r = 2, so they are plain integers.
    let prm = GroupParams::new(2, 1, 1, 2).unwrap();
    let shapes = enumerate_fer(prm.r, prm.p, prm.n);
    let types = cycle_type_counts(prm, 10_000).unwrap();
    print!("{:14}", "shape\\class");
    for (ty, size) in &types {
        print!("  {ty} (x{size})");
    }
    println!();
    for shape in &shapes {
        print!("{:14}", shape.to_string());
        for (ty, _) in &types {
            let value = wreath_character(shape, ty).unwrap();
            print!("  {:8}", value.as_int().unwrap());
        }
        println!();
    }

    // Coarse tensor coefficients: for two factors, the coefficient
    // detects the conjugate class with multiplicity the shift
    // stabilizer; a symmetric-group triple gives the classical value.
    let s3 = GroupParams::new(1, 1, 1, 3).unwrap();
    let classes = enumerate_fer_classes(1, 1, 1, 3).unwrap();
    for a in &classes {
        for b in &classes {
            let c = coarse_kronecker(s3, &[a.clone(), b.clone()], 10_000).unwrap();
            print!("  g({}, {}) = {c}", a.rep, b.rep);
        }
        println!();
    }
    let hook = classes
        .iter()
        .find(|c| c.rep.components[0].parts() == [2, 1])
        .unwrap();
    let triple = coarse_kronecker(s3, &[hook.clone(), hook.clone(), hook.clone()], 10_000).unwrap();
    println!("triple product coefficient of (2,1): {triple}");

    // Fake degrees: the generating function of the descent statistic
    // over the standard fillings of one shape class.
    let b2 = enumerate_fer_classes(2, 1, 1, 2).unwrap();
    for class in &b2 {
        let series = fake_degree_poly(class).unwrap();
        println!("fake degree of {}: {}", class.rep, series.collapse_total_degree());
    }
}
