//! The descent profile of an element and the flag-major generating
//! function of a whole group.
//!
//!     cargo run --example descent_statistics

use projref::group::{Element, GroupParams};
use projref::stats::{
    coinvariant_hilbert_product, fmaj_generating_poly, stat_profile,
};

fn main() {
    let prm = GroupParams::new(6, 2, 3, 8).unwrap();
    let g = Element::parse_text(prm, "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2").unwrap();

    // The profile lists homogeneous descents, their suffix counts h,
    // the color staircase k, and the partition lambda = r*h + k whose
    // size is the flag-major index.
    let s = stat_profile(&g);
    println!("element = {}", g.to_text());
    println!("hdes    = {:?}", s.hdes);
    println!("h       = {:?}", s.h);
    println!("k       = {:?}", s.k);
    println!("lambda  = {:?}", s.lambda);
    println!("fmaj    = {}", s.fmaj);

    // Summing t^fmaj over the dual group reproduces the Hilbert series
    // of the coinvariant algebra, a product of t-brackets restricted to
    // exponents divisible by q.
    for (r, p, q, n) in [(2, 1, 1, 2), (2, 2, 1, 2), (2, 1, 2, 2), (3, 1, 3, 2)] {
        let prm = GroupParams::new(r, p, q, n).unwrap();
        let distribution = fmaj_generating_poly(prm.dual(), 100_000).unwrap();
        let product = coinvariant_hilbert_product(prm);
        println!(
            "{prm}: sum of t^fmaj over the dual = {distribution}  (product form: {product})"
        );
        assert_eq!(distribution, product);
    }
}
