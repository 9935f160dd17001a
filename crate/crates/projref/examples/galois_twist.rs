//! Field automorphisms acting on elements, shapes, and the two-variable
//! descent series whose equality they preserve.
//!
//!     cargo run --example galois_twist

use projref::galois::{gsigma_check, sigma_on_shape, GaloisLabel};
use projref::group::{Element, GroupParams};
use projref::tableaux::enumerate_fer_classes;

fn main() {
    // The units modulo r index the twists; d = r - 1 is complex
    // conjugation (color negation).
    let prm = GroupParams::new(5, 1, 1, 2).unwrap();
    println!("twists of {prm}: d in {:?}", GaloisLabel::all(5).iter().map(|l| l.d).collect::<Vec<_>>());

    let g = Element::parse_text(prm, "2 1; 1 3").unwrap();
    for label in GaloisLabel::all(5) {
        println!("  d = {}: {} -> {}", label.d, g.to_text(), label.act_on_element(&g).unwrap().to_text());
    }

    // On shape classes the twist permutes components by multiplication
    // of the index; stabilizers are preserved.
    let classes = enumerate_fer_classes(5, 1, 1, 2).unwrap();
    let mu = classes.iter().find(|c| c.rep.components[1].parts() == [1]).unwrap();
    for d in [1usize, 2, 3, 4] {
        println!("  sigma_{d} of {} = {}", mu.rep, sigma_on_shape(mu, d).unwrap().rep);
    }

    // The twisted two-variable series: summing over the dual group with
    // one alphabet twisted equals the fake-degree expansion over shape
    // classes.  Checked exactly for every unit.
    let prm = GroupParams::new(4, 1, 4, 2).unwrap();
    for label in GaloisLabel::all(prm.r) {
        let report = gsigma_check(prm, label.d, 40, 100_000).unwrap();
        println!(
            "{prm}, d = {}: series agree? {}  (collapsed: {})",
            label.d,
            report.holds(),
            report.combinatorial.collapse_total_degree()
        );
        assert!(report.holds());
    }
}
