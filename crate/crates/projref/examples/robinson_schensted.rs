//! The colored insertion correspondence and its projective version:
//! pairs of same-shape fillings up to a simultaneous component shift.
//!
//!     cargo run --example robinson_schensted

use std::collections::BTreeMap;

use projref::group::{element_vec, Element, GroupParams};
use projref::schensted::{projective_rs, projective_rs_inverse};
use projref::tableaux::ShapeClass;

fn main() {
    let prm = GroupParams::new(3, 1, 3, 3).unwrap();
    let g = Element::parse_text(prm, "2 1 3; 1 1 2").unwrap();
    let pair = projective_rs(&g).unwrap();
    println!("g = {}", g.to_text());
    println!("insertion  {}", pair.insertion);
    println!("recording  {}", pair.recording);
    println!("shape      {}", pair.insertion.shape());

    // Any representative of the pair orbit inverts back to g.
    let back = projective_rs_inverse(&pair.insertion, &pair.recording, prm).unwrap();
    assert_eq!(back, g);
    println!("round trip ok");

    // Over the whole group, the fiber over a pair of filling classes
    // has exactly the size of the shape's shift stabilizer.
    let mut fibers: BTreeMap<(String, String), usize> = BTreeMap::new();
    for h in element_vec(prm, 10_000).unwrap() {
        let p = projective_rs(&h).unwrap();
        let key = (
            p.insertion.class_rep(prm.q).unwrap().to_string(),
            p.recording.class_rep(prm.q).unwrap().to_string(),
        );
        *fibers.entry(key).or_insert(0) += 1;
    }
    println!("{} class pairs cover all {} elements", fibers.len(), prm.order());
    for ((ins, _), size) in fibers.iter().take(4) {
        println!("  fiber over {ins} ... has size {size}");
    }

    // The stabilizer sizes are visible on the shape classes themselves.
    for class in projref::tableaux::enumerate_fer_classes(prm.r, prm.p, prm.q, prm.n).unwrap() {
        let again = ShapeClass::of(&class.rep, prm.q).unwrap();
        assert_eq!(class.stabilizer, again.stabilizer);
    }
}
