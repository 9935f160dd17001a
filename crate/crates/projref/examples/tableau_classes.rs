//! Multishapes, shift classes, standard fillings, and the dimension
//! count that ties them to the group order.
//!
//!     cargo run --example tableau_classes

use projref::group::GroupParams;
use projref::tableaux::{
    class_tableau_count, enumerate_fer_classes, enumerate_tableaux, tableau_stats, MultiTableau,
};

fn main() {
    // Shape classes for G(3,1,3,3): 3-tuples of partitions with 3 cells
    // total, taken up to cyclic rotation of the components.
    let prm = GroupParams::new(3, 1, 3, 3).unwrap();
    let classes = enumerate_fer_classes(prm.r, prm.p, prm.q, prm.n).unwrap();
    println!("{prm}: {} shape classes", classes.len());

    let mut total: u128 = 0;
    for class in &classes {
        let count = class_tableau_count(class);
        println!(
            "  rep {}  stabilizer {}  tableau classes {}",
            class.rep, class.stabilizer, count
        );
        total += class.stabilizer as u128 * count * count;
    }
    println!("sum of stabilizer * count^2 = {total} = group order {}", prm.order());
    assert_eq!(total, prm.order());

    // Standard fillings of one shape, with their descent statistics
    // computed from component indices and row depths.
    let shape = classes
        .iter()
        .map(|c| &c.rep)
        .find(|s| s.size() == 3 && s.components.iter().filter(|p| !p.parts().is_empty()).count() == 2)
        .unwrap();
    println!("fillings of {shape}:");
    for t in enumerate_tableaux(shape) {
        let s = tableau_stats(&t, prm.q).unwrap();
        println!("  {t}  fmaj {}", s.fmaj);
    }

    // The nine-cell worked filling and its profile.
    let t = MultiTableau {
        components: vec![
            vec![vec![1, 4], vec![5]],
            vec![vec![2, 8], vec![3, 9]],
            vec![vec![6, 7]],
        ],
    };
    let s = tableau_stats(&t, 3).unwrap();
    println!("worked filling {t}");
    println!("  hdes {:?}  h {:?}  k {:?}  fmaj {}", s.hdes, s.h, s.k, s.fmaj);
}
