//! The acceptance gate: twelve exact criteria, each one test, each
//! printing a single pass line.  Everything is checked with tolerance
//! zero — a single wrong coefficient anywhere fails the run.

use std::time::{Duration, Instant};

use projref::group::{Element, GroupParams};
use projref::report::{run_suite, VerifyConfig, VerifyReport};
use projref::stats::stat_profile;
use projref::tableaux::{tableau_stats, MultiTableau};

fn passing_suite(name: &str) -> VerifyReport {
    let report = run_suite(name, &VerifyConfig::default()).expect("known suite");
    let failures: Vec<String> = report
        .failures()
        .iter()
        .map(|c| format!("{} [{}]: {}", c.name, c.params, c.witness.as_deref().unwrap_or("?")))
        .collect();
    assert!(failures.is_empty(), "suite {name} failed:\n{}", failures.join("\n"));
    assert!(!report.checks.is_empty(), "suite {name} ran no checks");
    report
}

/// Wall time of the fastest of a few repetitions, after one warm-up.
fn warmed<T>(mut body: impl FnMut() -> T) -> (T, Duration) {
    let mut result = body();
    let mut best = Duration::MAX;
    for _ in 0..10 {
        let start = Instant::now();
        result = body();
        best = best.min(start.elapsed());
    }
    (result, best)
}

#[test]
fn criterion_01_element_profile() {
    let prm = GroupParams::new(6, 2, 3, 8).unwrap();
    let g = Element::parse_text(prm, "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2").unwrap();
    let (s, elapsed) = warmed(|| stat_profile(&g));
    assert_eq!(s.hdes, vec![2, 5]);
    assert_eq!(s.h, vec![2, 2, 1, 1, 1, 0, 0, 0]);
    assert_eq!(s.k, vec![18, 13, 13, 9, 5, 5, 1, 0]);
    assert_eq!(s.lambda, vec![30, 25, 19, 15, 11, 5, 1, 0]);
    assert_eq!(s.fmaj, 106);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 01: pass — eight-letter element profile, {elapsed:?} warmed");
}

#[test]
fn criterion_02_tableau_profile() {
    let t = MultiTableau {
        components: vec![
            vec![vec![1, 4], vec![5]],
            vec![vec![2, 8], vec![3, 9]],
            vec![vec![6, 7]],
        ],
    };
    let (s, elapsed) = warmed(|| tableau_stats(&t, 3).unwrap());
    assert_eq!(s.hdes, vec![2, 4, 8]);
    assert_eq!(s.h, vec![3, 3, 2, 2, 1, 1, 1, 1, 0]);
    assert_eq!(s.k, vec![5, 3, 3, 2, 2, 1, 1, 0, 0]);
    assert_eq!(s.fmaj, 59);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 02: pass — nine-cell tableau profile, {elapsed:?} warmed");
}

#[test]
fn criterion_03_descent_profiles_agree() {
    let start = Instant::now();
    let report = passing_suite("oldnew");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 03: pass — {} wreath groups, both descent profiles agree, {elapsed:?}",
        report.checks.len()
    );
}

#[test]
fn criterion_04_coinvariant_series() {
    let report = passing_suite("coinvariant");
    println!(
        "criterion 04: pass — fmaj distribution equals the coinvariant product on {} checks",
        report.checks.len()
    );
}

#[test]
fn criterion_05_projective_correspondence() {
    let report = passing_suite("projrs");
    println!(
        "criterion 05: pass — correspondence bijective with stabilizer fibers on {} groups",
        report.checks.len()
    );
}

#[test]
fn criterion_06_basis_round_trip() {
    let report = passing_suite("bije");
    println!(
        "criterion 06: pass — basis encoding round-trips and counts match on {} checks",
        report.checks.len()
    );
}

#[test]
fn criterion_07_column_criterion() {
    let report = passing_suite("colu");
    println!(
        "criterion 07: pass — symbolic averages match the column criterion on {} checks",
        report.checks.len()
    );
}

#[test]
fn criterion_08_diagonal_factorization() {
    let start = Instant::now();
    let report = passing_suite("uou");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 08: pass — diagonal invariants factor on {} groups, {elapsed:?}",
        report.checks.len()
    );
}

#[test]
fn criterion_09_character_engine() {
    let report = passing_suite("characters");
    println!(
        "criterion 09: pass — orthogonality, degrees, and the classical oracle on {} checks",
        report.checks.len()
    );
}

#[test]
fn criterion_10_product_one_series() {
    let report = passing_suite("maincomb");
    println!(
        "criterion 10: pass — product-one series equals its character expansion on {} checks",
        report.checks.len()
    );
}

#[test]
fn criterion_11_galois_twist() {
    let start = Instant::now();
    let report = passing_suite("galois");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 11: pass — twisted series agree for every unit on {} checks, {elapsed:?}",
        report.checks.len()
    );
}

#[test]
fn criterion_12_group_theory_layer() {
    let report = passing_suite("group-theory");
    println!(
        "criterion 12: pass — orders, scalars, and the duality criterion on {} checks",
        report.checks.len()
    );
}
