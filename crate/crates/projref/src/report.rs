//! Named verification suites.
//!
//! Each suite re-derives one family of identities by exhaustive
//! enumeration over a grid of small groups and reports one structured
//! record per check.  A failing record carries its first counterexample
//! in the `witness` field, so a report is useful both as a green light
//! and as a debugging aid.
//!
//! Everything in a report is deterministic except the `ms` timing field.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    coarse_kronecker, cycle_type_counts, maincomb_check, CharacterEngine, CycleType,
};
use crate::cyclotomic::Cyclotomic;
use crate::diagonal::{
    count_product_one_tuples, diagonal_invariant_hilbert, for_each_basis_exponent_by_entry,
    group_average, matrix_to_tuple, module_basis_hilbert, tensor_invariant_hilbert,
    tuple_to_matrix,
};
use crate::error::{Error, Result};
use crate::galois::{gsigma_check, GaloisLabel};
use crate::group::{element_vec, elements, Element, GroupParams};
use crate::partitions::{partitions_of, Partition};
use crate::schensted::{projective_rs, projective_rs_inverse};
use crate::stats::{
    classical_stats, coinvariant_hilbert_product, fmaj_generating_poly, stat_profile,
};
use crate::tableaux::{
    class_tableau_count, enumerate_fer, enumerate_fer_classes, tableau_count, tableau_stats,
    MultiTableau, ShapeClass,
};
use crate::DEFAULT_ENUM_CAP;

/// The suites `verify` knows about, in their default running order.
pub const SUITES: &[&str] = &[
    "worked-examples",
    "oldnew",
    "coinvariant",
    "projrs",
    "bije",
    "colu",
    "uou",
    "characters",
    "maincomb",
    "galois",
    "group-theory",
];

/// Limits shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Optional ceiling on the orders of the groups visited.  Every
    /// suite has its own built-in ceiling; this value can only lower it.
    pub max_order: Option<u128>,
    /// Guard passed to every element enumeration.
    pub cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_order: None, cap: DEFAULT_ENUM_CAP }
    }
}

impl VerifyConfig {
    fn ceiling(&self, suite_default: u128) -> u128 {
        match self.max_order {
            Some(m) => m.min(suite_default),
            None => suite_default,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified identity.  The name says what was checked and `params`
/// pins the parameter tuple it ran on.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
    pub ms: u128,
}

/// A merged, name-sorted collection of check records.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub version: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

type CheckResult = std::result::Result<(), String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(label: &str, got: &T, want: &T) -> CheckResult {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn run_check(
    name: String,
    params: String,
    body: impl FnOnce() -> CheckResult,
) -> CheckRecord {
    let start = Instant::now();
    let outcome = body();
    CheckRecord {
        name,
        params,
        status: if outcome.is_ok() { CheckStatus::Pass } else { CheckStatus::Fail },
        witness: outcome.err(),
        ms: start.elapsed().as_millis(),
    }
}

fn divisors(r: usize) -> Vec<usize> {
    (1..=r).filter(|d| r % d == 0).collect()
}

/// Every valid parameter tuple with colors up to `r_max`, rank drawn
/// from `ranks`, and order at most `order_cap`.
fn group_grid(r_max: usize, ranks: &[usize], order_cap: u128) -> Vec<GroupParams> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for &n in ranks {
            for &p in &divisors(r) {
                for &q in &divisors(r) {
                    if let Ok(prm) = GroupParams::new(r, p, q, n) {
                        if prm.order() <= order_cap {
                            out.push(prm);
                        }
                    }
                }
            }
        }
    }
    out
}

fn max_fmaj(prm: GroupParams, cap: usize) -> Result<usize> {
    Ok(elements(prm, cap)?.map(|g| stat_profile(&g).fmaj).max().unwrap_or(0))
}

// ---------------------------------------------------------------------
// worked-examples: the two hand-computed profiles.

fn suite_worked_examples(_cfg: &VerifyConfig) -> Vec<CheckRecord> {
    vec![
        run_check("worked-examples/element-profile".into(), "6,2,3,8".into(), || {
            let prm = GroupParams::new(6, 2, 3, 8).map_err(fail)?;
            let g = Element::parse_text(prm, "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2").map_err(fail)?;
            expect_eq("canonical colors", &g.colors().to_vec(), &vec![0, 1, 1, 3, 5, 5, 1, 0])?;
            let s = stat_profile(&g);
            expect_eq("hdes", &s.hdes, &vec![2, 5])?;
            expect_eq("h", &s.h, &vec![2, 2, 1, 1, 1, 0, 0, 0])?;
            expect_eq("k", &s.k, &vec![18, 13, 13, 9, 5, 5, 1, 0])?;
            expect_eq("lambda", &s.lambda, &vec![30, 25, 19, 15, 11, 5, 1, 0])?;
            expect_eq("fmaj", &s.fmaj, &106)
        }),
        run_check("worked-examples/tableau-profile".into(), "3,1,3,9".into(), || {
            let t = MultiTableau {
                components: vec![
                    vec![vec![1, 4], vec![5]],
                    vec![vec![2, 8], vec![3, 9]],
                    vec![vec![6, 7]],
                ],
            };
            let s = tableau_stats(&t, 3).map_err(fail)?;
            expect_eq("hdes", &s.hdes, &vec![2, 4, 8])?;
            expect_eq("h", &s.h, &vec![3, 3, 2, 2, 1, 1, 1, 1, 0])?;
            expect_eq("k", &s.k, &vec![5, 3, 3, 2, 2, 1, 1, 0, 0])?;
            expect_eq("fmaj", &s.fmaj, &59)
        }),
    ]
}

// ---------------------------------------------------------------------
// oldnew: the two descent profiles agree on full wreath groups.

fn suite_oldnew(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let ceiling = cfg.ceiling(u128::MAX);
    let cap = cfg.cap;
    let groups: Vec<GroupParams> = (1..=4usize)
        .flat_map(|r| (1..=4usize).map(move |n| GroupParams::new(r, 1, 1, n).unwrap()))
        .filter(|prm| prm.order() <= ceiling)
        .collect();
    groups
        .into_par_iter()
        .map(|prm| {
            run_check(format!("oldnew/{prm}"), prm.to_flag(), move || oldnew_body(prm, cap))
        })
        .collect()
}

fn oldnew_body(prm: GroupParams, cap: usize) -> CheckResult {
    for g in elements(prm, cap).map_err(fail)? {
        let s = stat_profile(&g);
        let c = classical_stats(&g).map_err(fail)?;
        for i in 0..prm.n {
            let classical = prm.r * c.d[i] + g.colors()[i];
            if s.lambda[i] != classical {
                return Err(format!(
                    "{g}: position {}: r*h+k = {} but r*d+c = {classical}",
                    i + 1,
                    s.lambda[i]
                ));
            }
        }
        if s.fmaj != c.fmaj {
            return Err(format!("{g}: fmaj {} vs flag-major {}", s.fmaj, c.fmaj));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// coinvariant: the fmaj distribution of the dual group equals the
// Hilbert series product of the coinvariant algebra.

fn suite_coinvariant(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let cap = cfg.cap;
    let mut records: Vec<CheckRecord> = group_grid(4, &[1, 2, 3], cfg.ceiling(u128::MAX))
        .into_par_iter()
        .map(|prm| {
            run_check(format!("coinvariant/{prm}"), prm.to_flag(), move || {
                let lhs = fmaj_generating_poly(prm.dual(), cap).map_err(fail)?;
                let rhs = coinvariant_hilbert_product(prm);
                expect_eq("distribution vs product", &lhs, &rhs)
            })
        })
        .collect();
    records.push(run_check("coinvariant/hand-value".into(), "2,2,1,2".into(), || {
        let prm = GroupParams::new(2, 2, 1, 2).map_err(fail)?;
        let product = coinvariant_hilbert_product(prm);
        expect_eq("coefficients", &product.coeffs().to_vec(), &vec![1, 2, 1])
    }));
    records
}

// ---------------------------------------------------------------------
// projrs: the projective correspondence is a bijection, class-pair
// fibers have the stabilizer size, and dimensions sum to the order.

fn suite_projrs(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let cap = cfg.cap;
    group_grid(6, &[1, 2, 3, 4], cfg.ceiling(5_000))
        .into_par_iter()
        .map(|prm| {
            run_check(format!("projrs/{prm}"), prm.to_flag(), move || projrs_body(prm, cap))
        })
        .collect()
}

fn projrs_body(prm: GroupParams, cap: usize) -> CheckResult {
    let els = element_vec(prm, cap).map_err(fail)?;
    let invert = els.len() <= 1_000;
    let mut pairs: BTreeMap<(MultiTableau, MultiTableau), usize> = BTreeMap::new();
    let mut fibers: BTreeMap<(MultiTableau, MultiTableau), usize> = BTreeMap::new();
    for g in &els {
        let pair = projective_rs(g).map_err(fail)?;
        if pair.insertion.shape() != pair.recording.shape() {
            return Err(format!("{g}: insertion and recording shapes differ"));
        }
        if invert {
            let back = projective_rs_inverse(&pair.insertion, &pair.recording, prm).map_err(fail)?;
            if back != *g {
                return Err(format!("{g}: correspondence does not invert"));
            }
        }
        let key = (
            pair.insertion.class_rep(prm.q).map_err(fail)?,
            pair.recording.class_rep(prm.q).map_err(fail)?,
        );
        *fibers.entry(key).or_insert(0) += 1;
        *pairs.entry((pair.insertion, pair.recording)).or_insert(0) += 1;
    }
    if let Some(((ins, _), count)) = pairs.iter().find(|(_, &c)| c != 1) {
        return Err(format!("pair orbit of shape {} hit {count} times", ins.shape()));
    }
    for ((ins, _), count) in &fibers {
        let stab = ShapeClass::of(&ins.shape(), prm.q).map_err(fail)?.stabilizer;
        if *count != stab {
            return Err(format!(
                "class-pair fiber over shape {} has size {count}, want {stab}",
                ins.shape()
            ));
        }
    }
    let mut total: u128 = 0;
    for class in enumerate_fer_classes(prm.r, prm.p, prm.q, prm.n).map_err(fail)? {
        let ct = class_tableau_count(&class);
        total += class.stabilizer as u128 * ct * ct;
    }
    expect_eq("sum of stabilizer * tableau_count^2", &total, &prm.order())
}

// ---------------------------------------------------------------------
// bije: the basis-exponent decoding round-trips and the basis has the
// predicted cardinality.

fn suite_bije(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let cap = cfg.cap;
    group_grid(6, &[1, 2, 3, 4], cfg.ceiling(200))
        .into_par_iter()
        .flat_map_iter(move |prm| {
            let mut records: Vec<CheckRecord> = (1..=3usize)
                .map(|k| {
                    run_check(format!("bije/{prm}/k={k}"), prm.to_flag(), move || {
                        bije_roundtrip_body(prm, k)
                    })
                })
                .collect();
            records.push(run_check(format!("bije/{prm}/cardinality"), prm.to_flag(), move || {
                bije_cardinality_body(prm, cap)
            }));
            records.into_iter()
        })
        .collect()
}

fn bije_roundtrip_body(prm: GroupParams, k: usize) -> CheckResult {
    let failure: Mutex<Option<String>> = Mutex::new(None);
    let seen = AtomicUsize::new(0);
    for_each_basis_exponent_by_entry(prm, k, 4, |m| {
        seen.fetch_add(1, Ordering::Relaxed);
        if failure.lock().unwrap().is_some() {
            return;
        }
        let verdict = matrix_to_tuple(m, prm)
            .map_err(fail)
            .and_then(|tuple| tuple_to_matrix(&tuple).map_err(fail))
            .and_then(|back| {
                if back == *m {
                    Ok(())
                } else {
                    Err(format!("decode/encode moved {m} to {back}"))
                }
            });
        if let Err(e) = verdict {
            *failure.lock().unwrap() = Some(e);
        }
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    if seen.load(Ordering::Relaxed) == 0 {
        return Err("no basis exponents enumerated".into());
    }
    Ok(())
}

fn bije_cardinality_body(prm: GroupParams, cap: usize) -> CheckResult {
    for k in 1..=3u32 {
        let got = count_product_one_tuples(prm, k as usize, cap).map_err(fail)?;
        let want = prm.order().pow(k - 1);
        if got != want {
            return Err(format!("k = {k}: counted {got} tuples with product 1, want {want}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// colu: the group average of a monomial is nonzero exactly when all
// column sums share a residue killed by p.

fn suite_colu(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    group_grid(4, &[1, 2, 3], cfg.ceiling(u128::MAX))
        .into_par_iter()
        .flat_map_iter(|prm| {
            (1..=2usize).map(move |k| {
                run_check(format!("colu/{prm}/k={k}"), prm.to_flag(), move || colu_body(prm, k))
            })
        })
        .collect()
}

fn colu_body(prm: GroupParams, k: usize) -> CheckResult {
    let n = prm.n;
    let mut digits = vec![0usize; k * n];
    loop {
        let rows: Vec<Vec<usize>> = digits.chunks(n).map(<[usize]>::to_vec).collect();
        if rows.iter().all(|row| row.iter().sum::<usize>() % prm.q == 0) {
            let avg = group_average(&rows, prm).map_err(fail)?;
            let sums: Vec<usize> = (0..n).map(|j| rows.iter().map(|row| row[j]).sum()).collect();
            let aligned = sums.iter().all(|&s| s % prm.r == sums[0] % prm.r);
            let criterion = aligned && (prm.p * (sums[0] % prm.r)) % prm.r == 0;
            if !avg.is_zero() != criterion {
                return Err(format!(
                    "exponents {rows:?}: average {}, but the column criterion says {}",
                    if avg.is_zero() { "vanishes" } else { "survives" },
                    if criterion { "survive" } else { "vanish" },
                ));
            }
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(());
            }
            if digits[i] == 3 {
                digits[i] = 0;
                i += 1;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------
// uou: diagonal invariants factor as module basis times tensor
// invariants, coefficientwise up to the degree bound.

fn suite_uou(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let ceiling = cfg.ceiling(u128::MAX);
    let cap = cfg.cap;
    [(2, 1, 1, 2), (2, 2, 1, 2), (2, 1, 2, 2), (3, 1, 1, 2)]
        .into_iter()
        .map(|(r, p, q, n)| GroupParams::new(r, p, q, n).unwrap())
        .filter(|prm| prm.order() <= ceiling)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|prm| {
            run_check(format!("uou/{prm}"), prm.to_flag(), move || uou_body(prm, cap))
        })
        .collect()
}

fn uou_body(prm: GroupParams, cap: usize) -> CheckResult {
    let bound = 8;
    let diag = diagonal_invariant_hilbert(prm, 2, bound).map_err(fail)?;
    let tensor = tensor_invariant_hilbert(prm, 2, bound).map_err(fail)?;
    let module = module_basis_hilbert(prm, 2, bound, cap).map_err(fail)?;
    let rhs = module.mul_truncated(&tensor, bound);
    match diag.first_difference(&rhs) {
        None => Ok(()),
        Some((exps, a, b)) => Err(format!("coefficient at {exps:?} differs: {a} vs {b}")),
    }
}

// ---------------------------------------------------------------------
// characters: degrees, both orthogonality relations, and the classical
// determinant-formula oracle.

fn suite_characters(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let ceiling = cfg.ceiling(u128::MAX);
    let cap = cfg.cap;
    let grid: Vec<GroupParams> = (1..=3usize)
        .flat_map(|r| (1..=3usize).map(move |n| GroupParams::new(r, 1, 1, n).unwrap()))
        .filter(|prm| prm.order() <= ceiling)
        .collect();
    let mut records: Vec<CheckRecord> = grid
        .into_par_iter()
        .flat_map_iter(move |prm| {
            [
                run_check(format!("characters/dimension/{prm}"), prm.to_flag(), move || {
                    characters_dimension_body(prm)
                }),
                run_check(
                    format!("characters/first-orthogonality/{prm}"),
                    prm.to_flag(),
                    move || characters_orthogonality_body(prm, cap, true),
                ),
                run_check(
                    format!("characters/second-orthogonality/{prm}"),
                    prm.to_flag(),
                    move || characters_orthogonality_body(prm, cap, false),
                ),
            ]
            .into_iter()
        })
        .collect();
    let oracle: Vec<CheckRecord> = (1..=5usize)
        .into_par_iter()
        .map(|n| {
            let prm = GroupParams::new(1, 1, 1, n).unwrap();
            run_check(format!("characters/classical-oracle/n={n}"), prm.to_flag(), move || {
                characters_classical_oracle_body(n)
            })
        })
        .collect();
    records.extend(oracle);
    records
}

fn characters_dimension_body(prm: GroupParams) -> CheckResult {
    let mut engine = CharacterEngine::new(prm.r);
    let identity = CycleType::identity(prm.n);
    for shape in enumerate_fer(prm.r, 1, prm.n) {
        let dim = engine.value(&shape, &identity).map_err(fail)?.as_int().map_err(fail)?;
        let count = tableau_count(&shape);
        if dim < 0 || dim as u128 != count {
            return Err(format!("shape {shape}: degree {dim} vs tableau count {count}"));
        }
    }
    Ok(())
}

fn characters_orthogonality_body(prm: GroupParams, cap: usize, first: bool) -> CheckResult {
    let shapes = enumerate_fer(prm.r, 1, prm.n);
    let types = cycle_type_counts(prm, cap).map_err(fail)?;
    let mut engine = CharacterEngine::new(prm.r);
    let mut table: Vec<Vec<Cyclotomic>> = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        let mut row = Vec::with_capacity(types.len());
        for (ty, _) in &types {
            row.push(engine.value(shape, ty).map_err(fail)?);
        }
        table.push(row);
    }
    let order = prm.order() as i64;
    if first {
        // Row orthogonality: sum over classes, weighted by class size.
        for a in 0..shapes.len() {
            for b in 0..shapes.len() {
                let mut total = Cyclotomic::zero(prm.r);
                for (j, (_, size)) in types.iter().enumerate() {
                    total = total.add(&table[a][j].mul(&table[b][j].conj()).scale(*size as i64));
                }
                let got = total.as_int().map_err(fail)?;
                let want = if a == b { order } else { 0 };
                if got != want {
                    return Err(format!(
                        "rows {} and {}: inner product {got}, want {want}",
                        shapes[a], shapes[b]
                    ));
                }
            }
        }
    } else {
        // Column orthogonality: sum over shapes gives the centralizer
        // order on the diagonal.
        for j1 in 0..types.len() {
            for j2 in 0..types.len() {
                let mut total = Cyclotomic::zero(prm.r);
                for row in &table {
                    total = total.add(&row[j1].mul(&row[j2].conj()));
                }
                let got = total.as_int().map_err(fail)?;
                let want = if j1 == j2 { order / types[j1].1 as i64 } else { 0 };
                if got != want {
                    return Err(format!(
                        "classes {} and {}: inner product {got}, want {want}",
                        types[j1].0, types[j2].0
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Character value of the symmetric group by monomial expansion of the
/// alternant times the power sum: the coefficient extraction form of
/// the determinant formula.  Slow but independent of the recursion.
fn frobenius_character(lambda: &Partition, mu: &Partition, n: usize) -> i64 {
    let delta: Vec<usize> = (0..n).rev().collect();
    let mut poly: HashMap<Vec<usize>, i64> = HashMap::new();
    for perm in (0..n).permutations(n) {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let exps: Vec<usize> = (0..n).map(|i| delta[perm[i]]).collect();
        *poly.entry(exps).or_insert(0) += sign;
    }
    for &part in mu.parts() {
        let mut next: HashMap<Vec<usize>, i64> = HashMap::new();
        for (exps, coef) in poly {
            for i in 0..n {
                let mut e = exps.clone();
                e[i] += part;
                *next.entry(e).or_insert(0) += coef;
            }
        }
        poly = next;
    }
    let target: Vec<usize> = (0..n).map(|i| lambda.padded(n)[i] + delta[i]).collect();
    poly.get(&target).copied().unwrap_or(0)
}

fn characters_classical_oracle_body(n: usize) -> CheckResult {
    let mut engine = CharacterEngine::new(1);
    for mu in partitions_of(n) {
        let ty = CycleType::new(mu.parts().iter().map(|&l| (l, 0)).collect()).map_err(fail)?;
        for lambda in partitions_of(n) {
            let shape = crate::tableaux::MultiShape::new(vec![lambda.clone()]).map_err(fail)?;
            let got = engine.value(&shape, &ty).map_err(fail)?.as_int().map_err(fail)?;
            let want = frobenius_character(&lambda, &mu, n);
            if got != want {
                return Err(format!(
                    "chi^{lambda}({mu}): recursion gives {got}, coefficient formula gives {want}"
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// maincomb: the product-one generating series equals the character-
// theoretic double sum.

fn suite_maincomb(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let cap = cfg.cap;
    let ceiling = cfg.ceiling(500);
    let mut records: Vec<CheckRecord> = group_grid(6, &[1, 2, 3, 4], ceiling)
        .into_par_iter()
        .map(|prm| {
            run_check(format!("maincomb/{prm}/k=2"), prm.to_flag(), move || {
                maincomb_body(prm, 2, cap)
            })
        })
        .collect();
    let triples: Vec<GroupParams> = [(1, 1, 1, 3), (2, 1, 1, 2)]
        .into_iter()
        .map(|(r, p, q, n)| GroupParams::new(r, p, q, n).unwrap())
        .filter(|prm| prm.order() <= ceiling)
        .collect();
    records.extend(triples.into_iter().map(|prm| {
        run_check(format!("maincomb/{prm}/k=3"), prm.to_flag(), move || maincomb_body(prm, 3, cap))
    }));
    records.push(run_check("maincomb/symmetric-triple".into(), "1,1,1,3".into(), move || {
        let prm = GroupParams::new(1, 1, 1, 3).map_err(fail)?;
        let classes = enumerate_fer_classes(1, 1, 1, 3).map_err(fail)?;
        let hook = classes
            .iter()
            .find(|c| c.rep.components[0] == Partition::new(vec![2, 1]))
            .ok_or_else(|| "no class with component (2,1)".to_string())?;
        let got = coarse_kronecker(prm, &[hook.clone(), hook.clone(), hook.clone()], cap)
            .map_err(fail)?;
        expect_eq("coarse coefficient of (2,1)^3", &got, &1u64)
    }));
    records
}

fn maincomb_body(prm: GroupParams, k: usize, cap: usize) -> CheckResult {
    let bound = k * max_fmaj(prm, cap).map_err(fail)?;
    let report = maincomb_check(prm, k, bound, cap).map_err(fail)?;
    match report.first_difference {
        None => Ok(()),
        Some((exps, a, b)) => Err(format!("coefficient at {exps:?} differs: {a} vs {b}")),
    }
}

// ---------------------------------------------------------------------
// galois: the twisted two-variable series agrees with its fake-degree
// expansion for every unit d.

fn suite_galois(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let cap = cfg.cap;
    group_grid(6, &[1, 2, 3, 4], cfg.ceiling(2_000))
        .into_par_iter()
        .flat_map_iter(move |prm| {
            GaloisLabel::all(prm.r).into_iter().map(move |label| {
                run_check(format!("galois/{prm}/d={}", label.d), prm.to_flag(), move || {
                    galois_body(prm, label.d, cap)
                })
            })
        })
        .collect()
}

fn galois_body(prm: GroupParams, d: usize, cap: usize) -> CheckResult {
    let bound = 2 * max_fmaj(prm.dual(), cap).map_err(fail)?;
    let report = gsigma_check(prm, d, bound, cap).map_err(fail)?;
    match report.first_difference {
        None => Ok(()),
        Some((exps, a, b)) => Err(format!("coefficient at {exps:?} differs: {a} vs {b}")),
    }
}

// ---------------------------------------------------------------------
// group-theory: enumeration, scalar counts, and the duality criterion.

fn suite_group_theory(cfg: &VerifyConfig) -> Vec<CheckRecord> {
    let cap = cfg.cap;
    let ceiling = cfg.ceiling(5_000);
    let mut records: Vec<CheckRecord> = group_grid(6, &[1, 3, 4], ceiling)
        .into_par_iter()
        .flat_map_iter(move |prm| {
            [
                run_check(format!("group-theory/order/{prm}"), prm.to_flag(), move || {
                    group_order_body(prm, cap)
                }),
                run_check(format!("group-theory/scalars/{prm}"), prm.to_flag(), move || {
                    group_scalars_body(prm, cap)
                }),
                run_check(format!("group-theory/duality/{prm}"), prm.to_flag(), move || {
                    group_duality_body(prm, cap)
                }),
            ]
            .into_iter()
        })
        .collect();
    for n in [1usize, 3, 4] {
        let prm = GroupParams::new(2, 2, 1, n).unwrap();
        if prm.order() <= ceiling {
            records.push(run_check(
                format!("group-theory/dihedral/n={n}"),
                prm.to_flag(),
                move || {
                    let got = prm.is_isomorphic_to_dual().map_err(fail)?;
                    expect_eq("self-duality of the dihedral tower", &got, &(n % 2 == 1))
                },
            ));
        }
    }
    records
}

fn is_scalar(g: &Element) -> bool {
    g.perm().iter().enumerate().all(|(i, &s)| s == i)
        && g.colors().windows(2).all(|w| w[0] == w[1])
}

fn group_order_body(prm: GroupParams, cap: usize) -> CheckResult {
    let els = element_vec(prm, cap).map_err(fail)?;
    let distinct: BTreeSet<&Element> = els.iter().collect();
    if distinct.len() != els.len() {
        return Err("enumeration repeats a canonical form".into());
    }
    expect_eq("element count", &(els.len() as u128), &prm.order())
}

fn group_scalars_body(prm: GroupParams, cap: usize) -> CheckResult {
    let counted = elements(prm, cap).map_err(fail)?.filter(is_scalar).count();
    expect_eq("scalar count", &counted, &prm.scalar_count())
}

fn group_duality_body(prm: GroupParams, cap: usize) -> CheckResult {
    let formula = prm.is_isomorphic_to_dual().map_err(fail)?;
    let ours = elements(prm, cap).map_err(fail)?.filter(is_scalar).count();
    let theirs = elements(prm.dual(), cap).map_err(fail)?.filter(is_scalar).count();
    expect_eq("criterion vs scalar comparison", &formula, &(ours == theirs))
}

// ---------------------------------------------------------------------

/// Runs one named suite and returns its name-sorted report.  Names are
/// matched case-insensitively.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let checks = match name.to_ascii_lowercase().as_str() {
        "worked-examples" => suite_worked_examples(cfg),
        "oldnew" => suite_oldnew(cfg),
        "coinvariant" => suite_coinvariant(cfg),
        "projrs" => suite_projrs(cfg),
        "bije" => suite_bije(cfg),
        "colu" => suite_colu(cfg),
        "uou" => suite_uou(cfg),
        "characters" => suite_characters(cfg),
        "maincomb" => suite_maincomb(cfg),
        "galois" => suite_galois(cfg),
        "group-theory" => suite_group_theory(cfg),
        other => {
            return Err(Error::Usage(format!(
                "unknown suite '{other}'; expected one of: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(finish(checks))
}

/// Runs every suite and merges the records into one report.
pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    let nested: Vec<Vec<CheckRecord>> = SUITES
        .par_iter()
        .map(|name| run_suite(name, cfg).expect("built-in suite names are valid").checks)
        .collect();
    finish(nested.into_iter().flatten().collect())
}

fn finish(mut checks: Vec<CheckRecord>) -> VerifyReport {
    checks.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.params.cmp(&b.params)));
    VerifyReport { version: 1, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_a_usage_error() {
        match run_suite("nonsense", &VerifyConfig::default()) {
            Err(Error::Usage(msg)) => assert!(msg.contains("nonsense")),
            other => panic!("expected a usage error, got {other:?}"),
        }
    }

    #[test]
    fn worked_examples_pass_and_serialize() {
        let report = run_suite("worked-examples", &VerifyConfig::default()).unwrap();
        assert_eq!(report.checks.len(), 2);
        assert!(report.passed(), "failures: {:?}", report.failures());
        let json = report.to_json();
        assert_eq!(json["version"], 1);
        let first = &json["checks"][0];
        assert_eq!(first["name"], "worked-examples/element-profile");
        assert_eq!(first["params"], "6,2,3,8");
        assert_eq!(first["status"], "pass");
        assert!(first["witness"].is_null());
        assert!(first["ms"].is_number());
    }

    #[test]
    fn grid_respects_validity_and_order_cap() {
        let grid = group_grid(2, &[2], 8);
        // G(1,1,1,2) has order 2, G(2,1,1,2) order 8, G(2,p,q,2) with
        // pq = 2 order 4, and G(2,2,2,2) order 2.
        assert!(grid.contains(&GroupParams::new(2, 1, 1, 2).unwrap()));
        assert!(grid.contains(&GroupParams::new(2, 2, 2, 2).unwrap()));
        assert_eq!(group_grid(2, &[2], 7).len(), grid.len() - 1);
        for prm in &grid {
            assert!(prm.order() <= 8, "{prm}");
        }
    }

    #[test]
    fn small_group_theory_suite_passes() {
        let cfg = VerifyConfig { max_order: Some(60), ..VerifyConfig::default() };
        let report = run_suite("group-theory", &cfg).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures());
        assert!(report.checks.iter().any(|c| c.name == "group-theory/dihedral/n=3"));
        let mut sorted = report.checks.clone();
        sorted.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.params.cmp(&b.params)));
        assert_eq!(
            report.checks.iter().map(|c| &c.name).collect::<Vec<_>>(),
            sorted.iter().map(|c| &c.name).collect::<Vec<_>>()
        );
    }

    #[test]
    fn classical_oracle_matches_on_tiny_ranks() {
        assert!(characters_classical_oracle_body(3).is_ok());
    }

    #[test]
    fn frobenius_values_match_the_known_table() {
        // The character table of the symmetric group on three letters.
        let l3 = Partition::new(vec![3]);
        let l21 = Partition::new(vec![2, 1]);
        let l111 = Partition::new(vec![1, 1, 1]);
        let classes = [
            (Partition::new(vec![1, 1, 1]), 1i64, 2i64, 1i64),
            (Partition::new(vec![2, 1]), 1, 0, -1),
            (Partition::new(vec![3]), 1, -1, 1),
        ];
        for (mu, triv, std, sgn) in classes {
            assert_eq!(frobenius_character(&l3, &mu, 3), triv);
            assert_eq!(frobenius_character(&l21, &mu, 3), std);
            assert_eq!(frobenius_character(&l111, &mu, 3), sgn);
        }
    }
}
