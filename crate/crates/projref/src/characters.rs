//! Irreducible characters of the wreath groups G(r,p,n) and the coarse
//! Kronecker coefficients of the projective quotients G(r,p,q,n).
//!
//! Conjugacy classes of G(r,n) are cycle types: multisets of (length,
//! color) pairs, the color being the sum of the colors along a cycle,
//! taken mod r.  Character values are computed by a Murnaghan-Nakayama
//! recursion over the colored cycles: peeling a cycle of length l and
//! color z from the shape tuple costs a factor zeta_r^(j*z) for the
//! component j losing a border strip of l cells, times the sign of the
//! strip.  Values land in the ring of integers of the r-th cyclotomic
//! field.
//!
//! A coarse Kronecker coefficient attaches to a tuple of shape classes:
//! it is the sum of the ordinary Kronecker coefficients over all
//! irreducibles lying above those classes.  Restriction from G(r,n) is
//! multiplicity free, which collapses that sum to a single averaged
//! product of wreath characters; the average must come out a nonnegative
//! rational integer, and anything else is reported as an error rather
//! than silently rounded.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::diagonal::module_basis_hilbert;
use crate::error::{Error, Result};
use crate::group::{elements, Element, GroupParams};
use crate::partitions::Partition;
use crate::series::PartitionSeries;
use crate::tableaux::{
    class_tableau_count, enumerate_fer_classes, enumerate_tableaux, tableau_stats, MultiShape,
    ShapeClass,
};

/// A conjugacy class of a wreath group: the multiset of (length, color)
/// pairs of the cycles, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CycleType(Vec<(usize, usize)>);

impl CycleType {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<CycleType> {
        if pairs.iter().any(|&(len, _)| len == 0) {
            return Err(Error::Malformed("cycle lengths must be positive".into()));
        }
        pairs.sort_unstable();
        Ok(CycleType(pairs))
    }

    /// The cycle type of a group element.  Cycle colors are only globally
    /// defined when the element is not a proper scalar coset, so this
    /// requires q = 1.
    pub fn of(g: &Element) -> Result<CycleType> {
        CycleType::new(g.cycles()?)
    }

    /// Sorted (length, color) pairs.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Sum of the cycle lengths.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&(len, _)| len).sum()
    }

    /// Parses "len:color" pairs separated by commas, e.g. "2:1,1:0".
    /// Colors are reduced mod r.
    pub fn parse(text: &str, r: usize) -> Result<CycleType> {
        if r == 0 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        let mut pairs = Vec::new();
        for chunk in text.split(',') {
            let chunk = chunk.trim();
            let (len, color) = chunk
                .split_once(':')
                .ok_or_else(|| Error::Malformed(format!("bad cycle '{chunk}', want len:color")))?;
            let len: usize = len
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad cycle length '{len}'")))?;
            let color: usize = color
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad cycle color '{color}'")))?;
            pairs.push((len, color % r));
        }
        CycleType::new(pairs)
    }

    /// The type of an identity element of rank n.
    pub fn identity(n: usize) -> CycleType {
        CycleType(vec![(1, 0); n])
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(len, color) in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{len}:{color}")?;
            first = false;
        }
        Ok(())
    }
}

/// All border-strip removals of `ell` cells from a partition, as
/// (smaller partition, sign) pairs.  The sign is (-1)^height.
///
/// Works on the beta-set {lambda_i + m - i}: removing a strip of size
/// `ell` means replacing a beta number b by b - ell when b >= ell and
/// b - ell is not already present, and the height parity is the number
/// of beta numbers strictly between the two.
fn strip_removals(lambda: &Partition, ell: usize) -> Vec<(Partition, i64)> {
    let m = lambda.len();
    let beta: Vec<usize> = (0..m).map(|i| lambda.part(i) + (m - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < ell {
            // beta is strictly decreasing, so no later entry fits either.
            break;
        }
        let target = b - ell;
        if beta.contains(&target) {
            continue;
        }
        let crossings = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (m - 1 - i))
            .collect();
        out.push((Partition::new(parts), sign));
    }
    out
}

/// Memoized evaluator for irreducible wreath characters with a fixed
/// color count r.  Reuse one engine across many evaluations: the memo is
/// keyed on (shape tuple, remaining cycle list) and shared by every
/// shape, which is what makes table-sized workloads cheap.
pub struct CharacterEngine {
    r: usize,
    memo: HashMap<(MultiShape, Vec<(usize, usize)>), Cyclotomic>,
}

impl CharacterEngine {
    pub fn new(r: usize) -> CharacterEngine {
        CharacterEngine { r, memo: HashMap::new() }
    }

    pub fn colors(&self) -> usize {
        self.r
    }

    /// The value of the irreducible character labeled by `shape` on the
    /// class `ty`.
    pub fn value(&mut self, shape: &MultiShape, ty: &CycleType) -> Result<Cyclotomic> {
        if shape.colors() != self.r {
            return Err(Error::ParamMismatch(format!(
                "shape has {} components but the engine color count is {}",
                shape.colors(),
                self.r
            )));
        }
        if ty.size() != shape.size() {
            return Err(Error::ParamMismatch(format!(
                "cycle type of size {} against shape of size {}",
                ty.size(),
                shape.size()
            )));
        }
        if let Some(&(_, color)) = ty.pairs().iter().find(|&&(_, z)| z >= self.r) {
            return Err(Error::Malformed(format!(
                "cycle color {color} is not reduced mod r = {}",
                self.r
            )));
        }
        Ok(self.eval(shape.clone(), ty.pairs().to_vec()))
    }

    fn eval(&mut self, shape: MultiShape, cycles: Vec<(usize, usize)>) -> Cyclotomic {
        if cycles.is_empty() {
            return Cyclotomic::one(self.r);
        }
        let key = (shape, cycles);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (len, color) = *key.1.last().expect("nonempty cycle list");
        let rest = key.1[..key.1.len() - 1].to_vec();
        let mut total = Cyclotomic::zero(self.r);
        for j in 0..self.r {
            let removals = strip_removals(&key.0.components[j], len);
            if removals.is_empty() {
                continue;
            }
            let phase = Cyclotomic::root_power(self.r, (j * color) as i64);
            for (child, sign) in removals {
                let mut components = key.0.components.clone();
                components[j] = child;
                let sub = self.eval(MultiShape { components }, rest.clone());
                total = total.add(&phase.scale(sign).mul(&sub));
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// One-shot character value; for repeated evaluation build a
/// [`CharacterEngine`] and reuse it.
pub fn wreath_character(shape: &MultiShape, ty: &CycleType) -> Result<Cyclotomic> {
    CharacterEngine::new(shape.colors()).value(shape, ty)
}

/// Label of an irreducible representation of G(r,p,q,n): a shape class
/// (under the C_p index shift) plus a Clifford branch index below the
/// class stabilizer order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepLabel {
    pub mu: ShapeClass,
    pub rho: usize,
}

impl IrrepLabel {
    pub fn new(mu: ShapeClass, rho: usize) -> Result<IrrepLabel> {
        if rho >= mu.stabilizer {
            return Err(Error::InvalidParams(format!(
                "branch index {rho} out of range: class stabilizer has order {}",
                mu.stabilizer
            )));
        }
        Ok(IrrepLabel { mu, rho })
    }

    /// Dimension: the number of standard tableau classes of the shape
    /// class, independent of the branch.
    pub fn dimension(&self) -> u128 {
        class_tableau_count(&self.mu)
    }
}

/// The distinct cycle types of G(r,p,n) (pass q = 1 params) with their
/// element multiplicities.
pub fn cycle_type_counts(params: GroupParams, cap: usize) -> Result<Vec<(CycleType, u64)>> {
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    for g in elements(params, cap)? {
        *counts.entry(CycleType::of(&g)?).or_insert(0) += 1;
    }
    Ok(counts.into_iter().collect())
}

/// Coarse Kronecker coefficient of G(r,p,q,n) for a tuple of shape
/// classes: the sum over all tuples of irreducibles lying above the
/// classes of the averaged character product
/// (1/|G|) sum_g chi_1(g) ... chi_k(g).
///
/// Each class must use cyclic order p (labels of Irr are C_p-classes)
/// and its representative must have n cells with color weight divisible
/// by q.  The computation averages plain wreath character products over
/// G(r,p,n); a result that is not a nonnegative rational integer means a
/// convention fault and is returned as an error, never rounded.
pub fn coarse_kronecker(params: GroupParams, mus: &[ShapeClass], cap: usize) -> Result<u64> {
    if mus.is_empty() {
        return Err(Error::InvalidParams("need at least one shape class".into()));
    }
    for mu in mus {
        if mu.rep.colors() != params.r || mu.cyclic_order != params.p {
            return Err(Error::ParamMismatch(format!(
                "shape class with {} components and cyclic order {} does not label an irreducible of {}",
                mu.rep.colors(),
                mu.cyclic_order,
                params
            )));
        }
        if !mu.rep.is_in_fer(params.r, params.q, params.n) {
            return Err(Error::ParamMismatch(format!(
                "representative {} is not an n = {} shape with color weight divisible by q = {}",
                mu.rep, params.n, params.q
            )));
        }
    }
    let shapes: Vec<MultiShape> = mus.iter().map(|m| m.rep.clone()).collect();
    coarse_from_shapes(params, &shapes, cap)
}

/// Core of the coarse coefficient: average the character product over
/// G(r,p,n) using explicit shape representatives.  Separated out so the
/// tests can feed alternative orbit representatives directly.
fn coarse_from_shapes(params: GroupParams, shapes: &[MultiShape], cap: usize) -> Result<u64> {
    let wreath = GroupParams::new(params.r, params.p, 1, params.n)?;
    let type_counts = cycle_type_counts(wreath, cap)?;
    let mut engine = CharacterEngine::new(params.r);
    let mut total = Cyclotomic::zero(params.r);
    for (ty, mult) in &type_counts {
        let mut prod = Cyclotomic::from_int(params.r, *mult as i64);
        for shape in shapes {
            prod = prod.mul(&engine.value(shape, ty)?);
        }
        total = total.add(&prod);
    }
    integer_average(&total, wreath.order())
}

/// Divides a character sum by the group order, insisting on a
/// nonnegative integer quotient.
fn integer_average(total: &Cyclotomic, order: u128) -> Result<u64> {
    let sum = total.as_int()? as i128;
    let denom = order as i128;
    if sum < 0 || sum % denom != 0 {
        return Err(Error::NonIntegral(format!(
            "character average {sum}/{denom} is not a nonnegative integer"
        )));
    }
    Ok((sum / denom) as u64)
}

/// Fake degree polynomial of a shape class: the generating function, in
/// one partition alphabet, of the statistic profile over the standard
/// tableau classes of the shape class.  The cyclic order of the class is
/// the modulus for both the class structure and the statistics, so the
/// result does not depend on the chosen representative.
pub fn fake_degree_poly(mu: &ShapeClass) -> Result<PartitionSeries> {
    let quot = mu.cyclic_order;
    let mut seen = BTreeSet::new();
    let mut series = PartitionSeries::zero(1);
    for t in enumerate_tableaux(&mu.rep) {
        let rep = t.class_rep(quot)?;
        if !seen.insert(rep) {
            continue;
        }
        let profile = tableau_stats(&t, quot)?;
        series.add_term(vec![profile.lambda_partition()], 1);
    }
    Ok(series)
}

/// Places a one-alphabet series into alphabet `pos` of a k-alphabet
/// series.
pub(crate) fn embed_alphabet(single: &PartitionSeries, k: usize, pos: usize) -> PartitionSeries {
    assert_eq!(single.alphabets(), 1);
    let mut out = PartitionSeries::zero(k);
    for (exps, coef) in single.terms() {
        let mut wide = vec![Partition::empty(); k];
        wide[pos] = exps[0].clone();
        out.add_term(wide, coef);
    }
    out
}

/// Both sides of the product-one tuple identity, truncated at a total
/// degree bound, and their first disagreement if any.
#[derive(Clone, Debug)]
pub struct MaincombReport {
    pub lhs: PartitionSeries,
    pub rhs: PartitionSeries,
    pub first_difference: Option<(Vec<Partition>, i64, i64)>,
}

impl MaincombReport {
    pub fn holds(&self) -> bool {
        self.first_difference.is_none()
    }
}

/// Checks, up to total degree `bound`, the identity expressing the
/// profile generating function of product-one k-tuples in G(r,p,q,n)
/// through the representation theory of the dual group:
///
///   sum over (g_1,...,g_k) with g_1 ... g_k = 1 of
///     prod_i Y_i^(lambda(g_i))
///   = sum over k-tuples of tableau shape classes of
///     (coarse Kronecker of the dual) * prod_i (fake degree in Y_i).
///
/// The left side is enumerated directly; `cap` bounds the number of
/// free tuples.
pub fn maincomb_check(
    params: GroupParams,
    k: usize,
    bound: usize,
    cap: usize,
) -> Result<MaincombReport> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1 alphabets".into()));
    }
    // module_basis_hilbert sums over the dual of its argument, so passing
    // the dual makes the left side range over G(r,p,q,n) itself.
    let lhs = module_basis_hilbert(params.dual(), k, bound, cap)?;

    let dual = params.dual();
    // Irreducibles of the dual group are labeled by shapes with color
    // weight divisible by p, modulo the C_q index shift.
    let classes = enumerate_fer_classes(params.r, params.p, params.q, params.n)?;
    let wreath = GroupParams::new(dual.r, dual.p, 1, dual.n)?;
    let type_counts = cycle_type_counts(wreath, cap)?;
    let mut engine = CharacterEngine::new(params.r);

    let mut values: Vec<Vec<Cyclotomic>> = Vec::with_capacity(classes.len());
    let mut fakes: Vec<PartitionSeries> = Vec::with_capacity(classes.len());
    for mu in &classes {
        values.push(
            type_counts
                .iter()
                .map(|(ty, _)| engine.value(&mu.rep, ty))
                .collect::<Result<Vec<_>>>()?,
        );
        fakes.push(fake_degree_poly(mu)?);
    }

    let mut rhs = PartitionSeries::zero(k);
    let m = classes.len();
    let mut pick = vec![0usize; k];
    loop {
        let mut total = Cyclotomic::zero(params.r);
        for (t, (_, mult)) in type_counts.iter().enumerate() {
            let mut prod = Cyclotomic::from_int(params.r, *mult as i64);
            for &i in &pick {
                prod = prod.mul(&values[i][t]);
            }
            total = total.add(&prod);
        }
        let coeff = integer_average(&total, wreath.order())? as i64;
        if coeff != 0 {
            let mut term = PartitionSeries::one(k);
            for (pos, &i) in pick.iter().enumerate() {
                term = term.mul_truncated(&embed_alphabet(&fakes[i], k, pos), bound);
            }
            rhs = rhs.add(&term.scale(coeff));
        }
        // Next k-tuple of class indices.
        let mut slot = 0;
        loop {
            if slot == k {
                let first_difference = lhs.first_difference(&rhs);
                return Ok(MaincombReport { lhs, rhs, first_difference });
            }
            pick[slot] += 1;
            if pick[slot] < m {
                break;
            }
            pick[slot] = 0;
            slot += 1;
        }
    }
}
