//! Diagonal invariants of G(r,p,q,n) acting on k sets of n variables.
//!
//! The ambient algebra is spanned by monomials whose degree in each
//! alphabet is divisible by q; a monomial is recorded as a k×n exponent
//! matrix.  Averaging a monomial over the diagonal copy of the group kills
//! it unless its column sums are mutually congruent mod r and become 0 mod
//! r after multiplication by p.  The surviving averages, indexed by
//! k-partite partitions, form a basis of the invariant algebra, and the
//! basis indices correspond to tuples (g_1,…,g_k) from the dual group with
//! product 1, each decorated with a compatible exponent partition.  The
//! resulting factorization of the diagonal Hilbert series over the
//! tensor-invariant Hilbert series is checked coefficientwise here.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{element_vec, Element, GroupParams};
use crate::partitions::Partition;
use crate::series::PartitionSeries;
use crate::stats::stat_profile;

/// A k×n matrix of nonnegative integers whose columns weakly decrease in
/// the lexicographic order read top-to-bottom (a k-partite partition).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KPartiteMatrix {
    rows: Vec<Vec<usize>>,
}

impl KPartiteMatrix {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Malformed("matrix needs at least one row and column".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::Malformed("rows differ in length".into()));
        }
        let m = KPartiteMatrix { rows };
        for j in 0..n - 1 {
            if m.column_cmp(j, j + 1) == std::cmp::Ordering::Less {
                return Err(Error::Malformed(format!(
                    "columns {} and {} are not in decreasing lexicographic order",
                    j + 1,
                    j + 2
                )));
            }
        }
        Ok(m)
    }

    fn column_cmp(&self, a: usize, b: usize) -> std::cmp::Ordering {
        for row in &self.rows {
            match row[a].cmp(&row[b]) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let mut sums = vec![0usize; self.width()];
        for row in &self.rows {
            for (s, &a) in sums.iter_mut().zip(row) {
                *s += a;
            }
        }
        sums
    }

    pub fn total_degree(&self) -> usize {
        self.rows.iter().map(|row| row.iter().sum::<usize>()).sum()
    }

    /// The multipartition degree: each row reordered decreasingly.
    pub fn exponent_partitions(&self) -> Vec<Partition> {
        self.rows
            .iter()
            .map(|row| Partition::new(row.clone()))
            .collect()
    }

    /// True when the average of the corresponding monomial over the
    /// diagonal group survives and the matrix indexes a basis element:
    /// row sums divisible by q, column sums mutually congruent mod r, and
    /// p times any column sum divisible by r.
    pub fn is_basis_exponent(&self, params: GroupParams) -> bool {
        if self.width() != params.n {
            return false;
        }
        if self.row_sums().iter().any(|&s| s % params.q != 0) {
            return false;
        }
        let sums = self.column_sums();
        let first = sums[0] % params.r;
        sums.iter().all(|&s| s % params.r == first) && (params.p * first) % params.r == 0
    }

    fn flattened(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl std::fmt::Display for KPartiteMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", body.join(" / "))
    }
}

/// Partitions with at most n parts whose parts, padded with zeros to
/// length n, are all congruent to one common multiple of r/p modulo r.
pub fn par_rpn_contains(lambda: &Partition, r: usize, p: usize, n: usize) -> bool {
    debug_assert!(p >= 1 && r % p == 0);
    if lambda.len() > n {
        return false;
    }
    let padded = lambda.padded(n);
    let residue = padded[0] % r;
    padded.iter().all(|&a| a % r == residue) && residue % (r / p) == 0
}

/// All members of the family above with size at most `degree_bound`,
/// sorted.
pub fn par_rpn_enumerate(r: usize, p: usize, n: usize, degree_bound: usize) -> Vec<Partition> {
    debug_assert!(p >= 1 && r % p == 0);
    let mut out = Vec::new();
    for m in 0..p {
        let residue = m * (r / p);
        // With fewer than n nonzero parts a padding zero joins the parts,
        // forcing the shared residue to be zero.
        let mut parts = vec![0usize; n];
        fn rec(
            slot: usize,
            n: usize,
            r: usize,
            residue: usize,
            budget: usize,
            max_part: usize,
            parts: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if slot == n {
                out.push(Partition::new(parts.clone()));
                return;
            }
            let mut a = residue;
            while a <= max_part && a <= budget {
                parts[slot] = a;
                rec(slot + 1, n, r, residue, budget - a, a, parts, out);
                a += r;
            }
            parts[slot] = 0;
        }
        // Start each part at the residue and climb in steps of r; a part
        // may be zero only in the zero-residue class.
        if residue == 0 {
            rec(0, n, r, 0, degree_bound, degree_bound, &mut parts, &mut out);
        } else if n * residue <= degree_bound {
            rec(0, n, r, residue, degree_bound, degree_bound, &mut parts, &mut out);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// An element g of the dual group together with an exponent partition
/// whose difference from the descent profile of g is again a partition
/// lying in the invariant family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatiblePair {
    pub g: Element,
    pub lambda: Partition,
}

impl CompatiblePair {
    pub fn new(g: Element, lambda: Partition) -> Result<Self> {
        if !is_compatible(&lambda, &g) {
            return Err(Error::Malformed(format!(
                "{lambda} is not compatible with {g}"
            )));
        }
        Ok(CompatiblePair { g, lambda })
    }

    /// The pair carrying the descent profile itself.
    pub fn minimal(g: Element) -> Self {
        let lambda = stat_profile(&g).lambda_partition();
        CompatiblePair { g, lambda }
    }
}

/// True when lambda has at most n parts, lambda minus the descent profile
/// of g is a weakly decreasing nonnegative vector in the invariant
/// family, and reducing lambda mod r recovers g itself.
pub fn is_compatible(lambda: &Partition, g: &Element) -> bool {
    let params = g.params();
    let n = params.n;
    if lambda.len() > n {
        return false;
    }
    let profile = stat_profile(g).lambda_partition();
    let Some(diff) = lambda.sub_checked(&profile) else {
        return false;
    };
    // The difference must live in the invariant family of the dual side:
    // parts congruent to a common multiple of r divided by this group's
    // q-parameter.
    if !par_rpn_contains(&diff, params.r, params.q, n) {
        return false;
    }
    let colors: Vec<i64> = lambda.padded(n).iter().map(|&a| a as i64).collect();
    match Element::canonicalize(params, g.perm().to_vec(), &colors) {
        Ok(h) => h == *g,
        Err(_) => false,
    }
}

/// Encodes a tuple of compatible pairs whose group parts multiply to the
/// identity into a k-partite matrix: row i lists the exponent partition of
/// pair i read along the running product of the earlier permutations.
pub fn tuple_to_matrix(pairs: &[CompatiblePair]) -> Result<KPartiteMatrix> {
    if pairs.is_empty() {
        return Err(Error::Malformed("need at least one pair".into()));
    }
    let params = pairs[0].g.params();
    if pairs.iter().any(|p| p.g.params() != params) {
        return Err(Error::ParamMismatch(
            "pairs come from different groups".into(),
        ));
    }
    let product = pairs
        .iter()
        .skip(1)
        .try_fold(pairs[0].g.clone(), |acc, p| acc.multiply(&p.g))?;
    if !product.is_identity() {
        return Err(Error::Malformed(
            "group parts must multiply to the identity".into(),
        ));
    }
    let n = params.n;
    let mut tau: Vec<usize> = (0..n).collect();
    let mut rows = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let padded = pair.lambda.padded(n);
        rows.push(tau.iter().map(|&j| padded[j]).collect::<Vec<_>>());
        for t in tau.iter_mut() {
            *t = pair.g.perm()[*t];
        }
    }
    debug_assert!(tau.iter().enumerate().all(|(j, &t)| j == t));
    KPartiteMatrix::new(rows)
}

/// The matrix encoding the tuple decorated with its own descent profiles.
pub fn basis_matrix(gs: &[Element]) -> Result<KPartiteMatrix> {
    let pairs: Vec<CompatiblePair> = gs.iter().cloned().map(CompatiblePair::minimal).collect();
    tuple_to_matrix(&pairs)
}

/// Decodes a basis exponent matrix back into the unique tuple of
/// compatible pairs over the dual of `params`.
///
/// The permutations are recovered stage by stage: sorting the columns by
/// the rows from stage i downward, descending lexicographically and
/// stably, exposes the i-th exponent partition, and consecutive sorts
/// compose to the permutation parts.
pub fn matrix_to_tuple(a: &KPartiteMatrix, params: GroupParams) -> Result<Vec<CompatiblePair>> {
    if !a.is_basis_exponent(params) {
        return Err(Error::NotBasisIndex(format!(
            "{a} fails the basis conditions for {params}"
        )));
    }
    let dual = params.dual();
    let k = a.height();
    let n = a.width();
    // orders[s][m] = index of the column in m-th place when sorting by
    // rows s..k; the empty key at s = k leaves the identity order.
    let mut orders: Vec<Vec<usize>> = Vec::with_capacity(k + 1);
    for s in 0..=k {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&x, &y| {
            for row in &a.rows[s..] {
                match row[y].cmp(&row[x]) {
                    std::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            std::cmp::Ordering::Equal
        });
        orders.push(idx);
    }
    debug_assert_eq!(orders[0], (0..n).collect::<Vec<_>>());
    let mut pairs = Vec::with_capacity(k);
    for s in 0..k {
        let mut inv_next = vec![0usize; n];
        for (m, &j) in orders[s + 1].iter().enumerate() {
            inv_next[j] = m;
        }
        let perm: Vec<usize> = orders[s].iter().map(|&j| inv_next[j]).collect();
        let lambda_vec: Vec<usize> = orders[s].iter().map(|&j| a.rows[s][j]).collect();
        let lambda = Partition::try_decreasing(lambda_vec.clone())?;
        let colors: Vec<i64> = lambda_vec.iter().map(|&a| a as i64).collect();
        let g = Element::canonicalize(dual, perm, &colors)?;
        debug_assert!(is_compatible(&lambda, &g), "{a} stage {s}");
        pairs.push(CompatiblePair { g, lambda });
    }
    Ok(pairs)
}

/// The exact orbit sum of a monomial under the diagonal group action:
/// |G| times the average, with coefficients in the cyclotomic integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAverage {
    /// Exponent matrix of each monomial in the support, with its
    /// coefficient.
    pub terms: BTreeMap<Vec<Vec<usize>>, Cyclotomic>,
}

impl MonomialAverage {
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(Cyclotomic::is_zero)
    }
}

/// Averages the monomial with the given exponent rows over the diagonal
/// copy of the group (times |G|, to stay in exact integers).  The rows
/// need not be in the k-partite normal form.
///
/// An element [sigma; c] scales the monomial by the r-th root of unity
/// raised to the inner product of c with the column sums and permutes the
/// columns by sigma.  The scalar sum factors out of the permutation sum,
/// so colors are aggregated by exponent residue first.
pub fn group_average(rows: &[Vec<usize>], params: GroupParams) -> Result<MonomialAverage> {
    if rows.is_empty() || rows.iter().any(|row| row.len() != params.n) {
        return Err(Error::ParamMismatch(format!(
            "exponent matrix must have rows of length {}",
            params.n
        )));
    }
    if let Some(bad) = rows
        .iter()
        .map(|row| row.iter().sum::<usize>())
        .find(|s| s % params.q != 0)
    {
        return Err(Error::Malformed(format!(
            "row sum {bad} is not divisible by q = {}; the monomial is not in the ambient algebra",
            params.q
        )));
    }
    let (r, p, q, n) = (params.r, params.p, params.q, params.n);
    let mut sums = vec![0usize; n];
    for row in rows {
        for (s, &a) in sums.iter_mut().zip(row) {
            *s += a;
        }
    }
    // Sum the root-of-unity factor over one full set of color vectors with
    // color sum divisible by p; every scalar coset contributes q equal
    // terms, so dividing the tallies by q yields the sum over the quotient.
    let mut tallies = vec![0u64; r];
    let mut colors = vec![0usize; n];
    loop {
        if colors.iter().sum::<usize>() % p == 0 {
            let e = colors
                .iter()
                .zip(&sums)
                .map(|(&c, &s)| c * s)
                .sum::<usize>()
                % r;
            tallies[e] += 1;
        }
        let mut pos = n;
        for i in (0..n).rev() {
            colors[i] += 1;
            if colors[i] < r {
                pos = i;
                break;
            }
            colors[i] = 0;
        }
        if pos == n {
            break;
        }
    }
    let mut scalar = Cyclotomic::zero(r);
    for (e, &t) in tallies.iter().enumerate() {
        debug_assert_eq!(t % q as u64, 0);
        scalar = scalar.add(&Cyclotomic::root_power(r, e as i64).scale((t / q as u64) as i64));
    }
    // Group the permutation images of the matrix and attach the scalar.
    let mut terms: BTreeMap<Vec<Vec<usize>>, Cyclotomic> = BTreeMap::new();
    let mut bucket: BTreeMap<Vec<Vec<usize>>, i64> = BTreeMap::new();
    for sigma in permutations(n) {
        let mut image = vec![vec![0usize; n]; rows.len()];
        for (target_row, source_row) in image.iter_mut().zip(rows) {
            for j in 0..n {
                target_row[sigma[j]] = source_row[j];
            }
        }
        *bucket.entry(image).or_insert(0) += 1;
    }
    for (image, count) in bucket {
        let coeff = scalar.scale(count);
        if !coeff.is_zero() {
            terms.insert(image, coeff);
        }
    }
    Ok(MonomialAverage { terms })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

enum ColumnBound {
    MaxEntry(usize),
    TotalDegree(usize),
}

/// Visits every basis exponent matrix within the bound, in parallel over
/// the first column.
fn for_each_basis_exponent<F>(params: GroupParams, k: usize, bound: &ColumnBound, f: &F)
where
    F: Fn(&KPartiteMatrix) + Sync,
{
    let n = params.n;
    // All candidate columns, sorted descending lexicographically, so that
    // weakly increasing index sequences are exactly the k-partite
    // matrices.
    let cap = match bound {
        ColumnBound::MaxEntry(e) => *e,
        ColumnBound::TotalDegree(d) => *d,
    };
    let mut columns: Vec<Vec<usize>> = Vec::new();
    let mut col = vec![0usize; k];
    loop {
        match bound {
            ColumnBound::MaxEntry(_) => columns.push(col.clone()),
            ColumnBound::TotalDegree(d) => {
                if col.iter().sum::<usize>() <= *d {
                    columns.push(col.clone());
                }
            }
        }
        let mut pos = k;
        for i in (0..k).rev() {
            col[i] += 1;
            if col[i] <= cap {
                pos = i;
                break;
            }
            col[i] = 0;
        }
        if pos == k {
            break;
        }
    }
    columns.sort_by(|a, b| b.cmp(a));
    let budget = match bound {
        ColumnBound::MaxEntry(_) => usize::MAX,
        ColumnBound::TotalDegree(d) => *d,
    };
    (0..columns.len()).into_par_iter().for_each(|first| {
        let spent = columns[first].iter().sum::<usize>();
        if spent > budget {
            return;
        }
        let mut picks = vec![first];
        rec(params, &columns, budget - spent, n, &mut picks, f);
    });

    fn rec<F>(
        params: GroupParams,
        columns: &[Vec<usize>],
        budget: usize,
        n: usize,
        picks: &mut Vec<usize>,
        f: &F,
    ) where
        F: Fn(&KPartiteMatrix) + Sync,
    {
        if picks.len() == n {
            let k = columns[0].len();
            let rows: Vec<Vec<usize>> = (0..k)
                .map(|i| picks.iter().map(|&c| columns[c][i]).collect())
                .collect();
            let m = KPartiteMatrix { rows };
            if m.is_basis_exponent(params) {
                f(&m);
            }
            return;
        }
        let from = *picks.last().unwrap();
        for next in from..columns.len() {
            let cost = columns[next].iter().sum::<usize>();
            if cost > budget {
                continue;
            }
            picks.push(next);
            rec(params, columns, budget - cost, n, picks, f);
            picks.pop();
        }
    }
}

/// All basis exponent matrices with entries at most `max_entry`, sorted by
/// their flattened row-major reading.
pub fn basis_exponents_by_entry(
    params: GroupParams,
    k: usize,
    max_entry: usize,
) -> Vec<KPartiteMatrix> {
    let found = std::sync::Mutex::new(Vec::new());
    for_each_basis_exponent(params, k, &ColumnBound::MaxEntry(max_entry), &|m| {
        found.lock().unwrap().push(m.clone());
    });
    let mut out = found.into_inner().unwrap();
    out.sort_by(|a, b| a.flattened().cmp(&b.flattened()));
    out
}

/// Streaming version of `basis_exponents_by_entry` for large searches; the
/// callback runs on multiple threads.
pub fn for_each_basis_exponent_by_entry<F>(params: GroupParams, k: usize, max_entry: usize, f: F)
where
    F: Fn(&KPartiteMatrix) + Sync,
{
    for_each_basis_exponent(params, k, &ColumnBound::MaxEntry(max_entry), &f);
}

/// All basis exponent matrices of total degree at most `bound`, sorted by
/// their flattened row-major reading.
pub fn basis_exponents_by_degree(
    params: GroupParams,
    k: usize,
    bound: usize,
) -> Vec<KPartiteMatrix> {
    let found = std::sync::Mutex::new(Vec::new());
    for_each_basis_exponent(params, k, &ColumnBound::TotalDegree(bound), &|m| {
        found.lock().unwrap().push(m.clone());
    });
    let mut out = found.into_inner().unwrap();
    out.sort_by(|a, b| a.flattened().cmp(&b.flattened()));
    out
}

/// Multipartition Hilbert series of the diagonal invariant algebra up to
/// total degree `bound`: one term per basis exponent matrix.
pub fn diagonal_invariant_hilbert(
    params: GroupParams,
    k: usize,
    bound: usize,
) -> Result<PartitionSeries> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1 alphabets".into()));
    }
    let mut series = PartitionSeries::zero(k);
    for m in basis_exponents_by_degree(params, k, bound) {
        series.add_term(m.exponent_partitions(), 1);
    }
    Ok(series)
}

/// Multipartition Hilbert series of the tensor invariant algebra up to
/// total degree `bound`: the product over alphabets of the generating
/// function of the invariant partition family with sizes divisible by q.
pub fn tensor_invariant_hilbert(
    params: GroupParams,
    k: usize,
    bound: usize,
) -> Result<PartitionSeries> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1 alphabets".into()));
    }
    let lambdas: Vec<Partition> = par_rpn_enumerate(params.r, params.p, params.n, bound)
        .into_iter()
        .filter(|l| l.size() % params.q == 0)
        .collect();
    let mut series = PartitionSeries::one(k);
    for i in 0..k {
        let mut factor = PartitionSeries::zero(k);
        for lambda in &lambdas {
            let mut exps = vec![Partition::empty(); k];
            exps[i] = lambda.clone();
            factor.add_term(exps, 1);
        }
        series = series.mul_truncated(&factor, bound);
    }
    Ok(series)
}

/// Sum of the multipartition degrees of the module basis: one term per
/// tuple of dual-group elements with product 1, carrying the descent
/// profiles of the tuple.
pub fn module_basis_hilbert(
    params: GroupParams,
    k: usize,
    bound: usize,
    cap: usize,
) -> Result<PartitionSeries> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1 alphabets".into()));
    }
    let dual = params.dual();
    let order = dual.order();
    let tuples = order.saturating_pow(k as u32 - 1);
    if tuples > cap as u128 {
        return Err(Error::CapExceeded { order: tuples, cap });
    }
    let elements = element_vec(dual, cap)?;
    let profiles: Vec<Partition> = elements
        .iter()
        .map(|g| stat_profile(g).lambda_partition())
        .collect();
    let mut series = PartitionSeries::zero(k);
    let mut pick = vec![0usize; k - 1];
    loop {
        let mut product = Element::identity(dual);
        for &i in &pick {
            product = product.multiply(&elements[i])?;
        }
        let last = product.inverse();
        let mut exps: Vec<Partition> = pick.iter().map(|&i| profiles[i].clone()).collect();
        exps.push(stat_profile(&last).lambda_partition());
        let total: usize = exps.iter().map(|e| e.size()).sum();
        if total <= bound {
            series.add_term(exps, 1);
        }
        let mut pos = k - 1;
        for i in (0..k - 1).rev() {
            pick[i] += 1;
            if pick[i] < elements.len() {
                pos = i;
                break;
            }
            pick[i] = 0;
        }
        if pos == k - 1 {
            break;
        }
    }
    Ok(series)
}

/// Counts the tuples indexing the module basis by direct enumeration; the
/// result is the (k−1)-st power of the group order.
pub fn count_product_one_tuples(params: GroupParams, k: usize, cap: usize) -> Result<u128> {
    if k == 0 {
        return Err(Error::InvalidParams("need k >= 1".into()));
    }
    let dual = params.dual();
    let tuples = dual.order().saturating_pow(k as u32 - 1);
    if tuples > cap as u128 {
        return Err(Error::CapExceeded { order: tuples, cap });
    }
    let elements = element_vec(dual, cap)?;
    let mut count: u128 = 0;
    let mut pick = vec![0usize; k - 1];
    loop {
        let mut product = Element::identity(dual);
        for &i in &pick {
            product = product.multiply(&elements[i])?;
        }
        let last = product.inverse();
        let full = product.multiply(&last)?;
        assert!(full.is_identity());
        count += 1;
        let mut pos = k - 1;
        for i in (0..k.saturating_sub(1)).rev() {
            pick[i] += 1;
            if pick[i] < elements.len() {
                pos = i;
                break;
            }
            pick[i] = 0;
        }
        if pos == k - 1 || k == 1 {
            break;
        }
    }
    Ok(count)
}
