//! The projective reflection groups G(r,p,q,n) and their elements.
//!
//! G(r,p,n) is the group of n x n monomial matrices whose nonzero entries
//! are r-th roots of unity with product an (r/p)-th root of unity; it is
//! encoded combinatorially as pairs [sigma; c] of a permutation and a color
//! vector with color sum divisible by p.  When q | r and pq | rn the scalar
//! subgroup C_q (constant color shifts by r/q) is central in G(r,p,n), and
//! G(r,p,q,n) is the quotient.  An [`Element`] always stores the canonical
//! coset representative: the lexicographically least color vector among the
//! q scalar shifts.
//!
//! Permutations are 0-indexed internally and 1-indexed in every I/O form.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{gcd, residue};

/// The defining parameters (r, p, q, n) with p | r, q | r, pq | rn.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupParams {
    pub r: usize,
    pub p: usize,
    pub q: usize,
    pub n: usize,
}

impl GroupParams {
    pub fn new(r: usize, p: usize, q: usize, n: usize) -> Result<Self> {
        if r == 0 || p == 0 || q == 0 || n == 0 {
            return Err(Error::InvalidParams(
                "all of r, p, q, n must be at least 1".into(),
            ));
        }
        if r % p != 0 {
            return Err(Error::InvalidParams(format!("p = {p} does not divide r = {r}")));
        }
        if r % q != 0 {
            return Err(Error::InvalidParams(format!("q = {q} does not divide r = {r}")));
        }
        if (r * n) % (p * q) != 0 {
            return Err(Error::InvalidParams(format!(
                "pq = {} does not divide rn = {}",
                p * q,
                r * n
            )));
        }
        Ok(GroupParams { r, p, q, n })
    }

    /// Group order r^n n! / (pq).
    pub fn order(&self) -> u128 {
        let mut o: u128 = 1;
        for _ in 0..self.n {
            o = o.saturating_mul(self.r as u128);
        }
        for m in 1..=self.n {
            o = o.saturating_mul(m as u128);
        }
        o / (self.p as u128 * self.q as u128)
    }

    /// The dual group G(r,q,p,n), swapping the subgroup and quotient roles.
    pub fn dual(&self) -> GroupParams {
        GroupParams { r: self.r, p: self.q, q: self.p, n: self.n }
    }

    /// Color increment of the scalar generator, r/q.
    pub fn shift_step(&self) -> usize {
        self.r / self.q
    }

    /// Number of scalar classes in G(r,p,q,n): GCD(rn/(pq), r/q).
    pub fn scalar_count(&self) -> usize {
        gcd(self.r * self.n / (self.p * self.q), self.r / self.q)
    }

    /// Modulus for the residual color sum: GCD(r, rn/q).
    pub fn color_sum_modulus(&self) -> usize {
        gcd(self.r, self.r * self.n / self.q)
    }

    /// Whether G(r,p,q,n) and its dual are isomorphic as abstract groups.
    ///
    /// The criterion compares GCD(rn/pq, r/q) with GCD(rn/pq, r/p), i.e. the
    /// scalar class counts on the two sides.  It is valid for every rank
    /// except n = 2, where no clean criterion exists and the call errors.
    pub fn is_isomorphic_to_dual(&self) -> Result<bool> {
        if self.n == 2 {
            return Err(Error::RankTwo);
        }
        Ok(self.scalar_count() == self.dual().scalar_count())
    }

    /// Renders as the flag form "r,p,q,n".
    pub fn to_flag(&self) -> String {
        format!("{},{},{},{}", self.r, self.p, self.q, self.n)
    }

    /// Parses the flag form "r,p,q,n".
    pub fn parse_flag(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Usage(format!(
                "expected parameters as r,p,q,n; got {s:?}"
            )));
        }
        let vals: Vec<usize> = parts
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Usage(format!("bad integer {t:?} in parameters")))
            })
            .collect::<Result<_>>()?;
        GroupParams::new(vals[0], vals[1], vals[2], vals[3])
    }
}

impl std::fmt::Display for GroupParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G({},{},{},{})", self.r, self.p, self.q, self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    sigma: Vec<usize>,
    colors: Vec<i64>,
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = ElementJson {
            sigma: self.sigma_one_based(),
            colors: self.colors.iter().map(|&c| c as i64).collect(),
        };
        json.serialize(serializer)
    }
}

/// An element of G(r,p,q,n) in canonical form.
///
/// `perm[i]` is the 0-indexed image of position i; `colors[i]` is the color
/// at position i of the canonical coset representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    params: GroupParams,
    perm: Vec<usize>,
    colors: Vec<usize>,
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Malformed(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &image in perm {
        if image >= n || seen[image] {
            return Err(Error::Malformed(format!("not a permutation: {perm:?}")));
        }
        seen[image] = true;
    }
    Ok(())
}

/// Lexicographic comparison of `colors` against its shift by `delta`.
fn shift_is_smaller(colors: &[usize], delta: usize, r: usize) -> bool {
    for &c in colors {
        let shifted = (c + delta) % r;
        match shifted.cmp(&c) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

impl Element {
    /// Builds the canonical representative of the class of [perm; colors].
    ///
    /// Colors may be arbitrary integers; they are reduced mod r first.  The
    /// reduced sum must be divisible by p.
    pub fn canonicalize(params: GroupParams, perm: Vec<usize>, colors: &[i64]) -> Result<Element> {
        check_permutation(&perm, params.n)?;
        if colors.len() != params.n {
            return Err(Error::Malformed(format!(
                "color vector has length {}, expected {}",
                colors.len(),
                params.n
            )));
        }
        let mut reduced: Vec<usize> = colors.iter().map(|&c| residue(c, params.r)).collect();
        let sum: usize = reduced.iter().sum();
        if sum % params.p != 0 {
            return Err(Error::ColorSum { sum, p: params.p });
        }
        let step = params.shift_step();
        let mut best_shift = 0;
        for j in 1..params.q {
            let delta_j = (j * step) % params.r;
            let delta_best = (best_shift * step) % params.r;
            let mut ord = std::cmp::Ordering::Equal;
            for &c in &reduced {
                ord = ((c + delta_j) % params.r).cmp(&((c + delta_best) % params.r));
                if ord != std::cmp::Ordering::Equal {
                    break;
                }
            }
            if ord == std::cmp::Ordering::Less {
                best_shift = j;
            }
        }
        if best_shift != 0 {
            let delta = (best_shift * step) % params.r;
            for c in &mut reduced {
                *c = (*c + delta) % params.r;
            }
        }
        Ok(Element { params, perm, colors: reduced })
    }

    /// Parses 1-indexed sigma images plus colors.
    pub fn from_one_based(params: GroupParams, sigma: &[usize], colors: &[i64]) -> Result<Element> {
        if sigma.iter().any(|&s| s == 0) {
            return Err(Error::Malformed("sigma images are 1-indexed".into()));
        }
        let perm: Vec<usize> = sigma.iter().map(|&s| s - 1).collect();
        Element::canonicalize(params, perm, colors)
    }

    pub fn identity(params: GroupParams) -> Element {
        Element {
            params,
            perm: (0..params.n).collect(),
            colors: vec![0; params.n],
        }
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    /// 0-indexed permutation images.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// 1-indexed permutation images, as used in I/O.
    pub fn sigma_one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|&i| i + 1).collect()
    }

    /// Canonical colors, reduced mod r.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &s)| i == s)
            && self.colors.iter().all(|&c| c == 0)
    }

    /// Left-to-right product: the permutation acts first through `self`,
    /// then through `other`.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if self.params != other.params {
            return Err(Error::ParamMismatch(format!(
                "{} vs {}",
                self.params, other.params
            )));
        }
        let n = self.params.n;
        let mut perm = vec![0; n];
        let mut colors = vec![0i64; n];
        for i in 0..n {
            perm[i] = other.perm[self.perm[i]];
            colors[i] = (self.colors[i] + other.colors[self.perm[i]]) as i64;
        }
        Element::canonicalize(self.params, perm, &colors)
    }

    pub fn inverse(&self) -> Element {
        let n = self.params.n;
        let mut perm = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
        }
        let colors: Vec<i64> = (0..n).map(|j| -(self.colors[perm[j]] as i64)).collect();
        Element::canonicalize(self.params, perm, &colors)
            .expect("inverse of a valid element is valid")
    }

    /// Entrywise complex conjugation of the monomial matrix: negates every
    /// color.
    pub fn conjugate(&self) -> Element {
        let colors: Vec<i64> = self.colors.iter().map(|&c| -(c as i64)).collect();
        Element::canonicalize(self.params, self.perm.clone(), &colors)
            .expect("conjugate of a valid element is valid")
    }

    /// The Galois twist: multiplies every color by d, for d invertible mod r.
    pub fn galois_act(&self, d: usize) -> Result<Element> {
        if gcd(d % self.params.r, self.params.r) != 1 {
            return Err(Error::NotCoprime { d, r: self.params.r });
        }
        let colors: Vec<i64> = self.colors.iter().map(|&c| (c * d) as i64).collect();
        Ok(Element::canonicalize(self.params, self.perm.clone(), &colors)
            .expect("twist of a valid element is valid"))
    }

    /// Residual color sum, well defined modulo GCD(r, rn/q).
    pub fn color_sum(&self) -> usize {
        let m = self.params.color_sum_modulus();
        self.colors.iter().sum::<usize>() % m
    }

    /// All representatives of this class lying in G(r,p',n), as elements of
    /// G(r,p',1,n).  Requires p' | r and GCD(rn/q, p') | p.
    pub fn liftings(&self, p_prime: usize) -> Result<Vec<Element>> {
        let GroupParams { r, p, q, n } = self.params;
        if p_prime == 0 || r % p_prime != 0 {
            return Err(Error::Lift(format!("p' = {p_prime} does not divide r = {r}")));
        }
        let d = gcd(r * n / q, p_prime);
        if p % d != 0 {
            return Err(Error::Lift(format!(
                "GCD(rn/q, p') = {d} does not divide p = {p}"
            )));
        }
        let target = GroupParams::new(r, p_prime, 1, n)?;
        let step = self.params.shift_step();
        let mut out = Vec::new();
        for j in 0..q {
            let shifted: Vec<i64> = self
                .colors
                .iter()
                .map(|&c| ((c + j * step) % r) as i64)
                .collect();
            let sum: i64 = shifted.iter().sum();
            if (sum as usize) % p_prime == 0 {
                out.push(Element::canonicalize(target, self.perm.clone(), &shifted)?);
            }
        }
        Ok(out)
    }

    /// Cycle decomposition as (length, color sum) pairs; only meaningful
    /// when colors are globally defined, i.e. q = 1.
    pub fn cycles(&self) -> Result<Vec<(usize, usize)>> {
        if self.params.q != 1 {
            return Err(Error::ParamMismatch(
                "cycle colors are defined only for q = 1".into(),
            ));
        }
        let n = self.params.n;
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut color = 0;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                color += self.colors[i];
                i = self.perm[i];
                if i == start {
                    break;
                }
            }
            cycles.push((len, color % self.params.r));
        }
        Ok(cycles)
    }

    /// Text form "s1 s2 ... sn; c1 c2 ... cn" with 1-indexed sigma.
    pub fn to_text(&self) -> String {
        format!(
            "{}; {}",
            self.sigma_one_based().iter().join(" "),
            self.colors.iter().join(" ")
        )
    }

    pub fn parse_text(params: GroupParams, s: &str) -> Result<Element> {
        let (sigma_part, color_part) = s
            .split_once(';')
            .ok_or_else(|| Error::Malformed(format!("expected \"sigma; colors\", got {s:?}")))?;
        let sigma: Vec<usize> = sigma_part
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad sigma entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        let colors: Vec<i64> = color_part
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Malformed(format!("bad color entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        Element::from_one_based(params, &sigma, &colors)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementJson {
            sigma: self.sigma_one_based(),
            colors: self.colors.iter().map(|&c| c as i64).collect(),
        })
        .unwrap()
    }

    pub fn from_json(params: GroupParams, v: &serde_json::Value) -> Result<Element> {
        let ej: ElementJson = serde_json::from_value(v.clone())?;
        Element::from_one_based(params, &ej.sigma, &ej.colors)
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

/// Lazily enumerates all elements of G(r,p,q,n) in canonical form, failing
/// up front if the order exceeds `cap`.
///
/// The iteration ranges over permutations in lexicographic order and, per
/// permutation, over color classes; each class is emitted exactly once via
/// its canonical representative.
pub fn elements(params: GroupParams, cap: usize) -> Result<impl Iterator<Item = Element>> {
    let order = params.order();
    if order > cap as u128 {
        return Err(Error::CapExceeded { order, cap });
    }
    let GroupParams { r, p, q, n } = params;
    let step = params.shift_step();
    // Colors are encoded as an index below r^(n-1) * (r/p): the first n-1
    // colors are free digits base r, the last is forced mod p.
    let free_codes: usize = r.pow((n - 1) as u32) * (r / p);
    let perms = (0..n).permutations(n);
    Ok(perms.flat_map(move |perm| {
        (0..free_codes).filter_map({
            let perm = perm.clone();
            move |code| {
                let mut colors = vec![0usize; n];
                let mut rest = code;
                let mut sum = 0usize;
                for slot in colors.iter_mut().take(n - 1) {
                    *slot = rest % r;
                    sum += *slot;
                    rest /= r;
                }
                let forced = (p - sum % p) % p;
                colors[n - 1] = forced + rest * p;
                debug_assert!(colors[n - 1] < r);
                // Keep only canonical representatives.
                for j in 1..q {
                    if shift_is_smaller(&colors, (j * step) % r, r) {
                        return None;
                    }
                }
                Some(Element { params, perm: perm.clone(), colors })
            }
        })
    }))
}

/// Convenience: the full element list as a vector.
pub fn element_vec(params: GroupParams, cap: usize) -> Result<Vec<Element>> {
    Ok(elements(params, cap)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic;
    use crate::DEFAULT_ENUM_CAP;

    fn params(r: usize, p: usize, q: usize, n: usize) -> GroupParams {
        GroupParams::new(r, p, q, n).unwrap()
    }

    #[test]
    fn validation_accepts_and_rejects() {
        assert_eq!(params(6, 2, 3, 8).order(), 1_679_616u128 * 40_320 / 6);
        assert!(GroupParams::new(1, 1, 1, 3).is_ok());
        // pq = 8 does not divide rn = 4.
        let err = GroupParams::new(4, 2, 4, 1).unwrap_err();
        assert!(matches!(err, Error::InvalidParams(_)));
        assert!(GroupParams::new(4, 3, 1, 2).is_err());
        assert!(GroupParams::new(0, 1, 1, 1).is_err());
        assert!(GroupParams::new(6, 2, 3, 1).is_ok()); // pq = 6 divides rn = 6
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(params(1, 1, 1, 3).order(), 6);
        assert_eq!(params(2, 1, 1, 2).order(), 8);
        assert_eq!(params(2, 2, 1, 2).order(), 4);
        assert_eq!(params(2, 1, 2, 2).order(), 4);
        assert_eq!(params(3, 1, 3, 3).order(), 54);
    }

    #[test]
    fn canonical_form_picks_lex_least_shift() {
        // In G(2,1,2,2) the class of [12; 1,1] contains (1,1) and (0,0).
        let g = Element::canonicalize(params(2, 1, 2, 2), vec![0, 1], &[1, 1]).unwrap();
        assert_eq!(g.colors(), &[0, 0]);
        // In G(4,1,2,2) the class of [12; 3,1] contains (3,1) and (1,3).
        let g = Element::canonicalize(params(4, 1, 2, 2), vec![0, 1], &[3, 1]).unwrap();
        assert_eq!(g.colors(), &[1, 3]);
        // Colors reduce mod r before anything else.
        let g = Element::canonicalize(params(4, 1, 2, 2), vec![0, 1], &[7, -3]).unwrap();
        assert_eq!(g.colors(), &[1, 3]);
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        assert!(matches!(
            Element::canonicalize(params(2, 2, 1, 2), vec![0, 1], &[1, 0]),
            Err(Error::ColorSum { sum: 1, p: 2 })
        ));
        assert!(Element::canonicalize(params(2, 1, 1, 2), vec![0, 0], &[0, 0]).is_err());
        assert!(Element::canonicalize(params(2, 1, 1, 2), vec![0, 2], &[0, 0]).is_err());
        assert!(Element::canonicalize(params(2, 1, 1, 2), vec![0], &[0, 0]).is_err());
    }

    #[test]
    fn worked_product_and_inverse() {
        let p2 = params(2, 1, 1, 2);
        let a = Element::parse_text(p2, "2 1; 0 1").unwrap();
        let b = Element::parse_text(p2, "2 1; 1 0").unwrap();
        // a then b: permutation composes to the identity; colors add along a.
        let ab = a.multiply(&b).unwrap();
        assert!(ab.is_identity());
        assert_eq!(a.inverse(), b);
        assert_eq!(b.inverse(), a);
        // Identity behaves.
        let e = Element::identity(p2);
        assert_eq!(e.multiply(&a).unwrap(), a);
        assert_eq!(a.multiply(&e).unwrap(), a);
    }

    /// Monomial-matrix model over Z[zeta_r]: row i has zeta^(c_i) in column
    /// sigma(i).  Multiplying matrices must match `Element::multiply`.
    fn matrix_of(g: &Element) -> Vec<Vec<Cyclotomic>> {
        let n = g.params().n;
        let r = g.params().r;
        let mut m = vec![vec![Cyclotomic::zero(r); n]; n];
        for i in 0..n {
            m[i][g.perm()[i]] = Cyclotomic::root_power(r, g.colors()[i] as i64);
        }
        m
    }

    fn matrix_mul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>], r: usize) -> Vec<Vec<Cyclotomic>> {
        let n = a.len();
        let mut out = vec![vec![Cyclotomic::zero(r); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero(r);
                for (k, row) in b.iter().enumerate() {
                    acc = acc.add(&a[i][k].mul(&row[j]));
                }
                out[i][j] = acc;
            }
        }
        out
    }

    #[test]
    fn multiplication_matches_monomial_matrices() {
        // Wreath case (q = 1) so classes are single matrices.
        let pr = params(4, 2, 1, 2);
        let els = element_vec(pr, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(els.len() as u128, pr.order());
        for a in &els {
            for b in &els {
                let ab = a.multiply(b).unwrap();
                assert_eq!(
                    matrix_of(&ab),
                    matrix_mul(&matrix_of(a), &matrix_of(b), 4),
                    "{a} * {b}"
                );
            }
        }
    }

    #[test]
    fn group_axioms_on_small_quotients() {
        for pr in [
            params(2, 1, 2, 2),
            params(2, 2, 1, 2),
            params(4, 2, 2, 2),
            params(3, 1, 3, 3),
            params(6, 2, 3, 1),
        ] {
            let els = element_vec(pr, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(els.len() as u128, pr.order(), "{pr}");
            let e = Element::identity(pr);
            assert!(els.contains(&e), "{pr} contains identity");
            for a in &els {
                // Closure and canonical form: products land in the list.
                let inv = a.inverse();
                assert!(els.contains(&inv));
                assert!(a.multiply(&inv).unwrap().is_identity());
                assert!(inv.multiply(a).unwrap().is_identity());
                for b in &els {
                    assert!(els.contains(&a.multiply(b).unwrap()));
                }
            }
            // Associativity, spot checked on a stride of triples.
            let m = els.len();
            for idx in 0..(m * m).min(200) {
                let a = &els[idx % m];
                let b = &els[(idx * 7 + 1) % m];
                let c = &els[(idx * 13 + 2) % m];
                assert_eq!(
                    a.multiply(b).unwrap().multiply(c).unwrap(),
                    a.multiply(&b.multiply(c).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn enumeration_counts_match_order() {
        for pr in [
            params(1, 1, 1, 4),
            params(2, 1, 1, 3),
            params(4, 1, 2, 2),
            params(4, 4, 1, 2),
            params(6, 1, 6, 2),
            params(6, 3, 2, 2),
        ] {
            let els = element_vec(pr, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(els.len() as u128, pr.order(), "{pr}");
            // All canonical, all distinct.
            let set: std::collections::HashSet<_> = els.iter().cloned().collect();
            assert_eq!(set.len(), els.len());
        }
        assert!(matches!(
            elements(params(6, 1, 1, 8), 1000).err().unwrap(),
            Error::CapExceeded { .. }
        ));
    }

    #[test]
    fn liftings_counts_and_errors() {
        // G(4,2,2,2): both representatives of any class have even sum, so
        // every element lifts twice into G(4,2,2) = G(4,2,1,2).
        let pr = params(4, 2, 2, 2);
        for g in element_vec(pr, DEFAULT_ENUM_CAP).unwrap() {
            let lifts = g.liftings(2).unwrap();
            assert_eq!(lifts.len(), 2, "{g}");
            for l in lifts {
                assert_eq!(l.params(), params(4, 2, 1, 2));
                assert_eq!(l.perm(), g.perm());
            }
        }
        // d = GCD(rn/q, p') = GCD(4, 4) = 4 does not divide p = 2: error.
        let g = Element::identity(pr);
        assert!(g.liftings(4).is_err());
        assert!(g.liftings(3).is_err()); // p' must divide r
    }

    #[test]
    fn lifting_count_formula_small_grid() {
        // |liftings(g, p')| = q * GCD(rn/q, p') / p' whenever the
        // preconditions hold, independent of g.
        for r in 1..=6usize {
            for p in 1..=r {
                if r % p != 0 {
                    continue;
                }
                for q in 1..=r {
                    if r % q != 0 {
                        continue;
                    }
                    for n in 1..=3usize {
                        let Ok(pr) = GroupParams::new(r, p, q, n) else { continue };
                        if pr.order() > 3000 {
                            continue;
                        }
                        for p_prime in (1..=r).filter(|d| r % d == 0) {
                            let d = gcd(r * n / q, p_prime);
                            if p % d != 0 {
                                continue;
                            }
                            let expected = q * d / p_prime;
                            for g in elements(pr, DEFAULT_ENUM_CAP).unwrap() {
                                assert_eq!(
                                    g.liftings(p_prime).unwrap().len(),
                                    expected,
                                    "{pr}, p' = {p_prime}, g = {g}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn duality_and_scalars() {
        assert_eq!(params(6, 2, 3, 8).dual(), params(6, 3, 2, 8));
        assert_eq!(params(2, 2, 1, 4).scalar_count(), 2);
        assert_eq!(params(2, 2, 1, 3).scalar_count(), 1);
        assert_eq!(params(2, 1, 2, 3).scalar_count(), 1);
        // D_n duality: G(2,2,1,n) vs G(2,1,2,n) are isomorphic iff n is odd.
        for n in [1, 3, 4, 5, 6, 7] {
            let d = params(2, 2, 1, n);
            assert_eq!(d.is_isomorphic_to_dual().unwrap(), n % 2 == 1, "n = {n}");
        }
        assert!(params(2, 2, 1, 2).is_isomorphic_to_dual().is_err());
        // The running example G(6,2,3,8) is not isomorphic to its dual:
        // GCD(rn/pq, r/q) = GCD(8, 2) = 2 vs GCD(8, 3) = 1.
        assert!(!params(6, 2, 3, 8).is_isomorphic_to_dual().unwrap());
    }

    #[test]
    fn scalar_count_matches_enumeration() {
        for pr in [
            params(2, 1, 1, 3),
            params(2, 2, 1, 4),
            params(2, 2, 1, 3),
            params(4, 2, 2, 2),
            params(4, 1, 2, 3),
            params(6, 2, 3, 1),
            params(6, 1, 3, 2),
        ] {
            let scalars = element_vec(pr, DEFAULT_ENUM_CAP)
                .unwrap()
                .into_iter()
                .filter(|g| {
                    g.perm().iter().enumerate().all(|(i, &s)| i == s)
                        && g.colors().windows(2).all(|w| w[0] == w[1])
                })
                .count();
            assert_eq!(scalars, pr.scalar_count(), "{pr}");
        }
    }

    #[test]
    fn color_sum_is_class_invariant() {
        let pr = params(6, 2, 3, 8);
        let g = Element::parse_text(pr, "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2").unwrap();
        // GCD(r, rn/q) = GCD(6, 16) = 2, and the sum 26 is even.
        assert_eq!(pr.color_sum_modulus(), 2);
        assert_eq!(g.color_sum(), 0);
        // Any two liftings differ by multiples of rn/q in total color, so
        // the residual sum is invariant.
        for pr in [params(4, 1, 2, 3), params(6, 1, 3, 2), params(4, 2, 2, 2)] {
            let m = pr.color_sum_modulus();
            for g in element_vec(pr, DEFAULT_ENUM_CAP).unwrap() {
                let direct: usize = g.colors().iter().sum();
                let step = pr.shift_step();
                for j in 0..pr.q {
                    let shifted: usize = g
                        .colors()
                        .iter()
                        .map(|&c| (c + j * step) % pr.r)
                        .sum();
                    assert_eq!(shifted % m, direct % m, "{g} shift {j}");
                }
            }
        }
    }

    #[test]
    fn conjugation_and_galois_twist() {
        let pr = params(4, 1, 1, 3);
        let g = Element::parse_text(pr, "2 3 1; 1 2 3").unwrap();
        assert_eq!(g.conjugate().colors(), &[3, 2, 1]);
        assert_eq!(g.conjugate().conjugate(), g);
        // Galois by 3 = -1 mod 4 coincides with conjugation.
        assert_eq!(g.galois_act(3).unwrap(), g.conjugate());
        assert_eq!(g.galois_act(1).unwrap(), g);
        assert!(g.galois_act(2).is_err());
        // The twist is a group automorphism.
        let els = element_vec(pr, DEFAULT_ENUM_CAP).unwrap();
        for a in els.iter().take(20) {
            for b in els.iter().take(20) {
                assert_eq!(
                    a.multiply(b).unwrap().galois_act(3).unwrap(),
                    a.galois_act(3).unwrap().multiply(&b.galois_act(3).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let pr = params(6, 2, 3, 8);
        let g = Element::parse_text(pr, "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2").unwrap();
        // The canonical representative shifts colors by 4 = 2 * (r/q).
        assert_eq!(g.colors(), &[0, 1, 1, 3, 5, 5, 1, 0]);
        assert_eq!(g.to_text(), "2 7 6 4 8 1 5 3; 0 1 1 3 5 5 1 0");
        let back = Element::parse_text(pr, &g.to_text()).unwrap();
        assert_eq!(back, g);
        let j = g.to_json();
        assert_eq!(Element::from_json(pr, &j).unwrap(), g);
        assert_eq!(j["sigma"][0], 2);
        // Rejects malformed text.
        assert!(Element::parse_text(pr, "1 2; 0").is_err());
        assert!(Element::parse_text(pr, "no semicolon").is_err());
    }
}
