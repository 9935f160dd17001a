//! Polynomial containers: univariate integer polynomials and formal series
//! whose exponents are tuples of partitions.
//!
//! A `PartitionSeries` models a polynomial in k alphabets of n variables
//! each, where every monomial that occurs has a weakly decreasing exponent
//! vector in each alphabet.  Such monomials multiply by componentwise
//! addition of exponent vectors, which keeps them weakly decreasing, so the
//! partition tuples form honest exponents.  Terms live in a `BTreeMap`, so
//! iteration (and serialization) order is canonical.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::partitions::Partition;

/// Dense univariate polynomial with integer coefficients and no trailing
/// zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn term(coef: i64, exp: usize) -> Self {
        if coef == 0 {
            return Poly::zero();
        }
        let mut v = vec![0; exp + 1];
        v[exp] = coef;
        Poly(v)
    }

    /// Coefficient array, index = exponent.
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.0.get(exp).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_assign_term(&mut self, coef: i64, exp: usize) {
        if coef == 0 {
            return;
        }
        if self.0.len() <= exp {
            self.0.resize(exp + 1, 0);
        }
        self.0[exp] += coef;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut v = vec![0i64; self.0.len().max(other.0.len())];
        for (i, &c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, &c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        Poly::from_coeffs(v)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::from_coeffs(v)
    }

    /// Truncates to exponents at most `bound`.
    pub fn truncate(&self, bound: usize) -> Poly {
        Poly::from_coeffs(self.0.iter().copied().take(bound + 1).collect())
    }

    /// The q-divisible section: keeps only exponents divisible by q.
    pub fn section_mod(&self, q: usize) -> Poly {
        Poly::from_coeffs(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % q == 0 { c } else { 0 })
                .collect(),
        )
    }

    /// The t-analogue [m]_t = 1 + t + ... + t^(m-1).
    pub fn bracket(m: usize) -> Poly {
        Poly(vec![1; m])
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (exp, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (mag, exp) {
                (m, 0) => m.to_string(),
                (1, 1) => "t".to_string(),
                (m, 1) => format!("{m}*t"),
                (1, e) => format!("t^{e}"),
                (m, e) => format!("{m}*t^{e}"),
            };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

/// One term of a `PartitionSeries` in serialized form.
#[derive(Serialize)]
struct SeriesTerm<'a> {
    exps: &'a [Partition],
    coef: i64,
}

/// Integer formal series indexed by k-tuples of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSeries {
    k: usize,
    terms: BTreeMap<Vec<Partition>, i64>,
}

impl PartitionSeries {
    pub fn zero(k: usize) -> Self {
        PartitionSeries { k, terms: BTreeMap::new() }
    }

    pub fn one(k: usize) -> Self {
        let mut s = Self::zero(k);
        s.add_term(vec![Partition::empty(); k], 1);
        s
    }

    pub fn alphabets(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: Vec<Partition>, coef: i64) {
        assert_eq!(exps.len(), self.k, "term arity mismatch");
        if coef == 0 {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    pub fn coeff(&self, exps: &[Partition]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    fn term_degree(exps: &[Partition]) -> usize {
        exps.iter().map(|p| p.size()).sum()
    }

    pub fn add(&self, other: &PartitionSeries) -> PartitionSeries {
        assert_eq!(self.k, other.k);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, by: i64) -> PartitionSeries {
        let mut out = PartitionSeries::zero(self.k);
        if by == 0 {
            return out;
        }
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c * by);
        }
        out
    }

    /// Product truncated to total degree at most `bound` across all
    /// alphabets; exponents add componentwise within each alphabet.
    pub fn mul_truncated(&self, other: &PartitionSeries, bound: usize) -> PartitionSeries {
        assert_eq!(self.k, other.k);
        let mut out = PartitionSeries::zero(self.k);
        for (e1, c1) in self.terms() {
            let d1 = Self::term_degree(e1);
            if d1 > bound {
                continue;
            }
            for (e2, c2) in other.terms() {
                if d1 + Self::term_degree(e2) > bound {
                    continue;
                }
                let exps: Vec<Partition> =
                    e1.iter().zip(e2.iter()).map(|(a, b)| a.add(b)).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }

    /// Drops terms of total degree above `bound`.
    pub fn truncate(&self, bound: usize) -> PartitionSeries {
        let mut out = PartitionSeries::zero(self.k);
        for (e, c) in self.terms() {
            if Self::term_degree(e) <= bound {
                out.add_term(e.clone(), c);
            }
        }
        out
    }

    /// Collapses every alphabet to the single variable t, sending a term to
    /// t raised to its total degree.
    pub fn collapse_total_degree(&self) -> Poly {
        let mut p = Poly::zero();
        for (e, c) in self.terms() {
            p.add_assign_term(c, Self::term_degree(e));
        }
        p
    }

    /// The lexicographically first exponent where the two series differ,
    /// with both coefficients; `None` when the series are equal.
    pub fn first_difference(&self, other: &PartitionSeries) -> Option<(Vec<Partition>, i64, i64)> {
        let mut keys: Vec<&Vec<Partition>> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for key in keys {
            let a = self.coeff(key);
            let b = other.coeff(key);
            if a != b {
                return Some((key.clone(), a, b));
            }
        }
        None
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, &c)| {
                serde_json::to_value(SeriesTerm { exps: e, coef: c }).unwrap()
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_display_matches_expected_format() {
        let p = Poly::from_coeffs(vec![1, 2, 1]);
        assert_eq!(p.to_string(), "1 + 2*t + t^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::term(1, 3).to_string(), "t^3");
        assert_eq!(Poly::term(-2, 1).to_string(), "-2*t");
        assert_eq!(Poly::from_coeffs(vec![0, 1, 0, -1]).to_string(), "t - t^3");
    }

    #[test]
    fn poly_arithmetic() {
        let a = Poly::bracket(3); // 1 + t + t^2
        let b = Poly::bracket(2); // 1 + t
        assert_eq!(a.mul(&b).coeffs(), &[1, 2, 2, 1]);
        assert_eq!(a.add(&b).coeffs(), &[2, 2, 1]);
        assert_eq!(a.mul(&Poly::zero()), Poly::zero());
        assert_eq!(a.truncate(1).coeffs(), &[1, 1]);
        // Section: keep exponents divisible by 2.
        assert_eq!(a.mul(&b).section_mod(2).coeffs(), &[1, 0, 2]);
        assert_eq!(a.section_mod(1), a);
    }

    #[test]
    fn series_multiplication_adds_exponents_componentwise() {
        let mut a = PartitionSeries::zero(2);
        a.add_term(vec![Partition::new(vec![2]), Partition::empty()], 1);
        let mut b = PartitionSeries::zero(2);
        b.add_term(vec![Partition::new(vec![1, 1]), Partition::new(vec![3])], 2);
        let prod = a.mul_truncated(&b, 100);
        assert_eq!(
            prod.coeff(&[Partition::new(vec![3, 1]), Partition::new(vec![3])]),
            2
        );
        assert_eq!(prod.num_terms(), 1);
        // Truncation drops the degree-7 term.
        assert!(a.mul_truncated(&b, 6).is_zero());
    }

    #[test]
    fn series_cancellation_removes_terms() {
        let mut a = PartitionSeries::zero(1);
        a.add_term(vec![Partition::new(vec![1])], 3);
        a.add_term(vec![Partition::new(vec![1])], -3);
        assert!(a.is_zero());
        assert_eq!(a, PartitionSeries::zero(1));
    }

    #[test]
    fn first_difference_reports_lex_least() {
        let mut a = PartitionSeries::zero(1);
        a.add_term(vec![Partition::new(vec![2])], 1);
        let mut b = PartitionSeries::zero(1);
        b.add_term(vec![Partition::new(vec![3])], 1);
        let (key, ca, cb) = a.first_difference(&b).unwrap();
        assert_eq!(key, vec![Partition::new(vec![2])]);
        assert_eq!((ca, cb), (1, 0));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn collapse_sends_terms_to_total_degree() {
        let mut a = PartitionSeries::zero(2);
        a.add_term(vec![Partition::new(vec![2, 1]), Partition::new(vec![1])], 1);
        a.add_term(vec![Partition::empty(), Partition::empty()], 1);
        let p = a.collapse_total_degree();
        assert_eq!(p.coeff(0), 1);
        assert_eq!(p.coeff(4), 1);
    }
}
