//! Exact arithmetic in the ring of integers Z[zeta_r] of a cyclotomic field.
//!
//! Values are integer polynomials in zeta_r reduced modulo the r-th
//! cyclotomic polynomial, stored on the basis 1, zeta, ..., zeta^(d-1) with
//! d = deg Phi_r.  Reduced form is unique, so equality of values is equality
//! of coefficient vectors.  All arithmetic is exact; nothing here can round.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcd;

/// Little-endian integer polynomials, used only for computing Phi_r.
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of `num` by a monic divisor, panicking on a nonzero
/// remainder (the callers only divide when divisibility is guaranteed).
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    if rem.len() <= d {
        assert!(rem.iter().all(|&c| c == 0));
        return vec![0];
    }
    let mut quo = vec![0i64; rem.len() - d];
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quo[i - d] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i - d + j] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quo
}

/// The r-th cyclotomic polynomial, little-endian, computed by dividing
/// x^r - 1 by the product of Phi_d over proper divisors d of r.
pub fn cyclotomic_polynomial(r: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&r) {
        return hit.clone();
    }
    assert!(r >= 1);
    let phi = if r == 1 {
        vec![-1, 1]
    } else {
        let mut divisor_product = vec![1i64];
        for d in 1..r {
            if r % d == 0 {
                divisor_product = poly_mul(&divisor_product, &cyclotomic_polynomial(d));
            }
        }
        let mut x_r_minus_1 = vec![0i64; r + 1];
        x_r_minus_1[0] = -1;
        x_r_minus_1[r] = 1;
        poly_div_exact(&x_r_minus_1, &divisor_product)
    };
    let arc = Arc::new(phi);
    cache.lock().unwrap().insert(r, arc.clone());
    arc
}

/// An element of Z[zeta_r] in reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cyclotomic {
    r: usize,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    fn reduce(r: usize, mut poly: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(r);
        let d = phi.len() - 1;
        for i in (d..poly.len()).rev() {
            let c = poly[i];
            if c != 0 {
                poly[i] = 0;
                for (j, &pc) in phi.iter().enumerate().take(d) {
                    poly[i - d + j] -= c * pc;
                }
            }
        }
        poly.resize(d, 0);
        Cyclotomic { r, coeffs: poly }
    }

    pub fn zero(r: usize) -> Self {
        let d = cyclotomic_polynomial(r).len() - 1;
        Cyclotomic { r, coeffs: vec![0; d] }
    }

    pub fn from_int(r: usize, value: i64) -> Self {
        Self::reduce(r, vec![value])
    }

    pub fn one(r: usize) -> Self {
        Self::from_int(r, 1)
    }

    /// zeta_r^e for any exponent, reduced.
    pub fn root_power(r: usize, e: i64) -> Self {
        let e = e.rem_euclid(r as i64) as usize;
        let mut poly = vec![0i64; e + 1];
        poly[e] = 1;
        Self::reduce(r, poly)
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_int(&self) -> Result<i64> {
        if self.coeffs[1..].iter().any(|&c| c != 0) {
            return Err(Error::NonIntegral(format!("{self:?}")));
        }
        Ok(self.coeffs[0])
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.r, other.r);
        Cyclotomic {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.r, other.r);
        Cyclotomic {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        Cyclotomic {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.r, other.r);
        Cyclotomic::reduce(self.r, poly_mul(&self.coeffs, &other.coeffs))
    }

    /// Applies the field automorphism zeta -> zeta^d; needs GCD(d, r) = 1.
    pub fn galois(&self, d: usize) -> Result<Cyclotomic> {
        if gcd(d % self.r, self.r) != 1 {
            return Err(Error::NotCoprime { d, r: self.r });
        }
        let mut poly = vec![0i64; self.r.max(1)];
        for (i, &c) in self.coeffs.iter().enumerate() {
            poly[(i * d) % self.r] += c;
        }
        Ok(Cyclotomic::reduce(self.r, poly))
    }

    /// Complex conjugation, zeta -> zeta^(-1).
    pub fn conj(&self) -> Cyclotomic {
        if self.r <= 2 {
            return self.clone();
        }
        self.galois(self.r - 1).unwrap()
    }
}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            let term = match (c, i) {
                (c, 0) => c.to_string(),
                (1, _) => var,
                (-1, _) => format!("-{var}"),
                (c, _) => format!("{c}*{var}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn phi(r: usize) -> Vec<i64> {
        cyclotomic_polynomial(r).as_ref().clone()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_powers_and_relations() {
        // zeta_4^2 = -1
        let i = Cyclotomic::root_power(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_int(4, -1));
        // zeta_6^3 = -1
        let z6 = Cyclotomic::root_power(6, 1);
        assert_eq!(z6.mul(&z6).mul(&z6), Cyclotomic::from_int(6, -1));
        // zeta_1 = 1
        assert_eq!(Cyclotomic::root_power(1, 1), Cyclotomic::one(1));
        // negative exponents wrap
        assert_eq!(Cyclotomic::root_power(5, -2), Cyclotomic::root_power(5, 3));
    }

    #[test]
    fn geometric_sums_vanish() {
        for r in 2..=12 {
            let mut sum = Cyclotomic::zero(r);
            for e in 0..r {
                sum = sum.add(&Cyclotomic::root_power(r, e as i64));
            }
            assert!(sum.is_zero(), "sum of all {r}-th roots");
        }
    }

    #[test]
    fn conjugation_and_galois() {
        let z = Cyclotomic::root_power(6, 1);
        assert_eq!(z.conj(), Cyclotomic::root_power(6, 5));
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.galois(5).unwrap(), z.conj());
        assert!(z.galois(2).is_err());
        assert!(z.galois(3).is_err());
        // On integers every automorphism is the identity.
        let five = Cyclotomic::from_int(6, 5);
        assert_eq!(five.galois(5).unwrap(), five);
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(Cyclotomic::from_int(6, 9).as_int().unwrap(), 9);
        assert!(Cyclotomic::root_power(6, 1).as_int().is_err());
        // 1 + zeta_3 + zeta_3^2 = 0 collapses to the integer 0.
        let mut s = Cyclotomic::one(3);
        s = s.add(&Cyclotomic::root_power(3, 1));
        s = s.add(&Cyclotomic::root_power(3, 2));
        assert_eq!(s.as_int().unwrap(), 0);
    }

    proptest! {
        #[test]
        fn ring_axioms(
            r in 1usize..=8,
            av in proptest::collection::vec(-5i64..=5, 8),
            bv in proptest::collection::vec(-5i64..=5, 8),
            cv in proptest::collection::vec(-5i64..=5, 8),
        ) {
            let a = Cyclotomic::reduce(r, av);
            let b = Cyclotomic::reduce(r, bv);
            let c = Cyclotomic::reduce(r, cv);
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.sub(&a), Cyclotomic::zero(r));
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        }
    }
}
