//! Exact computations in the projective reflection groups G(r,p,q,n).
//!
//! A projective reflection group G(r,p,q,n) is the quotient of the imprimitive
//! complex reflection group G(r,p,n) by the cyclic group of scalar matrices
//! C_q (which requires q | r and pq | rn).  This crate implements the
//! combinatorics attached to these groups over exact integer and cyclotomic
//! arithmetic, with no floating point anywhere:
//!
//! * group elements, canonical coset representatives, and group arithmetic
//!   ([`group`]);
//! * flag-major descent statistics and the invariant-theoretic monomials they
//!   index ([`stats`]);
//! * tuples of Ferrers diagrams, their cyclic shift classes, and standard
//!   multitableaux ([`tableaux`]);
//! * the colored Robinson-Schensted correspondence and its projective
//!   refinement ([`schensted`]);
//! * the diagonal invariant ring of k copies of the reflection module, the
//!   explicit basis bijection, and truncated Hilbert series
//!   ([`diagonal`]);
//! * exact character theory of wreath products, coarse Kronecker
//!   coefficients, and fake degree polynomials ([`characters`]);
//! * the Galois twisting of all of the above ([`galois`]);
//! * an identity verifier producing machine-readable reports ([`report`])
//!   and the command line front end ([`cli`]).
//!
//! Everything is verified at "desk scale" by exhaustive enumeration; the
//! enumeration cap guards against accidentally enormous groups.

pub mod characters;
pub mod cli;
pub mod cyclotomic;
pub mod diagonal;
pub mod error;
pub mod galois;
pub mod group;
pub mod partitions;
pub mod report;
pub mod schensted;
pub mod series;
pub mod stats;
pub mod tableaux;

pub use error::Error;

/// Default bound on the order of any group we agree to enumerate.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Euclidean residue of a possibly negative value, in `0..m`.
pub(crate) fn residue(v: i64, m: usize) -> usize {
    debug_assert!(m > 0);
    v.rem_euclid(m as i64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 1), 1);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
    }

    #[test]
    fn residue_handles_negatives() {
        assert_eq!(residue(-1, 6), 5);
        assert_eq!(residue(-6, 6), 0);
        assert_eq!(residue(7, 6), 1);
        assert_eq!(residue(0, 1), 0);
    }
}
