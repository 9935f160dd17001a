//! Galois twists of the diagonal invariant series.
//!
//! A unit d mod r names the field automorphism sending the r-th root of
//! unity to its d-th power.  It acts on group elements by multiplying
//! colors by d, and on shape tuples by moving component j to component
//! d*j: with that indexing, twisting the irreducible labeled by a shape
//! relabels it consistently with the twist of its character.
//!
//! The twisted series G^sigma in two partition alphabets has a closed
//! combinatorial form, a full sum over the dual group, and a
//! representation-theoretic form, a sum of products of fake degree
//! polynomials over the irreducible labels; their equality is the final
//! identity this crate checks.

use serde::Serialize;

use crate::characters::{embed_alphabet, fake_degree_poly};
use crate::error::{Error, Result};
use crate::gcd;
use crate::group::{elements, Element, GroupParams};
use crate::series::PartitionSeries;
use crate::stats::stat_profile;
use crate::tableaux::{enumerate_fer_classes, MultiShape, ShapeClass};

/// A field automorphism of the r-th cyclotomic field, named by the
/// exponent d it applies to the root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisLabel {
    pub d: usize,
    pub r: usize,
}

impl GaloisLabel {
    pub fn new(d: usize, r: usize) -> Result<GaloisLabel> {
        if r == 0 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        if gcd(d % r, r) != 1 {
            return Err(Error::NotCoprime { d, r });
        }
        Ok(GaloisLabel { d: d % r, r })
    }

    /// Every unit mod r, in increasing order.
    pub fn all(r: usize) -> Vec<GaloisLabel> {
        (1..=r)
            .filter(|&d| gcd(d % r, r) == 1)
            .map(|d| GaloisLabel { d: d % r, r })
            .collect()
    }

    pub fn act_on_element(&self, g: &Element) -> Result<Element> {
        g.galois_act(self.d)
    }

    pub fn act_on_shape(&self, shape: &MultiShape) -> Result<MultiShape> {
        shape.galois_twist(self.d)
    }
}

/// The twist of a shape class: reindex the representative by j -> d*j
/// and re-canonicalize under the same cyclic order.
pub fn sigma_on_shape(mu: &ShapeClass, d: usize) -> Result<ShapeClass> {
    ShapeClass::of(&mu.rep.galois_twist(d)?, mu.cyclic_order)
}

/// Combinatorial form of the twisted series: the sum over the dual group
/// of Y1^(profile of the twisted element) * Y2^(profile of the inverse),
/// truncated at total degree `bound`.
pub fn gsigma_combinatorial(
    params: GroupParams,
    d: usize,
    bound: usize,
    cap: usize,
) -> Result<PartitionSeries> {
    if gcd(d % params.r, params.r) != 1 {
        return Err(Error::NotCoprime { d, r: params.r });
    }
    let mut out = PartitionSeries::zero(2);
    for g in elements(params.dual(), cap)? {
        let twisted = stat_profile(&g.galois_act(d)?).lambda_partition();
        let inverse = stat_profile(&g.inverse()).lambda_partition();
        if twisted.size() + inverse.size() <= bound {
            out.add_term(vec![twisted, inverse], 1);
        }
    }
    Ok(out)
}

/// Representation-theoretic form of the twisted series: the sum over
/// irreducible labels of
///   stabilizer(mu) * f^(sigma mu)(Y1) * f^(conjugate mu)(Y2),
/// the stabilizer factor accounting for the branch indices sharing one
/// fake degree polynomial.
pub fn gsigma_representation(
    params: GroupParams,
    d: usize,
    bound: usize,
) -> Result<PartitionSeries> {
    if gcd(d % params.r, params.r) != 1 {
        return Err(Error::NotCoprime { d, r: params.r });
    }
    // Labels of the irreducibles: shapes with color weight divisible by
    // q, modulo the C_p index shift.
    let classes = enumerate_fer_classes(params.r, params.q, params.p, params.n)?;
    let mut out = PartitionSeries::zero(2);
    for mu in &classes {
        let twisted = sigma_on_shape(mu, d)?;
        let conjugate = ShapeClass::of(&mu.rep.conjugate(), mu.cyclic_order)?;
        let left = embed_alphabet(&fake_degree_poly(&twisted)?, 2, 0);
        let right = embed_alphabet(&fake_degree_poly(&conjugate)?, 2, 1);
        let term = left.mul_truncated(&right, bound);
        out = out.add(&term.scale(mu.stabilizer as i64));
    }
    Ok(out)
}

/// Both forms of the twisted series and their first disagreement if any.
#[derive(Clone, Debug)]
pub struct GsigmaReport {
    pub combinatorial: PartitionSeries,
    pub representation: PartitionSeries,
    pub first_difference: Option<(Vec<crate::partitions::Partition>, i64, i64)>,
}

impl GsigmaReport {
    pub fn holds(&self) -> bool {
        self.first_difference.is_none()
    }
}

/// Computes both forms of G^sigma up to total degree `bound` and
/// compares them coefficientwise.
pub fn gsigma_check(
    params: GroupParams,
    d: usize,
    bound: usize,
    cap: usize,
) -> Result<GsigmaReport> {
    let combinatorial = gsigma_combinatorial(params, d, bound, cap)?;
    let representation = gsigma_representation(params, d, bound)?;
    let first_difference = combinatorial.first_difference(&representation);
    Ok(GsigmaReport { combinatorial, representation, first_difference })
}
