//! Flag-major descent statistics on G(r,p,q,n).
//!
//! The profile of an element consists of the homogeneous descent set HDes,
//! the tail counts h_i, the color increments k_i, the exponent partition
//! lambda = r*h + k, and fmaj = |lambda|.  All of it is computed from any
//! coset representative and is invariant under the scalar shifts, because it
//! only consumes color differences and the residue of the last color mod
//! r/q.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{elements, Element, GroupParams};
use crate::partitions::Partition;
use crate::series::Poly;
use crate::residue;

/// The descent statistics of one element (or standard multitableau).
///
/// `hdes` holds 1-based positions; `h`, `k`, `lambda` are indexed by
/// position 1..=n in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatProfile {
    pub hdes: Vec<usize>,
    pub h: Vec<usize>,
    pub k: Vec<usize>,
    pub lambda: Vec<usize>,
    pub fmaj: usize,
}

impl StatProfile {
    /// The exponent partition with trailing zeros trimmed.
    pub fn lambda_partition(&self) -> Partition {
        Partition::new(self.lambda.clone())
    }
}

/// Shared profile recursion over a colored word.
///
/// Position i (1-based) is a homogeneous descent when the colors at i and
/// i+1 agree and `rank[i] > rank[i+1]`; ranks encode sigma values for group
/// elements and negated row depths for tableaux.  `quot` is the quotient
/// parameter whose shift classes the profile must not distinguish: the last
/// color enters only through its residue mod r/quot.
pub(crate) fn profile_from_colored_word(
    r: usize,
    quot: usize,
    rank: &[i64],
    colors: &[usize],
) -> StatProfile {
    let n = rank.len();
    debug_assert_eq!(colors.len(), n);
    debug_assert!(n > 0);
    let hdes: Vec<usize> = (1..n)
        .filter(|&i| colors[i - 1] == colors[i] && rank[i - 1] > rank[i])
        .collect();
    let mut h = vec![0usize; n];
    let mut k = vec![0usize; n];
    for i in (0..n - 1).rev() {
        h[i] = h[i + 1] + usize::from(hdes.binary_search(&(i + 1)).is_ok());
    }
    k[n - 1] = colors[n - 1] % (r / quot);
    for i in (0..n - 1).rev() {
        k[i] = k[i + 1] + residue(colors[i] as i64 - colors[i + 1] as i64, r);
    }
    let lambda: Vec<usize> = (0..n).map(|i| r * h[i] + k[i]).collect();
    let fmaj = lambda.iter().sum();
    StatProfile { hdes, h, k, lambda, fmaj }
}

/// Computes the full descent profile of a group element.
pub fn stat_profile(g: &Element) -> StatProfile {
    let params = g.params();
    let rank: Vec<i64> = g.perm().iter().map(|&s| s as i64).collect();
    profile_from_colored_word(params.r, params.q, &rank, g.colors())
}

/// The flag-major index alone.
pub fn fmaj(g: &Element) -> usize {
    stat_profile(g).fmaj
}

/// Classical statistics on the wreath quotient-free case p = q = 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalStats {
    /// 1-based flag descent positions.
    pub des: Vec<usize>,
    /// d_i = number of flag descents at positions >= i.
    pub d: Vec<usize>,
    /// r * sum(Des) + sum of colors.
    pub fmaj: usize,
}

/// Flag descents and the classical flag-major index, defined on G(r,n).
pub fn classical_stats(g: &Element) -> Result<ClassicalStats> {
    let params = g.params();
    if params.p != 1 || params.q != 1 {
        return Err(Error::ParamMismatch(
            "classical statistics require p = q = 1".into(),
        ));
    }
    let n = params.n;
    let c = g.colors();
    let perm = g.perm();
    let des: Vec<usize> = (1..n)
        .filter(|&i| c[i - 1] < c[i] || (c[i - 1] == c[i] && perm[i - 1] > perm[i]))
        .collect();
    let mut d = vec![0usize; n];
    for i in (0..n - 1).rev() {
        d[i] = d[i + 1] + usize::from(des.binary_search(&(i + 1)).is_ok());
    }
    let fmaj = params.r * des.iter().sum::<usize>() + c.iter().sum::<usize>();
    Ok(ClassicalStats { des, d, fmaj })
}

/// Exponents of the invariant-theoretic monomial attached to g: position
/// sigma(i) carries lambda_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialExponents {
    pub exps: Vec<usize>,
}

impl MonomialExponents {
    pub fn degree(&self) -> usize {
        self.exps.iter().sum()
    }
}

pub fn a_exponents(g: &Element) -> MonomialExponents {
    let profile = stat_profile(g);
    let mut exps = vec![0usize; g.params().n];
    for (i, &image) in g.perm().iter().enumerate() {
        exps[image] = profile.lambda[i];
    }
    MonomialExponents { exps }
}

/// The distribution of fmaj over the whole group, as a polynomial in t.
pub fn fmaj_generating_poly(params: GroupParams, cap: usize) -> Result<Poly> {
    let mut poly = Poly::zero();
    for g in elements(params, cap)? {
        poly.add_assign_term(1, stat_profile(&g).fmaj);
    }
    Ok(poly)
}

/// The product formula for the coinvariant Hilbert series of G(r,p,q,n):
/// the q-divisible section of [r]_t [2r]_t ... [(n-1)r]_t [rn/p]_t.
///
/// The fmaj distribution over the dual group matches this exactly.
pub fn coinvariant_hilbert_product(params: GroupParams) -> Poly {
    let mut prod = Poly::one();
    for i in 1..params.n {
        prod = prod.mul(&Poly::bracket(params.r * i));
    }
    prod = prod.mul(&Poly::bracket(params.r * params.n / params.p));
    prod.section_mod(params.q)
}

/// Whether some scalar shift of g has color sum divisible by p, i.e.
/// whether the class of g meets G(r,p,n).
pub fn lifts_into_subgroup(g: &Element, p: usize) -> bool {
    let params = g.params();
    let sum: usize = g.colors().iter().sum();
    let step = params.r * params.n / params.q;
    (0..params.q).any(|j| (sum + j * step) % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::element_vec;
    use crate::DEFAULT_ENUM_CAP;

    fn params(r: usize, p: usize, q: usize, n: usize) -> GroupParams {
        GroupParams::new(r, p, q, n).unwrap()
    }

    #[test]
    fn worked_example_in_g6238() {
        let pr = params(6, 2, 3, 8);
        let g = Element::parse_text(pr, "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2").unwrap();
        let s = stat_profile(&g);
        assert_eq!(s.hdes, vec![2, 5]);
        assert_eq!(s.h, vec![2, 2, 1, 1, 1, 0, 0, 0]);
        assert_eq!(s.k, vec![18, 13, 13, 9, 5, 5, 1, 0]);
        assert_eq!(s.lambda, vec![30, 25, 19, 15, 11, 5, 1, 0]);
        assert_eq!(s.fmaj, 106);
    }

    #[test]
    fn identity_has_zero_profile() {
        let g = Element::identity(params(6, 2, 3, 8));
        let s = stat_profile(&g);
        assert!(s.hdes.is_empty());
        assert_eq!(s.fmaj, 0);
        assert!(s.lambda.iter().all(|&l| l == 0));
    }

    #[test]
    fn profiles_are_partitions_and_reconstruct() {
        for pr in [
            params(2, 1, 1, 3),
            params(4, 2, 2, 2),
            params(3, 1, 3, 3),
            params(4, 1, 2, 3),
            params(6, 2, 3, 2),
        ] {
            for g in element_vec(pr, DEFAULT_ENUM_CAP).unwrap() {
                let s = stat_profile(&g);
                assert!(s.h.windows(2).all(|w| w[0] >= w[1]), "{g}");
                assert!(s.k.windows(2).all(|w| w[0] >= w[1]), "{g}");
                assert!(s.lambda.windows(2).all(|w| w[0] >= w[1]), "{g}");
                assert_eq!(s.fmaj, s.lambda.iter().sum::<usize>());
                // lambda determines g: reducing mod r recovers a
                // representative of the class.
                let lam: Vec<i64> = s.lambda.iter().map(|&l| l as i64).collect();
                let back = Element::canonicalize(pr, g.perm().to_vec(), &lam).unwrap();
                assert_eq!(back, g, "lambda = {:?}", s.lambda);
            }
        }
    }

    #[test]
    fn profile_ignores_representative_choice() {
        for pr in [params(4, 1, 2, 3), params(6, 1, 3, 2), params(4, 2, 2, 2)] {
            let step = pr.shift_step();
            for g in element_vec(pr, DEFAULT_ENUM_CAP).unwrap() {
                let canonical = stat_profile(&g);
                let rank: Vec<i64> = g.perm().iter().map(|&s| s as i64).collect();
                for j in 1..pr.q {
                    let shifted: Vec<usize> = g
                        .colors()
                        .iter()
                        .map(|&c| (c + j * step) % pr.r)
                        .collect();
                    let alt = profile_from_colored_word(pr.r, pr.q, &rank, &shifted);
                    assert_eq!(alt, canonical, "{g} shift {j}");
                }
            }
        }
    }

    #[test]
    fn classical_statistics_examples() {
        let pr = params(2, 1, 1, 2);
        let g = Element::parse_text(pr, "2 1; 0 0").unwrap();
        let s = classical_stats(&g).unwrap();
        assert_eq!(s.des, vec![1]);
        assert_eq!(s.fmaj, 2);
        // Color rise at position 1.
        let g = Element::parse_text(pr, "1 2; 0 1").unwrap();
        let s = classical_stats(&g).unwrap();
        assert_eq!(s.des, vec![1]);
        assert_eq!(s.fmaj, 2 * 1 + 1);
        assert!(classical_stats(&Element::identity(params(2, 2, 1, 2))).is_err());
    }

    #[test]
    fn old_and_new_statistics_agree_on_wreath_groups() {
        // r*h_i + k_i = r*d_i + c_i for every position of every element of
        // G(r,n), r <= 4, n <= 4.
        for r in 1..=4usize {
            for n in 1..=4usize {
                let pr = params(r, 1, 1, n);
                for g in elements(pr, DEFAULT_ENUM_CAP).unwrap() {
                    let new = stat_profile(&g);
                    let old = classical_stats(&g).unwrap();
                    for i in 0..n {
                        assert_eq!(
                            new.lambda[i],
                            r * old.d[i] + g.colors()[i],
                            "{g} at {i}"
                        );
                    }
                    assert_eq!(new.fmaj, old.fmaj, "{g}");
                }
            }
        }
    }

    #[test]
    fn monomial_exponents_examples() {
        let g = Element::parse_text(params(2, 1, 1, 2), "2 1; 0 0").unwrap();
        assert_eq!(a_exponents(&g).exps, vec![0, 2]);
        assert_eq!(a_exponents(&g).degree(), 2);
        // Degree always equals fmaj, and sorting recovers lambda.
        for pr in [params(4, 2, 1, 2), params(3, 1, 3, 3)] {
            for g in element_vec(pr, DEFAULT_ENUM_CAP).unwrap() {
                let s = stat_profile(&g);
                let a = a_exponents(&g);
                assert_eq!(a.degree(), s.fmaj);
                assert_eq!(
                    Partition::new(a.exps.clone()),
                    s.lambda_partition()
                );
            }
        }
    }

    #[test]
    fn fmaj_distribution_examples() {
        assert_eq!(
            fmaj_generating_poly(params(2, 1, 1, 1), DEFAULT_ENUM_CAP)
                .unwrap()
                .coeffs(),
            &[1, 1]
        );
        assert_eq!(
            fmaj_generating_poly(params(2, 1, 2, 2), DEFAULT_ENUM_CAP)
                .unwrap()
                .coeffs(),
            &[1, 2, 1]
        );
        // S_3: Poincare polynomial 1 + 2t + 2t^2 + t^3.
        assert_eq!(
            fmaj_generating_poly(params(1, 1, 1, 3), DEFAULT_ENUM_CAP)
                .unwrap()
                .coeffs(),
            &[1, 2, 2, 1]
        );
    }

    #[test]
    fn coinvariant_hilbert_identity_small_grid() {
        for r in 1..=4usize {
            for n in 1..=3usize {
                for p in (1..=r).filter(|p| r % p == 0) {
                    for q in (1..=r).filter(|q| r % q == 0) {
                        let Ok(pr) = GroupParams::new(r, p, q, n) else { continue };
                        let lhs =
                            fmaj_generating_poly(pr.dual(), DEFAULT_ENUM_CAP).unwrap();
                        let rhs = coinvariant_hilbert_product(pr);
                        assert_eq!(lhs, rhs, "{pr}");
                    }
                }
            }
        }
        // The worked case: the dual of G(2,2,1,2) has distribution
        // 1 + 2t + t^2.
        assert_eq!(
            coinvariant_hilbert_product(params(2, 2, 1, 2)).coeffs(),
            &[1, 2, 1]
        );
    }

    #[test]
    fn degree_divisibility_matches_subgroup_membership() {
        // For g in G(r,1,q,n): fmaj(g) is divisible by p exactly when the
        // class of g meets G(r,p,n), whenever G(r,p,q,n) is valid.
        for r in 1..=6usize {
            for n in 1..=3usize {
                for q in (1..=r).filter(|q| r % q == 0) {
                    let Ok(ambient) = GroupParams::new(r, 1, q, n) else { continue };
                    if ambient.order() > 3000 {
                        continue;
                    }
                    for p in (1..=r).filter(|p| r % p == 0) {
                        if GroupParams::new(r, p, q, n).is_err() {
                            continue;
                        }
                        for g in elements(ambient, DEFAULT_ENUM_CAP).unwrap() {
                            let member = lifts_into_subgroup(&g, p);
                            let s = stat_profile(&g);
                            assert_eq!(
                                s.fmaj % p == 0,
                                member,
                                "{g} vs p = {p}"
                            );
                            assert_eq!(a_exponents(&g).degree() % p == 0, member);
                        }
                    }
                }
            }
        }
    }
}
