//! Exact convex geometry on exponent vectors: ceilings, log sets and
//! Newton-polyhedron membership.

mod simplex;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::{Error, Monomial, Result};

pub(crate) use simplex::{feasible, Mode};

/// A vector of exact rationals, e.g. a point of a convex hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_integers(v: &[u32]) -> Self {
        Self(
            v.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }
}

/// Componentwise ceiling: integral entries stay, the rest become
/// `floor + 1`. Entries must be nonnegative.
pub fn ceiling(alpha: &RationalVector) -> Result<Vec<BigInt>> {
    alpha
        .0
        .iter()
        .map(|a| {
            if a.is_negative() {
                Err(Error::Domain("ceiling needs nonnegative entries"))
            } else if a.is_integer() {
                Ok(a.to_integer())
            } else {
                Ok(a.floor().to_integer() + BigInt::one())
            }
        })
        .collect()
}

/// A deduplicated set of integer exponent vectors of one common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogSet {
    dim: usize,
    points: Vec<Vec<u32>>,
}

impl LogSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            set.insert(p);
        }
        Ok(Self {
            dim,
            points: set.into_iter().collect(),
        })
    }

    /// The log set of a family of monomials in `dim` variables.
    pub fn of_monomials<'a>(
        dim: usize,
        monomials: impl IntoIterator<Item = &'a Monomial>,
    ) -> Result<Self> {
        Self::new(dim, monomials.into_iter().map(|m| m.exponents().to_vec()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(p))
            .is_ok()
    }

    /// All sums of `k` points taken with repetition.
    pub fn k_fold(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("k-fold log set needs k ≥ 1"));
        }
        if self.is_empty() {
            return Err(Error::Domain("k-fold log set of an empty set"));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.minkowski_sum(self)?;
        }
        Ok(acc)
    }

    /// Pointwise sums `p + q`, deduplicated.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut sums = BTreeSet::new();
        for p in &self.points {
            for q in &other.points {
                let s = p
                    .iter()
                    .zip(q)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()?;
                sums.insert(s);
            }
        }
        Ok(Self {
            dim: self.dim,
            points: sums.into_iter().collect(),
        })
    }

    fn check_query(&self, a: &[u32]) -> Result<Vec<&[u32]>> {
        if self.is_empty() {
            return Err(Error::Domain("membership test against an empty point set"));
        }
        if a.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                found: a.len(),
            });
        }
        Ok(self.points.iter().map(Vec::as_slice).collect())
    }
}

/// Whether `a` dominates some convex combination of `set`, i.e. lies in
/// the Newton polyhedron `conv(set) + ℝ₊ⁿ`.
pub fn dominates_convex_combination(a: &[u32], set: &LogSet) -> Result<bool> {
    let pts = set.check_query(a)?;
    if pts.iter().any(|p| p.iter().zip(a).all(|(x, y)| x <= y)) {
        return Ok(true);
    }
    // every coordinate must reach the smallest value any point offers
    let below_floor = (0..a.len()).any(|i| pts.iter().all(|p| p[i] > a[i]));
    if below_floor {
        return Ok(false);
    }
    Ok(feasible(&pts, a, Mode::Dominated))
}

/// Whether `a` is exactly a convex combination of `set`.
pub fn in_convex_hull_exact(a: &[u32], set: &LogSet) -> Result<bool> {
    let pts = set.check_query(a)?;
    if set.contains(a) {
        return Ok(true);
    }
    Ok(feasible(&pts, a, Mode::Exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn ceiling_examples() {
        let v = RationalVector::from_integers(&[1, 2, 0]);
        assert_eq!(ceiling(&v).unwrap(), ints(&[1, 2, 0]));
        assert_eq!(
            ceiling(&RationalVector(vec![q(1, 2), q(3, 2)])).unwrap(),
            ints(&[1, 2])
        );
        assert_eq!(
            ceiling(&RationalVector(vec![q(2, 3), q(0, 1), q(5, 3), q(1, 1)])).unwrap(),
            ints(&[1, 0, 2, 1])
        );
        assert!(ceiling(&RationalVector(vec![q(-1, 2)])).is_err());
    }

    #[test]
    fn log_set_of_monomials() {
        // x1_1^2 x2_1, x1_1^3 x2_1^2, x1_2 x2_2 over blocks (2,2)
        let f = [
            Monomial::new(vec![2, 0, 1, 0]),
            Monomial::new(vec![3, 0, 2, 0]),
            Monomial::new(vec![0, 1, 0, 1]),
        ];
        let s = LogSet::of_monomials(4, &f).unwrap();
        assert_eq!(s.len(), 3);
        for p in [[2, 0, 1, 0], [3, 0, 2, 0], [0, 1, 0, 1]] {
            assert!(s.contains(&p));
        }
        assert!(LogSet::of_monomials(4, &[]).unwrap().is_empty());
        let one = LogSet::of_monomials(3, &[Monomial::one(3)]).unwrap();
        assert_eq!(one.points(), &[vec![0, 0, 0]]);
    }

    #[test]
    fn k_fold_examples() {
        let s = LogSet::new(2, [vec![1, 0], vec![0, 1]]).unwrap();
        let two = s.k_fold(2).unwrap();
        assert_eq!(
            two,
            LogSet::new(2, [vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap()
        );
        assert_eq!(s.k_fold(1).unwrap(), s);
        let t = LogSet::new(2, [vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(
            t.k_fold(2).unwrap(),
            LogSet::new(2, [vec![4, 2], vec![3, 3], vec![2, 4]]).unwrap()
        );
        assert!(s.k_fold(0).is_err());
    }

    #[test]
    fn domination_examples() {
        let a = LogSet::new(2, [vec![3, 0], vec![0, 3]]).unwrap();
        assert!(dominates_convex_combination(&[2, 1], &a).unwrap());
        assert!(!dominates_convex_combination(&[1, 1], &a).unwrap());
        assert!(dominates_convex_combination(&[3, 0], &a).unwrap());
        let empty = LogSet::new(2, []).unwrap();
        assert!(dominates_convex_combination(&[1, 1], &empty).is_err());
    }

    #[test]
    fn exact_hull_examples() {
        let a = LogSet::new(2, [vec![2, 0], vec![0, 2]]).unwrap();
        assert!(in_convex_hull_exact(&[1, 1], &a).unwrap());
        assert!(in_convex_hull_exact(&[2, 0], &a).unwrap());
        // (0,1,1,1,1) dominates (0,1/2,1,1,1) = ½(0,1,1,0,2) + ½(0,0,1,2,0)
        // but no convex combination hits it exactly
        let l = LogSet::new(
            5,
            [
                vec![2, 1, 0, 1, 0],
                vec![0, 1, 1, 0, 2],
                vec![0, 0, 1, 2, 0],
            ],
        )
        .unwrap();
        assert!(dominates_convex_combination(&[0, 1, 1, 1, 1], &l).unwrap());
        assert!(!in_convex_hull_exact(&[0, 1, 1, 1, 1], &l).unwrap());
    }

    /// Brute-force convex-combination search over weights with a fixed
    /// common denominator.
    fn brute_hull_points(points: &[Vec<u32>], denom: u32) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        let mut weights = vec![0u32; points.len()];
        fn rec(
            i: usize,
            left: u32,
            w: &mut Vec<u32>,
            pts: &[Vec<u32>],
            denom: u32,
            out: &mut Vec<Vec<BigRational>>,
        ) {
            if i + 1 == pts.len() {
                w[i] = left;
                let dim = pts[0].len();
                let p = (0..dim)
                    .map(|c| {
                        let num: u64 = pts
                            .iter()
                            .zip(w.iter())
                            .map(|(p, &wt)| u64::from(p[c]) * u64::from(wt))
                            .sum();
                        BigRational::new(BigInt::from(num), BigInt::from(denom))
                    })
                    .collect();
                out.push(p);
                return;
            }
            for x in 0..=left {
                w[i] = x;
                rec(i + 1, left - x, w, pts, denom, out);
            }
        }
        rec(0, denom, &mut weights, points, denom, &mut out);
        out
    }

    fn arb_set() -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ceiling_is_monotone_and_idempotent(
            raw in prop::collection::vec((0i64..20, 1i64..6), 1..5),
            bump in prop::collection::vec(0i64..3, 5),
        ) {
            let alpha = RationalVector(raw.iter().map(|&(n, d)| q(n, d)).collect());
            let c = ceiling(&alpha).unwrap();
            let as_rat = RationalVector(c.iter().cloned().map(BigRational::from_integer).collect());
            prop_assert_eq!(&ceiling(&as_rat).unwrap(), &c);
            let beta = RationalVector(
                alpha.0.iter().zip(&bump).map(|(a, &b)| a + q(b, 2)).collect(),
            );
            let cb = ceiling(&beta).unwrap();
            for ((x, y), a) in c.iter().zip(&cb).zip(&alpha.0) {
                prop_assert!(x <= y);
                prop_assert!(BigRational::from_integer(x.clone()) >= *a);
                prop_assert!(BigRational::from_integer(x.clone()) - a < q(1, 1));
            }
        }

        #[test]
        fn domination_is_upward_closed(set in arb_set(), a in prop::collection::vec(0u32..5, 3), b in prop::collection::vec(0u32..3, 3)) {
            let s = LogSet::new(3, set).unwrap();
            let up: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            if dominates_convex_combination(&a, &s).unwrap() {
                prop_assert!(dominates_convex_combination(&up, &s).unwrap());
            }
            if in_convex_hull_exact(&a, &s).unwrap() {
                prop_assert!(dominates_convex_combination(&a, &s).unwrap());
            }
        }

        #[test]
        fn lp_agrees_with_bounded_denominator_search(set in arb_set(), a in prop::collection::vec(0u32..4, 3)) {
            let s = LogSet::new(3, set.clone()).unwrap();
            // with at most two points every vertex of the feasible λ-set has
            // denominator |p_i - q_i| ≤ 3, so weights in twelfths reach it
            let target: Vec<BigRational> = a.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
            let pts = brute_hull_points(s.points(), 12);
            let exact = pts.contains(&target);
            let dominated = pts.iter().any(|p| p.iter().zip(&target).all(|(x, y)| x <= y));
            // the brute force only finds witnesses; it cannot refute
            if exact {
                prop_assert!(in_convex_hull_exact(&a, &s).unwrap());
            }
            if dominated {
                prop_assert!(dominates_convex_combination(&a, &s).unwrap());
            }
            if s.len() <= 2 {
                prop_assert_eq!(exact, in_convex_hull_exact(&a, &s).unwrap());
                prop_assert_eq!(dominated, dominates_convex_combination(&a, &s).unwrap());
            }
        }

        #[test]
        fn k_fold_is_additive(set in arb_set(), j in 1u32..3, k in 1u32..3) {
            let s = LogSet::new(3, set).unwrap();
            let lhs = s.k_fold(j + k).unwrap();
            let rhs = s.k_fold(j).unwrap().minkowski_sum(&s.k_fold(k).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            let q = s.len() as u64;
            let bound = crate::binomial(u64::from(j + k) + q - 1, u64::from(j + k)).unwrap();
            prop_assert!(lhs.len() as u64 <= bound);
        }
    }
}
