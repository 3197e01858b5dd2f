//! Monomials as exponent vectors.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, PartitionedVariableSet, Result};

/// A monomial `X^a`, stored as its exponent vector `a`.
///
/// The ordering is the canonical generator order used throughout the
/// crate: lower degree first, and within one degree lexicographically with
/// `x1_1 > x1_2 > … > xn_mn`, larger monomials first. So `x² < xy < y²`
/// in this order, matching the way generator lists are printed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The constant monomial `1` in `len` variables.
    pub fn one(len: usize) -> Self {
        Self::new(alloc::vec![0; len])
    }

    /// The variable with flat index `idx`.
    pub fn variable(len: usize, idx: usize) -> Self {
        let mut exps = alloc::vec![0; len];
        exps[idx] = 1;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Flat indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn same_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// `self | other`, componentwise `≤`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.same_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        self.exps
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(self.zip_with(other, |a, b| a.max(b)))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    /// `self / gcd(self, other)`: componentwise truncated subtraction.
    pub fn quotient_by_gcd(&self, other: &Self) -> Result<Self> {
        self.same_len(other)?;
        Ok(self.zip_with(other, |a, b| a.saturating_sub(b)))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        Self::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    /// Formats with the variable names of `vars`, e.g. `x1_1^2*x2_1`.
    pub fn display<'a>(&'a self, vars: &'a PartitionedVariableSet) -> DisplayMonomial<'a> {
        DisplayMonomial {
            monomial: self,
            vars,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps)
    }
}

pub struct DisplayMonomial<'a> {
    monomial: &'a Monomial,
    vars: &'a PartitionedVariableSet,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &e) in self.monomial.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.vars.locate(idx) {
                Some((b, p)) => write!(f, "x{b}_{p}")?,
                None => write!(f, "x?_{idx}")?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Calls `f` with every exponent vector of length `len` and total degree
/// `degree`, each entry capped by `bounds` when given.
pub(crate) fn for_each_composition(
    len: usize,
    degree: u64,
    bounds: Option<&[u32]>,
    f: &mut dyn FnMut(&[u32]),
) {
    fn rec(
        pos: usize,
        remaining: u64,
        buf: &mut [u32],
        bounds: Option<&[u32]>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if pos + 1 == buf.len() {
            let cap = bounds.map_or(u64::MAX, |b| u64::from(b[pos]));
            if remaining <= cap && remaining <= u64::from(u32::MAX) {
                buf[pos] = remaining as u32;
                f(buf);
                buf[pos] = 0;
            }
            return;
        }
        let cap = bounds.map_or(remaining, |b| remaining.min(u64::from(b[pos])));
        // high exponents first so the earliest variables lead
        for e in (0..=cap.min(u64::from(u32::MAX))).rev() {
            buf[pos] = e as u32;
            rec(pos + 1, remaining - e, buf, bounds, f);
        }
        buf[pos] = 0;
    }
    if len == 0 {
        if degree == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = alloc::vec![0u32; len];
    rec(0, degree, &mut buf, bounds, f);
}
