//! Monomial ideals, kept as their unique minimal generating set.

use alloc::vec::Vec;
use core::fmt;

use crate::monomial::for_each_composition;
use crate::{Error, Monomial, PartitionedVariableSet, Result};

/// A monomial ideal, represented by its minimal generators `G(I)` in
/// canonical order.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: PartitionedVariableSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Reduces `gens` to its divisibility antichain.
    pub fn minimalize<I>(vars: &PartitionedVariableSet, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            vars.check_len(g)?;
        }
        Ok(Self::from_checked(vars.clone(), &mut all))
    }

    fn from_checked(vars: PartitionedVariableSet, all: &mut Vec<Monomial>) -> Self {
        all.sort_unstable();
        all.dedup();
        // ascending degree: any divisor of a candidate was already seen
        let mut kept: Vec<Monomial> = Vec::new();
        for g in all.drain(..) {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        Self { vars, gens: kept }
    }

    pub fn zero(vars: &PartitionedVariableSet) -> Self {
        Self {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(vars: &PartitionedVariableSet) -> Self {
        Self {
            vars: vars.clone(),
            gens: alloc::vec![vars.one()],
        }
    }

    pub fn principal(vars: &PartitionedVariableSet, f: Monomial) -> Result<Self> {
        vars.check_len(&f)?;
        Ok(Self {
            vars: vars.clone(),
            gens: alloc::vec![f],
        })
    }

    /// The ideal generated by all monomials of degree `degree` in the
    /// variables of block `block` (1-based).
    pub fn veronese(vars: &PartitionedVariableSet, block: usize, degree: u32) -> Result<Self> {
        let range = vars.block_range(block)?;
        let mut gens = Vec::new();
        for_each_composition(range.len(), u64::from(degree), None, &mut |c| {
            let mut exps = alloc::vec![0u32; vars.num_vars()];
            exps[range.clone()].copy_from_slice(c);
            gens.push(Monomial::new(exps));
        });
        Ok(Self::from_checked(vars.clone(), &mut gens))
    }

    pub fn vars(&self) -> &PartitionedVariableSet {
        &self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// The common degree of all generators, if there is one.
    pub fn generating_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableSetMismatch);
        }
        Ok(())
    }

    /// Equality of ideals; minimal generating sets are unique so this
    /// compares generator lists.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_vars(other)?;
        Ok(self.gens == other.gens)
    }

    pub fn contains(&self, f: &Monomial) -> Result<bool> {
        self.vars.check_len(f)?;
        Ok(self.contains_unchecked(f))
    }

    pub(crate) fn contains_unchecked(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_vars(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::from_checked(self.vars.clone(), &mut all))
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.vars);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut all: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_checked(self.vars.clone(), &mut all))
    }

    /// Intersection through pairwise least common multiples.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut all = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                all.push(a.lcm(b)?);
            }
        }
        Ok(Self::from_checked(self.vars.clone(), &mut all))
    }

    /// The colon ideal `I : (f)`.
    pub fn colon(&self, f: &Monomial) -> Result<Self> {
        self.vars.check_len(f)?;
        let mut all = self
            .gens
            .iter()
            .map(|g| g.quotient_by_gcd(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(self.vars.clone(), &mut all))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.vars))?;
        }
        f.write_str(")")
    }
}
