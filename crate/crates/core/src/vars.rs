use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::{Error, Result};

/// Variables `x{i}_{h}` split into blocks `1..=n`, block `i` holding
/// `m_i` variables.
///
/// Flat indices run `(1,1), …, (1,m_1), (2,1), …, (n,m_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionedVariableSet {
    block_sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl PartitionedVariableSet {
    pub fn new(block_sizes: &[usize]) -> Result<Self> {
        if block_sizes.is_empty() {
            return Err(Error::InvalidVariableSet("at least one block is required"));
        }
        if block_sizes.contains(&0) {
            return Err(Error::InvalidVariableSet(
                "every block needs at least one variable",
            ));
        }
        let mut offsets = Vec::with_capacity(block_sizes.len() + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for &m in block_sizes {
            acc = acc
                .checked_add(m)
                .ok_or(Error::InvalidVariableSet("too many variables"))?;
            offsets.push(acc);
        }
        Ok(Self {
            block_sizes: block_sizes.to_vec(),
            offsets,
        })
    }

    /// A single block of `m` variables.
    pub fn single_block(m: usize) -> Result<Self> {
        Self::new(&[m])
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Number of blocks `n`.
    pub fn num_blocks(&self) -> usize {
        self.block_sizes.len()
    }

    /// Total variable count `M = m_1 + … + m_n`.
    pub fn num_vars(&self) -> usize {
        self.offsets[self.block_sizes.len()]
    }

    /// Flat index range of block `block` (1-based).
    pub fn block_range(&self, block: usize) -> Result<core::ops::Range<usize>> {
        self.check_block(block)?;
        Ok(self.offsets[block - 1]..self.offsets[block])
    }

    /// Flat index of `x{block}_{position}` (both 1-based).
    pub fn index(&self, block: usize, position: usize) -> Result<usize> {
        let range = self
            .block_range(block)
            .map_err(|_| Error::VariableOutOfRange { block, position })?;
        if position == 0 || position > range.len() {
            return Err(Error::VariableOutOfRange { block, position });
        }
        Ok(range.start + position - 1)
    }

    /// Inverse of [`index`](Self::index): 1-based `(block, position)`.
    pub fn locate(&self, flat: usize) -> Option<(usize, usize)> {
        if flat >= self.num_vars() {
            return None;
        }
        let block = self.offsets.partition_point(|&o| o <= flat);
        Some((block, flat - self.offsets[block - 1] + 1))
    }

    /// Block (1-based) that holds the flat index.
    pub fn block_of(&self, flat: usize) -> Option<usize> {
        self.locate(flat).map(|(b, _)| b)
    }

    /// Builds a monomial from `(block, position, exponent)` factors.
    /// Repeated variables multiply.
    pub fn monomial(&self, factors: &[(usize, usize, u32)]) -> Result<Monomial> {
        let mut exps = alloc::vec![0u32; self.num_vars()];
        for &(block, position, e) in factors {
            let idx = self.index(block, position)?;
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::Overflow)?;
        }
        Ok(Monomial::new(exps))
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.num_vars())
    }

    pub(crate) fn check_block(&self, block: usize) -> Result<()> {
        if block == 0 || block > self.num_blocks() {
            return Err(Error::BlockOutOfRange {
                block,
                blocks: self.num_blocks(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_len(&self, m: &Monomial) -> Result<()> {
        if m.len() != self.num_vars() {
            return Err(Error::LengthMismatch {
                expected: self.num_vars(),
                found: m.len(),
            });
        }
        Ok(())
    }
}
