//! Phase-one simplex over exact rationals.
//!
//! Decides whether a target vector is a convex combination of a point set
//! (`Exact`) or dominates one (`Dominated`). Pivoting follows Bland's rule,
//! so the run is deterministic and cannot cycle. Arithmetic first runs on
//! `Ratio<i128>` with checked operations and restarts on big rationals if
//! anything overflows.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// `Σ λ_j p_j = target`
    Exact,
    /// `Σ λ_j p_j ≤ target`
    Dominated,
}

trait Scalar: Clone + Ord + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv {
    fn from_u64(v: u64) -> Self;
}

impl Scalar for Ratio<i128> {
    fn from_u64(v: u64) -> Self {
        Ratio::from_integer(i128::from(v))
    }
}

impl Scalar for BigRational {
    fn from_u64(v: u64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

/// Is there `λ ≥ 0`, `Σλ = 1`, with `Σ λ_j points[j]` equal to (or below)
/// `target`? `points` must be nonempty and all of `target`'s length.
pub(crate) fn feasible(points: &[&[u32]], target: &[u32], mode: Mode) -> bool {
    debug_assert!(!points.is_empty());
    // coordinates where every point vanishes constrain nothing but the target
    let mut rows = Vec::new();
    for (i, &t) in target.iter().enumerate() {
        if points.iter().all(|p| p[i] == 0) {
            if mode == Mode::Exact && t != 0 {
                return false;
            }
        } else {
            rows.push(i);
        }
    }
    match run::<Ratio<i128>>(points, target, &rows, mode) {
        Some(answer) => answer,
        None => run::<BigRational>(points, target, &rows, mode)
            .expect("big rational arithmetic does not overflow"),
    }
}

struct Tableau<T> {
    // each row: columns followed by the right-hand side
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    // reduced costs of the phase-one objective, last entry is -w
    cost: Vec<T>,
    first_artificial: usize,
}

fn run<T: Scalar>(points: &[&[u32]], target: &[u32], coords: &[usize], mode: Mode) -> Option<bool> {
    let q = points.len();
    let slacks = if mode == Mode::Dominated {
        coords.len()
    } else {
        0
    };
    // artificials for the equality rows plus the Σλ = 1 row
    let artificials = coords.len() - slacks + 1;
    let width = q + slacks + artificials;
    let height = coords.len() + 1;

    let mut rows = Vec::with_capacity(height);
    let mut basis = Vec::with_capacity(height);
    let mut next_art = q + slacks;
    for (r, &i) in coords.iter().enumerate() {
        let mut row = alloc::vec![T::zero(); width + 1];
        for (j, p) in points.iter().enumerate() {
            row[j] = T::from_u64(u64::from(p[i]));
        }
        row[width] = T::from_u64(u64::from(target[i]));
        if mode == Mode::Dominated {
            row[q + r] = T::one();
            basis.push(q + r);
        } else {
            row[next_art] = T::one();
            basis.push(next_art);
            next_art += 1;
        }
        rows.push(row);
    }
    let mut sum_row = alloc::vec![T::zero(); width + 1];
    for cell in sum_row.iter_mut().take(q) {
        *cell = T::one();
    }
    sum_row[next_art] = T::one();
    sum_row[width] = T::one();
    rows.push(sum_row);
    basis.push(next_art);

    let first_artificial = q + slacks;
    let mut cost = alloc::vec![T::zero(); width + 1];
    for (row, &b) in rows.iter().zip(&basis) {
        if b >= first_artificial {
            for (c, v) in cost.iter_mut().zip(row) {
                if c.is_zero() && v.is_zero() {
                    continue;
                }
                *c = c.checked_sub(v)?;
            }
        }
    }
    for c in &mut cost[first_artificial..width] {
        *c = T::zero();
    }

    let mut t = Tableau {
        rows,
        basis,
        cost,
        first_artificial,
    };
    t.solve()
}

impl<T: Scalar> Tableau<T> {
    fn solve(&mut self) -> Option<bool> {
        let width = self.cost.len() - 1;
        loop {
            if self.cost[width].is_zero() {
                return Some(true);
            }
            let zero = T::zero();
            let Some(enter) = (0..self.first_artificial).find(|&j| self.cost[j] < zero) else {
                return Some(false);
            };
            let mut leave: Option<(usize, T)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if row[enter] <= zero {
                    continue;
                }
                let ratio = row[width].checked_div(&row[enter])?;
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // phase one is bounded below by zero, so a pivot row exists
            let (pivot_row, _) = leave?;
            self.pivot(pivot_row, enter)?;
        }
    }

    fn pivot(&mut self, p: usize, enter: usize) -> Option<()> {
        let pivot = self.rows[p][enter].clone();
        for v in self.rows[p].iter_mut() {
            if !v.is_zero() {
                *v = v.checked_div(&pivot)?;
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[p]);
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r == p {
                continue;
            }
            eliminate(row, &pivot_row, enter)?;
        }
        eliminate(&mut self.cost, &pivot_row, enter)?;
        self.rows[p] = pivot_row;
        self.basis[p] = enter;
        Some(())
    }
}

fn eliminate<T: Scalar>(row: &mut [T], pivot_row: &[T], col: usize) -> Option<()> {
    let factor = row[col].clone();
    if factor.is_zero() {
        return Some(());
    }
    for (v, pv) in row.iter_mut().zip(pivot_row) {
        if pv.is_zero() {
            continue;
        }
        *v = v.checked_sub(&factor.checked_mul(pv)?)?;
    }
    Some(())
}
