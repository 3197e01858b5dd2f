//! Integral closures of monomial ideals and the auxiliary ideals built
//! from block-wise convex hulls.
//!
//! A monomial `f` lies in the closure of `I` exactly when its exponent
//! vector dominates a convex combination of the exponent vectors of
//! `G(I)`. Minimal generators of the closure are ceilings of points of
//! that hull, so candidates never exceed the per-variable maximum over
//! `G(I)` nor degree `maxdeg(G(I)) + M`.

use alloc::vec::Vec;

use crate::monomial::for_each_composition;
use crate::polyhedra::{dominates_convex_combination, in_convex_hull_exact, LogSet};
use crate::{Error, Monomial, MonomialIdeal, PartitionedVariableSet, Result};

/// Outcome of [`integral_closure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub closure: MonomialIdeal,
    pub was_closed: bool,
    /// Generators of the closure that the input ideal does not contain.
    pub added_generators: Vec<Monomial>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClosureOptions {
    /// Overrides the candidate degree bound `maxdeg + M`. A smaller cap can
    /// miss generators.
    pub degree_cap: Option<u64>,
}

pub fn integral_closure(ideal: &MonomialIdeal) -> Result<ClosureResult> {
    integral_closure_with(ideal, &ClosureOptions::default())
}

pub fn integral_closure_with(
    ideal: &MonomialIdeal,
    opts: &ClosureOptions,
) -> Result<ClosureResult> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("integral closure"));
    }
    let vars = ideal.vars();
    let set = LogSet::of_monomials(vars.num_vars(), ideal.generators())?;
    let cap = opts
        .degree_cap
        .unwrap_or_else(|| default_cap(ideal.max_degree().unwrap_or(0), vars.num_vars()));
    let gens = newton_generators(vars.num_vars(), &set, cap)?;
    let closure = MonomialIdeal::minimalize(vars, gens)?;
    let added_generators: Vec<Monomial> = closure
        .generators()
        .iter()
        .filter(|g| !ideal.contains_unchecked(g))
        .cloned()
        .collect();
    Ok(ClosureResult {
        was_closed: added_generators.is_empty(),
        closure,
        added_generators,
    })
}

pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)?.was_closed)
}

fn default_cap(max_degree: u64, num_vars: usize) -> u64 {
    max_degree.saturating_add(num_vars as u64)
}

/// Minimal lattice points of the Newton polyhedron of `set`, by
/// increasing degree.
fn newton_generators(dim: usize, set: &LogSet, cap: u64) -> Result<Vec<Monomial>> {
    let bounds: Vec<u32> = (0..dim)
        .map(|i| set.points().iter().map(|p| p[i]).max().unwrap_or(0))
        .collect();
    let top = cap.min(bounds.iter().map(|&b| u64::from(b)).sum());
    let mut accepted: Vec<Monomial> = Vec::new();
    let mut failure = None;
    for d in 0..=top {
        let mut fresh = Vec::new();
        for_each_composition(dim, d, Some(&bounds), &mut |c| {
            if failure.is_some()
                || accepted
                    .iter()
                    .any(|g| g.exponents().iter().zip(c).all(|(a, b)| a <= b))
            {
                return;
            }
            match dominates_convex_combination(c, set) {
                Ok(true) => fresh.push(Monomial::new(c.to_vec())),
                Ok(false) => {}
                Err(e) => failure = Some(e),
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        // same-degree candidates never divide each other
        accepted.extend(fresh);
    }
    Ok(accepted)
}

/// The least `k ≤ k_max` with `f^k ∈ I^k`, if any.
///
/// A hit proves `f` lies in the closure; a miss proves nothing. `I^k` is
/// never built: the search looks for `k` generators, with repetition,
/// whose product divides `f^k`.
pub fn power_membership_oracle(
    f: &Monomial,
    ideal: &MonomialIdeal,
    k_max: u32,
) -> Result<Option<u32>> {
    ideal.vars().check_len(f)?;
    if k_max == 0 {
        return Err(Error::Domain("oracle needs k_max ≥ 1"));
    }
    // only generators supported inside supp(f) can divide a power of f
    let usable: Vec<(Vec<u64>, u64)> = ideal
        .generators()
        .iter()
        .filter(|g| g.support().all(|i| f.exponents()[i] > 0))
        .map(|g| {
            (
                g.exponents().iter().map(|&e| u64::from(e)).collect(),
                g.degree(),
            )
        })
        .collect();
    if usable.is_empty() {
        return Ok(None);
    }
    let min_degree = usable.iter().map(|u| u.1).min().expect("nonempty");
    for k in 1..=k_max {
        let mut budget: Vec<u64> = f
            .exponents()
            .iter()
            .map(|&e| u64::from(e) * u64::from(k))
            .collect();
        let total = f.degree() * u64::from(k);
        if pick(&usable, 0, k, total, min_degree, &mut budget) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Whether `left` more generators from `usable[start..]` fit in `budget`.
fn pick(
    usable: &[(Vec<u64>, u64)],
    start: usize,
    left: u32,
    total: u64,
    min_degree: u64,
    budget: &mut [u64],
) -> bool {
    if left == 0 {
        return true;
    }
    if u64::from(left) * min_degree > total {
        return false;
    }
    for (i, (g, d)) in usable.iter().enumerate().skip(start) {
        if g.iter().zip(budget.iter()).any(|(a, b)| a > b) {
            continue;
        }
        budget.iter_mut().zip(g).for_each(|(b, a)| *b -= a);
        let found = pick(usable, i, left - 1, total - d, min_degree, budget);
        budget.iter_mut().zip(g).for_each(|(b, a)| *b += a);
        if found {
            return true;
        }
    }
    false
}

/// Projections of the generators onto each block, as log sets in the
/// block's own coordinates.
fn block_projections(ideal: &MonomialIdeal) -> Result<Vec<LogSet>> {
    let vars = ideal.vars();
    (1..=vars.num_blocks())
        .map(|b| {
            let range = vars.block_range(b)?;
            LogSet::new(
                range.len(),
                ideal
                    .generators()
                    .iter()
                    .map(|g| g.exponents()[range.clone()].to_vec()),
            )
        })
        .collect()
}

/// Every product of one block vector per block, as full monomials.
fn cross_products(
    vars: &PartitionedVariableSet,
    per_block: &[Vec<Vec<u32>>],
) -> Result<MonomialIdeal> {
    let mut partial: Vec<Vec<u32>> = alloc::vec![Vec::with_capacity(vars.num_vars())];
    for choices in per_block {
        let mut next = Vec::with_capacity(partial.len() * choices.len());
        for head in &partial {
            for c in choices {
                let mut v = head.clone();
                v.extend_from_slice(c);
                next.push(v);
            }
        }
        partial = next;
    }
    MonomialIdeal::minimalize(vars, partial.into_iter().map(Monomial::new))
}

/// The ideal generated by `∏ X_i^{α_i}` where each `α_i` is a lattice
/// point of the convex hull of the block-`i` projections of `G(I)`.
pub fn star_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let mut per_block = Vec::new();
    for set in block_projections(ideal)? {
        let bounds: Vec<u32> = (0..set.dim())
            .map(|i| set.points().iter().map(|p| p[i]).max().unwrap_or(0))
            .collect();
        let cap = set
            .points()
            .iter()
            .map(|p| p.iter().map(|&e| u64::from(e)).sum::<u64>())
            .max()
            .unwrap_or(0);
        let mut lattice = Vec::new();
        let mut failure = None;
        for d in 0..=cap {
            for_each_composition(set.dim(), d, Some(&bounds), &mut |c| {
                if failure.is_some() {
                    return;
                }
                match in_convex_hull_exact(c, &set) {
                    Ok(true) => lattice.push(c.to_vec()),
                    Ok(false) => {}
                    Err(e) => failure = Some(e),
                }
            });
        }
        if let Some(e) = failure {
            return Err(e);
        }
        per_block.push(lattice);
    }
    cross_products(ideal.vars(), &per_block)
}

/// The ideal generated by `∏ X_i^{⌈α_i⌉}` with each `α_i` ranging over the
/// convex hull of the block-`i` projections independently.
///
/// The ceilings of one block's hull generate the closure of the block
/// ideal, so each block contributes its closure generators.
pub fn tilde_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let mut per_block = Vec::new();
    for set in block_projections(ideal)? {
        let max_deg = set
            .points()
            .iter()
            .map(|p| p.iter().map(|&e| u64::from(e)).sum::<u64>())
            .max()
            .unwrap_or(0);
        let gens = newton_generators(set.dim(), &set, default_cap(max_deg, set.dim()))?;
        per_block.push(gens.into_iter().map(Monomial::into_exponents).collect());
    }
    cross_products(ideal.vars(), &per_block)
}

/// `Σ I_{1,l_1} ⋯ I_{n,l_n}` over all `l_1 + … + l_n = 2`, where `I_{i,l}`
/// is the block-`i` Veronese ideal of degree `l`.
pub fn structure_sum(vars: &PartitionedVariableSet) -> Result<MonomialIdeal> {
    let n = vars.num_blocks();
    if n < 2 {
        return Err(Error::Domain("structure sum needs at least two blocks"));
    }
    let mut total = MonomialIdeal::zero(vars);
    let mut failure = None;
    for_each_composition(n, 2, None, &mut |ls| {
        if failure.is_some() {
            return;
        }
        let term = ls
            .iter()
            .enumerate()
            .try_fold(MonomialIdeal::unit(vars), |acc, (i, &l)| {
                acc.product(&MonomialIdeal::veronese(vars, i + 1, l)?)
            });
        match term.and_then(|t| total.sum(&t)) {
            Ok(s) => total = s,
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Closure of `I^k` read off the `k`-fold log set of `G(I)`.
pub fn closure_of_cover_power(cover: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::Domain("power must be at least 1"));
    }
    if cover.is_zero() {
        return Err(Error::ZeroIdeal("closure of a power"));
    }
    let vars = cover.vars();
    let set = LogSet::of_monomials(vars.num_vars(), cover.generators())?.k_fold(k)?;
    let max_deg = cover.max_degree().unwrap_or(0).saturating_mul(u64::from(k));
    let gens = newton_generators(vars.num_vars(), &set, default_cap(max_deg, vars.num_vars()))?;
    MonomialIdeal::minimalize(vars, gens)
}
