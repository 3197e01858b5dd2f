//! Exact computations with monomial ideals over partitioned variable sets.
//!
//! The crate covers integral closures of monomial ideals (through exact
//! Newton-polyhedron membership), edge and vertex-cover ideals of
//! n-partite graphs with loops, and the homological invariants that follow
//! from linear-quotients certificates.
//!
//! Everything here is `no_std` and only needs `alloc`. Text formats, the
//! verification sweep and the command line live in the `idealis` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closure;
mod error;
pub mod graphs;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod polyhedra;
mod vars;

pub use closure::{integral_closure, is_integrally_closed, ClosureOptions, ClosureResult};
pub use error::{Error, Result};
pub use graphs::{Adjacency, PartitionedGraph, Vertex, VertexCover};
pub use homology::{ClassHint, InvariantReport, LinearQuotientsCertificate};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use vars::PartitionedVariableSet;

/// Binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    u64::try_from(acc).ok()
}
