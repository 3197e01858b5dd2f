//! n-partite graphs with loops, their edge and cover ideals, and minimal
//! vertex covers.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Monomial, MonomialIdeal, PartitionedVariableSet, Result};

/// The vertex `x{block}_{position}` (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub block: usize,
    pub position: usize,
}

impl Vertex {
    pub fn new(block: usize, position: usize) -> Self {
        Self { block, position }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.block, self.position)
    }
}

/// Which block pairs a complete n-partite graph joins.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Adjacency {
    /// Every pair of distinct blocks.
    #[default]
    AllPairs,
    /// Only blocks `i` and `i + 1`.
    Consecutive,
}

/// A graph on the variables of a [`PartitionedVariableSet`] whose edges
/// join distinct blocks, plus a set of looped vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedGraph {
    vars: PartitionedVariableSet,
    // flat indices, u < v, sorted
    edges: Vec<(usize, usize)>,
    loops: Vec<usize>,
}

/// A minimal vertex cover, vertices in flat-index order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexCover {
    pub vertices: Vec<Vertex>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl PartitionedGraph {
    pub fn complete_n_partite(block_sizes: &[usize], adjacency: Adjacency) -> Result<Self> {
        let vars = PartitionedVariableSet::new(block_sizes)?;
        if vars.num_blocks() < 2 {
            return Err(Error::Domain(
                "an n-partite graph needs at least two blocks",
            ));
        }
        let mut edges = Vec::new();
        for u in 0..vars.num_vars() {
            for v in u + 1..vars.num_vars() {
                let (bu, bv) = (vars.block_of(u).unwrap(), vars.block_of(v).unwrap());
                let joined = match adjacency {
                    Adjacency::AllPairs => bu != bv,
                    Adjacency::Consecutive => bv == bu + 1,
                };
                if joined {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self {
            vars,
            edges,
            loops: Vec::new(),
        })
    }

    /// Complete n-partite with a loop on every vertex.
    pub fn strong_quasi_n_partite(block_sizes: &[usize], adjacency: Adjacency) -> Result<Self> {
        let mut g = Self::complete_n_partite(block_sizes, adjacency)?;
        g.loops = (0..g.vars.num_vars()).collect();
        Ok(g)
    }

    /// An arbitrary n-partite graph with loops; rejects edges inside a block.
    pub fn quasi_n_partite(
        block_sizes: &[usize],
        edges: &[(Vertex, Vertex)],
        loops: &[Vertex],
    ) -> Result<Self> {
        let vars = PartitionedVariableSet::new(block_sizes)?;
        let flat = |v: &Vertex| vars.index(v.block, v.position);
        let mut e = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (u, v) = (flat(a)?, flat(b)?);
            if a.block == b.block {
                return Err(Error::IntraBlockEdge(*a, *b));
            }
            e.push((u.min(v), u.max(v)));
        }
        e.sort_unstable();
        e.dedup();
        let mut l = loops.iter().map(flat).collect::<Result<Vec<_>>>()?;
        l.sort_unstable();
        l.dedup();
        Ok(Self {
            vars,
            edges: e,
            loops: l,
        })
    }

    pub fn vars(&self) -> &PartitionedVariableSet {
        &self.vars
    }

    pub fn vertex(&self, flat: usize) -> Vertex {
        let (b, p) = self
            .vars
            .locate(flat)
            .expect("flat index inside the variable set");
        Vertex::new(b, p)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges
            .iter()
            .map(|&(u, v)| (self.vertex(u), self.vertex(v)))
    }

    pub fn loops(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.loops.iter().map(|&v| self.vertex(v))
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_loops(&self) -> usize {
        self.loops.len()
    }

    /// `(x_u x_v : uv ∈ E) + (x_v² : v looped)`. Empty graphs give the zero
    /// ideal.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let m = self.vars.num_vars();
        let gens = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let mut e = alloc::vec![0u32; m];
                e[u] = 1;
                e[v] = 1;
                Monomial::new(e)
            })
            .chain(self.loops.iter().map(|&v| {
                let mut e = alloc::vec![0u32; m];
                e[v] = 2;
                Monomial::new(e)
            }));
        MonomialIdeal::minimalize(&self.vars, gens)
            .expect("generators built over the graph's variables")
    }

    fn hyperedges(&self) -> Result<Vec<u64>> {
        check_width(self.vars.num_vars())?;
        Ok(self
            .loops
            .iter()
            .map(|&v| 1u64 << v)
            .chain(self.edges.iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)))
            .collect())
    }

    /// All minimal vertex covers; a loop puts its vertex in every cover.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexCover>> {
        let covers = minimal_transversals(&self.hyperedges()?);
        Ok(covers
            .into_iter()
            .map(|c| VertexCover {
                vertices: bits(c).map(|v| self.vertex(v)).collect(),
            })
            .collect())
    }

    fn check_nonempty(&self) -> Result<()> {
        if self.edges.is_empty() && self.loops.is_empty() {
            return Err(Error::Domain(
                "cover ideal of a graph without edges or loops",
            ));
        }
        Ok(())
    }

    /// `⋂_{uv ∈ E} (x_u, x_v) ∩ ⋂_{v looped} (x_v)`.
    pub fn cover_ideal_by_intersection(&self) -> Result<MonomialIdeal> {
        self.check_nonempty()?;
        let m = self.vars.num_vars();
        let var = |i| Monomial::variable(m, i);
        let mut acc = MonomialIdeal::unit(&self.vars);
        for &v in &self.loops {
            acc = acc.intersection(&MonomialIdeal::principal(&self.vars, var(v))?)?;
        }
        for &(u, v) in &self.edges {
            acc = acc.intersection(&MonomialIdeal::minimalize(&self.vars, [var(u), var(v)])?)?;
        }
        Ok(acc)
    }

    /// `(∏_{v ∈ C} x_v : C a minimal vertex cover)`.
    pub fn cover_ideal_by_transversals(&self) -> Result<MonomialIdeal> {
        self.check_nonempty()?;
        let m = self.vars.num_vars();
        let gens = minimal_transversals(&self.hyperedges()?)
            .into_iter()
            .map(|c| {
                let mut e = alloc::vec![0u32; m];
                for v in bits(c) {
                    e[v] = 1;
                }
                Monomial::new(e)
            });
        MonomialIdeal::minimalize(&self.vars, gens)
    }

    /// The ideal of vertex covers, computed by both routes and checked to
    /// agree.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        let a = self.cover_ideal_by_intersection()?;
        let b = self.cover_ideal_by_transversals()?;
        if a != b {
            return Err(Error::CoverRouteMismatch);
        }
        Ok(a)
    }
}

fn check_width(m: usize) -> Result<()> {
    if m > 64 {
        return Err(Error::TooManyVertices(m));
    }
    Ok(())
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if set == 0 {
            return None;
        }
        let i = set.trailing_zeros() as usize;
        set &= set - 1;
        Some(i)
    })
}

/// Minimal transversals of a hypergraph whose edges are bitmasks, sorted
/// by size and then by vertex list. An empty edge admits no transversal.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    fn is_minimal(edges: &[u64], chosen: u64) -> bool {
        bits(chosen).all(|v| edges.iter().any(|&e| e & chosen == 1u64 << v))
    }
    fn search(edges: &[u64], chosen: u64, forbidden: u64, out: &mut Vec<u64>) {
        let Some(&open) = edges.iter().find(|&&e| e & chosen == 0) else {
            if is_minimal(edges, chosen) {
                out.push(chosen);
            }
            return;
        };
        // each transversal is reached once: branch i excludes the earlier choices
        let mut excluded = forbidden;
        for v in bits(open & !forbidden) {
            let next = chosen | 1u64 << v;
            // private edges only disappear as the set grows
            if is_minimal(edges, next) {
                search(edges, next, excluded, out);
            }
            excluded |= 1u64 << v;
        }
    }
    let mut out = Vec::new();
    if edges.contains(&0) {
        return out;
    }
    search(edges, 0, 0, &mut out);
    out.sort_unstable_by_key(|&c| (c.count_ones(), bits(c).collect::<Vec<_>>()));
    out.dedup();
    out
}

fn ideal_transversals(ideal: &MonomialIdeal, what: &'static str) -> Result<Vec<u64>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal(what));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal(what));
    }
    check_width(ideal.vars().num_vars())?;
    let edges: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |acc, v| acc | 1u64 << v))
        .collect();
    Ok(minimal_transversals(&edges))
}

/// Minimal vertex covers of `G(I)`, i.e. the minimal primes of `I`, as
/// flat-index lists.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    Ok(ideal_transversals(ideal, "minimal primes")?
        .into_iter()
        .map(|c| bits(c).collect())
        .collect())
}

/// Smallest minimal prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    let t = ideal_transversals(ideal, "height")?;
    Ok(t.iter().map(|c| c.count_ones() as usize).min().unwrap_or(0))
}

/// Largest minimal prime; equals the big height when `I` has no embedded
/// primes.
pub fn bight(ideal: &MonomialIdeal) -> Result<usize> {
    let t = ideal_transversals(ideal, "big height")?;
    Ok(t.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0))
}
