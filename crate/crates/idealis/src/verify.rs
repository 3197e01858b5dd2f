//! Sweep over partitioned graph families, checking each known closed form
//! against what the library computes.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use idealis_core::closure::{
    closure_of_cover_power, power_membership_oracle, star_ideal, structure_sum, tilde_ideal,
};
use idealis_core::homology::{
    betti_from_certificate, closed_form_betti, find_linear_quotients, invariant_report,
};
use idealis_core::{
    binomial, integral_closure, is_integrally_closed, Adjacency, ClassHint, MonomialIdeal,
    PartitionedGraph,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::format::graph_spec;

pub const THREADS_ENV: &str = "IDEALIS_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Structure,
    Betti,
    Invariants,
    Cover,
    Powers,
    Star,
    Tilde,
    ClosednessBoundary,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Structure,
        Check::Betti,
        Check::Invariants,
        Check::Cover,
        Check::Powers,
        Check::Star,
        Check::Tilde,
        Check::ClosednessBoundary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Structure => "structure",
            Check::Betti => "betti",
            Check::Invariants => "invariants",
            Check::Cover => "cover",
            Check::Powers => "powers",
            Check::Star => "star",
            Check::Tilde => "tilde",
            Check::ClosednessBoundary => "closedness-boundary",
        }
    }

    /// The statement being checked.
    pub fn reference(self) -> &'static str {
        match self {
            Check::Structure => "closure of a strong quasi edge ideal is the sum of block products of total degree 2",
            Check::Betti => "b_i = C(M+1, M-i-1) * (i+1), last Betti number M",
            Check::Invariants => "closure quotient is Artinian with a 2-linear resolution",
            Check::Cover => "strong quasi cover ideal is principal of degree M and closed",
            Check::Powers => "closure of a cover-ideal power from the k-fold log set",
            Check::Star => "loopless complete n-partite edge ideal is closed and inside its star ideal",
            Check::Tilde => "closure inside the tilde ideal",
            Check::ClosednessBoundary => "strong quasi edge ideal is closed exactly when every block has one vertex",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_range: Vec<usize>,
    pub m_range: Vec<usize>,
    pub k_max_oracle: u32,
    pub checks: BTreeSet<Check>,
    pub max_vars: usize,
    pub adjacency: Adjacency,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_range: vec![2, 3],
            m_range: vec![1, 2, 3],
            k_max_oracle: 6,
            checks: Check::ALL.into_iter().collect(),
            max_vars: 9,
            adjacency: Adjacency::AllPairs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("{0} must be nonempty")]
    Empty(&'static str),
    #[error("block count {0} is below 2")]
    TooFewBlocks(usize),
    #[error("block sizes must be positive")]
    ZeroBlock,
    #[error("oracle bound must be at least 1")]
    ZeroOracleBound,
    #[error("no instance has at most {0} variables")]
    NoInstances(usize),
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_range.is_empty() {
            return Err(ConfigError::Empty("n range"));
        }
        if self.m_range.is_empty() {
            return Err(ConfigError::Empty("m range"));
        }
        if self.checks.is_empty() {
            return Err(ConfigError::Empty("check set"));
        }
        if let Some(&n) = self.n_range.iter().find(|&&n| n < 2) {
            return Err(ConfigError::TooFewBlocks(n));
        }
        if self.m_range.contains(&0) {
            return Err(ConfigError::ZeroBlock);
        }
        if self.k_max_oracle == 0 {
            return Err(ConfigError::ZeroOracleBound);
        }
        if self.instances().is_empty() {
            return Err(ConfigError::NoInstances(self.max_vars));
        }
        Ok(())
    }

    /// Every block-size tuple, by block count and then lexicographically.
    pub fn instances(&self) -> Vec<Vec<usize>> {
        let ns: BTreeSet<usize> = self.n_range.iter().copied().collect();
        let ms: Vec<usize> = self
            .m_range
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut out = Vec::new();
        for n in ns {
            let mut tuples = vec![Vec::new()];
            for _ in 0..n {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t: Vec<usize>| {
                        ms.iter().map(move |&m| {
                            let mut t = t.clone();
                            t.push(m);
                            t
                        })
                    })
                    .collect();
            }
            out.extend(
                tuples
                    .into_iter()
                    .filter(|t| t.iter().sum::<usize>() <= self.max_vars),
            );
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub check: Check,
    /// Block sizes, plus the power for the powers check.
    pub label: String,
    /// Graph JSON for replay.
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub outcomes: Vec<Outcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let status = if o.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} {}", o.check, o.label);
            if !o.pass {
                let _ = writeln!(out, "  statement: {}", o.check.reference());
                let _ = writeln!(out, "  expected: {}", o.expected);
                let _ = writeln!(out, "  computed: {}", o.computed);
                let _ = writeln!(out, "  instance: {}", o.instance);
            }
        }
        let _ = writeln!(out, "passed: {}, failed: {}", self.passed(), self.failed());
        out
    }

    pub fn to_json(&self) -> Value {
        let outcomes: Vec<Value> = self
            .outcomes
            .iter()
            .map(|o| {
                json!({
                    "check": o.check.as_str(),
                    "label": o.label,
                    "instance": serde_json::from_str::<Value>(&o.instance).unwrap_or(Value::Null),
                    "statement": o.check.reference(),
                    "expected": o.expected,
                    "computed": o.computed,
                    "pass": o.pass,
                })
            })
            .collect();
        json!({
            "outcomes": outcomes,
            "summary": { "passed": self.passed(), "failed": self.failed() },
        })
    }
}

/// Thread count from `IDEALIS_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Runs every selected check on every instance. Output order is fixed by
/// instance order and then check order, independent of scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<VerificationReport, ConfigError> {
    config.validate()?;
    let instances = config.instances();
    let work = || -> Vec<Outcome> {
        instances
            .par_iter()
            .map(|blocks| check_instance(config, blocks))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    let outcomes = match thread_cap() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    };
    Ok(VerificationReport { outcomes })
}

type Computed = Result<(String, bool), idealis_core::Error>;

fn outcome(
    check: Check,
    label: String,
    graph: &PartitionedGraph,
    expected: String,
    computed: Computed,
) -> Outcome {
    let (computed, pass) = computed.unwrap_or_else(|e| (format!("error: {e}"), false));
    Outcome {
        check,
        label,
        instance: graph_spec(graph),
        expected,
        computed,
        pass,
    }
}

fn blocks_label(blocks: &[usize]) -> String {
    let b: Vec<String> = blocks.iter().map(usize::to_string).collect();
    format!("blocks=({})", b.join(","))
}

fn check_instance(config: &SweepConfig, blocks: &[usize]) -> Vec<Outcome> {
    let label = blocks_label(blocks);
    let m = blocks.iter().sum::<usize>();
    let g = match PartitionedGraph::strong_quasi_n_partite(blocks, config.adjacency) {
        Ok(g) => g,
        Err(e) => {
            return vec![Outcome {
                check: *config.checks.iter().next().expect("validated"),
                label,
                instance: String::new(),
                expected: "a graph".into(),
                computed: format!("error: {e}"),
                pass: false,
            }]
        }
    };
    let edge = g.edge_ideal();
    let closure = integral_closure(&edge).map(|r| r.closure);
    let closure = || closure.clone();
    let mut out = Vec::new();
    for &check in &config.checks {
        match check {
            Check::Structure => {
                let expected = binomial(m as u64 + 1, 2).expect("small");
                let c = closure().and_then(|c| {
                    let s = structure_sum(g.vars())?;
                    let n = c.num_generators() as u64;
                    Ok((
                        format!("{n} generators, equal to structure sum: {}", c == s),
                        c == s && n == expected,
                    ))
                });
                out.push(outcome(
                    check,
                    label.clone(),
                    &g,
                    format!("{expected} generators, equal to structure sum: true"),
                    c,
                ));
            }
            Check::Betti => {
                let expected: Vec<u64> = (0..m as u64)
                    .map(|i| closed_form_betti(m as u64, i).expect("i < M"))
                    .collect();
                let c = closure().map(|c| match find_linear_quotients(&c) {
                    Some(cert) => {
                        let b = betti_from_certificate(&cert);
                        let pass = b == expected && b.last() == Some(&(m as u64));
                        (format!("{b:?}"), pass)
                    }
                    None => ("no linear-quotients certificate".into(), false),
                });
                out.push(outcome(
                    check,
                    label.clone(),
                    &g,
                    format!("{expected:?}"),
                    c,
                ));
            }
            Check::Invariants => {
                let expected = format!("height {m}, dim 0, projdim {m}, depth 0, reg 1, type {m}");
                let c = closure().and_then(|c| {
                    let r = invariant_report(&c, ClassHint::StrongQuasiClosure)?;
                    let got = format!(
                        "height {}, dim {}, projdim {}, depth {}, reg {}, type {}",
                        opt(r.height.value),
                        opt(r.dim.value),
                        opt(r.projdim.value),
                        opt(r.depth.value),
                        opt(r.reg.value),
                        opt(r.cm_type.value)
                    );
                    Ok((got.clone(), got == expected))
                });
                out.push(outcome(check, label.clone(), &g, expected, c));
            }
            Check::Cover => {
                let d = m - 1;
                let expected =
                    format!("principal of degree {m}, closed true, bight 1, dim {d}, projdim 1, depth {d}, reg {d}");
                let c = g.cover_ideal().and_then(|ic| {
                    let r = invariant_report(&ic, ClassHint::CoverIdeal)?;
                    let degree = ic.generating_degree().map_or(0, |x| x as usize);
                    let got = format!(
                        "{} of degree {}, closed {}, bight {}, dim {}, projdim {}, depth {}, reg {}",
                        if ic.is_principal() { "principal" } else { "not principal" },
                        degree,
                        is_integrally_closed(&ic)?,
                        opt(r.bight.value),
                        opt(r.dim.value),
                        opt(r.projdim.value),
                        opt(r.depth.value),
                        opt(r.reg.value)
                    );
                    Ok((got.clone(), got == expected))
                });
                out.push(outcome(check, label.clone(), &g, expected, c));
            }
            Check::Powers => {
                for k in 1..=3u32 {
                    let c = g
                        .cover_ideal()
                        .and_then(|ic| powers_agree(&ic, k, config.k_max_oracle));
                    let expected = format!(
                        "equal, every generator certified with k <= {}",
                        config.k_max_oracle
                    );
                    out.push(outcome(check, format!("{label} k={k}"), &g, expected, c));
                }
            }
            Check::Star => {
                let loopless = PartitionedGraph::complete_n_partite(blocks, config.adjacency);
                let (graph, c) = match loopless {
                    Ok(h) => {
                        let e = h.edge_ideal();
                        let c = (|| {
                            let closed = is_integrally_closed(&e)?;
                            let inside = e.is_subset_of(&star_ideal(&e)?)?;
                            Ok((
                                format!("closed {closed}, inside star ideal {inside}"),
                                closed && inside,
                            ))
                        })();
                        (h, c)
                    }
                    Err(e) => (g.clone(), Err(e)),
                };
                out.push(outcome(
                    check,
                    label.clone(),
                    &graph,
                    "closed true, inside star ideal true".into(),
                    c,
                ));
            }
            Check::Tilde => {
                let c = closure().and_then(|c| {
                    let inside = c.is_subset_of(&tilde_ideal(&edge)?)?;
                    Ok((format!("inside tilde ideal {inside}"), inside))
                });
                out.push(outcome(
                    check,
                    label.clone(),
                    &g,
                    "inside tilde ideal true".into(),
                    c,
                ));
            }
            Check::ClosednessBoundary => {
                let want = blocks.iter().all(|&b| b == 1);
                let c = is_integrally_closed(&edge)
                    .map(|closed| (format!("closed {closed}"), closed == want));
                out.push(outcome(
                    check,
                    label.clone(),
                    &g,
                    format!("closed {want}"),
                    c,
                ));
            }
        }
    }
    out
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".into(), |x| x.to_string())
}

/// Compares the k-fold route with closing the k-th power, then certifies
/// each generator with the power-membership oracle.
pub fn powers_agree(cover: &MonomialIdeal, k: u32, k_max: u32) -> Computed {
    let power = cover.power(k)?;
    let direct = integral_closure(&power)?.closure;
    let folded = closure_of_cover_power(cover, k)?;
    let equal = direct == folded;
    let mut uncertified = 0;
    for f in direct.generators() {
        if power_membership_oracle(f, &power, k_max)?.is_none() {
            uncertified += 1;
        }
    }
    Ok((
        format!("routes equal {equal}, {uncertified} generators uncertified"),
        equal && uncertified == 0,
    ))
}
