//! Linear-quotients certificates, the Betti numbers they determine, and
//! the invariant report for quotient rings `T/I`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graphs;
use crate::{binomial, Error, Monomial, MonomialIdeal, Result};

/// Orders above this many generators are only tried in canonical order.
pub const EXHAUSTIVE_SEARCH_LIMIT: usize = 12;

/// An order `f_1, …, f_q` of `G(I)` in which every colon
/// `(f_1, …, f_{j-1}) : f_j` is generated by `r_j` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    pub order: Vec<Monomial>,
    /// `r_1 = 0`, then the number of variables generating each colon.
    pub r_values: Vec<usize>,
    pub r_max: usize,
}

/// Number of variables generating `(prefix) : f`, or `None` if the colon
/// has a generator of degree other than one.
fn colon_rank(prefix: &[&Monomial], f: &Monomial) -> Option<usize> {
    let mut vars = BTreeSet::new();
    let quotients: Vec<Monomial> = prefix
        .iter()
        .map(|g| g.quotient_by_gcd(f).expect("same length"))
        .collect();
    for q in &quotients {
        match q.degree() {
            1 => {
                vars.insert(q.support().next().expect("degree one"));
            }
            // a higher-degree quotient is harmless only if a variable divides it
            _ if quotients
                .iter()
                .any(|v| v.degree() == 1 && v.divides_unchecked(q)) => {}
            _ => return None,
        }
    }
    Some(vars.len())
}

fn certify(order: Vec<Monomial>) -> Option<LinearQuotientsCertificate> {
    if order.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return None;
    }
    let mut r_values = Vec::with_capacity(order.len());
    for j in 0..order.len() {
        let prefix: Vec<&Monomial> = order[..j].iter().collect();
        r_values.push(if j == 0 {
            0
        } else {
            colon_rank(&prefix, &order[j])?
        });
    }
    let r_max = r_values.iter().copied().max().unwrap_or(0);
    Some(LinearQuotientsCertificate {
        order,
        r_values,
        r_max,
    })
}

/// Re-checks a certificate against `I`: same generators, degree order,
/// and every colon generated by exactly `r_j` variables.
pub fn verify_certificate(ideal: &MonomialIdeal, cert: &LinearQuotientsCertificate) -> bool {
    let mut sorted = cert.order.clone();
    sorted.sort();
    if sorted != ideal.generators() {
        return false;
    }
    certify(cert.order.clone()).is_some_and(|c| c == *cert)
}

/// Looks for a linear-quotients order: canonical order first, then an
/// exhaustive search over degree-compatible orders when `|G(I)|` is at
/// most [`EXHAUSTIVE_SEARCH_LIMIT`]. The search returns the first order
/// found in canonical branching order.
pub fn find_linear_quotients(ideal: &MonomialIdeal) -> Option<LinearQuotientsCertificate> {
    if ideal.is_zero() {
        return None;
    }
    let gens = ideal.generators();
    if let Some(c) = certify(gens.to_vec()) {
        return Some(c);
    }
    if gens.len() > EXHAUSTIVE_SEARCH_LIMIT {
        return None;
    }
    // whether a generator can follow depends only on the set placed before it
    let mut dead = alloc::vec![false; 1usize << gens.len()];
    let mut order = Vec::with_capacity(gens.len());
    if extend(gens, 0, &mut order, &mut dead) {
        certify(order.into_iter().map(|i| gens[i].clone()).collect())
    } else {
        None
    }
}

fn extend(gens: &[Monomial], used: usize, order: &mut Vec<usize>, dead: &mut [bool]) -> bool {
    if order.len() == gens.len() {
        return true;
    }
    if dead[used] {
        return false;
    }
    let next_degree = (0..gens.len())
        .filter(|i| used >> i & 1 == 0)
        .map(|i| gens[i].degree())
        .min()
        .expect("an unused generator remains");
    for i in 0..gens.len() {
        if used >> i & 1 == 1 || gens[i].degree() != next_degree {
            continue;
        }
        let prefix: Vec<&Monomial> = order.iter().map(|&j| &gens[j]).collect();
        if !prefix.is_empty() && colon_rank(&prefix, &gens[i]).is_none() {
            continue;
        }
        order.push(i);
        if extend(gens, used | 1 << i, order, dead) {
            return true;
        }
        order.pop();
    }
    dead[used] = true;
    false
}

/// Total Betti numbers of `I`: `b_i = Σ_j C(r_j, i)` for `i = 0..=r_max`.
pub fn betti_from_certificate(cert: &LinearQuotientsCertificate) -> Vec<u64> {
    (0..=cert.r_max)
        .map(|i| {
            cert.r_values
                .iter()
                .map(|&r| binomial(r as u64, i as u64).expect("binomial of at most 64"))
                .try_fold(0u64, u64::checked_add)
                .expect("Betti number fits in u64")
        })
        .collect()
}

/// Graded Betti numbers as `(i, degree, count)` triples: `f_j` contributes
/// `C(r_j, i)` in homological degree `i` and internal degree `deg f_j + i`.
pub fn graded_betti_from_certificate(cert: &LinearQuotientsCertificate) -> Vec<(usize, u64, u64)> {
    let mut table = alloc::collections::BTreeMap::new();
    for (f, &r) in cert.order.iter().zip(&cert.r_values) {
        for i in 0..=r {
            let c = binomial(r as u64, i as u64).expect("binomial of at most 64");
            *table.entry((i, f.degree() + i as u64)).or_insert(0u64) += c;
        }
    }
    table.into_iter().map(|((i, d), c)| (i, d, c)).collect()
}

/// `C(M+1, M-i-1) · C(i+1, i)`: the Betti numbers of the square of the
/// maximal ideal in `M` variables.
pub fn closed_form_betti(num_vars: u64, i: u64) -> Result<u64> {
    if num_vars == 0 || i >= num_vars {
        return Err(Error::Domain(
            "closed-form Betti index must satisfy i ≤ M - 1",
        ));
    }
    let a = binomial(num_vars + 1, num_vars - i - 1).ok_or(Error::Overflow)?;
    let b = binomial(i + 1, i).ok_or(Error::Overflow)?;
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// The ideal class the caller expects; checked, and recorded in the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClassHint {
    /// Closure of the edge ideal of a strong quasi n-partite graph.
    StrongQuasiClosure,
    /// Ideal of vertex covers (squarefree).
    CoverIdeal,
    Principal,
    #[default]
    Generic,
}

impl ClassHint {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassHint::StrongQuasiClosure => "strong-quasi-closure",
            ClassHint::CoverIdeal => "cover-ideal",
            ClassHint::Principal => "principal",
            ClassHint::Generic => "generic",
        }
    }
}

impl core::str::FromStr for ClassHint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong-quasi-closure" => Ok(ClassHint::StrongQuasiClosure),
            "cover-ideal" => Ok(ClassHint::CoverIdeal),
            "principal" => Ok(ClassHint::Principal),
            "generic" => Ok(ClassHint::Generic),
            _ => Err(Error::Domain("unknown class hint")),
        }
    }
}

/// How a report field was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Minimal vertex covers of the generator supports.
    MinimalPrimes,
    /// `M` for an ideal primary to the maximal ideal.
    MaximalIdealPrimary,
    /// `dim = M - height`.
    AmbientMinusHeight,
    /// From a verified linear-quotients certificate.
    LinearQuotients,
    /// Certificate Betti numbers that also match the closed form.
    LinearQuotientsClosedForm,
    /// A principal ideal is resolved by one map.
    Principal,
    /// `depth = M - projdim`.
    AuslanderBuchsbaum,
    /// Equigenerated with linear quotients, so `reg(T/I) = d - 1`.
    LinearResolution,
    /// Last Betti number of a Cohen–Macaulay quotient.
    CohenMacaulayLastBetti,
    Unavailable,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::MinimalPrimes => "minimal-primes",
            Provenance::MaximalIdealPrimary => "maximal-ideal-primary",
            Provenance::AmbientMinusHeight => "ambient-minus-height",
            Provenance::LinearQuotients => "linear-quotients",
            Provenance::LinearQuotientsClosedForm => "linear-quotients+closed-form",
            Provenance::Principal => "principal",
            Provenance::AuslanderBuchsbaum => "auslander-buchsbaum",
            Provenance::LinearResolution => "linear-resolution",
            Provenance::CohenMacaulayLastBetti => "cohen-macaulay-last-betti",
            Provenance::Unavailable => "unavailable",
        }
    }
}

/// A value together with the route that produced it; `value` is `None`
/// exactly when no supported route applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived<T> {
    pub value: Option<T>,
    pub provenance: Provenance,
}

impl<T> Derived<T> {
    fn known(value: T, provenance: Provenance) -> Self {
        Self {
            value: Some(value),
            provenance,
        }
    }

    fn unavailable() -> Self {
        Self {
            value: None,
            provenance: Provenance::Unavailable,
        }
    }
}

/// Invariants of `T/I` (Betti numbers are those of `I`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub class: ClassHint,
    pub num_vars: usize,
    pub height: Derived<usize>,
    pub bight: Derived<usize>,
    pub dim: Derived<usize>,
    pub depth: Derived<usize>,
    pub projdim: Derived<usize>,
    pub reg: Derived<u64>,
    pub betti: Derived<Vec<u64>>,
    pub cm_type: Derived<u64>,
    pub certificate: Option<LinearQuotientsCertificate>,
}

impl InvariantReport {
    pub fn is_cohen_macaulay(&self) -> Option<bool> {
        Some(self.dim.value? == self.depth.value?)
    }
}

pub fn invariant_report(ideal: &MonomialIdeal, class: ClassHint) -> Result<InvariantReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("invariant report"));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("invariant report"));
    }
    let m = ideal.vars().num_vars();
    match class {
        ClassHint::Principal if !ideal.is_principal() => {
            return Err(Error::HintMismatch("ideal is not principal"));
        }
        ClassHint::CoverIdeal if !ideal.is_squarefree() => {
            return Err(Error::HintMismatch("a cover ideal is squarefree"));
        }
        ClassHint::StrongQuasiClosure if ideal.generating_degree() != Some(2) => {
            return Err(Error::HintMismatch(
                "closure should be generated in degree 2",
            ));
        }
        _ => {}
    }

    let h = graphs::height(ideal)?;
    let height = Derived::known(h, Provenance::MinimalPrimes);
    let bight = if ideal.is_squarefree() || ideal.is_principal() {
        Derived::known(graphs::bight(ideal)?, Provenance::MinimalPrimes)
    } else if h == m {
        Derived::known(m, Provenance::MaximalIdealPrimary)
    } else {
        Derived::unavailable()
    };
    let dim = Derived::known(m - h, Provenance::AmbientMinusHeight);

    let certificate = find_linear_quotients(ideal);
    let (projdim, depth, betti, reg) = match &certificate {
        Some(cert) => {
            let route = if ideal.is_principal() {
                Provenance::Principal
            } else {
                Provenance::LinearQuotients
            };
            let pd = cert.r_max + 1;
            let b = betti_from_certificate(cert);
            let betti_route = if class == ClassHint::StrongQuasiClosure {
                let closed = (0..b.len() as u64)
                    .map(|i| closed_form_betti(m as u64, i))
                    .collect::<Result<Vec<_>>>();
                if closed.as_deref() != Ok(&b[..]) {
                    return Err(Error::HintMismatch(
                        "Betti numbers differ from the closed form",
                    ));
                }
                Provenance::LinearQuotientsClosedForm
            } else {
                route
            };
            let reg = match ideal.generating_degree() {
                Some(d) => Derived::known(d - 1, Provenance::LinearResolution),
                None => Derived::unavailable(),
            };
            (
                Derived::known(pd, route),
                Derived::known(m.saturating_sub(pd), Provenance::AuslanderBuchsbaum),
                Derived::known(b, betti_route),
                reg,
            )
        }
        None => (
            Derived::unavailable(),
            Derived::unavailable(),
            Derived::unavailable(),
            Derived::unavailable(),
        ),
    };
    let cm_type = match (dim.value, depth.value, &betti.value) {
        (Some(d), Some(e), Some(b)) if d == e => Derived::known(
            *b.last().expect("nonempty Betti list"),
            Provenance::CohenMacaulayLastBetti,
        ),
        _ => Derived::unavailable(),
    };
    Ok(InvariantReport {
        class,
        num_vars: m,
        height,
        bight,
        dim,
        depth,
        projdim,
        reg,
        betti,
        cm_type,
        certificate,
    })
}
