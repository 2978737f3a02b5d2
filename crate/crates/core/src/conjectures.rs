//! Checkers for the open conjectures about `S_n`, `P_n` and their toric
//! ideals. Each produces evidence at a fixed `n` and never aborts on a
//! counterexample.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ehrhart::{self, HStarVector};
use crate::error::{Error, Result};
use crate::geometry;
use crate::graphfactor::{self, Decomposition, LoopDegree};
use crate::par::{self, Strategy};
use crate::symmat::{enumerate_points, DilatePoint, Family, SymIntMatrix};
use crate::toric::{
    self, squarefree_initial_report, Convention, GroebnerBasis, GroebnerLimits, PointBinomial,
    PointConfig, TermOrder,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjectureId {
    #[serde(rename = "3.3")]
    Triangulation,
    #[serde(rename = "4.1a")]
    Connectivity,
    #[serde(rename = "4.1b")]
    ZeroOneSummand,
    #[serde(rename = "4.2")]
    RefinedOrder,
    #[serde(rename = "4.3")]
    UnimodalP,
    #[serde(rename = "4.4")]
    VertexIdeal,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 6] = [
        ConjectureId::Triangulation,
        ConjectureId::Connectivity,
        ConjectureId::ZeroOneSummand,
        ConjectureId::RefinedOrder,
        ConjectureId::UnimodalP,
        ConjectureId::VertexIdeal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConjectureId::Triangulation => "3.3",
            ConjectureId::Connectivity => "4.1a",
            ConjectureId::ZeroOneSummand => "4.1b",
            ConjectureId::RefinedOrder => "4.2",
            ConjectureId::UnimodalP => "4.3",
            ConjectureId::VertexIdeal => "4.4",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ConjectureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConjectureId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown conjecture id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds-at-this-n")]
    Holds,
    #[serde(rename = "counterexample")]
    Counterexample,
    /// The evidence neither confirms nor refutes the statement.
    #[serde(rename = "inconclusive")]
    Inconclusive,
    #[serde(rename = "resource-limit")]
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: ConjectureId,
    pub n: usize,
    pub convention: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
    /// Supporting data: counts checked, h*-vectors, degree tallies.
    pub details: Value,
}

impl ConjectureReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    fn resource_limit(id: ConjectureId, n: usize, convention: &str, msg: String) -> Self {
        ConjectureReport {
            conjecture: id,
            n,
            convention: convention.to_string(),
            verdict: Verdict::ResourceLimit,
            witnesses: Vec::new(),
            details: json!({"message": msg}),
        }
    }
}

/// Largest variable count for which [`RankingSample::All`] is enumerated
/// (8! = 40320 rankings).
pub const MAX_EXHAUSTIVE_VARIABLES: usize = 8;

/// Which rankings the vertex-ideal check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankingSample {
    All,
    Random { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureOptions {
    /// Permits `n = 4` Gröbner computations over all lattice points.
    pub allow_large: bool,
    pub limits: GroebnerLimits,
    pub rankings: RankingSample,
    pub strategy: Strategy,
}

impl Default for ConjectureOptions {
    fn default() -> Self {
        ConjectureOptions {
            allow_large: false,
            limits: GroebnerLimits::default(),
            rankings: RankingSample::All,
            strategy: Strategy::default(),
        }
    }
}

fn gate(n: usize, opts: &ConjectureOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    if n > 3 && !opts.allow_large {
        return Err(Error::invalid(format!(
            "Gröbner runs at n = {n} need the allow-large flag"
        )));
    }
    if n > 4 {
        return Err(Error::invalid("Gröbner runs are limited to n <= 4"));
    }
    Ok(())
}

/// Reduced basis of the full lattice-point configuration of `S_n`.
pub fn full_basis(
    n: usize,
    convention: Convention,
    opts: &ConjectureOptions,
) -> Result<(PointConfig, GroebnerBasis)> {
    gate(n, opts)?;
    let config = PointConfig::full(n)?;
    let order = TermOrder::with_convention(&config, convention)?;
    let basis = toric::toric_groebner_with(&config, &order, opts.limits)?;
    Ok((config, basis))
}

fn binomial_witness(b: &PointBinomial, reason: &str) -> Value {
    json!({"binomial": b, "reason": reason})
}

fn parse_binomial(w: &Value) -> Result<PointBinomial> {
    serde_json::from_value(w["binomial"].clone())
        .map_err(|e| Error::invalid(format!("malformed witness: {e}")))
}

/// Connectivity of the multigraph of a matrix, ignoring loops.
pub fn matrix_is_connected(a: &SymIntMatrix) -> Result<bool> {
    Ok(graphfactor::matrix_to_graph(a, LoopDegree::One)?.is_connected())
}

/// Whether the common image of `b` has a connected graph.
pub fn binomial_is_connected(b: &PointBinomial) -> Result<bool> {
    matrix_is_connected(&b.image()?)
}

/// A decomposition of `a ∈ k·S_n` into `k` lattice points of `S_n`, one of
/// them with 0/1 entries, if any exists.
///
/// Any 0/1 lattice point `X ≤ a` works: the rest lies in `(k-1)·S_n` and
/// always decomposes. So the search runs over the 0/1 lattice points.
pub fn zero_one_decomposition(a: &SymIntMatrix, k: u32) -> Result<Option<Decomposition>> {
    let target = DilatePoint::new(a.clone(), k, Family::S)?;
    if k == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(a.is_zero_one().then(|| Decomposition {
            target: a.clone(),
            m: 1,
            summands: vec![a.clone()],
        }));
    }
    let candidates = enumerate_points(a.n(), 1, Family::S)?;
    for x in candidates.points.iter().filter(|x| x.is_zero_one()) {
        if !x.le_entrywise(a) {
            continue;
        }
        let rest = a.checked_sub(x).expect("x <= a");
        let mut d = graphfactor::decompose(&DilatePoint::new(rest, k - 1, Family::S)?)?;
        d.summands.push(x.clone());
        d.summands.sort();
        d.target = target.matrix.clone();
        d.m = k;
        d.verify()?;
        return Ok(Some(d));
    }
    Ok(None)
}

/// Connectivity of every element of degree at least 3.
pub fn check_connectivity(basis: &GroebnerBasis, config: &PointConfig) -> Result<ConjectureReport> {
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for b in basis.point_form(config) {
        if b.degree() < 3 {
            continue;
        }
        checked += 1;
        if !binomial_is_connected(&b)? {
            witnesses.push(binomial_witness(&b, "disconnected"));
        }
    }
    Ok(finish(
        ConjectureId::Connectivity,
        config.n,
        basis,
        witnesses,
        json!({"elements": basis.len(), "checked": checked}),
    ))
}

pub fn check_zero_one_summand(
    basis: &GroebnerBasis,
    config: &PointConfig,
) -> Result<ConjectureReport> {
    let mut witnesses = Vec::new();
    let mut evidence = Vec::new();
    for b in basis.point_form(config) {
        if b.degree() < 3 {
            continue;
        }
        let a = b.image()?;
        match zero_one_decomposition(&a, b.degree() as u32)? {
            Some(d) => evidence.push(json!(d.summands)),
            None => witnesses.push(binomial_witness(&b, "no 0/1 summand")),
        }
    }
    let details = json!({
        "elements": basis.len(),
        "checked": evidence.len() + witnesses.len(),
        "decompositions": evidence,
    });
    Ok(finish(ConjectureId::ZeroOneSummand, config.n, basis, witnesses, details))
}

fn finish(
    id: ConjectureId,
    n: usize,
    basis: &GroebnerBasis,
    witnesses: Vec<Value>,
    details: Value,
) -> ConjectureReport {
    ConjectureReport {
        conjecture: id,
        n,
        convention: basis.order.convention.as_str().to_string(),
        verdict: if witnesses.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Counterexample
        },
        witnesses,
        details,
    }
}

/// Why `b` violates the refined-order statement at `n`, if it does.
pub fn refined_violation(b: &PointBinomial, n: usize) -> Option<&'static str> {
    let d = b.degree();
    if d + 1 > n as u64 {
        Some("degree exceeds n - 1")
    } else if d > 2 && !(b.lead_squarefree() && b.trail_squarefree()) {
        Some("a term of a degree > 2 element is not squarefree")
    } else {
        None
    }
}

pub fn check_refined_order(n: usize, opts: &ConjectureOptions) -> Result<ConjectureReport> {
    let (config, basis) = match full_basis(n, Convention::Refined, opts) {
        Ok(x) => x,
        Err(Error::ResourceLimit(msg)) => {
            return Ok(ConjectureReport::resource_limit(
                ConjectureId::RefinedOrder,
                n,
                Convention::Refined.as_str(),
                msg,
            ))
        }
        Err(e) => return Err(e),
    };
    let witnesses: Vec<Value> = basis
        .point_form(&config)
        .iter()
        .filter_map(|b| refined_violation(b, n).map(|r| binomial_witness(b, r)))
        .collect();
    let mut tally = std::collections::BTreeMap::new();
    for e in &basis.elements {
        *tally.entry(e.degree().to_string()).or_insert(0usize) += 1;
    }
    Ok(finish(
        ConjectureId::RefinedOrder,
        n,
        &basis,
        witnesses,
        json!({"elements": basis.len(), "max_degree": basis.max_degree(), "degree_counts": tally}),
    ))
}

pub fn check_unimodal(v: &HStarVector) -> bool {
    ehrhart::is_unimodal(&v.coefficients)
}

/// Rankings of `s` variables, smallest first.
pub fn rankings(s: usize, sample: RankingSample) -> Vec<Vec<usize>> {
    match sample {
        RankingSample::All => {
            let mut out = Vec::new();
            let mut cur: Vec<usize> = (0..s).collect();
            permutations(&mut cur, 0, &mut out);
            out.sort();
            out
        }
        RankingSample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let mut r: Vec<usize> = (0..s).collect();
                    r.shuffle(&mut rng);
                    r
                })
                .collect()
        }
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

const WRONG_DEGREE: &str = "generator degree differs from 3(n-2)";
const N_POWER: &str = "generator divisible by an n-th power";

/// Violations of the vertex-ideal statement among the initial terms of a
/// reduced basis (which minimally generate the initial ideal).
pub fn vertex_ideal_violations(basis: &GroebnerBasis, n: usize) -> Vec<(usize, &'static str)> {
    let want = 3 * (n as u64).saturating_sub(2);
    let mut out = Vec::new();
    for (i, e) in basis.elements.iter().enumerate() {
        if e.degree() != want {
            out.push((i, WRONG_DEGREE));
        }
        if !toric::is_k_free(&e.lead, n as u32) {
            out.push((i, N_POWER));
        }
    }
    out
}

pub fn check_vertex_ideal(n: usize, opts: &ConjectureOptions) -> Result<ConjectureReport> {
    gate(n, opts)?;
    let config = PointConfig::vertices(n)?;
    if opts.rankings == RankingSample::All && config.len() > MAX_EXHAUSTIVE_VARIABLES {
        return Ok(ConjectureReport::resource_limit(
            ConjectureId::VertexIdeal,
            n,
            "reverse-lex sample",
            format!(
                "{} vertices give {}! rankings; pass a random sample instead",
                config.len(),
                config.len()
            ),
        ));
    }
    let rs = rankings(config.len(), opts.rankings);
    let results = par::map(opts.strategy, &rs, |r| -> Result<(Vec<Value>, Vec<(Vec<u32>, u64)>)> {
        let order = TermOrder::custom(r.clone())?;
        let basis = toric::toric_groebner_with(&config, &order, opts.limits)?;
        let leads = basis.elements.iter().map(|e| (e.lead.clone(), e.degree())).collect();
        let w = vertex_ideal_violations(&basis, n)
            .into_iter()
            .map(|(i, why)| {
                let pb = basis.elements[i].point_form(&config);
                json!({"ranking": r, "binomial": pb, "reason": why})
            })
            .collect();
        Ok((w, leads))
    });
    let mut witnesses = Vec::new();
    let mut basis_sizes = std::collections::BTreeMap::new();
    let mut lead_forms = std::collections::BTreeSet::new();
    let mut degrees = std::collections::BTreeMap::new();
    for res in results {
        match res {
            Ok((w, leads)) => {
                *basis_sizes.entry(leads.len().to_string()).or_insert(0usize) += 1;
                for (l, d) in leads {
                    *degrees.entry(d).or_insert(0usize) += 1;
                    lead_forms.insert(l);
                }
                witnesses.extend(w);
            }
            Err(Error::ResourceLimit(msg)) => {
                return Ok(ConjectureReport::resource_limit(
                    ConjectureId::VertexIdeal,
                    n,
                    "reverse-lex sample",
                    msg,
                ))
            }
            Err(e) => return Err(e),
        }
    }
    let bound = 3 * (n as u64).saturating_sub(2);
    let max_degree = degrees.keys().next_back().copied().unwrap_or(0);
    let n_free = witnesses.iter().all(|w| w["reason"] != N_POWER);
    Ok(ConjectureReport {
        conjecture: ConjectureId::VertexIdeal,
        n,
        convention: "reverse-lex sample".into(),
        verdict: if witnesses.is_empty() {
            Verdict::Holds
        } else {
            Verdict::Counterexample
        },
        witnesses,
        details: json!({
            "vertices": config.len(),
            "rankings": rs.len(),
            "basis_sizes": basis_sizes,
            "generator_degrees": degrees,
            "distinct_initial_terms": lead_forms.len(),
            // The weaker reading: degrees bounded by 3(n-2) rather than equal.
            "holds_with_degree_at_most": max_degree <= bound
                && n_free,
        }),
    })
}

/// Squarefree initial ideal under `convention` certifies a regular unimodular
/// triangulation; for even `n` the h* unimodality consequence is checked too.
pub fn check_squarefree_triangulation(
    n: usize,
    convention: Convention,
    opts: &ConjectureOptions,
) -> Result<ConjectureReport> {
    let mut details = json!({});
    let mut witnesses = Vec::new();
    let mut squarefree = None;
    if n <= 3 || opts.allow_large {
        match full_basis(n, convention, opts) {
            Ok((config, basis)) => {
                let r = squarefree_initial_report(&basis, &config);
                details["squarefree"] = json!(r.squarefree);
                details["elements"] = json!(basis.len());
                squarefree = Some(r.squarefree);
                for b in basis.point_form(&config) {
                    if !b.lead_squarefree() {
                        witnesses.push(binomial_witness(&b, "initial term not squarefree"));
                    }
                }
            }
            Err(Error::ResourceLimit(msg)) => {
                details["groebner"] = json!({"resource_limit": msg});
            }
            Err(e) => return Err(e),
        }
    }
    let mut unimodal = None;
    if n.is_multiple_of(2) {
        let h = ehrhart::hstar_s(n)?;
        unimodal = Some(check_unimodal(&h));
        details["hstar"] = h.to_json();
        details["unimodal"] = json!(unimodal);
    }
    // A non-squarefree initial ideal for one order refutes nothing; a
    // non-unimodal h* for even n would.
    let verdict = match (squarefree, unimodal) {
        (_, Some(false)) => Verdict::Counterexample,
        (Some(true), _) => Verdict::Holds,
        _ => Verdict::Inconclusive,
    };
    if unimodal == Some(false) {
        witnesses.push(json!({"hstar": details["hstar"].clone(), "reason": "h* not unimodal"}));
    }
    Ok(ConjectureReport {
        conjecture: ConjectureId::Triangulation,
        n,
        convention: convention.as_str().to_string(),
        verdict,
        witnesses,
        details,
    })
}

pub fn check_unimodal_p(n: usize) -> Result<ConjectureReport> {
    let p = geometry::hstar_p(n)?;
    let mut witnesses = Vec::new();
    if !p.unimodal {
        witnesses.push(json!({"hstar": p.to_json()["hstar"].clone(), "reason": "h* not unimodal"}));
    }
    Ok(ConjectureReport {
        conjecture: ConjectureId::UnimodalP,
        n,
        convention: "none".into(),
        verdict: if p.unimodal {
            Verdict::Holds
        } else {
            Verdict::Counterexample
        },
        witnesses,
        details: json!({"hstar": p.to_json(), "facets": p.hrep.ineqs.len()}),
    })
}

/// Runs one checker. `convention` applies to the triangulation, connectivity
/// and 0/1-summand checks; the refined-order check always uses its own order.
pub fn run(
    id: ConjectureId,
    n: usize,
    convention: Convention,
    opts: &ConjectureOptions,
) -> Result<ConjectureReport> {
    let with_basis = |f: fn(&GroebnerBasis, &PointConfig) -> Result<ConjectureReport>| {
        match full_basis(n, convention, opts) {
            Ok((config, basis)) => f(&basis, &config),
            Err(Error::ResourceLimit(msg)) => Ok(ConjectureReport::resource_limit(
                id,
                n,
                convention.as_str(),
                msg,
            )),
            Err(e) => Err(e),
        }
    };
    match id {
        ConjectureId::Triangulation => check_squarefree_triangulation(n, convention, opts),
        ConjectureId::Connectivity => with_basis(check_connectivity),
        ConjectureId::ZeroOneSummand => with_basis(check_zero_one_summand),
        ConjectureId::RefinedOrder => check_refined_order(n, opts),
        ConjectureId::UnimodalP => check_unimodal_p(n),
        ConjectureId::VertexIdeal => check_vertex_ideal(n, opts),
    }
}

/// Re-runs the relevant predicate on every stored witness; true when each
/// witness still fails it.
pub fn recheck_witnesses(report: &ConjectureReport) -> Result<bool> {
    let n = report.n;
    for w in &report.witnesses {
        let still_fails = match report.conjecture {
            ConjectureId::Connectivity => !binomial_is_connected(&parse_binomial(w)?)?,
            ConjectureId::ZeroOneSummand => {
                let b = parse_binomial(w)?;
                zero_one_decomposition(&b.image()?, b.degree() as u32)?.is_none()
            }
            ConjectureId::RefinedOrder => refined_violation(&parse_binomial(w)?, n).is_some(),
            ConjectureId::Triangulation => {
                if w.get("binomial").is_some() {
                    !parse_binomial(w)?.lead_squarefree()
                } else {
                    let v: Vec<u64> = serde_json::from_value(w["hstar"]["hstar"].clone())
                        .map_err(|e| Error::invalid(format!("malformed witness: {e}")))?;
                    !ehrhart::is_unimodal(&v)
                }
            }
            ConjectureId::UnimodalP => {
                let v: Vec<u64> = serde_json::from_value(w["hstar"].clone())
                    .map_err(|e| Error::invalid(format!("malformed witness: {e}")))?;
                !ehrhart::is_unimodal(&v)
            }
            ConjectureId::VertexIdeal => {
                let b = parse_binomial(w)?;
                b.degree() != 3 * (n as u64).saturating_sub(2) || !b.lead_k_free(n as u32)
            }
        };
        if !still_fails {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[u32]]) -> SymIntMatrix {
        SymIntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn connectivity_self_test() {
        let tri = [&[0u32, 1, 1][..], &[1, 0, 1], &[1, 1, 0]];
        let mut rows = vec![vec![0u32; 6]; 6];
        for b in [0, 3] {
            for i in 0..3 {
                for j in 0..3 {
                    rows[b + i][b + j] = tri[i][j];
                }
            }
        }
        let blocks = SymIntMatrix::from_rows(&rows).unwrap();
        assert!(!matrix_is_connected(&blocks).unwrap());
        assert!(matrix_is_connected(&mat(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 2]])).is_ok());
        assert!(matrix_is_connected(&mat(tri.as_slice())).unwrap());
    }

    #[test]
    fn zero_one_summand_examples() {
        // diag(2,2,2) + 2·C with C the off-diagonal ones matrix.
        let a = mat(&[&[2, 2, 2], &[2, 2, 2], &[2, 2, 2]]);
        let d = zero_one_decomposition(&a, 3).unwrap().unwrap();
        d.verify().unwrap();
        assert!(d.summands.iter().any(SymIntMatrix::is_zero_one));
        // k = 1 bypass.
        let c = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert!(zero_one_decomposition(&c, 1).unwrap().is_some());
        assert!(zero_one_decomposition(&SymIntMatrix::diagonal(&[2, 2, 2]), 1)
            .unwrap()
            .is_none());
        // diag(4,4,4) has no 0/1 summand.
        assert!(zero_one_decomposition(&SymIntMatrix::diagonal(&[4, 4, 4]), 2)
            .unwrap()
            .is_none());
    }

    #[test]
    fn unimodal_examples() {
        assert!(ehrhart::is_unimodal(&[1, 7, 4]));
        assert!(!ehrhart::is_unimodal(&[1, 2, 1, 2]));
        assert!(ehrhart::is_unimodal(&[1]));
    }

    #[test]
    fn all_rankings_of_five() {
        let r = rankings(5, RankingSample::All);
        assert_eq!(r.len(), 120);
        let mut d = r.clone();
        d.dedup();
        assert_eq!(d.len(), 120);
    }

    #[test]
    fn vertex_ideal_small() {
        let opts = ConjectureOptions::default();
        let r2 = check_vertex_ideal(2, &opts).unwrap();
        assert_eq!(r2.verdict, Verdict::Holds);
        assert_eq!(r2.details["vertices"], json!(2));
        let r3 = check_vertex_ideal(3, &opts).unwrap();
        assert_eq!(r3.verdict, Verdict::Holds, "{}", r3.to_json());
        assert_eq!(r3.details["rankings"], json!(120));
        assert_eq!(r3.details["basis_sizes"], json!({"1": 120}));
        assert_eq!(r3.details["distinct_initial_terms"], json!(2));
    }

    #[test]
    fn n3_reports_are_deterministic_and_recheck() {
        let opts = ConjectureOptions::default();
        for id in [
            ConjectureId::Triangulation,
            ConjectureId::Connectivity,
            ConjectureId::ZeroOneSummand,
            ConjectureId::RefinedOrder,
        ] {
            let a = run(id, 3, Convention::ProofConsistent, &opts).unwrap();
            let b = run(id, 3, Convention::ProofConsistent, &opts).unwrap();
            assert_eq!(a.to_json(), b.to_json());
            assert!(recheck_witnesses(&a).unwrap(), "{id}");
        }
    }

    #[test]
    fn refined_order_at_two_records_boundary() {
        let r = check_refined_order(2, &ConjectureOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert!(recheck_witnesses(&r).unwrap());
    }

    #[test]
    fn large_runs_are_gated() {
        assert!(full_basis(4, Convention::ProofConsistent, &ConjectureOptions::default()).is_err());
    }
}
