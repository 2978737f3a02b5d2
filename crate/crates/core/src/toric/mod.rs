//! Toric ideals of lattice-point configurations, graded reverse
//! lexicographic term orders ranked by counts of 2s and 0s, reduced Gröbner
//! bases, and checks of their structural properties.
//!
//! Variables are indexed by position in the [`PointConfig`]. A
//! [`TermOrder`] lists those indices from the smallest variable to the
//! largest.

mod engine;
pub mod lattice;
pub mod verify;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::symmat::{enumerate_points, CountMode, DilatePoint, Family, SymIntMatrix};
use engine::{RBin, Exps};
pub use engine::GroebnerLimits;
pub use verify::{
    hilbert_check, squarefree_initial_report, verify_theorem13, PropertyCheck, SquarefreeReport,
    Theorem13Report,
};

/// A finite list of lattice points of `S_n` or `Σ_n`, one variable each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub n: usize,
    pub family: Family,
    pub points: Vec<SymIntMatrix>,
}

impl PointConfig {
    /// Keeps the given order; points must be distinct lattice points of the
    /// unit polytope of `family`.
    pub fn new(family: Family, points: Vec<SymIntMatrix>) -> Result<Self> {
        let n = points
            .first()
            .map(SymIntMatrix::n)
            .ok_or_else(|| Error::invalid("a configuration needs at least one point"))?;
        for p in &points {
            if p.n() != n {
                return Err(Error::invalid("configuration points differ in size"));
            }
            DilatePoint::new(p.clone(), 1, family)?;
        }
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(Error::invalid("configuration points must be distinct"));
        }
        Ok(PointConfig { n, family, points })
    }

    /// All lattice points of `S_n`, canonically ordered.
    pub fn full(n: usize) -> Result<Self> {
        let pl = enumerate_points(n, 1, Family::S)?;
        Ok(PointConfig {
            n,
            family: Family::S,
            points: pl.points,
        })
    }

    /// The vertices of `S_n`, canonically ordered.
    pub fn vertices(n: usize) -> Result<Self> {
        let rep = crate::geometry::vertices(n)?;
        Ok(PointConfig {
            n,
            family: Family::S,
            points: rep.vertices.points,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, m: &SymIntMatrix) -> Option<usize> {
        self.points.iter().position(|p| p == m)
    }

    /// The homogenized point matrix: one row per upper-triangular
    /// coordinate, then a row of ones.
    pub fn homogenized(&self) -> Vec<Vec<i64>> {
        let dlen = self.points[0].upper().len();
        let mut rows: Vec<Vec<i64>> = (0..dlen)
            .map(|k| self.points.iter().map(|p| i64::from(p.upper()[k])).collect())
            .collect();
        rows.push(vec![1; self.points.len()]);
        rows
    }

    /// `π(t^e)`: the matrix `Σ e_i p_i` (its degree is `Σ e_i`).
    pub fn image(&self, exps: &[u32]) -> SymIntMatrix {
        let mut acc = vec![0u32; self.points[0].upper().len()];
        for (p, &e) in self.points.iter().zip(exps) {
            for (a, &v) in acc.iter_mut().zip(p.upper()) {
                *a += e * v;
            }
        }
        SymIntMatrix::from_upper(self.n, acc).expect("sizes agree")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// More 2s ⇒ smaller variable.
    LiteralDef32,
    /// More 2s ⇒ larger variable.
    #[default]
    ProofConsistent,
    /// More 2s ⇒ larger; among 2-free points, more 0s ⇒ larger.
    Refined,
    /// An explicit ranking.
    Custom,
}

impl Convention {
    pub const NAMED: [Convention; 3] = [
        Convention::LiteralDef32,
        Convention::ProofConsistent,
        Convention::Refined,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::LiteralDef32 => "literal-def32",
            Convention::ProofConsistent => "proof-consistent",
            Convention::Refined => "refined",
            Convention::Custom => "custom",
        }
    }

    /// Sort key realizing the partial order; equal keys are incomparable.
    fn key(self, p: &SymIntMatrix, mode: CountMode) -> (i64, i64) {
        let twos = p.two_count(mode) as i64;
        match self {
            Convention::LiteralDef32 => (-twos, 0),
            Convention::ProofConsistent | Convention::Custom => (twos, 0),
            Convention::Refined => (twos, if twos == 0 { p.zero_count(mode) as i64 } else { 0 }),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal-def32" | "literal" => Ok(Convention::LiteralDef32),
            "proof-consistent" | "proof" => Ok(Convention::ProofConsistent),
            "refined" => Ok(Convention::Refined),
            "custom" => Ok(Convention::Custom),
            other => Err(Error::invalid(format!("unknown order convention {other:?}"))),
        }
    }
}

/// Linear extension rule among points with equal keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Canonically larger point ⇒ larger variable.
    #[default]
    Ascending,
    /// Canonically larger point ⇒ smaller variable.
    Descending,
}

impl std::str::FromStr for TieBreak {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascending" => Ok(TieBreak::Ascending),
            "descending" => Ok(TieBreak::Descending),
            other => Err(Error::invalid(format!("unknown tie break {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub convention: Convention,
    pub tie_break: TieBreak,
    pub count_mode: CountMode,
    /// Variable indices from the smallest variable to the largest.
    pub ranking: Vec<usize>,
}

impl TermOrder {
    pub fn new(
        config: &PointConfig,
        convention: Convention,
        tie_break: TieBreak,
        count_mode: CountMode,
    ) -> Result<Self> {
        if convention == Convention::Custom {
            return Err(Error::invalid("a custom order needs an explicit ranking"));
        }
        let mut ranking: Vec<usize> = (0..config.len()).collect();
        ranking.sort_by(|&a, &b| {
            let (pa, pb) = (&config.points[a], &config.points[b]);
            let tie = match tie_break {
                TieBreak::Ascending => pa.cmp(pb),
                TieBreak::Descending => pb.cmp(pa),
            };
            convention
                .key(pa, count_mode)
                .cmp(&convention.key(pb, count_mode))
                .then(tie)
        });
        Ok(TermOrder {
            convention,
            tie_break,
            count_mode,
            ranking,
        })
    }

    pub fn with_convention(config: &PointConfig, convention: Convention) -> Result<Self> {
        Self::new(config, convention, TieBreak::default(), CountMode::default())
    }

    /// An explicit ranking, smallest variable first.
    pub fn custom(ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid("ranking must be a permutation of 0..s"));
            }
        }
        Ok(TermOrder {
            convention: Convention::Custom,
            tie_break: TieBreak::default(),
            count_mode: CountMode::default(),
            ranking,
        })
    }

    /// Checks that the ranking is a permutation and, for named conventions,
    /// a linear extension of the convention's partial order on `config`.
    pub fn validate(&self, config: &PointConfig) -> Result<()> {
        if self.ranking.len() != config.len() {
            return Err(Error::invalid("ranking length differs from the configuration"));
        }
        Self::custom(self.ranking.clone())?;
        if self.convention != Convention::Custom {
            let keys: Vec<(i64, i64)> = self
                .ranking
                .iter()
                .map(|&v| self.convention.key(&config.points[v], self.count_mode))
                .collect();
            if keys.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::invalid(format!(
                    "ranking is not a linear extension of the {} order",
                    self.convention
                )));
            }
        }
        Ok(())
    }

    /// The same ranking with `var` moved to the bottom.
    fn with_smallest(&self, var: usize) -> TermOrder {
        let mut ranking = vec![var];
        ranking.extend(self.ranking.iter().copied().filter(|&v| v != var));
        TermOrder {
            ranking,
            ..self.clone()
        }
    }

    fn to_rank(&self, e: &[u32]) -> Exps {
        self.ranking.iter().map(|&v| e[v]).collect()
    }

    fn from_rank(&self, r: &[u32]) -> Vec<u32> {
        let mut e = vec![0u32; r.len()];
        for (p, &v) in self.ranking.iter().enumerate() {
            e[v] = r[p];
        }
        e
    }

    pub fn to_json(&self) -> Value {
        json!({
            "convention": self.convention.as_str(),
            "ranking": self.ranking,
        })
    }
}

/// Graded reverse lexicographic comparison: higher degree wins; otherwise the
/// first differing exponent, scanning from the smallest variable, decides and
/// the smaller exponent gives the larger monomial.
pub fn compare(u: &[u32], v: &[u32], order: &TermOrder) -> Ordering {
    engine::grevlex(&order.to_rank(u), &order.to_rank(v))
}

/// `lead - trail` with disjoint supports; `lead` is the initial term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Vec<u32>,
    pub trail: Vec<u32>,
}

pub fn is_squarefree(m: &[u32]) -> bool {
    m.iter().all(|&e| e <= 1)
}

/// No exponent reaches `k`.
pub fn is_k_free(m: &[u32], k: u32) -> bool {
    m.iter().all(|&e| e < k)
}

fn sparse(m: &[u32]) -> BTreeMap<String, u32> {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i.to_string(), e))
        .collect()
}

impl Binomial {
    pub fn degree(&self) -> u64 {
        engine::degree(&self.lead)
    }

    pub fn to_json(&self) -> Value {
        json!({"lead": sparse(&self.lead), "trail": sparse(&self.trail)})
    }

    /// Both monomials as lists of `(matrix, exponent)`.
    pub fn to_matrix_json(&self, config: &PointConfig) -> Value {
        let side = |m: &[u32]| -> Vec<Value> {
            m.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| json!({"point": config.points[i].rows(), "exp": e}))
                .collect()
        };
        json!({"lead": side(&self.lead), "trail": side(&self.trail), "degree": self.degree()})
    }

    pub fn point_form(&self, config: &PointConfig) -> PointBinomial {
        let side = |m: &[u32]| -> Vec<(SymIntMatrix, u32)> {
            let mut v: Vec<(SymIntMatrix, u32)> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (config.points[i].clone(), e))
                .collect();
            v.sort();
            v
        };
        PointBinomial {
            lead: side(&self.lead),
            trail: side(&self.trail),
        }
    }

    /// Both sides have the same image under `π`.
    pub fn is_in_kernel(&self, config: &PointConfig) -> bool {
        self.degree() == engine::degree(&self.trail)
            && config.image(&self.lead) == config.image(&self.trail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    /// Sorted by initial term, ascending in the term order.
    pub elements: Vec<Binomial>,
    pub order: TermOrder,
    pub reduced: bool,
    rank_elems: Vec<RBin>,
}

impl GroebnerBasis {
    fn from_rank(order: TermOrder, rank_elems: Vec<RBin>) -> Self {
        let elements = rank_elems
            .iter()
            .map(|b| Binomial {
                lead: order.from_rank(&b.lead),
                trail: order.from_rank(&b.trail),
            })
            .collect();
        GroebnerBasis {
            elements,
            order,
            reduced: true,
            rank_elems,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn variables(&self) -> usize {
        self.order.ranking.len()
    }

    pub fn max_degree(&self) -> u64 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }

    /// Remainder of `monomial` on division by the basis.
    pub fn normal_form(&self, monomial: &[u32]) -> Vec<u32> {
        let r = engine::normal_form(self.order.to_rank(monomial), &self.rank_elems);
        self.order.from_rank(&r)
    }

    /// Whether some initial term divides `monomial`.
    pub fn is_standard(&self, monomial: &[u32]) -> bool {
        !self
            .elements
            .iter()
            .any(|g| engine::divides(&g.lead, monomial))
    }

    /// The S-pair of elements `i` and `j` reduced to normal form; `None`
    /// means it reduces to zero.
    pub fn reduce_spair(&self, i: usize, j: usize) -> Option<Binomial> {
        let s = self.rank_elems[i].spoly(&self.rank_elems[j])?;
        engine::reduce(&s, &self.rank_elems).map(|b| Binomial {
            lead: self.order.from_rank(&b.lead),
            trail: self.order.from_rank(&b.trail),
        })
    }

    /// Elements as sets of `(point, exponent)` pairs, independent of how the
    /// configuration was ordered.
    pub fn point_form(&self, config: &PointConfig) -> Vec<PointBinomial> {
        let mut out: Vec<PointBinomial> =
            self.elements.iter().map(|b| b.point_form(config)).collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order.to_json(),
            "reduced": self.reduced,
            "elements": self.elements.iter().map(Binomial::to_json).collect::<Vec<_>>(),
        })
    }
}

/// A binomial written over points instead of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointBinomial {
    pub lead: Vec<(SymIntMatrix, u32)>,
    pub trail: Vec<(SymIntMatrix, u32)>,
}

impl PointBinomial {
    pub fn degree(&self) -> u64 {
        self.lead.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    /// The common image of both sides under `π`.
    pub fn image(&self) -> Result<SymIntMatrix> {
        image_of(&self.lead)
    }

    pub fn trail_image(&self) -> Result<SymIntMatrix> {
        image_of(&self.trail)
    }

    pub fn lead_squarefree(&self) -> bool {
        self.lead.iter().all(|(_, e)| *e <= 1)
    }

    pub fn trail_squarefree(&self) -> bool {
        self.trail.iter().all(|(_, e)| *e <= 1)
    }

    pub fn lead_k_free(&self, k: u32) -> bool {
        self.lead.iter().all(|(_, e)| *e < k)
    }
}

fn image_of(side: &[(SymIntMatrix, u32)]) -> Result<SymIntMatrix> {
    let first = side
        .first()
        .ok_or_else(|| Error::invalid("empty monomial has no matrix image"))?;
    let mut acc = SymIntMatrix::zeros(first.0.n());
    for (m, e) in side {
        acc = acc.checked_add(&m.scaled(*e))?;
    }
    Ok(acc)
}

/// Reduced Gröbner basis of the toric ideal of `config` under `order`.
///
/// A lattice basis of the integer kernel is lifted to binomials, saturated
/// one variable at a time (a Buchberger pass with that variable cheapest),
/// and the result is completed and reduced under the target order.
pub fn toric_groebner(config: &PointConfig, order: &TermOrder) -> Result<GroebnerBasis> {
    toric_groebner_with(config, order, GroebnerLimits::default())
}

pub fn toric_groebner_with(
    config: &PointConfig,
    order: &TermOrder,
    limits: GroebnerLimits,
) -> Result<GroebnerBasis> {
    if config.is_empty() {
        return Err(Error::invalid("empty configuration"));
    }
    order.validate(config)?;
    let s = config.len();
    let deadline = limits.time_budget.map(|b| std::time::Instant::now() + b);
    let kernel = lattice::kernel_basis(&config.homogenized(), s)?;
    let split = |u: &[i64]| -> (Vec<u32>, Vec<u32>) {
        let pos = u.iter().map(|&v| v.max(0) as u32).collect();
        let neg = u.iter().map(|&v| (-v).max(0) as u32).collect();
        (pos, neg)
    };
    // Generators are carried between passes in variable-index form.
    let mut gens: Vec<(Vec<u32>, Vec<u32>)> = kernel.iter().map(|u| split(u)).collect();
    for var in 0..s {
        if gens.is_empty() {
            break;
        }
        let pass_order = order.with_smallest(var);
        let rank_gens = to_rank_bins(&gens, &pass_order);
        let g = engine::buchberger(rank_gens, limits, deadline)?;
        gens = g
            .iter()
            .map(|b| (pass_order.from_rank(&b.lead), pass_order.from_rank(&b.trail)))
            .collect();
    }
    let g = engine::buchberger(to_rank_bins(&gens, order), limits, deadline)?;
    Ok(GroebnerBasis::from_rank(order.clone(), engine::reduce_basis(g)))
}

fn to_rank_bins(gens: &[(Vec<u32>, Vec<u32>)], order: &TermOrder) -> Vec<RBin> {
    gens.iter()
        .filter_map(|(a, b)| RBin::make(order.to_rank(a), order.to_rank(b)))
        .collect()
}
