//! Symmetric nonnegative integer matrices and the lattice points of the
//! dilates of `S_n` (line sums `2m`) and `Σ_n` (line sums `m`).
//!
//! Matrices store one cell per unordered pair `{i, j}`, so symmetry holds by
//! construction. The derived ordering on [`SymIntMatrix`] is the canonical
//! point order: ascending lexicographic order on the full row-major entry
//! sequence. Comparing the upper triangle row by row gives the same result,
//! because every lower cell `(i, j)` repeats the earlier cell `(j, i)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Strategy};

/// Default ceiling on the number of points `enumerate_points` may materialize.
pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Line sums `2m`.
    S,
    /// Line sums `m`.
    Sigma,
}

impl Family {
    pub fn line_sum(self, m: u32) -> u32 {
        match self {
            Family::S => 2 * m,
            Family::Sigma => m,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::Sigma => "Sigma",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "Sigma" | "sigma" => Ok(Family::Sigma),
            other => Err(Error::invalid(format!("unknown family {other:?}"))),
        }
    }
}

/// How cells are tallied by [`SymIntMatrix::two_count`] and
/// [`SymIntMatrix::zero_count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMode {
    /// Cells of the full `n × n` matrix; off-diagonal values count twice.
    #[default]
    FullMatrix,
    /// Cells `(i, j)` with `i ≤ j` only.
    UpperTriangle,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct SymIntMatrix {
    n: usize,
    upper: Vec<u32>,
}

/// Wire form of a matrix: full rows, symmetry checked on read.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

impl TryFrom<MatrixJson> for SymIntMatrix {
    type Error = Error;
    fn try_from(value: MatrixJson) -> Result<Self> {
        let m = SymIntMatrix::from_rows(&value.rows)?;
        if m.n != value.n {
            return Err(Error::invalid(format!(
                "header says n = {} but {} rows were given",
                value.n, m.n
            )));
        }
        Ok(m)
    }
}

impl From<SymIntMatrix> for MatrixJson {
    fn from(m: SymIntMatrix) -> Self {
        MatrixJson {
            n: m.n,
            rows: m.rows(),
        }
    }
}

#[inline]
pub(crate) fn upper_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of cell `(i, j)`, `i ≤ j`, in row-major upper-triangular storage.
#[inline]
pub(crate) fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * i.saturating_sub(1) / 2 + j - i
}

impl SymIntMatrix {
    pub fn zeros(n: usize) -> Self {
        SymIntMatrix {
            n,
            upper: vec![0; upper_len(n)],
        }
    }

    /// Builds a matrix from its upper-triangular cells in row-major order.
    pub fn from_upper(n: usize, upper: Vec<u32>) -> Result<Self> {
        if upper.len() != upper_len(n) {
            return Err(Error::invalid(format!(
                "expected {} upper-triangular entries for n = {n}, got {}",
                upper_len(n),
                upper.len()
            )));
        }
        Ok(SymIntMatrix { n, upper })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("matrix has no rows"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        let mut m = SymIntMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::invalid(format!(
                        "not symmetric at ({i},{j}): {} vs {}",
                        rows[i][j], rows[j][i]
                    )));
                }
                m.set(i, j, rows[i][j]);
            }
        }
        Ok(m)
    }

    pub fn diagonal(values: &[u32]) -> Self {
        let mut m = SymIntMatrix::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn all_ones(n: usize) -> Self {
        SymIntMatrix {
            n,
            upper: vec![1; upper_len(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[u32] {
        &self.upper
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.upper[upper_index(self.n, a, b)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let k = upper_index(self.n, a, b);
        self.upper[k] = v;
    }

    pub fn row_sum(&self, i: usize) -> u32 {
        (0..self.n).map(|j| self.get(i, j)).sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.row_sum(i)).collect()
    }

    /// `Some(s)` if every row sums to `s`.
    pub fn common_line_sum(&self) -> Option<u32> {
        let sums = self.row_sums();
        let first = *sums.first()?;
        sums.iter().all(|&s| s == first).then_some(first)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Full row-major entry sequence.
    pub fn full_entries(&self) -> Vec<u32> {
        self.rows().into_iter().flatten().collect()
    }

    fn count_value(&self, value: u32, mode: CountMode) -> usize {
        let mut c = 0;
        for i in 0..self.n {
            for j in i..self.n {
                if self.get(i, j) == value {
                    c += match mode {
                        CountMode::FullMatrix if i != j => 2,
                        _ => 1,
                    };
                }
            }
        }
        c
    }

    pub fn two_count(&self, mode: CountMode) -> usize {
        self.count_value(2, mode)
    }

    pub fn zero_count(&self, mode: CountMode) -> usize {
        self.count_value(0, mode)
    }

    pub fn is_zero_one(&self) -> bool {
        self.upper.iter().all(|&v| v <= 1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let upper = self
            .upper
            .iter()
            .zip(&other.upper)
            .map(|(a, b)| a.checked_add(*b).ok_or_else(|| Error::invalid("entry overflow")))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymIntMatrix { n: self.n, upper })
    }

    /// Entrywise difference, `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.n != other.n {
            return None;
        }
        let upper = self
            .upper
            .iter()
            .zip(&other.upper)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(SymIntMatrix { n: self.n, upper })
    }

    pub fn scaled(&self, k: u32) -> Self {
        SymIntMatrix {
            n: self.n,
            upper: self.upper.iter().map(|v| v * k).collect(),
        }
    }

    /// Entrywise `self ≤ other`.
    pub fn le_entrywise(&self, other: &Self) -> bool {
        self.n == other.n && self.upper.iter().zip(&other.upper).all(|(a, b)| a <= b)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "size mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Sum of a nonempty slice of equally sized matrices.
    pub fn sum_of(ms: &[SymIntMatrix]) -> Result<Self> {
        let first = ms
            .first()
            .ok_or_else(|| Error::invalid("empty matrix sum"))?;
        ms[1..]
            .iter()
            .try_fold(first.clone(), |acc, m| acc.checked_add(m))
    }
}

impl fmt::Debug for SymIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for SymIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let strs: Vec<String> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", strs.join("; "))
    }
}

/// A matrix together with the dilate and family it is claimed to lie in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilatePoint {
    pub matrix: SymIntMatrix,
    pub dilate: u32,
    pub family: Family,
}

impl DilatePoint {
    /// Checks the row-sum invariant of the family.
    pub fn new(matrix: SymIntMatrix, dilate: u32, family: Family) -> Result<Self> {
        let want = family.line_sum(dilate);
        for (i, s) in matrix.row_sums().into_iter().enumerate() {
            if s != want {
                return Err(Error::invalid(format!(
                    "row {i} sums to {s}, expected {want} for {family} dilate {dilate}"
                )));
            }
        }
        Ok(DilatePoint {
            matrix,
            dilate,
            family,
        })
    }
}

/// All lattice points of one dilate, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointList {
    pub family: Family,
    pub m: u32,
    pub n: usize,
    pub points: Vec<SymIntMatrix>,
}

impl PointList {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, m: &SymIntMatrix) -> Option<usize> {
        self.points.binary_search(m).ok()
    }
}

/// Enumerates the lattice points of `m·S_n` or `m·Σ_n` with the default limit.
pub fn enumerate_points(n: usize, m: u32, family: Family) -> Result<PointList> {
    enumerate_points_with(n, m, family, DEFAULT_MAX_POINTS, Strategy::default())
}

pub fn enumerate_points_with(
    n: usize,
    m: u32,
    family: Family,
    max_points: u64,
    strategy: Strategy,
) -> Result<PointList> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let r = family.line_sum(m);
    let points = enumerate_symmetric(n, r, max_points, strategy)?;
    Ok(PointList {
        family,
        m,
        n,
        points,
    })
}

/// All symmetric nonnegative integer `n × n` matrices with every line sum `r`,
/// sorted canonically.
pub fn enumerate_symmetric(
    n: usize,
    r: u32,
    max_points: u64,
    strategy: Strategy,
) -> Result<Vec<SymIntMatrix>> {
    let expected = count_symmetric(n, r);
    if expected > BigUint::from(max_points) {
        return Err(Error::Capacity {
            what: format!("{expected} points for n = {n}, line sum {r}"),
            limit: max_points,
        });
    }
    // Split on the first row, then complete each prefix independently.
    let mut prefixes = Vec::new();
    let mut first = Enumerator::new(n, r);
    first.row_prefixes(0, 1, &mut prefixes);
    let chunks = par::map(strategy, &prefixes, |prefix| {
        let mut e = prefix.clone();
        let mut out = Vec::new();
        e.fill_row(1, 2, &mut out);
        out
    });
    let mut all: Vec<SymIntMatrix> = chunks.into_iter().flatten().collect();
    all.sort_unstable();
    debug_assert_eq!(BigUint::from(all.len()), expected);
    Ok(all)
}

/// Backtracking state: off-diagonal cells are chosen, each diagonal cell
/// absorbs whatever its row still needs.
#[derive(Clone)]
struct Enumerator {
    matrix: SymIntMatrix,
    residual: Vec<u32>,
}

impl Enumerator {
    fn new(n: usize, r: u32) -> Self {
        Enumerator {
            matrix: SymIntMatrix::zeros(n),
            residual: vec![r; n],
        }
    }

    /// Completes row `i` from column `j` on; when `i` is `0` the finished
    /// row prefixes are pushed instead of recursing into later rows.
    fn row_prefixes(&mut self, i: usize, j: usize, out: &mut Vec<Enumerator>) {
        let n = self.matrix.n;
        if j == n {
            let d = self.residual[i];
            self.matrix.set(i, i, d);
            self.residual[i] = 0;
            out.push(self.clone());
            self.residual[i] = d;
            self.matrix.set(i, i, 0);
            return;
        }
        let hi = self.residual[i].min(self.residual[j]);
        for v in 0..=hi {
            self.matrix.set(i, j, v);
            self.residual[i] -= v;
            self.residual[j] -= v;
            self.row_prefixes(i, j + 1, out);
            self.residual[i] += v;
            self.residual[j] += v;
        }
        self.matrix.set(i, j, 0);
    }

    fn fill_row(&mut self, i: usize, j: usize, out: &mut Vec<SymIntMatrix>) {
        let n = self.matrix.n;
        if i >= n {
            out.push(self.matrix.clone());
            return;
        }
        if j >= n {
            let d = self.residual[i];
            self.matrix.set(i, i, d);
            self.residual[i] = 0;
            self.fill_row(i + 1, i + 2, out);
            self.residual[i] = d;
            self.matrix.set(i, i, 0);
            return;
        }
        let hi = self.residual[i].min(self.residual[j]);
        for v in 0..=hi {
            self.matrix.set(i, j, v);
            self.residual[i] -= v;
            self.residual[j] -= v;
            self.fill_row(i, j + 1, out);
            self.residual[i] += v;
            self.residual[j] += v;
        }
        self.matrix.set(i, j, 0);
    }
}

/// Number of lattice points of `m·S_n` or `m·Σ_n`; `m = 0` gives 1.
pub fn count_points(n: usize, m: u32, family: Family) -> BigUint {
    count_symmetric(n, family.line_sum(m))
}

/// Number of symmetric nonnegative integer `n × n` matrices with all line
/// sums equal to `r`.
pub fn count_symmetric(n: usize, r: u32) -> BigUint {
    LatticeCounter::new().count(n, r)
}

/// Row-by-row counting with a memo keyed on the sorted residual line sums.
///
/// Fixing row `i` also fixes column `i`, and the number of completions only
/// depends on the multiset of residuals left for the remaining rows. The memo
/// is independent of `n` and `r`, so one counter can serve a whole series.
#[derive(Default)]
pub struct LatticeCounter {
    memo: HashMap<Vec<u32>, BigUint>,
}

impl LatticeCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, n: usize, r: u32) -> BigUint {
        self.count_residuals(vec![r; n])
    }

    /// Counts symmetric nonnegative matrices whose row `i` sums to
    /// `residuals[i]`.
    pub fn count_residuals(&mut self, mut residuals: Vec<u32>) -> BigUint {
        residuals.sort_unstable();
        self.count_sorted(&residuals)
    }

    fn count_sorted(&mut self, residuals: &[u32]) -> BigUint {
        match residuals.len() {
            0 => return BigUint::one(),
            // The diagonal absorbs the whole residual.
            1 => return BigUint::one(),
            _ => {}
        }
        if let Some(v) = self.memo.get(residuals) {
            return v.clone();
        }
        // Row 0 takes the largest residual; it has the most freedom, which
        // shrinks the state space of the rest.
        let (head, rest) = residuals.split_last().expect("nonempty");
        let mut total = BigUint::zero();
        let mut next = rest.to_vec();
        self.distribute(*head, rest, 0, &mut next, &mut total);
        self.memo.insert(residuals.to_vec(), total.clone());
        total
    }

    fn distribute(
        &mut self,
        budget: u32,
        rest: &[u32],
        j: usize,
        next: &mut Vec<u32>,
        total: &mut BigUint,
    ) {
        if j == rest.len() {
            let mut key = next.clone();
            key.sort_unstable();
            *total += self.count_sorted(&key);
            return;
        }
        for v in 0..=budget.min(rest[j]) {
            next[j] = rest[j] - v;
            self.distribute(budget - v, rest, j + 1, next, total);
        }
        next[j] = rest[j];
    }
}

/// `L(0), …, L(max_m)` for one family.
pub fn count_series(n: usize, family: Family, max_m: u32, strategy: Strategy) -> Vec<BigUint> {
    let ms: Vec<u32> = (0..=max_m).collect();
    if strategy.is_parallel() {
        par::map(strategy, &ms, |&m| count_points(n, m, family))
    } else {
        let mut counter = LatticeCounter::new();
        ms.iter()
            .map(|&m| counter.count(n, family.line_sum(m)))
            .collect()
    }
}

/// Small helper for tests and reports.
pub fn big_to_u64(v: &BigUint) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Strategy;
    use proptest::prelude::{any, prop_assert_eq, proptest};

    fn m(rows: &[&[u32]]) -> SymIntMatrix {
        SymIntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Brute force: every upper-triangular assignment with entries `≤ r`,
    /// filtered by the row sums.
    fn oracle(n: usize, r: u32) -> Vec<SymIntMatrix> {
        let len = upper_len(n);
        let mut out = Vec::new();
        let mut cells = vec![0u32; len];
        loop {
            let cand = SymIntMatrix::from_upper(n, cells.clone()).unwrap();
            if cand.row_sums().iter().all(|&s| s == r) {
                out.push(cand);
            }
            let mut k = 0;
            loop {
                if k == len {
                    out.sort();
                    return out;
                }
                if cells[k] < r {
                    cells[k] += 1;
                    break;
                }
                cells[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn upper_index_is_row_major() {
        for n in 1..6 {
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    assert_eq!(upper_index(n, i, j), k);
                    k += 1;
                }
            }
        }
    }

    #[test]
    fn s2_points() {
        let pl = enumerate_points(2, 1, Family::S).unwrap();
        assert_eq!(
            pl.points,
            vec![m(&[&[0, 2], &[2, 0]]), m(&[&[1, 1], &[1, 1]]), m(&[&[2, 0], &[0, 2]])]
        );
    }

    #[test]
    fn s3_and_sigma3() {
        assert_eq!(enumerate_points(3, 1, Family::S).unwrap().len(), 11);
        let sig = enumerate_points(3, 1, Family::Sigma).unwrap();
        assert_eq!(sig.len(), 4);
        // Symmetric permutation matrices of {1,2,3}: identity and three transpositions.
        assert!(sig.points.iter().all(|p| p.is_zero_one()));
    }

    #[test]
    fn enumeration_matches_oracle() {
        for n in 1..=3 {
            for r in 0..=4 {
                let got = enumerate_symmetric(n, r, DEFAULT_MAX_POINTS, Strategy::Sequential)
                    .unwrap();
                assert_eq!(got, oracle(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_points(3, 1, Family::S), BigUint::from(11u32));
        // Independent count of (e12, e13, e23) with pairwise sums ≤ 4.
        let mut brute = 0u32;
        for a in 0..=4u32 {
            for b in 0..=4 {
                for c in 0..=4 {
                    if a + b <= 4 && a + c <= 4 && b + c <= 4 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, 42);
        assert_eq!(count_points(3, 2, Family::S), BigUint::from(brute));
        for n in 1..5 {
            for f in [Family::S, Family::Sigma] {
                assert_eq!(count_points(n, 0, f), BigUint::one());
            }
        }
    }

    #[test]
    fn s_is_sigma_dilated_by_two() {
        for n in 1..=4 {
            for m in 0..=3 {
                assert_eq!(
                    count_points(n, m, Family::S),
                    count_points(n, 2 * m, Family::Sigma)
                );
            }
        }
    }

    #[test]
    fn enumeration_length_matches_count() {
        for n in 1..=4 {
            for m in 1..=2 {
                for f in [Family::S, Family::Sigma] {
                    let pl = enumerate_points(n, m, f).unwrap();
                    assert_eq!(BigUint::from(pl.len()), count_points(n, m, f));
                    let want = f.line_sum(m);
                    assert!(pl
                        .points
                        .iter()
                        .all(|p| p.row_sums().iter().all(|&s| s == want)));
                    assert!(pl.points.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }

    #[test]
    fn capacity_limit_is_reported() {
        let err = enumerate_points_with(4, 3, Family::S, 10, Strategy::Sequential).unwrap_err();
        assert!(matches!(err, Error::Capacity { limit: 10, .. }));
    }

    #[test]
    fn two_and_zero_counts() {
        let d = SymIntMatrix::diagonal(&[2, 2, 2]);
        assert_eq!(d.two_count(CountMode::FullMatrix), 3);
        assert_eq!(d.zero_count(CountMode::FullMatrix), 6);
        assert_eq!(d.zero_count(CountMode::UpperTriangle), 3);
        let tri = m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(tri.two_count(CountMode::FullMatrix), 0);
        assert_eq!(tri.zero_count(CountMode::FullMatrix), 3);
        let ones = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(ones.two_count(CountMode::FullMatrix), 0);
        assert_eq!(ones.zero_count(CountMode::FullMatrix), 0);
        let anti = m(&[&[0, 2], &[2, 0]]);
        assert_eq!(anti.two_count(CountMode::FullMatrix), 2);
        assert_eq!(anti.two_count(CountMode::UpperTriangle), 1);
    }

    #[test]
    fn canonical_order_is_full_row_major() {
        let pl = enumerate_points(3, 2, Family::S).unwrap();
        for w in pl.points.windows(2) {
            assert!(w[0].full_entries() < w[1].full_entries());
        }
    }

    #[test]
    fn json_validates_symmetry() {
        let ok: SymIntMatrix = serde_json::from_str(r#"{"n":2,"rows":[[1,1],[1,1]]}"#).unwrap();
        assert_eq!(ok, m(&[&[1, 1], &[1, 1]]));
        assert!(serde_json::from_str::<SymIntMatrix>(r#"{"n":2,"rows":[[1,0],[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<SymIntMatrix>(r#"{"n":3,"rows":[[1,1],[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<SymIntMatrix>(r#"{"n":2,"rows":[[1,1,0],[1,1]]}"#).is_err());
        let s = serde_json::to_string(&ok).unwrap();
        assert_eq!(s, r#"{"n":2,"rows":[[1,1],[1,1]]}"#);
    }

    #[test]
    fn dilate_point_rejects_bad_row_sums() {
        assert!(DilatePoint::new(m(&[&[1, 1], &[1, 1]]), 1, Family::S).is_ok());
        assert!(DilatePoint::new(m(&[&[1, 1], &[1, 1]]), 1, Family::Sigma).is_err());
    }

    proptest! {
        #[test]
        fn sorting_is_idempotent_and_permutation_independent(seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let pl = enumerate_points(3, 2, Family::S).unwrap();
            let mut shuffled = pl.points.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            shuffled.sort();
            prop_assert_eq!(&shuffled, &pl.points);
            let mut again = shuffled.clone();
            again.sort();
            prop_assert_eq!(again, shuffled);
        }
    }
}
