//! Facet data, Gorenstein witnesses, the circulant special simplex, interior
//! and involution counts, vertex identification, and exact V-to-H conversion.
//!
//! All polyhedral work happens in the `C(n+1, 2)` upper-triangular
//! coordinates, so the symmetry equations never appear explicitly.

pub mod dd;
pub mod linalg;
pub mod lp;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ehrhart::{self, HStarVector};
use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::symmat::{
    count_symmetric, enumerate_points, enumerate_symmetric, upper_len, DilatePoint, Family,
    PointList, SymIntMatrix, DEFAULT_MAX_POINTS,
};
use linalg::{q, Q};

/// An H-representation over upper-triangular coordinates.
///
/// Each row is `[a_1, …, a_D, b]` with coprime integer entries; equations read
/// `a · x = b` and inequalities `a · x ≥ b`. `line_sum` records the common
/// row sum of the unit polytope, which fixes the candidate set when counting
/// lattice points of dilates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub n: usize,
    pub line_sum: u32,
    pub dim: usize,
    pub eqs: Vec<Vec<i64>>,
    pub ineqs: Vec<Vec<i64>>,
}

impl HRep {
    fn satisfies(&self, x: &SymIntMatrix, m: u32) -> bool {
        let coords = x.upper();
        let eval = |row: &[i64]| -> (i64, i64) {
            let (a, b) = row.split_at(row.len() - 1);
            let lhs: i64 = a.iter().zip(coords).map(|(c, &v)| c * i64::from(v)).sum();
            (lhs, b[0] * i64::from(m))
        };
        self.eqs.iter().all(|r| {
            let (l, b) = eval(r);
            l == b
        }) && self.ineqs.iter().all(|r| {
            let (l, b) = eval(r);
            l >= b
        })
    }

    /// Inequalities tight at `x` (indices into `ineqs`).
    pub fn tight_set(&self, x: &SymIntMatrix) -> Vec<usize> {
        let coords = x.upper();
        self.ineqs
            .iter()
            .enumerate()
            .filter(|(_, row)| {
                let (a, b) = row.split_at(row.len() - 1);
                let lhs: i64 = a.iter().zip(coords).map(|(c, &v)| c * i64::from(v)).sum();
                lhs == b[0]
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// The defining system of `S_n`: line sums 2 and `x_ij ≥ 0` for `i ≤ j`.
/// For `n ≤ 2` some of these inequalities coincide on the affine hull.
pub fn hrep_s(n: usize) -> HRep {
    let dlen = upper_len(n);
    let mut eqs = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![0i64; dlen + 1];
        for j in 0..n {
            let (a, b) = (i.min(j), i.max(j));
            row[crate::symmat::upper_index(n, a, b)] = 1;
        }
        row[dlen] = 2;
        eqs.push(row);
    }
    let ineqs = (0..dlen)
        .map(|k| {
            let mut row = vec![0i64; dlen + 1];
            row[k] = 1;
            row
        })
        .collect();
    HRep {
        n,
        line_sum: 2,
        dim: ehrhart::dimension(n),
        eqs,
        ineqs,
    }
}

/// Exact double-description conversion of the convex hull of `points`.
///
/// Points are homogenized as `(1, x)`. A pivot subset of the homogenized
/// columns spans the row space; constraints found there are valid on the
/// whole affine hull, whose equations come from the left null space.
pub fn v_to_h(points: &[SymIntMatrix]) -> Result<HRep> {
    let first = points
        .first()
        .ok_or_else(|| Error::invalid("v_to_h needs at least one point"))?;
    let n = first.n();
    let line_sum = first
        .common_line_sum()
        .ok_or_else(|| Error::invalid("points must have a common line sum"))?;
    if points
        .iter()
        .any(|p| p.n() != n || p.common_line_sum() != Some(line_sum))
    {
        return Err(Error::invalid("points differ in size or line sum"));
    }
    let dlen = upper_len(n);
    let hom: Vec<Vec<Q>> = points
        .iter()
        .map(|p| {
            std::iter::once(q(1))
                .chain(p.upper().iter().map(|&v| q(i64::from(v))))
                .collect()
        })
        .collect();
    let (_, pivots) = linalg::rref(hom.clone());
    let dim = pivots.len() - 1;

    let to_row = |h: &[BigInt], eq: bool| -> Result<Vec<i64>> {
        // h_0 + a·x (≥|=) 0  ⇒  a·x (≥|=) -h_0
        let mut row: Vec<i64> = h[1..]
            .iter()
            .map(|v| v.to_i64().ok_or_else(|| Error::invalid("coefficient overflow")))
            .collect::<Result<_>>()?;
        row.push(
            (-&h[0])
                .to_i64()
                .ok_or_else(|| Error::invalid("coefficient overflow"))?,
        );
        if eq {
            // Sign convention: first nonzero coefficient positive.
            if row.iter().find(|v| **v != 0).is_some_and(|v| *v < 0) {
                row.iter_mut().for_each(|v| *v = -*v);
            }
        }
        Ok(row)
    };

    // Equations: h with hom · h = 0, reduced to a canonical basis.
    let null = linalg::nullspace(&hom, dlen + 1);
    let (null_red, _) = if null.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        linalg::rref(null)
    };
    let eqs = null_red
        .iter()
        .map(|h| to_row(&linalg::primitive(h), true))
        .collect::<Result<Vec<_>>>()?;

    let projected: Vec<Vec<Q>> = hom
        .iter()
        .map(|row| pivots.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let rays = dd::extreme_rays(&projected)?;
    let mut ineqs = Vec::new();
    for ray in rays {
        let mut h = vec![BigInt::zero(); dlen + 1];
        for (k, &c) in pivots.iter().enumerate() {
            h[c] = ray[k].clone();
        }
        if h[1..].iter().all(Zero::is_zero) {
            continue;
        }
        ineqs.push(to_row(&h, false)?);
    }
    ineqs.sort();
    Ok(HRep {
        n,
        line_sum,
        dim,
        eqs,
        ineqs,
    })
}

/// Lattice points of `m·P` for the polytope `P` described by `hrep`.
pub fn lattice_points_of_dilate(hrep: &HRep, m: u32) -> Result<PointList> {
    let family = match hrep.line_sum {
        1 => Family::Sigma,
        2 => Family::S,
        other => {
            return Err(Error::invalid(format!(
                "unsupported line sum {other}; expected 1 or 2"
            )))
        }
    };
    let candidates =
        enumerate_symmetric(hrep.n, hrep.line_sum * m, DEFAULT_MAX_POINTS, Strategy::default())?;
    let points = candidates
        .into_iter()
        .filter(|x| hrep.satisfies(x, m))
        .collect();
    Ok(PointList {
        family,
        m,
        n: hrep.n,
        points,
    })
}

/// `(r, c)` with `c ∈ r·S_n` at lattice distance one from every facet
/// `x_ij ≥ 0`. Only the all-ones matrix qualifies, and it lies in `r·S_n`
/// exactly when `n = 2r`.
pub fn gorenstein_witness(n: usize) -> Option<(u32, SymIntMatrix)> {
    let ones = SymIntMatrix::all_ones(n);
    // Every facet functional x_ij evaluates to 1 on the all-ones matrix.
    debug_assert!(hrep_s(n)
        .ineqs
        .iter()
        .all(|row| { row[..row.len() - 1].iter().zip(ones.upper()).map(|(a, &v)| a * i64::from(v)).sum::<i64>() == 1 }));
    if !n.is_multiple_of(2) {
        return None;
    }
    let r = (n / 2) as u32;
    DilatePoint::new(ones.clone(), r, Family::S).ok()?;
    Some((r, ones))
}

/// The `k = n/2` circulant lattice points of `S_n` with disjoint supports
/// summing to the all-ones matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSimplex {
    pub n: usize,
    pub vertices: Vec<SymIntMatrix>,
}

/// Circulant matrix with entry `(r, c) = a[(c - r) mod n]`.
fn circulant(a: &[u32]) -> SymIntMatrix {
    let n = a.len();
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|r| (0..n).map(|c| a[(c + n - r) % n]).collect())
        .collect();
    SymIntMatrix::from_rows(&rows).expect("symmetric generator gives a symmetric circulant")
}

pub fn special_simplex(n: usize) -> Result<SpecialSimplex> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::invalid("special simplex needs even n >= 2"));
    }
    let k = n / 2;
    let mut vertices = Vec::with_capacity(k);
    for i in 1..k {
        let mut a = vec![0u32; n];
        a[i] = 1;
        a[n - i] = 1;
        vertices.push(circulant(&a));
    }
    let mut a = vec![0u32; n];
    a[0] = 1;
    a[k] = 1;
    vertices.push(circulant(&a));
    let s = SpecialSimplex { n, vertices };
    s.validate()?;
    Ok(s)
}

impl SpecialSimplex {
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for v in &self.vertices {
            DilatePoint::new(v.clone(), 1, Family::S)
                .map_err(|e| Error::falsified(format!("simplex vertex {v} not in S_{n}: {e}")))?;
        }
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                if a.upper().iter().zip(b.upper()).any(|(x, y)| *x > 0 && *y > 0) {
                    return Err(Error::falsified(format!("supports of {a} and {b} overlap")));
                }
            }
        }
        if SymIntMatrix::sum_of(&self.vertices)? != SymIntMatrix::all_ones(n) {
            return Err(Error::falsified("simplex vertices do not sum to the all-ones matrix"));
        }
        let base = &self.vertices[0];
        let diffs: Vec<Vec<Q>> = self.vertices[1..]
            .iter()
            .map(|v| {
                v.upper()
                    .iter()
                    .zip(base.upper())
                    .map(|(&x, &y)| q(i64::from(x) - i64::from(y)))
                    .collect()
            })
            .collect();
        let want = self.vertices.len() - 1;
        let got = if diffs.is_empty() { 0 } else { linalg::rank(&diffs) };
        if got != want {
            return Err(Error::falsified(format!(
                "simplex has affine dimension {got}, expected {want}"
            )));
        }
        Ok(())
    }
}

/// Interior lattice points of `m·S_n`: every entry at least 1. Subtracting
/// the all-ones matrix leaves a symmetric matrix with line sums `2m - n`.
pub fn interior_count(n: usize, m: u32) -> BigUint {
    match (2 * m as usize).checked_sub(n) {
        Some(r) => count_symmetric(n, r as u32),
        None => BigUint::zero(),
    }
}

/// Interior count by filtering the full enumeration of `m·S_n`.
pub fn interior_count_direct(n: usize, m: u32) -> Result<u64> {
    let pts = enumerate_points(n, m, Family::S)?;
    Ok(pts
        .points
        .iter()
        .filter(|p| p.upper().iter().all(|&v| v >= 1))
        .count() as u64)
}

/// Involutions of `{1, …, n}`: `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involution_count(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for k in 2..=n {
        let c = &b + BigUint::from(k - 1) * &a;
        a = b;
        b = c;
    }
    b
}

/// Convex-combination certificate for a lattice point that is not a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonVertexCertificate {
    pub point: SymIntMatrix,
    /// `(vertex, weight)` pairs with positive weights summing to 1.
    pub combination: Vec<(SymIntMatrix, Q)>,
}

impl NonVertexCertificate {
    pub fn verify(&self) -> bool {
        let dlen = self.point.upper().len();
        let mut acc = vec![Q::zero(); dlen];
        let mut total = Q::zero();
        for (v, w) in &self.combination {
            if !w.is_positive() {
                return false;
            }
            total += w;
            for (a, &x) in acc.iter_mut().zip(v.upper()) {
                *a += w * q(i64::from(x));
            }
        }
        total == q(1)
            && acc
                .iter()
                .zip(self.point.upper())
                .all(|(a, &x)| *a == q(i64::from(x)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    pub n: usize,
    pub vertices: PointList,
    pub non_vertices: Vec<NonVertexCertificate>,
}

impl VertexReport {
    pub fn to_json(&self) -> Value {
        let certs: Vec<Value> = self
            .non_vertices
            .iter()
            .map(|c| {
                json!({
                    "point": c.point,
                    "combination": c.combination.iter()
                        .map(|(v, w)| json!({"vertex": v, "weight": w.to_string()}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "vertex_count": self.vertices.len(),
            "vertices": self.vertices.points,
            "non_vertices": certs,
        })
    }
}

/// Columns `(1, x)` of the given points, as rows of the equality system.
fn hull_system(points: &[&SymIntMatrix]) -> Vec<Vec<Q>> {
    let dlen = points.first().map_or(0, |p| p.upper().len());
    let mut rows = vec![Vec::with_capacity(points.len()); dlen + 1];
    for p in points {
        rows[0].push(q(1));
        for (k, &v) in p.upper().iter().enumerate() {
            rows[k + 1].push(q(i64::from(v)));
        }
    }
    rows
}

fn target_vector(p: &SymIntMatrix) -> Vec<Q> {
    std::iter::once(q(1))
        .chain(p.upper().iter().map(|&v| q(i64::from(v))))
        .collect()
}

/// `λ ≥ 0` with `Σ λ_i = 1` and `Σ λ_i p_i = x`, if one exists.
pub fn convex_combination(x: &SymIntMatrix, points: &[&SymIntMatrix]) -> Option<Vec<Q>> {
    if points.is_empty() {
        return None;
    }
    lp::feasible_point(&hull_system(points), &target_vector(x))
}

/// Vertices of `S_n` among its lattice points, decided by exact LP: a point is
/// a vertex iff it is not a convex combination of the other lattice points.
pub fn vertices(n: usize) -> Result<VertexReport> {
    vertices_with(n, Strategy::default())
}

pub fn vertices_with(n: usize, strategy: Strategy) -> Result<VertexReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::invalid("vertices supports 1 <= n <= 4"));
    }
    let all = enumerate_points(n, 1, Family::S)?;
    let idx: Vec<usize> = (0..all.len()).collect();
    let is_vertex = par::map(strategy, &idx, |&i| {
        let others: Vec<&SymIntMatrix> = all
            .points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p)
            .collect();
        convex_combination(&all.points[i], &others).is_none()
    });
    let verts: Vec<SymIntMatrix> = all
        .points
        .iter()
        .zip(&is_vertex)
        .filter(|(_, &v)| v)
        .map(|(p, _)| p.clone())
        .collect();
    let vref: Vec<&SymIntMatrix> = verts.iter().collect();
    let mut non_vertices = Vec::new();
    for (p, &v) in all.points.iter().zip(&is_vertex) {
        if v {
            continue;
        }
        let lambda = convex_combination(p, &vref).ok_or_else(|| {
            Error::Inconsistent(format!("{p} is not in the hull of the vertices"))
        })?;
        let combination = verts
            .iter()
            .zip(lambda)
            .filter(|(_, w)| w.is_positive())
            .map(|(v, w)| (v.clone(), w))
            .collect();
        non_vertices.push(NonVertexCertificate {
            point: p.clone(),
            combination,
        });
    }
    Ok(VertexReport {
        n,
        vertices: PointList {
            family: Family::S,
            m: 1,
            n,
            points: verts,
        },
        non_vertices,
    })
}

/// Vertex test by rank: `x` is a vertex iff the line-sum equations together
/// with `x_ij = 0` on its zero cells pin down a single point.
pub fn is_vertex_by_rank(x: &SymIntMatrix) -> bool {
    let n = x.n();
    let dlen = upper_len(n);
    let h = hrep_s(n);
    let mut rows: Vec<Vec<Q>> = h
        .eqs
        .iter()
        .map(|r| r[..dlen].iter().map(|&v| q(v)).collect())
        .collect();
    for (k, &v) in x.upper().iter().enumerate() {
        if v == 0 {
            let mut row = vec![Q::zero(); dlen];
            row[k] = q(1);
            rows.push(row);
        }
    }
    linalg::rank(&rows) == dlen
}

/// `h*(P_n)` where `P_n` is the convex hull of the lattice points of `Σ_n`,
/// together with its unimodality verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeHStar {
    pub n: usize,
    pub hrep: HRep,
    pub counts: Vec<BigUint>,
    pub hstar: HStarVector,
    pub unimodal: bool,
}

impl PolytopeHStar {
    pub fn to_json(&self) -> Value {
        let mut v = self.hstar.to_json();
        v["unimodal"] = json!(self.unimodal);
        v["counts"] = json!(self.counts.iter().map(ehrhart::big_json).collect::<Vec<_>>());
        v
    }
}

pub fn hstar_p(n: usize) -> Result<PolytopeHStar> {
    if !(2..=4).contains(&n) {
        return Err(Error::invalid("hstar_p supports 2 <= n <= 4"));
    }
    let lattice = enumerate_points(n, 1, Family::Sigma)?;
    let hrep = v_to_h(&lattice.points)?;
    let d = hrep.dim;
    let ms: Vec<u32> = (0..=d as u32 + 1).collect();
    let counts: Vec<BigUint> = par::try_map(Strategy::default(), &ms, |&m| {
        lattice_points_of_dilate(&hrep, m).map(|pl| BigUint::from(pl.len()))
    })?;
    ehrhart::interpolate(&counts, d)?;
    let raw = ehrhart::hstar_transform(&counts[..=d], d);
    let mut coeffs: Vec<BigInt> = raw;
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs[0] != BigInt::one() || coeffs.iter().any(Signed::is_negative) {
        return Err(Error::falsified(format!("h*(P_{n}) = {coeffs:?} is not valid")));
    }
    let hstar = HStarVector {
        coefficients: coeffs.iter().map(|c| c.magnitude().clone()).collect(),
        dimension: d,
        den: 1,
    };
    let unimodal = hstar.is_unimodal();
    Ok(PolytopeHStar {
        n,
        hrep,
        counts,
        hstar,
        unimodal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn mat(rows: &[&[u32]]) -> SymIntMatrix {
        SymIntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn gorenstein_iff_even() {
        for n in 2..=8 {
            let w = gorenstein_witness(n);
            assert_eq!(w.is_some(), n % 2 == 0, "n = {n}");
            if let Some((r, c)) = w {
                assert_eq!(r as usize, n / 2);
                assert_eq!(c, SymIntMatrix::all_ones(n));
            }
        }
    }

    #[test]
    fn special_simplex_n6_matches_published_example() {
        let s = special_simplex(6).unwrap();
        let want = vec![
            mat(&[
                &[0, 1, 0, 0, 0, 1],
                &[1, 0, 1, 0, 0, 0],
                &[0, 1, 0, 1, 0, 0],
                &[0, 0, 1, 0, 1, 0],
                &[0, 0, 0, 1, 0, 1],
                &[1, 0, 0, 0, 1, 0],
            ]),
            mat(&[
                &[0, 0, 1, 0, 1, 0],
                &[0, 0, 0, 1, 0, 1],
                &[1, 0, 0, 0, 1, 0],
                &[0, 1, 0, 0, 0, 1],
                &[1, 0, 1, 0, 0, 0],
                &[0, 1, 0, 1, 0, 0],
            ]),
            mat(&[
                &[1, 0, 0, 1, 0, 0],
                &[0, 1, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, 1],
                &[1, 0, 0, 1, 0, 0],
                &[0, 1, 0, 0, 1, 0],
                &[0, 0, 1, 0, 0, 1],
            ]),
        ];
        assert_eq!(s.vertices, want);
    }

    #[test]
    fn special_simplex_small_and_invariants() {
        assert_eq!(special_simplex(2).unwrap().vertices, vec![mat(&[&[1, 1], &[1, 1]])]);
        let s4 = special_simplex(4).unwrap();
        assert_eq!(s4.vertices.len(), 2);
        assert_eq!(
            s4.vertices[0],
            mat(&[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0]])
        );
        for n in [2, 4, 6, 8] {
            special_simplex(n).unwrap().validate().unwrap();
        }
        assert!(special_simplex(5).is_err());
    }

    #[test]
    fn interior_and_involutions() {
        assert_eq!(interior_count(3, 1), BigUint::zero());
        assert_eq!(interior_count(3, 2), BigUint::from(4u32));
        assert_eq!(interior_count_direct(3, 2).unwrap(), 4);
        assert_eq!(interior_count_direct(3, 1).unwrap(), 0);
        let inv: Vec<u64> = (0..=5).map(|n| involution_count(n).to_u64().unwrap()).collect();
        assert_eq!(inv, vec![1, 1, 2, 4, 10, 26]);
        for n in [3usize, 5] {
            let first = (n as u32).div_ceil(2);
            for m in 1..first {
                assert!(interior_count(n, m).is_zero());
            }
            assert_eq!(interior_count(n, first), involution_count(n));
        }
        assert_eq!(interior_count_direct(5, 3).unwrap(), 26);
    }

    #[test]
    fn vertices_small() {
        let v2 = vertices(2).unwrap();
        assert_eq!(
            v2.vertices.points,
            vec![mat(&[&[0, 2], &[2, 0]]), mat(&[&[2, 0], &[0, 2]])]
        );
        let v3 = vertices(3).unwrap();
        assert_eq!(v3.vertices.len(), 5);
        assert!(v3.vertices.points.contains(&SymIntMatrix::diagonal(&[2, 2, 2])));
        assert!(v3
            .vertices
            .points
            .contains(&mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])));
        assert_eq!(v3.non_vertices.len(), 6);
        assert!(v3.non_vertices.iter().all(NonVertexCertificate::verify));
        let w = mat(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 2]]);
        assert!(v3.non_vertices.iter().any(|c| c.point == w));
    }

    #[test]
    fn lp_and_rank_routes_agree() {
        for n in 1..=4 {
            let rep = vertices_with(n, Strategy::Sequential).unwrap();
            let all = enumerate_points(n, 1, Family::S).unwrap();
            for p in &all.points {
                assert_eq!(
                    rep.vertices.points.contains(p),
                    is_vertex_by_rank(p),
                    "n = {n}, point {p}"
                );
            }
        }
    }

    #[test]
    fn hull_of_segment() {
        let pts = enumerate_points(2, 1, Family::S).unwrap().points;
        let h = v_to_h(&pts).unwrap();
        assert_eq!(h.dim, 1);
        assert_eq!(h.ineqs.len(), 2);
        let counts: Vec<usize> = (0..4)
            .map(|m| lattice_points_of_dilate(&h, m).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 5, 7]);
    }

    #[test]
    fn hull_of_s3_vertices_has_coordinate_facets() {
        let verts = vertices(3).unwrap().vertices.points;
        let h = v_to_h(&verts).unwrap();
        assert_eq!(h.dim, 3);
        let tight: BTreeSet<Vec<usize>> = (0..h.ineqs.len())
            .map(|f| {
                (0..verts.len())
                    .filter(|&v| h.tight_set(&verts[v]).contains(&f))
                    .collect()
            })
            .collect();
        let coord: BTreeSet<Vec<usize>> = (0..upper_len(3))
            .map(|k| (0..verts.len()).filter(|&v| verts[v].upper()[k] == 0).collect())
            .collect();
        assert_eq!(tight, coord);
    }

    #[test]
    fn hrep_counts_match_dp() {
        for n in 1..=3 {
            let h = hrep_s(n);
            for m in 0..=2 {
                let pl = lattice_points_of_dilate(&h, m).unwrap();
                assert_eq!(
                    BigUint::from(pl.len()),
                    crate::symmat::count_points(n, m, Family::S)
                );
            }
            let full = enumerate_points(n, 1, Family::S).unwrap().points;
            let hv = v_to_h(&full).unwrap();
            for m in 0..=2 {
                assert_eq!(
                    lattice_points_of_dilate(&hv, m).unwrap().len(),
                    lattice_points_of_dilate(&h, m).unwrap().len()
                );
            }
        }
    }

    #[test]
    fn p3_is_a_simplex() {
        let pts = enumerate_points(3, 1, Family::Sigma).unwrap().points;
        assert_eq!(pts.len(), 4);
        let h = v_to_h(&pts).unwrap();
        assert_eq!(h.dim, 3);
        assert_eq!(h.ineqs.len(), 4);
        assert_eq!(lattice_points_of_dilate(&h, 0).unwrap().len(), 1);
        assert_eq!(lattice_points_of_dilate(&h, 1).unwrap().len(), 4);
    }

    #[test]
    fn hstar_p_small() {
        let p2 = hstar_p(2).unwrap();
        assert_eq!(p2.hstar.coefficients, vec![BigUint::one()]);
        let p3 = hstar_p(3).unwrap();
        assert_eq!(p3.hstar.coefficients[0], BigUint::one());
        assert!(p3.unimodal);
    }
}
