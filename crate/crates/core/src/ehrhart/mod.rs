//! Ehrhart polynomials, the period-2 quasipolynomial of `Σ_n`, and
//! h*-vectors.
//!
//! h*-coefficients come from the finite alternating-sum transform
//! `h*_j = Σ_{i ≤ j} (-1)^{j-i} C(d+1, j-i) L(i)` (and its `t²` analogue for
//! denominator 2), so no power series is ever truncated.

pub mod poly;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry;
use crate::par::Strategy;
use crate::symmat::{count_points, count_series, Family};

pub use poly::Polynomial;

/// `C(n, 2)`, the dimension of `S_n` and `Σ_n`.
pub fn dimension(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lattice-point counts of consecutive dilates with their interpolating
/// polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct EhrhartData {
    pub dimension: usize,
    pub counts: Vec<BigUint>,
    pub polynomial: Polynomial,
}

impl EhrhartData {
    pub fn eval(&self, m: i64) -> BigRational {
        self.polynomial.eval_int(m)
    }

    /// Coefficients of `L` in the basis `C(m, k)`.
    pub fn binomial_coefficients(&self) -> Vec<BigInt> {
        let vals: Vec<BigInt> = self.counts[..=self.dimension]
            .iter()
            .map(|c| BigInt::from(c.clone()))
            .collect();
        poly::forward_differences(&vals)
    }
}

/// Interpolates a degree-`d` polynomial through `counts[0..=d]` and checks
/// every further count against it.
pub fn interpolate(counts: &[BigUint], d: usize) -> Result<EhrhartData> {
    if counts.len() < d + 1 {
        return Err(Error::invalid(format!(
            "degree {d} needs {} counts, got {}",
            d + 1,
            counts.len()
        )));
    }
    let vals: Vec<BigRational> = counts.iter().map(to_rational).collect();
    let polynomial = Polynomial::interpolate_consecutive(&vals[..=d]);
    for (m, v) in vals.iter().enumerate().skip(d + 1) {
        if &polynomial.eval_int(m as i64) != v {
            return Err(Error::Inconsistent(format!(
                "count L({m}) = {v} is not reproduced by the degree-{d} interpolant {polynomial}"
            )));
        }
    }
    Ok(EhrhartData {
        dimension: d,
        counts: counts.to_vec(),
        polynomial,
    })
}

fn to_rational(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Numerator of the Ehrhart series over `(1 - t^den)^(d+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarVector {
    pub coefficients: Vec<BigUint>,
    /// Dimension `d`; the denominator exponent is `d + 1`.
    pub dimension: usize,
    pub den: u32,
}

impl HStarVector {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }

    pub fn sum(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal(&self.coefficients)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.dimension,
            "hstar": self.coefficients.iter().map(big_json).collect::<Vec<_>>(),
            "den": self.den,
            "degree": self.degree(),
            "palindromic": self.is_palindromic(),
        })
    }
}

/// Weakly increases to some peak, then weakly decreases.
pub fn is_unimodal<T: PartialOrd>(v: &[T]) -> bool {
    let mut i = 0;
    while i + 1 < v.len() && v[i] <= v[i + 1] {
        i += 1;
    }
    while i + 1 < v.len() && v[i] >= v[i + 1] {
        i += 1;
    }
    i + 1 >= v.len()
}

/// JSON number when it fits in `u64`, decimal string otherwise.
pub fn big_json(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

/// `h*_j` for `j < counts.len()`, with signs kept so callers can diagnose.
pub fn hstar_transform(counts: &[BigUint], d: usize) -> Vec<BigInt> {
    let binom: Vec<BigInt> = (0..=d + 1)
        .map(|k| BigInt::from(poly::binomial(d as u64 + 1, k as u64)))
        .collect();
    (0..counts.len())
        .map(|j| {
            let mut acc = BigInt::zero();
            for i in 0..=j {
                let k = j - i;
                if k > d + 1 {
                    continue;
                }
                let term = &binom[k] * BigInt::from(counts[i].clone());
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Numerator coefficients over `(1 - t²)^(d+1)` for indices `< counts.len()`.
pub fn hstar_transform_den2(counts: &[BigUint], d: usize) -> Vec<BigInt> {
    (0..counts.len())
        .map(|j| {
            let mut acc = BigInt::zero();
            for i in 0..=(d + 1).min(j / 2) {
                let term = BigInt::from(poly::binomial(d as u64 + 1, i as u64))
                    * BigInt::from(counts[j - 2 * i].clone());
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Checks sign and normalization, strips trailing zeros, and converts.
fn finish_vector(raw: &[BigInt], what: &str) -> Result<Vec<BigUint>> {
    let mut v: Vec<BigInt> = raw.to_vec();
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.first() != Some(&BigInt::one()) {
        return Err(Error::falsified(format!(
            "{what}: h*_0 = {:?}, expected 1",
            v.first()
        )));
    }
    v.iter()
        .enumerate()
        .map(|(j, c)| {
            if c.sign() == Sign::Minus {
                Err(Error::falsified(format!("{what}: h*_{j} = {c} is negative")))
            } else {
                Ok(c.magnitude().clone())
            }
        })
        .collect()
}

/// Degree of `h*(S_n)`: `2k² - 2k + 1` for `n = 2k`, `2k²` for `n = 2k + 1`.
pub fn expected_hstar_degree_s(n: usize) -> usize {
    let k = n / 2;
    if n.is_multiple_of(2) {
        2 * k * k - 2 * k + 1
    } else {
        2 * k * k
    }
}

/// Degree of `h*(Σ_n)`: twice that of `S_n`, plus one when `n` is odd.
pub fn expected_hstar_degree_sigma(n: usize) -> usize {
    2 * expected_hstar_degree_s(n) + n % 2
}

/// Lattice-point counts `L_{S_n}(0..=max_m)`.
pub fn counts_s(n: usize, max_m: u32) -> Vec<BigUint> {
    count_series(n, Family::S, max_m, Strategy::default())
}

/// Ehrhart polynomial of `S_n` from `d + 2` counts (one verification count).
pub fn ehrhart_s(n: usize) -> Result<EhrhartData> {
    let d = dimension(n);
    interpolate(&counts_s(n, d as u32 + 1), d)
}

/// `h*(S_n)`.
///
/// Every coefficient up to `max(d, expected + 1)` is computed; everything
/// past the expected degree must vanish and the top one must not.
pub fn hstar_s(n: usize) -> Result<HStarVector> {
    if n < 2 {
        return Err(Error::invalid("hstar_s needs n >= 2"));
    }
    let d = dimension(n);
    let expected = expected_hstar_degree_s(n);
    let top = d.max(expected + 1);
    let counts = counts_s(n, top as u32);
    let raw = hstar_transform(&counts, d);
    for (j, c) in raw.iter().enumerate().skip(expected + 1) {
        if !c.is_zero() {
            return Err(Error::falsified(format!(
                "h*_{j}(S_{n}) = {c} but the degree should be {expected}"
            )));
        }
    }
    if raw[expected].is_zero() {
        return Err(Error::falsified(format!(
            "h*_{expected}(S_{n}) vanishes; degree is below {expected}"
        )));
    }
    let coefficients = finish_vector(&raw, &format!("S_{n}"))?;
    Ok(HStarVector {
        coefficients,
        dimension: d,
        den: 1,
    })
}

/// `h*(Σ_n)` over `(1 - t²)^(d+1)`, checked against `h*(S_n)` (its
/// even-indexed entries) and for palindromicity.
pub fn hstar_sigma(n: usize) -> Result<HStarVector> {
    if n < 2 {
        return Err(Error::invalid("hstar_sigma needs n >= 2"));
    }
    let d = dimension(n);
    let counts = count_series(n, Family::Sigma, 2 * (d as u32 + 1) - 1, Strategy::default());
    let raw = hstar_transform_den2(&counts, d);
    let coefficients = finish_vector(&raw, &format!("Sigma_{n}"))?;
    let v = HStarVector {
        coefficients,
        dimension: d,
        den: 2,
    };
    let s = hstar_s(n)?;
    let evens: Vec<BigUint> = v.coefficients.iter().step_by(2).cloned().collect();
    if evens != s.coefficients {
        return Err(Error::falsified(format!(
            "even-indexed entries of h*(Sigma_{n}) {evens:?} differ from h*(S_{n}) {:?}",
            s.coefficients
        )));
    }
    if !v.is_palindromic() {
        return Err(Error::falsified(format!(
            "h*(Sigma_{n}) = {:?} is not symmetric",
            v.coefficients
        )));
    }
    let want = expected_hstar_degree_sigma(n);
    if v.degree() != want {
        return Err(Error::falsified(format!(
            "deg h*(Sigma_{n}) = {}, expected {want}",
            v.degree()
        )));
    }
    Ok(v)
}

/// Expected status of the degree of `g_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GDegreeClaim {
    Degree(usize),
    /// `n = 2`: both constituents coincide and the degree formula does not apply.
    Excluded,
}

/// Expected degree of `g_n` in `L_{Σ_n}(t) = f_n(t) + (-1)^t g_n(t)`.
pub fn expected_g_degree(n: usize) -> GDegreeClaim {
    let c = if n % 2 == 1 {
        dimension(n - 1)
    } else {
        dimension(n.saturating_sub(2))
    };
    match c.checked_sub(1) {
        Some(d) if n > 2 => GDegreeClaim::Degree(d),
        _ => GDegreeClaim::Excluded,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuasiPolynomial {
    pub n: usize,
    pub f: Polynomial,
    pub g: Polynomial,
    pub expected_g: GDegreeClaim,
    /// `(t, L_{S_n}(t))` pairs on which `f(2t) + g(2t)` was checked.
    pub checked: Vec<(u32, BigUint)>,
}

impl QuasiPolynomial {
    pub fn eval(&self, t: i64) -> BigRational {
        let sign = if t.rem_euclid(2) == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        self.f.eval_int(t) + sign * self.g.eval_int(t)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "f": self.f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "g": self.g.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "deg_f": self.f.degree(),
            "deg_g": self.g.degree(),
            "expected_deg_g": match self.expected_g {
                GDegreeClaim::Degree(d) => json!(d),
                GDegreeClaim::Excluded => Value::Null,
            },
        })
    }
}

/// Even and odd constituents of `L_{Σ_n}`, returned as `f ± g`.
pub fn quasipoly_sigma(n: usize) -> Result<QuasiPolynomial> {
    if !(2..=5).contains(&n) {
        return Err(Error::invalid("quasipoly_sigma supports 2 <= n <= 5"));
    }
    let d = dimension(n);
    // 2(d+1) counts determine both constituents; two more verify them.
    let last = 2 * (d as u32 + 1) + 1;
    let counts = count_series(n, Family::Sigma, last, Strategy::default());
    let constituent = |parity: usize| -> Result<Polynomial> {
        let idx: Vec<usize> = (parity..counts.len()).step_by(2).collect();
        let nodes: Vec<BigRational> = idx
            .iter()
            .map(|&m| BigRational::from_integer(BigInt::from(m)))
            .collect();
        let vals: Vec<BigRational> = idx.iter().map(|&m| to_rational(&counts[m])).collect();
        let p = Polynomial::interpolate(&nodes[..=d], &vals[..=d]);
        for (x, v) in nodes.iter().zip(&vals).skip(d + 1) {
            if &p.eval(x) != v {
                return Err(Error::Inconsistent(format!(
                    "parity-{parity} constituent of Sigma_{n} fails at m = {x}"
                )));
            }
        }
        Ok(p)
    };
    let even = constituent(0)?;
    let odd = constituent(1)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let f = (even.clone() + odd.clone()).scale(&half);
    let g = (even - odd).scale(&half);

    if f.degree() != Some(d) {
        return Err(Error::falsified(format!(
            "deg f_{n} = {:?}, expected {d}",
            f.degree()
        )));
    }
    let expected_g = expected_g_degree(n);
    if let GDegreeClaim::Degree(want) = expected_g {
        if g.degree() != Some(want) {
            return Err(Error::falsified(format!(
                "deg g_{n} = {:?}, expected {want}",
                g.degree()
            )));
        }
    }
    let mut checked = Vec::new();
    for t in 0..=(d as u32 + 1) {
        let want = count_points(n, t, Family::S);
        let got = f.eval_int(2 * t as i64) + g.eval_int(2 * t as i64);
        if got != to_rational(&want) {
            return Err(Error::falsified(format!(
                "f(2t) + g(2t) = {got} but L_S_{n}({t}) = {want}"
            )));
        }
        checked.push((t, want));
    }
    Ok(QuasiPolynomial {
        n,
        f,
        g,
        expected_g,
        checked,
    })
}

/// Outcome of comparing `L_{S_n}` at negative arguments with interior counts.
#[derive(Debug, Clone, PartialEq)]
pub struct ReciprocityReport {
    pub n: usize,
    /// `(m, (-1)^d L(-m))` for `m = 1..=(n+1)/2`.
    pub signed_values: Vec<(u32, BigInt)>,
    pub first_interior_dilate: u32,
    pub interior_count: BigUint,
    pub involution_count: BigUint,
    pub holds: bool,
}

impl ReciprocityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "signed_values": self.signed_values.iter()
                .map(|(m, v)| json!([m, bigint_json(v)])).collect::<Vec<_>>(),
            "first_interior_dilate": self.first_interior_dilate,
            "interior_count": big_json(&self.interior_count),
            "involution_count": big_json(&self.involution_count),
            "holds": self.holds,
        })
    }
}

/// Evaluates `(-1)^d L_{S_n}(-m)` for odd `n` and compares it with direct
/// interior counts: zero below `(n+1)/2`, the number of involutions at
/// `(n+1)/2`.
pub fn reciprocity_check(n: usize) -> Result<ReciprocityReport> {
    if n.is_multiple_of(2) || !(3..=5).contains(&n) {
        return Err(Error::invalid("reciprocity_check needs odd n with 3 <= n <= 5"));
    }
    let d = dimension(n);
    let data = ehrhart_s(n)?;
    let first = (n as u32).div_ceil(2);
    let sign = if d.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut signed_values = Vec::new();
    let mut holds = true;
    for m in 1..=first {
        let v = data.eval(-(m as i64));
        if !v.is_integer() {
            return Err(Error::Inconsistent(format!("L(-{m}) = {v} is not an integer")));
        }
        let v = v.to_integer() * &sign;
        let direct = geometry::interior_count(n, m);
        if BigInt::from(direct) != v {
            holds = false;
        }
        signed_values.push((m, v));
    }
    let interior_count = geometry::interior_count(n, first);
    let involution_count = geometry::involution_count(n);
    holds &= interior_count == involution_count;
    Ok(ReciprocityReport {
        n,
        signed_values,
        first_interior_dilate: first,
        interior_count,
        involution_count,
        holds,
    })
}

/// `d! · (leading coefficient of L)`, the normalized volume.
pub fn normalized_volume(data: &EhrhartData) -> BigRational {
    let lc = data.polynomial.leading_coefficient();
    lc * BigRational::from_integer(BigInt::from(poly::factorial(data.dimension as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn interpolate_examples() {
        // S_2: L(m) = 2m + 1.
        assert!(interpolate(&big(&[1, 3, 5]), 0).is_err());
        let e = interpolate(&big(&[1, 3, 5]), 1).unwrap();
        assert_eq!(e.polynomial, Polynomial::from_ints(&[1, 2]));
        let e = interpolate(&big(&[1, 3]), 1).unwrap();
        assert_eq!(e.polynomial, Polynomial::from_ints(&[1, 2]));
        assert!(interpolate(&big(&[1, 3, 6]), 1).is_err());

        let e = interpolate(&big(&[1, 11, 42, 106]), 3).unwrap();
        let b: Vec<i64> = e
            .binomial_coefficients()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(b, vec![1, 10, 21, 12]);

        let e = interpolate(&big(&[1, 1]), 0).unwrap();
        assert_eq!(e.polynomial, Polynomial::from_ints(&[1]));
    }

    #[test]
    fn s3_series() {
        assert_eq!(counts_s(3, 3), big(&[1, 11, 42, 106]));
        let raw = hstar_transform(&counts_s(3, 3), 3);
        let raw: Vec<i64> = raw.iter().map(|v| i64::try_from(v).unwrap()).collect();
        assert_eq!(raw, vec![1, 7, 4, 0]);
    }

    #[test]
    fn hstar_small() {
        let h2 = hstar_s(2).unwrap();
        assert_eq!(h2.coefficients, big(&[1, 1]));
        assert!(h2.is_palindromic());
        let h3 = hstar_s(3).unwrap();
        assert_eq!(h3.coefficients, big(&[1, 7, 4]));
        assert_eq!(h3.degree(), 2);
        assert_eq!(h3.sum(), BigUint::from(12u32));
        assert!(!h3.is_palindromic());
    }

    #[test]
    fn sigma_small() {
        assert_eq!(
            count_series(2, Family::Sigma, 4, Strategy::Sequential),
            big(&[1, 2, 3, 4, 5])
        );
        assert_eq!(
            count_series(3, Family::Sigma, 4, Strategy::Sequential),
            big(&[1, 4, 11, 23, 42])
        );
        let s2 = hstar_sigma(2).unwrap();
        assert_eq!(s2.coefficients, big(&[1, 2, 1]));
        let s3 = hstar_sigma(3).unwrap();
        assert_eq!(s3.degree(), 5);
        let evens: Vec<BigUint> = s3.coefficients.iter().step_by(2).cloned().collect();
        assert_eq!(evens, big(&[1, 7, 4]));
    }

    #[test]
    fn quasi_degrees() {
        let q3 = quasipoly_sigma(3).unwrap();
        assert_eq!(q3.f.degree(), Some(3));
        assert_eq!(q3.g.degree(), Some(0));
        let q2 = quasipoly_sigma(2).unwrap();
        assert!(q2.g.is_zero());
        assert_eq!(q2.f, Polynomial::from_ints(&[1, 1]));
        assert_eq!(q2.expected_g, GDegreeClaim::Excluded);
        for t in 0..8 {
            assert_eq!(
                q3.eval(t),
                to_rational(&crate::symmat::count_points(3, t as u32, Family::Sigma))
            );
        }
    }

    #[test]
    fn reciprocity_s3() {
        let r = reciprocity_check(3).unwrap();
        assert!(r.holds);
        assert_eq!(r.signed_values[0], (1, BigInt::zero()));
        assert_eq!(r.signed_values[1], (2, BigInt::from(4)));
        let data = ehrhart_s(3).unwrap();
        assert_eq!(data.eval(-2), BigRational::from_integer(BigInt::from(-4)));
        assert!(reciprocity_check(4).is_err());
    }

    #[test]
    fn volume_matches_hstar_sum() {
        for n in 2..=4 {
            let data = ehrhart_s(n).unwrap();
            let h = hstar_s(n).unwrap();
            assert_eq!(
                normalized_volume(&data),
                BigRational::from_integer(BigInt::from(h.sum()))
            );
        }
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&[1, 7, 4]));
        assert!(!is_unimodal(&[1, 2, 1, 2]));
        assert!(is_unimodal(&[1]));
        assert!(is_unimodal::<u32>(&[]));
        assert!(is_unimodal(&[3, 3, 1]));
    }
}
