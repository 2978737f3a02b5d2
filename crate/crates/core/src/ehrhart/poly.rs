//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in the monomial basis, lowest degree first, with no trailing
/// zeros (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// `p(k·x)`.
    pub fn compose_scale(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        let mut pow = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= &k;
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Newton divided-difference interpolation through `(nodes[i], values[i])`.
    /// Nodes must be distinct.
    pub fn interpolate(nodes: &[BigRational], values: &[BigRational]) -> Self {
        assert_eq!(nodes.len(), values.len(), "one value per node");
        let k = nodes.len();
        let mut table: Vec<BigRational> = values.to_vec();
        for level in 1..k {
            for i in (level..k).rev() {
                let num = &table[i] - &table[i - 1];
                let den = &nodes[i] - &nodes[i - level];
                table[i] = num / den;
            }
        }
        // Expand the Newton form by Horner from the top coefficient.
        let mut acc = Polynomial::zero();
        for i in (0..k).rev() {
            acc = acc.mul_linear(&nodes[i]);
            acc = acc + Polynomial::from_coeffs(vec![table[i].clone()]);
        }
        acc
    }

    /// Interpolation at the integer nodes `0, 1, …, values.len() - 1`.
    pub fn interpolate_consecutive(values: &[BigRational]) -> Self {
        let nodes: Vec<BigRational> = (0..values.len())
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .collect();
        Self::interpolate(&nodes, values)
    }

    /// `self · (x - root)`.
    fn mul_linear(&self, root: &BigRational) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * root;
        }
        Self::from_coeffs(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.into_iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            out[i] += c;
        }
        Polynomial::from_coeffs(out)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + rhs.scale(&-BigRational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*m")?,
                _ => write!(f, "{a}*m^{i}")?,
            }
        }
        Ok(())
    }
}

/// Forward differences `Δ^k L(0)`, i.e. the coefficients of `L` in the basis
/// `C(m, k)`.
pub fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    let mut row: Vec<BigInt> = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    while !row.is_empty() {
        out.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Polynomial::from_ints(&[3, -1, 0, 2]);
        let nodes: Vec<BigRational> = [-2, 0, 5, 7].iter().map(|&x| q(x)).collect();
        let vals: Vec<BigRational> = nodes.iter().map(|x| p.eval(x)).collect();
        assert_eq!(Polynomial::interpolate(&nodes, &vals), p);
    }

    #[test]
    fn compose_scale_and_arith() {
        let p = Polynomial::from_ints(&[1, 1]);
        assert_eq!(p.compose_scale(2), Polynomial::from_ints(&[1, 2]));
        assert!((p.clone() - p).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn differences_and_binomials() {
        let vals: Vec<BigInt> = [1, 11, 42, 106].iter().map(|&v| BigInt::from(v)).collect();
        let d: Vec<i64> = forward_differences(&vals)
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(d, vec![1, 10, 21, 12]);
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(factorial(5), BigUint::from(120u32));
    }
}
