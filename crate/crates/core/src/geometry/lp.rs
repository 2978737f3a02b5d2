//! Exact feasibility for `{λ ≥ 0 : A λ = b}` by a phase-I simplex method over
//! the rationals. Bland's rule guarantees termination.

use num_traits::{Signed, Zero};

use super::linalg::Q;

/// Returns a feasible `λ` or `None` if the system has no nonnegative solution.
/// `a` is given row by row; every row has the same length.
pub fn feasible_point(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let width = k + m + 1;
    let rhs = k + m;

    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r = vec![Q::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[k + i] = Q::from_integer(1.into());
        r[rhs] = if flip { -bi.clone() } else { bi.clone() };
        t.push(r);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();

    // Reduced costs of the phase-I objective (sum of artificials).
    let mut obj = vec![Q::zero(); width];
    for r in &t {
        for j in 0..k {
            obj[j] -= &r[j];
        }
        obj[rhs] -= &r[rhs];
    }

    loop {
        let Some(enter) = (0..k + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase I is bounded below by zero, so a leaving row always exists.
        let (row, _) = leave?;
        pivot(&mut t, &mut obj, row, enter);
        basis[row] = enter;
    }

    if !obj[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < k {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Q>], obj: &mut [Q], row: usize, col: usize) {
    let inv = t[row][col].recip();
    for x in t[row].iter_mut() {
        *x *= &inv;
    }
    let prow = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            *x -= &f * p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::linalg::{dot, q};
    use super::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn finds_convex_combination() {
        // (1,1) = ½(0,2) + ½(2,0), with a homogenizing row.
        let a = vec![qs(&[0, 2]), qs(&[2, 0]), qs(&[1, 1])];
        let b = qs(&[1, 1, 1]);
        let x = feasible_point(&a, &b).unwrap();
        for (row, bi) in a.iter().zip(&b) {
            assert_eq!(&dot(row, &x), bi);
        }
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn detects_infeasible() {
        // (3, 0) is outside the hull of (0,2), (2,0).
        let a = vec![qs(&[0, 2]), qs(&[2, 0]), qs(&[1, 1])];
        assert!(feasible_point(&a, &qs(&[3, 0, 1])).is_none());
        // Negative right-hand side with nonnegative columns.
        assert!(feasible_point(&[qs(&[1, 1])], &qs(&[-1])).is_none());
    }

    #[test]
    fn handles_negative_rhs_rows() {
        let a = vec![qs(&[-1, 0]), qs(&[0, 1])];
        let x = feasible_point(&a, &qs(&[-2, 3])).unwrap();
        assert_eq!(x, qs(&[2, 3]));
    }
}
