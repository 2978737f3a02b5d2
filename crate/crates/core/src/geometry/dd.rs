//! Double description: extreme rays of `{y : a_i · y ≥ 0}` for a full-rank
//! constraint list, processing constraints in input order.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{dot, primitive, rank, solve, Q};
use crate::error::{Error, Result};

/// Maximum number of constraints; tight sets are `u128` bitmasks.
pub const MAX_CONSTRAINTS: usize = 128;

struct Ray {
    y: Vec<Q>,
    tight: u128,
}

/// Extreme rays of the pointed cone `{y ∈ Q^r : rows · y ≥ 0}`, where the
/// rows have rank `r`. Rays are scaled to primitive integer vectors and
/// sorted.
pub fn extreme_rays(rows: &[Vec<Q>]) -> Result<Vec<Vec<BigInt>>> {
    if rows.len() > MAX_CONSTRAINTS {
        return Err(Error::Capacity {
            what: format!("{} constraints in double description", rows.len()),
            limit: MAX_CONSTRAINTS as u64,
        });
    }
    let r = rows.first().map_or(0, Vec::len);
    if rank(rows) != r {
        return Err(Error::invalid("constraint rows must have full column rank"));
    }

    // Greedy basis of rows, in order.
    let mut init: Vec<usize> = Vec::with_capacity(r);
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<Q>> = init.iter().map(|&k| rows[k].clone()).collect();
        trial.push(rows[i].clone());
        if rank(&trial) == trial.len() {
            init.push(i);
            if init.len() == r {
                break;
            }
        }
    }
    let basis: Vec<Vec<Q>> = init.iter().map(|&k| rows[k].clone()).collect();
    let mut processed: u128 = init.iter().fold(0, |acc, &k| acc | 1 << k);
    let mut rays: Vec<Ray> = (0..r)
        .map(|j| {
            let e: Vec<Q> = (0..r)
                .map(|i| if i == j { Q::from_integer(1.into()) } else { Q::zero() })
                .collect();
            let y = solve(&basis, &e).expect("basis rows are independent");
            let tight = init
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .fold(0u128, |acc, (_, &k)| acc | 1 << k);
            Ray { y: normalize(&y), tight }
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if processed & (1 << idx) != 0 {
            continue;
        }
        let vals: Vec<Q> = rays.iter().map(|ray| dot(row, &ray.y)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].tight & rays[n].tight;
                if (common.count_ones() as usize) + 2 < r {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(w, ray)| w != p && w != n && ray.tight & common == common);
                if blocked {
                    continue;
                }
                let y: Vec<Q> = rays[n]
                    .y
                    .iter()
                    .zip(&rays[p].y)
                    .map(|(yn, yp)| &vals[p] * yn - &vals[n] * yp)
                    .collect();
                fresh.push(Ray {
                    y: normalize(&y),
                    tight: common | 1 << idx,
                });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                ray.tight |= 1 << idx;
                next.push(ray);
            } else if vals[i].is_positive() {
                next.push(ray);
            }
        }
        next.extend(fresh);
        rays = next;
        processed |= 1 << idx;
    }

    let mut out: Vec<Vec<BigInt>> = rays.iter().map(|ray| primitive(&ray.y)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn normalize(y: &[Q]) -> Vec<Q> {
    primitive(y)
        .into_iter()
        .map(Q::from_integer)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::linalg::q;
    use super::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn square_cone() {
        // Homogenized unit square: rays of the dual cone are its four facets.
        let rows = vec![qs(&[1, 0, 0]), qs(&[1, 1, 0]), qs(&[1, 0, 1]), qs(&[1, 1, 1])];
        let rays = extreme_rays(&rows).unwrap();
        let mut want = vec![
            ints(&[0, 1, 0]),
            ints(&[0, 0, 1]),
            ints(&[1, -1, 0]),
            ints(&[1, 0, -1]),
        ];
        want.sort();
        assert_eq!(rays, want);
    }

    #[test]
    fn triangle_with_interior_point() {
        let rows = vec![qs(&[1, 0, 0]), qs(&[1, 1, 1]), qs(&[1, 3, 0]), qs(&[1, 0, 3])];
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(rays.len(), 3);
        for r in &rays {
            let rq: Vec<Q> = r.iter().cloned().map(Q::from_integer).collect();
            assert!(rows.iter().all(|row| !dot(row, &rq).is_negative()));
        }
    }
}
