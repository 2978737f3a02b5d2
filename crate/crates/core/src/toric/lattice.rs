//! Integer kernel lattices of small integer matrices.

use crate::error::{Error, Result};

fn overflow() -> Error {
    Error::ResourceLimit("integer overflow while computing the kernel lattice".into())
}

fn axpy(dst: &mut [i64], t: i64, src: &[i64]) -> Result<()> {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = s
            .checked_mul(t)
            .and_then(|v| d.checked_sub(v))
            .ok_or_else(overflow)?;
    }
    Ok(())
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or_else(overflow)
    })
}

/// A basis of the lattice `{u ∈ Z^s : a · u = 0}` where `a` has `s` columns.
///
/// Rows of `aᵀ` are reduced by unimodular row operations while the identity
/// records the transform; rows whose image vanishes span the kernel. The basis
/// is then shortened by pairwise size reduction.
pub fn kernel_basis(a: &[Vec<i64>], s: usize) -> Result<Vec<Vec<i64>>> {
    let cols = a.len();
    // Row k: (a column k | e_k).
    let mut rows: Vec<(Vec<i64>, Vec<i64>)> = (0..s)
        .map(|k| {
            let img = a.iter().map(|r| r[k]).collect();
            let mut e = vec![0i64; s];
            e[k] = 1;
            (img, e)
        })
        .collect();
    let mut piv = 0;
    for c in 0..cols {
        loop {
            // Smallest nonzero |entry| in column c among rows piv..
            let best = (piv..s)
                .filter(|&r| rows[r].0[c] != 0)
                .min_by_key(|&r| (rows[r].0[c].unsigned_abs(), r));
            let Some(b) = best else { break };
            rows.swap(piv, b);
            let mut done = true;
            for r in piv + 1..s {
                let v = rows[r].0[c];
                if v == 0 {
                    continue;
                }
                let t = v / rows[piv].0[c];
                let (head, tail) = rows.split_at_mut(r);
                let p = &head[piv];
                let row = &mut tail[0];
                axpy(&mut row.0, t, &p.0)?;
                axpy(&mut row.1, t, &p.1)?;
                if row.0[c] != 0 {
                    done = false;
                }
            }
            if done {
                piv += 1;
                break;
            }
        }
        if piv == s {
            break;
        }
    }
    let mut basis: Vec<Vec<i64>> = rows
        .into_iter()
        .skip(piv)
        .map(|(img, u)| {
            debug_assert!(img.iter().all(|&v| v == 0));
            u
        })
        .collect();
    size_reduce(&mut basis)?;
    Ok(basis)
}

/// Repeated pairwise reduction `b_i ← b_i - t b_j` while it shortens `b_i`.
fn size_reduce(basis: &mut [Vec<i64>]) -> Result<()> {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let nj = dot(&basis[j], &basis[j])?;
                let ij = dot(&basis[i], &basis[j])?;
                // Nearest integer to ij / nj.
                let t = (2 * ij + nj).div_euclid(2 * nj);
                if t == 0 {
                    continue;
                }
                let mut cand = basis[i].clone();
                axpy(&mut cand, t, &basis[j])?;
                if dot(&cand, &cand)? < dot(&basis[i], &basis[i])? {
                    basis[i] = cand;
                    changed = true;
                }
            }
        }
    }
    basis.sort_by_key(|b| (b.iter().map(|v| v.unsigned_abs()).sum::<u64>(), b.clone()));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_collinear_points() {
        // Homogenized points 0, 1, 2 on a line.
        let a = vec![vec![0, 1, 2], vec![1, 1, 1]];
        let k = kernel_basis(&a, 3).unwrap();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(*v == vec![1, -2, 1] || *v == vec![-1, 2, -1]);
    }

    #[test]
    fn kernel_vectors_vanish_and_span_rank() {
        let a = vec![vec![1, 2, 3, 4, 5], vec![2, 0, 1, 7, 3], vec![1, 1, 1, 1, 1]];
        let k = kernel_basis(&a, 5).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                assert_eq!(dot(row, v).unwrap(), 0);
            }
        }
    }

    #[test]
    fn kernel_is_saturated_lattice() {
        // 2x = 0 on one column plus a free column: the kernel is e_2, not 2e_2.
        let a = vec![vec![2, 0]];
        let k = kernel_basis(&a, 2).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].iter().map(|v| v.abs()).collect::<Vec<_>>(), vec![0, 1]);
    }
}
