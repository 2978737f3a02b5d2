//! Binomial Buchberger in "rank space": variable `p` is the `p`-th smallest
//! variable, so graded reverse lexicographic comparison scans positions
//! upward.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

pub(crate) type Exps = Vec<u32>;

pub(crate) fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| u64::from(x)).sum()
}

/// Graded reverse lexicographic comparison with position 0 the smallest
/// variable.
pub(crate) fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    degree(a).cmp(&degree(b)).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `m / d · t`, assuming `d | m`.
fn replace(m: &[u32], d: &[u32], t: &[u32]) -> Exps {
    m.iter()
        .zip(d)
        .zip(t)
        .map(|((x, y), z)| x - y + z)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct RBin {
    pub lead: Exps,
    pub trail: Exps,
}

impl RBin {
    /// `a - b` with common factors removed and the larger monomial in front;
    /// `None` when the two monomials coincide.
    pub fn make(mut a: Exps, mut b: Exps) -> Option<RBin> {
        for (x, y) in a.iter_mut().zip(b.iter_mut()) {
            let c = (*x).min(*y);
            *x -= c;
            *y -= c;
        }
        match grevlex(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(RBin { lead: a, trail: b }),
            Ordering::Less => Some(RBin { lead: b, trail: a }),
        }
    }

    pub fn spoly(&self, other: &RBin) -> Option<RBin> {
        let l = lcm(&self.lead, &other.lead);
        let a = replace(&l, &self.lead, &self.trail);
        let b = replace(&l, &other.lead, &other.trail);
        RBin::make(a, b)
    }
}

/// Normal form of a monomial: repeatedly replace the first divisible lead.
pub(crate) fn normal_form(mut m: Exps, basis: &[RBin]) -> Exps {
    while let Some(g) = basis.iter().find(|g| divides(&g.lead, &m)) {
        m = replace(&m, &g.lead, &g.trail);
    }
    m
}

pub(crate) fn reduce(f: &RBin, basis: &[RBin]) -> Option<RBin> {
    RBin::make(
        normal_form(f.lead.clone(), basis),
        normal_form(f.trail.clone(), basis),
    )
}

/// Bounds on a single Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub max_basis: usize,
    pub max_pairs: usize,
    /// Wall-clock budget for a whole basis computation.
    pub time_budget: Option<Duration>,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_basis: 50_000,
            max_pairs: 20_000_000,
            time_budget: None,
        }
    }
}

#[derive(PartialEq, Eq)]
struct PairKey {
    lcm: Exps,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.lcm, &other.lcm)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Run {
    basis: Vec<RBin>,
    queue: BTreeSet<PairKey>,
    pending: HashSet<(usize, usize)>,
    limits: GroebnerLimits,
    deadline: Option<Instant>,
    processed: usize,
}

impl Run {
    fn push(&mut self, h: RBin) -> Result<()> {
        let k = self.basis.len();
        for (i, g) in self.basis.iter().enumerate() {
            self.queue.insert(PairKey {
                lcm: lcm(&g.lead, &h.lead),
                i,
                j: k,
            });
            self.pending.insert((i, k));
        }
        self.basis.push(h);
        if self.basis.len() > self.limits.max_basis || self.queue.len() > self.limits.max_pairs {
            return Err(self.limit_error());
        }
        Ok(())
    }

    fn limit_error(&self) -> Error {
        Error::ResourceLimit(format!(
            "Buchberger stopped: basis size {}, S-pair queue {}, pairs processed {}",
            self.basis.len(),
            self.queue.len(),
            self.processed
        ))
    }

    fn skip_by_chain(&self, l: &[u32], i: usize, j: usize) -> bool {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && divides(&g.lead, l)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }
}

/// Gröbner basis (not yet reduced) of the ideal generated by `gens`,
/// cancelling common monomial factors as it goes. Pairs are taken by
/// smallest lcm, ties by index.
pub(crate) fn buchberger(
    gens: Vec<RBin>,
    limits: GroebnerLimits,
    deadline: Option<Instant>,
) -> Result<Vec<RBin>> {
    let mut run = Run {
        basis: Vec::new(),
        queue: BTreeSet::new(),
        pending: HashSet::new(),
        limits,
        deadline,
        processed: 0,
    };
    let mut gens = gens;
    gens.sort_by(|a, b| grevlex(&a.lead, &b.lead).then_with(|| grevlex(&a.trail, &b.trail)));
    for f in gens {
        if let Some(h) = reduce(&f, &run.basis) {
            run.push(h)?;
        }
    }
    while let Some(pk) = run.queue.pop_first() {
        let (i, j) = (pk.i, pk.j);
        run.pending.remove(&(i, j));
        run.processed += 1;
        if run.processed.is_multiple_of(256) && run.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(run.limit_error());
        }
        if coprime(&run.basis[i].lead, &run.basis[j].lead) || run.skip_by_chain(&pk.lcm, i, j) {
            continue;
        }
        let Some(s) = run.basis[i].spoly(&run.basis[j]) else {
            continue;
        };
        if let Some(h) = reduce(&s, &run.basis) {
            run.push(h)?;
        }
    }
    Ok(run.basis)
}

/// The reduced basis: minimal leads, standard trails, sorted by lead.
pub(crate) fn reduce_basis(mut g: Vec<RBin>) -> Vec<RBin> {
    g.sort_by(|a, b| grevlex(&a.lead, &b.lead));
    let mut minimal: Vec<RBin> = Vec::new();
    for f in g {
        if !minimal.iter().any(|h| divides(&h.lead, &f.lead)) {
            minimal.push(f);
        }
    }
    let reduced: Vec<RBin> = minimal
        .iter()
        .map(|f| {
            let trail = normal_form(f.trail.clone(), &minimal);
            let out = RBin::make(f.lead.clone(), trail).expect("lead is standard for the others");
            debug_assert_eq!(out.lead, f.lead);
            out
        })
        .collect();
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_examples() {
        // Higher degree wins.
        assert_eq!(grevlex(&[0, 0, 3], &[1, 1, 0]), Ordering::Greater);
        // t_0² vs t_1 t_2: first difference at the smallest variable, where
        // t_0² has the larger exponent, so it is the smaller monomial.
        assert_eq!(grevlex(&[2, 0, 0], &[0, 1, 1]), Ordering::Less);
        assert_eq!(grevlex(&[1, 1, 0], &[1, 1, 0]), Ordering::Equal);
    }

    #[test]
    fn make_cancels_and_orients() {
        let b = RBin::make(vec![1, 1, 0], vec![1, 0, 1]).unwrap();
        assert_eq!(b.lead, vec![0, 0, 1]);
        assert_eq!(b.trail, vec![0, 1, 0]);
        assert!(RBin::make(vec![1, 2], vec![1, 2]).is_none());
    }

    #[test]
    fn twisted_cubic() {
        // Kernel of t ↦ (s³, s²t, st², t³) in grevlex with positions 0 < 1 < 2 < 3
        // meaning a < b < c < d: the reduced basis has three quadrics.
        let gens = vec![
            RBin::make(vec![1, 0, 1, 0], vec![0, 2, 0, 0]).unwrap(),
            RBin::make(vec![0, 1, 0, 1], vec![0, 0, 2, 0]).unwrap(),
            RBin::make(vec![1, 0, 0, 1], vec![0, 1, 1, 0]).unwrap(),
        ];
        let g = reduce_basis(buchberger(gens, GroebnerLimits::default(), None).unwrap());
        assert_eq!(g.len(), 3);
        for f in &g {
            assert_eq!(degree(&f.lead), 2);
        }
        for (i, a) in g.iter().enumerate() {
            for b in &g[i + 1..] {
                if let Some(s) = a.spoly(b) {
                    assert!(reduce(&s, &g).is_none());
                }
            }
        }
    }
}
