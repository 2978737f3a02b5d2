//! Structural checks on reduced toric Gröbner bases.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{is_k_free, is_squarefree, GroebnerBasis, PointConfig};
use crate::error::{Error, Result};
use crate::symmat::count_points;

/// Outcome of one property with the offending elements listed verbatim.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub holds: bool,
    pub checked: usize,
    pub witnesses: Vec<Value>,
}

impl PropertyCheck {
    fn from_failures(checked: usize, witnesses: Vec<Value>) -> Self {
        PropertyCheck {
            holds: witnesses.is_empty(),
            checked,
            witnesses,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"holds": self.holds, "checked": self.checked, "witnesses": self.witnesses})
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem13Report {
    pub convention: String,
    /// Every element has a squarefree monomial.
    pub p1: PropertyCheck,
    /// Every variable occurs in a degree-two element.
    pub p2: PropertyCheck,
    /// Degree-two initial terms are squarefree.
    pub p3: PropertyCheck,
    /// Initial terms are cubefree.
    pub p4: PropertyCheck,
    /// Variables that occur in no element at all.
    pub absent_variables: Vec<usize>,
}

impl Theorem13Report {
    pub fn all_hold(&self) -> bool {
        self.p1.holds && self.p2.holds && self.p3.holds && self.p4.holds
    }

    pub fn to_json(&self) -> Value {
        json!({
            "convention": self.convention,
            "p1": self.p1.to_json(),
            "p2": self.p2.to_json(),
            "p3": self.p3.to_json(),
            "p4": self.p4.to_json(),
            "absent_variables": self.absent_variables,
        })
    }
}

pub fn verify_theorem13(basis: &GroebnerBasis, config: &PointConfig) -> Theorem13Report {
    let s = basis.variables();
    let els = &basis.elements;
    let witness = |i: usize| {
        let mut v = els[i].to_matrix_json(config);
        v["index"] = json!(i);
        v
    };

    let p1 = (0..els.len())
        .filter(|&i| !is_squarefree(&els[i].lead) && !is_squarefree(&els[i].trail))
        .map(witness)
        .collect();

    let mut in_deg2 = vec![false; s];
    let mut anywhere = vec![false; s];
    for e in els {
        for v in 0..s {
            let occurs = e.lead[v] > 0 || e.trail[v] > 0;
            anywhere[v] |= occurs;
            in_deg2[v] |= occurs && e.degree() == 2;
        }
    }
    let p2 = (0..s)
        .filter(|&v| !in_deg2[v])
        .map(|v| json!({"variable": v, "point": config.points[v].rows()}))
        .collect();

    let deg2: Vec<usize> = (0..els.len()).filter(|&i| els[i].degree() == 2).collect();
    let p3 = deg2
        .iter()
        .copied()
        .filter(|&i| !is_squarefree(&els[i].lead))
        .map(witness)
        .collect();

    let p4 = (0..els.len())
        .filter(|&i| !is_k_free(&els[i].lead, 3))
        .map(witness)
        .collect();

    Theorem13Report {
        convention: basis.order.convention.as_str().to_string(),
        p1: PropertyCheck::from_failures(els.len(), p1),
        p2: PropertyCheck::from_failures(s, p2),
        p3: PropertyCheck::from_failures(deg2.len(), p3),
        p4: PropertyCheck::from_failures(els.len(), p4),
        absent_variables: (0..s).filter(|&v| !anywhere[v]).collect(),
    }
}

/// Calls `f` on every exponent vector of total degree `m` in `s` variables.
pub fn for_each_monomial(s: usize, m: u32, f: &mut dyn FnMut(&[u32])) {
    fn rec(e: &mut Vec<u32>, k: usize, left: u32, f: &mut dyn FnMut(&[u32])) {
        if k + 1 == e.len() {
            e[k] = left;
            f(e);
            e[k] = 0;
            return;
        }
        for v in (0..=left).rev() {
            e[k] = v;
            rec(e, k + 1, left - v, f);
        }
        e[k] = 0;
    }
    if s == 0 {
        if m == 0 {
            f(&[]);
        }
        return;
    }
    rec(&mut vec![0; s], 0, m, f);
}

/// Number of standard monomials of degree `m`.
pub fn standard_monomial_count(basis: &GroebnerBasis, m: u32) -> u64 {
    let mut c = 0u64;
    for_each_monomial(basis.variables(), m, &mut |e| {
        if basis.is_standard(e) {
            c += 1;
        }
    });
    c
}

/// Distinct images `π(t^e)` over all monomials of degree `m`.
pub fn distinct_images(config: &PointConfig, m: u32) -> u64 {
    let mut seen = std::collections::HashSet::new();
    for_each_monomial(config.len(), m, &mut |e| {
        seen.insert(config.image(e));
    });
    seen.len() as u64
}

/// Standard monomials of degree `m` against `L(m)` of the configuration's
/// polytope. Equality needs both a correct basis and integral closure.
pub fn hilbert_check(basis: &GroebnerBasis, config: &PointConfig, m: u32) -> (u64, BigUint, bool) {
    let hf = standard_monomial_count(basis, m);
    let l = count_points(config.n, m, config.family);
    (hf, l.clone(), BigUint::from(hf) == l)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquarefreeReport {
    pub squarefree: bool,
    pub checked: usize,
    pub witnesses: Vec<Value>,
}

impl SquarefreeReport {
    pub fn to_json(&self) -> Value {
        json!({"squarefree": self.squarefree, "checked": self.checked, "witnesses": self.witnesses})
    }
}

/// Whether every initial term is squarefree, i.e. whether the initial ideal
/// is squarefree and so the associated regular triangulation is unimodular.
pub fn squarefree_initial_report(basis: &GroebnerBasis, config: &PointConfig) -> SquarefreeReport {
    let witnesses: Vec<Value> = basis
        .elements
        .iter()
        .filter(|e| !is_squarefree(&e.lead))
        .map(|e| e.to_matrix_json(config))
        .collect();
    SquarefreeReport {
        squarefree: witnesses.is_empty(),
        checked: basis.len(),
        witnesses,
    }
}

/// Every element lies in the kernel of `π`. Returns offending indices.
pub fn kernel_failures(basis: &GroebnerBasis, config: &PointConfig) -> Vec<usize> {
    (0..basis.len())
        .filter(|&i| !basis.elements[i].is_in_kernel(config))
        .collect()
}

/// S-pairs that fail to reduce to zero. With `sample = Some((k, seed))` only
/// `k` random pairs are tried.
pub fn spair_failures(basis: &GroebnerBasis, sample: Option<(usize, u64)>) -> Vec<(usize, usize)> {
    let g = basis.len();
    let pairs: Vec<(usize, usize)> = match sample {
        None => (0..g).flat_map(|i| (i + 1..g).map(move |j| (i, j))).collect(),
        Some((k, seed)) => {
            if g < 2 {
                Vec::new()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..k)
                    .map(|_| {
                        let i = rng.random_range(0..g);
                        let mut j = rng.random_range(0..g - 1);
                        if j >= i {
                            j += 1;
                        }
                        (i.min(j), i.max(j))
                    })
                    .collect()
            }
        }
    };
    pairs
        .into_iter()
        .filter(|&(i, j)| basis.reduce_spair(i, j).is_some())
        .collect()
}

/// Reducedness: no initial term divides any monomial of another element.
pub fn is_reduced(basis: &GroebnerBasis) -> bool {
    let els = &basis.elements;
    els.iter().enumerate().all(|(i, a)| {
        els.iter().enumerate().all(|(j, b)| {
            i == j
                || (!super::engine::divides(&a.lead, &b.lead)
                    && !super::engine::divides(&a.lead, &b.trail))
        })
    })
}

/// Random monomials with `nf(nf(x)) = nf(x)` checked; returns failures.
pub fn normal_form_idempotence(
    basis: &GroebnerBasis,
    count: usize,
    max_degree: u32,
    seed: u64,
) -> Result<Vec<Vec<u32>>> {
    let s = basis.variables();
    if s == 0 {
        return Err(Error::invalid("basis has no variables"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..count {
        let d = rng.random_range(1..=max_degree);
        let mut e = vec![0u32; s];
        for _ in 0..d {
            e[rng.random_range(0..s)] += 1;
        }
        let once = basis.normal_form(&e);
        if basis.normal_form(&once) != once || !basis.is_standard(&once) {
            bad.push(e);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::super::{toric_groebner, Convention, TermOrder};
    use super::*;

    #[test]
    fn monomial_enumeration_counts() {
        let mut c = 0;
        for_each_monomial(3, 2, &mut |_| c += 1);
        assert_eq!(c, 6);
        let mut c0 = 0;
        for_each_monomial(4, 0, &mut |_| c0 += 1);
        assert_eq!(c0, 1);
    }

    #[test]
    fn hilbert_s2() {
        let config = PointConfig::full(2).unwrap();
        let order = TermOrder::with_convention(&config, Convention::ProofConsistent).unwrap();
        let g = toric_groebner(&config, &order).unwrap();
        let (hf, l, ok) = hilbert_check(&g, &config, 2);
        assert_eq!(hf, 5);
        assert_eq!(l, BigUint::from(5u32));
        assert!(ok);
        assert_eq!(distinct_images(&config, 2), 5);
    }

    #[test]
    fn s2_theorem13_by_convention() {
        let config = PointConfig::full(2).unwrap();
        let proof = toric_groebner(
            &config,
            &TermOrder::with_convention(&config, Convention::ProofConsistent).unwrap(),
        )
        .unwrap();
        let r = verify_theorem13(&proof, &config);
        assert!(r.all_hold());
        let literal = toric_groebner(
            &config,
            &TermOrder::with_convention(&config, Convention::LiteralDef32).unwrap(),
        )
        .unwrap();
        let r = verify_theorem13(&literal, &config);
        assert!(r.p1.holds && r.p2.holds && r.p4.holds);
        assert!(!r.p3.holds);
        assert!(!squarefree_initial_report(&literal, &config).squarefree);
    }
}
