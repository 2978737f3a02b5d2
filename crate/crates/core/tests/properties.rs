//! Property tests over the public API.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

use symstoch::ehrhart;
use symstoch::geometry;
use symstoch::graphfactor::{
    decompose, euler_orient, matrix_to_graph, petersen_two_factorize, LoopDegree, LoopMultigraph,
};
use symstoch::symmat::{count_points, enumerate_points, DilatePoint, Family};
use symstoch::toric::{self, Convention, PointConfig, TermOrder};

fn point_strategy() -> impl Strategy<Value = DilatePoint> {
    (2usize..=4, 1u32..=3, any::<prop::sample::Index>()).prop_map(|(n, m, idx)| {
        let pts = enumerate_points(n, m, Family::S).unwrap();
        let p = pts.points[idx.index(pts.len())].clone();
        DilatePoint::new(p, m, Family::S).unwrap()
    })
}

/// Points of `m·S_n` whose diagonal is even, so loops have degree 2 cleanly.
fn even_diagonal_strategy() -> impl Strategy<Value = (DilatePoint, u32)> {
    (2usize..=4, 1u32..=3, any::<prop::sample::Index>()).prop_map(|(n, m, idx)| {
        let pts: Vec<_> = enumerate_points(n, m, Family::S)
            .unwrap()
            .points
            .into_iter()
            .filter(|p| (0..n).all(|i| p.get(i, i) % 2 == 0))
            .collect();
        let p = pts[idx.index(pts.len())].clone();
        (DilatePoint::new(p, m, Family::S).unwrap(), m)
    })
}

fn edge_multiset(gs: &[LoopMultigraph]) -> (BTreeMap<(usize, usize), u32>, Vec<u32>) {
    let mut edges = BTreeMap::new();
    let mut loops = vec![0; gs[0].vertex_count];
    for g in gs {
        for (&e, &k) in &g.edges {
            *edges.entry(e).or_insert(0) += k;
        }
        for (l, &k) in loops.iter_mut().zip(&g.loops) {
            *l += k;
        }
    }
    (edges, loops)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_sums_back(p in point_strategy()) {
        let d = decompose(&p).unwrap();
        prop_assert!(d.verify().is_ok());
        prop_assert_eq!(d.summands.len(), p.dilate as usize);
        for s in &d.summands {
            prop_assert!(s.row_sums().iter().all(|&r| r == 2));
        }
        let mut sorted = d.summands.clone();
        sorted.sort();
        prop_assert_eq!(sorted, d.summands);
    }

    #[test]
    fn two_factors_partition_the_edges((p, m) in even_diagonal_strategy()) {
        let g = matrix_to_graph(&p.matrix, LoopDegree::Two).unwrap();
        let parts = petersen_two_factorize(&g, m).unwrap();
        prop_assert_eq!(parts.len(), m as usize);
        for f in &parts {
            prop_assert!(f.degrees().iter().all(|&d| d == 2));
        }
        let (edges, loops) = edge_multiset(&parts);
        prop_assert_eq!(edges, g.edges.clone());
        prop_assert_eq!(loops, g.loops.clone());
    }

    #[test]
    fn euler_orientation_balances((p, m) in even_diagonal_strategy()) {
        let g = matrix_to_graph(&p.matrix, LoopDegree::Two).unwrap();
        let arcs = euler_orient(&g).unwrap();
        let n = g.vertex_count;
        let (mut out_deg, mut in_deg) = (vec![0u32; n], vec![0u32; n]);
        for (t, h) in arcs {
            out_deg[t] += 1;
            in_deg[h] += 1;
        }
        prop_assert!(out_deg.iter().all(|&d| d == m));
        prop_assert!(in_deg.iter().all(|&d| d == m));
    }

    #[test]
    fn normal_form_is_idempotent(exps in prop::collection::vec(0u32..3, 11)) {
        let config = PointConfig::full(3).unwrap();
        let order = TermOrder::with_convention(&config, Convention::ProofConsistent).unwrap();
        let g = toric::toric_groebner(&config, &order).unwrap();
        let nf = g.normal_form(&exps);
        prop_assert_eq!(g.normal_form(&nf), nf.clone());
        prop_assert!(g.is_standard(&nf));
        // Same image under π.
        prop_assert_eq!(config.image(&nf), config.image(&exps));
    }
}

#[test]
fn s_is_sigma_dilated_by_two() {
    for n in 1..=4 {
        for m in 0..=3 {
            assert_eq!(count_points(n, m, Family::S), count_points(n, 2 * m, Family::Sigma));
        }
    }
}

#[test]
fn hstar_nonnegative_and_sums_to_volume() {
    for n in 2..=4 {
        let h = ehrhart::hstar_s(n).unwrap();
        assert!(h.coefficients[0].is_one());
        let sum: BigUint = h.coefficients.iter().sum();
        let vol = ehrhart::normalized_volume(&ehrhart::ehrhart_s(n).unwrap());
        assert!(vol.is_integer());
        assert_eq!(sum, vol.to_integer().to_biguint().unwrap(), "n = {n}");
        assert_eq!(h.is_palindromic(), n % 2 == 0, "n = {n}");
    }
    let h3: BigUint = ehrhart::hstar_s(3).unwrap().coefficients.iter().sum();
    assert_eq!(h3, BigUint::from(12u32));
}

#[test]
fn hrep_lattice_points_match_counts() {
    for n in 1..=3 {
        let h = geometry::hrep_s(n);
        for m in 0..=2 {
            let pts = geometry::lattice_points_of_dilate(&h, m).unwrap();
            assert_eq!(BigUint::from(pts.len()), count_points(n, m, Family::S));
        }
    }
}

#[test]
fn interior_counts_for_odd_n() {
    for n in [3usize, 5] {
        let first = (n as u32).div_ceil(2);
        for m in 1..first {
            assert!(geometry::interior_count(n, m).is_zero());
        }
        assert_eq!(geometry::interior_count(n, first), geometry::involution_count(n));
    }
}

#[test]
fn vertices_are_lattice_points_with_certificates() {
    for n in 1..=3 {
        let r = geometry::vertices(n).unwrap();
        let all = enumerate_points(n, 1, Family::S).unwrap();
        assert!(r.vertices.points.iter().all(|v| all.index_of(v).is_some()));
        assert_eq!(r.vertices.len() + r.non_vertices.len(), all.len());
        assert!(r.non_vertices.iter().all(|c| c.verify()));
    }
}
