//! Lattice points as loop multigraphs, and the constructive proof that `S_n`
//! is integrally closed: every lattice point of `m·S_n` splits into `m`
//! lattice points of `S_n` via a 2-factorization of an auxiliary
//! `2m`-regular multigraph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::symmat::{DilatePoint, Family, SymIntMatrix};

/// How much a loop contributes to the degree of its vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopDegree {
    One,
    Two,
}

impl LoopDegree {
    fn weight(self) -> u64 {
        match self {
            LoopDegree::One => 1,
            LoopDegree::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopMultigraph {
    pub vertex_count: usize,
    /// Multiplicity of each non-loop edge `{u, v}`, keyed with `u < v`.
    pub edges: BTreeMap<(usize, usize), u32>,
    pub loops: Vec<u32>,
    pub convention: LoopDegree,
}

/// A directed edge `tail → head`; loops are arcs `v → v`.
pub type Arc = (usize, usize);

impl LoopMultigraph {
    pub fn empty(vertex_count: usize, convention: LoopDegree) -> Self {
        LoopMultigraph {
            vertex_count,
            edges: BTreeMap::new(),
            loops: vec![0; vertex_count],
            convention,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, mult: u32) {
        if mult == 0 {
            return;
        }
        if u == v {
            self.loops[u] += mult;
        } else {
            *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += mult;
        }
    }

    pub fn degree(&self, v: usize) -> u64 {
        let edges: u64 = self
            .edges
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &k)| u64::from(k))
            .sum();
        edges + u64::from(self.loops[v]) * self.convention.weight()
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg: Vec<u64> = self
            .loops
            .iter()
            .map(|&l| u64::from(l) * self.convention.weight())
            .collect();
        for (&(a, b), &k) in &self.edges {
            deg[a] += u64::from(k);
            deg[b] += u64::from(k);
        }
        deg
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.values().map(|&k| u64::from(k)).sum::<u64>()
            + self.loops.iter().map(|&l| u64::from(l)).sum::<u64>()
    }

    /// Connected components over vertices that carry at least one non-loop
    /// edge or loop, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in self.edges.keys() {
            uf.union(a, b);
        }
        let deg = self.degrees();
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertex_count {
            if deg[v] > 0 {
                groups.entry(uf.find(v)).or_default().push(v);
            }
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Reads a matrix as an adjacency matrix. Under [`LoopDegree::Two`] every
/// diagonal entry must be even.
pub fn matrix_to_graph(x: &SymIntMatrix, convention: LoopDegree) -> Result<LoopMultigraph> {
    let n = x.n();
    let mut g = LoopMultigraph::empty(n, convention);
    for i in 0..n {
        let d = x.get(i, i);
        g.loops[i] = match convention {
            LoopDegree::One => d,
            LoopDegree::Two => {
                if !d.is_multiple_of(2) {
                    return Err(Error::Parity(format!(
                        "diagonal entry ({i},{i}) = {d} is odd; loops of degree 2 need even entries"
                    )));
                }
                d / 2
            }
        };
        for j in i + 1..n {
            g.add_edge(i, j, x.get(i, j));
        }
    }
    Ok(g)
}

pub fn graph_to_matrix(g: &LoopMultigraph) -> SymIntMatrix {
    let mut x = SymIntMatrix::zeros(g.vertex_count);
    for (v, &l) in g.loops.iter().enumerate() {
        let d = match g.convention {
            LoopDegree::One => l,
            LoopDegree::Two => 2 * l,
        };
        x.set(v, v, d);
    }
    for (&(a, b), &k) in &g.edges {
        x.set(a, b, k);
    }
    x
}

/// Orients every edge along an Euler circuit of its component, so that each
/// vertex ends up with in-degree equal to out-degree. Each loop becomes one
/// arc `v → v`.
pub fn euler_orient(g: &LoopMultigraph) -> Result<Vec<Arc>> {
    if g.convention == LoopDegree::One && g.loops.iter().any(|&l| l > 0) {
        return Err(Error::invalid(
            "loops of degree 1 cannot be oriented with balanced in/out degree; use loop degree 2",
        ));
    }
    for (v, d) in g.degrees().into_iter().enumerate() {
        if d % 2 != 0 {
            return Err(Error::Parity(format!("vertex {v} has odd degree {d}")));
        }
    }

    // Unit edges, each listed once per endpoint.
    let mut ends: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count];
    for (&(a, b), &k) in &g.edges {
        for _ in 0..k {
            let id = ends.len();
            ends.push((a, b));
            adj[a].push(id);
            adj[b].push(id);
        }
    }

    let mut used = vec![false; ends.len()];
    let mut next = vec![0usize; g.vertex_count];
    let mut arcs = Vec::with_capacity(ends.len());
    for start in 0..g.vertex_count {
        // Hierholzer: walk until stuck, emit arcs while unwinding.
        let mut stack: Vec<(usize, Option<Arc>)> = vec![(start, None)];
        let mut circuit: Vec<Arc> = Vec::new();
        while let Some(&(v, arrived)) = stack.last() {
            while next[v] < adj[v].len() && used[adj[v][next[v]]] {
                next[v] += 1;
            }
            if next[v] < adj[v].len() {
                let e = adj[v][next[v]];
                used[e] = true;
                let (a, b) = ends[e];
                let w = if a == v { b } else { a };
                stack.push((w, Some((v, w))));
            } else {
                stack.pop();
                if let Some(arc) = arrived {
                    circuit.push(arc);
                }
            }
        }
        circuit.reverse();
        arcs.extend(circuit);
    }
    for (v, &l) in g.loops.iter().enumerate() {
        arcs.extend(std::iter::repeat_n((v, v), l as usize));
    }
    Ok(arcs)
}

/// Splits a `2m`-regular multigraph (loops of degree 2) into `m` spanning
/// 2-regular subgraphs whose edge multisets partition the input.
///
/// The graph is Euler-oriented, which makes the tail/head bipartite double
/// cover `m`-regular; `m` perfect matchings are then peeled off with
/// augmenting paths. Every matching is a set of arcs with one arc leaving and
/// one arc entering each vertex, i.e. a 2-factor.
pub fn petersen_two_factorize(g: &LoopMultigraph, m: u32) -> Result<Vec<LoopMultigraph>> {
    if g.convention != LoopDegree::Two {
        return Err(Error::invalid("2-factorization expects loops of degree 2"));
    }
    let want = 2 * u64::from(m);
    for (v, d) in g.degrees().into_iter().enumerate() {
        if d != want {
            return Err(Error::Regularity {
                vertex: v,
                degree: d,
                expected: want,
            });
        }
    }
    let arcs = euler_orient(g)?;
    let nv = g.vertex_count;
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for (id, &(tail, _)) in arcs.iter().enumerate() {
        out_arcs[tail].push(id);
    }
    let mut alive = vec![true; arcs.len()];
    let mut factors = Vec::with_capacity(m as usize);
    for round in 0..m {
        let matching = perfect_matching(nv, &arcs, &out_arcs, &alive).ok_or_else(|| {
            Error::Inconsistent(format!(
                "no perfect matching in round {round} of an {}-regular double cover",
                m - round
            ))
        })?;
        let mut f = LoopMultigraph::empty(nv, LoopDegree::Two);
        for id in matching {
            alive[id] = false;
            let (a, b) = arcs[id];
            f.add_edge(a, b, 1);
        }
        factors.push(f);
    }
    Ok(factors)
}

/// Kuhn's augmenting-path matching between arc tails (left) and arc heads
/// (right), scanning left vertices from the lowest index. Returns one arc id
/// per left vertex.
fn perfect_matching(
    nv: usize,
    arcs: &[Arc],
    out_arcs: &[Vec<usize>],
    alive: &[bool],
) -> Option<Vec<usize>> {
    let mut right_match: Vec<Option<usize>> = vec![None; nv];
    for left in 0..nv {
        let mut seen = vec![false; nv];
        if !augment(left, arcs, out_arcs, alive, &mut right_match, &mut seen) {
            return None;
        }
    }
    let mut ids: Vec<usize> = right_match.into_iter().collect::<Option<Vec<_>>>()?;
    ids.sort_unstable();
    Some(ids)
}

fn augment(
    left: usize,
    arcs: &[Arc],
    out_arcs: &[Vec<usize>],
    alive: &[bool],
    right_match: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &id in &out_arcs[left] {
        if !alive[id] {
            continue;
        }
        let head = arcs[id].1;
        if seen[head] {
            continue;
        }
        seen[head] = true;
        let free = match right_match[head] {
            None => true,
            Some(other) => augment(arcs[other].0, arcs, out_arcs, alive, right_match, seen),
        };
        if free {
            right_match[head] = Some(id);
            return true;
        }
    }
    false
}

/// A lattice point of `m·S_n` written as a sum of `m` lattice points of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub target: SymIntMatrix,
    pub m: u32,
    pub summands: Vec<SymIntMatrix>,
}

impl Decomposition {
    /// Re-checks the certificate from scratch.
    pub fn verify(&self) -> Result<()> {
        if self.summands.len() != self.m as usize {
            return Err(Error::falsified(format!(
                "{} summands for m = {}",
                self.summands.len(),
                self.m
            )));
        }
        for s in &self.summands {
            DilatePoint::new(s.clone(), 1, Family::S)
                .map_err(|e| Error::falsified(format!("summand {s} is not in S_n: {e}")))?;
        }
        let total = if self.summands.is_empty() {
            SymIntMatrix::zeros(self.target.n())
        } else {
            SymIntMatrix::sum_of(&self.summands)?
        };
        if total != self.target {
            return Err(Error::falsified(format!(
                "summands add up to {total}, not {}",
                self.target
            )));
        }
        Ok(())
    }
}

/// Decomposes a lattice point of `m·S_n` into `m` lattice points of `S_n`.
///
/// Vertices with an odd diagonal entry each trade one unit of their diagonal
/// for an edge to a helper vertex `w_j`, filling helpers in index order up to
/// degree `2m`; the last helper is topped up with loops. The resulting graph is
/// `2m`-regular with loops of degree 2, so it 2-factorizes; each helper edge in
/// a factor is then folded back into the diagonal of its `v_i`.
pub fn decompose(x: &DilatePoint) -> Result<Decomposition> {
    if x.family != Family::S {
        return Err(Error::invalid("decompose expects a lattice point of m·S_n"));
    }
    let m = x.dilate;
    let target = x.matrix.clone();
    let n = target.n();
    if m == 0 {
        return Ok(Decomposition {
            target,
            m,
            summands: Vec::new(),
        });
    }
    let span = 2 * m as usize;
    let odd: Vec<usize> = (0..n).filter(|&i| target.get(i, i) % 2 == 1).collect();
    if !odd.len().is_multiple_of(2) {
        return Err(Error::falsified(format!(
            "{} vertices carry an odd number of loops; the total loop count must be even",
            odd.len()
        )));
    }
    let (t, s) = (odd.len() / span, odd.len() % span);
    if s % 2 != 0 {
        return Err(Error::falsified(format!("remainder s = {s} is odd")));
    }
    let helpers = if odd.is_empty() { 0 } else { t + 1 };

    let mut gy = LoopMultigraph::empty(n + helpers, LoopDegree::Two);
    for i in 0..n {
        let d = target.get(i, i);
        gy.loops[i] = d / 2;
        for j in i + 1..n {
            gy.add_edge(i, j, target.get(i, j));
        }
    }
    for (k, &v) in odd.iter().enumerate() {
        gy.add_edge(v, n + k / span, 1);
    }
    if helpers > 0 {
        gy.loops[n + t] += ((span - s) / 2) as u32;
    }

    let factors = petersen_two_factorize(&gy, m)
        .map_err(|e| Error::falsified(format!("auxiliary graph did not 2-factor: {e}")))?;

    let mut summands = Vec::with_capacity(factors.len());
    for f in &factors {
        let mut xk = SymIntMatrix::zeros(n);
        for v in 0..n {
            xk.set(v, v, 2 * f.loops[v]);
        }
        for (&(a, b), &k) in &f.edges {
            match (a < n, b < n) {
                (true, true) => xk.set(a, b, k),
                (true, false) => xk.set(a, a, xk.get(a, a) + k),
                (false, true) => xk.set(b, b, xk.get(b, b) + k),
                (false, false) => {}
            }
        }
        summands.push(xk);
    }
    summands.sort();
    let d = Decomposition {
        target,
        m,
        summands,
    };
    d.verify()?;
    Ok(d)
}

/// Decomposes every point of a batch; order of the output follows the input.
pub fn decompose_batch(points: &[DilatePoint], strategy: Strategy) -> Result<Vec<Decomposition>> {
    par::try_map(strategy, points, decompose)
}
