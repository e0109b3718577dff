//! Independent oracles shared by the integration tests. Nothing here calls
//! into the cone or bounds code it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use pseudocone::gf2::BinaryMatrix;
use rand::seq::index::sample;
use rand::Rng;

pub fn example1() -> BinaryMatrix {
    let first = [1u8, 1, 0, 1, 0, 0, 0];
    let rows: Vec<Vec<u8>> = (0..7).map(|s| (0..7).map(|c| first[(c + 7 - s) % 7]).collect()).collect();
    BinaryMatrix::from_rows(&rows).unwrap()
}

/// `n ∈ [2, n_max]`, `m ∈ [1, m_max]`, each row of weight `1..=min(w_max, n)`.
pub fn random_h(rng: &mut impl Rng, n_max: usize, m_max: usize, w_max: usize) -> BinaryMatrix {
    let n = rng.gen_range(2..=n_max);
    let m = rng.gen_range(1..=m_max);
    let mut h = BinaryMatrix::zeros(m, n).unwrap();
    for r in 0..m {
        let w = rng.gen_range(1..=w_max.min(n));
        for c in sample(rng, n, w) {
            h.set(r, c, true);
        }
    }
    h
}

/// Rows `a` of the system `a·x >= 0` cutting out the cone: `x_i >= 0`, and
/// for each check and each `i` in it, the other variables sum to at least `x_i`.
fn cone_rows(h: &BinaryMatrix) -> Vec<Vec<i64>> {
    let n = h.cols();
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut r = vec![0; n];
        r[i] = 1;
        rows.insert(r);
    }
    for j in 0..h.rows() {
        let support: Vec<usize> = (0..n).filter(|&c| h.get(j, c)).collect();
        for &i in &support {
            let mut r = vec![0; n];
            for &c in &support {
                r[c] = if c == i { -1 } else { 1 };
            }
            rows.insert(r);
        }
    }
    rows.into_iter().collect()
}

type Q = Ratio<i128>;

/// Row echelon state kept while a DFS picks constraints.
#[derive(Clone)]
struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    /// Adds `row` if it is independent of the rows so far.
    fn push(&self, row: &[i64]) -> Option<Echelon> {
        let mut v: Vec<Q> = row.iter().map(|&a| Q::from_integer(a as i128)).collect();
        for (p, r) in &self.rows {
            if v[*p] != Q::from_integer(0) {
                let f = v[*p] / r[*p];
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= f * y;
                }
            }
        }
        let pivot = v.iter().position(|x| *x != Q::from_integer(0))?;
        let mut next = self.clone();
        next.rows.push((pivot, v));
        Some(next)
    }

    /// Spanning vector of the one-dimensional kernel, as primitive integers.
    fn kernel(&self, n: usize) -> Vec<i128> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let free = (0..n).find(|c| !pivots.contains(c)).unwrap();
        let mut x = vec![Q::from_integer(0); n];
        x[free] = Q::from_integer(1);
        // rows are in echelon order only up to column permutation, so solve
        // the triangular system by repeated sweeps
        let mut solved = vec![false; n];
        solved[free] = true;
        for _ in 0..n {
            for (p, r) in &self.rows {
                if solved[*p] {
                    continue;
                }
                let ready = r
                    .iter()
                    .enumerate()
                    .all(|(c, a)| c == *p || *a == Q::from_integer(0) || solved[c]);
                if ready {
                    let s: Q = r
                        .iter()
                        .enumerate()
                        .filter(|(c, _)| *c != *p)
                        .map(|(c, a)| *a * x[c])
                        .fold(Q::from_integer(0), |acc, t| acc + t);
                    x[*p] = -s / r[*p];
                    solved[*p] = true;
                }
            }
        }
        assert!(solved.iter().all(|&s| s), "kernel back-substitution stalled");
        let lcm = x.iter().fold(1i128, |acc, q| acc.lcm(q.denom()));
        let ints: Vec<i128> = x.iter().map(|q| q.numer() * (lcm / q.denom())).collect();
        let g = ints.iter().fold(0i128, |acc, v| acc.gcd(v));
        ints.into_iter().map(|v| v / g).collect()
    }
}

/// Extreme rays of the cone by trying every set of `n − 1` linearly
/// independent constraints: each such set fixes a line, and the line gives a
/// ray iff one of its directions satisfies every constraint.
pub fn brute_force_rays(h: &BinaryMatrix) -> BTreeSet<Vec<i64>> {
    let n = h.cols();
    let rows = cone_rows(h);
    let mut out = BTreeSet::new();
    if n == 1 {
        out.insert(vec![1]);
        return out;
    }
    fn dfs(
        rows: &[Vec<i64>],
        start: usize,
        state: &Echelon,
        n: usize,
        out: &mut BTreeSet<Vec<i64>>,
    ) {
        if state.rows.len() == n - 1 {
            let k = state.kernel(n);
            for sign in [1i128, -1] {
                let cand: Vec<i128> = k.iter().map(|v| v * sign).collect();
                let feasible = rows
                    .iter()
                    .all(|r| r.iter().zip(&cand).map(|(&a, &x)| a as i128 * x).sum::<i128>() >= 0);
                if feasible && cand.iter().any(|&v| v != 0) {
                    out.insert(cand.iter().map(|&v| v as i64).collect());
                }
            }
            return;
        }
        let need = n - 1 - state.rows.len();
        for i in start..rows.len() {
            if rows.len() - i < need {
                break;
            }
            if let Some(next) = state.push(&rows[i]) {
                dfs(rows, i + 1, &next, n, out);
            }
        }
    }
    dfs(&rows, 0, &Echelon { rows: Vec::new() }, n, &mut out);
    out
}

/// `‖x‖₁² / ‖x‖₂²` as an exact fraction.
pub fn pseudo_weight(x: &[Ratio<i128>]) -> Ratio<i128> {
    let l1: Ratio<i128> = x.iter().copied().fold(Ratio::from_integer(0), |a, b| a + b);
    let l2: Ratio<i128> = x.iter().fold(Ratio::from_integer(0), |a, b| a + b * b);
    l1 * l1 / l2
}

/// All codewords by brute force over `2^n` words.
pub fn codewords_brute(h: &BinaryMatrix) -> Vec<Vec<u8>> {
    let n = h.cols();
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| (mask >> i & 1) as u8).collect::<Vec<u8>>())
        .filter(|w| (0..h.rows()).all(|r| (0..n).filter(|&c| h.get(r, c) && w[c] == 1).count() % 2 == 0))
        .collect()
}
