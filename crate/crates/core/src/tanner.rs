//! Tanner graph of a parity-check matrix: girth, degrees and column overlap.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::gf2::{BinaryMatrix, BinaryVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TannerError {
    #[error("parity-check matrix is all zero")]
    ZeroMatrix,
}

/// Length of the shortest cycle, or `None` when the graph is a forest.
pub type Girth = Option<usize>;

#[derive(Debug, Clone)]
pub struct TannerGraph {
    n: usize,
    m: usize,
    /// Variable indices adjacent to each check.
    check_adj: Vec<Vec<usize>>,
    /// Check indices adjacent to each variable.
    var_adj: Vec<Vec<usize>>,
    columns: Vec<BinaryVector>,
    girth: Girth,
    max_pair_intersection: usize,
}

impl TannerGraph {
    pub fn build(h: &BinaryMatrix) -> Result<Self, TannerError> {
        if h.is_zero() {
            return Err(TannerError::ZeroMatrix);
        }
        let (m, n) = (h.rows(), h.cols());
        let check_adj: Vec<Vec<usize>> = (0..m).map(|j| h.row_support(j)).collect();
        let mut var_adj = vec![Vec::new(); n];
        for (j, vars) in check_adj.iter().enumerate() {
            for &i in vars {
                var_adj[i].push(j);
            }
        }
        let columns = (0..n).map(|i| h.column(i)).collect();
        let mut g = Self {
            n,
            m,
            check_adj,
            var_adj,
            columns,
            girth: None,
            max_pair_intersection: 0,
        };
        g.girth = g.compute_girth();
        g.max_pair_intersection = g.compute_max_pair_intersection();
        Ok(g)
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn check_count(&self) -> usize {
        self.m
    }

    pub fn checks_of(&self, variable: usize) -> &[usize] {
        &self.var_adj[variable]
    }

    pub fn variables_of(&self, check: usize) -> &[usize] {
        &self.check_adj[check]
    }

    pub fn column_weights(&self) -> Vec<usize> {
        self.var_adj.iter().map(Vec::len).collect()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.check_adj.iter().map(Vec::len).collect()
    }

    /// Minimum column weight, γ.
    pub fn min_col_weight(&self) -> usize {
        self.var_adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_col_weight(&self) -> usize {
        self.var_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_row_weight(&self) -> usize {
        self.check_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_uniform_column_weight(&self) -> bool {
        self.min_col_weight() == self.max_col_weight()
    }

    pub fn girth(&self) -> Girth {
        self.girth
    }

    /// Largest number of checks shared by two distinct columns, λ.
    pub fn max_pair_intersection(&self) -> usize {
        self.max_pair_intersection
    }

    fn compute_max_pair_intersection(&self) -> usize {
        let cols = &self.columns;
        (0..self.n)
            .into_par_iter()
            .map(|a| {
                (a + 1..self.n)
                    .map(|b| {
                        cols[a]
                            .words()
                            .iter()
                            .zip(cols[b].words())
                            .map(|(x, y)| (x & y).count_ones() as usize)
                            .sum::<usize>()
                    })
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    fn compute_girth(&self) -> Girth {
        (0..self.n)
            .into_par_iter()
            .filter_map(|v| self.shortest_cycle_through_bfs(v))
            .min()
    }

    /// BFS from variable `root` over the bipartite graph. Nodes are numbered
    /// variables first, then checks. The first non-tree edge found bounds the
    /// shortest cycle through the BFS tree; the global minimum over all roots is
    /// the girth.
    fn shortest_cycle_through_bfs(&self, root: usize) -> Option<usize> {
        let total = self.n + self.m;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        let mut best: Option<usize> = None;
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // a non-tree edge leaving depth d closes a walk of length >= 2d
                if 2 * dist[u] >= b {
                    break;
                }
            }
            let neighbours: Box<dyn Iterator<Item = usize>> = if u < self.n {
                Box::new(self.var_adj[u].iter().map(|&j| self.n + j))
            } else {
                Box::new(self.check_adj[u - self.n].iter().copied())
            };
            for w in neighbours {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circulant(first: &[u8]) -> BinaryMatrix {
        let n = first.len();
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|s| (0..n).map(|c| first[(c + n - s) % n]).collect())
            .collect();
        BinaryMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn example1_statistics() {
        let g = TannerGraph::build(&circulant(&[1, 1, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(g.min_col_weight(), 3);
        assert!(g.has_uniform_column_weight());
        assert!(g.row_weights().iter().all(|&r| r == 3));
        assert_eq!(g.girth(), Some(6));
        assert_eq!(g.max_pair_intersection(), 1);
    }

    #[test]
    fn identity_is_acyclic() {
        let g = TannerGraph::build(&BinaryMatrix::identity(4).unwrap()).unwrap();
        assert_eq!(g.girth(), None);
        assert_eq!(g.column_weights(), vec![1; 4]);
        assert_eq!(g.max_pair_intersection(), 0);
    }

    #[test]
    fn tree_shaped_matrix_is_acyclic() {
        // path v0 - c0 - v1 - c1 - v2, plus a leaf v3 on c1
        let h = BinaryMatrix::from_rows(&[[1u8, 1, 0, 0], [0, 1, 1, 1]]).unwrap();
        assert_eq!(TannerGraph::build(&h).unwrap().girth(), None);
    }

    #[test]
    fn duplicated_columns_share_their_weight() {
        let h = BinaryMatrix::from_rows(&[[1u8, 1, 0], [1, 1, 1], [1, 1, 0]]).unwrap();
        let g = TannerGraph::build(&h).unwrap();
        assert_eq!(g.max_pair_intersection(), 3);
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn zero_matrix_is_rejected() {
        let h = BinaryMatrix::zeros(2, 3).unwrap();
        assert_eq!(TannerGraph::build(&h).unwrap_err(), TannerError::ZeroMatrix);
    }

    /// Shortest simple cycle by exhaustive DFS over simple paths.
    fn brute_force_girth(h: &BinaryMatrix) -> Girth {
        let (m, n) = (h.rows(), h.cols());
        let total = n + m;
        let adj: Vec<Vec<usize>> = (0..total)
            .map(|u| {
                if u < n {
                    (0..m).filter(|&j| h.get(j, u)).map(|j| n + j).collect()
                } else {
                    (0..n).filter(|&i| h.get(u - n, i)).collect()
                }
            })
            .collect();
        fn dfs(adj: &[Vec<usize>], start: usize, u: usize, len: usize, on: &mut [bool], best: &mut Option<usize>) {
            if best.is_some_and(|b| len >= b) {
                return;
            }
            for &w in &adj[u] {
                if w == start && len >= 3 {
                    *best = Some(best.map_or(len + 1, |b| b.min(len + 1)));
                } else if !on[w] && w > start {
                    on[w] = true;
                    dfs(adj, start, w, len + 1, on, best);
                    on[w] = false;
                }
            }
        }
        let mut best = None;
        for s in 0..total {
            let mut on = vec![false; total];
            on[s] = true;
            dfs(&adj, s, s, 0, &mut on, &mut best);
        }
        best
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = BinaryMatrix> {
            (1usize..6, 2usize..=10).prop_flat_map(|(m, n)| {
                proptest::collection::vec(proptest::collection::vec(0u8..2, n), m)
                    .prop_filter_map("non-zero", |rows| {
                        let h = BinaryMatrix::from_rows(&rows).unwrap();
                        (!h.is_zero()).then_some(h)
                    })
            })
        }

        proptest! {
            #[test]
            fn girth_matches_brute_force(h in small_matrix()) {
                let g = TannerGraph::build(&h).unwrap();
                prop_assert_eq!(g.girth(), brute_force_girth(&h));
                if let Some(len) = g.girth() {
                    prop_assert!(len >= 4 && len % 2 == 0);
                }
            }

            #[test]
            fn four_cycles_iff_overlap_two(h in small_matrix()) {
                let g = TannerGraph::build(&h).unwrap();
                prop_assert_eq!(g.girth() == Some(4), g.max_pair_intersection() >= 2);
            }

            #[test]
            fn girth_invariant_under_permutation(h in small_matrix(), seed in any::<u64>()) {
                use rand::{seq::SliceRandom, SeedableRng};
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let mut rows = h.to_rows();
                rows.shuffle(&mut rng);
                let mut perm: Vec<usize> = (0..h.cols()).collect();
                perm.shuffle(&mut rng);
                let rows: Vec<Vec<u8>> = rows.iter().map(|r| perm.iter().map(|&p| r[p]).collect()).collect();
                let p = BinaryMatrix::from_rows(&rows).unwrap();
                prop_assert_eq!(TannerGraph::build(&p).unwrap().girth(), TannerGraph::build(&h).unwrap().girth());
            }
        }
    }
}
