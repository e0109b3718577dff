//! Stopping sets: column subsets whose restriction of `H` has no row of weight one.

use rayon::prelude::*;
use thiserror::Error;

use crate::gf2::BinaryMatrix;

/// Largest `n` for the branch-and-bound search.
pub const DEFAULT_STOPPING_N_CAP: usize = 40;
/// Largest `n` for the exhaustive sweep over all `2^n` subsets.
pub const DEFAULT_EXHAUSTIVE_N_CAP: usize = 25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StoppingError {
    #[error("column index {index} out of range for n={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("n={n} exceeds stopping-set search cap {cap}")]
    DimensionTooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoppingReport {
    /// `s(H)`; `None` when no non-empty stopping set exists.
    pub stopping_distance: Option<usize>,
    /// Every smallest stopping set, each sorted, in lexicographic order.
    pub smallest_sets: Vec<Vec<usize>>,
    /// Every non-empty stopping set, when the exhaustive sweep was run.
    pub all_sets: Option<Vec<Vec<usize>>>,
}

impl StoppingReport {
    /// `T_s(H)`.
    pub fn count(&self) -> usize {
        self.smallest_sets.len()
    }
}

pub fn is_stopping_set(h: &BinaryMatrix, set: &[usize]) -> Result<bool, StoppingError> {
    let n = h.cols();
    if let Some(&index) = set.iter().find(|&&i| i >= n) {
        return Err(StoppingError::IndexOutOfRange { index, n });
    }
    let mut chosen = vec![false; n];
    for &i in set {
        chosen[i] = true;
    }
    Ok((0..h.rows()).all(|r| (0..n).filter(|&c| chosen[c] && h.get(r, c)).count() != 1))
}

struct Search<'a> {
    col_rows: &'a [Vec<usize>],
    row_cols: &'a [Vec<usize>],
    target: usize,
}

impl Search<'_> {
    /// Extends `chosen` (strictly increasing column indices) to size `target`.
    fn dfs(&self, chosen: &mut Vec<usize>, counts: &mut [u32], found: &mut Vec<Vec<usize>>) {
        let n = self.col_rows.len();
        let last = chosen.last().copied();
        let next = last.map_or(0, |l| l + 1);
        if chosen.len() == self.target {
            if counts.iter().all(|&c| c != 1) {
                found.push(chosen.clone());
            }
            return;
        }
        let slots = self.target - chosen.len();
        if n - next < slots {
            return;
        }
        // a row hit exactly once needs a later column covering it
        for (r, &c) in counts.iter().enumerate() {
            if c == 1 && !self.row_cols[r].iter().any(|&col| col >= next) {
                return;
            }
        }
        for col in next..=(n - slots) {
            chosen.push(col);
            for &r in &self.col_rows[col] {
                counts[r] += 1;
            }
            self.dfs(chosen, counts, found);
            for &r in &self.col_rows[col] {
                counts[r] -= 1;
            }
            chosen.pop();
        }
    }

    fn run(&self, m: usize) -> Vec<Vec<usize>> {
        let n = self.col_rows.len();
        if self.target == 0 || self.target > n {
            return Vec::new();
        }
        let mut found: Vec<Vec<usize>> = (0..=(n - self.target))
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut chosen = vec![first];
                let mut counts = vec![0u32; m];
                for &r in &self.col_rows[first] {
                    counts[r] += 1;
                }
                let mut found = Vec::new();
                self.dfs(&mut chosen, &mut counts, &mut found);
                found
            })
            .collect();
        found.sort();
        found
    }
}

/// `s(H)` and all smallest stopping sets by size-ascending branch and bound.
pub fn stopping_distance(h: &BinaryMatrix, cap: usize) -> Result<StoppingReport, StoppingError> {
    let (m, n) = (h.rows(), h.cols());
    if n > cap {
        return Err(StoppingError::DimensionTooLarge { n, cap });
    }
    let col_rows: Vec<Vec<usize>> = (0..n).map(|c| (0..m).filter(|&r| h.get(r, c)).collect()).collect();
    let row_cols: Vec<Vec<usize>> = (0..m).map(|r| h.row_support(r)).collect();
    for target in 1..=n {
        let sets = Search {
            col_rows: &col_rows,
            row_cols: &row_cols,
            target,
        }
        .run(m);
        if !sets.is_empty() {
            return Ok(StoppingReport {
                stopping_distance: Some(target),
                smallest_sets: sets,
                all_sets: None,
            });
        }
    }
    Ok(StoppingReport {
        stopping_distance: None,
        smallest_sets: Vec::new(),
        all_sets: None,
    })
}

/// Every non-empty stopping set by a sweep over all `2^n` column subsets.
pub fn all_stopping_sets(h: &BinaryMatrix, cap: usize) -> Result<Vec<Vec<usize>>, StoppingError> {
    let n = h.cols();
    // subsets are u32 masks
    let cap = cap.min(31);
    if n > cap {
        return Err(StoppingError::DimensionTooLarge { n, cap });
    }
    let row_masks: Vec<u32> = (0..h.rows())
        .map(|r| (0..n).filter(|&c| h.get(r, c)).fold(0u32, |acc, c| acc | (1 << c)))
        .collect();
    let mut sets: Vec<Vec<usize>> = (1u32..(1u32 << n))
        .into_par_iter()
        .filter(|&s| row_masks.iter().all(|&row| (row & s).count_ones() != 1))
        .map(|s| (0..n).filter(|&c| s >> c & 1 == 1).collect())
        .collect();
    sets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

/// Exhaustive report: smallest sets derived from the full list.
pub fn stopping_report_exhaustive(h: &BinaryMatrix, cap: usize) -> Result<StoppingReport, StoppingError> {
    let all = all_stopping_sets(h, cap)?;
    let s = all.first().map(Vec::len);
    let smallest_sets = all.iter().filter(|set| Some(set.len()) == s).cloned().collect();
    Ok(StoppingReport {
        stopping_distance: s,
        smallest_sets,
        all_sets: Some(all),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{enumerate_codewords, min_distance};

    fn circulant(first: &[u8]) -> BinaryMatrix {
        let n = first.len();
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|s| (0..n).map(|c| first[(c + n - s) % n]).collect())
            .collect();
        BinaryMatrix::from_rows(&rows).unwrap()
    }

    fn example1() -> BinaryMatrix {
        circulant(&[1, 1, 0, 1, 0, 0, 0])
    }

    fn one_based(sets: &[&[usize]]) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().map(|i| i - 1).collect()).collect();
        v.sort();
        v
    }

    #[test]
    fn membership_examples() {
        let h = example1();
        assert!(is_stopping_set(&h, &[0, 2, 3, 4]).unwrap());
        assert!(!is_stopping_set(&h, &[0]).unwrap());
        assert!(is_stopping_set(&h, &[0, 1, 2, 3, 4, 5, 6]).unwrap());
        assert!(is_stopping_set(&h, &[]).unwrap());
        assert_eq!(
            is_stopping_set(&h, &[7]),
            Err(StoppingError::IndexOutOfRange { index: 7, n: 7 })
        );
    }

    #[test]
    fn example1_smallest_sets() {
        let r = stopping_distance(&example1(), 40).unwrap();
        assert_eq!(r.stopping_distance, Some(4));
        assert_eq!(r.count(), 7);
        let expected = one_based(&[
            &[1, 3, 4, 5],
            &[2, 4, 5, 6],
            &[3, 5, 6, 7],
            &[1, 4, 6, 7],
            &[1, 2, 5, 7],
            &[1, 2, 3, 6],
            &[2, 3, 4, 7],
        ]);
        assert_eq!(r.smallest_sets, expected);
    }

    #[test]
    fn example1_exhaustive_sweep() {
        let r = stopping_report_exhaustive(&example1(), 25).unwrap();
        let all = r.all_sets.unwrap();
        // 7 of size 4, the 7 pairwise unions of size 6, and the full support
        assert_eq!(all.len(), 15);
        assert_eq!(all.iter().filter(|s| s.len() == 6).count(), 7);
        assert_eq!(all.last().unwrap(), &(0..7).collect::<Vec<_>>());
        assert_eq!(r.stopping_distance, Some(4));
        assert_eq!(r.smallest_sets.len(), 7);
    }

    #[test]
    fn hamming_stopping_distance_is_three() {
        // rows are the non-zero codewords of the [7,3] simplex code
        let rows: Vec<Vec<u8>> = (1..8u32)
            .map(|a| (1..8u32).map(|c| ((a & c).count_ones() % 2) as u8).collect())
            .collect();
        let h = BinaryMatrix::from_rows(&rows).unwrap();
        assert_eq!(stopping_distance(&h, 40).unwrap().stopping_distance, Some(3));
        assert_eq!(stopping_report_exhaustive(&h, 25).unwrap().stopping_distance, Some(3));
    }

    #[test]
    fn identity_has_no_stopping_sets() {
        let h = BinaryMatrix::identity(5).unwrap();
        let r = stopping_distance(&h, 40).unwrap();
        assert_eq!(r.stopping_distance, None);
        assert!(r.smallest_sets.is_empty());
    }

    #[test]
    fn caps_are_enforced() {
        let h = BinaryMatrix::zeros(1, 30).unwrap();
        assert!(matches!(stopping_distance(&h, 20), Err(StoppingError::DimensionTooLarge { .. })));
        assert!(matches!(all_stopping_sets(&h, 25), Err(StoppingError::DimensionTooLarge { .. })));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix(max_n: usize) -> impl Strategy<Value = BinaryMatrix> {
            (1usize..7, 2usize..=max_n).prop_flat_map(|(m, n)| {
                proptest::collection::vec(proptest::collection::vec(0u8..2, n), m)
                    .prop_map(|rows| BinaryMatrix::from_rows(&rows).unwrap())
            })
        }

        proptest! {
            #[test]
            fn branch_and_bound_matches_sweep(h in small_matrix(15)) {
                let bb = stopping_distance(&h, 40).unwrap();
                let ex = stopping_report_exhaustive(&h, 25).unwrap();
                prop_assert_eq!(bb.stopping_distance, ex.stopping_distance);
                prop_assert_eq!(bb.smallest_sets, ex.smallest_sets);
            }

            #[test]
            fn codeword_supports_are_stopping_sets(h in small_matrix(12)) {
                for c in enumerate_codewords(&h, 28).unwrap() {
                    prop_assert!(is_stopping_set(&h, &c.support()).unwrap());
                }
                let s = stopping_distance(&h, 40).unwrap().stopping_distance;
                if let (Some(s), Some(d)) = (s, min_distance(&h, 28).unwrap()) {
                    prop_assert!(s <= d);
                }
            }

            #[test]
            fn union_of_stopping_sets_is_stopping(h in small_matrix(12), a in any::<usize>(), b in any::<usize>()) {
                let all = all_stopping_sets(&h, 25).unwrap();
                if !all.is_empty() {
                    let mut u = all[a % all.len()].clone();
                    u.extend(&all[b % all.len()]);
                    u.sort();
                    u.dedup();
                    prop_assert!(is_stopping_set(&h, &u).unwrap());
                }
            }
        }
    }
}
