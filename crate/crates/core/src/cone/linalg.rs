//! Fraction-free integer elimination used by the ray enumerator.

use super::ConeError;

/// Rank of an integer matrix by Bareiss elimination over `i128`.
///
/// Every intermediate entry is a minor of the input, so for 0/±1 rows with at
/// most a few dozen columns the values stay far below `i128::MAX`. Overflow is
/// still checked and reported.
pub fn integer_rank(rows: &[&[i64]], ncols: usize) -> Result<usize, ConeError> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let nrows = a.len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col];
        for r in rank + 1..nrows {
            let factor = a[r][col];
            for c in col + 1..ncols {
                let lhs = a[r][c].checked_mul(pivot).ok_or(ConeError::Overflow)?;
                let rhs = a[rank][c].checked_mul(factor).ok_or(ConeError::Overflow)?;
                a[r][c] = lhs.checked_sub(rhs).ok_or(ConeError::Overflow)? / prev;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}
