//! Exact primal simplex for `min c·x` s.t. `A x <= b`, `x >= 0`, `b >= 0`.
//!
//! The tableau is kept fraction-free: every entry is an integer and the true
//! tableau is the integer tableau divided by the last pivot element. Each
//! pivot divides exactly by the previous one. Arithmetic runs on `i128` with
//! overflow checks and restarts on `BigInt` if a value would not fit.
//! Entering and leaving variables follow Bland's rule, so degenerate pivots
//! cannot cycle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Integer operations the tableau needs; `None` signals overflow.
trait Exact: Clone + Ord + Sized {
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self;
    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    /// `(a·b - c·d) / den`, exact.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, den: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn zero() -> Self {
        0
    }
    fn is_pos(&self) -> bool {
        *self > 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, den: &Self) -> Option<Self> {
        let ab = a.checked_mul(*b)?;
        let cd = c.checked_mul(*d)?;
        let num = ab.checked_sub(cd)?;
        debug_assert_eq!(num % den, 0);
        Some(num / den)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, den: &Self) -> Option<Self> {
        Some((a * b - c * d) / den)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<BigRational>,
    pub objective: BigRational,
    pub pivots: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexFailure {
    Unbounded,
}

enum Outcome<T> {
    Done(Vec<T>, T, Vec<usize>, usize),
    Unbounded,
    Overflow,
}

/// `rows` are the rows of `A`, `rhs` is `b`, `cost` is `c`.
pub(crate) fn solve(rows: &[Vec<i64>], rhs: &[i64], cost: &[i64]) -> Result<LpSolution, SimplexFailure> {
    match run::<i128>(rows, rhs, cost) {
        Outcome::Overflow => finish(run::<BigInt>(rows, rhs, cost), cost),
        outcome => finish(outcome, cost),
    }
}

fn finish<T: Exact>(outcome: Outcome<T>, cost: &[i64]) -> Result<LpSolution, SimplexFailure> {
    match outcome {
        Outcome::Done(rhs_col, den, basis, pivots) => {
            let n = cost.len();
            let den = den.to_big();
            let mut x = vec![BigRational::zero(); n];
            for (row, &var) in basis.iter().enumerate() {
                if var < n {
                    x[var] = BigRational::new(rhs_col[row].to_big(), den.clone());
                }
            }
            let objective = x
                .iter()
                .zip(cost)
                .map(|(v, &c)| v * BigRational::from_integer(c.into()))
                .sum();
            Ok(LpSolution { x, objective, pivots })
        }
        Outcome::Unbounded => Err(SimplexFailure::Unbounded),
        Outcome::Overflow => unreachable!("arbitrary precision does not overflow"),
    }
}

fn run<T: Exact>(rows: &[Vec<i64>], rhs: &[i64], cost: &[i64]) -> Outcome<T> {
    let n = cost.len();
    let m = rows.len();
    let width = n + m + 1;
    let rc = width - 1;
    // all costs nonnegative: the origin is optimal without building a tableau
    if cost.iter().all(|&c| c >= 0) {
        return Outcome::Done(rhs.iter().map(|&b| T::from_i64(b)).collect(), T::from_i64(1), (n..n + m).collect(), 0);
    }
    let mut t: Vec<Vec<T>> = Vec::with_capacity(m + 1);
    for (i, row) in rows.iter().enumerate() {
        let mut r = vec![T::zero(); width];
        for (j, &a) in row.iter().enumerate() {
            if a != 0 {
                r[j] = T::from_i64(a);
            }
        }
        r[n + i] = T::from_i64(1);
        r[rc] = T::from_i64(rhs[i]);
        t.push(r);
    }
    let mut obj = vec![T::zero(); width];
    for (j, &c) in cost.iter().enumerate() {
        obj[j] = T::from_i64(c);
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut den = T::from_i64(1);
    let mut pivots = 0;

    loop {
        let Some(enter) = (0..n + m).find(|&j| t[m][j].is_neg()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_pos() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    // compare t[i][rc]/t[i][enter] with t[l][rc]/t[l][enter]
                    let (Some(lhs), Some(rhs)) = (t[i][rc].mul(&t[l][enter]), t[l][rc].mul(&t[i][enter])) else {
                        return Outcome::Overflow;
                    };
                    if lhs < rhs || (lhs == rhs && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(r) = leave else {
            return Outcome::Unbounded;
        };
        let p = t[r][enter].clone();
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[enter].clone();
            for j in 0..width {
                if j == enter {
                    continue;
                }
                let Some(v) = T::cross_div(&row[j], &p, &f, &pivot_row[j], &den) else {
                    return Outcome::Overflow;
                };
                row[j] = v;
            }
            row[enter] = T::zero();
        }
        den = p;
        basis[r] = enter;
        pivots += 1;
    }
    let rhs_col = t[..m].iter().map(|row| row[rc].clone()).collect();
    Outcome::Done(rhs_col, den, basis, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_lp() {
        // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
        let rows = vec![vec![1, 2], vec![3, 1]];
        let s = solve(&rows, &[4, 6], &[-1, -1]).unwrap();
        assert_eq!(s.x, vec![q(8, 5), q(6, 5)]);
        assert_eq!(s.objective, q(-14, 5));
    }

    #[test]
    fn nonnegative_costs_stay_at_origin() {
        let rows = vec![vec![1, 1]];
        let s = solve(&rows, &[1], &[2, 0]).unwrap();
        assert_eq!(s.x, vec![q(0, 1), q(0, 1)]);
        assert_eq!(s.pivots, 0);
    }

    #[test]
    fn unbounded_is_reported() {
        let rows = vec![vec![1, -1]];
        assert_eq!(solve(&rows, &[1], &[0, -1]), Err(SimplexFailure::Unbounded));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example with rows scaled to integers; optimum -5/4 before scaling the cost by 4
        let rows = vec![vec![1, -32, -4, 36], vec![1, -24, -1, 6], vec![0, 0, 1, 0]];
        let s = solve(&rows, &[0, 0, 1], &[-3, 80, -2, 24]).unwrap();
        assert_eq!(s.objective, q(-5, 1));
        assert_eq!(s.x, vec![q(1, 1), q(0, 1), q(1, 1), q(0, 1)]);
    }

    /// Best vertex of a 2-variable LP by intersecting every pair of boundary lines.
    fn brute_force_2d(rows: &[Vec<i64>], rhs: &[i64], cost: &[i64]) -> BigRational {
        let r = |v: i64| BigRational::from_integer(v.into());
        let mut lines: Vec<(BigRational, BigRational, BigRational)> =
            rows.iter().zip(rhs).map(|(a, &b)| (r(a[0]), r(a[1]), r(b))).collect();
        lines.push((r(1), r(0), r(0)));
        lines.push((r(0), r(1), r(0)));
        let mut best: Option<BigRational> = None;
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a1, b1, c1) = &lines[i];
                let (a2, b2, c2) = &lines[j];
                let det = a1 * b2 - a2 * b1;
                if det.is_zero() {
                    continue;
                }
                let x = (c1 * b2 - c2 * b1) / &det;
                let y = (a1 * c2 - a2 * c1) / &det;
                let feasible = !x.is_negative()
                    && !y.is_negative()
                    && rows.iter().zip(rhs).all(|(a, &b)| &x * r(a[0]) + &y * r(a[1]) <= r(b));
                if feasible {
                    let v = &x * r(cost[0]) + &y * r(cost[1]);
                    if best.as_ref().map_or(true, |b| &v < b) {
                        best = Some(v);
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn big_coefficients_fall_back_to_bigint() {
        let big = 1i64 << 62;
        let rows = vec![vec![big / 3, big / 5], vec![big / 7, big / 3]];
        let rhs = [big / 2, big / 2];
        let cost = [-big / 3, -big / 4];
        let s = solve(&rows, &rhs, &cost).unwrap();
        assert_eq!(s.objective, brute_force_2d(&rows, &rhs, &cost));
        assert!(matches!(run::<i128>(&rows, &rhs, &cost), Outcome::Overflow));
    }
}
