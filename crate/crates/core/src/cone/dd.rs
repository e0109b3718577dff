//! Double description method for cones inside the nonnegative orthant.

use num_bigint::BigInt;
use num_integer::Integer;

use super::linalg::integer_rank;
use super::{cone_inequalities, dedup_inequalities, ConeError, Inequality, Ray, RayCatalog};
use crate::gf2::BinaryMatrix;

struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct DdRay {
    v: Vec<i128>,
    /// Constraints tight at this ray: bits `0..n` are the orthant facets,
    /// bit `n + k` is row `k`.
    zero: Bits,
}

fn dot(a: &[i64], v: &[i128]) -> Result<i128, ConeError> {
    a.iter().zip(v).try_fold(0i128, |acc, (&c, &x)| {
        if c == 0 || x == 0 {
            return Ok(acc);
        }
        (c as i128)
            .checked_mul(x)
            .and_then(|t| acc.checked_add(t))
            .ok_or(ConeError::Overflow)
    })
}

fn make_primitive(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Two rays are adjacent iff the constraints tight at both have rank `n - 2`.
fn adjacent(common: &Bits, rows: &[Inequality], processed: usize, n: usize) -> Result<bool, ConeError> {
    if common.count() + 2 < n {
        return Ok(false);
    }
    // orthant facets fix coordinates to zero; eliminate those columns directly
    let free: Vec<usize> = (0..n).filter(|&i| !common.get(i)).collect();
    let fixed = n - free.len();
    let reduced: Vec<Vec<i64>> = (0..processed)
        .filter(|&k| common.get(n + k))
        .map(|k| free.iter().map(|&i| rows[k].coeffs[i]).collect())
        .collect();
    let refs: Vec<&[i64]> = reduced.iter().map(Vec::as_slice).collect();
    Ok(fixed + integer_rank(&refs, free.len())? == n - 2)
}

/// Extreme rays of `{x ∈ R^n : x >= 0, a_k · x >= 0 for every row}`.
///
/// Rows are inserted in the given order, starting from the unit vectors of
/// the orthant. Each returned ray is a primitive nonnegative integer vector.
pub fn double_description(n: usize, rows: &[Inequality]) -> Result<Vec<Vec<i128>>, ConeError> {
    let total = n + rows.len();
    let mut rays: Vec<DdRay> = (0..n)
        .map(|i| {
            let mut v = vec![0i128; n];
            v[i] = 1;
            let mut zero = Bits::new(total);
            (0..n).filter(|&j| j != i).for_each(|j| zero.set(j));
            DdRay { v, zero }
        })
        .collect();

    for (k, row) in rows.iter().enumerate() {
        let mut values = Vec::with_capacity(rays.len());
        for r in &rays {
            values.push(dot(&row.coeffs, &r.v)?);
        }
        if values.iter().all(|&s| s >= 0) {
            for (r, &s) in rays.iter_mut().zip(&values) {
                if s == 0 {
                    r.zero.set(n + k);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.and(&rays[q].zero);
                if !adjacent(&common, rows, k, n)? {
                    continue;
                }
                let (sp, sq) = (values[p], -values[q]);
                let mut v = Vec::with_capacity(n);
                for (&a, &b) in rays[p].v.iter().zip(&rays[q].v) {
                    let t = sp
                        .checked_mul(b)
                        .and_then(|x| sq.checked_mul(a).and_then(|y| x.checked_add(y)))
                        .ok_or(ConeError::Overflow)?;
                    v.push(t);
                }
                make_primitive(&mut v);
                let mut zero = common;
                zero.set(n + k);
                created.push(DdRay { v, zero });
            }
        }

        let mut next: Vec<DdRay> = Vec::with_capacity(pos.len() + created.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            match values[i].signum() {
                1 => next.push(r),
                0 => {
                    r.zero.set(n + k);
                    next.push(r);
                }
                _ => {}
            }
        }
        next.extend(created);
        rays = next;
    }

    if rays.iter().any(|r| r.v.iter().all(|&x| x == 0)) {
        return Err(ConeError::DegenerateConeNotPointed);
    }
    let mut out: Vec<Vec<i128>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Complete catalog of minimal pseudo-codewords of `H`.
pub fn enumerate_rays(h: &BinaryMatrix, cap: usize) -> Result<RayCatalog, ConeError> {
    let n = h.cols();
    if n > cap {
        return Err(ConeError::DimensionTooLarge { n, cap });
    }
    let rows: Vec<Inequality> = dedup_inequalities(cone_inequalities(h))
        .into_iter()
        .skip(n)
        .collect();
    let raw = double_description(n, &rows)?;
    let rays = raw
        .into_iter()
        .map(|v| Ray::new(h, v.into_iter().map(BigInt::from).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RayCatalog::new(rays))
}
