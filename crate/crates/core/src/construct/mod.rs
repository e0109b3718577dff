//! Parity-check matrix constructions for the codes used throughout the crate.

pub mod field;
pub mod geometry;

use thiserror::Error;

use crate::gf2::{BinaryMatrix, BinaryVector, Gf2Error};

pub use geometry::{eg_point_hyperplane_h, GeometrySpec, PointOrder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("first row of a circulant must be non-zero")]
    ZeroRow,
    #[error("hamming parameter r={r} must be in 2..=12")]
    InvalidR { r: usize },
    #[error("GF(2^{s}) is not supported")]
    UnsupportedField { s: u32 },
    #[error("EG(m={m}, q=2^{s}) needs m >= 2 and s >= 1")]
    InvalidGeometry { m: usize, s: u32 },
    #[error("EG(m={m}, q=2^{s}) has more than 2^16 points")]
    DimensionTooLarge { m: usize, s: u32 },
    #[error("g(x) does not divide x^{n} - 1")]
    NotADivisor { n: usize },
    #[error("exponent {exponent} out of range for length {n}")]
    ExponentOutOfRange { exponent: usize, n: usize },
    #[error(transparent)]
    Matrix(#[from] Gf2Error),
}

/// `n × n` matrix whose row `s` is `first_row` cyclically shifted right by `s`.
pub fn circulant(first_row: &[u8]) -> Result<BinaryMatrix, ConstructError> {
    if first_row.iter().all(|&b| b == 0) {
        return Err(ConstructError::ZeroRow);
    }
    let n = first_row.len();
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|s| (0..n).map(|c| first_row[(c + n - s) % n]).collect())
        .collect();
    Ok(BinaryMatrix::from_rows(&rows)?)
}

/// Parity-check matrix of the `[2^r - 1, 2^r - 1 - r, 3]` Hamming code whose
/// rows are all the non-zero codewords of the `[2^r - 1, r]` simplex code.
pub fn hamming_simplex_h(r: usize) -> Result<BinaryMatrix, ConstructError> {
    if !(2..=12).contains(&r) {
        return Err(ConstructError::InvalidR { r });
    }
    let n = (1usize << r) - 1;
    let rows: Vec<Vec<u8>> = (1..=n)
        .map(|a| (1..=n).map(|c| ((a & c).count_ones() % 2) as u8).collect())
        .collect();
    Ok(BinaryMatrix::from_rows(&rows)?)
}

/// Binary polynomial stored as a coefficient list, index = exponent.
fn poly_from_exponents(exponents: &[usize], n: usize) -> Result<Vec<bool>, ConstructError> {
    let deg = exponents.iter().copied().max().unwrap_or(0);
    if deg >= n {
        return Err(ConstructError::ExponentOutOfRange { exponent: deg, n });
    }
    let mut p = vec![false; deg + 1];
    for &e in exponents {
        p[e] ^= true;
    }
    Ok(trim(p))
}

fn trim(mut p: Vec<bool>) -> Vec<bool> {
    while p.len() > 1 && !*p.last().unwrap() {
        p.pop();
    }
    p
}

/// Quotient and remainder of binary polynomial division.
fn divmod(num: &[bool], den: &[bool]) -> (Vec<bool>, Vec<bool>) {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if num.len() <= dd {
        return (vec![false], trim(rem));
    }
    let mut quot = vec![false; num.len() - dd];
    for i in (dd..num.len()).rev() {
        if rem[i] {
            quot[i - dd] = true;
            for (j, &b) in den.iter().enumerate() {
                rem[i - dd + j] ^= b;
            }
        }
    }
    rem.truncate(dd.max(1));
    (trim(quot), trim(rem))
}

fn x_n_minus_1(n: usize) -> Vec<bool> {
    let mut p = vec![false; n + 1];
    p[0] = true;
    p[n] = true;
    p
}

fn generator_polynomial(n: usize, g_exponents: &[usize]) -> Result<Vec<bool>, ConstructError> {
    let g = poly_from_exponents(g_exponents, n)?;
    if g.iter().all(|&b| !b) {
        return Err(ConstructError::NotADivisor { n });
    }
    let (_, rem) = divmod(&x_n_minus_1(n), &g);
    if rem.iter().any(|&b| b) {
        return Err(ConstructError::NotADivisor { n });
    }
    Ok(g)
}

fn shifts_matrix(n: usize, base: &[bool], count: usize) -> Result<BinaryMatrix, ConstructError> {
    let rows: Vec<Vec<u8>> = (0..count)
        .map(|s| {
            let mut row = vec![0u8; n];
            for (i, &b) in base.iter().enumerate() {
                if b {
                    row[(i + s) % n] = 1;
                }
            }
            row
        })
        .collect();
    Ok(BinaryMatrix::from_rows(&rows)?)
}

/// `k × n` generator matrix of the cyclic code generated by
/// `g(x) = Σ x^e`, rows `x^i g(x)` for `i < k = n - deg g`.
pub fn cyclic_code_from_generator(n: usize, g_exponents: &[usize]) -> Result<BinaryMatrix, ConstructError> {
    let g = generator_polynomial(n, g_exponents)?;
    let k = n - (g.len() - 1);
    if k == 0 {
        // g(x) = x^n - 1 is not representable below degree n
        return Err(ConstructError::NotADivisor { n });
    }
    shifts_matrix(n, &g, k)
}

/// `(n - k) × n` parity-check matrix of the same cyclic code, built from the
/// reciprocal of `h(x) = (x^n - 1) / g(x)`.
pub fn cyclic_parity_check(n: usize, g_exponents: &[usize]) -> Result<BinaryMatrix, ConstructError> {
    let g = generator_polynomial(n, g_exponents)?;
    let (h, _) = divmod(&x_n_minus_1(n), &g);
    let r = g.len() - 1;
    if r == 0 {
        return Err(ConstructError::NotADivisor { n });
    }
    let reciprocal: Vec<bool> = h.iter().rev().copied().collect();
    shifts_matrix(n, &reciprocal, r)
}

/// True iff `g(x)` divides `c(x)`, i.e. `c` lies in the cyclic code.
pub fn is_cyclic_codeword(n: usize, g_exponents: &[usize], c: &BinaryVector) -> Result<bool, ConstructError> {
    let g = generator_polynomial(n, g_exponents)?;
    let bits: Vec<bool> = (0..c.len()).map(|i| c.get(i)).collect();
    let (_, rem) = divmod(&trim(bits), &g);
    Ok(rem.iter().all(|&b| !b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{code_parameters, dimension, is_codeword, rank};
    use crate::tanner::TannerGraph;

    pub(crate) const EG_3_4_GENERATOR: [usize; 7] = [0, 2, 4, 11, 13, 14, 15];
    pub(crate) const EG_3_4_WITNESS: [usize; 5] = [0, 23, 33, 36, 37];

    #[test]
    fn circulant_example1() {
        let h = circulant(&[1, 1, 0, 1, 0, 0, 0]).unwrap();
        assert_eq!(h.row(0).to_bits(), vec![1, 1, 0, 1, 0, 0, 0]);
        assert_eq!(h.row(1).to_bits(), vec![0, 1, 1, 0, 1, 0, 0]);
        assert!((0..7).all(|r| h.row_weight(r) == 3));
        assert_eq!(circulant(&[1]).unwrap(), BinaryMatrix::identity(1).unwrap());
        assert_eq!(circulant(&[0, 0]), Err(ConstructError::ZeroRow));
    }

    #[test]
    fn hamming_simplex_parameters() {
        let h = hamming_simplex_h(3).unwrap();
        let t = TannerGraph::build(&h).unwrap();
        assert_eq!((t.min_col_weight(), t.max_pair_intersection()), (4, 2));
        assert!((0..7).all(|r| h.row_weight(r) == 4));
        assert_eq!(rank(&h), 3);
        let h2 = hamming_simplex_h(2).unwrap();
        assert_eq!(h2.rows(), 3);
        let p = code_parameters(&h2, 28).unwrap();
        assert_eq!((p.k, p.d), (1, Some(3)));
        for r in 2..=6 {
            let h = hamming_simplex_h(r).unwrap();
            assert_eq!(dimension(&h), (1 << r) - 1 - r);
        }
        assert_eq!(hamming_simplex_h(1), Err(ConstructError::InvalidR { r: 1 }));
    }

    #[test]
    fn cyclic_generators() {
        let g = cyclic_code_from_generator(7, &[0, 1, 3]).unwrap();
        assert_eq!((g.rows(), g.cols()), (4, 7));
        let h = cyclic_parity_check(7, &[0, 1, 3]).unwrap();
        let p = code_parameters(&h, 28).unwrap();
        assert_eq!((p.n, p.k, p.d), (7, 4, Some(3)));
        for r in 0..4 {
            assert!(is_codeword(&h, &g.row(r)).unwrap());
        }
        let id = cyclic_code_from_generator(5, &[0]).unwrap();
        assert_eq!(id, BinaryMatrix::identity(5).unwrap());
        assert_eq!(
            cyclic_code_from_generator(7, &[0, 2]),
            Err(ConstructError::NotADivisor { n: 7 })
        );
    }

    #[test]
    fn eg_generator_polynomial_and_witness() {
        let g = cyclic_code_from_generator(63, &EG_3_4_GENERATOR).unwrap();
        assert_eq!(g.rows(), 48);
        let w = BinaryVector::from_support(63, &EG_3_4_WITNESS);
        assert!(is_cyclic_codeword(63, &EG_3_4_GENERATOR, &w).unwrap());
        let h = cyclic_parity_check(63, &EG_3_4_GENERATOR).unwrap();
        assert!(is_codeword(&h, &w).unwrap());
        assert_eq!(dimension(&h), 48);
    }

    #[test]
    fn eg_incidence_rows_are_dual_to_the_cyclic_code() {
        let h = eg_point_hyperplane_h(3, 2).unwrap();
        let g = cyclic_code_from_generator(63, &EG_3_4_GENERATOR).unwrap();
        for r in 0..h.rows() {
            for k in 0..g.rows() {
                assert!(!h.row(r).dot(&g.row(k)), "hyperplane {r} vs generator row {k}");
            }
        }
        let w = BinaryVector::from_support(63, &EG_3_4_WITNESS);
        assert!(is_codeword(&h, &w).unwrap());
    }
}
