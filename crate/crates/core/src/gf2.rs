//! Dense bit-packed GF(2) matrices and code-level parameters.
//!
//! A [`BinaryMatrix`] holds a parity-check (or generator) matrix row-major with
//! one `u64` word per 64 columns. Rows may be linearly dependent. The code it
//! defines is the null space of the matrix; [`Codewords`] walks that space in
//! Gray-code order so that each step costs a single row XOR.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Default cap on the code dimension for exhaustive codeword enumeration.
pub const DEFAULT_CODEWORD_K_CAP: usize = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("row {row} has length {got}, expected {expected}")]
    RaggedRows { row: usize, got: usize, expected: usize },
    #[error("entry at ({row}, {col}) is {value}, expected 0 or 1")]
    NotABit { row: usize, col: usize, value: u8 },
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("code dimension k={k} exceeds enumeration cap {cap}")]
    DimensionTooLarge { k: usize, cap: usize },
}

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A binary vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }

    pub fn xor_assign(&mut self, other: &BinaryVector) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Parity of the inner product over GF(2).
    pub fn dot(&self, other: &BinaryVector) -> bool {
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector(")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, ")")
    }
}

/// Dense GF(2) matrix, row-major and bit-packed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, Gf2Error> {
        if rows == 0 || cols == 0 {
            return Err(Gf2Error::EmptyMatrix { rows, cols });
        }
        let stride = words_for(cols);
        Ok(Self {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        })
    }

    pub fn identity(n: usize) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols)?;
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Gf2Error::RaggedRows {
                    row: r,
                    got: row.len(),
                    expected: cols,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(r, c, true),
                    value => return Err(Gf2Error::NotABit { row: r, col: c, value }),
                }
            }
        }
        Ok(m)
    }

    pub fn from_binary_rows(cols: usize, rows: &[BinaryVector]) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows.len(), cols)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Gf2Error::RaggedRows {
                    row: r,
                    got: row.len(),
                    expected: cols,
                });
            }
            m.row_words_mut(r).copy_from_slice(row.words());
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.bits[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.bits[r * self.stride + c / 64];
        let mask = 1u64 << (c % 64);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.stride..(r + 1) * self.stride]
    }

    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.bits[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BinaryVector {
        BinaryVector::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn column(&self, c: usize) -> BinaryVector {
        let mut v = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    /// Column indices of the ones in row `r`.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.get(r, c)).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows).expect("non-empty");
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) as u8).collect())
            .collect()
    }

    /// `H · vᵀ` over GF(2).
    pub fn syndrome(&self, v: &BinaryVector) -> Result<BinaryVector, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                got: v.len(),
                expected: self.cols,
            });
        }
        let mut s = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            let parity: u32 = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if parity % 2 == 1 {
                s.set(r, true);
            }
        }
        Ok(s)
    }

    /// Reduced row echelon form; returns the reduced matrix rows (non-zero only)
    /// and the pivot column of each.
    fn rref(&self) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut rows: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row_words(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, mask) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[w] & mask != 0 {
                    for (a, b) in row.iter_mut().zip(&pivot) {
                        *a ^= *b;
                    }
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        (rows, pivots)
    }

    /// A basis of the null space `{c : H cᵀ = 0}`.
    pub fn null_space_basis(&self) -> Vec<BinaryVector> {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BinaryVector::zeros(self.cols);
            v.set(free, true);
            let (w, mask) = (free / 64, 1u64 << (free % 64));
            for (row, &p) in rows.iter().zip(&pivots) {
                if row[w] & mask != 0 {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c) as u8)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// GF(2) row rank.
pub fn rank(h: &BinaryMatrix) -> usize {
    h.rref().1.len()
}

/// Code dimension `k = n - rank(H)`.
pub fn dimension(h: &BinaryMatrix) -> usize {
    h.cols() - rank(h)
}

pub fn is_codeword(h: &BinaryMatrix, c: &BinaryVector) -> Result<bool, Gf2Error> {
    Ok(h.syndrome(c)?.is_zero())
}

/// Gray-code walk over the null space of a parity-check matrix.
///
/// Yields all `2^k` codewords exactly once, starting with the zero word.
pub struct Codewords {
    basis: Vec<BinaryVector>,
    current: BinaryVector,
    index: u64,
    total: u64,
}

impl Codewords {
    fn new(basis: Vec<BinaryVector>, n: usize) -> Self {
        let total = 1u64 << basis.len();
        Self {
            basis,
            current: BinaryVector::zeros(n),
            index: 0,
            total,
        }
    }

    fn advance(&mut self) -> Option<&BinaryVector> {
        if self.index >= self.total {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        self.index += 1;
        Some(&self.current)
    }

    /// Visits every codeword by reference, without allocating per item.
    pub fn for_each_ref(mut self, mut f: impl FnMut(&BinaryVector)) {
        while let Some(c) = self.advance() {
            f(c);
        }
    }
}

impl Iterator for Codewords {
    type Item = BinaryVector;

    fn next(&mut self) -> Option<BinaryVector> {
        self.advance().cloned()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_codewords(h: &BinaryMatrix, cap: usize) -> Result<Codewords, Gf2Error> {
    let basis = h.null_space_basis();
    if basis.len() > cap {
        return Err(Gf2Error::DimensionTooLarge { k: basis.len(), cap });
    }
    Ok(Codewords::new(basis, h.cols()))
}

/// How the minimum distance in a [`CodeParameters`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceSource {
    Exhaustive,
    BoundPlusWitness,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    /// `None` when unknown, or when the code is `{0}`.
    pub d: Option<usize>,
    /// Weight → number of codewords. Complete only when `d_source` is exhaustive.
    pub weight_distribution: BTreeMap<usize, u64>,
    pub d_source: DistanceSource,
}

impl CodeParameters {
    /// `A_d`, the number of minimum-weight codewords, when known.
    pub fn a_d(&self) -> Option<u64> {
        let d = self.d?;
        self.weight_distribution.get(&d).copied()
    }

    pub fn distribution_is_complete(&self) -> bool {
        self.d_source == DistanceSource::Exhaustive
    }
}

/// Exhaustive `[n, k, d]` and weight distribution.
pub fn code_parameters(h: &BinaryMatrix, cap: usize) -> Result<CodeParameters, Gf2Error> {
    let n = h.cols();
    let words = enumerate_codewords(h, cap)?;
    let k = words.basis.len();
    let mut counts = vec![0u64; n + 1];
    words.for_each_ref(|c| counts[c.weight()] += 1);
    let d = counts.iter().enumerate().skip(1).find(|(_, &a)| a > 0).map(|(w, _)| w);
    let weight_distribution = counts
        .into_iter()
        .enumerate()
        .filter(|(_, a)| *a > 0)
        .collect();
    Ok(CodeParameters {
        n,
        k,
        d,
        weight_distribution,
        d_source: DistanceSource::Exhaustive,
    })
}

/// Minimum Hamming weight over non-zero codewords; `None` for the zero code.
pub fn min_distance(h: &BinaryMatrix, cap: usize) -> Result<Option<usize>, Gf2Error> {
    Ok(code_parameters(h, cap)?.d)
}

/// Certifies `d = lower_bound` from a codeword whose weight meets a proven
/// lower bound. Returns `None` if the witness is not a codeword or is heavier
/// than the bound.
pub fn distance_from_witness(
    h: &BinaryMatrix,
    lower_bound: usize,
    witness: &BinaryVector,
) -> Result<Option<CodeParameters>, Gf2Error> {
    if !is_codeword(h, witness)? || witness.is_zero() || witness.weight() != lower_bound {
        return Ok(None);
    }
    Ok(Some(CodeParameters {
        n: h.cols(),
        k: dimension(h),
        d: Some(lower_bound),
        weight_distribution: BTreeMap::new(),
        d_source: DistanceSource::BoundPlusWitness,
    }))
}
