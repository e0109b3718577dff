//! LP decoding over the fundamental polytope and exhaustive ML decoding.
//!
//! Both decoders minimize `Σ λ_i x_i` for an LLR vector `λ`. Real LLRs are
//! first rationalized to integers (`round(λ · 2^24)`), so the LP optimum, the
//! ML optimum and their objectives are exact and directly comparable.

mod simplex;
pub mod sim;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::gf2::{enumerate_codewords, BinaryMatrix, BinaryVector, Gf2Error};

pub use sim::{simulate, to_csv, SimConfig, SnrPoint, TrialPolicy};

/// Largest check degree for which the full polytope is generated.
pub const MAX_LP_ROW_WEIGHT: usize = 12;
/// LLRs are multiplied by `2^LLR_SCALE_BITS` before rounding.
pub const LLR_SCALE_BITS: u32 = 24;
/// LLR magnitudes are clipped here before rationalization.
pub const LLR_CLIP: f64 = 1e6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecodeError {
    #[error("noise standard deviation must be positive and finite, got {0}")]
    NonPositiveSigma(f64),
    #[error("LLR at position {index} is NaN")]
    NotANumber { index: usize },
    #[error("LLR vector has length {got}, code length is {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("check {row} has weight {weight}, the LP decoder supports at most {cap}")]
    RowWeightTooLarge { row: usize, weight: usize, cap: usize },
    #[error("LP reported unbounded over a bounded polytope")]
    Unbounded,
    #[error(transparent)]
    Code(#[from] Gf2Error),
}

/// Log-likelihood ratios, one per code bit; positive favours bit 0.
#[derive(Debug, Clone, PartialEq)]
pub struct LlrVector {
    values: Vec<f64>,
}

impl LlrVector {
    /// Clips infinities and large magnitudes to `±LLR_CLIP`.
    pub fn new(values: Vec<f64>) -> Result<Self, DecodeError> {
        if let Some(index) = values.iter().position(|v| v.is_nan()) {
            return Err(DecodeError::NotANumber { index });
        }
        Ok(Self {
            values: values.into_iter().map(|v| v.clamp(-LLR_CLIP, LLR_CLIP)).collect(),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Integer costs `round(λ_i · 2^24)` fed to both decoders.
    pub fn rationalized(&self) -> Vec<i64> {
        let scale = (1u64 << LLR_SCALE_BITS) as f64;
        self.values.iter().map(|v| (v * scale).round() as i64).collect()
    }
}

/// LLRs of BPSK (`0 → +1`, `1 → −1`) over AWGN: `λ_i = 2 y_i / σ²`.
pub fn llr_awgn(received: &[f64], sigma: f64) -> Result<LlrVector, DecodeError> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(DecodeError::NonPositiveSigma(sigma));
    }
    let s2 = sigma * sigma;
    LlrVector::new(received.iter().map(|y| 2.0 * y / s2).collect())
}

/// Noise standard deviation for `E_b/N_0` in dB at code rate `k/n`.
pub fn sigma_for_snr(snr_db: f64, rate: f64) -> f64 {
    (1.0 / (2.0 * rate * 10f64.powf(snr_db / 10.0))).sqrt()
}

/// The fundamental polytope as explicit inequalities `A x <= b`:
/// box rows `x_i <= 1`, then for each check `j` and each odd `V ⊆ supp(h_j)`
/// the row `Σ_V x_i − Σ_{supp∖V} x_i <= |V| − 1`.
#[derive(Debug, Clone)]
pub struct PolytopeLp {
    n: usize,
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
    per_check: Vec<usize>,
}

impl PolytopeLp {
    pub fn new(h: &BinaryMatrix) -> Result<Self, DecodeError> {
        let n = h.cols();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            let mut row = vec![0; n];
            row[i] = 1;
            rows.push(row);
            rhs.push(1);
        }
        let mut per_check = Vec::with_capacity(h.rows());
        for j in 0..h.rows() {
            let support = h.row_support(j);
            let w = support.len();
            if w > MAX_LP_ROW_WEIGHT {
                return Err(DecodeError::RowWeightTooLarge {
                    row: j,
                    weight: w,
                    cap: MAX_LP_ROW_WEIGHT,
                });
            }
            let before = rows.len();
            for mask in 0u32..(1 << w) {
                let size = mask.count_ones() as i64;
                if size % 2 == 0 {
                    continue;
                }
                let mut row = vec![0; n];
                for (b, &i) in support.iter().enumerate() {
                    row[i] = if mask >> b & 1 == 1 { 1 } else { -1 };
                }
                rows.push(row);
                rhs.push(size - 1);
            }
            per_check.push(rows.len() - before);
        }
        Ok(Self { n, rows, rhs, per_check })
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn constraint_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of parity inequalities generated for each check.
    pub fn constraints_per_check(&self) -> &[usize] {
        &self.per_check
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.rows.iter().map(Vec::as_slice).zip(self.rhs.iter().copied())
    }

    /// Exact membership test for a rational point.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        x.len() == self.n
            && x.iter().all(|v| !v.is_negative())
            && self.rows().all(|(row, b)| {
                let lhs: BigRational = row
                    .iter()
                    .zip(x)
                    .filter(|(&a, _)| a != 0)
                    .map(|(&a, v)| v * BigRational::from_integer(a.into()))
                    .sum();
                lhs <= BigRational::from_integer(b.into())
            })
    }
}

/// Result of LP decoding. Objectives are in LLR units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpOutcome {
    pub optimum: Vec<BigRational>,
    pub integral: bool,
    pub objective: BigRational,
    pub pivots: usize,
}

impl LpOutcome {
    /// The optimum as a binary word, if it is a 0/1 vertex.
    pub fn as_word(&self) -> Option<BinaryVector> {
        self.integral.then(|| {
            let bits: Vec<u8> = self.optimum.iter().map(|v| u8::from(v.is_one())).collect();
            BinaryVector::from_bits(&bits)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.optimum.iter().all(Zero::is_zero)
    }
}

/// Result of ML decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlOutcome {
    pub codeword: BinaryVector,
    pub objective: BigRational,
}

/// Joint LP and ML outcome for one received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub lp_optimum: Vec<BigRational>,
    pub lp_integral: bool,
    pub lp_success: bool,
    pub ml_codeword: BinaryVector,
    pub ml_success: bool,
    pub objective_lp: BigRational,
    pub objective_ml: BigRational,
}

fn scaled(value: BigRational) -> BigRational {
    value / BigRational::from_integer(BigInt::one() << LLR_SCALE_BITS)
}

/// LP decoder with the polytope built once for repeated use.
#[derive(Debug, Clone)]
pub struct LpDecoder {
    polytope: PolytopeLp,
}

impl LpDecoder {
    pub fn new(h: &BinaryMatrix) -> Result<Self, DecodeError> {
        Ok(Self {
            polytope: PolytopeLp::new(h)?,
        })
    }

    pub fn polytope(&self) -> &PolytopeLp {
        &self.polytope
    }

    /// Minimizes `cost · x` over the polytope; the objective is reported in
    /// the units of `cost`.
    pub fn solve_integer(&self, cost: &[i64]) -> Result<LpOutcome, DecodeError> {
        let n = self.polytope.n;
        if cost.len() != n {
            return Err(DecodeError::LengthMismatch {
                got: cost.len(),
                expected: n,
            });
        }
        let sol = simplex::solve(&self.polytope.rows, &self.polytope.rhs, cost)
            .map_err(|_| DecodeError::Unbounded)?;
        let integral = sol.x.iter().all(|v| v.is_zero() || v.is_one());
        Ok(LpOutcome {
            optimum: sol.x,
            integral,
            objective: sol.objective,
            pivots: sol.pivots,
        })
    }

    pub fn decode(&self, llr: &LlrVector) -> Result<LpOutcome, DecodeError> {
        let mut out = self.solve_integer(&llr.rationalized())?;
        out.objective = scaled(out.objective);
        Ok(out)
    }
}

/// ML decoder holding every codeword, sorted so that the first minimum found
/// is the lexicographically smallest one (bit 0 compared first, `0 < 1`).
#[derive(Debug, Clone)]
pub struct MlDecoder {
    n: usize,
    codewords: Vec<BinaryVector>,
    supports: Vec<Vec<usize>>,
}

impl MlDecoder {
    pub fn new(h: &BinaryMatrix, cap: usize) -> Result<Self, DecodeError> {
        let mut codewords: Vec<BinaryVector> = enumerate_codewords(h, cap)?.collect();
        codewords.sort_by_cached_key(|c| c.to_bits());
        let supports = codewords.iter().map(|c| c.support()).collect();
        Ok(Self {
            n: h.cols(),
            codewords,
            supports,
        })
    }

    pub fn codewords(&self) -> &[BinaryVector] {
        &self.codewords
    }

    /// Index of the best codeword and its integer objective.
    fn best(&self, cost: &[i64]) -> (usize, i128) {
        let mut best = (0, i128::MAX);
        for (i, s) in self.supports.iter().enumerate() {
            let v: i128 = s.iter().map(|&j| cost[j] as i128).sum();
            if v < best.1 {
                best = (i, v);
            }
        }
        best
    }

    pub fn solve_integer(&self, cost: &[i64]) -> Result<(BinaryVector, i128), DecodeError> {
        if cost.len() != self.n {
            return Err(DecodeError::LengthMismatch {
                got: cost.len(),
                expected: self.n,
            });
        }
        let (i, v) = self.best(cost);
        Ok((self.codewords[i].clone(), v))
    }

    pub fn decode(&self, llr: &LlrVector) -> Result<MlOutcome, DecodeError> {
        let (codeword, v) = self.solve_integer(&llr.rationalized())?;
        Ok(MlOutcome {
            codeword,
            objective: scaled(BigRational::from_integer(v.into())),
        })
    }
}

pub fn lp_decode(h: &BinaryMatrix, llr: &LlrVector) -> Result<LpOutcome, DecodeError> {
    check_len(h, llr)?;
    LpDecoder::new(h)?.decode(llr)
}

pub fn ml_decode(h: &BinaryMatrix, llr: &LlrVector, cap: usize) -> Result<MlOutcome, DecodeError> {
    check_len(h, llr)?;
    MlDecoder::new(h, cap)?.decode(llr)
}

fn check_len(h: &BinaryMatrix, llr: &LlrVector) -> Result<(), DecodeError> {
    if llr.len() != h.cols() {
        return Err(DecodeError::LengthMismatch {
            got: llr.len(),
            expected: h.cols(),
        });
    }
    Ok(())
}

/// Runs both decoders and scores them against the transmitted codeword.
/// A fractional LP optimum always counts as a failure.
pub fn decode_both(
    lp: &LpDecoder,
    ml: &MlDecoder,
    llr: &LlrVector,
    transmitted: &BinaryVector,
) -> Result<DecodeOutcome, DecodeError> {
    let l = lp.decode(llr)?;
    let m = ml.decode(llr)?;
    let lp_success = l.as_word().is_some_and(|w| &w == transmitted);
    Ok(DecodeOutcome {
        lp_success,
        lp_optimum: l.optimum,
        lp_integral: l.integral,
        ml_success: &m.codeword == transmitted,
        ml_codeword: m.codeword,
        objective_lp: l.objective,
        objective_ml: m.objective,
    })
}
