//! The fundamental cone `K(H)` and its pseudo-codewords.
//!
//! `K(H)` is cut out by `x_i >= 0` and, for every check `j` and every
//! `i ∈ supp(h_j)`, by `Σ_{l ∈ supp(h_j) \ {i}} x_l >= x_i`. Its extreme rays
//! (edges) are the minimal pseudo-codewords; [`enumerate_rays`] lists them
//! exactly with the double description method.

mod dd;
pub mod linalg;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::gf2::{is_codeword, BinaryMatrix, BinaryVector};

pub use dd::{double_description, enumerate_rays};

/// Largest `n` accepted by [`enumerate_rays`] unless overridden.
pub const DEFAULT_RAY_N_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("vector length {got} does not match code length {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("pseudo-weight of the zero vector is undefined")]
    ZeroVector,
    #[error("coordinate {index} is negative")]
    NegativeCoordinate { index: usize },
    #[error("n={n} exceeds ray-enumeration cap {cap}")]
    DimensionTooLarge { n: usize, cap: usize },
    #[error("cone is not pointed")]
    DegenerateConeNotPointed,
    #[error("integer overflow during exact ray arithmetic")]
    Overflow,
}

/// A homogeneous inequality `coeffs · x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
}

impl Inequality {
    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        self.coeffs
            .iter()
            .zip(x)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, v)| v * BigRational::from_integer(c.into()))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

/// Nonnegativity rows first, then one row per (check, position in check),
/// row-major. The count is always `n + Σ_j ρ_j`.
pub fn cone_inequalities(h: &BinaryMatrix) -> Vec<Inequality> {
    let n = h.cols();
    let mut out = Vec::with_capacity(n + (0..h.rows()).map(|j| h.row_weight(j)).sum::<usize>());
    for i in 0..n {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        out.push(Inequality { coeffs });
    }
    for j in 0..h.rows() {
        let support = h.row_support(j);
        for &i in &support {
            let mut coeffs = vec![0; n];
            for &l in &support {
                coeffs[l] = if l == i { -1 } else { 1 };
            }
            out.push(Inequality { coeffs });
        }
    }
    out
}

/// Drops repeated rows, keeping the first occurrence and the original order.
pub fn dedup_inequalities(rows: Vec<Inequality>) -> Vec<Inequality> {
    let mut seen = std::collections::HashSet::new();
    rows.into_iter().filter(|r| seen.insert(r.coeffs.clone())).collect()
}

pub fn is_pseudo_codeword(h: &BinaryMatrix, x: &[BigRational]) -> Result<bool, ConeError> {
    if x.len() != h.cols() {
        return Err(ConeError::LengthMismatch {
            got: x.len(),
            expected: h.cols(),
        });
    }
    Ok(cone_inequalities(h).iter().all(|ineq| !ineq.eval(x).is_negative()))
}

/// `‖x‖₁² / ‖x‖₂²`, exactly.
pub fn pseudo_weight(x: &[BigRational]) -> Result<BigRational, ConeError> {
    let l1: BigRational = x.iter().map(|v| v.abs()).sum();
    let l2: BigRational = x.iter().map(|v| v * v).sum();
    if l2.is_zero() {
        return Err(ConeError::ZeroVector);
    }
    Ok(&l1 * &l1 / l2)
}

pub fn pseudo_weight_int(x: &[BigInt]) -> Result<BigRational, ConeError> {
    let l1: BigInt = x.iter().map(|v| v.abs()).sum();
    let l2: BigInt = x.iter().map(|v| v * v).sum();
    if l2.is_zero() {
        return Err(ConeError::ZeroVector);
    }
    Ok(BigRational::new(&l1 * &l1, l2))
}

/// Primitive integer representative of `[x] = {αx : α > 0}`.
pub fn canonicalize(x: &[BigRational]) -> Result<Vec<BigInt>, ConeError> {
    if let Some(index) = x.iter().position(|v| v.is_negative()) {
        return Err(ConeError::NegativeCoordinate { index });
    }
    if x.iter().all(Zero::is_zero) {
        return Err(ConeError::ZeroVector);
    }
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = x.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    Ok(primitive(scaled))
}

pub(crate) fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RayClass {
    /// A positive real multiple of a codeword.
    CodewordMultiple,
    NonCodeword,
}

/// An edge of `K(H)`, stored by its primitive integer representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    pub representative: Vec<BigInt>,
    pub pseudo_weight: BigRational,
    pub support: Vec<usize>,
    pub classification: RayClass,
}

impl Ray {
    pub fn new(h: &BinaryMatrix, representative: Vec<BigInt>) -> Result<Self, ConeError> {
        let pseudo_weight = pseudo_weight_int(&representative)?;
        let support: Vec<usize> = representative
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect();
        let first = &representative[support[0]];
        let flat = support.iter().all(|&i| &representative[i] == first);
        let indicator = BinaryVector::from_support(representative.len(), &support);
        let in_code = is_codeword(h, &indicator).map_err(|_| ConeError::LengthMismatch {
            got: representative.len(),
            expected: h.cols(),
        })?;
        let classification = if flat && in_code {
            RayClass::CodewordMultiple
        } else {
            RayClass::NonCodeword
        };
        Ok(Self {
            representative,
            pseudo_weight,
            support,
            classification,
        })
    }

    pub fn as_rational(&self) -> Vec<BigRational> {
        self.representative
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect()
    }

    pub fn coordinate_sum(&self) -> BigInt {
        self.representative.iter().sum()
    }
}

/// The complete set `M(H)` of edges of `K(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayCatalog {
    /// Sorted by pseudo-weight, then representative.
    pub rays: Vec<Ray>,
}

impl RayCatalog {
    pub fn new(mut rays: Vec<Ray>) -> Self {
        rays.sort_by(|a, b| match a.pseudo_weight.cmp(&b.pseudo_weight) {
            Ordering::Equal => a.representative.cmp(&b.representative),
            o => o,
        });
        rays.dedup_by(|a, b| a.representative == b.representative);
        Self { rays }
    }

    /// `|M(H)|`.
    pub fn edge_count(&self) -> usize {
        self.rays.len()
    }

    /// `d_P(H)`, the minimum pseudo-weight. `None` when `K(H) = {0}`.
    pub fn min_pseudo_weight(&self) -> Option<&BigRational> {
        self.rays.first().map(|r| &r.pseudo_weight)
    }

    /// `B_P(H)`, the number of minimum edges.
    pub fn minimum_edge_count(&self) -> usize {
        match self.min_pseudo_weight() {
            Some(d) => self.rays.iter().take_while(|r| &r.pseudo_weight == d).count(),
            None => 0,
        }
    }

    pub fn minimum_rays(&self) -> impl Iterator<Item = &Ray> {
        let d = self.min_pseudo_weight().cloned();
        self.rays.iter().take_while(move |r| Some(&r.pseudo_weight) == d.as_ref())
    }

    pub fn contains(&self, representative: &[BigInt]) -> bool {
        self.rays.iter().any(|r| r.representative == representative)
    }
}
