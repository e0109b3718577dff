//! Girth/column-weight and column-overlap lower bounds on the pseudo-weight,
//! and the tightness certificate that ties codewords, stopping sets and the
//! edges of the fundamental cone together.
//!
//! Both bounds are tight exactly on real multiples of codewords: a non-zero
//! `x ∈ K(H)` has `w_P(x) = b` iff `b·x / Σx` is a codeword of weight `b`.
//! [`certify`] checks that statement on every enumerated edge and reports a
//! violation as a falsification instead of accepting it.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cone::{Ray, RayCatalog, RayClass};
use crate::gf2::{enumerate_codewords, CodeParameters};
use crate::stopping::StoppingReport;
use crate::tanner::TannerGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("girth {girth} is below 6; the girth bound does not apply")]
    GirthTooSmall { girth: usize },
    #[error("girth {girth} must be even")]
    OddGirth { girth: usize },
    #[error("column weight {gamma} must be at least 2")]
    InvalidGamma { gamma: u64 },
    #[error("bound value overflows u64")]
    Overflow,
    #[error("inputs disagree: {0}")]
    InconsistentInputs(String),
    #[error("falsification: {0}")]
    Falsification(Box<Falsification>),
}

/// A ray that contradicts a bound's inequality or its equality condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Falsification {
    pub bound: BoundKind,
    pub bound_value: u64,
    pub representative: Vec<BigInt>,
    pub pseudo_weight: BigRational,
    pub reason: String,
}

impl fmt::Display for Falsification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rep: Vec<String> = self.representative.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{:?} bound {} on ray ({}) with w_P = {}: {}",
            self.bound,
            self.bound_value,
            rep.join(","),
            self.pseudo_weight,
            self.reason
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// Girth and minimum column weight, girth >= 6.
    Girth,
    /// Minimum column weight over maximum column overlap, `γ/λ + 1`.
    ColumnOverlap,
}

fn check_girth(gamma: u64, girth: usize) -> Result<(), BoundError> {
    if gamma < 2 {
        return Err(BoundError::InvalidGamma { gamma });
    }
    if girth % 2 != 0 {
        return Err(BoundError::OddGirth { girth });
    }
    if girth < 6 {
        return Err(BoundError::GirthTooSmall { girth });
    }
    Ok(())
}

fn pow(base: u64, exp: usize) -> Result<u64, BoundError> {
    base.checked_pow(exp as u32).ok_or(BoundError::Overflow)
}

/// Tree-counting bound `d_L` as a sum over the levels of the local tree.
pub fn tanner_bound_dl(gamma: u64, girth: usize) -> Result<u64, BoundError> {
    check_girth(gamma, girth)?;
    let add = |a: u64, b: u64| a.checked_add(b).ok_or(BoundError::Overflow);
    let level = |i: usize| -> Result<u64, BoundError> {
        gamma.checked_mul(pow(gamma - 1, i)?).ok_or(BoundError::Overflow)
    };
    let mut d = 1 + gamma;
    if (girth / 2) % 2 == 1 {
        for i in 1..=(girth - 6) / 4 {
            d = add(d, level(i)?)?;
        }
    } else {
        for i in 1..=(girth - 8) / 4 {
            d = add(d, level(i)?)?;
        }
        d = add(d, pow(gamma - 1, (girth - 4) / 4)?)?;
    }
    Ok(d)
}

/// `(β^k - 1)/(β - 1)`, with the `β = 1` limit `k`.
fn geometric(beta: u64, k: usize) -> Result<u64, BoundError> {
    if beta == 1 {
        return Ok(k as u64);
    }
    Ok((pow(beta, k)? - 1) / (beta - 1))
}

/// The same bound in closed form in `β = γ - 1`.
pub fn tanner_bound_closed_form(gamma: u64, girth: usize) -> Result<u64, BoundError> {
    check_girth(gamma, girth)?;
    let beta = gamma - 1;
    let two = |v: u64| v.checked_mul(2).ok_or(BoundError::Overflow);
    if (girth / 2) % 2 == 1 {
        let k = (girth - 2) / 4;
        pow(beta, k)?.checked_add(two(geometric(beta, k)?)?).ok_or(BoundError::Overflow)
    } else {
        two(geometric(beta, girth / 4)?)
    }
}

/// `γ/λ + 1` when `λ` divides `γ`, otherwise not applicable.
pub fn kv_bound(gamma: u64, lambda: u64) -> Option<u64> {
    if gamma == 0 || lambda == 0 || gamma % lambda != 0 {
        return None;
    }
    Some(gamma / lambda + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub gamma: u64,
    pub lambda: u64,
    pub girth: Option<usize>,
    pub uniform_column_weight: bool,
    /// `None` when the girth is below 6 or infinite.
    pub d_l: Option<u64>,
    pub kv_bound: Option<u64>,
    pub beta: u64,
    /// `floor((g - 6) / 4)`, when the girth bound applies.
    pub t: Option<usize>,
}

impl BoundReport {
    pub fn from_graph(graph: &TannerGraph) -> Result<Self, BoundError> {
        let gamma = graph.min_col_weight() as u64;
        let lambda = graph.max_pair_intersection() as u64;
        let girth = graph.girth();
        let girth_applies = matches!(girth, Some(g) if g >= 6) && gamma >= 2;
        let d_l = match girth {
            Some(g) if girth_applies => Some(tanner_bound_dl(gamma, g)?),
            _ => None,
        };
        Ok(Self {
            gamma,
            lambda,
            girth,
            uniform_column_weight: graph.has_uniform_column_weight(),
            d_l,
            kv_bound: kv_bound(gamma, lambda),
            beta: gamma.saturating_sub(1),
            t: girth.filter(|_| girth_applies).map(|g| (g - 6) / 4),
        })
    }

    /// The bounds whose hypotheses hold, with their values.
    pub fn applicable(&self) -> Vec<(BoundKind, u64)> {
        let mut out = Vec::new();
        if let Some(d) = self.d_l {
            out.push((BoundKind::Girth, d));
        }
        if let Some(b) = self.kv_bound {
            out.push((BoundKind::ColumnOverlap, b));
        }
        out
    }

    /// Largest applicable lower bound on `d_P`, `s(H)` and `d`.
    pub fn best(&self) -> Option<u64> {
        self.applicable().into_iter().map(|(_, v)| v).max()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AsymptoticallyOptimal,
    NotOptimal,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayTightness {
    pub representative: Vec<BigInt>,
    pub pseudo_weight: BigRational,
    /// Bounds this ray meets with equality.
    pub attains: Vec<BoundKind>,
    pub is_codeword_multiple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalityCertificate {
    pub d_p_equals_d: Option<bool>,
    pub b_p_equals_a_d: Option<bool>,
    pub t_s_equals_a_d: Option<bool>,
    pub verdict: Verdict,
    pub per_ray: Vec<RayTightness>,
    pub bounds: BoundReport,
}

fn falsify(kind: BoundKind, value: u64, ray: &Ray, reason: &str) -> BoundError {
    BoundError::Falsification(Box::new(Falsification {
        bound: kind,
        bound_value: value,
        representative: ray.representative.clone(),
        pseudo_weight: ray.pseudo_weight.clone(),
        reason: reason.to_string(),
    }))
}

/// Checks both directions of the tightness statement for one bound.
fn check_bound(
    kind: BoundKind,
    value: u64,
    catalog: &RayCatalog,
    h: &crate::gf2::BinaryMatrix,
    codeword_cap: usize,
) -> Result<(), BoundError> {
    let b = BigRational::from_integer(value.into());
    for ray in &catalog.rays {
        if ray.pseudo_weight < b {
            return Err(falsify(kind, value, ray, "pseudo-weight below the bound"));
        }
        if ray.pseudo_weight == b {
            // b·x/Σx must be a 0/1 codeword of weight b
            let ok = ray.classification == RayClass::CodewordMultiple && ray.support.len() as u64 == value;
            let scaled_is_binary = ray
                .as_rational()
                .iter()
                .all(|v| {
                    let s = v * &b / BigRational::from_integer(ray.coordinate_sum());
                    s.is_zero() || s.is_one()
                });
            if !(ok && scaled_is_binary) {
                return Err(falsify(kind, value, ray, "attains the bound but is not a codeword multiple"));
            }
        }
    }
    // converse: every weight-b codeword is itself a minimum edge
    if let Ok(words) = enumerate_codewords(h, codeword_cap) {
        let mut missing = None;
        words.for_each_ref(|c| {
            if missing.is_none() && c.weight() as u64 == value {
                let rep: Vec<BigInt> = c.to_bits().into_iter().map(BigInt::from).collect();
                if !catalog.contains(&rep) {
                    missing = Some(rep);
                }
            }
        });
        if let Some(rep) = missing {
            let rep_str: Vec<String> = rep.iter().map(ToString::to_string).collect();
            return Err(BoundError::Falsification(Box::new(Falsification {
                bound: kind,
                bound_value: value,
                pseudo_weight: BigRational::from_integer(value.into()),
                representative: rep,
                reason: format!("codeword ({}) meets the bound but is not an edge", rep_str.join(",")),
            })));
        }
    }
    Ok(())
}

/// Builds the optimality certificate and verifies the bound theorems on
/// every edge. Any input may be missing, in which case the corresponding
/// comparison and possibly the verdict stay undetermined.
pub fn certify(
    h: &crate::gf2::BinaryMatrix,
    graph: &TannerGraph,
    code: Option<&CodeParameters>,
    stopping: Option<&StoppingReport>,
    catalog: Option<&RayCatalog>,
    codeword_cap: usize,
) -> Result<OptimalityCertificate, BoundError> {
    let n = h.cols();
    if graph.variable_count() != n {
        return Err(BoundError::InconsistentInputs(format!(
            "graph has {} variables, matrix has {n} columns",
            graph.variable_count()
        )));
    }
    if let Some(c) = code {
        if c.n != n {
            return Err(BoundError::InconsistentInputs(format!("code length {} vs {n}", c.n)));
        }
    }
    if let Some(cat) = catalog {
        if let Some(r) = cat.rays.iter().find(|r| r.representative.len() != n) {
            return Err(BoundError::InconsistentInputs(format!(
                "ray of length {} for n = {n}",
                r.representative.len()
            )));
        }
    }
    if let Some(s) = stopping {
        if s.smallest_sets.iter().flatten().any(|&i| i >= n) {
            return Err(BoundError::InconsistentInputs("stopping set index out of range".into()));
        }
    }

    let bounds = BoundReport::from_graph(graph)?;
    let applicable = bounds.applicable();

    let mut per_ray = Vec::new();
    if let Some(cat) = catalog {
        for &(kind, value) in &applicable {
            check_bound(kind, value, cat, h, codeword_cap)?;
        }
        for ray in &cat.rays {
            let attains = applicable
                .iter()
                .filter(|(_, v)| ray.pseudo_weight == BigRational::from_integer((*v).into()))
                .map(|(k, _)| *k)
                .collect();
            per_ray.push(RayTightness {
                representative: ray.representative.clone(),
                pseudo_weight: ray.pseudo_weight.clone(),
                attains,
                is_codeword_multiple: ray.classification == RayClass::CodewordMultiple,
            });
        }
    }

    if let (Some(c), Some(d_l), true) = (code, bounds.d_l, bounds.uniform_column_weight) {
        if let Some(d) = c.d {
            if (d as u64) < d_l {
                return Err(BoundError::InconsistentInputs(format!("d = {d} below d_L = {d_l}")));
            }
        }
    }

    let d = code.and_then(|c| c.d);
    let a_d = code.filter(|c| c.distribution_is_complete()).and_then(CodeParameters::a_d);
    let d_p = catalog.and_then(|c| c.min_pseudo_weight().cloned());
    let b_p = catalog.map(RayCatalog::minimum_edge_count);
    let d_p_equals_d = match (&d_p, d) {
        (Some(dp), Some(d)) => Some(*dp == BigRational::from_integer(d.into())),
        _ => None,
    };
    let b_p_equals_a_d = match (b_p, a_d) {
        (Some(b), Some(a)) if d_p.is_some() => Some(b as u64 == a),
        _ => None,
    };
    let t_s_equals_a_d = match (stopping, a_d) {
        (Some(s), Some(a)) if s.stopping_distance.is_some() => Some(s.count() as u64 == a),
        _ => None,
    };
    let verdict = match (d_p_equals_d, b_p_equals_a_d) {
        (Some(false), _) | (_, Some(false)) => Verdict::NotOptimal,
        (Some(true), Some(true)) => Verdict::AsymptoticallyOptimal,
        _ => Verdict::Undetermined,
    };
    Ok(OptimalityCertificate {
        d_p_equals_d,
        b_p_equals_a_d,
        t_s_equals_a_d,
        verdict,
        per_ray,
        bounds,
    })
}
