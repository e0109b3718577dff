//! Full analysis of one parity-check matrix and its JSON/text report.
//!
//! Every expensive step sits behind a cap. A step that would exceed its cap
//! is skipped and the affected report fields become `"unknown: …"` strings
//! naming the cap. Indices in reports are 1-based.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{certify, BoundError, BoundReport, OptimalityCertificate, Verdict};
use crate::cone::{enumerate_rays, ConeError, RayCatalog, RayClass, DEFAULT_RAY_N_CAP};
use crate::gf2::{
    code_parameters, dimension, distance_from_witness, rank, BinaryMatrix, BinaryVector, CodeParameters,
    DistanceSource, Gf2Error, DEFAULT_CODEWORD_K_CAP,
};
use crate::stopping::{
    stopping_distance, stopping_report_exhaustive, StoppingError, StoppingReport, DEFAULT_EXHAUSTIVE_N_CAP,
    DEFAULT_STOPPING_N_CAP,
};
use crate::tanner::{TannerError, TannerGraph};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] TannerError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Code(#[from] Gf2Error),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Stopping(#[from] StoppingError),
    #[error("witness index {index} out of range for n={n}")]
    WitnessOutOfRange { index: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub ray_n: usize,
    pub codeword_k: usize,
    pub stopping_n: usize,
    pub exhaustive_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            ray_n: DEFAULT_RAY_N_CAP,
            codeword_k: DEFAULT_CODEWORD_K_CAP,
            stopping_n: DEFAULT_STOPPING_N_CAP,
            exhaustive_n: DEFAULT_EXHAUSTIVE_N_CAP,
        }
    }
}

/// A step skipped because its input exceeded a cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CapHit {
    pub cap: &'static str,
    pub limit: usize,
    pub actual: usize,
}

impl CapHit {
    fn describe(&self) -> String {
        format!("unknown: cap {}={} exceeded ({})", self.cap, self.limit, self.actual)
    }
}

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    pub min_distance: bool,
    pub stopping: bool,
    pub exhaustive_stopping: bool,
    pub rays: bool,
    /// Support of a codeword (0-based) used to certify `d` when the
    /// codewords cannot be enumerated.
    pub witness: Option<Vec<usize>>,
    pub caps: Caps,
}

impl AnalysisOptions {
    pub fn everything() -> Self {
        Self {
            min_distance: true,
            stopping: true,
            exhaustive_stopping: true,
            rays: true,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub provenance: String,
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub k: usize,
    pub graph: TannerGraph,
    pub bounds: BoundReport,
    pub code: Option<CodeParameters>,
    /// Set when a witness was supplied but did not certify `d`.
    pub witness_rejected: bool,
    pub stopping: Option<StoppingReport>,
    pub rays: Option<RayCatalog>,
    pub certificate: OptimalityCertificate,
    pub caps: Caps,
    pub caps_hit: Vec<CapHit>,
    pub timings: Vec<(&'static str, Duration)>,
}

fn timed<T>(timings: &mut Vec<(&'static str, Duration)>, label: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.push((label, start.elapsed()));
    out
}

pub fn analyze(h: &BinaryMatrix, provenance: &str, options: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    let caps = options.caps;
    let (m, n) = (h.rows(), h.cols());
    let mut timings = Vec::new();
    let mut caps_hit = Vec::new();
    let graph = timed(&mut timings, "tanner", || TannerGraph::build(h))?;
    let bounds = BoundReport::from_graph(&graph)?;
    let k = dimension(h);

    let mut code = None;
    let mut witness_rejected = false;
    if options.min_distance || options.witness.is_some() {
        match timed(&mut timings, "codewords", || code_parameters(h, caps.codeword_k)) {
            Ok(p) => code = Some(p),
            Err(Gf2Error::DimensionTooLarge { k, cap }) => {
                caps_hit.push(CapHit {
                    cap: "codeword_k",
                    limit: cap,
                    actual: k,
                });
                if let Some(w) = &options.witness {
                    if let Some(&index) = w.iter().find(|&&i| i >= n) {
                        return Err(AnalysisError::WitnessOutOfRange { index, n });
                    }
                    let witness = BinaryVector::from_support(n, w);
                    code = match bounds.best() {
                        Some(lb) => distance_from_witness(h, lb as usize, &witness)?,
                        None => None,
                    };
                    witness_rejected = code.is_none();
                }
            }
            Err(e) => return Err(e.into()),
        }
    }

    let mut stopping = None;
    if options.exhaustive_stopping {
        match timed(&mut timings, "stopping-exhaustive", || stopping_report_exhaustive(h, caps.exhaustive_n)) {
            Ok(r) => stopping = Some(r),
            Err(StoppingError::DimensionTooLarge { n, cap }) => caps_hit.push(CapHit {
                cap: "exhaustive_n",
                limit: cap,
                actual: n,
            }),
            Err(e) => return Err(e.into()),
        }
    }
    if stopping.is_none() && (options.stopping || options.exhaustive_stopping) {
        match timed(&mut timings, "stopping", || stopping_distance(h, caps.stopping_n)) {
            Ok(r) => stopping = Some(r),
            Err(StoppingError::DimensionTooLarge { n, cap }) => caps_hit.push(CapHit {
                cap: "stopping_n",
                limit: cap,
                actual: n,
            }),
            Err(e) => return Err(e.into()),
        }
    }

    let mut rays = None;
    if options.rays {
        match timed(&mut timings, "rays", || enumerate_rays(h, caps.ray_n)) {
            Ok(c) => rays = Some(c),
            Err(ConeError::DimensionTooLarge { n, cap }) => caps_hit.push(CapHit {
                cap: "ray_n",
                limit: cap,
                actual: n,
            }),
            Err(e) => return Err(e.into()),
        }
    }

    let certificate = timed(&mut timings, "certify", || {
        certify(h, &graph, code.as_ref(), stopping.as_ref(), rays.as_ref(), caps.codeword_k)
    })?;

    Ok(AnalysisReport {
        provenance: provenance.to_string(),
        n,
        m,
        rank: rank(h),
        k,
        graph,
        bounds,
        code,
        witness_rejected,
        stopping,
        rays,
        certificate,
        caps,
        caps_hit,
        timings,
    })
}

/// A value, or the reason it is missing.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Field<T> {
    Known(T),
    Unknown(String),
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_approx(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Serialize)]
struct RayRow {
    representative: Vec<String>,
    pseudo_weight: String,
    pseudo_weight_approx: f64,
    support: Vec<usize>,
    classification: RayClass,
}

#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
struct ReportJson {
    provenance: String,
    n: usize,
    m: usize,
    rank: usize,
    k: usize,
    girth: Field<usize>,
    gamma: u64,
    lambda: u64,
    d: Field<usize>,
    d_source: DistanceSource,
    A_d: Field<u64>,
    weight_distribution: Field<Vec<(usize, u64)>>,
    s_H: Field<usize>,
    T_s_H: Field<usize>,
    smallest_stopping_sets: Field<Vec<Vec<usize>>>,
    all_stopping_sets: Field<Vec<Vec<usize>>>,
    d_P: Field<String>,
    d_P_approx: Field<f64>,
    B_P: Field<usize>,
    M_H: Field<usize>,
    d_L: Field<u64>,
    kv_bound: Field<u64>,
    verdict: Verdict,
    d_P_equals_d: Field<bool>,
    B_P_equals_A_d: Field<bool>,
    T_s_equals_A_d: Field<bool>,
    rays: Field<Vec<RayRow>>,
    caps: Caps,
    caps_hit: Vec<CapHit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<Vec<(&'static str, f64)>>,
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|i| i + 1).collect()).collect()
}

impl AnalysisReport {
    fn hit(&self, cap: &str) -> Option<&CapHit> {
        self.caps_hit.iter().find(|c| c.cap == cap)
    }

    /// Reason for a missing value: the cap that blocked it, else a note that
    /// it was not requested.
    fn missing(&self, caps: &[&str], not_requested: &str) -> String {
        caps.iter()
            .find_map(|c| self.hit(c))
            .map(CapHit::describe)
            .unwrap_or_else(|| format!("unknown: {not_requested}"))
    }

    fn json_view(&self, include_timing: bool) -> ReportJson {
        let code_missing = || {
            if self.witness_rejected {
                "unknown: witness did not certify d and cap codeword_k was exceeded".to_string()
            } else {
                self.missing(&["codeword_k"], "not requested (--min-distance)")
            }
        };
        let stop_missing = || self.missing(&["exhaustive_n", "stopping_n"], "not requested (--stopping)");
        let ray_missing = || self.missing(&["ray_n"], "not requested (--rays)");
        let ray_field = |f: &dyn Fn(&RayCatalog) -> Option<String>| match &self.rays {
            Some(c) => f(c).map(Field::Known).unwrap_or_else(|| Field::Unknown("unknown: cone has no rays".into())),
            None => Field::Unknown(ray_missing()),
        };
        let bool_field = |v: Option<bool>, why: &str| match v {
            Some(b) => Field::Known(b),
            None => Field::Unknown(format!("unknown: {why}")),
        };

        let d = match self.code.as_ref().map(|c| c.d) {
            Some(Some(d)) => Field::Known(d),
            Some(None) => Field::Unknown("unknown: code is {0}".into()),
            None => Field::Unknown(code_missing()),
        };
        let a_d = match &self.code {
            Some(c) if c.distribution_is_complete() => match c.a_d() {
                Some(a) => Field::Known(a),
                None => Field::Unknown("unknown: code is {0}".into()),
            },
            Some(_) => Field::Unknown(self.missing(&["codeword_k"], "distance certified by witness only")),
            None => Field::Unknown(code_missing()),
        };
        let weight_distribution = match &self.code {
            Some(c) if c.distribution_is_complete() => {
                Field::Known(c.weight_distribution.iter().map(|(&w, &a)| (w, a)).collect())
            }
            Some(_) => Field::Unknown(self.missing(&["codeword_k"], "distance certified by witness only")),
            None => Field::Unknown(code_missing()),
        };
        let (s_h, t_s, smallest, all) = match &self.stopping {
            Some(s) => (
                s.stopping_distance
                    .map(Field::Known)
                    .unwrap_or_else(|| Field::Unknown("unknown: no non-empty stopping set".into())),
                Field::Known(s.count()),
                Field::Known(one_based(&s.smallest_sets)),
                match &s.all_sets {
                    Some(a) => Field::Known(one_based(a)),
                    None => Field::Unknown(self.missing(&["exhaustive_n"], "not requested (--exhaustive-stopping)")),
                },
            ),
            None => (
                Field::Unknown(stop_missing()),
                Field::Unknown(stop_missing()),
                Field::Unknown(stop_missing()),
                Field::Unknown(self.missing(&["exhaustive_n"], "not requested (--exhaustive-stopping)")),
            ),
        };
        let d_p = ray_field(&|c| c.min_pseudo_weight().map(rational_string));
        let d_p_approx = match &self.rays {
            Some(c) => match c.min_pseudo_weight() {
                Some(w) => Field::Known(rational_approx(w)),
                None => Field::Unknown("unknown: cone has no rays".into()),
            },
            None => Field::Unknown(ray_missing()),
        };
        let (b_p, m_h, rays) = match &self.rays {
            Some(c) => (
                Field::Known(c.minimum_edge_count()),
                Field::Known(c.edge_count()),
                Field::Known(
                    c.rays
                        .iter()
                        .map(|r| RayRow {
                            representative: r.representative.iter().map(ToString::to_string).collect(),
                            pseudo_weight: rational_string(&r.pseudo_weight),
                            pseudo_weight_approx: rational_approx(&r.pseudo_weight),
                            support: r.support.iter().map(|i| i + 1).collect(),
                            classification: r.classification,
                        })
                        .collect(),
                ),
            ),
            None => (
                Field::Unknown(ray_missing()),
                Field::Unknown(ray_missing()),
                Field::Unknown(ray_missing()),
            ),
        };
        let cert = &self.certificate;
        ReportJson {
            provenance: self.provenance.clone(),
            n: self.n,
            m: self.m,
            rank: self.rank,
            k: self.k,
            girth: match self.bounds.girth {
                Some(g) => Field::Known(g),
                None => Field::Unknown("infinite: Tanner graph has no cycle".into()),
            },
            gamma: self.bounds.gamma,
            lambda: self.bounds.lambda,
            d,
            d_source: self.code.as_ref().map_or(DistanceSource::Unknown, |c| c.d_source),
            A_d: a_d,
            weight_distribution,
            s_H: s_h,
            T_s_H: t_s,
            smallest_stopping_sets: smallest,
            all_stopping_sets: all,
            d_P: d_p,
            d_P_approx: d_p_approx,
            B_P: b_p,
            M_H: m_h,
            d_L: match self.bounds.d_l {
                Some(v) => Field::Known(v),
                None => Field::Unknown("unknown: girth bound needs girth >= 6 and column weight >= 2".into()),
            },
            kv_bound: match self.bounds.kv_bound {
                Some(v) => Field::Known(v),
                None => Field::Unknown("unknown: column-overlap bound does not apply".into()),
            },
            verdict: cert.verdict,
            d_P_equals_d: bool_field(cert.d_p_equals_d, "needs d_P and d"),
            B_P_equals_A_d: bool_field(cert.b_p_equals_a_d, "needs B_P and an exhaustive A_d"),
            T_s_equals_A_d: bool_field(cert.t_s_equals_a_d, "needs T_s(H) and an exhaustive A_d"),
            rays,
            caps: self.caps,
            caps_hit: self.caps_hit.clone(),
            timing_ms: include_timing
                .then(|| self.timings.iter().map(|(l, d)| (*l, d.as_secs_f64() * 1e3)).collect()),
        }
    }

    /// Pretty JSON with keys in a fixed order. Timings are left out unless
    /// asked for, so that identical inputs give identical bytes.
    pub fn to_json(&self, include_timing: bool) -> String {
        let mut s = serde_json::to_string_pretty(&self.json_view(include_timing)).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self, include_timing: bool) -> String {
        let v = self.json_view(include_timing);
        let value = serde_json::to_value(&v).expect("report serializes");
        let mut s = String::new();
        let show = |x: &serde_json::Value| match x {
            serde_json::Value::String(t) => t.clone(),
            other => other.to_string(),
        };
        if let serde_json::Value::Object(map) = &value {
            // iterate in declaration order, not map order
            for key in FIELD_ORDER {
                let Some(x) = map.get(*key) else { continue };
                if *key == "rays" {
                    continue;
                }
                let _ = writeln!(s, "{key:<24} {}", show(x));
            }
        }
        if let Some(c) = &self.rays {
            let _ = writeln!(s, "\nrays ({}):", c.edge_count());
            for r in &c.rays {
                let rep: Vec<String> = r.representative.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    s,
                    "  ({})  w_P = {} ≈ {:.4}  {:?}",
                    rep.join(","),
                    rational_string(&r.pseudo_weight),
                    rational_approx(&r.pseudo_weight),
                    r.classification
                );
            }
        }
        s
    }
}

const FIELD_ORDER: &[&str] = &[
    "provenance",
    "n",
    "m",
    "rank",
    "k",
    "girth",
    "gamma",
    "lambda",
    "d",
    "d_source",
    "A_d",
    "weight_distribution",
    "s_H",
    "T_s_H",
    "smallest_stopping_sets",
    "all_stopping_sets",
    "d_P",
    "d_P_approx",
    "B_P",
    "M_H",
    "d_L",
    "kv_bound",
    "verdict",
    "d_P_equals_d",
    "B_P_equals_A_d",
    "T_s_equals_A_d",
    "rays",
    "caps",
    "caps_hit",
    "timing_ms",
];
