//! Monte-Carlo comparison of LP and ML decoding on the AWGN channel.
//!
//! The all-zeros codeword is sent as all `+1` symbols. Trial `t` at SNR index
//! `i` draws its noise from a ChaCha8 stream keyed by `(seed, i, t)`, so the
//! outcome of every trial is fixed regardless of how trials are scheduled.
//! Adaptive runs grow in fixed-size batches and stop at the first batch
//! boundary where the ML error target is met.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use super::{sigma_for_snr, DecodeError, LpDecoder, MlDecoder};
use crate::gf2::BinaryMatrix;

/// How many trials to run at each SNR point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialPolicy {
    Fixed(u64),
    /// Keep adding batches until at least `min_errors` ML word errors are
    /// seen or `max_trials` is reached.
    UntilMlErrors { min_errors: u64, max_trials: u64 },
}

#[derive(Debug, Clone)]
pub struct SimConfig {
    pub snr_db: Vec<f64>,
    pub policy: TrialPolicy,
    pub seed: u64,
    pub batch: u64,
    pub codeword_cap: usize,
}

impl SimConfig {
    pub fn new(snr_db: Vec<f64>, policy: TrialPolicy, seed: u64) -> Self {
        Self {
            snr_db,
            policy,
            seed,
            batch: 4096,
            codeword_cap: crate::gf2::DEFAULT_CODEWORD_K_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SnrPoint {
    pub snr_db: f64,
    pub trials: u64,
    pub errors_lp: u64,
    pub errors_ml: u64,
    pub wer_lp: f64,
    pub wer_ml: f64,
    /// `wer_lp / wer_ml`, absent when no ML errors were seen.
    pub ratio: Option<f64>,
}

impl SnrPoint {
    /// Binomial standard error of a word-error-rate estimate.
    pub fn std_error(wer: f64, trials: u64) -> f64 {
        (wer * (1.0 - wer) / trials as f64).sqrt()
    }
}

struct Trial<'a> {
    lp: &'a LpDecoder,
    ml: &'a MlDecoder,
    n: usize,
    sigma: f64,
    seed: u64,
    snr_index: u64,
}

impl Trial<'_> {
    /// `(lp_error, ml_error)` for one transmission.
    fn run(&self, t: u64) -> Result<(bool, bool), DecodeError> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.snr_index << 40 | t);
        let y: Vec<f64> = (0..self.n)
            .map(|_| {
                let z: f64 = StandardNormal.sample(&mut rng);
                1.0 + self.sigma * z
            })
            .collect();
        let cost = super::llr_awgn(&y, self.sigma)?.rationalized();
        if cost.iter().all(|&c| c >= 0) {
            return Ok((false, false));
        }
        let (word, _) = self.ml.solve_integer(&cost)?;
        let lp = self.lp.solve_integer(&cost)?;
        Ok((!(lp.integral && lp.is_zero()), !word.is_zero()))
    }
}

fn run_batch(trial: &Trial<'_>, start: u64, end: u64) -> Result<(u64, u64), DecodeError> {
    (start..end)
        .into_par_iter()
        .map(|t| trial.run(t).map(|(l, m)| (u64::from(l), u64::from(m))))
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))
}

pub fn simulate(h: &BinaryMatrix, config: &SimConfig) -> Result<Vec<SnrPoint>, DecodeError> {
    let lp = LpDecoder::new(h)?;
    let ml = MlDecoder::new(h, config.codeword_cap)?;
    let n = h.cols();
    let k = ml.codewords().len().trailing_zeros() as f64;
    let rate = k / n as f64;
    let batch = config.batch.max(1);
    let mut out = Vec::with_capacity(config.snr_db.len());
    for (i, &snr_db) in config.snr_db.iter().enumerate() {
        let trial = Trial {
            lp: &lp,
            ml: &ml,
            n,
            sigma: sigma_for_snr(snr_db, rate),
            seed: config.seed,
            snr_index: i as u64,
        };
        let (target, min_errors) = match config.policy {
            TrialPolicy::Fixed(t) => (t, None),
            TrialPolicy::UntilMlErrors { min_errors, max_trials } => (max_trials, Some(min_errors)),
        };
        let (mut trials, mut errors_lp, mut errors_ml) = (0u64, 0u64, 0u64);
        while trials < target {
            let end = (trials + batch).min(target);
            let (l, m) = run_batch(&trial, trials, end)?;
            errors_lp += l;
            errors_ml += m;
            trials = end;
            if min_errors.is_some_and(|e| errors_ml >= e) {
                break;
            }
        }
        let wer = |e: u64| if trials == 0 { 0.0 } else { e as f64 / trials as f64 };
        out.push(SnrPoint {
            snr_db,
            trials,
            errors_lp,
            errors_ml,
            wer_lp: wer(errors_lp),
            wer_ml: wer(errors_ml),
            ratio: (errors_ml > 0).then(|| errors_lp as f64 / errors_ml as f64),
        });
    }
    Ok(out)
}

/// CSV with header `snr_db,trials,errors_lp,errors_ml,wer_lp,wer_ml,ratio`;
/// an undefined ratio is left empty.
pub fn to_csv(points: &[SnrPoint]) -> String {
    let mut s = String::from("snr_db,trials,errors_lp,errors_ml,wer_lp,wer_ml,ratio\n");
    for p in points {
        let ratio = p.ratio.map(|r| format!("{r:.6}")).unwrap_or_default();
        s.push_str(&format!(
            "{},{},{},{},{:.6e},{:.6e},{}\n",
            p.snr_db, p.trials, p.errors_lp, p.errors_ml, p.wer_lp, p.wer_ml, ratio
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> BinaryMatrix {
        crate::cone::tests::example1()
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let cfg = SimConfig {
            batch: 64,
            ..SimConfig::new(vec![1.0, 3.0], TrialPolicy::Fixed(500), 7)
        };
        let a = simulate(&example1(), &cfg).unwrap();
        let b = simulate(&example1(), &cfg).unwrap();
        assert_eq!(to_csv(&a), to_csv(&b));
        assert!(a.iter().all(|p| p.trials == 500));
        // batching does not change which trials run
        let c = simulate(&example1(), &SimConfig { batch: 500, ..cfg.clone() }).unwrap();
        assert_eq!(a, c);
        let d = simulate(&example1(), &SimConfig { seed: 8, ..cfg }).unwrap();
        assert_ne!(a, d);
    }

    #[test]
    fn low_snr_errs_often() {
        let cfg = SimConfig::new(vec![-10.0], TrialPolicy::Fixed(400), 1);
        let p = &simulate(&example1(), &cfg).unwrap()[0];
        assert!(p.wer_ml > 0.5 && p.wer_lp >= p.wer_ml);
    }

    #[test]
    fn adaptive_stops_at_a_batch_boundary() {
        let cfg = SimConfig {
            batch: 100,
            ..SimConfig::new(vec![2.0], TrialPolicy::UntilMlErrors { min_errors: 20, max_trials: 1_000_000 }, 3)
        };
        let p = &simulate(&example1(), &cfg).unwrap()[0];
        assert!(p.errors_ml >= 20);
        assert_eq!(p.trials % 100, 0);
    }

    #[test]
    fn csv_layout() {
        let p = SnrPoint {
            snr_db: 3.0,
            trials: 10,
            errors_lp: 2,
            errors_ml: 0,
            wer_lp: 0.2,
            wer_ml: 0.0,
            ratio: None,
        };
        assert_eq!(
            to_csv(&[p]),
            "snr_db,trials,errors_lp,errors_ml,wer_lp,wer_ml,ratio\n3,10,2,0,2.000000e-1,0.000000e0,\n"
        );
    }
}
