//! LP versus ML word-error rates for the 7-bit circulant code over AWGN.
//!
//! Usage: cargo run --release --example lp_vs_ml_simulation [min_ml_errors]

use std::time::Instant;

use pseudocone::construct::circulant;
use pseudocone::decode::{simulate, to_csv, SimConfig, TrialPolicy};

fn main() {
    let min_errors: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let h = circulant(&[1, 1, 0, 1, 0, 0, 0]).expect("valid first row");
    let cfg = SimConfig::new(
        vec![3.0, 5.0, 7.0],
        TrialPolicy::UntilMlErrors { min_errors, max_trials: 50_000_000 },
        2024,
    );
    let start = Instant::now();
    let points = simulate(&h, &cfg).expect("simulation");
    print!("{}", to_csv(&points));
    eprintln!("elapsed: {:.1?}", start.elapsed());
}
