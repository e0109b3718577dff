//! Decodes one noisy word with the exact LP decoder and with ML, then shows
//! a cost vector whose LP optimum is a fractional pseudo-codeword.
//!
//! Usage: cargo run --example lp_decoding [seed]

use pseudocone::construct::circulant;
use pseudocone::decode::{llr_awgn, sigma_for_snr, LpDecoder, MlDecoder};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let h = circulant(&[1, 1, 0, 1, 0, 0, 0]).expect("valid first row");
    let lp = LpDecoder::new(&h).expect("polytope");
    let ml = MlDecoder::new(&h, 28).expect("codewords");
    println!("{} polytope constraints", lp.polytope().constraint_count());

    // all-zero codeword sent as +1 over AWGN at 2 dB
    let sigma = sigma_for_snr(2.0, 3.0 / 7.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y: Vec<f64> = (0..7).map(|_| 1.0 + sigma * Distribution::<f64>::sample(&StandardNormal, &mut rng)).collect();
    let llr = llr_awgn(&y, sigma).expect("finite");
    let l = lp.decode(&llr).expect("bounded");
    let m = ml.decode(&llr).expect("lengths match");
    let show = |v: &[num_rational::BigRational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("received   {y:.3?}");
    println!("LP optimum {}  (integral: {}, objective {})", show(&l.optimum), l.integral, l.objective);
    println!("ML word    {:?}  (objective {})", m.codeword.to_bits(), m.objective);

    let cost = [3, -3, 3, 3, 3, -3, -3];
    let f = lp.solve_integer(&cost).expect("bounded");
    let (c, v) = ml.solve_integer(&cost).expect("lengths match");
    println!("\ncost {cost:?}");
    println!("LP optimum {}  objective {}", show(&f.optimum), f.objective);
    println!("ML word    {:?}  objective {v}", c.to_bits());
}
