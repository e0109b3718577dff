//! Reads a parity-check matrix (alist or dense 0/1 rows), writes it back as
//! alist and lists its stopping sets.
//!
//! Usage: cargo run --example alist_stopping_sets [file]

use pseudocone::construct::cyclic_parity_check;
use pseudocone::io::{parse_matrix, serialize_alist};
use pseudocone::stopping::{all_stopping_sets, stopping_distance};

fn main() {
    let h = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable file");
            parse_matrix(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
        }
        // [7,4] Hamming code from g(x) = 1 + x + x^3
        None => cyclic_parity_check(7, &[0, 1, 3]).expect("g divides x^7 - 1"),
    };
    let alist = serialize_alist(&h);
    print!("{alist}");
    assert_eq!(parse_matrix(&alist).expect("round trip"), h);

    let report = stopping_distance(&h, 40).expect("within cap");
    println!("\ns(H) = {:?}, T_s(H) = {}", report.stopping_distance, report.count());
    for set in &report.smallest_sets {
        let one_based: Vec<usize> = set.iter().map(|i| i + 1).collect();
        println!("  {one_based:?}");
    }
    if let Ok(all) = all_stopping_sets(&h, 25) {
        println!("{} non-empty stopping sets in total", all.len());
    }
}
