//! Extreme rays of the fundamental cone of a small matrix read from a file,
//! or of the 7×7 circulant, with their pseudo-weights.
//!
//! Usage: cargo run --example fundamental_cone [file]

use pseudocone::cone::{cone_inequalities, enumerate_rays};
use pseudocone::construct::circulant;
use pseudocone::io::parse_matrix;

fn main() {
    let h = match std::env::args().nth(1) {
        Some(path) => parse_matrix(&std::fs::read_to_string(&path).expect("readable file")).expect("matrix"),
        None => circulant(&[1, 1, 0, 1, 0, 0, 0]).expect("valid first row"),
    };
    println!("{} cone inequalities", cone_inequalities(&h).len());
    let cat = enumerate_rays(&h, 20).expect("within cap");
    for ray in &cat.rays {
        let rep: Vec<String> = ray.representative.iter().map(ToString::to_string).collect();
        println!("({})  w_P = {}  {:?}", rep.join(","), ray.pseudo_weight, ray.classification);
    }
    if let Some(d) = cat.min_pseudo_weight() {
        println!("d_P = {d}, B_P = {}", cat.minimum_edge_count());
    }
}
