//! The γ/λ + 1 bound on the Hamming code whose parity checks are all
//! non-zero simplex codewords, compared with the exact minimum pseudo-weight.
//!
//! Usage: cargo run --example column_overlap_bound [r]

use pseudocone::bounds::BoundReport;
use pseudocone::cone::enumerate_rays;
use pseudocone::construct::hamming_simplex_h;
use pseudocone::gf2::code_parameters;
use pseudocone::stopping::stopping_distance;
use pseudocone::tanner::TannerGraph;

fn main() {
    let r: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let h = hamming_simplex_h(r).expect("r >= 2");
    let g = TannerGraph::build(&h).expect("graph");
    let b = BoundReport::from_graph(&g).expect("bounds");
    println!("H is {}x{}, gamma = {}, lambda = {}", h.rows(), h.cols(), b.gamma, b.lambda);
    println!("gamma/lambda + 1 = {:?}", b.kv_bound);

    let code = code_parameters(&h, 28).expect("enumeration");
    println!("d = {:?}, A_d = {:?}", code.d, code.a_d());
    let stop = stopping_distance(&h, 40).expect("stopping sets");
    println!("s(H) = {:?}, T_s(H) = {}", stop.stopping_distance, stop.count());

    match enumerate_rays(&h, 20) {
        Ok(cat) => {
            println!(
                "d_P = {}, B_P = {}, |M(H)| = {}",
                cat.min_pseudo_weight().map_or("none".into(), ToString::to_string),
                cat.minimum_edge_count(),
                cat.edge_count()
            );
            for ray in cat.minimum_rays() {
                let rep: Vec<String> = ray.representative.iter().map(ToString::to_string).collect();
                println!("  ({})  {:?}", rep.join(","), ray.classification);
            }
        }
        Err(e) => println!("rays not enumerated: {e}"),
    }
}
