//! Point-hyperplane incidence of EG(m, 2^s) with the origin removed. For
//! EG(3, 4) the minimum distance is pinned by the γ/λ + 1 bound and a
//! weight-5 codeword; the cone itself is far beyond exact enumeration.
//!
//! Usage: cargo run --release --example euclidean_geometry [m s]

use pseudocone::bounds::BoundReport;
use pseudocone::construct::{eg_point_hyperplane_h, is_cyclic_codeword};
use pseudocone::gf2::{distance_from_witness, rank, BinaryVector};
use pseudocone::tanner::TannerGraph;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, s) = match args[..] {
        [m, s] => (m, s as u32),
        _ => (3, 2),
    };
    let h = eg_point_hyperplane_h(m, s).expect("geometry");
    let g = TannerGraph::build(&h).expect("graph");
    let b = BoundReport::from_graph(&g).expect("bounds");
    println!("EG({m}, {}): H is {}x{}", 1 << s, h.rows(), h.cols());
    println!(
        "column weight {}, row weight {}, girth {:?}, lambda {}",
        b.gamma,
        g.max_row_weight(),
        b.girth,
        b.lambda
    );
    println!("rank {}, k = {}", rank(&h), h.cols() - rank(&h));
    println!("girth bound {:?}, column-overlap bound {:?}", b.d_l, b.kv_bound);

    if (m, s) == (3, 2) {
        let g_x = [0, 2, 4, 11, 13, 14, 15];
        let w = BinaryVector::from_support(63, &[0, 23, 33, 36, 37]);
        println!(
            "1 + x^23 + x^33 + x^36 + x^37 is a multiple of g(x): {}",
            is_cyclic_codeword(63, &g_x, &w).expect("lengths match")
        );
        let lower = b.best().expect("a bound applies") as usize;
        match distance_from_witness(&h, lower, &w).expect("lengths match") {
            Some(p) => println!("d = {} ({:?})", p.d.unwrap(), p.d_source),
            None => println!("witness does not certify d"),
        }
    }
}
