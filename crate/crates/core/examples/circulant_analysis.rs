//! Full analysis of the 7×7 circulant with first row 1101000: code
//! parameters, stopping sets, every edge of the fundamental cone and the
//! optimality certificate.
//!
//! Usage: cargo run --example circulant_analysis [json]

use pseudocone::analysis::{analyze, AnalysisOptions};
use pseudocone::construct::circulant;

fn main() {
    let h = circulant(&[1, 1, 0, 1, 0, 0, 0]).expect("valid first row");
    let report = analyze(&h, "circulant 1101000", &AnalysisOptions::everything()).expect("analysis");
    if std::env::args().nth(1).as_deref() == Some("json") {
        print!("{}", report.to_json(false));
    } else {
        print!("{}", report.to_text(false));
    }
}
