//! Table of the girth and column-weight lower bound d_L, computed both as a
//! level sum over the local tree and from the closed form.
//!
//! Usage: cargo run --example girth_bounds

use pseudocone::bounds::{tanner_bound_closed_form, tanner_bound_dl};

fn main() {
    let girths = [6usize, 8, 10, 12, 14, 16];
    print!("gamma");
    for g in girths {
        print!("{:>8}", format!("g={g}"));
    }
    println!();
    for gamma in 2..=8u64 {
        print!("{gamma:>5}");
        for g in girths {
            let a = tanner_bound_dl(gamma, g).expect("in range");
            let b = tanner_bound_closed_form(gamma, g).expect("in range");
            assert_eq!(a, b);
            print!("{a:>8}");
        }
        println!();
    }
}
