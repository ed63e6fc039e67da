//! The gcd criterion against the parity/prime case analysis on a full grid.

use std::time::Instant;

use bicyclic::sweep_case_analysis;

fn main() {
    let x: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(1000);
    let start = Instant::now();
    let s = sweep_case_analysis(x).expect("x >= 1");
    println!("{} pairs in {:.2?}", s.pairs_checked, start.elapsed());
    println!("satisfying  {}", s.satisfying_pairs);
    println!("odd cross   {}", s.odd_cross);
    println!("both even   {}", s.both_even);
    println!("mixed       {}", s.mixed_parity);
    match s.discrepancy {
        None => println!("no discrepancy"),
        Some((m, n)) => println!("discrepancy at ({m},{n})"),
    }
}
