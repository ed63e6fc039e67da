//! Exact pair counts next to the asymptotic estimate for cyclic numbers.
//! The estimate is asymptotic only; the ratio column is for inspection.

use bicyclic::oracle::{count_pairs_table, erdos_estimate};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse::<u64>().ok());
    let max = args.next().unwrap_or(1000);
    let step = args.next().unwrap_or(100);
    println!(
        "{:>6} {:>9} {:>9} {:>9} {:>7} {:>10} {:>7}",
        "x", "nilpotent", "singular", "cyclic", "cyc#", "estimate", "ratio"
    );
    for r in count_pairs_table(max, step).expect("max >= 1") {
        let (est, ratio) = match erdos_estimate(r.x) {
            Ok(z) => (
                format!("{z:.2}"),
                format!("{:.4}", r.cyclic_numbers as f64 / z),
            ),
            Err(_) => (String::new(), String::new()),
        };
        println!(
            "{:>6} {:>9} {:>9} {:>9} {:>7} {est:>10} {ratio:>7}",
            r.x, r.nilpotent_pairs, r.singular_pairs, r.cyclic_pairs, r.cyclic_numbers
        );
    }
}
