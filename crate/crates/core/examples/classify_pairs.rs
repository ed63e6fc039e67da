//! Which of the three pair criteria hold, and the case behind the verdict.
//!
//! `cargo run --example classify_pairs -- 12 35`

use bicyclic::classifier::{classify_pair, is_cyclic_pair, is_nilpotent_pair, is_singular_pair};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let pairs = match args.as_slice() {
        [m, n] => vec![(*m, *n)],
        _ => vec![
            (1, 1),
            (3, 7),
            (5, 25),
            (3, 5),
            (2, 2),
            (4, 6),
            (6, 3),
            (15, 45),
            (9, 25),
        ],
    };
    println!("{:>6} {:>6}  nilpotent singular cyclic  case", "m", "n");
    for (m, n) in pairs {
        let c = classify_pair(m, n).expect("positive inputs");
        let case = match (c.success_case(), c.failure_case()) {
            (Some(s), _) => s.to_string(),
            (_, Some(f)) => f.to_string(),
            _ => unreachable!(),
        };
        println!(
            "{m:>6} {n:>6}  {:<9} {:<8} {:<6}  {case}",
            is_nilpotent_pair(m, n),
            is_singular_pair(m, n),
            is_cyclic_pair(m, n)
        );
    }
}
