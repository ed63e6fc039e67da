//! Search every Hölder group of each admissible order for (m, n)-factorizations
//! and test the realizing groups for nilpotency.

use bicyclic::verify_pair_exhaustive;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let pairs = match args.as_slice() {
        [m, n] => vec![(*m, *n)],
        _ => vec![(2, 3), (5, 25), (4, 8), (3, 7), (9, 15)],
    };
    for (m, n) in pairs {
        let r = match verify_pair_exhaustive(m, n) {
            Ok(r) => r,
            Err(e) => {
                println!("({m},{n}): {e}");
                continue;
            }
        };
        println!(
            "({m},{n}) criterion={} orders {:?}: {} presentations, {} realizing groups, all nilpotent={}",
            r.predicate,
            r.orders_scanned,
            r.presentations_scanned,
            r.realizing_groups,
            r.all_nilpotent
        );
        for c in r.counterexamples.iter().take(3) {
            println!(
                "    non-nilpotent {} via a={} b={}",
                c.presentation, c.witness.gen_a, c.witness.gen_b
            );
        }
    }
}
