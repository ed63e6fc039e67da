//! A nilpotent but non-abelian (m, n)-bicyclic group for a nilpotent pair
//! that is not singular.

use bicyclic::analysis::{is_abelian_bruteforce, is_nilpotent_sylow};
use bicyclic::build_nonabelian_witness;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let pairs = match args.as_slice() {
        [m, n] => vec![(*m, *n)],
        _ => vec![(5, 25), (3, 9), (8, 2), (15, 45)],
    };
    for (m, n) in pairs {
        match build_nonabelian_witness(m, n) {
            Ok(w) => {
                let g = &w.witness.group;
                let blocks: Vec<String> = g.holder_blocks().iter().map(|p| p.to_string()).collect();
                println!(
                    "({m},{n}): {} order {} nilpotent={} abelian={} commutator {}",
                    blocks.join(" x "),
                    g.order(),
                    is_nilpotent_sylow(g),
                    is_abelian_bruteforce(g),
                    w.certificate.commutator
                );
            }
            Err(e) => println!("({m},{n}): {e}"),
        }
    }
}
