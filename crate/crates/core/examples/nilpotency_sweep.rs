//! Both directions of the nilpotency criterion and the abelian and cyclic
//! criteria over a grid of pairs.

use bicyclic::{sweep_nilpotency, sweep_structure};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse::<u64>().ok());
    let x = args.next().unwrap_or(24);
    let cap = args.next().unwrap_or(600);

    let t = sweep_nilpotency(x, cap);
    println!(
        "nilpotency: {} pairs, {} verified by search, {} by witness, {} presentations scanned",
        t.pairs_checked,
        t.nilpotent_pairs_verified,
        t.failing_pairs_witnessed,
        t.presentations_scanned
    );
    let c = sweep_structure(x, cap).expect("sweep runs");
    println!(
        "abelian/cyclic: {} singular, {} cyclic pairs, {} groups searched, {} non-abelian witnesses, {} non-cyclic products",
        c.singular_pairs,
        c.cyclic_pairs,
        c.groups_searched,
        c.nonabelian_witnesses_verified,
        c.noncyclic_products_verified
    );
    for d in t.discrepancies.iter().chain(&c.discrepancies) {
        println!("  ({},{}) {}", d.m, d.n, d.reason);
    }
    if !(t.passed() && c.passed()) {
        std::process::exit(1);
    }
}
