//! A concrete non-nilpotent (m, n)-bicyclic group for a pair off the
//! criterion, with two coprime-order elements that fail to commute.

use bicyclic::build_nonnilpotent_witness;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (m, n) = match args.as_slice() {
        [m, n] => (*m, *n),
        _ => (3, 7),
    };
    let w = match build_nonnilpotent_witness(m, n) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let g = &w.witness.group;
    println!("group {g} of order {}", g.order());
    println!(
        "a = {}  |a| = {}",
        w.witness.gen_a,
        g.element_order(&w.witness.gen_a).unwrap()
    );
    println!(
        "b = {}  |b| = {}",
        w.witness.gen_b,
        g.element_order(&w.witness.gen_b).unwrap()
    );
    println!("<a> ∩ <b> has order {}", w.witness.intersection_size);
    let c = &w.certificate;
    println!(
        "[{}, {}] = {}  (orders {} and {})",
        c.x, c.y, c.commutator, c.order_x, c.order_y
    );
    w.witness.reverify().expect("witness re-verifies");
    println!("re-verified");
}
