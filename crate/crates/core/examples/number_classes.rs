//! Orders n for which every group of order n is cyclic, abelian or nilpotent.

use bicyclic::{number_class, NumberClass};

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(60);
    for class in [
        NumberClass::Cyclic,
        NumberClass::Abelian,
        NumberClass::Nilpotent,
    ] {
        let ns: Vec<String> = (1..=max)
            .filter(|&n| number_class(n).unwrap() == class)
            .map(|n| n.to_string())
            .collect();
        println!("{class:?}: {}", ns.join(" "));
    }
}
