//! Every Hölder presentation of one order, with its structure.

use bicyclic::analysis::GroupProfile;
use bicyclic::group::FiniteGroup;
use bicyclic::oracle::holder_presentations;

fn main() {
    let order: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    let all = holder_presentations(order);
    println!("{} presentations of order {order}", all.len());
    for p in all {
        let g = FiniteGroup::holder(p).expect("enumerated presentations are valid");
        let profile = GroupProfile::new(&g);
        let hist: Vec<String> = profile
            .histogram()
            .counts()
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect();
        println!(
            "{p:<14} abelian={:<5} nilpotent={:<5} cyclic={:<5} |v|={:<3} {{{}}}",
            profile.is_abelian(),
            profile.is_nilpotent_sylow(),
            profile.is_cyclic(),
            p.quotient_generator_order(),
            hist.join(", ")
        );
    }
}
