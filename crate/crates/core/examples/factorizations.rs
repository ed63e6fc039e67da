//! All ways to write a group as a product of two cyclic subgroups of
//! given orders.

use bicyclic::analysis::find_bicyclic_factorizations;
use bicyclic::make_holder_group;

fn main() {
    // the quaternion group and S3
    for (pres, m, n) in [
        ((4, 2, 3, 2), 4, 4),
        ((3, 2, 2, 0), 2, 3),
        ((3, 2, 2, 0), 3, 2),
    ] {
        let g = make_holder_group(pres.0, pres.1, pres.2, pres.3).unwrap();
        let ws = find_bicyclic_factorizations(&g, m, n);
        println!("{g}: {} ({m},{n})-factorizations", ws.len());
        for w in ws {
            println!(
                "  <{}><{}>  intersection {}",
                w.gen_a, w.gen_b, w.intersection_size
            );
        }
    }
}
