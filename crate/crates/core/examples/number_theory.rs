use bicyclic::numtheory::{
    crt_combine, euler_phi, factorize, find_unit, multiplicative_order, psi, radical,
};

fn main() {
    for n in [84u64, 360, 1001, 65_536, 999_983] {
        let f = factorize(n).unwrap();
        println!(
            "{n} = {f}  phi={} rad={} psi={:?}",
            euler_phi(n).unwrap(),
            radical(n).unwrap(),
            psi(n).ok()
        );
    }
    println!("ord_7(2) = {}", multiplicative_order(2, 7).unwrap());
    println!(
        "x = 2 mod 3, 3 mod 5 -> {:?}",
        crt_combine(&[(2, 3), (3, 5)]).unwrap()
    );
    println!(
        "smallest r != 1 with r^3 = 1 mod 7: {:?}",
        find_unit(7, 3, 7).unwrap()
    );
}
