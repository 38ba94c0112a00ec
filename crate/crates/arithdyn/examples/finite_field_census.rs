//! Good reduction and the cycle structure of the reduced map on P^1(F_p).
//! Bad primes are exactly the prime factors of the resultant of a primitive
//! presentation.

use arithdyn::dynamics::fp_cycle_census;
use arithdyn::exact::Int;
use arithdyn::parse::parse_map;

fn main() {
    let map = parse_map("x^2").unwrap();
    println!("map {map}: resultant {}", map.resultant());
    println!("bad primes: {:?}", map.bad_primes().unwrap().primes().collect::<Vec<_>>());

    for p in [3u64, 5, 7, 11, 13] {
        let census = fp_cycle_census(&map, &Int::from(p)).unwrap();
        println!(
            "  mod {:2}: {} periodic residues, cycles {:?}",
            p, census.periodic_count, census.cycle_lengths
        );
    }

    // a map with genuinely bad reduction
    let map = parse_map("F=X^2;G=5Y^2").unwrap();
    println!("map {map}: bad primes {:?}", map.bad_primes().unwrap().primes().collect::<Vec<_>>());
    assert!(fp_cycle_census(&map, &Int::from(5)).is_err());
    println!("  reduction mod 5 is rejected, as it must be");
}
