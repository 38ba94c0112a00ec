//! The explicit periodic-point bounds. Everything is exact big-integer
//! arithmetic; quantities too large to materialize are carried as certified
//! log10 upper bounds.

use arithdyn::bounds::{
    b_bound, baron_bound, c_bound, everywhere_good_bound, kappa, main_theorem_bound,
    ms_period_bound, three_point_bound, BoundFamily,
};

fn main() {
    for family in [BoundFamily::Evertse, BoundFamily::BsEss] {
        println!("family {family:?}:");
        for s in 1..=3u32 {
            println!("  s = {s}: B = {}, kappa = {}", b_bound(s, family), kappa(s, family));
        }
        println!("  C(3,1) = {}", c_bound(3, 1, family));
        println!("  C(5,1) = {}", c_bound(5, 1, family));
    }

    println!("\nper-degree bounds at s = 1 (Evertse):");
    println!("  {:>3} {:>12} {:>6} {:>4} {:>24}", "d", "three-point", "d+5", "d+1", "kappa*d+lambda");
    for d in 2..=6u32 {
        println!(
            "  {:>3} {:>12} {:>6} {:>4} {:>24}",
            d,
            three_point_bound(1).to_string(),
            everywhere_good_bound(d).to_string(),
            baron_bound(d).to_string(),
            main_theorem_bound(d, 1, BoundFamily::Evertse).to_string(),
        );
    }

    println!("\nperiod bound over Q with t bad primes:");
    for t in 0..=3u32 {
        println!("  {} bad primes: period <= {}", t, ms_period_bound(t, 1));
    }
}
