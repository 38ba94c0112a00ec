//! Bounded search for solutions of x + y = 1 in S-units, compared against
//! the explicit solution-count bound.

use arithdyn::bounds::{b_bound, BoundFamily};
use arithdyn::exact::Rat;
use arithdyn::point::PlaceSet;
use arithdyn::verify::solve_unit_equation_bounded;

fn main() {
    let one = Rat::from_integer(1.into());
    let s = PlaceSet::from_i64(&[2, 3]);

    let sols = solve_unit_equation_bounded(&one, &one, &s, 4).unwrap();
    println!("x + y = 1 with x, y in {{2,3}}-units, exponents up to 4:");
    for sol in &sols {
        println!("  x = {:>5}, y = {:>5}", sol.x, sol.y);
    }

    // s counts the archimedean place too: s = |{2,3}| + 1
    let bound = b_bound(s.s_value(), BoundFamily::Evertse);
    println!("{} solutions, bound B({}) = {}", sols.len(), s.s_value(), bound);
    assert!(bound.admits_count(sols.len() as u64));

    // without finite places the units are just +-1
    let sols = solve_unit_equation_bounded(&Rat::from_integer(2.into()), &one, &PlaceSet::empty(), 1)
        .unwrap();
    println!("2x + y = 1 over {{+-1}}: {:?}", sols.iter().map(|s| (s.x.as_str(), s.y.as_str())).collect::<Vec<_>>());
}
