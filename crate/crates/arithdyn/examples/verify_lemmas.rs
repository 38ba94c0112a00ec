//! The executable lemma checkers: distance preservation between periodic
//! points, S-integrality near ramified and tail points, and the three-point
//! condition count.

use arithdyn::parse::parse_map;
use arithdyn::point::{parse_point, PlaceSet, ProjPoint};
use arithdyn::verify::{
    check_distance_preservation, check_ramified_integrality, check_tail_integrality,
    condition_count,
};

fn pt(s: &str) -> ProjPoint {
    parse_point(s).unwrap()
}

fn main() {
    let s = PlaceSet::empty();

    // two points on the 2-cycle of (x^2-1)(x^2-4) - x
    let map = parse_map("(x^2-1)*(x^2-4)-x").unwrap();
    let r = check_distance_preservation(&map, &pt("1"), &pt("2"), &s).unwrap();
    println!("[{:?}] {}: {}", r.status, r.claim, r.subject);

    // 0 is a ramified fixed point of x^2; 1 is another periodic point
    let map = parse_map("x^2").unwrap();
    let r = check_ramified_integrality(&map, &pt("0"), &pt("1"), &s, 4).unwrap();
    println!("[{:?}] {}: {}", r.status, r.claim, r.subject);
    println!("    {}", r.notes);

    // -1 is a tail point: it maps to 1 together with the fixed point 1
    let r = check_tail_integrality(&map, &pt("1"), &pt("-1"), &pt("0"), &s, 4).unwrap();
    println!("[{:?}] {}: {}", r.status, r.claim, r.subject);

    // x^3 - x^2 with A = {0, inf}: both ramified, one extra preimage
    let map = parse_map("x^3-x^2").unwrap();
    let n = condition_count(&map, &[pt("0"), pt("inf")]).unwrap();
    println!("condition count of x^3-x^2 on A = {{0, inf}}: {n}");
}
