//! Exact enumeration of rational periodic points, cross-checked against a
//! brute-force orbit search over small starting points.

use arithdyn::dynamics::{orbit, periodic_points, periodic_points_by_search};
use arithdyn::parse::parse_map;

fn main() {
    // (x^2-1)(x^2-4) - x swaps 1 <-> -1 and 2 <-> -2
    let map = parse_map("(x^2-1)*(x^2-4)-x").unwrap();

    let pts = periodic_points(&map, 2).unwrap();
    println!("periodic points of {map} up to period 2:");
    for p in &pts {
        println!("  {}  (minimal period {})", p.point, p.minimal_period);
    }

    // independent oracle: iterate every [a:b] with |a|,|b| <= 50
    let oracle = periodic_points_by_search(&map, 2, 50);
    assert_eq!(pts, oracle);
    println!("brute-force search over |a|,|b| <= 50 agrees: {} points", oracle.len());

    let rec = orbit(&map, &arithdyn::point::parse_point("1").unwrap(), 6);
    println!(
        "orbit of 1: {}",
        rec.points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" -> ")
    );
}
