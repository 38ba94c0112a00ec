//! Every periodic point preserves its chordal distance to four fixed anchor
//! points outside S; the set of all such points is finite and contains the
//! periodic points.

use arithdyn::parse::parse_map;
use arithdyn::point::{parse_point, PlaceSet, ProjPoint};
use arithdyn::dynamics::periodic_points;
use arithdyn::verify::four_point_membership;

fn main() {
    // (x-1)(x-2)(x-3) + x fixes 1, 2, 3 and infinity
    let map = parse_map("x^3-6x^2+12x-6").unwrap();
    let anchors: [ProjPoint; 4] = ["1", "2", "3", "inf"].map(|s| parse_point(s).unwrap());
    let s = PlaceSet::empty();

    for p in periodic_points(&map, 2).unwrap() {
        let inside = four_point_membership(&map, &anchors, &p.point, &s).unwrap();
        println!("{:>4} in the membership set: {inside}", p.point.to_string());
        assert!(inside);
    }

    // a non-periodic point can land outside
    let probe = parse_point("5").unwrap();
    println!(
        "{:>4} in the membership set: {}",
        "5",
        four_point_membership(&map, &anchors, &probe, &s).unwrap()
    );
}
