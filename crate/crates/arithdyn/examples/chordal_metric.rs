//! The p-adic chordal valuation on P^1(Q): delta_p(P,Q) is the p-adic
//! valuation of the cross term of normalized coprime coordinates, and
//! "S-integral with respect to Q" means delta_p = 0 outside S.

use arithdyn::exact::Int;
use arithdyn::point::{chordal_valuation, is_s_integral, parse_point, PlaceSet};

fn main() {
    let p = parse_point("5").unwrap();
    let q = parse_point("-3/7").unwrap();
    let inf = parse_point("inf").unwrap();

    for prime in [2i64, 3, 5, 7, 19] {
        let prime = Int::from(prime);
        println!(
            "delta_{prime}({p}, {q}) = {}   delta_{prime}({p}, inf) = {}",
            chordal_valuation(&p, &q, &prime),
            chordal_valuation(&p, &inf, &prime),
        );
    }

    // cross term of 5 = [5:1] and -3/7 = [-3:7] is 5*7 - (-3)*1 = 38 = 2 * 19
    let s = PlaceSet::from_i64(&[2, 19]);
    println!(
        "5 is S-integral w.r.t. -3/7 for S = {{2, 19}}: {}",
        is_s_integral(&p, &q, &s).unwrap()
    );
    println!(
        "... and for S = {{2}}: {}",
        is_s_integral(&p, &q, &PlaceSet::from_i64(&[2])).unwrap()
    );
}
