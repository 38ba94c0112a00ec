//! The example families of monic integer polynomials: (x-1)...(x-d)+x fixes
//! 1..d, prod(x^2-n^2)-x swaps n <-> -n, and an interpolated cubic realizes
//! a 2-cycle. Their periodic counts saturate the d+1 bound, and the cycle
//! identities (2e = a+b, equal sums across 2-cycles) hold exactly.

use arithdyn::cli::{dfixed_polynomial, format_polynomial, period2_polynomial};
use arithdyn::dynamics::periodic_points;
use arithdyn::exact::Int;
use arithdyn::parse::parse_map;
use arithdyn::verify::verify_baron;

fn main() {
    for d in 2..=6u32 {
        let coeffs = dfixed_polynomial(d);
        let map = parse_map(&format_polynomial(&coeffs)).unwrap();
        let pts = periodic_points(&map, 2).unwrap();
        println!(
            "d = {d}: {} has {} periodic points (bound d+1 = {})",
            format_polynomial(&coeffs),
            pts.len(),
            d + 1
        );
        assert_eq!(pts.len() as u32, d + 1);
    }

    let coeffs = period2_polynomial(&[1, 2, 3]).unwrap();
    let map = parse_map(&format_polynomial(&coeffs)).unwrap();
    let pts = periodic_points(&map, 2).unwrap();
    println!(
        "{}: {} points, periods {:?}",
        format_polynomial(&coeffs),
        pts.len(),
        pts.iter().map(|p| p.minimal_period).collect::<Vec<_>>()
    );

    // x^3 - 3x^2 + x + 2: 2-cycle (0, 2) around the fixed point 1
    let coeffs: Vec<Int> = [2i64, 1, -3, 1].iter().map(|&c| Int::from(c)).collect();
    let report = verify_baron(&coeffs, 2).unwrap();
    println!("[{:?}] {} — {}", report.status, report.claim, report.notes);
}
