//! End-to-end analysis of a map, same pipeline as `arithdyn analyze`.
//!
//!     cargo run --example analyze_map
//!     cargo run --example analyze_map -- "(x^2-1)/(x^2+1)"

use arithdyn::bounds::BoundFamily;
use arithdyn::cli::analyze;
use arithdyn::point::PlaceSet;

fn main() {
    let expr = std::env::args().nth(1).unwrap_or_else(|| "x^2".into());
    let report = analyze(&expr, 4, BoundFamily::Evertse, &PlaceSet::empty())
        .unwrap_or_else(|e| panic!("analysis of {expr:?} failed: {e}"));
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
