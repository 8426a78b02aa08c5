//! Exact truncated Poincaré series of loop spaces.

use polyco::{series_of, PoincareSeries, RationalSeries, SpaceExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 10;
    let s = SpaceExpr::sphere;
    let cases = [
        ("ΩS^3", SpaceExpr::loop_of(s(3))),
        ("Ω^2S^5", SpaceExpr::loop_n(s(5), 2)),
        ("Ω(S^2 ∨ S^2)", SpaceExpr::loop_of(SpaceExpr::wedge(vec![s(2), s(2)]))),
        ("Ω(S^3 ∨ S^5)", SpaceExpr::loop_of(SpaceExpr::wedge(vec![s(3), s(5)]))),
        ("CP^∞ × CP^∞", SpaceExpr::product(vec![SpaceExpr::cp_infinity(), SpaceExpr::cp_infinity()])),
    ];
    for (label, e) in cases {
        println!("{label:<14} {}", series_of(&e, n)?);
    }

    let p = PoincareSeries::from_ints(&[1, -1, -1], n);
    println!("\n1/(1 - t - t^2) = {}", p.invert()?);
    let r = RationalSeries::new(vec![1, 2, 1], vec![1, -2, -1]);
    println!("(1+t)^2/(1-2t-t^2) = {}", r.expand(n)?);

    // An atom without a declared loop series has no computable series.
    match series_of(&SpaceExpr::loop_of(SpaceExpr::named("Y", 1)), n) {
        Ok(s) => println!("ΩY = {s}"),
        Err(u) => println!("ΩY: unsupported ({u})"),
    }
    Ok(())
}
