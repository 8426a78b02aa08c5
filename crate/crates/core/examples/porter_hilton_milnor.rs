//! Loop spaces of wedges: Porter's fibre and the Hilton–Milnor product.

use polyco::decomp::{hilton_milnor, porter_fiber, porter_loop_decomp, Bounds};
use polyco::SpaceExpr;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = SpaceExpr::sphere;
    println!("{}", porter_loop_decomp(&[s(3), s(3)])?);
    println!("fibre for three spaces: {}\n", porter_fiber(&[s(2), s(3), s(4)])?);

    // Ω(S^3 ∨ S^5) = Ω(ΣS^2 ∨ ΣS^4).
    let n = 12;
    let d = hilton_milnor(&[s(2), s(4)], Bounds::through_degree(n))?;
    println!("{d}");
    println!("series: {}", d.series(n)?);
    Ok(())
}
