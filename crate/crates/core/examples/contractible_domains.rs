//! Path fibrations PA_i → A_i: only brackets on missing faces survive.

use polyco::decomp::{loop_decompose_contractible, Bounds, PairAssignment};
use polyco::{SimplicialComplex, SpaceExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = PairAssignment::path_fibrations(&[SpaceExpr::sphere(3), SpaceExpr::sphere(4)]);
    println!("{}", loop_decompose_contractible(&SimplicialComplex::simplex_boundary(2), &pairs, 3)?);

    let bd = SimplicialComplex::simplex_boundary(3);
    let pairs = PairAssignment::path_fibrations(&vec![SpaceExpr::sphere(2); 3]);
    let d = loop_decompose_contractible(&bd, &pairs, Bounds::weight(4).with_degree(8))?;
    println!("∂Δ^2 with S^2's: {} factors, first few:", d.len());
    for f in d.factors.iter().take(4) {
        println!("  {}  [{}]", f.text, f.provenance);
    }

    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    let pairs = PairAssignment::path_fibrations(&vec![SpaceExpr::sphere(3); 4]);
    let d = loop_decompose_contractible(&square, &pairs, Bounds::weight(2))?;
    println!("\n{d}");
    Ok(())
}
