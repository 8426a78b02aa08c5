//! Ω(X,*)^K_co for a few complexes, including the square with CP^∞.

use polyco::decomp::{loop_decompose_wedge, Bounds};
use polyco::{SimplicialComplex, SpaceExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    let cp = vec![SpaceExpr::cp_infinity(); 4];
    println!("{}", loop_decompose_wedge(&square, &cp, Bounds::through_degree(12))?);

    let path = SimplicialComplex::build(3, &[vec![1, 2], vec![2, 3]])?;
    let spaces = [SpaceExpr::sphere(2), SpaceExpr::sphere(3), SpaceExpr::sphere(2)];
    let d = loop_decompose_wedge(&path, &spaces, 1)?;
    println!("{d}");

    let n = 8;
    let d = loop_decompose_wedge(&SimplicialComplex::simplex(3), &vec![SpaceExpr::sphere(2); 3], Bounds::through_degree(n))?;
    println!("Δ^2 with S^2's: {} factors, series {}", d.len(), d.series(n)?);
    Ok(())
}
