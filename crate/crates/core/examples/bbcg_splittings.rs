//! Stable splittings of polyhedral products, next to the missing-face
//! indexing of the dual decomposition.

use polyco::decomp::{bbcg_cone_splitting, bbcg_wedge_splitting};
use polyco::{SimplicialComplex, SpaceExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    let circles = vec![SpaceExpr::sphere(1); 4];

    println!("ΣX^K over the faces of {square}:");
    for (face, summand) in bbcg_wedge_splitting(&square, &circles)? {
        println!("  {:?}  {summand}", face.to_vec());
    }
    println!("\nΣ(CX, X)^K over the missing faces (a moment-angle complex):");
    for (face, summand) in bbcg_cone_splitting(&square, &circles)? {
        println!("  {:?}  {summand}", face.to_vec());
    }
    Ok(())
}
