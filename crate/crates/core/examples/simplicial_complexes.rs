//! Building complexes and asking the basic questions about them.

use polyco::{SimplicialComplex, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    println!("{square}");
    println!("  f-vector        {:?}", square.f_vector());
    println!("  homology ranks  {:?}", square.homology().ranks);
    println!("  flag            {}", square.is_flag());
    println!("  chordal         {}", square.has_chordal_1skeleton());
    println!("  missing faces   {}", square.missing_subsets().len());

    let diagonal = VertexSet::from_vertices([1, 3])?;
    let sub = square.full_subcomplex(diagonal)?;
    println!("  K_{{1,3}}         {} ~ wedge of spheres {:?}", sub.complex, sub.complex.wedge_of_spheres_type());

    for m in 3..=6 {
        let bd = SimplicialComplex::simplex_boundary(m);
        println!("∂Δ^{}: ranks {:?}, shifted {}", m - 1, bd.homology().ranks, bd.is_shifted());
    }

    let cone = square.join(&SimplicialComplex::simplex(1))?;
    println!("cone on the square: {cone}, acyclic {}", cone.homology().is_acyclic());
    println!("as JSON: {}", serde_json::to_string(&square)?);
    Ok(())
}
