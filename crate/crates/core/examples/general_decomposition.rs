//! The general theorem for arbitrary maps f_i: X_i → A_i, and the
//! diagram behind each factor.

use polyco::decomp::{coproduct_diagram, loop_decompose, Pair, PairAssignment};
use polyco::{SimplicialComplex, SpaceExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = SpaceExpr::sphere;
    let bd = SimplicialComplex::simplex_boundary(2);

    let pairs = PairAssignment::path_fibrations(&[s(3), s(3)]);
    let diagram = coproduct_diagram(&bd, &pairs)?;
    println!("diagram over cat(∂Δ^1)^op:");
    for o in &diagram.objects {
        println!("  D({:?}) = {}  ~  {}", o.face.to_vec(), o.raw, o.normalized);
    }

    // Constant maps on an edge agree with Porter.
    let edge = SimplicialComplex::simplex(2);
    println!("\n{}", loop_decompose(&edge, &PairAssignment::constant(&[s(3), s(4)]), 2)?);

    // A genuinely mixed pair stays a symbolic homotopy limit.
    let mixed = PairAssignment::new(vec![Pair::new(s(4), s(2)), Pair::path_fibration(s(3))]);
    let d = loop_decompose(&bd, &mixed, 1)?;
    println!("{d}");
    for f in d.factors.iter().filter(|f| f.diagram.is_some()) {
        let diagram = f.diagram.as_ref().unwrap();
        println!("{} is the limit of {} objects", f.text, diagram.objects.len());
    }
    Ok(())
}
