//! Structural moves: apex removal, pullback squares and disjoint unions.

use polyco::decomp::{disjoint_union_decomp, join_vertex_reduce, pullback_square, Bounds, Pair, PairAssignment};
use polyco::{SimplicialComplex, SpaceExpr};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = SpaceExpr::sphere;

    // An apex whose domain is a point does not change the coproduct.
    let k = SimplicialComplex::build(2, &[vec![1], vec![2]])?;
    let cone = k.join(&SimplicialComplex::simplex(1))?;
    let pairs = PairAssignment::new(vec![Pair::constant(s(2)), Pair::constant(s(3)), Pair::new(SpaceExpr::Point, s(4))]);
    let (reduced, _) = join_vertex_reduce(&cone, &pairs, 3)?;
    println!("{cone} reduces to {reduced}\n");

    // Two edges glued along the empty complex.
    let k1 = SimplicialComplex::build(3, &[vec![1, 2]])?;
    let k2 = SimplicialComplex::build(3, &[vec![3]])?;
    let l = SimplicialComplex::empty(3);
    let pairs = PairAssignment::new(vec![Pair::new(s(3), s(2)), Pair::new(s(3), s(2)), Pair::new(s(4), s(2))]);
    println!("{}", pullback_square(&k1, &k2, &l, &pairs)?);

    let a = SimplicialComplex::simplex(2);
    let b = SimplicialComplex::simplex(1);
    let d = disjoint_union_decomp(&a, &b, &[s(2), s(3), s(4)], Bounds::through_degree(8))?;
    println!("{d}");
    Ok(())
}
