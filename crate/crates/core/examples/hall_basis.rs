//! Hall bases of free Lie algebras, checked against the Witt formula.

use polyco::liealg::{generators_for, symbols};
use polyco::{hall_basis, witt_dimension, VertexSet};

fn main() {
    let basis = hall_basis(&symbols(2), 4);
    println!("Hall basis on x1, x2 through weight 4 ({} elements):", basis.len());
    for b in &basis {
        println!("  weight {}  {}", b.weight(), b.tree());
    }

    println!("\nmultidegree  Hall  Witt");
    for md in [[1, 1], [2, 1], [2, 2], [3, 2], [4, 2]] {
        let weight: usize = md.iter().sum();
        let count = hall_basis(&symbols(2), weight).iter().filter(|b| b.symbol_counts(2) == md).count();
        println!("{md:?}      {count:>4}  {:>4}", witt_dimension(&md));
    }

    // Face generators a_{J,i} of a triangle: J ⊆ {1,2,3}, |J| ≥ 2, 1 ≤ i < |J|.
    let letters = generators_for(VertexSet::full(3));
    let names: Vec<String> = letters.iter().map(|g| g.to_string()).collect();
    println!("\nface generators of Δ^2: {}", names.join(" "));
    println!("brackets of weight <= 2 on them: {}", hall_basis(&letters, 2).len());
}
