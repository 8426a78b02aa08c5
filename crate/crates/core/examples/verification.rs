//! Series checks of the decompositions against independent oracles.

use polyco::verify::{
    check_counterexample, check_disjoint_union, check_hilton_milnor, check_porter, check_wedge_case, render_table,
};
use polyco::{SimplicialComplex, SpaceExpr};

fn main() {
    let n = 12;
    let s = SpaceExpr::sphere;
    let mut reports = vec![
        check_hilton_milnor(&[s(3), s(5)], 24),
        check_hilton_milnor(&[s(2), s(2)], n),
        check_porter(&[s(2), s(2)], n),
        check_porter(&[s(3), s(3), s(3)], 10),
        check_wedge_case(&SimplicialComplex::simplex(3), &[s(2), s(2), s(2)], 10),
        check_disjoint_union(&SimplicialComplex::simplex(2), &SimplicialComplex::simplex(1), &[s(2), s(3), s(2)], 8),
        check_counterexample(5),
    ];
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    print!("{}", render_table(&reports));

    let counter = reports.iter().find(|r| r.name.starts_with("counterexample")).unwrap();
    println!("\n{}", serde_json::to_string_pretty(&counter.verdict).unwrap());
}
