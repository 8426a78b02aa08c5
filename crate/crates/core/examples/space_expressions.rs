//! Symbolic pointed spaces: normal forms and connectivity.

use polyco::spacexpr::AtomDecl;
use polyco::{conn, normalize, SpaceExpr};

fn show(label: &str, e: SpaceExpr) {
    let n = normalize(&e);
    let c = conn(&n).map(|c| format!("{c:?}")).unwrap_or_else(|err| err.to_string());
    println!("{label:<28} {e}  ~>  {n}   conn {c}");
}

fn main() {
    let s = SpaceExpr::sphere;
    show("smash of spheres", SpaceExpr::smash(vec![s(2), s(3)]));
    show("suspension", SpaceExpr::susp_n(s(2), 3));
    show("point absorbs", SpaceExpr::smash(vec![s(4), SpaceExpr::Point]));
    show("loop of a product", SpaceExpr::loop_of(SpaceExpr::product(vec![s(3), s(5)])));
    show("loop of CP^∞", SpaceExpr::loop_of(SpaceExpr::cp_infinity()));
    show("path space", SpaceExpr::contractible("PX"));
    let x = SpaceExpr::atom(AtomDecl::new("X", 2));
    show("cojoin of X and S^3", SpaceExpr::loop_of(SpaceExpr::susp(SpaceExpr::smash(vec![
        SpaceExpr::loop_of(x.clone()),
        SpaceExpr::loop_of(s(3)),
    ]))));
    show("nested wedge", SpaceExpr::wedge(vec![x.clone(), SpaceExpr::wedge(vec![s(2), SpaceExpr::Point])]));
    println!("\nJSON: {}", serde_json::to_string(&SpaceExpr::cp_infinity()).unwrap());
}
