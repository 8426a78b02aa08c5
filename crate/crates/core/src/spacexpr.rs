//! Formal pointed-space expressions and their canonical form.
//!
//! Expressions are plain trees. [`normalize`] rewrites a tree bottom-up with
//! smart constructors that each assume normalized children, so the result is
//! a fixed point of the rewrite system.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scomplex::SimplicialComplex;
use crate::series::RationalSeries;

/// Declaration of a named space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AtomDecl {
    pub name: String,
    /// Lower bound on connectivity.
    pub conn: i64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub contractible: bool,
    /// A space equivalent to the loop space of this atom, e.g. `S^1` for `CP^∞`.
    #[serde(default, rename = "loop", skip_serializing_if = "Option::is_none")]
    pub loop_replacement: Option<Box<SpaceExpr>>,
    /// Rational Poincaré series of the atom.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<RationalSeries>,
    /// Rational Poincaré series of its loop space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loop_series: Option<RationalSeries>,
}

impl AtomDecl {
    pub fn new(name: impl Into<String>, conn: i64) -> Self {
        AtomDecl {
            name: name.into(),
            conn,
            contractible: false,
            loop_replacement: None,
            series: None,
            loop_series: None,
        }
    }
}

/// A pointed-space expression. The variant order is the first key of the
/// total order used to sort children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceExpr {
    Point,
    Sphere {
        n: u32,
    },
    Atom(Arc<AtomDecl>),
    Loop {
        of: Box<SpaceExpr>,
        #[serde(default = "one")]
        times: u32,
    },
    Susp {
        of: Box<SpaceExpr>,
        #[serde(default = "one")]
        times: u32,
    },
    Smash {
        factors: Vec<SpaceExpr>,
    },
    Wedge {
        summands: Vec<SpaceExpr>,
    },
    Product {
        factors: Vec<SpaceExpr>,
    },
    /// `Map_*(Σ|K|, target)`; `label` names `K` in rendered output.
    #[serde(rename = "map")]
    MapFromSuspRealization {
        complex: SimplicialComplex,
        label: String,
        target: Box<SpaceExpr>,
    },
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnError {
    #[error("connectivity underflow: `{0}` is not path-connected (a simply-connected hypothesis fails upstream)")]
    Underflow(String),
}

/// A connectivity lower bound. `Infinite` is the contractible sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conn {
    Finite(i64),
    Infinite,
}

impl Conn {
    pub fn finite(self) -> Option<i64> {
        match self {
            Conn::Finite(c) => Some(c),
            Conn::Infinite => None,
        }
    }

    pub fn at_least(self, c: i64) -> bool {
        match self {
            Conn::Finite(x) => x >= c,
            Conn::Infinite => true,
        }
    }

    fn add(self, k: i64) -> Conn {
        match self {
            Conn::Finite(c) => Conn::Finite(c + k),
            Conn::Infinite => Conn::Infinite,
        }
    }
}

impl fmt::Display for Conn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conn::Finite(c) => write!(f, "{c}"),
            Conn::Infinite => f.write_str("∞"),
        }
    }
}

impl SpaceExpr {
    pub fn point() -> Self {
        SpaceExpr::Point
    }

    pub fn sphere(n: u32) -> Self {
        SpaceExpr::Sphere { n }
    }

    pub fn atom(decl: AtomDecl) -> Self {
        SpaceExpr::Atom(Arc::new(decl))
    }

    /// A named space with connectivity bound `conn` and nothing else known.
    pub fn named(name: impl Into<String>, conn: i64) -> Self {
        SpaceExpr::atom(AtomDecl::new(name, conn))
    }

    /// A contractible space, e.g. the path space `PX` or the cone `CX`.
    pub fn contractible(name: impl Into<String>) -> Self {
        SpaceExpr::atom(AtomDecl { contractible: true, ..AtomDecl::new(name, 0) })
    }

    /// `CP^∞`: simply connected, `ΩCP^∞ ≃ S^1`, series `1/(1-t²)`.
    pub fn cp_infinity() -> Self {
        SpaceExpr::atom(AtomDecl {
            loop_replacement: Some(Box::new(SpaceExpr::sphere(1))),
            series: Some(RationalSeries::new(vec![1], vec![1, 0, -1])),
            ..AtomDecl::new("CP^∞", 1)
        })
    }

    pub fn loop_of(e: SpaceExpr) -> Self {
        SpaceExpr::loop_n(e, 1)
    }

    pub fn loop_n(e: SpaceExpr, times: u32) -> Self {
        SpaceExpr::Loop { of: Box::new(e), times }
    }

    pub fn susp(e: SpaceExpr) -> Self {
        SpaceExpr::susp_n(e, 1)
    }

    pub fn susp_n(e: SpaceExpr, times: u32) -> Self {
        SpaceExpr::Susp { of: Box::new(e), times }
    }

    pub fn smash(factors: Vec<SpaceExpr>) -> Self {
        SpaceExpr::Smash { factors }
    }

    pub fn wedge(summands: Vec<SpaceExpr>) -> Self {
        SpaceExpr::Wedge { summands }
    }

    pub fn product(factors: Vec<SpaceExpr>) -> Self {
        SpaceExpr::Product { factors }
    }

    pub fn map_from(complex: SimplicialComplex, label: impl Into<String>, target: SpaceExpr) -> Self {
        SpaceExpr::MapFromSuspRealization { complex, label: label.into(), target: Box::new(target) }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, SpaceExpr::Point)
    }

    /// Children of the node, in order.
    pub fn children(&self) -> Vec<&SpaceExpr> {
        match self {
            SpaceExpr::Point | SpaceExpr::Sphere { .. } | SpaceExpr::Atom(_) => Vec::new(),
            SpaceExpr::Loop { of, .. } | SpaceExpr::Susp { of, .. } => vec![of],
            SpaceExpr::Smash { factors } | SpaceExpr::Product { factors } => factors.iter().collect(),
            SpaceExpr::Wedge { summands } => summands.iter().collect(),
            SpaceExpr::MapFromSuspRealization { target, .. } => vec![target],
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().into_iter().map(SpaceExpr::node_count).sum::<usize>()
    }

    /// Connectivity lower bound; see [`conn`].
    pub fn conn(&self) -> Result<Conn, ConnError> {
        conn(self)
    }

    pub fn normalized(&self) -> SpaceExpr {
        normalize(self)
    }
}

/// Rewrites `e` to canonical form.
pub fn normalize(e: &SpaceExpr) -> SpaceExpr {
    match e {
        SpaceExpr::Point => SpaceExpr::Point,
        SpaceExpr::Sphere { n } => SpaceExpr::Sphere { n: *n },
        SpaceExpr::Atom(decl) => {
            if decl.contractible {
                SpaceExpr::Point
            } else {
                e.clone()
            }
        }
        SpaceExpr::Loop { of, times } => mk_loop(normalize(of), *times),
        SpaceExpr::Susp { of, times } => mk_susp(normalize(of), *times),
        SpaceExpr::Smash { factors } => mk_smash(factors.iter().map(normalize).collect()),
        SpaceExpr::Wedge { summands } => mk_wedge(summands.iter().map(normalize).collect()),
        SpaceExpr::Product { factors } => mk_product(factors.iter().map(normalize).collect()),
        SpaceExpr::MapFromSuspRealization { complex, label, target } => {
            mk_map(complex.clone(), label.clone(), normalize(target))
        }
    }
}

/// Structural equality of canonical forms.
pub fn expr_equal(a: &SpaceExpr, b: &SpaceExpr) -> bool {
    normalize(a) == normalize(b)
}

fn mk_loop(e: SpaceExpr, times: u32) -> SpaceExpr {
    if times == 0 {
        return e;
    }
    match e {
        SpaceExpr::Point => SpaceExpr::Point,
        SpaceExpr::Loop { of, times: inner } => SpaceExpr::Loop { of, times: inner + times },
        SpaceExpr::Product { factors } => mk_product(factors.into_iter().map(|f| mk_loop(f, times)).collect()),
        SpaceExpr::Atom(ref decl) if decl.loop_replacement.is_some() => {
            let replacement = normalize(decl.loop_replacement.as_deref().expect("checked"));
            mk_loop(replacement, times - 1)
        }
        other => SpaceExpr::Loop { of: Box::new(other), times },
    }
}

fn mk_susp(e: SpaceExpr, times: u32) -> SpaceExpr {
    if times == 0 {
        return e;
    }
    match e {
        SpaceExpr::Point => SpaceExpr::Point,
        SpaceExpr::Sphere { n } => SpaceExpr::Sphere { n: n + times },
        SpaceExpr::Susp { of, times: inner } => SpaceExpr::Susp { of, times: inner + times },
        other => SpaceExpr::Susp { of: Box::new(other), times },
    }
}

/// Smash with suspension coordinates pulled out: `S^a ∧ Σ^b X ∧ Y = Σ^{a+b}(X ∧ Y)`.
fn mk_smash(children: Vec<SpaceExpr>) -> SpaceExpr {
    let mut shift = 0u32;
    let mut rest = Vec::new();
    let mut stack = children;
    while let Some(c) = stack.pop() {
        match c {
            SpaceExpr::Point => return SpaceExpr::Point,
            SpaceExpr::Sphere { n } => shift += n,
            SpaceExpr::Susp { of, times } => {
                shift += times;
                stack.push(*of);
            }
            SpaceExpr::Smash { factors } => stack.extend(factors),
            other => rest.push(other),
        }
    }
    rest.sort();
    let core = match rest.len() {
        0 => return SpaceExpr::Sphere { n: shift },
        1 => rest.pop().expect("one element"),
        _ => SpaceExpr::Smash { factors: rest },
    };
    mk_susp(core, shift)
}

fn flatten_assoc(children: Vec<SpaceExpr>, is_same: fn(&SpaceExpr) -> bool) -> Vec<SpaceExpr> {
    let mut out = Vec::new();
    for c in children {
        if c.is_point() {
            continue;
        }
        if is_same(&c) {
            match c {
                SpaceExpr::Wedge { summands: xs } | SpaceExpr::Product { factors: xs } => out.extend(xs),
                _ => unreachable!("is_same only matches associative nodes"),
            }
        } else {
            out.push(c);
        }
    }
    out.sort();
    out
}

fn mk_wedge(children: Vec<SpaceExpr>) -> SpaceExpr {
    let mut xs = flatten_assoc(children, |c| matches!(c, SpaceExpr::Wedge { .. }));
    match xs.len() {
        0 => SpaceExpr::Point,
        1 => xs.pop().expect("one element"),
        _ => SpaceExpr::Wedge { summands: xs },
    }
}

fn mk_product(children: Vec<SpaceExpr>) -> SpaceExpr {
    let mut xs = flatten_assoc(children, |c| matches!(c, SpaceExpr::Product { .. }));
    match xs.len() {
        0 => SpaceExpr::Point,
        1 => xs.pop().expect("one element"),
        _ => SpaceExpr::Product { factors: xs },
    }
}

/// `Map_*(Σ|K|, X)`: with `|K| ≃ ∨ S^{d_j}`, `Σ|K| ≃ ∨ S^{d_j+1}` and the
/// mapping space splits as `∏ Ω^{d_j+1} X`.
fn mk_map(complex: SimplicialComplex, label: String, target: SpaceExpr) -> SpaceExpr {
    if target.is_point() {
        return SpaceExpr::Point;
    }
    match complex.wedge_of_spheres_type() {
        Some(dims) => mk_product(dims.into_iter().map(|d| mk_loop(target.clone(), (d + 1) as u32)).collect()),
        None => SpaceExpr::MapFromSuspRealization { complex, label, target: Box::new(target) },
    }
}

/// Connectivity lower bound of `e`.
///
/// Looping a space whose bound is below 1 is reported as an error: the
/// result would not be path-connected, which means a simple-connectivity
/// hypothesis was violated before this point.
pub fn conn(e: &SpaceExpr) -> Result<Conn, ConnError> {
    Ok(match e {
        SpaceExpr::Point => Conn::Infinite,
        SpaceExpr::Sphere { n } => Conn::Finite(*n as i64 - 1),
        SpaceExpr::Atom(decl) => {
            if decl.contractible {
                Conn::Infinite
            } else {
                Conn::Finite(decl.conn)
            }
        }
        SpaceExpr::Loop { of, times } => {
            let c = conn(of)?.add(-(*times as i64));
            if !c.at_least(0) {
                return Err(ConnError::Underflow(render(e)));
            }
            c
        }
        SpaceExpr::Susp { of, times } => conn(of)?.add(*times as i64),
        SpaceExpr::Smash { factors } => {
            let mut total = Conn::Finite(factors.len() as i64 - 1);
            for f in factors {
                total = match (total, conn(f)?) {
                    (Conn::Finite(a), Conn::Finite(b)) => Conn::Finite(a + b),
                    _ => Conn::Infinite,
                };
            }
            if factors.is_empty() {
                Conn::Finite(-1)
            } else {
                total
            }
        }
        SpaceExpr::Wedge { summands: xs } | SpaceExpr::Product { factors: xs } => {
            let mut lowest = Conn::Infinite;
            for x in xs {
                lowest = lowest.min(conn(x)?);
            }
            lowest
        }
        SpaceExpr::MapFromSuspRealization { complex, target, .. } => {
            let top = match complex.wedge_of_spheres_type() {
                Some(dims) => dims.into_iter().max().map_or(-1, |d| d + 1),
                None => complex.dim() + 1,
            };
            match conn(target)? {
                Conn::Infinite => Conn::Infinite,
                Conn::Finite(c) => Conn::Finite((c - top).max(-1)),
            }
        }
    })
}

/// Like [`conn`], but a loop of a space that may be disconnected gets the
/// trivial bound −1 instead of an error.
pub fn conn_bound(e: &SpaceExpr) -> Conn {
    match e {
        SpaceExpr::Loop { of, times } => match conn_bound(of).add(-(*times as i64)) {
            Conn::Finite(c) => Conn::Finite(c.max(-1)),
            Conn::Infinite => Conn::Infinite,
        },
        SpaceExpr::Susp { of, times } => conn_bound(of).add(*times as i64),
        SpaceExpr::Smash { factors } if !factors.is_empty() => {
            let mut total = Conn::Finite(factors.len() as i64 - 1);
            for f in factors {
                total = match (total, conn_bound(f)) {
                    (Conn::Finite(a), Conn::Finite(b)) => Conn::Finite(a + b),
                    _ => Conn::Infinite,
                };
            }
            total
        }
        SpaceExpr::Wedge { summands: xs } | SpaceExpr::Product { factors: xs } => {
            xs.iter().map(conn_bound).min().unwrap_or(Conn::Infinite)
        }
        SpaceExpr::MapFromSuspRealization { complex, target, .. } => {
            let top = match complex.wedge_of_spheres_type() {
                Some(dims) => dims.into_iter().max().map_or(-1, |d| d + 1),
                None => complex.dim() + 1,
            };
            match conn_bound(target) {
                Conn::Infinite => Conn::Infinite,
                Conn::Finite(c) => Conn::Finite((c - top).max(-1)),
            }
        }
        _ => conn(e).expect("leaf connectivity never underflows"),
    }
}

/// Text rendering in the usual notation: `Ω`, `Σ`, `∧`, `∨`, `×`, `S^n`,
/// `Map_*(Σ|K|, X)`. Runs of equal children print as powers.
pub fn render(e: &SpaceExpr) -> String {
    match e {
        SpaceExpr::Point => "*".to_string(),
        SpaceExpr::Sphere { n } => format!("S^{n}"),
        SpaceExpr::Atom(decl) => decl.name.clone(),
        SpaceExpr::Loop { of, times } => format!("{}{}", prefix("Ω", *times), operand(of)),
        SpaceExpr::Susp { of, times } => format!("{}{}", prefix("Σ", *times), operand(of)),
        SpaceExpr::Smash { factors } => join_runs(factors, " ∧ ", "∧"),
        SpaceExpr::Wedge { summands } => join_runs(summands, " ∨ ", "∨"),
        SpaceExpr::Product { factors } => join_runs(factors, " × ", "×"),
        SpaceExpr::MapFromSuspRealization { label, target, .. } => {
            format!("Map_*(Σ|{label}|, {})", render(target))
        }
    }
}

fn prefix(symbol: &str, times: u32) -> String {
    if times == 1 {
        symbol.to_string()
    } else {
        format!("{symbol}^{times}")
    }
}

fn is_compound(e: &SpaceExpr) -> bool {
    matches!(e, SpaceExpr::Smash { .. } | SpaceExpr::Wedge { .. } | SpaceExpr::Product { .. })
}

fn operand(e: &SpaceExpr) -> String {
    if is_compound(e) {
        format!("({})", render(e))
    } else {
        render(e)
    }
}

fn join_runs(xs: &[SpaceExpr], sep: &str, power: &str) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i + 1;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        let text = render(&xs[i]);
        let base = if is_compound(&xs[i]) || text.contains('^') || matches!(xs[i], SpaceExpr::Loop { .. } | SpaceExpr::Susp { .. }) {
            format!("({text})")
        } else {
            text
        };
        let base = if j - i > 1 { format!("{base}^{{{power}{}}}", j - i) } else { operand(&xs[i]) };
        parts.push(base);
        i = j;
    }
    parts.join(sep)
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> SpaceExpr {
        SpaceExpr::sphere(n)
    }

    #[test]
    fn sphere_arithmetic() {
        assert_eq!(normalize(&SpaceExpr::smash(vec![s(2), s(3)])), s(5));
        assert_eq!(normalize(&SpaceExpr::susp(s(4))), s(5));
        let x = SpaceExpr::named("X", 1);
        assert_eq!(normalize(&SpaceExpr::smash(vec![s(0), x.clone()])), x);
        assert_eq!(normalize(&SpaceExpr::smash(vec![x.clone(), SpaceExpr::Point])), SpaceExpr::Point);
        assert_eq!(
            normalize(&SpaceExpr::smash(vec![s(1), x.clone()])),
            SpaceExpr::susp(x.clone())
        );
    }

    #[test]
    fn absorbing_and_unit() {
        let x = SpaceExpr::named("X", 1);
        assert_eq!(normalize(&SpaceExpr::wedge(vec![SpaceExpr::Point, x.clone()])), x);
        assert_eq!(normalize(&SpaceExpr::product(vec![])), SpaceExpr::Point);
        assert_eq!(normalize(&SpaceExpr::susp(SpaceExpr::Point)), SpaceExpr::Point);
        assert_eq!(normalize(&SpaceExpr::loop_of(SpaceExpr::Point)), SpaceExpr::Point);
        assert_eq!(normalize(&SpaceExpr::contractible("PX")), SpaceExpr::Point);
    }

    #[test]
    fn loops_distribute_over_products() {
        let p = SpaceExpr::product(vec![s(3), s(5)]);
        assert_eq!(
            normalize(&SpaceExpr::loop_of(p)),
            SpaceExpr::product(vec![SpaceExpr::loop_of(s(3)), SpaceExpr::loop_of(s(5))])
        );
        assert_eq!(normalize(&SpaceExpr::loop_of(SpaceExpr::loop_of(s(5)))), SpaceExpr::loop_n(s(5), 2));
    }

    #[test]
    fn loop_replacement() {
        assert_eq!(normalize(&SpaceExpr::loop_of(SpaceExpr::cp_infinity())), s(1));
        assert_eq!(
            normalize(&SpaceExpr::loop_n(SpaceExpr::cp_infinity(), 2)),
            SpaceExpr::loop_of(s(1))
        );
    }

    #[test]
    fn map_from_two_points_is_loop() {
        let w = SpaceExpr::susp(SpaceExpr::named("W", 1));
        let e = SpaceExpr::map_from(SimplicialComplex::discrete(2), "K", w.clone());
        assert_eq!(normalize(&e), SpaceExpr::loop_of(w));
    }

    #[test]
    fn map_from_simplex_is_point_and_void_is_identity() {
        let w = s(3);
        assert_eq!(normalize(&SpaceExpr::map_from(SimplicialComplex::simplex(3), "K", w.clone())), SpaceExpr::Point);
        assert_eq!(normalize(&SpaceExpr::map_from(SimplicialComplex::empty(0), "K", w.clone())), w);
    }

    #[test]
    fn uncertified_map_stays_symbolic() {
        // Boundary of the octahedron: flag but not chordal, and not shifted.
        let facets: Vec<Vec<usize>> =
            [1, 2].iter().flat_map(|&a| [3, 4].iter().flat_map(move |&b| [5, 6].map(|c| vec![a, b, c]))).collect();
        let k = SimplicialComplex::build(6, &facets).unwrap();
        assert!(k.wedge_of_spheres_type().is_none());
        let e = normalize(&SpaceExpr::map_from(k, "K", s(4)));
        assert!(matches!(e, SpaceExpr::MapFromSuspRealization { .. }));
    }

    #[test]
    fn equality_ignores_order() {
        let x = SpaceExpr::named("X", 1);
        let y = SpaceExpr::named("Y", 2);
        assert!(expr_equal(
            &SpaceExpr::wedge(vec![x.clone(), y.clone()]),
            &SpaceExpr::wedge(vec![y.clone(), x.clone()])
        ));
        assert!(!expr_equal(&SpaceExpr::wedge(vec![x.clone(), y.clone()]), &SpaceExpr::product(vec![x, y])));
    }

    #[test]
    fn connectivity() {
        assert_eq!(conn(&SpaceExpr::loop_of(s(3))).unwrap(), Conn::Finite(1));
        let ls3 = SpaceExpr::loop_of(s(3));
        assert_eq!(conn(&SpaceExpr::smash(vec![ls3.clone(), ls3])).unwrap(), Conn::Finite(3));
        assert_eq!(conn(&SpaceExpr::Point).unwrap(), Conn::Infinite);
        assert!(matches!(conn(&SpaceExpr::loop_of(s(1))), Err(ConnError::Underflow(_))));
        assert_eq!(conn(&SpaceExpr::loop_of(s(2))).unwrap(), Conn::Finite(0));
    }

    #[test]
    fn rendering() {
        let ls3 = SpaceExpr::loop_of(s(3));
        let e = normalize(&SpaceExpr::loop_of(SpaceExpr::susp(SpaceExpr::smash(vec![ls3.clone(), ls3]))));
        assert_eq!(e.to_string(), "ΩΣ((ΩS^3)^{∧2})");
        assert_eq!(SpaceExpr::loop_n(s(5), 2).to_string(), "Ω^2S^5");
    }

    #[test]
    fn json_shape() {
        let e: SpaceExpr = serde_json::from_str(r#"{"kind":"loop","of":{"kind":"sphere","n":3}}"#).unwrap();
        assert_eq!(e, SpaceExpr::loop_of(s(3)));
        let cp = SpaceExpr::cp_infinity();
        let text = serde_json::to_string(&cp).unwrap();
        assert_eq!(serde_json::from_str::<SpaceExpr>(&text).unwrap(), cp);
    }
}
