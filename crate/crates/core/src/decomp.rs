//! Loop-space decompositions of polyhedral coproducts.
//!
//! A polyhedral coproduct `f_co^K` is the homotopy limit over `cat(K)^op` of
//! the wedges `D(σ) = ∨ Y_i(σ)` with `Y_i(σ) = X_i` for `i ∈ σ` and `A_i`
//! otherwise. Each operation here returns its factors as normalized space
//! expressions, tagged with where they came from.
//!
//! Bracket-indexed products are infinite, so every operation takes
//! [`Bounds`]: a weight bound `W`, and optionally a degree `N` below which
//! factors are kept. A factor whose connectivity is at least `N` has the same
//! rational homology as a point through degree `N` and is omitted; the
//! omission is exact for every degree-`N` series check.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liealg::{generators_for, hall_basis_within, symbols, Bracket, Generator};
use crate::scomplex::{ComplexError, SimplicialComplex, VertexSet};
use crate::series::{series_of, PoincareSeries, Unsupported};
use crate::spacexpr::{conn, conn_bound, normalize, AtomDecl, Conn, ConnError, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("expected {expected} spaces (one per vertex), got {got}")]
    Arity { expected: usize, got: usize },
    #[error("vertex {vertex}: {role} `{expr}` is not simply connected")]
    NotSimplyConnected { vertex: usize, role: &'static str, expr: String },
    #[error("vertex {vertex}: `{expr}` is not connected")]
    NotConnected { vertex: usize, expr: String },
    #[error("vertex {vertex}: domain `{expr}` is not contractible")]
    DomainNotContractible { vertex: usize, expr: String },
    #[error("vertex {vertex} is not a cone point of the complex")]
    NotApex { vertex: usize },
    #[error("the weight bound must be at least 1")]
    ZeroWeightBound,
    #[error("the weight vector is identically zero")]
    ZeroWeights,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Connectivity(#[from] ConnError),
    #[error("internal invariant failed: factor `{factor}` of weight {weight} has connectivity {conn} < {required}")]
    TruncationSoundness { factor: String, weight: usize, conn: String, required: i64 },
}

/// One map `f_i: X_i → A_i`, recorded by its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair {
    pub domain: SpaceExpr,
    pub codomain: SpaceExpr,
    pub domain_contractible: bool,
    pub codomain_is_point: bool,
    pub simply_connected: bool,
}

fn simply_connected(e: &SpaceExpr) -> bool {
    conn(e).map(|c| c.at_least(1)).unwrap_or(false)
}

impl Pair {
    pub fn new(domain: SpaceExpr, codomain: SpaceExpr) -> Self {
        let domain_contractible = normalize(&domain).is_point();
        Self::with_flags(domain, codomain, domain_contractible)
    }

    /// A pair whose domain is asserted to be contractible even if its
    /// expression does not say so.
    pub fn with_flags(domain: SpaceExpr, codomain: SpaceExpr, domain_contractible: bool) -> Self {
        let domain_contractible = domain_contractible || normalize(&domain).is_point();
        let codomain_is_point = normalize(&codomain).is_point();
        let simply_connected = (domain_contractible || simply_connected(&domain)) && simply_connected(&codomain);
        Pair { domain, codomain, domain_contractible, codomain_is_point, simply_connected }
    }

    /// `X → *`.
    pub fn constant(x: SpaceExpr) -> Self {
        Pair::new(x, SpaceExpr::Point)
    }

    /// The path fibration `PX → X`.
    pub fn path_fibration(x: SpaceExpr) -> Self {
        let name = format!("P{}", operand_name(&x));
        Pair::new(SpaceExpr::contractible(name), x)
    }

    /// `X_i` in canonical form (a point when contractible).
    pub fn x(&self) -> SpaceExpr {
        if self.domain_contractible {
            SpaceExpr::Point
        } else {
            normalize(&self.domain)
        }
    }

    /// `A_i` in canonical form.
    pub fn a(&self) -> SpaceExpr {
        normalize(&self.codomain)
    }
}

fn operand_name(e: &SpaceExpr) -> String {
    match e {
        SpaceExpr::Sphere { .. } | SpaceExpr::Atom(_) | SpaceExpr::Point => e.to_string(),
        _ => format!("({e})"),
    }
}

/// The maps `f_1..f_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAssignment {
    pub pairs: Vec<Pair>,
}

impl PairAssignment {
    pub fn new(pairs: Vec<Pair>) -> Self {
        PairAssignment { pairs }
    }

    /// `(X, *)`: every map is `X_i → *`.
    pub fn constant(spaces: &[SpaceExpr]) -> Self {
        PairAssignment { pairs: spaces.iter().cloned().map(Pair::constant).collect() }
    }

    /// `(PX, X)`: every map is a path fibration.
    pub fn path_fibrations(spaces: &[SpaceExpr]) -> Self {
        PairAssignment { pairs: spaces.iter().cloned().map(Pair::path_fibration).collect() }
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    /// Pair of vertex `v` (1-based).
    pub fn pair(&self, v: usize) -> &Pair {
        &self.pairs[v - 1]
    }

    /// The pairs of the vertices in `subset`, in order.
    pub fn restrict(&self, subset: VertexSet) -> PairAssignment {
        PairAssignment { pairs: subset.iter().map(|v| self.pair(v).clone()).collect() }
    }

    fn check_arity(&self, k: &SimplicialComplex) -> Result<(), DecompError> {
        if self.m() != k.m() {
            return Err(DecompError::Arity { expected: k.m(), got: self.m() });
        }
        Ok(())
    }

    fn check_simply_connected(&self) -> Result<(), DecompError> {
        for (i, p) in self.pairs.iter().enumerate() {
            if !p.domain_contractible && !simply_connected(&p.domain) {
                return Err(DecompError::NotSimplyConnected {
                    vertex: i + 1,
                    role: "domain",
                    expr: p.domain.to_string(),
                });
            }
            if !simply_connected(&p.codomain) {
                return Err(DecompError::NotSimplyConnected {
                    vertex: i + 1,
                    role: "codomain",
                    expr: p.codomain.to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Weight bound `W` on brackets and optional degree `N` of interest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub weight: usize,
    pub degree: Option<usize>,
}

impl Bounds {
    pub fn weight(weight: usize) -> Self {
        Bounds { weight, degree: None }
    }

    /// Everything relevant through degree `n`: `W = n + 1`.
    pub fn through_degree(n: usize) -> Self {
        Bounds { weight: n + 1, degree: Some(n) }
    }

    pub fn with_degree(self, n: usize) -> Self {
        Bounds { degree: Some(n), ..self }
    }

    fn check(&self) -> Result<(), DecompError> {
        if self.weight == 0 {
            return Err(DecompError::ZeroWeightBound);
        }
        Ok(())
    }

    /// Whether a factor with this connectivity can be seen through degree `N`.
    fn visible(&self, c: Conn) -> bool {
        match (self.degree, c) {
            (None, _) => true,
            (Some(_), Conn::Infinite) => false,
            (Some(n), Conn::Finite(c)) => c < n as i64,
        }
    }
}

impl From<usize> for Bounds {
    fn from(weight: usize) -> Self {
        Bounds::weight(weight)
    }
}

/// Where a factor comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Vertex { vertex: usize },
    Base,
    Face { face: VertexSet },
    Bracket { bracket: Bracket, support: VertexSet },
}

impl Provenance {
    fn bracket(b: &Bracket) -> Self {
        Provenance::Bracket { bracket: b.clone(), support: b.support() }
    }

    fn shifted(&self, offset: usize) -> Self {
        match self {
            Provenance::Vertex { vertex } => Provenance::Vertex { vertex: vertex + offset },
            Provenance::Base => Provenance::Base,
            Provenance::Face { face } => Provenance::Face { face: face.shifted(offset) },
            Provenance::Bracket { bracket, support } => {
                Provenance::Bracket { bracket: bracket.shift_vertices(offset), support: support.shifted(offset) }
            }
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Vertex { vertex } => write!(f, "vertex {vertex}"),
            Provenance::Base => f.write_str("base"),
            Provenance::Face { face } => write!(f, "face {face}"),
            Provenance::Bracket { bracket, support } => write!(f, "bracket {bracket} on {support}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `Ω(∨X_i) ≃ ∏ΩX_i × Ω(fibre wedge)`.
    Porter,
    /// `Ω(∨ΣX_i) ≃ ∏_b ΩΣ(X^{∧k(b)})`.
    HiltonMilnor,
    /// Arbitrary maps of simply connected spaces.
    General,
    /// All `A_i = *`.
    WedgeCase,
    /// All domains contractible.
    ContractibleDomain,
    /// `K = K_1 ⊔ K_2` with all `A_i = *`.
    DisjointUnion,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Porter => "porter",
            Theorem::HiltonMilnor => "hilton-milnor",
            Theorem::General => "general",
            Theorem::WedgeCase => "wedge-case",
            Theorem::ContractibleDomain => "contractible-domain",
            Theorem::DisjointUnion => "disjoint-union",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub text: String,
    pub expr: SpaceExpr,
    pub multiplicity: usize,
    pub provenance: Provenance,
    /// Bracket weight; 0 for factors not indexed by a bracket.
    pub weight: usize,
    /// Connectivity lower bound; `None` when contractible.
    pub conn: Option<i64>,
    /// The smash-coproduct diagram of a factor left as an unevaluated limit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramDescription>,
}

impl Factor {
    fn new(expr: SpaceExpr, provenance: Provenance, weight: usize) -> Self {
        let conn = conn_bound(&expr).finite();
        Factor { text: expr.to_string(), expr, multiplicity: 1, provenance, weight, conn, diagram: None }
    }

    pub fn series(&self, n: usize) -> Result<PoincareSeries, Unsupported> {
        let s = series_of(&self.expr, n).map_err(|u| u.context(format!("factor `{}` ({})", self.text, self.provenance)))?;
        Ok(s.pow(self.multiplicity))
    }
}

/// A finite product of factors, with the bounds used to produce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub theorem: Theorem,
    pub factors: Vec<Factor>,
    pub weight_bound: Option<usize>,
    pub degree_bound: Option<usize>,
    /// Contractible factors that were left out.
    pub dropped_point_factors: usize,
}

impl Decomposition {
    fn new(theorem: Theorem, bounds: Option<Bounds>) -> Self {
        Decomposition {
            theorem,
            factors: Vec::new(),
            weight_bound: bounds.map(|b| b.weight),
            degree_bound: bounds.and_then(|b| b.degree),
            dropped_point_factors: 0,
        }
    }

    /// Adds a factor unless it is a point (counted) or invisible at the degree bound.
    fn push(&mut self, factor: Factor, bounds: Option<&Bounds>) {
        if factor.expr.is_point() {
            self.dropped_point_factors += 1;
            return;
        }
        let c = factor.conn.map_or(Conn::Infinite, Conn::Finite);
        if bounds.is_some_and(|b| !b.visible(c)) {
            return;
        }
        self.factors.push(factor);
    }

    fn finish(mut self) -> Self {
        self.factors.sort_by(|a, b| a.provenance.cmp(&b.provenance).then_with(|| a.expr.cmp(&b.expr)));
        self
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors as a multiset of expressions.
    pub fn multiset(&self) -> BTreeMap<SpaceExpr, usize> {
        let mut out = BTreeMap::new();
        for f in &self.factors {
            *out.entry(f.expr.clone()).or_insert(0) += f.multiplicity;
        }
        out
    }

    pub fn bracket_factors(&self) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(|f| matches!(f.provenance, Provenance::Bracket { .. }))
    }

    /// Poincaré series of the product of all factors.
    pub fn series(&self, n: usize) -> Result<PoincareSeries, Unsupported> {
        let mut acc = PoincareSeries::one(n);
        for f in &self.factors {
            acc = acc.mul(&f.series(n)?).map_err(Unsupported::from)?;
        }
        Ok(acc)
    }

    /// The product as one expression.
    pub fn product_expr(&self) -> SpaceExpr {
        let mut xs = Vec::new();
        for f in &self.factors {
            xs.extend(std::iter::repeat_n(f.expr.clone(), f.multiplicity));
        }
        normalize(&SpaceExpr::product(xs))
    }

    /// Checks `conn(factor) ≥ weight` for every bracket factor.
    pub fn check_truncation_soundness(&self) -> Result<(), DecompError> {
        self.check_weight_connectivity(|w| w as i64)
    }

    fn check_weight_connectivity(&self, required: impl Fn(usize) -> i64) -> Result<(), DecompError> {
        for f in self.bracket_factors() {
            let need = required(f.weight);
            if f.conn.is_some_and(|c| c < need) {
                return Err(DecompError::TruncationSoundness {
                    factor: f.text.clone(),
                    weight: f.weight,
                    conn: f.conn.map_or("∞".into(), |c| c.to_string()),
                    required: need,
                });
            }
        }
        Ok(())
    }

    /// Text report, one factor per line.
    pub fn render(&self) -> String {
        let mut out = format!("theorem: {}\n", self.theorem);
        if let Some(w) = self.weight_bound {
            out += &format!("weight bound W: {w}\n");
        }
        if let Some(n) = self.degree_bound {
            out += &format!("degree bound N: {n} (factors with connectivity >= N omitted)\n");
        }
        out += &format!("factors: {}", self.factors.len());
        if self.dropped_point_factors > 0 {
            out += &format!(" (+{} contractible)", self.dropped_point_factors);
        }
        out.push('\n');
        let width = self.factors.iter().map(|f| f.text.chars().count()).max().unwrap_or(0);
        for f in &self.factors {
            let pad = width - f.text.chars().count();
            let mult = if f.multiplicity > 1 { format!(" ×{}", f.multiplicity) } else { String::new() };
            out += &format!("  {}{}{}  [{}]\n", f.text, " ".repeat(pad), mult, f.provenance);
        }
        out
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An object of a face-indexed diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramObject {
    pub face: VertexSet,
    pub raw: SpaceExpr,
    pub normalized: SpaceExpr,
}

/// The map `D(σ) → D(τ)` for `τ ⊂ σ`: coordinates in `via_map` use `f_i`,
/// all others the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramMorphism {
    pub source: VertexSet,
    pub target: VertexSet,
    pub via_map: VertexSet,
    pub identity: VertexSet,
}

/// A diagram over `cat(K)^op`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDescription {
    pub complex: SimplicialComplex,
    pub objects: Vec<DiagramObject>,
    pub morphisms: Vec<DiagramMorphism>,
}

impl DiagramDescription {
    fn build(k: &SimplicialComplex, object: impl Fn(VertexSet) -> SpaceExpr) -> Self {
        let faces = k.faces();
        let objects = faces
            .iter()
            .map(|&face| {
                let raw = object(face);
                let normalized = normalize(&raw);
                DiagramObject { face, raw, normalized }
            })
            .collect();
        let ground = VertexSet::full(k.m());
        let mut morphisms = Vec::new();
        for &sigma in &faces {
            for &tau in &faces {
                if tau != sigma && tau.is_subset(sigma) {
                    let via = sigma.difference(tau);
                    morphisms.push(DiagramMorphism {
                        source: sigma,
                        target: tau,
                        via_map: via,
                        identity: ground.difference(via),
                    });
                }
            }
        }
        DiagramDescription { complex: k.clone(), objects, morphisms }
    }

    pub fn object(&self, face: VertexSet) -> Option<&DiagramObject> {
        self.objects.iter().find(|o| o.face == face)
    }

    /// Lower bound on the connectivity of the homotopy limit: objects'
    /// connectivity minus the dimension of the nerve of `cat(K)`.
    fn holim_conn_bound(&self) -> Conn {
        let lowest = self.objects.iter().map(|o| conn_bound(&o.normalized)).min().unwrap_or(Conn::Infinite);
        match lowest {
            Conn::Infinite => Conn::Infinite,
            Conn::Finite(c) => Conn::Finite((c - (self.complex.dim() + 1)).max(-1)),
        }
    }
}

fn y(pairs: &PairAssignment, face: VertexSet, i: usize) -> SpaceExpr {
    let p = pair_of(pairs, i);
    if face.contains(i) {
        p.domain.clone()
    } else {
        p.codomain.clone()
    }
}

fn pair_of(pairs: &PairAssignment, i: usize) -> &Pair {
    pairs.pair(i)
}

/// The diagram `σ ↦ D(σ) = ∨ Y_i(σ)` defining `f_co^K`.
pub fn coproduct_diagram(k: &SimplicialComplex, pairs: &PairAssignment) -> Result<DiagramDescription, DecompError> {
    pairs.check_arity(k)?;
    Ok(DiagramDescription::build(k, |face| {
        SpaceExpr::wedge((1..=k.m()).map(|i| y(pairs, face, i)).collect())
    }))
}

/// The diagram `σ ↦ Σ ∧_i (ΩY_i(σ))^{∧k_i}` defining the weighted smash
/// coproduct.
pub fn smash_coproduct(
    k: &SimplicialComplex,
    pairs: &PairAssignment,
    weights: &[usize],
) -> Result<DiagramDescription, DecompError> {
    pairs.check_arity(k)?;
    if weights.len() != k.m() {
        return Err(DecompError::Arity { expected: k.m(), got: weights.len() });
    }
    if weights.iter().all(|&w| w == 0) {
        return Err(DecompError::ZeroWeights);
    }
    Ok(DiagramDescription::build(k, |face| {
        let mut smash = Vec::new();
        for (i, &w) in weights.iter().enumerate() {
            let face_loop = SpaceExpr::loop_of(y(pairs, face, i + 1));
            smash.extend(std::iter::repeat_n(face_loop, w));
        }
        SpaceExpr::susp(SpaceExpr::smash(smash))
    }))
}

/// Closed forms of `f_co^K` in the cases where the limit is evident.
///
/// * `K = Δ^{m-1}`: the initial object `X_1 ∨ ⋯ ∨ X_m`.
/// * `K` at most 0-dimensional with every `A_i = *`: `∏ X_i` over its vertices.
/// * `K = ∂Δ^1` with both domains contractible: the cojoin `ΩΣ(ΩA_1 ∧ ΩA_2)`.
/// * `K` with no vertices: `D(∅) = A_1 ∨ ⋯ ∨ A_m`.
pub fn evaluate_special(k: &SimplicialComplex, pairs: &PairAssignment) -> Option<SpaceExpr> {
    if pairs.m() != k.m() {
        return None;
    }
    let m = k.m();
    if k.is_void() {
        return Some(normalize(&SpaceExpr::wedge(pairs.pairs.iter().map(|p| p.codomain.clone()).collect())));
    }
    if m > 0 && k.is_full_simplex() {
        return Some(normalize(&SpaceExpr::wedge(pairs.pairs.iter().map(Pair::x).collect())));
    }
    if k.dim() == 0 && pairs.pairs.iter().all(|p| p.codomain_is_point) {
        return Some(normalize(&SpaceExpr::product(k.covered_vertices().iter().map(|i| pairs.pair(i).x()).collect())));
    }
    if *k == SimplicialComplex::simplex_boundary(2) && pairs.pairs.iter().all(|p| p.domain_contractible) {
        let smash = SpaceExpr::smash(pairs.pairs.iter().map(|p| SpaceExpr::loop_of(p.a())).collect());
        return Some(normalize(&SpaceExpr::loop_of(SpaceExpr::susp(smash))));
    }
    None
}

fn check_connected(spaces: &[SpaceExpr], at_least: i64) -> Result<(), DecompError> {
    for (i, x) in spaces.iter().enumerate() {
        let ok = conn(x).map(|c| c.at_least(at_least)).unwrap_or(false);
        if !ok {
            return Err(if at_least >= 1 {
                DecompError::NotSimplyConnected { vertex: i + 1, role: "space", expr: x.to_string() }
            } else {
                DecompError::NotConnected { vertex: i + 1, expr: x.to_string() }
            });
        }
    }
    Ok(())
}

/// The summands `Σ(ΩX_{i_1} ∧ ⋯ ∧ ΩX_{i_k})` of the fibre of `∨X_i → ∏X_i`,
/// one entry per `I ⊆ [m]` with `|I| ≥ 2`, with multiplicity `|I| - 1`.
pub fn porter_summands(spaces: &[SpaceExpr]) -> Result<Vec<(VertexSet, SpaceExpr, usize)>, DecompError> {
    check_connected(spaces, 1)?;
    let mut subsets: Vec<VertexSet> = VertexSet::full(spaces.len()).subsets().filter(|s| s.len() >= 2).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    Ok(subsets
        .into_iter()
        .map(|s| {
            let smash = SpaceExpr::smash(s.iter().map(|i| SpaceExpr::loop_of(spaces[i - 1].clone())).collect());
            (s, normalize(&SpaceExpr::susp(smash)), s.len() - 1)
        })
        .collect())
}

/// The fibre wedge `∨_{|I|≥2} (Σ ∧_{i∈I} ΩX_i)^{∨(|I|-1)}`.
pub fn porter_fiber(spaces: &[SpaceExpr]) -> Result<SpaceExpr, DecompError> {
    let mut summands = Vec::new();
    for (_, e, mult) in porter_summands(spaces)? {
        summands.extend(std::iter::repeat_n(e, mult));
    }
    Ok(normalize(&SpaceExpr::wedge(summands)))
}

/// `Ω(∨X_i) ≃ ∏ΩX_i × Ω(fibre wedge)`, the wedge left unexpanded.
pub fn porter_loop_decomp(spaces: &[SpaceExpr]) -> Result<Decomposition, DecompError> {
    let fiber = porter_fiber(spaces)?;
    let mut d = Decomposition::new(Theorem::Porter, None);
    for (i, x) in spaces.iter().enumerate() {
        d.push(Factor::new(normalize(&SpaceExpr::loop_of(x.clone())), Provenance::Vertex { vertex: i + 1 }, 0), None);
    }
    d.push(Factor::new(normalize(&SpaceExpr::loop_of(fiber)), Provenance::Base, 0), None);
    Ok(d.finish())
}

/// Letter cost from a connectivity, saturating for contractible letters.
fn conn_cost(c: Conn, ceiling: u64) -> u64 {
    match c {
        Conn::Finite(c) => c.max(0) as u64,
        Conn::Infinite => ceiling,
    }
}

/// `Ω(∨ΣX_i) ≃ ∏_b ΩΣ(X_1^{∧k_1(b)} ∧ ⋯ ∧ X_m^{∧k_m(b)})` over Hall brackets
/// on `x_1..x_m` of weight at most `W`; empty smash powers are omitted.
pub fn hilton_milnor(spaces: &[SpaceExpr], bounds: impl Into<Bounds>) -> Result<Decomposition, DecompError> {
    let bounds = bounds.into();
    bounds.check()?;
    check_connected(spaces, 0)?;
    let m = spaces.len();
    let conns: Vec<Conn> = spaces.iter().map(|x| conn(x).expect("checked above")).collect();
    // The factor of b has connectivity Σ k_i(conn X_i + 1) - 1.
    let budget = bounds.degree.map(|n| n as u64);
    let ceiling = budget.map_or(0, |b| b + 1);
    let cost = |g: &Generator| match (g, budget) {
        (Generator::Symbol(i), Some(_)) => conn_cost(conns[*i as usize - 1], ceiling).saturating_add(1),
        _ => 0,
    };
    let basis = hall_basis_within(&symbols(m), bounds.weight, cost, budget.unwrap_or(0));
    let mut d = Decomposition::new(Theorem::HiltonMilnor, Some(bounds));
    for b in basis {
        let counts = b.symbol_counts(m);
        let mut smash = Vec::new();
        for (i, &k) in counts.iter().enumerate() {
            smash.extend(std::iter::repeat_n(spaces[i].clone(), k));
        }
        let expr = normalize(&SpaceExpr::loop_of(SpaceExpr::susp(SpaceExpr::smash(smash))));
        let weight = b.weight();
        d.push(Factor::new(expr, Provenance::bracket(&b), weight), Some(&bounds));
    }
    Ok(d.finish())
}

/// `Σ ∧_j (ΩY_j)^{∧l_j}` for `j` in `subset`.
fn suspended_loop_smash(ys: impl Fn(usize) -> SpaceExpr, subset: VertexSet, l: &[usize]) -> SpaceExpr {
    let mut smash = Vec::new();
    for j in subset.iter() {
        smash.extend(std::iter::repeat_n(SpaceExpr::loop_of(ys(j)), l[j - 1]));
    }
    SpaceExpr::susp(SpaceExpr::smash(smash))
}

fn subcomplex_label(subset: VertexSet) -> String {
    format!("K_{subset}")
}

/// Base factor of vertex `i`: `ΩX_i` when `{i}` is a face, otherwise `ΩA_i`
/// (a ghost vertex only ever contributes `A_i` to the diagram).
fn base_factor(k: &SimplicialComplex, pairs: &PairAssignment, i: usize) -> Factor {
    let p = pairs.pair(i);
    let space = if k.contains_face(VertexSet::singleton(i)) { p.x() } else { p.a() };
    Factor::new(normalize(&SpaceExpr::loop_of(space)), Provenance::Vertex { vertex: i }, 0)
}

/// Evaluation of `Ω f̂^{K_I}_{L,co}` as far as the hypotheses allow.
struct SmashFactor {
    expr: SpaceExpr,
    diagram: Option<DiagramDescription>,
}

fn general_factor(
    k: &SimplicialComplex,
    pairs: &PairAssignment,
    support: VertexSet,
    l: &[usize],
) -> Result<SmashFactor, DecompError> {
    // K_I a simplex: the face I is initial in cat(K_I)^op.
    if k.contains_face(support) {
        let expr = SpaceExpr::loop_of(suspended_loop_smash(|j| pairs.pair(j).x(), support, l));
        return Ok(SmashFactor { expr: normalize(&expr), diagram: None });
    }
    let all_contractible = support.iter().all(|j| pairs.pair(j).domain_contractible);
    if all_contractible {
        let sub = k.full_subcomplex(support)?;
        let target = suspended_loop_smash(|j| pairs.pair(j).a(), support, l);
        let expr = SpaceExpr::loop_of(SpaceExpr::map_from(sub.complex, subcomplex_label(support), target));
        return Ok(SmashFactor { expr: normalize(&expr), diagram: None });
    }
    // Every object except those over faces containing I involves ΩA_j = *.
    // No face of K_I contains I, so the whole diagram is contractible.
    let all_points = support.iter().all(|j| pairs.pair(j).codomain_is_point);
    if all_points {
        return Ok(SmashFactor { expr: SpaceExpr::Point, diagram: None });
    }
    let sub = k.full_subcomplex(support)?;
    let local_l: Vec<usize> = support.iter().map(|j| l[j - 1]).collect();
    let diagram = smash_coproduct(&sub.complex, &pairs.restrict(support), &local_l)?;
    if diagram.objects.iter().all(|o| o.normalized.is_point()) {
        return Ok(SmashFactor { expr: SpaceExpr::Point, diagram: None });
    }
    let weights: Vec<String> = local_l.iter().map(usize::to_string).collect();
    let name = format!("f̂^{{{}}}_{{({}),co}}", subcomplex_label(support), weights.join(","));
    let holim_conn = diagram.holim_conn_bound().finite().unwrap_or(i64::MAX / 4);
    let atom = SpaceExpr::atom(AtomDecl::new(name, holim_conn));
    Ok(SmashFactor { expr: SpaceExpr::loop_of(atom), diagram: Some(diagram) })
}

/// `Ωf_co^K ≃ ∏ΩX_i × ∏_{b∈B_[m]} Ω f̂^{K_{I_b}}_{L_b,co}` for maps of simply
/// connected spaces.
///
/// Each bracket factor is evaluated when its hypotheses allow: `I_b ∈ K`
/// gives the initial object `ΩΣ ∧(ΩX_j)^{l_j}`; contractible domains on
/// `I_b` give `ΩMap_*(Σ|K_{I_b}|, Σ ∧(ΩA_j)^{l_j})`; points as codomains on
/// `I_b` give a contractible factor. Anything else stays a symbolic limit
/// with its diagram attached.
pub fn loop_decompose(
    k: &SimplicialComplex,
    pairs: &PairAssignment,
    bounds: impl Into<Bounds>,
) -> Result<Decomposition, DecompError> {
    let bounds = bounds.into();
    bounds.check()?;
    pairs.check_arity(k)?;
    pairs.check_simply_connected()?;
    let m = k.m();
    let mut d = Decomposition::new(Theorem::General, Some(bounds));
    for i in 1..=m {
        d.push(base_factor(k, pairs, i), Some(&bounds));
    }
    // Each object of a factor's diagram is at least (Σ_j l_j c_j)-connected
    // with c_j = min(conn X_j, conn A_j); the limit and the loop lose at most
    // |I_b| + 1 more, so brackets above N + m cost cannot be seen.
    let vertex_cost: Vec<Conn> = pairs
        .pairs
        .iter()
        .map(|p| {
            let cx = conn(&p.x()).unwrap_or(Conn::Finite(0));
            let ca = conn(&p.a()).unwrap_or(Conn::Finite(0));
            cx.min(ca)
        })
        .collect();
    let budget = bounds.degree.map(|n| (n + m) as u64);
    let basis = bracket_basis(VertexSet::full(m), &vertex_cost, bounds.weight, budget);
    let mut memo: HashMap<(VertexSet, Vec<usize>), SmashFactor> = HashMap::new();
    for b in basis {
        let stats = b.stats(m);
        let support = stats.support();
        let key = (support, stats.vertex_counts.clone());
        if !memo.contains_key(&key) {
            let f = general_factor(k, pairs, support, &stats.vertex_counts)?;
            memo.insert(key.clone(), f);
        }
        let f = &memo[&key];
        let mut factor = Factor::new(f.expr.clone(), Provenance::bracket(&b), b.weight());
        factor.diagram = f.diagram.clone();
        d.push(factor, Some(&bounds));
    }
    Ok(d.finish())
}

/// Hall brackets on `S_I` of weight at most `W`, optionally pruned to letter
/// cost `Σ_{j∈J} c_j` at most `budget`.
fn bracket_basis(subset: VertexSet, vertex_cost: &[Conn], weight: usize, budget: Option<u64>) -> Vec<Bracket> {
    let ceiling = budget.map_or(0, |b| b + 1);
    let cost = |g: &Generator| match (g, budget) {
        (Generator::Face { subset, .. }, Some(_)) => subset
            .iter()
            .map(|j| conn_cost(vertex_cost[j - 1], ceiling).max(1))
            .fold(0u64, u64::saturating_add),
        _ => 0,
    };
    hall_basis_within(&generators_for(subset), weight, cost, budget.unwrap_or(0))
}

/// `Ω(X,*)^K_co ≃ ∏ΩX_i × ∏_{b ∈ ∪_{σ∈𝓜} B_σ} ΩΣ(∧_{τ∈𝓕} ((ΩX)^{∧τ})^{∧b(τ)})`,
/// with the union over maximal faces on two or more vertices deduplicated by
/// bracket identity.
pub fn loop_decompose_wedge(
    k: &SimplicialComplex,
    spaces: &[SpaceExpr],
    bounds: impl Into<Bounds>,
) -> Result<Decomposition, DecompError> {
    let bounds = bounds.into();
    bounds.check()?;
    if spaces.len() != k.m() {
        return Err(DecompError::Arity { expected: k.m(), got: spaces.len() });
    }
    check_connected(spaces, 1)?;
    let m = k.m();
    let mut d = Decomposition::new(Theorem::WedgeCase, Some(bounds));
    let covered = k.covered_vertices();
    for i in 1..=m {
        let x = if covered.contains(i) { spaces[i - 1].clone() } else { SpaceExpr::Point };
        d.push(Factor::new(normalize(&SpaceExpr::loop_of(x)), Provenance::Vertex { vertex: i }, 0), Some(&bounds));
    }
    // The factor of b is (Σ_j l_j conn X_j - 1)-connected.
    let conns: Vec<Conn> = spaces.iter().map(|x| conn(x).expect("checked above")).collect();
    let budget = bounds.degree.map(|n| n as u64);
    let mut brackets = BTreeSet::new();
    for sigma in k.maximal_faces_ge2() {
        brackets.extend(bracket_basis(sigma, &conns, bounds.weight, budget));
    }
    let mut memo: HashMap<BTreeMap<VertexSet, usize>, SpaceExpr> = HashMap::new();
    for b in brackets {
        let stats = b.stats(m);
        let expr = memo
            .entry(stats.by_subset.clone())
            .or_insert_with(|| {
                let mut smash = Vec::new();
                for (tau, &count) in &stats.by_subset {
                    let power = SpaceExpr::smash(tau.iter().map(|j| SpaceExpr::loop_of(spaces[j - 1].clone())).collect());
                    smash.extend(std::iter::repeat_n(power, count));
                }
                normalize(&SpaceExpr::loop_of(SpaceExpr::susp(SpaceExpr::smash(smash))))
            })
            .clone();
        d.push(Factor::new(expr, Provenance::bracket(&b), b.weight()), Some(&bounds));
    }
    let d = d.finish();
    d.check_truncation_soundness()?;
    Ok(d)
}

/// `Ωf_co^K ≃ ∏_{b ∈ B_[m], I_b ∉ K} ΩMap_*(Σ|K_{I_b}|, Σ ΩA_1^{∧l_1(b)} ∧ ⋯ ∧ ΩA_m^{∧l_m(b)})`
/// when every domain is contractible.
pub fn loop_decompose_contractible(
    k: &SimplicialComplex,
    pairs: &PairAssignment,
    bounds: impl Into<Bounds>,
) -> Result<Decomposition, DecompError> {
    let bounds = bounds.into();
    bounds.check()?;
    pairs.check_arity(k)?;
    for (i, p) in pairs.pairs.iter().enumerate() {
        if !p.domain_contractible {
            return Err(DecompError::DomainNotContractible { vertex: i + 1, expr: p.domain.to_string() });
        }
    }
    pairs.check_simply_connected()?;
    let m = k.m();
    let mut d = Decomposition::new(Theorem::ContractibleDomain, Some(bounds));
    for i in k.ghost_vertices().iter() {
        d.push(base_factor(k, pairs, i), Some(&bounds));
    }
    // conn(factor) ≥ Σ_j l_j conn A_j - |I_b|.
    let conns: Vec<Conn> = pairs.pairs.iter().map(|p| conn(&p.a()).expect("checked above")).collect();
    let budget = bounds.degree.map(|n| (n + m) as u64);
    let mut memo: HashMap<(VertexSet, Vec<usize>), SpaceExpr> = HashMap::new();
    for b in bracket_basis(VertexSet::full(m), &conns, bounds.weight, budget) {
        let support = b.support();
        if k.contains_face(support) {
            continue;
        }
        let stats = b.stats(m);
        let key = (support, stats.vertex_counts);
        let expr = match memo.get(&key) {
            Some(e) => e.clone(),
            None => {
                let sub = k.full_subcomplex(support)?;
                let target = suspended_loop_smash(|j| pairs.pair(j).a(), support, &key.1);
                let e = normalize(&SpaceExpr::loop_of(SpaceExpr::map_from(sub.complex, subcomplex_label(support), target)));
                memo.insert(key, e.clone());
                e
            }
        };
        d.push(Factor::new(expr, Provenance::bracket(&b), b.weight()), Some(&bounds));
    }
    let d = d.finish();
    // Here a factor of weight w is only guaranteed (2w - m)-connected.
    d.check_weight_connectivity(|w| 2 * w as i64 - m as i64)?;
    Ok(d)
}

/// `ΣX^K ≃ ∨_{σ∈K} ΣX^{∧σ}`: one summand per nonempty face.
pub fn bbcg_wedge_splitting(
    k: &SimplicialComplex,
    spaces: &[SpaceExpr],
) -> Result<Vec<(VertexSet, SpaceExpr)>, DecompError> {
    if spaces.len() != k.m() {
        return Err(DecompError::Arity { expected: k.m(), got: spaces.len() });
    }
    Ok(k.faces()
        .into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| (f, normalize(&SpaceExpr::susp(smash_of(spaces, f)))))
        .collect())
}

fn smash_of(spaces: &[SpaceExpr], subset: VertexSet) -> SpaceExpr {
    SpaceExpr::smash(subset.iter().map(|i| spaces[i - 1].clone()).collect())
}

/// `Σ(CX, X)^K ≃ ∨_{I∉K} Σ(|K_I| ∧ X^{∧I})`. When `|K_I| ≃ ∨S^{d}` is
/// certified the summand is written out as `∨ Σ^{d+1} X^{∧I}`; otherwise
/// `|K_I|` stays a named space.
pub fn bbcg_cone_splitting(
    k: &SimplicialComplex,
    spaces: &[SpaceExpr],
) -> Result<Vec<(VertexSet, SpaceExpr)>, DecompError> {
    if spaces.len() != k.m() {
        return Err(DecompError::Arity { expected: k.m(), got: spaces.len() });
    }
    let mut out = Vec::new();
    for subset in k.missing_subsets() {
        let sub = k.full_subcomplex(subset)?;
        let smash = smash_of(spaces, subset);
        let summand = match sub.complex.wedge_of_spheres_type() {
            Some(dims) => SpaceExpr::wedge(dims.into_iter().map(|d| SpaceExpr::susp_n(smash.clone(), (d + 1) as u32)).collect()),
            None => {
                let realization = SpaceExpr::named(format!("|{}|", subcomplex_label(subset)), -1);
                SpaceExpr::susp(SpaceExpr::smash(vec![realization, smash]))
            }
        };
        out.push((subset, normalize(&summand)));
    }
    Ok(out)
}

/// Strips a cone point `v` whose map is `* → Y`: `f_co^{K⋆{v}} ≃ f_co^K`.
pub fn join_vertex_reduce(
    k: &SimplicialComplex,
    pairs: &PairAssignment,
    v: usize,
) -> Result<(SimplicialComplex, PairAssignment), DecompError> {
    pairs.check_arity(k)?;
    if v == 0 || v > k.m() {
        return Err(ComplexError::VertexOutOfRange { vertex: v, m: k.m() }.into());
    }
    if !k.facets().iter().all(|f| f.contains(v)) {
        return Err(DecompError::NotApex { vertex: v });
    }
    let p = pairs.pair(v);
    if !p.domain_contractible {
        return Err(DecompError::DomainNotContractible { vertex: v, expr: p.domain.to_string() });
    }
    let keep = VertexSet::full(k.m()).difference(VertexSet::singleton(v));
    Ok((k.delete_vertex(v), pairs.restrict(keep)))
}

/// One corner of the pullback square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackCorner {
    pub name: String,
    pub complex: SimplicialComplex,
    pub value: SpaceExpr,
    /// Whether `value` is a closed form rather than the symbol `f_co^{name}`.
    pub evaluated: bool,
}

/// The homotopy pullback `f_co^K → f_co^{K̄2}, f_co^{K̄1} → f_co^{L̄}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackReport {
    pub corners: Vec<PullbackCorner>,
    pub maps: Vec<String>,
}

impl fmt::Display for PullbackReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.corners {
            writeln!(f, "{:<4} {}  ≃  {}", c.name, c.complex, c.value)?;
        }
        for m in &self.maps {
            writeln!(f, "  {m}")?;
        }
        Ok(())
    }
}

/// The square of `K = K1 ∪_L K2`. `K1` lives on `{1..n}`, `K2` on
/// `{l..m}` in local coordinates `{1..m-l+1}`, and `L` on the `n-l+1` shared
/// vertices in local coordinates; `L` may have no vertices at all.
pub fn pullback_square(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
    l: &SimplicialComplex,
    pairs: &PairAssignment,
) -> Result<PullbackReport, DecompError> {
    let k = k1.union_along(k2, l)?;
    pairs.check_arity(&k)?;
    let m = k.m();
    let offset = k1.m() - l.m();
    let corners = [
        ("K", k.clone()),
        ("K̄1", k1.extended(0, m)?),
        ("K̄2", k2.extended(offset, m)?),
        ("L̄", l.extended(offset, m)?),
    ];
    let corners: Vec<PullbackCorner> = corners
        .into_iter()
        .map(|(name, complex)| {
            let special = evaluate_special(&complex, pairs);
            let evaluated = special.is_some();
            let value = special.unwrap_or_else(|| SpaceExpr::named(format!("f_co^{name}"), 0));
            PullbackCorner { name: name.to_string(), complex, value, evaluated }
        })
        .collect();
    let maps = vec![
        "f_co^K → f_co^K̄2 (induced by K̄2 ⊆ K)".to_string(),
        "f_co^K → f_co^K̄1 (induced by K̄1 ⊆ K)".to_string(),
        "f_co^K̄1 → f_co^L̄ (induced by L̄ ⊆ K̄1)".to_string(),
        "f_co^K̄2 → f_co^L̄ (induced by L̄ ⊆ K̄2)".to_string(),
    ];
    Ok(PullbackReport { corners, maps })
}

/// `(X,*)^{K1⊔K2}_co ≃ (X,*)^{K1}_co × (X,*)^{K2}_co`, so the loop
/// decomposition is the union of the two components' decompositions. The
/// second component's vertices follow the first's.
pub fn disjoint_union_decomp(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
    spaces: &[SpaceExpr],
    bounds: impl Into<Bounds>,
) -> Result<Decomposition, DecompError> {
    let bounds = bounds.into();
    let (m1, m2) = (k1.m(), k2.m());
    if spaces.len() != m1 + m2 {
        return Err(DecompError::Arity { expected: m1 + m2, got: spaces.len() });
    }
    let d1 = loop_decompose_wedge(k1, &spaces[..m1], bounds)?;
    let d2 = loop_decompose_wedge(k2, &spaces[m1..], bounds)?;
    let mut d = Decomposition::new(Theorem::DisjointUnion, Some(bounds));
    d.dropped_point_factors = d1.dropped_point_factors + d2.dropped_point_factors;
    d.factors = d1.factors;
    d.factors.extend(d2.factors.into_iter().map(|f| Factor { provenance: f.provenance.shifted(m1), ..f }));
    Ok(d.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> SpaceExpr {
        SpaceExpr::sphere(n)
    }

    fn x(i: usize) -> SpaceExpr {
        SpaceExpr::named(format!("X{i}"), 1)
    }

    fn xs(m: usize) -> Vec<SpaceExpr> {
        (1..=m).map(x).collect()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied()).unwrap()
    }

    fn lp(e: SpaceExpr) -> SpaceExpr {
        SpaceExpr::loop_of(e)
    }

    fn exprs(d: &Decomposition) -> Vec<SpaceExpr> {
        d.factors.iter().map(|f| f.expr.clone()).collect()
    }

    #[test]
    fn diagram_on_two_points() {
        let k = SimplicialComplex::discrete(2);
        let d = coproduct_diagram(&k, &PairAssignment::constant(&xs(2))).unwrap();
        assert_eq!(d.object(VertexSet::EMPTY).unwrap().normalized, SpaceExpr::Point);
        assert_eq!(d.object(set(&[1])).unwrap().normalized, x(1));
        assert_eq!(d.object(set(&[2])).unwrap().normalized, x(2));
        assert_eq!(d.morphisms.len(), 2);
    }

    #[test]
    fn diagram_cojoin_objects() {
        let k = SimplicialComplex::simplex_boundary(2);
        let pairs = PairAssignment::path_fibrations(&xs(2));
        let d = coproduct_diagram(&k, &pairs).unwrap();
        assert_eq!(d.object(VertexSet::EMPTY).unwrap().normalized, normalize(&SpaceExpr::wedge(xs(2))));
        assert_eq!(d.object(set(&[1])).unwrap().normalized, x(2));
        assert_eq!(d.object(set(&[1])).unwrap().raw.to_string(), "PX1 ∨ X2");
    }

    #[test]
    fn special_cases() {
        let three = xs(3);
        assert_eq!(
            evaluate_special(&SimplicialComplex::discrete(3), &PairAssignment::constant(&three)),
            Some(normalize(&SpaceExpr::product(three.clone())))
        );
        let pairs = PairAssignment::path_fibrations(&three);
        assert_eq!(
            evaluate_special(&SimplicialComplex::simplex(3), &pairs),
            Some(SpaceExpr::Point)
        );
        assert_eq!(
            evaluate_special(&SimplicialComplex::simplex(3), &PairAssignment::constant(&three)),
            Some(normalize(&SpaceExpr::wedge(three.clone())))
        );
        let cojoin = evaluate_special(&SimplicialComplex::simplex_boundary(2), &PairAssignment::path_fibrations(&xs(2)));
        assert_eq!(cojoin, Some(normalize(&lp(SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(2))]))))));
        assert_eq!(evaluate_special(&SimplicialComplex::simplex_boundary(3), &pairs), None);
    }

    #[test]
    fn porter_examples() {
        let f2 = porter_fiber(&xs(2)).unwrap();
        assert_eq!(f2, normalize(&SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(2))]))));
        match porter_fiber(&xs(3)).unwrap() {
            SpaceExpr::Wedge { summands } => assert_eq!(summands.len(), 5),
            other => panic!("unexpected {other}"),
        }
        assert_eq!(porter_fiber(&xs(1)).unwrap(), SpaceExpr::Point);
        assert!(matches!(
            porter_fiber(&[s(1), s(3)]),
            Err(DecompError::NotSimplyConnected { vertex: 1, .. })
        ));
        let d = porter_loop_decomp(&[x(1), SpaceExpr::Point]).unwrap();
        assert_eq!(exprs(&d), vec![lp(x(1))]);
    }

    #[test]
    fn hilton_milnor_examples() {
        let d = hilton_milnor(&[x(1)], 9).unwrap();
        assert_eq!(exprs(&d), vec![lp(SpaceExpr::susp(x(1)))]);
        let d = hilton_milnor(&xs(2), 2).unwrap();
        assert_eq!(d.len(), 3);
        let d = hilton_milnor(&xs(2), 3).unwrap();
        assert_eq!(d.len(), 5);
        let last = &d.factors[4].expr;
        assert_eq!(*last, normalize(&lp(SpaceExpr::susp(SpaceExpr::smash(vec![x(1), x(2), x(2)])))));
        assert!(matches!(hilton_milnor(&xs(2), 0), Err(DecompError::ZeroWeightBound)));
    }

    #[test]
    fn smash_coproduct_examples() {
        let k = SimplicialComplex::discrete(2);
        let d = smash_coproduct(&k, &PairAssignment::constant(&xs(2)), &[1, 1]).unwrap();
        assert!(d.objects.iter().all(|o| o.normalized.is_point()));
        let d = smash_coproduct(&k, &PairAssignment::path_fibrations(&xs(2)), &[1, 1]).unwrap();
        assert_eq!(
            d.object(VertexSet::EMPTY).unwrap().normalized,
            normalize(&SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(2))])))
        );
        assert!(d.object(set(&[1])).unwrap().normalized.is_point());
        let one = SimplicialComplex::simplex(1);
        let d = smash_coproduct(&one, &PairAssignment::constant(&xs(1)), &[2]).unwrap();
        assert_eq!(
            d.object(set(&[1])).unwrap().normalized,
            normalize(&SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(1))])))
        );
        assert!(matches!(smash_coproduct(&k, &PairAssignment::constant(&xs(2)), &[0, 0]), Err(DecompError::ZeroWeights)));
    }

    #[test]
    fn general_theorem_examples() {
        let d = loop_decompose(&SimplicialComplex::discrete(2), &PairAssignment::constant(&xs(2)), 4).unwrap();
        assert_eq!(exprs(&d), vec![lp(x(1)), lp(x(2))]);

        let d = loop_decompose(&SimplicialComplex::simplex_boundary(2), &PairAssignment::path_fibrations(&xs(2)), 1)
            .unwrap();
        let expected = normalize(&SpaceExpr::loop_n(SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(2))])), 2));
        assert_eq!(exprs(&d), vec![expected]);
        assert_eq!(d.dropped_point_factors, 2);

        let d = loop_decompose(&SimplicialComplex::simplex(2), &PairAssignment::constant(&xs(2)), 1).unwrap();
        let edge = normalize(&lp(SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(2))]))));
        assert_eq!(exprs(&d), vec![lp(x(1)), lp(x(2)), edge]);
    }

    #[test]
    fn mixed_pairs_stay_symbolic() {
        let k = SimplicialComplex::simplex_boundary(2);
        let pairs = PairAssignment::new(vec![Pair::path_fibration(x(1)), Pair::new(x(2), s(3))]);
        let d = loop_decompose(&k, &pairs, 1).unwrap();
        let bracket = d.bracket_factors().next().unwrap();
        assert!(bracket.diagram.is_some());
        assert!(bracket.text.starts_with("Ωf̂^{K_{1,2}}"));
    }

    #[test]
    fn wedge_case_examples() {
        let d = loop_decompose_wedge(&SimplicialComplex::discrete(4), &xs(4), 6).unwrap();
        assert_eq!(d.len(), 4);
        let path = SimplicialComplex::build(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let d = loop_decompose_wedge(&path, &xs(3), 5).unwrap();
        let e12 = normalize(&lp(SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(1)), lp(x(2))]))));
        let e23 = normalize(&lp(SpaceExpr::susp(SpaceExpr::smash(vec![lp(x(2)), lp(x(3))]))));
        assert_eq!(exprs(&d), vec![lp(x(1)), lp(x(2)), lp(x(3)), e12, e23]);
    }

    #[test]
    fn square_with_cp_infinity() {
        let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        let cp = vec![SpaceExpr::cp_infinity(); 4];
        let d = loop_decompose_wedge(&square, &cp, 1).unwrap();
        let ms = d.multiset();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[&s(1)], 4);
        assert_eq!(ms[&lp(s(3))], 4);
        // Higher weights add nothing: every maximal face is an edge.
        assert_eq!(loop_decompose_wedge(&square, &cp, 7).unwrap().multiset(), ms);
    }

    #[test]
    fn contractible_domain_examples() {
        let pairs = PairAssignment::path_fibrations(&xs(3));
        let d = loop_decompose_contractible(&SimplicialComplex::simplex(3), &pairs, 4).unwrap();
        assert!(d.is_empty());
        let d = loop_decompose_contractible(&SimplicialComplex::simplex_boundary(2), &PairAssignment::path_fibrations(&xs(2)), 1)
            .unwrap();
        assert_eq!(d.len(), 1);
        let bd = SimplicialComplex::simplex_boundary(3);
        let d = loop_decompose_contractible(&bd, &pairs, 3).unwrap();
        assert!(!d.is_empty());
        for f in d.bracket_factors() {
            match &f.provenance {
                Provenance::Bracket { support, .. } => assert_eq!(*support, VertexSet::full(3)),
                _ => unreachable!(),
            }
        }
        assert!(matches!(
            loop_decompose_contractible(&bd, &PairAssignment::constant(&xs(3)), 2),
            Err(DecompError::DomainNotContractible { vertex: 1, .. })
        ));
    }

    #[test]
    fn bbcg_examples() {
        let w = bbcg_wedge_splitting(&SimplicialComplex::discrete(2), &xs(2)).unwrap();
        assert_eq!(w.len(), 2);
        let w = bbcg_wedge_splitting(&SimplicialComplex::simplex(2), &xs(2)).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[2].1, normalize(&SpaceExpr::susp(SpaceExpr::smash(xs(2)))));
        let c = bbcg_cone_splitting(&SimplicialComplex::discrete(2), &[s(1), s(1)]).unwrap();
        assert_eq!(c, vec![(set(&[1, 2]), s(3))]);
    }

    #[test]
    fn join_vertex() {
        let k = SimplicialComplex::simplex_boundary(3).join(&SimplicialComplex::simplex(1)).unwrap();
        let mut spaces = xs(3);
        spaces.push(s(2));
        let mut pairs = PairAssignment::constant(&spaces);
        pairs.pairs[3] = Pair::new(SpaceExpr::Point, s(2));
        let (k2, p2) = join_vertex_reduce(&k, &pairs, 4).unwrap();
        assert_eq!(k2, SimplicialComplex::simplex_boundary(3));
        assert_eq!(
            loop_decompose(&k2, &p2, 3).unwrap().multiset(),
            loop_decompose(&SimplicialComplex::simplex_boundary(3), &PairAssignment::constant(&xs(3)), 3)
                .unwrap()
                .multiset()
        );
        assert!(matches!(join_vertex_reduce(&k, &pairs, 1), Err(DecompError::NotApex { vertex: 1 })));
        let constant = PairAssignment::constant(&spaces);
        assert!(matches!(
            join_vertex_reduce(&k, &constant, 4),
            Err(DecompError::DomainNotContractible { vertex: 4, .. })
        ));
    }

    #[test]
    fn pullback_over_empty() {
        let k1 = SimplicialComplex::simplex(1);
        let k2 = SimplicialComplex::simplex(1);
        let pairs = PairAssignment::new(vec![Pair::new(x(1), s(2)), Pair::new(x(2), s(3))]);
        let report = pullback_square(&k1, &k2, &SimplicialComplex::empty(0), &pairs).unwrap();
        assert_eq!(report.corners.len(), 4);
        let lbar = &report.corners[3];
        assert_eq!(lbar.value, normalize(&SpaceExpr::wedge(vec![s(2), s(3)])));
        assert!(lbar.evaluated);
        assert_eq!(report.corners[0].complex, SimplicialComplex::discrete(2));
    }

    #[test]
    fn disjoint_union_of_points() {
        let p = SimplicialComplex::simplex(1);
        let d = disjoint_union_decomp(&p, &p, &xs(2), 3).unwrap();
        assert_eq!(exprs(&d), vec![lp(x(1)), lp(x(2))]);
        assert_eq!(d.factors[1].provenance, Provenance::Vertex { vertex: 2 });
    }

    #[test]
    fn degree_pruning_is_exact() {
        let spaces = vec![s(2), s(2), s(2)];
        let k = SimplicialComplex::simplex(3);
        let full = loop_decompose_wedge(&k, &spaces, 6).unwrap();
        let pruned = loop_decompose_wedge(&k, &spaces, Bounds::weight(6).with_degree(5)).unwrap();
        assert!(pruned.len() < full.len());
        assert_eq!(full.series(5).unwrap(), pruned.series(5).unwrap());
    }
}
