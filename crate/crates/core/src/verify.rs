//! Degree-by-degree checks of decompositions against independent series
//! oracles. The weight bound is always derived from the degree (`W = N + 1`).

use std::fmt;

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::decomp::{
    disjoint_union_decomp, hilton_milnor, loop_decompose_wedge, porter_loop_decomp, porter_summands, Bounds,
    Decomposition,
};
use crate::scomplex::SimplicialComplex;
use crate::series::{series_of, Comparison, PoincareSeries, Unsupported};
use crate::spacexpr::{normalize, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    FirstDifference { degree: usize, lhs: BigRational, rhs: BigRational },
    Skipped(String),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal => f.write_str("Equal"),
            Verdict::FirstDifference { degree, lhs, rhs } => {
                write!(f, "FirstDifference(degree {degree}: {lhs} vs {rhs})")
            }
            Verdict::Skipped(reason) => write!(f, "Skipped({reason})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Equal => {
                let mut s = serializer.serialize_struct("Verdict", 1)?;
                s.serialize_field("kind", "equal")?;
                s.end()
            }
            Verdict::FirstDifference { degree, lhs, rhs } => {
                let mut s = serializer.serialize_struct("Verdict", 4)?;
                s.serialize_field("kind", "first_difference")?;
                s.serialize_field("degree", degree)?;
                s.serialize_field("lhs", &lhs.to_string())?;
                s.serialize_field("rhs", &rhs.to_string())?;
                s.end()
            }
            Verdict::Skipped(reason) => {
                let mut s = serializer.serialize_struct("Verdict", 2)?;
                s.serialize_field("kind", "skipped")?;
                s.serialize_field("reason", reason)?;
                s.end()
            }
        }
    }
}

/// A computed series, or why it could not be computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SeriesOutcome {
    Series { coeffs: PoincareSeries, text: String },
    Unsupported { reason: String },
}

impl From<&Result<PoincareSeries, Unsupported>> for SeriesOutcome {
    fn from(r: &Result<PoincareSeries, Unsupported>) -> Self {
        match r {
            Ok(s) => SeriesOutcome::Series { coeffs: s.clone(), text: s.to_string() },
            Err(u) => SeriesOutcome::Unsupported { reason: u.to_string() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedSeries {
    pub name: String,
    pub series: SeriesOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub n: usize,
    pub w: usize,
    /// Product of the decomposition's factor series.
    pub lhs: SeriesOutcome,
    /// The oracle.
    pub rhs: SeriesOutcome,
    /// Further oracles that must agree with `rhs`.
    pub extra: Vec<NamedSeries>,
    pub verdict: Verdict,
    pub note: String,
}

impl VerificationReport {
    fn build(
        name: impl Into<String>,
        n: usize,
        lhs: Result<PoincareSeries, Unsupported>,
        rhs: Result<PoincareSeries, Unsupported>,
        extra: Vec<(String, Result<PoincareSeries, Unsupported>)>,
        note: impl Into<String>,
    ) -> Self {
        let verdict = verdict_of(&lhs, &rhs, &extra);
        VerificationReport {
            name: name.into(),
            n,
            w: n + 1,
            lhs: (&lhs).into(),
            rhs: (&rhs).into(),
            extra: extra.iter().map(|(name, s)| NamedSeries { name: name.clone(), series: s.into() }).collect(),
            verdict,
            note: note.into(),
        }
    }

    fn skipped(name: impl Into<String>, n: usize, reason: impl Into<String>) -> Self {
        let reason = reason.into();
        let outcome = SeriesOutcome::Unsupported { reason: reason.clone() };
        VerificationReport {
            name: name.into(),
            n,
            w: n + 1,
            lhs: outcome.clone(),
            rhs: outcome,
            extra: Vec::new(),
            verdict: Verdict::Skipped(reason),
            note: String::new(),
        }
    }
}

fn verdict_of(
    lhs: &Result<PoincareSeries, Unsupported>,
    rhs: &Result<PoincareSeries, Unsupported>,
    extra: &[(String, Result<PoincareSeries, Unsupported>)],
) -> Verdict {
    let lhs = match lhs {
        Ok(s) => s,
        Err(u) => return Verdict::Skipped(format!("decomposition: {u}")),
    };
    let rhs = match rhs {
        Ok(s) => s,
        Err(u) => return Verdict::Skipped(format!("oracle: {u}")),
    };
    let mut others = vec![rhs];
    for (name, s) in extra {
        match s {
            Ok(s) => others.push(s),
            Err(u) => return Verdict::Skipped(format!("{name}: {u}")),
        }
    }
    for other in others {
        match lhs.compare(other) {
            Ok(Comparison::Equal) => {}
            Ok(Comparison::FirstDifference { degree, lhs, rhs }) => {
                return Verdict::FirstDifference { degree, lhs, rhs }
            }
            Err(e) => return Verdict::Skipped(e.to_string()),
        }
    }
    Verdict::Equal
}

/// Free-product series of `Ω(∨ e_i)` for simply connected `e_i`.
pub fn free_product_oracle(summands: &[SpaceExpr], n: usize) -> Result<PoincareSeries, Unsupported> {
    series_of(&SpaceExpr::loop_of(SpaceExpr::wedge(summands.to_vec())), n)
}

/// `X` with `ΣX` equal to the given summand, when it is visibly a suspension.
pub fn desuspend(e: &SpaceExpr) -> Option<SpaceExpr> {
    match normalize(e) {
        SpaceExpr::Sphere { n } if n >= 1 => Some(SpaceExpr::sphere(n - 1)),
        SpaceExpr::Susp { of, times } => Some(normalize(&SpaceExpr::susp_n(*of, times - 1))),
        _ => None,
    }
}

fn decomposition_series(d: &Result<Decomposition, crate::decomp::DecompError>, n: usize) -> Result<PoincareSeries, Unsupported> {
    match d {
        Ok(d) => d.series(n),
        Err(e) => Err(Unsupported::new(e.to_string())),
    }
}

fn label(spaces: &[SpaceExpr], sep: &str) -> String {
    spaces.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(sep)
}

/// Hilton–Milnor on `Ω(∨ΣX_i)` against the tensor-algebra series of
/// `ΩΣ(∨X_i)` and, for simply connected summands, the free-product series.
pub fn check_hilton_milnor(summands: &[SpaceExpr], n: usize) -> VerificationReport {
    let name = format!("hilton-milnor Ω({})", label(summands, " ∨ "));
    let desuspended: Option<Vec<SpaceExpr>> = summands.iter().map(desuspend).collect();
    let Some(xs) = desuspended else {
        return VerificationReport::skipped(name, n, "a summand is not visibly a suspension");
    };
    let lhs = decomposition_series(&hilton_milnor(&xs, Bounds::through_degree(n)), n);
    let rhs = series_of(&SpaceExpr::loop_of(SpaceExpr::susp(SpaceExpr::wedge(xs.clone()))), n);
    let mut extra = Vec::new();
    let simply_connected = summands.iter().all(|s| crate::spacexpr::conn(s).map(|c| c.at_least(1)).unwrap_or(false));
    if simply_connected {
        extra.push(("free product".to_string(), free_product_oracle(summands, n)));
    }
    VerificationReport::build(name, n, lhs, rhs, extra, "rhs: tensor algebra on H̃(∨X_i)")
}

/// Porter's decomposition with the fibre wedge expanded by Hilton–Milnor,
/// against the free-product series of `Ω(∨X_i)`.
pub fn check_porter(spaces: &[SpaceExpr], n: usize) -> VerificationReport {
    let name = format!("porter Ω({})", label(spaces, " ∨ "));
    let lhs = porter_side(spaces, n);
    let rhs = free_product_oracle(spaces, n);
    VerificationReport::build(name, n, lhs, rhs, Vec::new(), "rhs: free-product rule")
}

fn porter_side(spaces: &[SpaceExpr], n: usize) -> Result<PoincareSeries, Unsupported> {
    let d = porter_loop_decomp(spaces).map_err(|e| Unsupported::new(e.to_string()))?;
    let mut acc = PoincareSeries::one(n);
    for f in d.factors.iter().filter(|f| !matches!(f.provenance, crate::decomp::Provenance::Base)) {
        acc = acc.mul(&f.series(n)?)?;
    }
    // Ω(∨ ΣZ_k) for the fibre wedge, by Hilton–Milnor on the Z_k.
    let mut zs = Vec::new();
    for (_, summand, mult) in porter_summands(spaces).map_err(|e| Unsupported::new(e.to_string()))? {
        if summand.is_point() {
            continue;
        }
        let z = desuspend(&summand).ok_or_else(|| Unsupported::new(format!("`{summand}` is not a suspension")))?;
        zs.extend(std::iter::repeat_n(z, mult));
    }
    if !zs.is_empty() {
        let hm = hilton_milnor(&zs, Bounds::through_degree(n)).map_err(|e| Unsupported::new(e.to_string()))?;
        acc = acc.mul(&hm.series(n)?)?;
    }
    Ok(acc)
}

/// The wedge-case decomposition at `K = Δ^{m-1}`, where `(X,*)^K_co = ∨X_i`,
/// against the free-product series.
pub fn check_wedge_case(k: &SimplicialComplex, spaces: &[SpaceExpr], n: usize) -> VerificationReport {
    let name = format!("wedge-case {k} with {}", label(spaces, ", "));
    if !k.is_full_simplex() || k.m() == 0 {
        return VerificationReport::skipped(name, n, "an independent oracle exists only for the full simplex");
    }
    let lhs = decomposition_series(&loop_decompose_wedge(k, spaces, Bounds::through_degree(n)), n);
    let rhs = free_product_oracle(spaces, n);
    VerificationReport::build(name, n, lhs, rhs, Vec::new(), "rhs: free-product rule for Ω(∨X_i)")
}

/// The boundary of a square with `X_i = CP^∞`: the wedge-case product
/// `∏^4 (S^1 × ΩS^3)` against `Ω((CP^∞)^2 ∨ (CP^∞)^2)`. The verdict is
/// expected to be a difference.
pub fn check_counterexample(n: usize) -> VerificationReport {
    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
        .expect("the square is a valid complex");
    let cp = SpaceExpr::cp_infinity();
    let lhs = decomposition_series(&loop_decompose_wedge(&square, &vec![cp.clone(); 4], Bounds::through_degree(n)), n);
    let pair = SpaceExpr::product(vec![cp.clone(), cp]);
    let rhs = free_product_oracle(&[pair.clone(), pair], n);
    VerificationReport::build(
        "counterexample square vs (CP^∞)^2 ∨ (CP^∞)^2",
        n,
        lhs,
        rhs,
        Vec::new(),
        "a difference shows the coproduct of a join is not the wedge of coproducts",
    )
}

/// The decomposition of `K1 ⊔ K2` against the product of the components'
/// series and against the wedge-case decomposition of the union itself.
pub fn check_disjoint_union(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
    spaces: &[SpaceExpr],
    n: usize,
) -> VerificationReport {
    let name = format!("disjoint-union {k1} ⊔ {k2}");
    let bounds = Bounds::through_degree(n);
    let m1 = k1.m();
    if spaces.len() != m1 + k2.m() {
        return VerificationReport::skipped(name, n, "one space per vertex of K1 ⊔ K2 is required");
    }
    let lhs = decomposition_series(&disjoint_union_decomp(k1, k2, spaces, bounds), n);
    let s1 = decomposition_series(&loop_decompose_wedge(k1, &spaces[..m1], bounds), n);
    let s2 = decomposition_series(&loop_decompose_wedge(k2, &spaces[m1..], bounds), n);
    let rhs = match (s1, s2) {
        (Ok(a), Ok(b)) => a.mul(&b).map_err(Unsupported::from),
        (Err(e), _) | (_, Err(e)) => Err(e),
    };
    let direct = match k1.disjoint_union(k2) {
        Ok(k) => decomposition_series(&loop_decompose_wedge(&k, spaces, bounds), n),
        Err(e) => Err(Unsupported::new(e.to_string())),
    };
    VerificationReport::build(
        name,
        n,
        lhs,
        rhs,
        vec![("wedge case on K1 ⊔ K2".to_string(), direct)],
        "consistency check: no independent oracle for general K",
    )
}

/// Fixed-width table, one report per row.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.name.chars().count()).max().unwrap_or(4).max(4);
    let mut out = format!("{:<width$}  {:>3}  {:>3}  verdict\n", "name", "N", "W");
    for r in reports {
        let pad = width - r.name.chars().count();
        out += &format!("{}{}  {:>3}  {:>3}  {}\n", r.name, " ".repeat(pad), r.n, r.w, r.verdict);
    }
    out
}
