//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the output; any failure makes
//! the process exit non-zero.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use polyco::decomp::{
    disjoint_union_decomp, evaluate_special, hilton_milnor, loop_decompose_contractible, loop_decompose_wedge, Bounds,
    PairAssignment, Provenance,
};
use polyco::verify::{check_counterexample, check_porter, Verdict};
use polyco::{expr_equal, PoincareSeries, SimplicialComplex, SpaceExpr, VertexSet};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for k in 1..=3usize {
        for_each_multidegree(k, 8, &mut |md| {
            let witt = polyco::witt_dimension(md).to_string();
            let hall = hall_count(md).to_string();
            let brute = brute_force_lyndon_count(md).to_string();
            ensure(witt == hall && hall == brute, format!("{md:?}: witt {witt}, hall {hall}, brute force {brute}"))?;
            checked += 1;
            Ok(())
        })?;
    }
    Ok(format!("{checked} multidegrees over 1-3 letters, weight <= 8"))
}

fn for_each_multidegree(
    k: usize,
    max_weight: usize,
    f: &mut dyn FnMut(&[usize]) -> Result<(), String>,
) -> Result<(), String> {
    fn rec(
        prefix: &mut Vec<usize>,
        k: usize,
        left: usize,
        f: &mut dyn FnMut(&[usize]) -> Result<(), String>,
    ) -> Result<(), String> {
        if prefix.len() == k {
            if prefix.iter().sum::<usize>() > 0 {
                f(prefix)?;
            }
            return Ok(());
        }
        for c in 0..=left {
            prefix.push(c);
            rec(prefix, k, left - c, f)?;
            prefix.pop();
        }
        Ok(())
    }
    rec(&mut Vec::new(), k, max_weight, f)
}

fn criterion_2() -> Outcome {
    let n = 24;
    // W = 25; factors that are at least 24-connected are invisible through degree 24.
    let d = hilton_milnor(&[sphere(2), sphere(4)], Bounds::weight(25).with_degree(n)).map_err(|e| e.to_string())?;
    let got = ints(&d.series(n).map_err(|e| e.to_string())?);
    let expected = rational_coeffs(&[1], &[1, 0, -1, 0, -1], n);
    ensure(got == expected, format!("Ω(S^3 ∨ S^5): {got:?} vs {expected:?}"))?;
    let n = 12;
    let d2 = hilton_milnor(&[sphere(1), sphere(1)], Bounds::weight(13).with_degree(n)).map_err(|e| e.to_string())?;
    let got = ints(&d2.series(n).map_err(|e| e.to_string())?);
    let expected = rational_coeffs(&[1], &[1, -2], n);
    ensure(got == expected, format!("Ω(S^2 ∨ S^2): {got:?} vs {expected:?}"))?;
    Ok(format!("{} and {} visible factors; 1/(1-t^2-t^4) and 1/(1-2t) exact", d.len(), d2.len()))
}

fn criterion_3() -> Outcome {
    let r = check_porter(&[sphere(2), sphere(2)], 12);
    ensure(r.verdict == Verdict::Equal, format!("verdict {}", r.verdict))?;
    let expected = PoincareSeries::from_ints(&rational_coeffs(&[1], &[1, -2], 12), 12);
    match &r.lhs {
        polyco::verify::SeriesOutcome::Series { coeffs, .. } => ensure(*coeffs == expected, "lhs is not 1/(1-2t)")?,
        other => return Err(format!("lhs unsupported: {other:?}")),
    }
    Ok("∏P(ΩS^2)^2 · P(Ω fibre wedge) = free-product series through 12".into())
}

fn criterion_4() -> Outcome {
    let n = 10;
    let d = loop_decompose_wedge(&SimplicialComplex::simplex(3), &[sphere(2), sphere(2), sphere(2)], Bounds::through_degree(n))
        .map_err(|e| e.to_string())?;
    let got = ints(&d.series(n).map_err(|e| e.to_string())?);
    let expected = rational_coeffs(&[1], &[1, -3], n);
    ensure(got == expected, format!("{got:?} vs {expected:?}"))?;
    Ok(format!("{} factors, product 1/(1-3t) through degree 10", d.len()))
}

fn criterion_5() -> Outcome {
    for m in 1..=6usize {
        let spaces: Vec<SpaceExpr> = (0..m).map(|i| sphere(2 + i as u32 % 3)).collect();
        let d = loop_decompose_wedge(&SimplicialComplex::discrete(m), &spaces, Bounds::weight(8)).map_err(|e| e.to_string())?;
        ensure(d.bracket_factors().count() == 0, format!("m = {m}: bracket factors present"))?;
        ensure(d.len() == m, format!("m = {m}: {} factors", d.len()))?;
        for (i, f) in d.factors.iter().enumerate() {
            ensure(
                f.provenance == Provenance::Vertex { vertex: i + 1 } && f.expr == loop_of(spaces[i].clone()),
                format!("m = {m}: factor {i} is {}", f.text),
            )?;
        }
    }
    Ok("m = 1..6 give exactly ΩX_1, ..., ΩX_m".into())
}

fn criterion_6() -> Outcome {
    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).map_err(|e| e.to_string())?;
    let cp = vec![SpaceExpr::cp_infinity(); 4];
    for bounds in [Bounds::weight(1), Bounds::through_degree(12)] {
        let ms = loop_decompose_wedge(&square, &cp, bounds).map_err(|e| e.to_string())?.multiset();
        let expected = [(sphere(1), 4usize), (loop_of(sphere(3)), 4)].into_iter().collect();
        ensure(ms == expected, format!("W = {}: {ms:?}", bounds.weight))?;
    }
    // Independent expansions: 1/(1-t)^4 against (1+t)^2/(1-2t-t^2).
    let lhs = rational_coeffs(&[1], &[1, -4, 6, -4, 1], 5);
    let rhs = rational_coeffs(&[1, 2, 1], &[1, -2, -1], 5);
    let first = (0..=5).find(|&d| lhs[d] != rhs[d]).ok_or("oracles agree")?;
    ensure((first, lhs[first], rhs[first]) == (3, 20, 24), format!("oracle difference at {first}"))?;
    for n in [5, 8] {
        let r = check_counterexample(n);
        let expected = Verdict::FirstDifference { degree: 3, lhs: int(20), rhs: int(24) };
        ensure(r.verdict == expected, format!("N = {n}: {}", r.verdict))?;
    }
    Ok("multiset {S^1 ×4, ΩS^3 ×4}; FirstDifference(3, 20, 24) at N = 5 and 8".into())
}

fn int(v: i64) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(v.into())
}

fn criterion_7() -> Outcome {
    let k = SimplicialComplex::simplex_boundary(2);
    let pairs = PairAssignment::path_fibrations(&[sphere(3), sphere(4)]);
    let d = loop_decompose_contractible(&k, &pairs, Bounds::weight(1)).map_err(|e| e.to_string())?;
    ensure(d.len() == 1, format!("{} factors", d.len()))?;
    let cojoin = evaluate_special(&k, &pairs).ok_or("∂Δ^1 with contractible domains is not evaluated")?;
    let looped = SpaceExpr::loop_of(cojoin);
    ensure(expr_equal(&d.factors[0].expr, &looped), format!("{} vs {looped}", d.factors[0].text))?;
    let expected = SpaceExpr::loop_n(
        SpaceExpr::susp(SpaceExpr::smash(vec![SpaceExpr::loop_of(sphere(3)), SpaceExpr::loop_of(sphere(4))])),
        2,
    );
    ensure(expr_equal(&d.factors[0].expr, &expected), format!("{} is not Ω^2Σ(ΩA_1 ∧ ΩA_2)", d.factors[0].text))?;
    Ok(format!("single factor {}", d.factors[0].text))
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    for m in 3..=4usize {
        let k = SimplicialComplex::simplex_boundary(m);
        let spaces: Vec<SpaceExpr> = (0..m).map(|_| sphere(2)).collect();
        let d = loop_decompose_contractible(&k, &PairAssignment::path_fibrations(&spaces), Bounds::weight(5).with_degree(12))
            .map_err(|e| e.to_string())?;
        ensure(d.bracket_factors().count() > 0, format!("m = {m}: no bracket factors"))?;
        for f in d.bracket_factors() {
            match &f.provenance {
                Provenance::Bracket { support, .. } => {
                    ensure(*support == VertexSet::full(m), format!("m = {m}: {} has support {support:?}", f.text))?
                }
                other => return Err(format!("unexpected provenance {other}")),
            }
        }
        total += d.bracket_factors().count();
    }
    Ok(format!("{total} bracket factors, all with I_b = [m]"))
}

fn criterion_9() -> Outcome {
    for m in 3..=6usize {
        let h = SimplicialComplex::simplex_boundary(m).homology();
        let mut expected = vec![0; m - 1];
        expected[m - 2] = 1;
        ensure(h.ranks == expected && h.minus_one == 0, format!("∂Δ^{}: {:?}", m - 1, h.ranks))?;
    }
    let square = SimplicialComplex::build(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).map_err(|e| e.to_string())?;
    ensure(square.homology().ranks == vec![0, 1], format!("square: {:?}", square.homology().ranks))?;
    Ok("∂Δ^{m-1} ~ S^{m-2} for m = 3..6; square [0, 1]".into())
}

fn criterion_10() -> Outcome {
    let n = 8;
    let strategy = (arb_complex_with_spaces(4), arb_complex_with_spaces(4));
    let mut runner = TestRunner::deterministic();
    let mut seen = Vec::new();
    for _ in 0..3 {
        let ((k1, s1), (k2, s2)) = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let bounds = Bounds::through_degree(n);
        let spaces: Vec<SpaceExpr> = s1.iter().chain(&s2).cloned().collect();
        let d1 = loop_decompose_wedge(&k1, &s1, bounds).map_err(|e| e.to_string())?;
        let d2 = loop_decompose_wedge(&k2, &s2, bounds).map_err(|e| e.to_string())?;
        let union = disjoint_union_decomp(&k1, &k2, &spaces, bounds).map_err(|e| e.to_string())?;
        let joined = k1.disjoint_union(&k2).map_err(|e| e.to_string())?;
        let direct = loop_decompose_wedge(&joined, &spaces, bounds).map_err(|e| e.to_string())?;
        let expected = multiset_union(&d1, &d2);
        ensure(union.multiset() == expected, format!("{k1} ⊔ {k2}: union multiset differs"))?;
        ensure(direct.multiset() == expected, format!("{k1} ⊔ {k2}: direct decomposition multiset differs"))?;
        let product = d1.series(n).and_then(|a| Ok(a.mul(&d2.series(n)?)?)).map_err(|e| e.to_string())?;
        ensure(direct.series(n).map_err(|e| e.to_string())? == product, format!("{k1} ⊔ {k2}: series not multiplicative"))?;
        seen.push(format!("{k1} ⊔ {k2}"));
    }
    Ok(seen.join("; "))
}

fn criterion_11() -> Outcome {
    let config = Config { cases: 256, failure_persistence: None, ..Config::default() };
    let mut summary = Vec::new();
    macro_rules! suite {
        ($name:expr, $strategy:expr, $body:expr) => {{
            let mut runner = TestRunner::new(config.clone());
            runner.run(&$strategy, $body).map_err(|e| format!("{}: {e}", $name))?;
            summary.push(format!("{} x{}", $name, config.cases));
        }};
    }
    suite!("normalize idempotence", arb_expr(), |e| prop_normalize_idempotent(&e));
    suite!("series ring laws", (arb_series(), arb_series(), arb_series()), |(a, b, c)| prop_ring_laws(&a, &b, &c));
    suite!("truncation soundness", (arb_complex_with_spaces(4), 1usize..=4), |((k, s), w)| prop_truncation_soundness(&k, &s, w));
    suite!("monotonicity in W", (arb_complex_with_spaces(3), 1usize..=3), |((k, s), w)| prop_monotone_in_weight(&k, &s, w));
    Ok(summary.join(", "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Hall basis counts equal Witt dimensions", criterion_1),
        ("Hilton-Milnor series identities", criterion_2),
        ("Porter decomposition vs free product", criterion_3),
        ("wedge case on the full simplex", criterion_4),
        ("discrete complexes give only base factors", criterion_5),
        ("square with CP^∞: factors and counterexample", criterion_6),
        ("cojoin from contractible domains", criterion_7),
        ("missing-face filter on simplex boundaries", criterion_8),
        ("homology of boundaries and the square", criterion_9),
        ("disjoint unions", criterion_10),
        ("randomized invariant suites", criterion_11),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {:>2}  {name}: {reason} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
