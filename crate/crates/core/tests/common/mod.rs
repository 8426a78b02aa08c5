//! Strategies, oracles and property bodies shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use polyco::decomp::{loop_decompose_wedge, Bounds, Decomposition};
use polyco::liealg::{hall_basis, symbols};
use polyco::series::series_of;
use polyco::spacexpr::{normalize, AtomDecl};
use polyco::{PoincareSeries, SimplicialComplex, SpaceExpr, VertexSet};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

// ------------------------------------------------------------ oracles

/// Integer coefficients of `num / den` through degree `n`, by long division.
pub fn rational_coeffs(num: &[i64], den: &[i64], n: usize) -> Vec<i64> {
    assert_eq!(den[0], 1);
    let mut out = vec![0i64; n + 1];
    for d in 0..=n {
        let mut c = num.get(d).copied().unwrap_or(0);
        for k in 1..=d.min(den.len() - 1) {
            c -= den[k] * out[d - k];
        }
        out[d] = c;
    }
    out
}

pub fn ints(s: &PoincareSeries) -> Vec<i64> {
    s.integer_coeffs().expect("integer series")
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Lyndon words of a multidegree counted by brute force: aperiodic words
/// strictly smaller than each of their proper rotations.
pub fn brute_force_lyndon_count(multidegree: &[usize]) -> u64 {
    let n: usize = multidegree.iter().sum();
    if n == 0 {
        return 0;
    }
    let mut remaining = multidegree.to_vec();
    let mut word = Vec::with_capacity(n);
    let mut count = 0;
    fn rec(remaining: &mut Vec<usize>, word: &mut Vec<usize>, n: usize, count: &mut u64) {
        if word.len() == n {
            let is_lyndon = (1..n).all(|r| {
                let rotated: Vec<usize> = word[r..].iter().chain(&word[..r]).copied().collect();
                *word < rotated
            });
            if is_lyndon {
                *count += 1;
            }
            return;
        }
        for letter in 0..remaining.len() {
            if remaining[letter] > 0 {
                remaining[letter] -= 1;
                word.push(letter);
                rec(remaining, word, n, count);
                word.pop();
                remaining[letter] += 1;
            }
        }
    }
    rec(&mut remaining, &mut word, n, &mut count);
    count
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(1/n) Σ_{d | gcd} μ(d) (n/d)! / ∏ (k_i/d)!`, as multinomials.
pub fn necklace_formula(multidegree: &[usize]) -> u64 {
    let n: u64 = multidegree.iter().map(|&k| k as u64).sum();
    if n == 0 {
        return 0;
    }
    let g = multidegree.iter().fold(0u64, |g, &k| gcd(g, k as u64));
    let mut total: i64 = 0;
    for d in 1..=g {
        if g % d != 0 {
            continue;
        }
        let mut left = n / d;
        let mut multinomial = 1u64;
        for &k in multidegree {
            let k = k as u64 / d;
            multinomial *= binomial(left, k);
            left -= k;
        }
        total += mobius(d) * multinomial as i64;
    }
    (total / n as i64) as u64
}

/// Number of Hall brackets of exactly this multidegree on `x_1..x_k`.
pub fn hall_count(multidegree: &[usize]) -> usize {
    let k = multidegree.len();
    let weight: usize = multidegree.iter().sum();
    hall_basis(&symbols(k), weight)
        .into_iter()
        .filter(|b| b.symbol_counts(k) == multidegree)
        .count()
}

pub fn multiset_union(a: &Decomposition, b: &Decomposition) -> BTreeMap<SpaceExpr, usize> {
    let mut out = a.multiset();
    for (e, k) in b.multiset() {
        *out.entry(e).or_insert(0) += k;
    }
    out
}

// ------------------------------------------------------------ strategies

pub fn arb_complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        let limit = (1u64 << m) - 1;
        prop::collection::vec(1..=limit, 0..5).prop_map(move |masks| {
            let faces: Vec<VertexSet> = masks
                .into_iter()
                .map(|mask| VertexSet::from_vertices((1..=m).filter(|v| mask >> (v - 1) & 1 == 1)).unwrap())
                .collect();
            SimplicialComplex::from_sets(m, faces)
        })
    })
}

/// Simply connected spaces with known series.
pub fn arb_simply_connected() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        4 => (2u32..=4).prop_map(SpaceExpr::sphere),
        1 => Just(SpaceExpr::cp_infinity()),
    ]
}

pub fn arb_spaces(m: usize) -> impl Strategy<Value = Vec<SpaceExpr>> {
    prop::collection::vec(arb_simply_connected(), m)
}

pub fn arb_complex_with_spaces(max_m: usize) -> impl Strategy<Value = (SimplicialComplex, Vec<SpaceExpr>)> {
    arb_complex(max_m).prop_flat_map(|k| {
        let m = k.m();
        (Just(k), arb_spaces(m))
    })
}

pub fn arb_expr() -> impl Strategy<Value = SpaceExpr> {
    let leaf = prop_oneof![
        Just(SpaceExpr::Point),
        (0u32..=4).prop_map(SpaceExpr::sphere),
        (1i64..=3).prop_map(|c| SpaceExpr::atom(AtomDecl::new(format!("Y{c}"), c))),
        Just(SpaceExpr::cp_infinity()),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), 1u32..=2).prop_map(|(e, t)| SpaceExpr::loop_n(e, t)),
            (inner.clone(), 1u32..=2).prop_map(|(e, t)| SpaceExpr::susp_n(e, t)),
            prop::collection::vec(inner.clone(), 0..3).prop_map(SpaceExpr::smash),
            prop::collection::vec(inner.clone(), 0..3).prop_map(SpaceExpr::wedge),
            prop::collection::vec(inner, 0..3).prop_map(SpaceExpr::product),
        ]
    })
}

pub const SERIES_DEGREE: usize = 6;

pub fn arb_series() -> impl Strategy<Value = PoincareSeries> {
    prop::collection::vec(-5i64..=5, SERIES_DEGREE + 1).prop_map(|c| PoincareSeries::from_ints(&c, SERIES_DEGREE))
}

// ------------------------------------------------------------ properties

pub fn prop_normalize_idempotent(e: &SpaceExpr) -> Result<(), TestCaseError> {
    let once = normalize(e);
    prop_assert_eq!(normalize(&once), once.clone());
    // The normal form must not change the homotopy invariants we can compute.
    if let (Ok(a), Ok(b)) = (series_of(e, 8), series_of(&once, 8)) {
        prop_assert_eq!(a, b);
    }
    if let (Ok(a), Ok(b)) = (polyco::conn(e), polyco::conn(&once)) {
        prop_assert_eq!(a, b);
    }
    Ok(())
}

pub fn prop_ring_laws(a: &PoincareSeries, b: &PoincareSeries, c: &PoincareSeries) -> Result<(), TestCaseError> {
    let add = |x: &PoincareSeries, y: &PoincareSeries| x.add(y).unwrap();
    let mul = |x: &PoincareSeries, y: &PoincareSeries| x.mul(y).unwrap();
    let one = PoincareSeries::one(SERIES_DEGREE);
    let zero = PoincareSeries::zero(SERIES_DEGREE);
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(mul(a, b), mul(b, a));
    prop_assert_eq!(add(&add(a, b), c), add(a, &add(b, c)));
    prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
    prop_assert_eq!(mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)));
    prop_assert_eq!(mul(a, &one), a.clone());
    prop_assert_eq!(add(a, &zero), a.clone());
    prop_assert_eq!(a.sub(a).unwrap(), zero);
    if a.coeff(0) != &BigRational::from_integer(BigInt::from(0)) {
        prop_assert_eq!(mul(a, &a.invert().unwrap()), one);
    } else {
        prop_assert!(a.invert().is_err());
    }
    Ok(())
}

/// Every factor of weight `w` is at least `w`-connected, both as recorded
/// and as recomputed from the expression.
pub fn prop_truncation_soundness(k: &SimplicialComplex, spaces: &[SpaceExpr], w: usize) -> Result<(), TestCaseError> {
    let d = loop_decompose_wedge(k, spaces, w).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for f in &d.factors {
        let recorded = f.conn.unwrap_or(i64::MAX);
        prop_assert!(recorded >= f.weight as i64, "{} of weight {} recorded {}", f.text, f.weight, recorded);
        let recomputed = polyco::conn(&f.expr).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(recomputed.at_least(f.weight as i64), "{} of weight {}", f.text, f.weight);
    }
    Ok(())
}

/// Raising `W` keeps every factor with its provenance and only appends;
/// the series through degree `W - 1` does not move.
pub fn prop_monotone_in_weight(k: &SimplicialComplex, spaces: &[SpaceExpr], w: usize) -> Result<(), TestCaseError> {
    let fail = |e: polyco::decomp::DecompError| TestCaseError::fail(e.to_string());
    let small = loop_decompose_wedge(k, spaces, Bounds::weight(w)).map_err(fail)?;
    let large = loop_decompose_wedge(k, spaces, Bounds::weight(w + 1)).map_err(fail)?;
    for f in &small.factors {
        prop_assert!(large.factors.contains(f), "factor {} lost at W = {}", f.text, w + 1);
    }
    prop_assert!(large.factors.iter().all(|f| small.factors.contains(f) || f.weight == w + 1));
    let n = w - 1;
    if let (Ok(a), Ok(b)) = (small.series(n), large.series(n)) {
        prop_assert_eq!(a, b);
    }
    Ok(())
}

pub fn prop_hall_matches_witt(multidegree: &[usize]) -> Result<(), TestCaseError> {
    let witt = polyco::witt_dimension(multidegree);
    prop_assert_eq!(witt.to_string(), hall_count(multidegree).to_string());
    prop_assert_eq!(witt.to_string(), necklace_formula(multidegree).to_string());
    Ok(())
}

pub fn standard_n_series(coeffs: &[i64], n: usize) -> PoincareSeries {
    PoincareSeries::from_ints(coeffs, n)
}

pub fn sphere(n: u32) -> SpaceExpr {
    SpaceExpr::sphere(n)
}

pub fn loop_of(e: SpaceExpr) -> SpaceExpr {
    normalize(&SpaceExpr::loop_of(e))
}

pub fn series(e: &SpaceExpr, n: usize) -> PoincareSeries {
    series_of(e, n).expect("supported series")
}
