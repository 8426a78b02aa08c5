//! Exact-rational Poincaré series truncated at a fixed degree, and the
//! evaluation rules that turn space expressions into series.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spacexpr::{conn, normalize, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation mismatch: degree {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("non-invertible series: constant term is {0}")]
    NonInvertible(String),
}

/// A power series `Σ c_d t^d` known through degree `N = coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincareSeries {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl PoincareSeries {
    pub fn zero(n: usize) -> Self {
        PoincareSeries { coeffs: vec![BigRational::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(1, n)
    }

    pub fn constant(c: i64, n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = q(c);
        s
    }

    /// `t^d` (zero when `d > n`).
    pub fn monomial(d: usize, n: usize) -> Self {
        let mut s = Self::zero(n);
        if d <= n {
            s.coeffs[d] = BigRational::one();
        }
        s
    }

    /// Integer coefficients, padded with zeros or cut to degree `n`.
    pub fn from_ints(coeffs: &[i64], n: usize) -> Self {
        let mut s = Self::zero(n);
        for (d, &c) in coeffs.iter().enumerate().take(n + 1) {
            s.coeffs[d] = q(c);
        }
        s
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>, n: usize) -> Self {
        coeffs.resize(n + 1, BigRational::zero());
        PoincareSeries { coeffs }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &BigRational {
        &self.coeffs[d]
    }

    /// Coefficients as integers, when they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }

    fn check(&self, other: &Self) -> Result<usize, SeriesError> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(SeriesError::TruncationMismatch(self.degree_bound(), other.degree_bound()));
        }
        Ok(self.degree_bound())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(PoincareSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(PoincareSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PoincareSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check(other)?;
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NonInvertible(self.coeffs[0].to_string()));
        }
        let c0 = self.coeffs[0].recip();
        let n = self.degree_bound();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0.clone();
        for d in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=d {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv.coeffs[d - k];
                }
            }
            inv.coeffs[d] = -acc * &c0;
        }
        Ok(inv)
    }

    /// `p - 1`.
    pub fn reduced(&self) -> Self {
        let mut out = self.clone();
        out.coeffs[0] -= BigRational::one();
        out
    }

    /// Multiplication by `t^k`, keeping the same truncation.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.degree_bound();
        let mut out = Self::zero(n);
        for d in k..=n {
            out.coeffs[d] = self.coeffs[d - k].clone();
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(self.degree_bound());
        for _ in 0..e {
            out = out.mul(self).expect("same truncation");
        }
        out
    }

    /// Same series cut to a smaller truncation degree.
    pub fn truncate(&self, n: usize) -> Self {
        assert!(n <= self.degree_bound(), "cannot extend a truncated series");
        PoincareSeries { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn compare(&self, other: &Self) -> Result<Comparison, SeriesError> {
        self.check(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map_or(Comparison::Equal, |(degree, (a, b))| Comparison::FirstDifference {
                degree,
                lhs: a.clone(),
                rhs: b.clone(),
            }))
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let coeff = if a.is_one() && d > 0 { String::new() } else { a.to_string() };
            match d {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.degree_bound() + 1)
    }
}

impl Serialize for PoincareSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(BigIntJson, BigIntJson)> =
            self.coeffs.iter().map(|c| (BigIntJson(c.numer().clone()), BigIntJson(c.denom().clone()))).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PoincareSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(BigIntJson, BigIntJson)> = Vec::deserialize(deserializer)?;
        if pairs.is_empty() {
            return Err(serde::de::Error::custom("a series needs at least one coefficient"));
        }
        let mut coeffs = Vec::with_capacity(pairs.len());
        for (n, d) in pairs {
            if d.0.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n.0, d.0));
        }
        Ok(PoincareSeries { coeffs })
    }
}

/// An integer that serializes as a JSON number when it fits in `i64` and as
/// a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BigIntJson(BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.collect_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(BigIntJson(BigInt::from(v))),
            Raw::Text(s) => s.parse().map(BigIntJson).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    FirstDifference { degree: usize, lhs: BigRational, rhs: BigRational },
}

/// A rational function `num(t) / den(t)` with integer coefficients, lowest
/// degree first. `den[0]` must be 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RationalSeries {
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

impl RationalSeries {
    pub fn new(num: Vec<i64>, den: Vec<i64>) -> Self {
        RationalSeries { num, den }
    }

    pub fn expand(&self, n: usize) -> Result<PoincareSeries, SeriesError> {
        let num = PoincareSeries::from_ints(&self.num, n);
        let den = PoincareSeries::from_ints(&self.den, n);
        num.mul(&den.invert()?)
    }
}

/// Why a series could not be computed, innermost reason last.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}", reasons.join(": "))]
pub struct Unsupported {
    pub reasons: Vec<String>,
}

impl Unsupported {
    pub fn new(reason: impl Into<String>) -> Self {
        Unsupported { reasons: vec![reason.into()] }
    }

    pub fn context(mut self, outer: impl Into<String>) -> Self {
        self.reasons.insert(0, outer.into());
        self
    }
}

impl From<SeriesError> for Unsupported {
    fn from(e: SeriesError) -> Self {
        Unsupported::new(e.to_string())
    }
}

/// Poincaré series of `e` through degree `n`.
///
/// Evaluation is structural; when no rule applies to a node, the node is
/// normalized and retried once before giving up.
pub fn series_of(e: &SpaceExpr, n: usize) -> Result<PoincareSeries, Unsupported> {
    match structural(e, n) {
        Ok(s) => Ok(s),
        Err(err) => {
            let canon = normalize(e);
            if &canon != e {
                structural(&canon, n).map_err(|inner| inner.context(format!("`{e}` (as `{canon}`)")))
            } else {
                Err(err)
            }
        }
    }
}

fn structural(e: &SpaceExpr, n: usize) -> Result<PoincareSeries, Unsupported> {
    match e {
        SpaceExpr::Point => Ok(PoincareSeries::one(n)),
        SpaceExpr::Sphere { n: 0 } => Ok(PoincareSeries::constant(2, n)),
        SpaceExpr::Sphere { n: d } => Ok(PoincareSeries::one(n).add(&PoincareSeries::monomial(*d as usize, n))?),
        SpaceExpr::Atom(decl) => {
            if decl.contractible {
                return Ok(PoincareSeries::one(n));
            }
            match &decl.series {
                Some(r) => Ok(r.expand(n)?),
                None => Err(Unsupported::new(format!("no series declared for atom `{}`", decl.name))),
            }
        }
        SpaceExpr::Wedge { summands } => {
            let mut acc = PoincareSeries::one(n);
            for s in summands {
                acc = acc.add(&series_of(s, n)?.reduced())?;
            }
            Ok(acc)
        }
        SpaceExpr::Product { factors } => {
            let mut acc = PoincareSeries::one(n);
            for f in factors {
                acc = acc.mul(&series_of(f, n)?)?;
            }
            Ok(acc)
        }
        SpaceExpr::Smash { factors } => {
            if factors.is_empty() {
                return Ok(PoincareSeries::constant(2, n));
            }
            let mut acc = PoincareSeries::one(n);
            for f in factors {
                acc = acc.mul(&series_of(f, n)?.reduced())?;
            }
            Ok(PoincareSeries::one(n).add(&acc)?)
        }
        SpaceExpr::Susp { of, times } => {
            let inner = series_of(of, n)?;
            Ok(PoincareSeries::one(n).add(&inner.reduced().shift(*times as usize))?)
        }
        SpaceExpr::Loop { of, times } => loop_series(of, *times, n),
        SpaceExpr::MapFromSuspRealization { label, .. } => {
            Err(Unsupported::new(format!("mapping space out of Σ|{label}| has no certified splitting")))
        }
    }
}

/// Rational homology of `K(Q, d)`.
fn eilenberg_mac_lane(d: usize, n: usize) -> Result<PoincareSeries, SeriesError> {
    let td = PoincareSeries::monomial(d, n);
    if d.is_multiple_of(2) {
        PoincareSeries::one(n).sub(&td)?.invert()
    } else {
        PoincareSeries::one(n).add(&td)
    }
}

fn loop_series(of: &SpaceExpr, times: u32, n: usize) -> Result<PoincareSeries, Unsupported> {
    let shown = || SpaceExpr::loop_n(of.clone(), times).to_string();
    match of {
        SpaceExpr::Point => Ok(PoincareSeries::one(n)),
        // Ω^k S^m with m - k ≥ 1 is rationally a product of Eilenberg–MacLane
        // spaces: one in degree m - k for odd m, and also one in degree
        // 2m - 1 - k for even m.
        SpaceExpr::Sphere { n: m } => {
            let (m, k) = (*m as i64, times as i64);
            if m - k < 1 {
                return Err(Unsupported::new(format!("`{}` is not connected", shown())));
            }
            let mut s = eilenberg_mac_lane((m - k) as usize, n)?;
            if m % 2 == 0 {
                s = s.mul(&eilenberg_mac_lane((2 * m - 1 - k) as usize, n)?)?;
            }
            Ok(s)
        }
        SpaceExpr::Loop { of: inner, times: t } => loop_series(inner, times + t, n),
        SpaceExpr::Product { factors } => {
            let mut acc = PoincareSeries::one(n);
            for f in factors {
                acc = acc.mul(&loop_series(f, times, n)?)?;
            }
            Ok(acc)
        }
        SpaceExpr::Atom(decl) if times == 1 && !decl.contractible => {
            if let Some(r) = &decl.loop_series {
                return Ok(r.expand(n)?);
            }
            match &decl.loop_replacement {
                Some(rep) => series_of(rep, n).map_err(|u| u.context(format!("loop of `{}`", decl.name))),
                None => Err(Unsupported::new(format!("no loop-space series for atom `{}`", decl.name))),
            }
        }
        SpaceExpr::Susp { of: inner, times: s } if times == 1 => {
            // ΩΣY with Y = Σ^{s-1} inner connected: tensor algebra on H̃(Y).
            let y = SpaceExpr::susp_n((**inner).clone(), s - 1);
            let connected = conn(&y).map(|c| c.at_least(0)).unwrap_or(false);
            if !connected {
                return Err(Unsupported::new(format!("`{y}` is not connected, so `{}` is outside the tensor-algebra rule", shown())));
            }
            let ry = series_of(&y, n)?.reduced();
            Ok(PoincareSeries::one(n).sub(&ry)?.invert()?)
        }
        SpaceExpr::Wedge { summands } if times == 1 => {
            // Free-product rule: 1/P = Σ 1/P_i - (k - 1).
            let mut acc = PoincareSeries::constant(1 - summands.len() as i64, n);
            for s in summands {
                let simply_connected = conn(s).map(|c| c.at_least(1)).unwrap_or(false);
                if !simply_connected {
                    return Err(Unsupported::new(format!("wedge summand `{s}` is not simply connected")));
                }
                let p = loop_series(s, 1, n).map_err(|u| u.context(format!("loop of wedge summand `{s}`")))?;
                acc = acc.add(&p.invert()?)?;
            }
            Ok(acc.invert()?)
        }
        _ => Err(Unsupported::new(format!("no series rule for `{}`", shown()))),
    }
}
