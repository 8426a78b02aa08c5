//! Lyndon-word Hall bases of free ungraded Lie algebras.
//!
//! Two alphabets are used: plain symbols `x1 < x2 < …` for the Hilton–Milnor
//! decomposition, and the face generators `a{J}#i` (`J ⊆ I`, `|J| ≥ 2`,
//! `1 ≤ i ≤ |J|-1`) for coproduct decompositions. A single global order on
//! generators makes every sub-alphabet basis a subset of the full one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scomplex::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("malformed bracket `{input}` at byte {pos}: {msg}")]
    Parse { input: String, pos: usize, msg: &'static str },
    #[error("`{0}` is not a Hall bracket (not the standard bracketing of a Lyndon word)")]
    NotHall(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    /// `x_i` of a plain alphabet.
    Symbol(u32),
    /// `a_{J,i}`.
    Face { subset: VertexSet, copy: u32 },
}

impl Generator {
    pub fn face(subset: VertexSet, copy: u32) -> Self {
        debug_assert!(subset.len() >= 2 && copy >= 1 && (copy as usize) < subset.len());
        Generator::Face { subset, copy }
    }

    /// Vertices this generator touches; a symbol `x_i` touches vertex `i`.
    pub fn support(&self) -> VertexSet {
        match *self {
            Generator::Symbol(i) => VertexSet::singleton(i as usize),
            Generator::Face { subset, .. } => subset,
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Generator::Symbol(a), Generator::Symbol(b)) => a.cmp(b),
            (Generator::Symbol(_), Generator::Face { .. }) => Ordering::Less,
            (Generator::Face { .. }, Generator::Symbol(_)) => Ordering::Greater,
            (Generator::Face { subset: s, copy: c }, Generator::Face { subset: t, copy: d }) => {
                s.cmp(t).then(c.cmp(d))
            }
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Symbol(i) => write!(f, "x{i}"),
            Generator::Face { subset, copy } => write!(f, "a{subset}#{copy}"),
        }
    }
}

/// `x_1, …, x_m`.
pub fn symbols(m: usize) -> Vec<Generator> {
    (1..=m as u32).map(Generator::Symbol).collect()
}

/// `S_I = {a_{J,i} : J ⊆ I, |J| ≥ 2, 1 ≤ i ≤ |J|-1}` in the global order.
pub fn generators_for(subset: VertexSet) -> Vec<Generator> {
    let mut out: Vec<Generator> = subset
        .subsets()
        .filter(|j| j.len() >= 2)
        .flat_map(|j| (1..j.len() as u32).map(move |i| Generator::face(j, i)))
        .collect();
    out.sort();
    out
}

/// A Hall basis element, kept as its Lyndon word. The bracketing is the
/// standard (right) factorization `w = uv` with `v` the longest proper Lyndon
/// suffix, applied recursively.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bracket {
    word: Vec<Generator>,
}

/// Explicit binary tree of a bracket.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BracketTree {
    Leaf(Generator),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    fn leaves(&self, out: &mut Vec<Generator>) {
        match self {
            BracketTree::Leaf(g) => out.push(*g),
            BracketTree::Node(l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(g) => write!(f, "{g}"),
            BracketTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

pub fn is_lyndon(word: &[Generator]) -> bool {
    !word.is_empty() && (1..word.len()).all(|i| word < &word[i..])
}

/// Statistics of a bracket over face generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketStats {
    /// `b(J)`: total count of the generators `a_{J,i}` over all `i`.
    pub by_subset: BTreeMap<VertexSet, usize>,
    /// `l_1(b), …, l_m(b)`.
    pub vertex_counts: Vec<usize>,
    pub weight: usize,
}

impl BracketStats {
    /// `{j : l_j(b) ≠ 0}`.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (i, &c) in self.vertex_counts.iter().enumerate() {
            if c > 0 {
                s.insert(i + 1);
            }
        }
        s
    }
}

impl Bracket {
    pub fn generator(g: Generator) -> Self {
        Bracket { word: vec![g] }
    }

    pub fn from_lyndon_word(word: Vec<Generator>) -> Option<Self> {
        is_lyndon(&word).then_some(Bracket { word })
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn weight(&self) -> usize {
        self.word.len()
    }

    pub fn is_generator(&self) -> bool {
        self.word.len() == 1
    }

    /// Standard factorization into `[u, v]`; `None` for a generator.
    pub fn factors(&self) -> Option<(Bracket, Bracket)> {
        if self.word.len() < 2 {
            return None;
        }
        let split = (1..self.word.len()).find(|&i| is_lyndon(&self.word[i..]))?;
        Some((
            Bracket { word: self.word[..split].to_vec() },
            Bracket { word: self.word[split..].to_vec() },
        ))
    }

    pub fn tree(&self) -> BracketTree {
        match self.factors() {
            None => BracketTree::Leaf(self.word[0]),
            Some((u, v)) => BracketTree::Node(Box::new(u.tree()), Box::new(v.tree())),
        }
    }

    pub fn multidegree(&self) -> BTreeMap<Generator, usize> {
        let mut out = BTreeMap::new();
        for g in &self.word {
            *out.entry(*g).or_insert(0) += 1;
        }
        out
    }

    /// `k_i(b)` for a bracket over `x_1..x_m`. Face generators are ignored.
    pub fn symbol_counts(&self, m: usize) -> Vec<usize> {
        let mut counts = vec![0; m];
        for g in &self.word {
            if let Generator::Symbol(i) = g {
                counts[*i as usize - 1] += 1;
            }
        }
        counts
    }

    pub fn stats(&self, m: usize) -> BracketStats {
        let mut by_subset = BTreeMap::new();
        let mut vertex_counts = vec![0; m];
        for g in &self.word {
            if let Generator::Face { subset, .. } = g {
                *by_subset.entry(*subset).or_insert(0) += 1;
                for v in subset.iter() {
                    vertex_counts[v - 1] += 1;
                }
            }
        }
        BracketStats { by_subset, vertex_counts, weight: self.weight() }
    }

    /// Vertices touched by any generator of the bracket.
    pub fn support(&self) -> VertexSet {
        self.word.iter().fold(VertexSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// `I_b = I ∩ {j : l_j(b) ≠ 0}`.
    pub fn restricted_support(&self, subset: VertexSet) -> VertexSet {
        subset.intersection(self.support())
    }

    /// The same bracket with every vertex (or symbol index) moved up by `offset`.
    pub fn shift_vertices(&self, offset: usize) -> Bracket {
        let word = self
            .word
            .iter()
            .map(|g| match *g {
                Generator::Symbol(i) => Generator::Symbol(i + offset as u32),
                Generator::Face { subset, copy } => Generator::Face { subset: subset.shifted(offset), copy },
            })
            .collect();
        Bracket { word }
    }

    /// Parses the nested pair notation produced by `Display`, e.g.
    /// `[a{1,2}#1,a{2,3}#1]` or `[x1,[x1,x2]]`.
    pub fn parse(input: &str) -> Result<Bracket, LieError> {
        let mut p = Parser { input, pos: 0 };
        let tree = p.tree()?;
        if p.pos != input.len() {
            return Err(p.err("trailing input"));
        }
        let mut word = Vec::new();
        tree.leaves(&mut word);
        let bracket = Bracket::from_lyndon_word(word).ok_or_else(|| LieError::NotHall(input.to_string()))?;
        if bracket.tree() != tree {
            return Err(LieError::NotHall(input.to_string()));
        }
        Ok(bracket)
    }
}

impl Ord for Bracket {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Bracket {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree())
    }
}

impl Serialize for Bracket {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bracket {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Bracket::parse(&s).map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &'static str) -> LieError {
        LieError::Parse { input: self.input.to_string(), pos: self.pos, msg }
    }

    fn peek(&self) -> Option<u8> {
        self.input.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8, msg: &'static str) -> Result<(), LieError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(msg))
        }
    }

    fn number(&mut self) -> Result<u32, LieError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.input[start..self.pos].parse().map_err(|_| LieError::Parse {
            input: self.input.to_string(),
            pos: start,
            msg: "expected a number",
        })
    }

    fn tree(&mut self) -> Result<BracketTree, LieError> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let l = self.tree()?;
                self.expect(b',', "expected `,`")?;
                let r = self.tree()?;
                self.expect(b']', "expected `]`")?;
                Ok(BracketTree::Node(Box::new(l), Box::new(r)))
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.number()?;
                if i == 0 {
                    return Err(self.err("symbols start at x1"));
                }
                Ok(BracketTree::Leaf(Generator::Symbol(i)))
            }
            Some(b'a') => {
                self.pos += 1;
                self.expect(b'{', "expected `{`")?;
                let mut vs = vec![self.number()? as usize];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    vs.push(self.number()? as usize);
                }
                self.expect(b'}', "expected `}`")?;
                self.expect(b'#', "expected `#`")?;
                let copy = self.number()?;
                let subset = VertexSet::from_vertices(vs).map_err(|_| self.err("vertex out of range"))?;
                if subset.len() < 2 || copy == 0 || copy as usize >= subset.len() {
                    return Err(self.err("generator index outside 1..|J|-1"));
                }
                Ok(BracketTree::Leaf(Generator::face(subset, copy)))
            }
            _ => Err(self.err("expected `[`, `x` or `a`")),
        }
    }
}

/// All Lyndon words of length at most `weight_bound` on `alphabet`, as
/// brackets ordered by weight and then lexicographically.
pub fn hall_basis(alphabet: &[Generator], weight_bound: usize) -> Vec<Bracket> {
    hall_basis_within(alphabet, weight_bound, |_| 0, 0)
}

/// Like [`hall_basis`], keeping only words whose summed letter `cost` is at
/// most `budget`. Costs must be non-negative; a zero-cost alphabet ignores the
/// budget. Pruning happens on prefixes, so the cost must be additive.
pub fn hall_basis_within<F>(alphabet: &[Generator], weight_bound: usize, cost: F, budget: u64) -> Vec<Bracket>
where
    F: Fn(&Generator) -> u64,
{
    let mut letters: Vec<Generator> = alphabet.to_vec();
    letters.sort();
    letters.dedup();
    let costs: Vec<u64> = letters.iter().map(&cost).collect();
    let unbounded = costs.iter().all(|&c| c == 0);
    let mut out = Vec::new();
    if weight_bound == 0 {
        return out;
    }

    struct Walk<'a> {
        letters: &'a [Generator],
        costs: &'a [u64],
        budget: Option<u64>,
        weight_bound: usize,
        word: Vec<usize>,
        out: &'a mut Vec<Bracket>,
    }

    // Prenecklace recursion: `period` is the length of the longest Lyndon
    // prefix; the word is Lyndon exactly when period == length.
    fn extend(w: &mut Walk<'_>, period: usize, spent: u64) {
        let t = w.word.len();
        if period == t {
            let word = w.word.iter().map(|&i| w.letters[i]).collect();
            w.out.push(Bracket { word });
        }
        if t == w.weight_bound {
            return;
        }
        for next in w.word[t - period]..w.letters.len() {
            let total = spent.saturating_add(w.costs[next]);
            if w.budget.is_some_and(|b| total > b) {
                continue;
            }
            let p = if next == w.word[t - period] { period } else { t + 1 };
            w.word.push(next);
            extend(w, p, total);
            w.word.pop();
        }
    }

    let mut walk = Walk {
        letters: &letters,
        costs: &costs,
        budget: (!unbounded).then_some(budget),
        weight_bound,
        word: Vec::with_capacity(weight_bound),
        out: &mut out,
    };
    for first in 0..letters.len() {
        if walk.budget.is_some_and(|b| costs[first] > b) {
            continue;
        }
        walk.word.push(first);
        extend(&mut walk, 1, costs[first]);
        walk.word.pop();
    }
    out.sort();
    out
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
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

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Dimension of the multidegree-`(n_1..n_k)` component of the free Lie
/// algebra, by the multigraded Witt formula
/// `(1/n) Σ_{d | gcd} μ(d) (n/d)! / Π (n_i/d)!`.
pub fn witt_dimension(multidegree: &[usize]) -> BigUint {
    let n: u64 = multidegree.iter().map(|&x| x as u64).sum();
    assert!(n >= 1, "total weight must be positive");
    let g = multidegree.iter().fold(0u64, |acc, &x| acc.gcd(&(x as u64)));
    let mut sum = BigInt::zero();
    for d in (1..=g).filter(|d| g % d == 0) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let mut term = factorial(n / d);
        for &ni in multidegree {
            term /= factorial(ni as u64 / d);
        }
        sum += term * mu;
    }
    let (q, r) = sum.div_rem(&BigInt::from(n));
    debug_assert!(r.is_zero() && !q.is_negative());
    q.to_biguint().expect("Witt dimension is non-negative")
}
