//! Finite simplicial complexes on the ground set `{1..m}`.
//!
//! A complex is stored by its facets. The empty face is always present and is
//! never stored. Vertices of the ground set that lie in no facet are kept as
//! ghost vertices: the polyhedral coproduct over `K` depends on `m`, not only
//! on the covered vertices.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported ground set. Vertex sets are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("a complex needs at least one vertex (m = 0)")]
    EmptyGroundSet,
    #[error("vertex {vertex} is outside the ground set 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("faces must be nonempty")]
    EmptyFace,
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("overlap of {overlap} vertices does not fit a complex on {available} vertices")]
    OverlapTooLarge { overlap: usize, available: usize },
    #[error("shared complex is not a subcomplex of the {0} complex")]
    NotSubcomplex(&'static str),
}

/// A set of vertices drawn from `{1..64}`.
///
/// Ordering is lexicographic on the ascending vertex sequence, so
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, ComplexError> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(ComplexError::VertexOutOfRange { vertex: v, m: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1 << (v - 1))
    }

    /// `{1..m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "ground set too large");
        if m == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.union(VertexSet::singleton(v));
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !VertexSet::singleton(v).0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, the empty set included, in no particular order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(VertexSet(cur))
        })
    }

    /// Adds `offset` to every vertex.
    pub fn shifted(self, offset: usize) -> Self {
        if self.0 == 0 {
            return self;
        }
        let top = self.max().unwrap_or(0) + offset;
        assert!(top <= MAX_VERTICES, "shifted vertex {top} out of range");
        VertexSet(self.0 << offset)
    }

    /// Re-indexes a subset of `domain` to `{1..|domain|}` by rank in `domain`.
    pub fn compress(self, domain: VertexSet) -> Self {
        let mut out = VertexSet::EMPTY;
        for (idx, v) in domain.iter().enumerate() {
            if self.contains(v) {
                out.insert(idx + 1);
            }
        }
        out
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        VertexSet::from_vertices(v).map_err(serde::de::Error::custom)
    }
}

fn face_order(a: &VertexSet, b: &VertexSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// On-disk form: `{"m": 4, "facets": [[1,2],[2,3]]}` with 1-based vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFile {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

/// A simplicial complex on `{1..m}`, stored by its inclusion-maximal faces in
/// sorted order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<VertexSet>,
}

/// Reduced rational homology ranks of `|K|`.
///
/// `ranks[d]` is the rank in degree `d` for `0 <= d <= top_dim`. The complex
/// with no vertices realizes to the empty space, whose only reduced class sits
/// in degree −1 and is recorded in `minus_one`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub ranks: Vec<usize>,
    pub top_dim: i64,
    pub minus_one: usize,
}

impl HomologyProfile {
    pub fn rank(&self, degree: i64) -> usize {
        match degree {
            -1 => self.minus_one,
            d if d >= 0 => self.ranks.get(d as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.minus_one == 0 && self.ranks.iter().all(|&r| r == 0)
    }
}

/// `K_I` together with the map from its local vertex `j` to `vertices[j - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullSubcomplex {
    pub complex: SimplicialComplex,
    pub vertices: Vec<usize>,
}

impl SimplicialComplex {
    /// The complex generated by `faces` (downward closure), reduced to facets.
    pub fn build(m: usize, faces: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if m == 0 {
            return Err(ComplexError::EmptyGroundSet);
        }
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let mut sets = Vec::with_capacity(faces.len());
        for face in faces {
            if face.is_empty() {
                return Err(ComplexError::EmptyFace);
            }
            if let Some(&v) = face.iter().find(|&&v| v == 0 || v > m) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, m });
            }
            sets.push(VertexSet::from_vertices(face.iter().copied())?);
        }
        Ok(Self::from_sets(m, sets))
    }

    /// Like [`build`](Self::build) but from vertex sets already known to lie in
    /// `{1..m}`. Accepts `m = 0`.
    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(m: usize, faces: I) -> Self {
        let ground = VertexSet::full(m);
        let mut sets: Vec<VertexSet> = faces.into_iter().filter(|s| !s.is_empty()).collect();
        debug_assert!(sets.iter().all(|s| s.is_subset(ground)));
        sets.sort_by(|a, b| b.len().cmp(&a.len()));
        sets.dedup();
        let mut facets: Vec<VertexSet> = Vec::new();
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        facets.sort();
        SimplicialComplex { m, facets }
    }

    /// The complex whose only face is ∅, on `m` (possibly zero) ghost vertices.
    pub fn empty(m: usize) -> Self {
        SimplicialComplex { m, facets: Vec::new() }
    }

    /// The full simplex Δ^{m-1}.
    pub fn simplex(m: usize) -> Self {
        Self::from_sets(m, [VertexSet::full(m)])
    }

    /// ∂Δ^{m-1}: every proper subset of `{1..m}`.
    pub fn simplex_boundary(m: usize) -> Self {
        let full = VertexSet::full(m);
        Self::from_sets(m, (1..=m).map(|v| full.difference(VertexSet::singleton(v))))
    }

    /// `m` disjoint vertices.
    pub fn discrete(m: usize) -> Self {
        Self::from_sets(m, (1..=m).map(VertexSet::singleton))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    /// Dimension; −1 when the only face is ∅.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        face.is_empty() || self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Vertices lying in at least one facet.
    pub fn covered_vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        self.ground_set().difference(self.covered_vertices())
    }

    /// True when `K` has no faces beyond ∅.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `K = Δ^{m-1}` on its whole ground set.
    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.ground_set()
    }

    /// Every face, ∅ first, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        all.insert(VertexSet::EMPTY);
        let mut faces: Vec<VertexSet> = all.into_iter().collect();
        faces.sort_by(face_order);
        faces
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 1).max(0) as usize];
        for face in self.faces().into_iter().filter(|f| !f.is_empty()) {
            counts[face.len() - 1] += 1;
        }
        counts
    }

    /// Facets on two or more vertices.
    pub fn maximal_faces_ge2(&self) -> Vec<VertexSet> {
        self.facets.iter().copied().filter(|f| f.len() >= 2).collect()
    }

    /// Faces on two or more vertices.
    pub fn faces_ge2(&self) -> Vec<VertexSet> {
        self.faces().into_iter().filter(|f| f.len() >= 2).collect()
    }

    /// Every nonempty `I ⊆ {1..m}` that is not a face, ordered by size then
    /// lexicographically.
    pub fn missing_subsets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> =
            self.ground_set().subsets().filter(|s| !self.contains_face(*s)).collect();
        out.sort_by(face_order);
        out
    }

    /// The full subcomplex `K_I`, re-indexed to `{1..|I|}`.
    pub fn full_subcomplex(&self, subset: VertexSet) -> Result<FullSubcomplex, ComplexError> {
        if let Some(v) = subset.max().filter(|&v| v > self.m) {
            return Err(ComplexError::VertexOutOfRange { vertex: v, m: self.m });
        }
        let sets = self.facets.iter().map(|f| f.intersection(subset).compress(subset));
        Ok(FullSubcomplex {
            complex: Self::from_sets(subset.len(), sets),
            vertices: subset.to_vec(),
        })
    }

    /// `K1 ⋆ K2` on `m1 + m2` vertices, with `K2` shifted past `K1`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self, ComplexError> {
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        let left = if self.is_void() { vec![VertexSet::EMPTY] } else { self.facets.clone() };
        let right: Vec<VertexSet> = if other.is_void() {
            vec![VertexSet::EMPTY]
        } else {
            other.facets.iter().map(|f| f.shifted(self.m)).collect()
        };
        let sets = left.iter().flat_map(|a| right.iter().map(move |b| a.union(*b)));
        Ok(Self::from_sets(m, sets.collect::<Vec<_>>()))
    }

    /// `K1 ⊔ K2` on the concatenated ground set.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<Self, ComplexError> {
        self.union_along(other, &SimplicialComplex::empty(0))
    }

    /// `K1 ∪_L K2`: the last `L.m()` vertices of `K1` are identified with the
    /// first `L.m()` vertices of `K2`, and `L` (in those local coordinates)
    /// must be a subcomplex of both.
    pub fn union_along(
        &self,
        other: &SimplicialComplex,
        shared: &SimplicialComplex,
    ) -> Result<Self, ComplexError> {
        let overlap = shared.m;
        if overlap > self.m {
            return Err(ComplexError::OverlapTooLarge { overlap, available: self.m });
        }
        if overlap > other.m {
            return Err(ComplexError::OverlapTooLarge { overlap, available: other.m });
        }
        let offset = self.m - overlap;
        let m = offset + other.m;
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        for f in &shared.facets {
            if !self.contains_face(f.shifted(offset)) {
                return Err(ComplexError::NotSubcomplex("first"));
            }
            if !other.contains_face(*f) {
                return Err(ComplexError::NotSubcomplex("second"));
            }
        }
        let sets = self
            .facets
            .iter()
            .copied()
            .chain(other.facets.iter().map(|f| f.shifted(offset)));
        Ok(Self::from_sets(m, sets.collect::<Vec<_>>()))
    }

    /// `K` regarded on a larger ground set `{1..m}`, after shifting its
    /// vertices by `offset`.
    pub fn extended(&self, offset: usize, m: usize) -> Result<Self, ComplexError> {
        if offset + self.m > m {
            return Err(ComplexError::OverlapTooLarge { overlap: offset + self.m, available: m });
        }
        if m > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(m));
        }
        Ok(Self::from_sets(m, self.facets.iter().map(|f| f.shifted(offset)).collect::<Vec<_>>()))
    }

    /// `K` with vertex `v` deleted and the remaining vertices re-indexed.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let keep = self.ground_set().difference(VertexSet::singleton(v));
        let sets = self.facets.iter().map(|f| f.intersection(keep).compress(keep));
        Self::from_sets(self.m - 1, sets.collect::<Vec<_>>())
    }

    /// Reduced rational homology via exact elimination on the boundary
    /// matrices. Torsion is invisible here.
    pub fn homology(&self) -> HomologyProfile {
        let top = self.dim();
        if top < 0 {
            return HomologyProfile { ranks: Vec::new(), top_dim: -1, minus_one: 1 };
        }
        let top = top as usize;
        // by_dim[k] holds faces with k vertices, k = 0 is the empty face
        let mut by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 2];
        for face in self.faces() {
            by_dim[face.len()].push(face);
        }
        // rank of the boundary from k-vertex faces to (k-1)-vertex faces
        let mut boundary_rank = vec![0usize; top + 3];
        for k in 1..=top + 1 {
            let index: HashMap<u64, usize> =
                by_dim[k - 1].iter().enumerate().map(|(i, f)| (f.bits(), i)).collect();
            let rows: Vec<Vec<(usize, i64)>> = by_dim[k]
                .iter()
                .map(|face| {
                    face.iter()
                        .enumerate()
                        .map(|(pos, v)| {
                            let mut sub = *face;
                            sub.remove(v);
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            (index[&sub.bits()], sign)
                        })
                        .collect()
                })
                .collect();
            boundary_rank[k] = rational_rank(rows, by_dim[k - 1].len());
        }
        let ranks = (0..=top)
            .map(|d| {
                let k = d + 1;
                by_dim[k].len() - boundary_rank[k] - boundary_rank[k + 1]
            })
            .collect();
        HomologyProfile { ranks, top_dim: top as i64, minus_one: 0 }
    }

    /// `u` dominates `v` when replacing `v` by `u` in any face avoiding `u`
    /// gives a face.
    fn dominates(&self, u: usize, v: usize) -> bool {
        self.facets.iter().all(|f| {
            if !f.contains(v) || f.contains(u) {
                return true;
            }
            let mut g = *f;
            g.remove(v);
            g.insert(u);
            self.contains_face(g)
        })
    }

    /// A relabeling under which `K` is shifted: `labeling[k]` is the vertex
    /// that receives label `k + 1`. Found by backtracking over the dominance
    /// relation.
    pub fn shifted_labeling(&self) -> Option<Vec<usize>> {
        let m = self.m;
        let dom: Vec<Vec<bool>> = (0..=m)
            .map(|u| (0..=m).map(|v| u == 0 || v == 0 || u == v || self.dominates(u, v)).collect())
            .collect();
        fn search(dom: &[Vec<bool>], remaining: &mut Vec<usize>, order: &mut Vec<usize>) -> bool {
            if remaining.is_empty() {
                return true;
            }
            for idx in 0..remaining.len() {
                let u = remaining[idx];
                if remaining.iter().all(|&v| dom[u][v]) {
                    remaining.remove(idx);
                    order.push(u);
                    if search(dom, remaining, order) {
                        return true;
                    }
                    order.pop();
                    remaining.insert(idx, u);
                }
            }
            false
        }
        let mut remaining: Vec<usize> = (1..=m).collect();
        let mut order = Vec::with_capacity(m);
        if search(&dom, &mut remaining, &mut order) && self.is_shifted_under(&order) {
            Some(order)
        } else {
            None
        }
    }

    fn is_shifted_under(&self, order: &[usize]) -> bool {
        let mut label = vec![0usize; self.m + 1];
        for (k, &v) in order.iter().enumerate() {
            label[v] = k + 1;
        }
        self.facets.iter().all(|f| {
            f.iter().all(|v| {
                (1..=self.m).filter(|&u| label[u] < label[v] && !f.contains(u)).all(|u| {
                    let mut g = *f;
                    g.remove(v);
                    g.insert(u);
                    self.contains_face(g)
                })
            })
        })
    }

    /// Shifted up to a relabeling of the vertices.
    pub fn is_shifted(&self) -> bool {
        self.shifted_labeling().is_some()
    }

    /// Every minimal non-face among the covered vertices has exactly two
    /// elements. Ghost vertices are ignored.
    pub fn is_flag(&self) -> bool {
        let covered = self.covered_vertices();
        covered.subsets().filter(|s| s.len() >= 3).all(|s| {
            if self.contains_face(s) {
                return true;
            }
            let minimal = s.iter().all(|v| {
                let mut t = s;
                t.remove(v);
                self.contains_face(t)
            });
            !minimal
        })
    }

    fn neighbours(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.m + 1];
        for f in &self.facets {
            for v in f.iter() {
                adj[v] = adj[v].union(f.difference(VertexSet::singleton(v)));
            }
        }
        adj
    }

    /// A perfect elimination ordering of the 1-skeleton, if one exists.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let adj = self.neighbours();
        let mut alive = self.covered_vertices();
        let mut order = Vec::with_capacity(alive.len());
        while !alive.is_empty() {
            let simplicial = alive.iter().find(|&v| {
                let nbrs: Vec<usize> = adj[v].intersection(alive).to_vec();
                nbrs.iter().enumerate().all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| adj[a].contains(b)))
            })?;
            order.push(simplicial);
            alive.remove(simplicial);
        }
        Some(order)
    }

    pub fn has_chordal_1skeleton(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Sphere dimensions of a wedge of spheres homotopy equivalent to `|K|`,
    /// when `K` lies in a class where that is known: shifted, at most
    /// 1-dimensional, a single simplex, or flag with chordal 1-skeleton.
    /// A disconnected realization is only a wedge after one suspension, which
    /// is how the answer is used.
    ///
    /// The empty realization is reported as `[-1]`, so that `Σ|K| = S^0`.
    pub fn wedge_of_spheres_type(&self) -> Option<Vec<i64>> {
        let certified = self.dim() <= 1
            || self.facets.len() == 1
            || self.is_shifted()
            || (self.is_flag() && self.has_chordal_1skeleton());
        if !certified {
            return None;
        }
        let h = self.homology();
        let mut dims = vec![-1; h.minus_one];
        for (d, &r) in h.ranks.iter().enumerate() {
            dims.extend(std::iter::repeat_n(d as i64, r));
        }
        Some(dims)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile { m: self.m, facets: self.facet_lists() }
    }
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = ComplexError;

    fn try_from(file: ComplexFile) -> Result<Self, Self::Error> {
        SimplicialComplex::build(file.m, &file.facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = ComplexFile::deserialize(deserializer)?;
        // m = 0 only arises for internal complexes that were serialized
        if file.m == 0 && file.facets.is_empty() {
            return Ok(SimplicialComplex::empty(0));
        }
        SimplicialComplex::try_from(file).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[m={}; ", self.m)?;
        if self.facets.is_empty() {
            f.write_str("∅")?;
        }
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rank over Q of a sparse integer matrix given by rows of `(column, value)`.
fn rational_rank(rows: Vec<Vec<(usize, i64)>>, ncols: usize) -> usize {
    let mut rows: Vec<Vec<(usize, BigRational)>> = rows
        .into_iter()
        .map(|r| {
            let mut r: Vec<(usize, BigRational)> =
                r.into_iter().map(|(c, v)| (c, BigRational::from_integer(v.into()))).collect();
            r.sort_by_key(|(c, _)| *c);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut pivots: Vec<Option<Vec<(usize, BigRational)>>> = vec![None; ncols];
    let mut rank = 0;
    while let Some(mut row) = rows.pop() {
        loop {
            let Some((lead, coeff)) = row.first().cloned() else { break };
            match &pivots[lead] {
                Some(p) => {
                    // p is normalized to leading coefficient 1
                    row = axpy(&row, p, &(-coeff));
                }
                None => {
                    let inv = BigRational::one() / coeff;
                    let normalized = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                    pivots[lead] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `a + s * b` on sorted sparse rows.
fn axpy(a: &[(usize, BigRational)], b: &[(usize, BigRational)], s: &BigRational) -> Vec<(usize, BigRational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, &b[j].1 * s));
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * s;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
