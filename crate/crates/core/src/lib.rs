//! Loop-space decompositions of polyhedral coproducts.
//!
//! The crate models simplicial complexes, Hall bases of free Lie algebras,
//! formal pointed-space expressions and truncated Poincaré series, and uses
//! them to produce and check loop-space decompositions of homotopy limits of
//! wedge diagrams indexed by face posets.

pub mod cli;
pub mod decomp;
pub mod liealg;
pub mod scomplex;
pub mod series;
pub mod spacexpr;
pub mod verify;

pub use decomp::{Bounds, Decomposition, Factor, Pair, PairAssignment, Provenance, Theorem};
pub use liealg::{hall_basis, witt_dimension, Bracket, BracketStats, Generator};
pub use scomplex::{SimplicialComplex, VertexSet};
pub use series::{series_of, Comparison, PoincareSeries, RationalSeries, Unsupported};
pub use spacexpr::{conn, expr_equal, normalize, Conn, SpaceExpr};
