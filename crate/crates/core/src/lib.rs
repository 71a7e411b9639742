//! Graded Betti numbers, regularity and projective dimension of edge ideals
//! of graphs and facet ideals of simplicial complexes.
//!
//! Forest-like inputs are handled by splitting recursions
//! ([`betti::forest_betti`], [`betti::simplicial_forest_betti`]); any
//! squarefree monomial ideal can be checked against the homology oracle
//! ([`oracle::betti_oracle`]).

pub mod betti;
pub mod bitset;
pub mod complex;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod oracle;
pub mod splitting;

pub use betti::BettiTable;
pub use bitset::VertexSet;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use ideal::MonomialIdeal;
pub use oracle::FieldSpec;
