//! Betti tables and the closed and recursive formulas that produce them.

mod forest;
mod formulas;
mod strands;
mod table;

pub use forest::{
    forest_betti, forest_betti_with_leaf, reg_and_pd_forest, reg_forest_via_matching, reg_pd_lower_bounds,
    simplicial_forest_betti, simplicial_forest_betti_with_cap,
};
pub use formulas::{
    betti_k1d, binomial, edge_split_betti, edge_split_combine, facet_split_betti, facet_split_combine,
    tensor_combine, vertex_split_betti, vertex_split_combine,
};
pub use strands::{froberg_linear, linear_strand_no_c4, n2p_max, pure_forest_linear_strand, N2p};
pub use table::BettiTable;
