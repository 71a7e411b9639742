//! Closed formulas for linear strands, property `N_{2,p}` and linear
//! resolutions.

use super::formulas::binomial;
use crate::complex::{SimplicialComplex, DEFAULT_FACET_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `β_{i,i+2} = Σ_u C(deg u, i+1) - k_{i+2}` for `0 ≤ i ≤ i_max`, valid when
/// the graph has no induced 4-cycle.
pub fn linear_strand_no_c4(g: &Graph, i_max: usize) -> Result<Vec<u64>> {
    if let Some(c) = g.induced_four_cycle() {
        return Err(Error::InducedFourCycle {
            cycle: c.iter().map(|&v| g.name(v).to_string()).collect(),
        });
    }
    (0..=i_max)
        .map(|i| {
            let degrees: u64 = g.vertices().map(|u| binomial(g.degree(u) as i64, i as i64 + 1)).sum();
            let cliques = g.clique_count(i + 2);
            degrees.checked_sub(cliques).ok_or_else(|| {
                Error::Precondition(format!("negative linear strand value at i = {i}"))
            })
        })
        .collect()
}

/// Outcome of the `N_{2,p}` criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum N2p {
    /// The complement is chordal: the resolution is linear.
    LinearResolution,
    /// Largest `p`, with the shortest minimal cycle of the complement.
    P { p: usize, cycle: Vec<usize> },
}

/// Largest `p` such that the edge ideal satisfies `N_{2,p}`: the shortest
/// minimal cycle of `G^c` has length `p + 3`. Never below `1`.
pub fn n2p_max(g: &Graph) -> Result<N2p> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidInput("graph has no edges".into()));
    }
    match g.complement().shortest_minimal_cycle() {
        None => Ok(N2p::LinearResolution),
        Some(cycle) => Ok(N2p::P {
            p: (cycle.len() - 3).max(1),
            cycle,
        }),
    }
}

/// Whether the edge ideal has a linear resolution, by chordality of the
/// complement.
pub fn froberg_linear(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidInput("graph has no edges".into()));
    }
    Ok(g.complement().is_chordal())
}

/// Linear strand `β_{i,i+d}` of a pure simplicial forest with facets of
/// size `d ≥ 2`: `|F(Δ)|` at `i = 0`, and `Σ_{G ∈ A(Δ)} C(deg G, i+1)` after.
pub fn pure_forest_linear_strand(c: &SimplicialComplex, i_max: usize) -> Result<Vec<u64>> {
    let d = c
        .pure_dimension()
        .ok_or_else(|| Error::Precondition("complex is not pure".into()))?;
    if d < 2 {
        return Err(Error::Precondition("facets must have at least two vertices".into()));
    }
    if let Some(w) = c.leafless_subcomplex(DEFAULT_FACET_CAP)? {
        return Err(Error::NotASimplicialForest {
            witness: w.iter().map(|f| c.format_face(f)).collect(),
        });
    }
    let faces = c.codim1_faces()?;
    let degrees: Vec<usize> = faces.iter().map(|g| c.face_degree(g)).collect::<Result<_>>()?;
    Ok((0..=i_max)
        .map(|i| {
            if i == 0 {
                c.facet_count() as u64
            } else {
                degrees.iter().map(|&k| binomial(k as i64, i as i64 + 1)).sum()
            }
        })
        .collect())
}
