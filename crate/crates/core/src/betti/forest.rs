//! Recursive drivers for forests and simplicial forests.
//!
//! Within one top-level call every graph the recursion visits is an induced
//! subgraph of the input (plus isolated vertices), so the set of
//! non-isolated vertices identifies it and serves as the memo key.

use std::collections::HashMap;

use super::formulas::{edge_split_betti, facet_split_betti, tensor_combine};
use super::BettiTable;
use crate::bitset::VertexSet;
use crate::complex::{SimplicialComplex, DEFAULT_FACET_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::splitting::{make_edge_split, make_facet_split};

fn active(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) > 0).collect()
}

fn require_forest(g: &Graph) -> Result<()> {
    match g.find_cycle() {
        None => Ok(()),
        Some(c) => Err(Error::NotAForest {
            cycle: c.into_iter().map(|v| g.name(v).to_string()).collect(),
        }),
    }
}

#[derive(Default)]
struct ForestEval {
    memo: HashMap<VertexSet, BettiTable>,
}

impl ForestEval {
    fn eval(&mut self, g: &Graph) -> Result<BettiTable> {
        let key = active(g);
        if key.is_empty() {
            return Ok(BettiTable::zero_ideal());
        }
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let comps: Vec<VertexSet> = g.component_sets().into_iter().filter(|c| c.len() > 1).collect();
        let t = if comps.len() > 1 {
            let mut acc = BettiTable::zero_ideal();
            for c in &comps {
                let part = self.eval(&g.restrict(c))?;
                acc = tensor_combine(&acc, &part);
            }
            acc
        } else {
            let (u, v) = g.find_leaf_edge().expect("a nonempty forest has a leaf");
            self.split_at(g, u, v)?
        };
        self.memo.insert(key, t.clone());
        Ok(t)
    }

    fn split_at(&mut self, g: &Graph, u: usize, v: usize) -> Result<BettiTable> {
        let split = make_edge_split(g, u, v)?;
        edge_split_betti(&split, |h| self.eval(h))
    }
}

/// Betti table of the edge ideal of a forest.
pub fn forest_betti(g: &Graph) -> Result<BettiTable> {
    require_forest(g)?;
    ForestEval::default().eval(g)
}

/// Like [`forest_betti`] but the first step splits at the given leaf edge
/// `(leaf, neighbor)` of the whole graph.
pub fn forest_betti_with_leaf(g: &Graph, leaf: usize, neighbor: usize) -> Result<BettiTable> {
    require_forest(g)?;
    if g.neighbors(leaf)?.len() != 1 || !g.has_edge(leaf, neighbor) {
        return Err(Error::Precondition(format!(
            "{}{} is not a leaf edge with leaf {}",
            g.name(leaf),
            g.name(neighbor),
            g.name(leaf)
        )));
    }
    ForestEval::default().split_at(g, leaf, neighbor)
}

/// `(reg, pd)` of a forest's edge ideal straight from the recursions
/// `reg = max{2, reg(G\e), reg(H) + 1}` and `pd = max{pd(G\e), pd(H) + n + 1}`.
pub fn reg_and_pd_forest(g: &Graph) -> Result<(i32, i32)> {
    require_forest(g)?;
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    // zero ideal counts as reg 1, pd -1
    fn eval(g: &Graph, memo: &mut HashMap<VertexSet, (i32, i32)>) -> Result<(i32, i32)> {
        let key = active(g);
        if key.is_empty() {
            return Ok((1, -1));
        }
        if let Some(&r) = memo.get(&key) {
            return Ok(r);
        }
        let (u, v) = g.find_leaf_edge().expect("a nonempty forest has a leaf");
        let split = make_edge_split(g, u, v)?;
        let (rt, pt) = eval(&split.g_minus_e, memo)?;
        let (rh, ph) = eval(&split.h, memo)?;
        let r = (2.max(rt).max(rh + 1), pt.max(ph + split.n as i32 + 1));
        memo.insert(key, r);
        Ok(r)
    }
    eval(g, &mut HashMap::new())
}

/// Regularity of a forest's edge ideal as induced matching number plus one.
pub fn reg_forest_via_matching(g: &Graph) -> Result<i32> {
    require_forest(g)?;
    if g.edge_count() == 0 {
        return Err(Error::ZeroIdeal);
    }
    Ok(g.induced_matching_number()? as i32 + 1)
}

/// Lower bounds `(max{2, reg(G\v)}, max{d-1, pd(G\v)})`, given
/// `minus_v = Some((reg, pd))` of `G \ {v}` or `None` when it has no edges.
pub fn reg_pd_lower_bounds(g: &Graph, v: usize, minus_v: Option<(i32, i32)>) -> Result<(i32, i32)> {
    let d = g.neighbors(v)?.len() as i32;
    if d == 0 {
        return minus_v.ok_or(Error::ZeroIdeal);
    }
    let (r, p) = minus_v.unwrap_or((1, -1));
    Ok((2.max(r), (d - 1).max(p)))
}

#[derive(Default)]
struct SimplicialEval {
    memo: HashMap<Vec<VertexSet>, BettiTable>,
}

impl SimplicialEval {
    fn eval(&mut self, c: &SimplicialComplex) -> Result<BettiTable> {
        if c.is_empty() {
            return Ok(BettiTable::zero_ideal());
        }
        let key = c.canonical_facets();
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let f = c.find_leaf().ok_or_else(|| Error::NotASimplicialForest {
            witness: c.facets().iter().map(|f| c.format_face(f)).collect(),
        })?;
        let split = make_facet_split(c, &f)?;
        let t = facet_split_betti(&split, |d| self.eval(d))?;
        self.memo.insert(key, t.clone());
        Ok(t)
    }
}

/// Betti table of the facet ideal of a simplicial forest.
pub fn simplicial_forest_betti(c: &SimplicialComplex) -> Result<BettiTable> {
    simplicial_forest_betti_with_cap(c, DEFAULT_FACET_CAP)
}

pub fn simplicial_forest_betti_with_cap(c: &SimplicialComplex, facet_cap: usize) -> Result<BettiTable> {
    if let Some(w) = c.leafless_subcomplex(facet_cap)? {
        return Err(Error::NotASimplicialForest {
            witness: w.iter().map(|f| c.format_face(f)).collect(),
        });
    }
    SimplicialEval::default().eval(c)
}
