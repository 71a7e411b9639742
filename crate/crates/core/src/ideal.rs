//! Squarefree monomial ideals stored by their minimal generators.
//!
//! A squarefree monomial is its support, a [`VertexSet`]; divisibility is
//! inclusion and lcm is union.

use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    names: Arc<[String]>,
    gens: Vec<VertexSet>,
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self.gens.iter().map(|g| self.format_monomial(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

fn generator_order(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp_lex(b))
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized. The unit monomial is
    /// rejected by dropping it; use only nonempty supports.
    pub fn minimalize(names: Arc<[String]>, gens: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut all: Vec<VertexSet> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        all.sort_by(generator_order);
        all.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(all.len());
        for g in all {
            // sorted by degree, so any divisor is already kept
            if !kept.iter().any(|h| h.is_subset(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { names, gens: kept }
    }

    pub fn zero(names: Arc<[String]>) -> Self {
        MonomialIdeal { names, gens: Vec::new() }
    }

    pub fn principal(names: Arc<[String]>, m: VertexSet) -> Self {
        Self::minimalize(names, [m])
    }

    pub fn edge_ideal(g: &Graph) -> Self {
        Self::minimalize(
            g.names().clone(),
            g.edges().into_iter().map(|(u, v)| VertexSet::pair(u, v)),
        )
    }

    pub fn facet_ideal(c: &SimplicialComplex) -> Self {
        Self::minimalize(c.names().clone(), c.facets().iter().copied())
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Union of the generator supports.
    pub fn support(&self) -> VertexSet {
        self.gens.iter().fold(VertexSet::empty(), |acc, g| acc.union(g))
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<usize> {
        self.gens.first().map(|g| g.len())
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(m))
    }

    pub fn add(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::minimalize(
            self.names.clone(),
            self.gens.iter().chain(other.gens.iter()).copied(),
        )
    }

    pub fn scale(&self, m: &VertexSet) -> MonomialIdeal {
        Self::minimalize(self.names.clone(), self.gens.iter().map(|g| g.union(m)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.union(h));
            }
        }
        Self::minimalize(self.names.clone(), lcms)
    }

    pub fn format_monomial(&self, m: &VertexSet) -> String {
        if m.is_empty() {
            return "1".into();
        }
        let parts: Vec<&str> = m.iter().map(|v| self.names[v].as_str()).collect();
        parts.join("*")
    }

    /// One generator per line as a `*`-joined product.
    pub fn render(&self) -> String {
        self.gens.iter().map(|g| self.format_monomial(g) + "\n").collect()
    }

    /// JSON list of generator supports, each a list of vertex names.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.gens
                .iter()
                .map(|g| g.iter().map(|v| serde_json::Value::from(self.names[v].clone())).collect())
                .collect(),
        )
    }
}
