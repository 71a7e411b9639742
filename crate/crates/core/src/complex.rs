//! Simplicial complexes given by their facets.
//!
//! Like [`Graph`](crate::graph::Graph), a complex keeps the full vertex
//! universe it was parsed from so that every derived complex (removing a
//! facet, connected components, reduced components) shares one index space.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bitset::{VertexSet, DEFAULT_VERTEX_CAP, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the facet count for the exhaustive forest check.
pub const DEFAULT_FACET_CAP: usize = 18;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    names: Arc<[String]>,
    vertices: VertexSet,
    facets: Vec<VertexSet>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|s| self.format_face(s)).collect();
        f.debug_struct("SimplicialComplex").field("facets", &facets).finish()
    }
}

/// Removes duplicates and non-maximal sets while keeping the order of first
/// appearance. Returns the kept sets, the number of duplicates, and the
/// number of dominated sets dropped.
fn keep_maximal(sets: &[VertexSet]) -> (Vec<VertexSet>, usize, usize) {
    let mut unique: Vec<VertexSet> = Vec::with_capacity(sets.len());
    let mut duplicates = 0;
    for s in sets {
        if unique.contains(s) {
            duplicates += 1;
        } else {
            unique.push(*s);
        }
    }
    let kept: Vec<VertexSet> = unique
        .iter()
        .filter(|s| !unique.iter().any(|t| t != *s && s.is_subset(t)))
        .copied()
        .collect();
    let dominated = unique.len() - kept.len();
    (kept, duplicates, dominated)
}

impl SimplicialComplex {
    /// Builds a complex on the universe `names` from a facet list. Duplicate
    /// and non-maximal sets are dropped with a warning; use
    /// [`SimplicialComplex::with_report`] to get the counts.
    pub fn new(names: Vec<String>, facets: &[VertexSet]) -> Result<Self> {
        Self::with_report(names, facets, DEFAULT_VERTEX_CAP).map(|(c, _)| c)
    }

    /// Like [`SimplicialComplex::new`] with an explicit vertex cap. Also
    /// returns how many input sets were dropped (duplicates plus dominated).
    pub fn with_report(names: Vec<String>, facets: &[VertexSet], cap: usize) -> Result<(Self, usize)> {
        let cap = cap.min(MAX_VERTICES);
        if names.len() > cap {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                actual: names.len(),
                cap,
                flag: "--wide",
            });
        }
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex name `{n}`")));
            }
        }
        let universe = VertexSet::full(names.len());
        for f in facets {
            if f.is_empty() {
                return Err(Error::InvalidInput("empty facet".into()));
            }
            if !f.is_subset(&universe) {
                return Err(Error::InvalidInput("facet uses an undeclared vertex".into()));
            }
        }
        let (kept, duplicates, dominated) = keep_maximal(facets);
        if duplicates > 0 {
            log::warn!("merged {duplicates} duplicate facet(s)");
        }
        if dominated > 0 {
            log::warn!("dropped {dominated} non-maximal face(s)");
        }
        Ok((
            SimplicialComplex {
                names: names.into(),
                vertices: universe,
                facets: kept,
            },
            duplicates + dominated,
        ))
    }

    /// Convenience constructor from named facets; vertex order is order of
    /// first appearance.
    pub fn from_named(facets: &[&[&str]]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut sets = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = VertexSet::empty();
            for &n in f.iter() {
                let i = match names.iter().position(|m| m == n) {
                    Some(i) => i,
                    None => {
                        names.push(n.to_string());
                        names.len() - 1
                    }
                };
                s.insert(i);
            }
            sets.push(s);
        }
        Self::new(names, &sets)
    }

    /// Parses the facet-list text format: one facet per line as
    /// whitespace-separated vertex names, `#` comment lines.
    pub fn parse(text: &str, cap: usize) -> Result<(Self, usize)> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut sets = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut s = VertexSet::empty();
            for name in line.split_whitespace() {
                let i = match index.get(name) {
                    Some(&i) => i,
                    None => {
                        names.push(name.to_string());
                        index.insert(name.to_string(), names.len() - 1);
                        names.len() - 1
                    }
                };
                if i >= MAX_VERTICES {
                    return Err(Error::ResourceLimit {
                        what: "vertex count",
                        actual: i + 1,
                        cap: cap.min(MAX_VERTICES),
                        flag: "--wide",
                    });
                }
                s.insert(i);
            }
            sets.push(s);
        }
        Self::with_report(names, &sets, cap)
    }

    /// The 1-dimensional complex whose facets are the edges of `g`.
    /// Isolated vertices stay declared but carry no facet.
    pub fn from_graph(g: &Graph) -> Self {
        SimplicialComplex {
            names: g.names().clone(),
            vertices: g.vertex_set(),
            facets: g.edges().into_iter().map(|(u, v)| VertexSet::pair(u, v)).collect(),
        }
    }

    /// The empty complex (no facets) on a universe; carries the zero ideal.
    pub fn empty(names: Arc<[String]>) -> Self {
        SimplicialComplex {
            names,
            vertices: VertexSet::empty(),
            facets: Vec::new(),
        }
    }

    /// A derived complex on the same universe. `facets` must already be
    /// pairwise incomparable.
    fn derived(&self, facets: Vec<VertexSet>, vertices: VertexSet) -> Self {
        SimplicialComplex {
            names: self.names.clone(),
            vertices,
            facets,
        }
    }

    fn covered(facets: &[VertexSet]) -> VertexSet {
        facets.iter().fold(VertexSet::empty(), |acc, f| acc.union(f))
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn format_face(&self, face: &VertexSet) -> String {
        let parts: Vec<&str> = face.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Resolves a list of vertex names to a face.
    pub fn face_of(&self, names: &[&str]) -> Result<VertexSet> {
        let mut s = VertexSet::empty();
        for &n in names {
            let i = self
                .names
                .iter()
                .position(|m| m == n)
                .ok_or_else(|| Error::UnknownVertex(n.to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Facets sorted lexicographically; a canonical key for memoization.
    pub fn canonical_facets(&self) -> Vec<VertexSet> {
        let mut f = self.facets.clone();
        f.sort_by(|a, b| a.cmp_lex(b));
        f
    }

    fn facet_position(&self, f: &VertexSet) -> Result<usize> {
        self.facets
            .iter()
            .position(|g| g == f)
            .ok_or_else(|| Error::NotAFacet(self.format_face(f).trim_matches(['{', '}']).to_string()))
    }

    pub fn is_facet(&self, f: &VertexSet) -> bool {
        self.facets.contains(f)
    }

    /// `Δ \ F`: drops the facet, keeps the vertex set.
    pub fn remove_facet(&self, f: &VertexSet) -> Result<Self> {
        let pos = self.facet_position(f)?;
        let mut facets = self.facets.clone();
        facets.remove(pos);
        Ok(self.derived(facets, self.vertices))
    }

    /// Indices of the facets in the connected component of facet `pos`.
    fn component_mask(&self, pos: usize) -> Vec<bool> {
        let q = self.facets.len();
        let mut in_comp = vec![false; q];
        in_comp[pos] = true;
        let mut stack = vec![pos];
        while let Some(a) = stack.pop() {
            for b in 0..q {
                if !in_comp[b] && !self.facets[a].is_disjoint(&self.facets[b]) {
                    in_comp[b] = true;
                    stack.push(b);
                }
            }
        }
        in_comp
    }

    /// `conn_Δ(F)`: facets reachable from `F` by chains of intersecting facets.
    pub fn conn_component_of_facet(&self, f: &VertexSet) -> Result<Self> {
        let pos = self.facet_position(f)?;
        let mask = self.component_mask(pos);
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .zip(&mask)
            .filter(|(_, &m)| m)
            .map(|(g, _)| *g)
            .collect();
        let vertices = Self::covered(&facets);
        Ok(self.derived(facets, vertices))
    }

    /// `Ω = Δ \ conn_Δ(F)`.
    pub fn omega(&self, f: &VertexSet) -> Result<Self> {
        let pos = self.facet_position(f)?;
        let mask = self.component_mask(pos);
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .zip(&mask)
            .filter(|(_, &m)| !m)
            .map(|(g, _)| *g)
            .collect();
        let vertices = Self::covered(&facets);
        Ok(self.derived(facets, vertices))
    }

    /// The reduced connected component: inclusion-minimal sets among
    /// `G \ F` for the other facets `G` of `conn_Δ(F)`.
    pub fn reduced_conn(&self, f: &VertexSet) -> Result<Self> {
        let conn = self.conn_component_of_facet(f)?;
        let mut diffs = Vec::new();
        for g in conn.facets.iter().filter(|g| *g != f) {
            let d = g.difference(f);
            if d.is_empty() {
                return Err(Error::Precondition(format!(
                    "facet {} is contained in {}",
                    self.format_face(g),
                    self.format_face(f)
                )));
            }
            if !diffs.contains(&d) {
                diffs.push(d);
            }
        }
        let minimal: Vec<VertexSet> = diffs
            .iter()
            .filter(|d| !diffs.iter().any(|e| e != *d && e.is_subset(d)))
            .copied()
            .collect();
        let vertices = Self::covered(&minimal);
        Ok(self.derived(minimal, vertices))
    }

    /// Leaf test for facet `pos` within the facet subset `members`.
    fn is_leaf_within(&self, pos: usize, members: &[usize]) -> bool {
        let f = self.facets[pos];
        let others: Vec<VertexSet> = members
            .iter()
            .filter(|&&m| m != pos)
            .map(|&m| self.facets[m])
            .collect();
        if others.is_empty() {
            return true;
        }
        let shared = others
            .iter()
            .fold(VertexSet::empty(), |acc, g| acc.union(&g.intersection(&f)));
        others.iter().any(|g| shared.is_subset(g))
    }

    pub fn is_leaf(&self, f: &VertexSet) -> Result<bool> {
        let pos = self.facet_position(f)?;
        let all: Vec<usize> = (0..self.facets.len()).collect();
        Ok(self.is_leaf_within(pos, &all))
    }

    /// First leaf in facet order.
    pub fn find_leaf(&self) -> Option<VertexSet> {
        let all: Vec<usize> = (0..self.facets.len()).collect();
        (0..self.facets.len())
            .find(|&p| self.is_leaf_within(p, &all))
            .map(|p| self.facets[p])
    }

    fn connected_within(&self, members: &[usize]) -> bool {
        if members.is_empty() {
            return false;
        }
        let mut reached = vec![members[0]];
        let mut frontier = vec![members[0]];
        while let Some(a) = frontier.pop() {
            for &b in members {
                if !reached.contains(&b) && !self.facets[a].is_disjoint(&self.facets[b]) {
                    reached.push(b);
                    frontier.push(b);
                }
            }
        }
        reached.len() == members.len()
    }

    /// A connected subcomplex without a leaf, if one exists. Exhaustive over
    /// facet subsets; fails above `facet_cap` facets.
    pub fn leafless_subcomplex(&self, facet_cap: usize) -> Result<Option<Vec<VertexSet>>> {
        let q = self.facets.len();
        let cap = facet_cap.min(30);
        if q > cap {
            return Err(Error::ResourceLimit {
                what: "facet count for the forest check",
                actual: q,
                cap,
                flag: "--facet-cap",
            });
        }
        // Subsets with at most two facets always have a leaf.
        for mask in 1u32..(1u32 << q) {
            if mask.count_ones() < 3 {
                continue;
            }
            let members: Vec<usize> = (0..q).filter(|&i| mask >> i & 1 == 1).collect();
            if !self.connected_within(&members) {
                continue;
            }
            if !members.iter().any(|&p| self.is_leaf_within(p, &members)) {
                return Ok(Some(members.iter().map(|&p| self.facets[p]).collect()));
            }
        }
        Ok(None)
    }

    pub fn is_simplicial_forest(&self) -> Result<bool> {
        self.is_simplicial_forest_with_cap(DEFAULT_FACET_CAP)
    }

    pub fn is_simplicial_forest_with_cap(&self, facet_cap: usize) -> Result<bool> {
        Ok(self.leafless_subcomplex(facet_cap)?.is_none())
    }

    /// Common facet size `d` when all facets have the same size.
    pub fn pure_dimension(&self) -> Option<usize> {
        let d = self.facets.first()?.len();
        self.facets.iter().all(|f| f.len() == d).then_some(d)
    }

    fn require_pure(&self) -> Result<usize> {
        self.pure_dimension()
            .ok_or_else(|| Error::Precondition("complex is not pure".into()))
    }

    /// All `(d-1)`-subsets of facets of a pure complex, sorted.
    pub fn codim1_faces(&self) -> Result<Vec<VertexSet>> {
        self.require_pure()?;
        let mut out: Vec<VertexSet> = Vec::new();
        for f in &self.facets {
            for v in f.iter() {
                let mut g = *f;
                g.remove(v);
                if !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        out.sort_by(|a, b| a.cmp_lex(b));
        Ok(out)
    }

    /// Number of facets containing `g` in a pure complex.
    pub fn face_degree(&self, g: &VertexSet) -> Result<usize> {
        let d = self.require_pure()?;
        if g.len() + 1 != d {
            return Err(Error::Precondition(format!(
                "face {} does not have size {}",
                self.format_face(g),
                d - 1
            )));
        }
        Ok(self.facets.iter().filter(|f| g.is_subset(f)).count())
    }

    /// Renders the complex in the facet-list text format.
    pub fn to_text(&self) -> String {
        self.facets
            .iter()
            .map(|f| {
                let parts: Vec<&str> = f.iter().map(|v| self.names[v].as_str()).collect();
                parts.join(" ") + "\n"
            })
            .collect()
    }
}
