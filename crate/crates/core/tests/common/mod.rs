//! Corpus generators shared by the integration tests.
#![allow(dead_code)]

use bettisplit_core::betti::BettiTable;
use bettisplit_core::oracle::{betti_oracle, FieldSpec};
use bettisplit_core::{Graph, MonomialIdeal, SimplicialComplex, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Vertex pairs `(i, j)`, `i < j`, in the order used by edge masks.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(names("v", n), &edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical edge masks (minimum over relabelings) for graphs on `n`
/// vertices, one per isomorphism class.
pub struct Canon {
    n: usize,
    /// For each permutation, the image of each pair index.
    maps: Vec<Vec<u32>>,
}

impl Canon {
    pub fn new(n: usize) -> Self {
        let ps = pairs(n);
        let index = |a: usize, b: usize| ps.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap() as u32;
        let maps = permutations(n)
            .into_iter()
            .map(|p| ps.iter().map(|&(a, b)| index(p[a], p[b])).collect())
            .collect();
        Canon { n, maps }
    }

    pub fn canonical(&self, mask: u32) -> u32 {
        self.maps
            .iter()
            .map(|m| {
                let mut out = 0u32;
                let mut rest = mask;
                while rest != 0 {
                    let k = rest.trailing_zeros();
                    rest &= rest - 1;
                    out |= 1 << m[k as usize];
                }
                out
            })
            .min()
            .unwrap()
    }

    /// One canonical mask per isomorphism class.
    pub fn classes(&self, connected_only: bool) -> Vec<u32> {
        let total = 1u32 << (self.n * (self.n - 1) / 2);
        (0..total)
            .filter(|&m| !connected_only || is_connected(self.n, m))
            .filter(|&m| self.canonical(m) == m)
            .collect()
    }
}

pub fn is_connected(n: usize, mask: u32) -> bool {
    let g = graph_from_mask(n, mask);
    g.component_sets().len() == 1
}

/// Decodes a Prüfer sequence over `0..n` into a labeled tree.
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if n >= 2 {
        edges.push((rest[0], rest[1]));
    }
    Graph::new(names("t", n), &edges).unwrap()
}

/// Calls `f` on every labeled tree on `n` vertices.
pub fn for_each_tree(n: usize, mut f: impl FnMut(&Graph)) {
    if n <= 2 {
        f(&prufer_tree(n, &[]));
        return;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        f(&prufer_tree(n, &seq));
        let mut k = 0;
        loop {
            if k == len {
                return;
            }
            seq[k] += 1;
            if seq[k] < n {
                break;
            }
            seq[k] = 0;
            k += 1;
        }
    }
}

/// Random forest on 2..=`max_n` vertices with at least one edge: a random
/// tree with each edge dropped with probability 1/4.
pub fn random_forest<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let tree = prufer_tree(n, &seq);
    let mut edges: Vec<(usize, usize)> = tree.edges().into_iter().filter(|_| rng.gen_bool(0.75)).collect();
    if edges.is_empty() {
        edges.push(*tree.edges().choose(rng).unwrap());
    }
    Graph::new(names("f", n), &edges).unwrap()
}

/// Random simplicial forest with at most `max_facets` facets and
/// `max_vertices` vertices. Each new facet is `S ∪ N` with `N` fresh and
/// `S` chosen so that its intersections with the existing facets form a
/// chain, which makes it a good leaf of the enlarged complex. With
/// `pure = Some(d)` every facet has `d` vertices.
pub fn random_simplicial_forest<R: Rng>(
    rng: &mut R,
    max_facets: usize,
    max_vertices: usize,
    pure: Option<usize>,
) -> SimplicialComplex {
    let target = rng.gen_range(1..=max_facets);
    let mut facets: Vec<VertexSet> = Vec::new();
    let mut next = 0usize;
    while facets.len() < target {
        let size = pure.unwrap_or_else(|| rng.gen_range(1..=4));
        let mut candidate = None;
        for _ in 0..20 {
            let shared: VertexSet = match facets.choose(rng) {
                Some(f) if rng.gen_bool(0.85) => {
                    let pool: Vec<usize> = f.iter().collect();
                    let k = rng.gen_range(0..=pool.len().min(size.saturating_sub(1)));
                    pool.choose_multiple(rng, k).copied().collect()
                }
                _ => VertexSet::empty(),
            };
            let fresh = size - shared.len();
            if fresh == 0 || next + fresh > max_vertices {
                continue;
            }
            let mut traces: Vec<VertexSet> = facets.iter().map(|f| f.intersection(&shared)).collect();
            traces.sort_by_key(|t| t.len());
            if traces.windows(2).all(|w| w[0].is_subset(&w[1])) && facets.iter().all(|f| !f.is_subset(&shared)) {
                candidate = Some((shared, fresh));
                break;
            }
        }
        let Some((shared, fresh)) = candidate else { break };
        let mut f = shared;
        for _ in 0..fresh {
            f.insert(next);
            next += 1;
        }
        facets.push(f);
    }
    if facets.is_empty() {
        let size = pure.unwrap_or(2);
        facets.push(VertexSet::full(size));
        next = size;
    }
    SimplicialComplex::new(names("s", next), &facets).unwrap()
}

pub fn oracle(ideal: &MonomialIdeal) -> BettiTable {
    betti_oracle(ideal, FieldSpec::Rational).unwrap()
}

pub fn oracle_graph(g: &Graph) -> BettiTable {
    oracle(&MonomialIdeal::edge_ideal(g))
}

pub fn oracle_complex(c: &SimplicialComplex) -> BettiTable {
    oracle(&MonomialIdeal::facet_ideal(c))
}
