//! Graded Betti numbers of squarefree monomial ideals from Hochster's
//! formula:
//!
//! `β_{i,j}(I) = Σ_{|W| = j} dim H̃_{j-i-2}(Δ(I)_W)`
//!
//! where `Δ(I)` is the Stanley–Reisner complex of `I`. Only sets `W` that
//! are unions of generators can contribute: any other vertex of `W` lies in
//! no minimal nonface of `Δ(I)_W`, so it is a cone point.

mod rank;

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

pub use rank::{exact_rank, rank, SparseCol};

use crate::betti::BettiTable;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Default cap on the size of the generator support handed to the oracle.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Number of subsets `W` below which the oracle stays sequential.
const PARALLEL_THRESHOLD: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// `0` selects ℚ; otherwise `c` must be a prime below `2^32`.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            return Ok(FieldSpec::Rational);
        }
        if c >= 1 << 32 {
            return Err(Error::InvalidInput(format!("characteristic {c} is too large (limit 2^32)")));
        }
        if !is_prime(c) {
            return Err(Error::BadCharacteristic(c));
        }
        Ok(FieldSpec::Prime(c))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

/// Stanley–Reisner complex of an ideal, re-indexed to `0..n` over the
/// generator support. A set is a face iff it contains no generator.
#[derive(Clone, Debug)]
pub struct StanleyReisnerComplex {
    vertices: Vec<usize>,
    nonfaces: Vec<u64>,
}

impl StanleyReisnerComplex {
    pub fn new(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        let support = ideal.support();
        let cap = cap.min(64);
        if support.len() > cap {
            return Err(Error::ResourceLimit {
                what: "generator support for the homology oracle",
                actual: support.len(),
                cap,
                flag: "--vertex-cap",
            });
        }
        let vertices: Vec<usize> = support.iter().collect();
        let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let nonfaces = ideal
            .generators()
            .iter()
            .map(|g| g.iter().fold(0u64, |m, v| m | 1 << local[&v]))
            .collect();
        Ok(StanleyReisnerComplex { vertices, nonfaces })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Global vertex indices of a local mask.
    pub fn to_global(&self, mask: u64) -> VertexSet {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(l, _)| mask >> l & 1 == 1)
            .map(|(_, &g)| g)
            .collect()
    }

    pub fn is_face(&self, sigma: u64) -> bool {
        self.nonfaces.iter().all(|&g| g & !sigma != 0)
    }

    /// All faces of the induced subcomplex on `w`, including the empty face.
    pub fn faces_within(&self, w: u64) -> Vec<u64> {
        let gens: Vec<u64> = self.nonfaces.iter().copied().filter(|&g| g & !w == 0).collect();
        let verts: Vec<u32> = (0..64).filter(|&b| w >> b & 1 == 1).collect();
        let mut faces = vec![0u64];
        // depth-first: extend each face only by larger vertices
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        while let Some((sigma, start)) = stack.pop() {
            for (k, &v) in verts.iter().enumerate().skip(start) {
                let bit = 1u64 << v;
                let next = sigma | bit;
                if gens.iter().any(|&g| g & bit != 0 && g & !next == 0) {
                    continue;
                }
                faces.push(next);
                stack.push((next, k + 1));
            }
        }
        faces
    }

    /// Distinct nonempty unions of generators.
    pub fn generator_unions(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut list: Vec<u64> = Vec::new();
        for &g in &self.nonfaces {
            let mut fresh = Vec::new();
            if seen.insert(g) {
                fresh.push(g);
            }
            for &w in &list {
                let u = w | g;
                if seen.insert(u) {
                    fresh.push(u);
                }
            }
            list.extend(fresh);
        }
        list.sort_unstable_by_key(|&w| (w.count_ones(), w));
        list
    }
}

/// Reduced homology dimensions `[dim H̃_{-1}, dim H̃_0, ...]` of the complex
/// whose faces are `faces` (downward closed, the empty face is added if
/// missing).
pub fn reduced_homology_dims(faces: &[u64], field: FieldSpec) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    if by_size[0].is_empty() {
        by_size[0].push(0);
    }
    for level in by_size.iter_mut() {
        level.sort_unstable();
        level.dedup();
    }
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<u64, u32> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(k, &f)| (f, k as u32))
            .collect();
        let cols: Vec<SparseCol> = by_size[s]
            .iter()
            .map(|&sigma| {
                let mut col: SparseCol = Vec::with_capacity(s);
                let mut rest = sigma;
                let mut t = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    col.push((index[&(sigma & !bit)], sign));
                    t += 1;
                }
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        ranks[s] = rank(&cols, field);
    }
    let dims: Vec<usize> = (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    debug_assert_eq!(
        dims.iter().enumerate().map(|(s, &d)| sign(s) * d as i64).sum::<i64>(),
        by_size.iter().enumerate().map(|(s, l)| sign(s) * l.len() as i64).sum::<i64>(),
        "Euler characteristic mismatch"
    );
    dims
}

fn sign(s: usize) -> i64 {
    if s.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn contributions(src: &StanleyReisnerComplex, w: u64, field: FieldSpec) -> Vec<(i32, i32, u64)> {
    let faces = src.faces_within(w);
    let j = w.count_ones() as i32;
    reduced_homology_dims(&faces, field)
        .into_iter()
        .enumerate()
        .filter(|&(_, d)| d > 0)
        .map(|(s, d)| {
            // size-s faces carry H̃_{s-1}, and j - i - 2 = s - 1
            (j - s as i32 - 1, j, d as u64)
        })
        .collect()
}

pub fn betti_oracle(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    betti_oracle_with_cap(ideal, field, DEFAULT_ORACLE_CAP)
}

pub fn betti_oracle_with_cap(ideal: &MonomialIdeal, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Ok(BettiTable::zero_ideal());
    }
    let src = StanleyReisnerComplex::new(ideal, cap)?;
    let ws = src.generator_unions();
    let parts: Vec<Vec<(i32, i32, u64)>> = if ws.len() >= PARALLEL_THRESHOLD {
        ws.par_iter().map(|&w| contributions(&src, w, field)).collect()
    } else {
        ws.iter().map(|&w| contributions(&src, w, field)).collect()
    };
    let mut acc: BTreeMap<(i32, i32), u64> = BTreeMap::new();
    for (i, j, v) in parts.into_iter().flatten() {
        *acc.entry((i, j)).or_insert(0) += v;
    }
    Ok(BettiTable::from_entries(acc.into_iter().map(|((i, j), v)| (i, j, v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{example_tree, star};
    use crate::graph::Graph;

    fn table(e: &[(i32, i32, u64)]) -> BettiTable {
        BettiTable::from_entries(e.iter().copied())
    }

    fn all_subsets(n: u32) -> Vec<u64> {
        (0..1u64 << n).collect()
    }

    #[test]
    fn homology_examples() {
        // two isolated points
        assert_eq!(reduced_homology_dims(&[0, 1, 2], FieldSpec::Rational), vec![0, 1]);
        // hollow triangle
        let hollow = [0, 1, 2, 4, 3, 5, 6];
        for f in [FieldSpec::Rational, FieldSpec::Prime(2)] {
            assert_eq!(reduced_homology_dims(&hollow, f), vec![0, 0, 1]);
        }
        // full simplex
        assert!(reduced_homology_dims(&all_subsets(4), FieldSpec::Rational).iter().all(|&d| d == 0));
        // the empty complex {∅}
        assert_eq!(reduced_homology_dims(&[0], FieldSpec::Rational), vec![1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex triangulation of RP^2
        let tris: [[u32; 3]; 10] = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let mut faces: HashSet<u64> = HashSet::new();
        for t in tris {
            let m = t.iter().fold(0u64, |m, &v| m | 1 << v);
            for sub in 0..8u64 {
                let f = (0..3).filter(|k| sub >> k & 1 == 1).fold(0u64, |a, k| a | 1 << t[k]);
                faces.insert(f & m);
            }
        }
        let faces: Vec<u64> = faces.into_iter().collect();
        assert_eq!(reduced_homology_dims(&faces, FieldSpec::Rational), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_dims(&faces, FieldSpec::Prime(2)), vec![0, 0, 1, 1]);
    }

    #[test]
    fn calibration() {
        let principal = Graph::from_edges(&[("x", "y")]).unwrap();
        for f in [FieldSpec::Rational, FieldSpec::Prime(2)] {
            let o = |g: &Graph| betti_oracle(&MonomialIdeal::edge_ideal(g), f).unwrap();
            assert_eq!(o(&principal), table(&[(0, 2, 1)]));
            let two = Graph::from_edges(&[("a", "b"), ("c", "d")]).unwrap();
            assert_eq!(o(&two), table(&[(0, 2, 2), (1, 4, 1)]));
            assert_eq!(o(&star(1)), table(&[(0, 2, 1)]));
            assert_eq!(o(&star(2)), table(&[(0, 2, 2), (1, 3, 1)]));
            assert_eq!(o(&star(3)), table(&[(0, 2, 3), (1, 3, 3), (2, 4, 1)]));
            assert_eq!(o(&star(4)), table(&[(0, 2, 4), (1, 3, 6), (2, 4, 4), (3, 5, 1)]));
            let g = example_tree();
            assert_eq!(o(&g), table(&[(0, 2, 5), (1, 3, 6), (2, 4, 2)]));
            let h = g.delete_edge(g.index_of("x2").unwrap(), g.index_of("x4").unwrap()).unwrap();
            assert_eq!(o(&h), table(&[(0, 2, 4), (1, 3, 2), (1, 4, 4), (2, 5, 4), (3, 6, 1)]));
        }
    }

    #[test]
    fn zero_ideal_and_caps() {
        let edgeless = Graph::new(vec!["a".into()], &[]).unwrap();
        let z = betti_oracle(&MonomialIdeal::edge_ideal(&edgeless), FieldSpec::Rational).unwrap();
        assert!(z.is_zero_ideal());
        let p: Vec<(String, String)> = (0..21).map(|i| (format!("a{i}"), format!("a{}", i + 1))).collect();
        let refs: Vec<(&str, &str)> = p.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let long = Graph::from_edges(&refs).unwrap();
        assert!(matches!(
            betti_oracle(&MonomialIdeal::edge_ideal(&long), FieldSpec::Rational),
            Err(Error::ResourceLimit { .. })
        ));
        assert_eq!(FieldSpec::from_characteristic(4), Err(Error::BadCharacteristic(4)));
        assert_eq!(FieldSpec::from_characteristic(1), Err(Error::BadCharacteristic(1)));
        assert_eq!(FieldSpec::from_characteristic(3), Ok(FieldSpec::Prime(3)));
    }

    #[test]
    fn facet_ideal_with_two_triangles() {
        let c = crate::complex::SimplicialComplex::from_named(&[&["1", "2", "3"], &["3", "4", "5"]]).unwrap();
        let t = betti_oracle(&MonomialIdeal::facet_ideal(&c), FieldSpec::Rational).unwrap();
        assert_eq!(t, table(&[(0, 3, 2), (1, 5, 1)]));
    }

    #[test]
    fn faces_within_matches_filter() {
        let g = example_tree();
        let src = StanleyReisnerComplex::new(&MonomialIdeal::edge_ideal(&g), 20).unwrap();
        let w = (1u64 << src.vertex_count()) - 1;
        let mut got = src.faces_within(w);
        got.sort_unstable();
        let want: Vec<u64> = (0..=w).filter(|&s| src.is_face(s)).collect();
        assert_eq!(got, want);
        assert_eq!(src.to_global(w), g.vertex_set());
    }
}
