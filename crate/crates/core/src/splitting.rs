//! Splitting edges, splitting vertices and leaf facets, the pieces their
//! recursions consume, and a checker for splitting functions.

use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;

/// Default bound on `|G(J ∩ K)|` for exhaustive subset verification.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// A splitting edge `uv` with `N(u) ⊆ N(v) ∪ {v}`.
#[derive(Clone, Debug)]
pub struct EdgeSplit {
    /// Endpoint whose neighborhood is dominated.
    pub u: usize,
    pub v: usize,
    /// `|N(u) ∪ N(v)| - 2`.
    pub n: usize,
    /// `G \ (N(u) ∪ N(v))`.
    pub h: Graph,
    pub g_minus_e: Graph,
}

impl EdgeSplit {
    /// `(I, J, K)` with `J = (uv)` and `K = I(G \ e)`.
    pub fn ideals(&self) -> (MonomialIdeal, MonomialIdeal, MonomialIdeal) {
        let k = MonomialIdeal::edge_ideal(&self.g_minus_e);
        let j = MonomialIdeal::principal(k.names().clone(), VertexSet::pair(self.u, self.v));
        (j.add(&k), j, k)
    }
}

fn closed(g: &Graph, x: usize) -> VertexSet {
    let mut s = g.adjacency(x);
    s.insert(x);
    s
}

fn require_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.neighbors(u)?;
    g.neighbors(v)?;
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(g.name(u).into(), g.name(v).into()))
    }
}

pub fn is_splitting_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    require_edge(g, u, v)?;
    Ok(g.adjacency(u).is_subset(&closed(g, v)) || g.adjacency(v).is_subset(&closed(g, u)))
}

pub fn make_edge_split(g: &Graph, u: usize, v: usize) -> Result<EdgeSplit> {
    require_edge(g, u, v)?;
    let (u, v) = if g.adjacency(u).is_subset(&closed(g, v)) {
        (u, v)
    } else if g.adjacency(v).is_subset(&closed(g, u)) {
        (v, u)
    } else {
        return Err(Error::Precondition(format!(
            "{a}{b} is not a splitting edge: N({a}) ⊄ N({b}) ∪ {{{b}}} and N({b}) ⊄ N({a}) ∪ {{{a}}}",
            a = g.name(u),
            b = g.name(v)
        )));
    };
    let nbhd = g.adjacency(u).union(&g.adjacency(v));
    Ok(EdgeSplit {
        u,
        v,
        n: nbhd.len() - 2,
        h: g.delete_vertices(&nbhd)?,
        g_minus_e: g.delete_edge(u, v)?,
    })
}

/// A splitting vertex `v` with neighbors `v_1 < ... < v_d`.
#[derive(Clone, Debug)]
pub struct VertexSplit {
    pub v: usize,
    pub neighbors: Vec<usize>,
    /// The star `K_{1,d}` on `v` and its neighbors.
    pub star: Graph,
    pub g_minus_v: Graph,
    /// `G_(v)`: edges with an endpoint in `N(v)` that avoid `v`.
    pub g_of_v: Graph,
    /// `G_i = G \ (N(v) ∪ N(v_i))`, one per neighbor.
    pub g_i: Vec<Graph>,
    /// `v·I(G_(v)) + Σ v·v_i·I(G_i)`.
    pub l: MonomialIdeal,
}

impl VertexSplit {
    /// `(I, J, K)` with `J = I(K_{1,d})` and `K = I(G \ {v})`.
    pub fn ideals(&self) -> (MonomialIdeal, MonomialIdeal, MonomialIdeal) {
        let j = MonomialIdeal::edge_ideal(&self.star);
        let k = MonomialIdeal::edge_ideal(&self.g_minus_v);
        (j.add(&k), j, k)
    }
}

pub fn is_splitting_vertex(g: &Graph, v: usize) -> Result<bool> {
    let nv = g.neighbors(v)?;
    if nv.is_empty() {
        return Ok(false);
    }
    let rest = g.delete_vertices(&VertexSet::singleton(v))?;
    Ok(rest.edge_count() > 0)
}

pub fn make_vertex_split(g: &Graph, v: usize) -> Result<VertexSplit> {
    if !is_splitting_vertex(g, v)? {
        return Err(Error::Precondition(format!(
            "{} is not a splitting vertex: it is isolated or G \\ {{{}}} has no edges",
            g.name(v),
            g.name(v)
        )));
    }
    let nv = g.adjacency(v);
    let neighbors: Vec<usize> = nv.iter().collect();
    let vs = VertexSet::singleton(v);
    let g_minus_v = g.delete_vertices(&vs)?;

    let mut star_adj = vec![VertexSet::empty(); g.universe_len()];
    star_adj[v] = nv;
    for &x in &neighbors {
        star_adj[x] = vs;
    }
    let star = Graph::from_parts(g.names().clone(), nv.union(&vs), star_adj);

    let mut adj = vec![VertexSet::empty(); g.universe_len()];
    let mut verts = nv;
    for x in g.vertices().filter(|&x| x != v) {
        let keep = if nv.contains(x) {
            g.adjacency(x).difference(&vs)
        } else {
            g.adjacency(x).intersection(&nv)
        };
        if !keep.is_empty() {
            verts.insert(x);
        }
        adj[x] = keep;
    }
    let g_of_v = Graph::from_parts(g.names().clone(), verts, adj);

    let g_i: Vec<Graph> = neighbors
        .iter()
        .map(|&x| g.delete_vertices(&nv.union(&g.adjacency(x))))
        .collect::<Result<_>>()?;

    let names = g.names().clone();
    let mut l = MonomialIdeal::edge_ideal(&g_of_v).scale(&vs);
    for (&x, gi) in neighbors.iter().zip(&g_i) {
        l = l.add(&MonomialIdeal::edge_ideal(gi).scale(&VertexSet::pair(v, x)));
    }
    debug_assert_eq!(l.names(), &names);
    Ok(VertexSplit {
        v,
        neighbors,
        star,
        g_minus_v,
        g_of_v,
        g_i,
        l,
    })
}

/// A leaf facet `F` of `Δ`.
#[derive(Clone, Debug)]
pub struct FacetSplit {
    pub facet: VertexSet,
    pub delta_minus_f: SimplicialComplex,
    pub conn_bar: SimplicialComplex,
    pub omega: SimplicialComplex,
}

impl FacetSplit {
    /// `(I, J, K)` with `J = (F)` and `K = I(Δ \ F)`.
    pub fn ideals(&self) -> (MonomialIdeal, MonomialIdeal, MonomialIdeal) {
        let k = MonomialIdeal::facet_ideal(&self.delta_minus_f);
        let j = MonomialIdeal::principal(k.names().clone(), self.facet);
        (j.add(&k), j, k)
    }
}

/// Leaves are splitting facets; `false` means "not certified", not
/// "not splitting".
pub fn is_splitting_facet(c: &SimplicialComplex, f: &VertexSet) -> Result<bool> {
    c.is_leaf(f)
}

pub fn make_facet_split(c: &SimplicialComplex, f: &VertexSet) -> Result<FacetSplit> {
    if !c.is_leaf(f)? {
        return Err(Error::Precondition(format!(
            "facet {} is not a leaf",
            c.format_face(f)
        )));
    }
    Ok(FacetSplit {
        facet: *f,
        delta_minus_f: c.remove_facet(f)?,
        conn_bar: c.reduced_conn(f)?,
        omega: c.omega(f)?,
    })
}

/// Which proof-derived splitting function to try.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Edge { u: usize, v: usize },
    Vertex { v: usize },
    Facet { facet: VertexSet },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    /// Condition (b) checked on every subset of `G(J ∩ K)`.
    Exhaustive,
    /// Condition (b) certified by excluded variables.
    Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    Verified(Verification),
    NotVerified { reason: String, witness: Vec<VertexSet> },
}

impl SplitVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, SplitVerdict::Verified(_))
    }
}

fn not_verified(reason: impl Into<String>, witness: Vec<VertexSet>) -> Result<SplitVerdict> {
    Ok(SplitVerdict::NotVerified {
        reason: reason.into(),
        witness,
    })
}

/// Checks that `I = J + K` is a splitting using the splitting function from
/// the proof matching `kind`.
pub fn verify_splitting(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    kind: SplitKind,
    subset_cap: usize,
) -> Result<SplitVerdict> {
    let fmt = |m: &VertexSet| i.format_monomial(m);
    if let Some(g) = j.generators().iter().find(|g| k.generators().contains(g)) {
        return not_verified(format!("{} is a generator of both J and K", fmt(g)), vec![*g]);
    }
    let sum = j.add(k);
    if sum.generators() != i.generators() {
        let witness: Vec<VertexSet> = i
            .generators()
            .iter()
            .chain(sum.generators())
            .filter(|g| !(i.generators().contains(g) && sum.generators().contains(g)))
            .copied()
            .collect();
        return not_verified("G(I) is not the disjoint union of G(J) and G(K)", witness);
    }
    if j.is_zero() || k.is_zero() {
        return not_verified("J and K must both be nonzero", vec![]);
    }
    let jk = j.intersect(k);
    let gens = jk.generators().to_vec();
    let in_k = |m: &VertexSet| k.generators().contains(m);

    let (phi, psi): (Vec<VertexSet>, Vec<VertexSet>) = match kind {
        SplitKind::Edge { u, v } => {
            let uv = VertexSet::pair(u, v);
            if j.generators() != [uv] {
                return not_verified("J is not generated by the edge", vec![uv]);
            }
            // orient so that the first endpoint is dominated, if possible
            let support = i.support();
            let nb = |x: usize, y: usize| -> VertexSet {
                support
                    .iter()
                    .filter(|&z| z != x && z != y && in_k(&VertexSet::pair(x, z)))
                    .collect()
            };
            let (nu, nv) = (nb(u, v), nb(v, u));
            let (a, b) = if nu.is_subset(&nv) {
                (u, v)
            } else if nv.is_subset(&nu) {
                (v, u)
            } else {
                let x = nu.difference(&nv).first().unwrap();
                let y = nv.difference(&nu).first().unwrap();
                let w1 = uv.union(&VertexSet::singleton(x));
                let w2 = uv.union(&VertexSet::singleton(y));
                return not_verified(
                    format!(
                        "no splitting function exists: ψ({}) must be {} and ψ({}) must be {}, \
                         so S = {{{}, {}}} has lcm(ψ(S)) = lcm(S)",
                        fmt(&w1),
                        fmt(&VertexSet::pair(u, x)),
                        fmt(&w2),
                        fmt(&VertexSet::pair(v, y)),
                        fmt(&w1),
                        fmt(&w2)
                    ),
                    vec![w1, w2],
                );
            };
            let phi = vec![uv; gens.len()];
            let psi = gens
                .iter()
                .map(|w| {
                    let mut p = *w;
                    p.remove(a);
                    if in_k(&p) {
                        p
                    } else {
                        p.remove(b);
                        p
                    }
                })
                .collect();
            (phi, psi)
        }
        SplitKind::Vertex { v } => {
            let mut phi = Vec::with_capacity(gens.len());
            let mut psi = Vec::with_capacity(gens.len());
            for w in &gens {
                let vi = w
                    .iter()
                    .find(|&x| x != v && j.generators().contains(&VertexSet::pair(v, x)));
                let Some(vi) = vi else {
                    return not_verified(format!("{} has no neighbor of the vertex", fmt(w)), vec![*w]);
                };
                phi.push(VertexSet::pair(v, vi));
                let mut p = *w;
                p.remove(v);
                if !in_k(&p) {
                    p.remove(vi);
                }
                psi.push(p);
            }
            (phi, psi)
        }
        SplitKind::Facet { facet } => {
            let phi = vec![facet; gens.len()];
            let mut psi = Vec::with_capacity(gens.len());
            for w in &gens {
                let best = k
                    .generators()
                    .iter()
                    .filter(|g| g.union(&facet) == *w)
                    .min_by(|a, b| a.intersection(&facet).cmp_lex(&b.intersection(&facet)));
                match best {
                    Some(g) => psi.push(*g),
                    None => {
                        return not_verified(format!("no generator G of K has lcm(F, G) = {}", fmt(w)), vec![*w])
                    }
                }
            }
            (phi, psi)
        }
    };

    for (idx, w) in gens.iter().enumerate() {
        if !j.generators().contains(&phi[idx]) || !in_k(&psi[idx]) {
            return not_verified(
                format!("the splitting function does not land in G(J) × G(K) at {}", fmt(w)),
                vec![*w],
            );
        }
        if phi[idx].union(&psi[idx]) != *w {
            return not_verified(format!("condition (a) fails at {}", fmt(w)), vec![*w]);
        }
    }

    if gens.len() <= subset_cap {
        let mut stack = Vec::new();
        if let Some(bad) = exhaustive(&gens, &phi, &psi, 0, Triple::default(), &mut stack) {
            return not_verified("condition (b) fails: lcm(φ(S)) or lcm(ψ(S)) equals lcm(S)", bad);
        }
        return Ok(SplitVerdict::Verified(Verification::Exhaustive));
    }
    for (name, map) in [("φ", &phi), ("ψ", &psi)] {
        if let Err(stuck) = peel_certificate(&gens, map) {
            return not_verified(
                format!("subset count exceeds the cap and the {name} certificate is inconclusive"),
                stuck,
            );
        }
    }
    Ok(SplitVerdict::Verified(Verification::Certificate))
}

#[derive(Clone, Copy, Default)]
struct Triple {
    s: VertexSet,
    p: VertexSet,
    q: VertexSet,
}

/// Visits every nonempty subset once; returns the first failing subset.
fn exhaustive(
    gens: &[VertexSet],
    phi: &[VertexSet],
    psi: &[VertexSet],
    start: usize,
    acc: Triple,
    stack: &mut Vec<usize>,
) -> Option<Vec<VertexSet>> {
    for t in start..gens.len() {
        let next = Triple {
            s: acc.s.union(&gens[t]),
            p: acc.p.union(&phi[t]),
            q: acc.q.union(&psi[t]),
        };
        stack.push(t);
        if next.p == next.s || next.q == next.s {
            return Some(stack.iter().map(|&k| gens[k]).collect());
        }
        if let Some(w) = exhaustive(gens, phi, psi, t + 1, next, stack) {
            return Some(w);
        }
        stack.pop();
    }
    None
}

/// Variable-exclusion certificate for condition (b) of one map: repeatedly
/// find the variables used by the remaining generators but by none of their
/// images, and discard every generator containing one. Any subset then has
/// a first-discarded member whose witness variable lies in `lcm(S)` but not
/// in the lcm of the images. Returns the stuck generators on failure.
fn peel_certificate(gens: &[VertexSet], map: &[VertexSet]) -> std::result::Result<(), Vec<VertexSet>> {
    let mut remaining: Vec<usize> = (0..gens.len()).collect();
    while !remaining.is_empty() {
        let used = remaining.iter().fold(VertexSet::empty(), |a, &k| a.union(&gens[k]));
        let imaged = remaining.iter().fold(VertexSet::empty(), |a, &k| a.union(&map[k]));
        let free = used.difference(&imaged);
        let before = remaining.len();
        remaining.retain(|&k| gens[k].is_disjoint(&free));
        if remaining.len() == before {
            return Err(remaining.iter().map(|&k| gens[k]).collect());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{complete, cycle, example_tree, path, star};
    use proptest::prelude::*;

    fn idx(g: &Graph, n: &str) -> usize {
        g.index_of(n).unwrap()
    }

    #[test]
    fn splitting_edge_examples() {
        let g = example_tree();
        assert!(!is_splitting_edge(&g, idx(&g, "x2"), idx(&g, "x4")).unwrap());
        assert!(is_splitting_edge(&g, idx(&g, "x1"), idx(&g, "x2")).unwrap());
        let k3 = complete(3);
        for (u, v) in k3.edges() {
            assert!(is_splitting_edge(&k3, u, v).unwrap());
        }
        assert!(matches!(is_splitting_edge(&g, 0, 2), Err(Error::NotAnEdge(..))));
        assert!(matches!(
            make_edge_split(&g, idx(&g, "x2"), idx(&g, "x4")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn edge_split_examples() {
        let p4 = path(4);
        let s = make_edge_split(&p4, 0, 1).unwrap();
        assert_eq!((s.u, s.v, s.n), (0, 1, 1));
        assert_eq!(s.h.vertex_set(), VertexSet::singleton(3));
        assert_eq!(s.h.edge_count(), 0);

        let g = example_tree();
        let s = make_edge_split(&g, idx(&g, "x1"), idx(&g, "x2")).unwrap();
        assert_eq!(s.n, 2);
        assert_eq!(s.h.vertex_names(), vec!["x5", "x6"]);
        assert_eq!(s.h.edge_count(), 0);

        let e = Graph::from_edges(&[("u", "v")]).unwrap();
        let s = make_edge_split(&e, 0, 1).unwrap();
        assert_eq!(s.n, 0);
        assert_eq!(s.h.vertex_count(), 0);
    }

    #[test]
    fn splitting_vertex_examples() {
        assert!(!is_splitting_vertex(&star(4), 0).unwrap());
        assert!(is_splitting_vertex(&path(3), 0).unwrap());
        let iso = Graph::parse("a b\nisolated: c\n", 64).unwrap();
        assert!(!is_splitting_vertex(&iso, 2).unwrap());
        assert!(matches!(make_vertex_split(&star(3), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn vertex_split_examples() {
        let p3 = path(3);
        let s = make_vertex_split(&p3, 0).unwrap();
        assert_eq!(s.neighbors, vec![1]);
        assert_eq!(s.g_of_v.edges(), vec![(1, 2)]);
        assert_eq!(s.g_i[0].vertex_count(), 0);
        assert_eq!(s.l.generators(), &[VertexSet::from_indices([0, 1, 2])]);

        let c4 = cycle(4);
        let s = make_vertex_split(&c4, 0).unwrap();
        assert_eq!(s.neighbors, vec![1, 3]);
        assert_eq!(s.g_of_v.edges(), vec![(1, 2), (2, 3)]);
        assert!(s.g_i.iter().all(|g| g.vertex_count() == 0));
        let (_, j, k) = s.ideals();
        assert_eq!(s.l, j.intersect(&k));

        let c5 = cycle(5);
        let s = make_vertex_split(&c5, 0).unwrap();
        assert_eq!(s.neighbors, vec![1, 4]);
        assert_eq!(s.g_of_v.edges(), vec![(1, 2), (3, 4)]);
        assert_eq!(s.g_i[0].vertex_set(), VertexSet::singleton(3));
        assert_eq!(s.g_i[1].vertex_set(), VertexSet::singleton(2));
        let (_, j, k) = s.ideals();
        assert_eq!(s.l, j.intersect(&k));
        assert_eq!(s.l.num_generators(), 2);
    }

    #[test]
    fn facet_split_examples() {
        let t = SimplicialComplex::from_named(&[&["1", "2", "3"], &["3", "4", "5"]]).unwrap();
        let f = t.face_of(&["1", "2", "3"]).unwrap();
        assert!(is_splitting_facet(&t, &f).unwrap());
        let s = make_facet_split(&t, &f).unwrap();
        assert_eq!(s.conn_bar.facets(), &[t.face_of(&["4", "5"]).unwrap()]);
        assert!(s.omega.is_empty());

        let tri = SimplicialComplex::from_named(&[&["a", "b"], &["b", "c"], &["c", "a"]]).unwrap();
        let ab = tri.face_of(&["a", "b"]).unwrap();
        assert!(!is_splitting_facet(&tri, &ab).unwrap());
        assert!(matches!(make_facet_split(&tri, &ab), Err(Error::Precondition(_))));

        let c = SimplicialComplex::from_named(&[&["1", "2"], &["2", "3"], &["4", "5"]]).unwrap();
        let f = c.face_of(&["4", "5"]).unwrap();
        let s = make_facet_split(&c, &f).unwrap();
        assert!(s.conn_bar.is_empty());
        assert_eq!(s.omega.facet_count(), 2);
    }

    #[test]
    fn verifier_examples() {
        let g = example_tree();
        let (u, v) = (idx(&g, "x2"), idx(&g, "x4"));
        let i = MonomialIdeal::edge_ideal(&g);
        let j = MonomialIdeal::principal(g.names().clone(), VertexSet::pair(u, v));
        let k = MonomialIdeal::edge_ideal(&g.delete_edge(u, v).unwrap());
        match verify_splitting(&i, &j, &k, SplitKind::Edge { u, v }, 20).unwrap() {
            SplitVerdict::NotVerified { witness, reason } => {
                assert_eq!(witness.len(), 2);
                assert!(reason.contains("no splitting function"));
                let x1x2x4: VertexSet = ["x1", "x2", "x4"].iter().map(|n| idx(&g, n)).collect();
                assert!(witness.contains(&x1x2x4));
            }
            other => panic!("unexpected verdict {other:?}"),
        }

        let p3 = path(3);
        let names = p3.names().clone();
        let ab = MonomialIdeal::principal(names.clone(), VertexSet::pair(0, 1));
        let bc = MonomialIdeal::principal(names, VertexSet::pair(1, 2));
        let i = MonomialIdeal::edge_ideal(&p3);
        let verdict = verify_splitting(&i, &ab, &bc, SplitKind::Edge { u: 0, v: 1 }, 20).unwrap();
        assert_eq!(verdict, SplitVerdict::Verified(Verification::Exhaustive));

        let t = SimplicialComplex::from_named(&[&["1", "2", "3"], &["3", "4", "5"]]).unwrap();
        let f = t.face_of(&["1", "2", "3"]).unwrap();
        let s = make_facet_split(&t, &f).unwrap();
        let (i, j, k) = s.ideals();
        let verdict = verify_splitting(&i, &j, &k, SplitKind::Facet { facet: f }, 20).unwrap();
        assert_eq!(verdict, SplitVerdict::Verified(Verification::Exhaustive));
        let verdict = verify_splitting(&i, &j, &k, SplitKind::Facet { facet: f }, 0).unwrap();
        assert_eq!(verdict, SplitVerdict::Verified(Verification::Certificate));

        // not a partition of the generators
        let verdict = verify_splitting(&i, &j, &i, SplitKind::Facet { facet: f }, 20).unwrap();
        assert!(!verdict.is_verified());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[k] {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                Graph::new((0..n).map(|i| format!("v{i}")).collect(), &edges).unwrap()
            })
        })
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(1u64..(1 << 7), 1..=6).prop_map(|masks| {
            let names: Vec<String> = (0..7).map(|i| format!("x{i}")).collect();
            let sets: Vec<VertexSet> = masks.into_iter().map(VertexSet::from_u64).collect();
            SimplicialComplex::new(names, &sets).unwrap()
        })
    }

    proptest! {
        #[test]
        fn intersection_descriptions(g in arb_graph(7)) {
            for (u, v) in g.edges() {
                let nbhd = g.adjacency(u).union(&g.adjacency(v));
                let uv = VertexSet::pair(u, v);
                let h = g.delete_vertices(&nbhd).unwrap();
                let vars: Vec<VertexSet> = nbhd.difference(&uv).iter().map(VertexSet::singleton).collect();
                let expect = MonomialIdeal::minimalize(g.names().clone(), vars)
                    .add(&MonomialIdeal::edge_ideal(&h))
                    .scale(&uv);
                let j = MonomialIdeal::principal(g.names().clone(), uv);
                let k = MonomialIdeal::edge_ideal(&g.delete_edge(u, v).unwrap());
                if is_splitting_edge(&g, u, v).unwrap() {
                    prop_assert_eq!(j.intersect(&k), expect);
                    let s = make_edge_split(&g, u, v).unwrap();
                    let (i, j, k) = s.ideals();
                    if !k.is_zero() {
                        let verdict = verify_splitting(&i, &j, &k, SplitKind::Edge { u, v }, 20).unwrap();
                        prop_assert!(verdict.is_verified(), "{:?}", verdict);
                        let cert = verify_splitting(&i, &j, &k, SplitKind::Edge { u, v }, 0).unwrap();
                        prop_assert!(cert.is_verified(), "{:?}", cert);
                    }
                } else {
                    let i = MonomialIdeal::edge_ideal(&g);
                    let verdict = verify_splitting(&i, &j, &k, SplitKind::Edge { u, v }, 20).unwrap();
                    prop_assert!(!verdict.is_verified());
                }
            }
            for v in g.vertices() {
                if is_splitting_vertex(&g, v).unwrap() {
                    let s = make_vertex_split(&g, v).unwrap();
                    let (i, j, k) = s.ideals();
                    prop_assert_eq!(&s.l, &j.intersect(&k));
                    let verdict = verify_splitting(&i, &j, &k, SplitKind::Vertex { v }, 20).unwrap();
                    prop_assert!(verdict.is_verified(), "{:?}", verdict);
                    let cert = verify_splitting(&i, &j, &k, SplitKind::Vertex { v }, 0).unwrap();
                    prop_assert!(cert.is_verified(), "{:?}", cert);
                }
            }
        }

        #[test]
        fn facet_intersection_description(c in arb_complex()) {
            for f in c.facets() {
                let j = MonomialIdeal::principal(c.names().clone(), *f);
                let k = MonomialIdeal::facet_ideal(&c.remove_facet(f).unwrap());
                let conn_bar = MonomialIdeal::facet_ideal(&c.reduced_conn(f).unwrap());
                let omega = MonomialIdeal::facet_ideal(&c.omega(f).unwrap());
                prop_assert_eq!(conn_bar.add(&omega).scale(f), j.intersect(&k));
                if c.is_leaf(f).unwrap() && !k.is_zero() {
                    let s = make_facet_split(&c, f).unwrap();
                    let (i, j, k) = s.ideals();
                    let verdict = verify_splitting(&i, &j, &k, SplitKind::Facet { facet: *f }, 20).unwrap();
                    prop_assert!(verdict.is_verified(), "{:?}", verdict);
                }
            }
        }
    }
}
