//! Simple undirected graphs over a fixed, named vertex universe.
//!
//! A [`Graph`] carries the full list of vertex names it was built from plus
//! the subset of those vertices that are present. Deleting vertices or taking
//! induced subgraphs shrinks the present set but never renumbers, so every
//! graph derived from an input shares one index space. Edge ideals of derived
//! graphs therefore live in the same polynomial ring as the original.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::bitset::{VertexSet, DEFAULT_VERTEX_CAP, MAX_VERTICES};
use crate::error::{Error, Result};

/// Default cap on the number of edges accepted by the branch-and-bound
/// induced matching search.
pub const DEFAULT_MATCHING_EDGE_CAP: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Arc<[String]>,
    vertices: VertexSet,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_names())
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `names` (all present) with the given edges, using
    /// the default 64-vertex cap.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_cap(names, edges, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(names: Vec<String>, edges: &[(usize, usize)], cap: usize) -> Result<Self> {
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
        let n = names.len();
        let mut adj = vec![VertexSet::empty(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at `{}`", names[u])));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            names: names.into(),
            vertices: VertexSet::full(n),
            adj,
        })
    }

    /// Convenience constructor from named edges; vertex order is order of
    /// first appearance.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index = HashMap::new();
        let mut idx = |name: &str, names: &mut Vec<String>| -> usize {
            *index.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            })
        };
        let mut pairs = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let u = idx(a, &mut names);
            let v = idx(b, &mut names);
            pairs.push((u, v));
        }
        Graph::new(names, &pairs)
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated names, `#` comment lines, and `isolated: a b c`
    /// declarations.
    pub fn parse(text: &str, cap: usize) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut intern = |name: &str, names: &mut Vec<String>| -> usize {
            if let Some(&i) = index.get(name) {
                return i;
            }
            names.push(name.to_string());
            index.insert(name.to_string(), names.len() - 1);
            names.len() - 1
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("isolated:") {
                for name in rest.split_whitespace() {
                    intern(name, &mut names);
                }
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected two vertex names, found {}", tokens.len()),
                });
            }
            if tokens[0] == tokens[1] {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("loop at `{}`", tokens[0]),
                });
            }
            let u = intern(tokens[0], &mut names);
            let v = intern(tokens[1], &mut names);
            edges.push((u, v));
        }
        Graph::with_cap(names, &edges, cap)
    }

    /// Renders the graph back to the edge-list text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", self.names[u], self.names[v]));
        }
        let isolated: Vec<&str> = self
            .vertices()
            .filter(|&v| self.adj[v].is_empty())
            .map(|v| self.names[v].as_str())
            .collect();
        if !isolated.is_empty() {
            out.push_str(&format!("isolated: {}\n", isolated.join(" ")));
        }
        out
    }

    /// A graph on the same universe with the given present vertices and
    /// adjacency. The caller guarantees symmetry and that edges stay inside
    /// `vertices`.
    pub(crate) fn from_parts(names: Arc<[String]>, vertices: VertexSet, adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(names.len(), adj.len());
        Graph { names, vertices, adj }
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    /// Size of the underlying vertex universe (present or not).
    pub fn universe_len(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter()
    }

    pub fn vertex_names(&self) -> Vec<&str> {
        self.vertices().map(|v| self.names[v].as_str()).collect()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    /// Index of a present vertex.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .filter(|&i| self.vertices.contains(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(
                self.names.get(v).cloned().unwrap_or_else(|| format!("#{v}")),
            ))
        }
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.difference(&self.vertices).first() {
            None => Ok(()),
            Some(v) => self.check_vertex(v),
        }
    }

    /// Sorted edge list, each edge as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    /// `N(v)` for a present vertex.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// Unchecked neighborhood; empty for absent vertices.
    #[inline]
    pub fn adjacency(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(
                self.names.get(u).cloned().unwrap_or_default(),
                self.names.get(v).cloned().unwrap_or_default(),
            ));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// `G \ S`: removes the vertices of `S` and their incident edges.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        Ok(self.restrict(&self.vertices.difference(s)))
    }

    /// `G_S`: the induced subgraph on `S`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        Ok(self.restrict(s))
    }

    /// Induced subgraph on `keep ∩ V_G` without validation.
    pub(crate) fn restrict(&self, keep: &VertexSet) -> Graph {
        let keep = keep.intersection(&self.vertices);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, a)| {
                if keep.contains(v) {
                    a.intersection(&keep)
                } else {
                    VertexSet::empty()
                }
            })
            .collect();
        Graph::from_parts(self.names.clone(), keep, adj)
    }

    pub fn complement(&self) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, a)| {
                if self.vertices.contains(v) {
                    let mut c = self.vertices.difference(a);
                    c.remove(v);
                    c
                } else {
                    VertexSet::empty()
                }
            })
            .collect();
        Graph::from_parts(self.names.clone(), self.vertices, adj)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty();
                for v in frontier.iter() {
                    next = next.union(&self.adj[v]);
                }
                frontier = next.difference(&comp);
                comp = comp.union(&frontier);
            }
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_sets().iter().map(|c| self.restrict(c)).collect()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_sets().len() == self.vertex_count()
    }

    /// Some cycle of the graph as a closed vertex walk without repetition.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut visited = VertexSet::empty();
        for root in self.vertices() {
            if visited.contains(root) {
                continue;
            }
            let mut stack = vec![root];
            visited.insert(root);
            parent[root] = root;
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if w == parent[v] {
                        continue;
                    }
                    if visited.contains(w) {
                        // Back edge: splice the two tree paths together.
                        let path_to_root = |mut x: usize| {
                            let mut p = vec![x];
                            while parent[x] != x {
                                x = parent[x];
                                p.push(x);
                            }
                            p
                        };
                        let pv = path_to_root(v);
                        let pw = path_to_root(w);
                        let lca = *pv.iter().find(|x| pw.contains(x))?;
                        let mut cycle: Vec<usize> =
                            pv.iter().copied().take_while(|&x| x != lca).collect();
                        cycle.push(lca);
                        let tail: Vec<usize> = pw.iter().copied().take_while(|&x| x != lca).collect();
                        cycle.extend(tail.into_iter().rev());
                        return Some(cycle);
                    }
                    visited.insert(w);
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        None
    }

    /// Every leaf edge as `(leaf, neighbor)` with `deg leaf = 1`, ordered by
    /// leaf index. An isolated edge appears once per endpoint.
    pub fn leaf_edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .filter(|&v| self.adj[v].len() == 1)
            .map(|v| (v, self.adj[v].first().unwrap()))
            .collect()
    }

    /// The leaf edge with the smallest leaf index.
    pub fn find_leaf_edge(&self) -> Option<(usize, usize)> {
        self.vertices()
            .find(|&v| self.adj[v].len() == 1)
            .map(|v| (v, self.adj[v].first().unwrap()))
    }

    /// Perfect elimination ordering from maximum cardinality search, or
    /// `None` when the graph is not chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.adj.len();
        let mut weight = vec![0usize; n];
        let mut unnumbered = self.vertices;
        let mut visit = Vec::with_capacity(self.vertex_count());
        while !unnumbered.is_empty() {
            let v = unnumbered
                .iter()
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .unwrap();
            unnumbered.remove(v);
            visit.push(v);
            for w in self.adj[v].intersection(&unnumbered).iter() {
                weight[w] += 1;
            }
        }
        visit.reverse();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in visit.iter().enumerate() {
            pos[v] = i;
        }
        for &v in &visit {
            let later: Vec<usize> = self.adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
            if let Some(&p) = later.iter().min_by_key(|&&u| pos[u]) {
                if later.iter().any(|&u| u != p && !self.adj[p].contains(u)) {
                    return None;
                }
            }
        }
        Some(visit)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// A shortest induced cycle of length at least 4, found without
    /// reference to elimination orderings: for every induced path `a-b-c`
    /// the shortest `a`..`c` path avoiding the rest of `N[b]` closes an
    /// induced cycle through `b`.
    pub fn shortest_minimal_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for b in self.vertices() {
            let nb = self.adj[b];
            let closed = {
                let mut c = nb;
                c.insert(b);
                c
            };
            for a in nb.iter() {
                for c in nb.iter().filter(|&c| c > a) {
                    if self.adj[a].contains(c) {
                        continue;
                    }
                    let mut allowed = self.vertices.difference(&closed);
                    allowed.insert(a);
                    allowed.insert(c);
                    if let Some(path) = self.bfs_path(a, c, &allowed) {
                        let len = path.len() + 1;
                        if best.as_ref().is_none_or(|cyc| len < cyc.len()) {
                            let mut cycle = vec![b];
                            cycle.extend(path);
                            best = Some(cycle);
                            if len == 4 {
                                return best;
                            }
                        }
                    }
                }
            }
        }
        best
    }

    pub fn shortest_minimal_cycle_len(&self) -> Option<usize> {
        self.shortest_minimal_cycle().map(|c| c.len())
    }

    fn bfs_path(&self, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.adj.len()];
        let mut seen = VertexSet::singleton(from);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[v].intersection(allowed).difference(&seen).iter() {
                seen.insert(w);
                prev[w] = v;
                queue.push_back(w);
            }
        }
        None
    }

    /// An induced 4-cycle `[a, b, c, d]` (in cyclic order), if any.
    pub fn induced_four_cycle(&self) -> Option<[usize; 4]> {
        for a in self.vertices() {
            for c in self.vertices().filter(|&c| c > a && !self.adj[a].contains(c)) {
                let common: Vec<usize> = self.adj[a].intersection(&self.adj[c]).iter().collect();
                for (i, &b) in common.iter().enumerate() {
                    for &d in &common[i + 1..] {
                        if !self.adj[b].contains(d) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Number of `r`-cliques; `k_1 = |V|`, `k_2 = |E|`.
    pub fn clique_count(&self, r: usize) -> u64 {
        fn extend(g: &Graph, cand: VertexSet, remaining: usize) -> u64 {
            if remaining == 0 {
                return 1;
            }
            if cand.len() < remaining {
                return 0;
            }
            let mut total = 0;
            for v in cand.iter() {
                let mut next = cand.intersection(&g.adj[v]);
                // keep only larger indices so each clique is counted once
                for w in next.iter() {
                    if w < v {
                        next.remove(w);
                    }
                }
                total += extend(g, next, remaining - 1);
            }
            total
        }
        if r == 0 {
            return 1;
        }
        extend(self, self.vertices, r)
    }

    /// Maximum number of pairwise disconnected edges. Forests use an exact
    /// tree dynamic program; other graphs use branch and bound limited to
    /// [`DEFAULT_MATCHING_EDGE_CAP`] edges.
    pub fn induced_matching_number(&self) -> Result<usize> {
        self.induced_matching_number_with_cap(DEFAULT_MATCHING_EDGE_CAP)
    }

    pub fn induced_matching_number_with_cap(&self, edge_cap: usize) -> Result<usize> {
        if self.is_forest() {
            Ok(self.induced_matching_forest_dp())
        } else {
            self.induced_matching_branch_and_bound(edge_cap)
        }
    }

    /// Exhaustive branch and bound over edge subsets.
    pub fn induced_matching_branch_and_bound(&self, edge_cap: usize) -> Result<usize> {
        let edges = self.edges();
        let cap = edge_cap.min(64);
        if edges.len() > cap {
            return Err(Error::ResourceLimit {
                what: "edge count for induced matching search",
                actual: edges.len(),
                cap,
                flag: "--edge-cap",
            });
        }
        let m = edges.len();
        // conflict[i]: edges that cannot be chosen together with edge i
        let mut conflict = vec![0u64; m];
        for i in 0..m {
            let (a, b) = edges[i];
            let mut reach = self.adj[a].union(&self.adj[b]);
            reach.insert(a);
            reach.insert(b);
            for j in 0..m {
                let (c, d) = edges[j];
                if i != j && (reach.contains(c) || reach.contains(d)) {
                    conflict[i] |= 1 << j;
                }
            }
        }
        fn search(cand: u64, size: usize, best: &mut usize, conflict: &[u64]) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let e = cand.trailing_zeros() as usize;
            let bit = 1u64 << e;
            search(cand & !conflict[e] & !bit, size + 1, best, conflict);
            search(cand & !bit, size, best, conflict);
        }
        let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut best = 0;
        search(all, 0, &mut best, &conflict);
        Ok(best)
    }

    /// Tree DP over each component. Per vertex `v`:
    /// `free[v]`  = best in the subtree with `v` not an endpoint,
    /// `down[v]`  = best with `v` matched to one of its children,
    /// `up[v]`    = best in the strict subtree when `v` is matched to its parent
    ///              (no child may be an endpoint).
    fn induced_matching_forest_dp(&self) -> usize {
        let n = self.adj.len();
        let mut free = vec![0usize; n];
        let mut down = vec![0usize; n];
        let mut up = vec![0usize; n];
        let mut total = 0;
        for comp in self.component_sets() {
            let root = comp.first().unwrap();
            // iterative DFS order
            let mut order = Vec::with_capacity(comp.len());
            let mut parent = vec![usize::MAX; n];
            let mut stack = vec![root];
            parent[root] = root;
            while let Some(v) = stack.pop() {
                order.push(v);
                for w in self.adj[v].iter() {
                    if parent[w] == usize::MAX {
                        parent[w] = v;
                        stack.push(w);
                    }
                }
            }
            for &v in order.iter().rev() {
                let children: Vec<usize> = self.adj[v].iter().filter(|&w| parent[w] == v && w != v).collect();
                let sum_free: usize = children.iter().map(|&c| free[c]).sum();
                up[v] = sum_free;
                free[v] = children.iter().map(|&c| free[c].max(down[c])).sum();
                down[v] = children
                    .iter()
                    .map(|&c| 1 + sum_free - free[c] + up[c])
                    .max()
                    .unwrap_or(0);
            }
            total += free[root].max(down[root]);
        }
        total
    }
}
