//! Immutable simple undirected graphs on dense vertex labels `0..n`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. The
/// position of an edge in [`Graph::edges`] is its rank, which the line graph
/// uses as the vertex label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Every component has at least two edges.
    pub is_non_trivial: bool,
    /// Set for the graph with no vertices.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Sorted vertex labels.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub regular: bool,
    /// `Some((a, b))` with `a > b` when the degree set is exactly `{a, b}` and
    /// every edge joins a degree-`a` vertex to a degree-`b` vertex.
    pub biregular: Option<(usize, usize)>,
    pub path: bool,
    pub cycle: bool,
    pub tree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    /// Ordered by smallest vertex.
    pub components: Vec<Component>,
}

impl ComponentDecomposition {
    pub fn all_regular(&self) -> bool {
        self.components.iter().all(|c| c.regular)
    }

    pub fn all_regular_or_biregular(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.regular || c.biregular.is_some())
    }

    pub fn is_forest(&self) -> bool {
        self.components.iter().all(|c| c.tree)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(n, edge_list.iter().copied()).map(|(g, _)| g)
    }

    /// Like [`Graph::new`] but also reports how many duplicate edges were dropped.
    pub fn from_edges<I>(n: usize, edge_list: I) -> Result<(Self, usize)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        let mut duplicates = 0;
        for (u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                duplicates += 1;
            }
        }
        Ok((
            Self::from_sorted_unique(n, set.into_iter().collect()),
            duplicates,
        ))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges, adj };
        debug_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        g
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_unique(n, edges)
    }

    /// The cycle `C_n`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        edges.sort_unstable();
        Self::from_sorted_unique(n, edges)
    }

    /// The star `S_n` on `n` vertices, centred at vertex 0.
    pub fn star(n: usize) -> Self {
        let edges = (1..n).map(|v| (0, v)).collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unique(a + b, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.sort_unstable();
        Self::from_sorted_unique(self.n + other.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted_unique(self.n, edges)
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        edges.sort_unstable();
        Self::from_sorted_unique(vertices.len(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Rank of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        let is_non_trivial = self.n > 0
            && self
                .components()
                .iter()
                .all(|c| self.component_edge_count(c) >= 2);
        DegreeStats {
            n: self.n,
            m: self.m(),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            is_non_trivial,
            degenerate: self.n == 0,
        }
    }

    fn component_edge_count(&self, vertices: &[usize]) -> usize {
        vertices.iter().map(|&v| self.degree(v)).sum::<usize>() / 2
    }

    /// First component with fewer than two edges.
    pub fn trivial_component(&self) -> Option<(Vec<usize>, usize)> {
        self.components().into_iter().find_map(|c| {
            let edges = self.component_edge_count(&c);
            (edges < 2).then_some((c, edges))
        })
    }

    pub fn classify_components(&self) -> ComponentDecomposition {
        let components = self
            .components()
            .into_iter()
            .map(|vertices| self.classify(vertices))
            .collect();
        ComponentDecomposition { components }
    }

    fn classify(&self, vertices: Vec<usize>) -> Component {
        let edge_count = self.component_edge_count(&vertices);
        let degree_set: BTreeSet<usize> = vertices.iter().map(|&v| self.degree(v)).collect();
        let regular = degree_set.len() == 1;
        let biregular = if degree_set.len() == 2 {
            let low = *degree_set.first().unwrap();
            let high = *degree_set.last().unwrap();
            let alternating = vertices.iter().all(|&u| {
                self.adj[u]
                    .iter()
                    .all(|&w| self.degree(u) != self.degree(w))
            });
            alternating.then_some((high, low))
        } else {
            None
        };
        let tree = edge_count + 1 == vertices.len();
        let max_degree = degree_set.last().copied().unwrap_or(0);
        let path = tree && max_degree <= 2;
        let cycle = vertices.len() >= 3 && regular && max_degree == 2;
        Component {
            vertices,
            edge_count,
            regular,
            biregular,
            path,
            cycle,
            tree,
        }
    }
}
