//! Canonical labelling of small graphs and isomorphism testing.
//!
//! The key of a graph is the lexicographically smallest upper-triangular
//! adjacency bit string (column-major, the graph6 bit order) taken over every
//! vertex ordering that lists vertices by non-increasing invariant, where the
//! invariant of a vertex is its degree followed by the sorted degrees of its
//! neighbours. The invariant is preserved by isomorphisms, so two graphs
//! share a key exactly when they are isomorphic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::graph6;

pub const DEFAULT_CANONICAL_CAP: usize = 10;

/// Largest order whose bit string fits in a `u128`.
pub const MAX_CANONICAL_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    /// First pair in column-major order is the most significant bit.
    bits: u128,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        usize::from(self.n)
    }

    fn pair_count(&self) -> usize {
        let n = self.n();
        n * n.saturating_sub(1) / 2
    }

    /// The adjacency bit string as `'0'`/`'1'` characters.
    pub fn bit_string(&self) -> String {
        let len = self.pair_count();
        (0..len)
            .map(|t| {
                if self.bits >> (len - 1 - t) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let len = self.pair_count();
        let mut edges = Vec::new();
        let mut t = 0;
        for j in 1..self.n() {
            for i in 0..j {
                if self.bits >> (len - 1 - t) & 1 == 1 {
                    edges.push((i, j));
                }
                t += 1;
            }
        }
        Graph::new(self.n(), &edges).expect("key encodes a simple graph")
    }

    pub fn to_graph6(&self) -> String {
        graph6::emit_graph6(&self.to_graph()).expect("canonical keys fit the short form")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    canonical_form_with_cap(g, DEFAULT_CANONICAL_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalKey> {
    canonical_labeling(g, cap).map(|(key, _)| key)
}

/// Returns the key and the ordering that realises it: `order[pos]` is the
/// original vertex placed at position `pos`.
pub fn canonical_labeling(g: &Graph, cap: usize) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.n();
    let cap = cap.min(MAX_CANONICAL_CAP);
    if n > cap {
        return Err(Error::TooLargeForCanonical { n, cap });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let invariants = vertex_invariants(g);
    let mut targets = invariants.clone();
    targets.sort_unstable_by(|a, b| b.cmp(a));

    let mut search = Search {
        n,
        masks: &masks,
        invariants: &invariants,
        targets: &targets,
        order: Vec::with_capacity(n),
        cols: vec![0; n],
        best_cols: Vec::new(),
        best_order: Vec::new(),
    };
    search.descend(0, 0);

    let mut bits = 0u128;
    for j in 1..n {
        bits = bits << j | u128::from(search.best_cols[j]);
    }
    let key = CanonicalKey { n: n as u8, bits };
    Ok((key, search.best_order))
}

fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (g.degree(v), nd)
        })
        .collect()
}

struct Search<'a> {
    n: usize,
    masks: &'a [u32],
    invariants: &'a [(usize, Vec<usize>)],
    targets: &'a [(usize, Vec<usize>)],
    order: Vec<usize>,
    /// `cols[j]` holds adjacency of position `j` to positions `0..j`, position 0 as the high bit.
    cols: Vec<u32>,
    best_cols: Vec<u32>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn prefix_cmp(&self, depth: usize) -> Ordering {
        if self.best_cols.is_empty() {
            return Ordering::Less;
        }
        self.cols[..=depth].cmp(&self.best_cols[..=depth])
    }

    fn descend(&mut self, depth: usize, used: u32) {
        if depth == self.n {
            if self.best_cols.is_empty() || self.cols < self.best_cols {
                self.best_cols = self.cols.clone();
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.invariants[v] != self.targets[depth] {
                continue;
            }
            let mut col = 0u32;
            for &w in &self.order {
                col = col << 1 | (self.masks[v] >> w & 1);
            }
            self.cols[depth] = col;
            if self.prefix_cmp(depth) == Ordering::Greater {
                continue;
            }
            self.order.push(v);
            self.descend(depth + 1, used | 1 << v);
            self.order.pop();
        }
    }
}

/// Isomorphism test. Uses canonical keys up to the default cap and a direct
/// backtracking search beyond it.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return false;
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }
    if g1.n() <= DEFAULT_CANONICAL_CAP {
        if let (Ok(a), Ok(b)) = (canonical_form(g1), canonical_form(g2)) {
            return a == b;
        }
    }
    find_isomorphism(g1, g2).is_some()
}

/// Backtracking search for a bijection `map` with `map[v]` in `g2` for `v` in `g1`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.n();
    if n != g2.n() || g1.m() != g2.m() {
        return None;
    }
    let inv1 = vertex_invariants(g1);
    let inv2 = vertex_invariants(g2);
    // Most constrained vertices first: high degree.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g1.degree(b).cmp(&g1.degree(a)).then(a.cmp(&b)));
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        order: &[usize],
        g1: &Graph,
        g2: &Graph,
        inv1: &[(usize, Vec<usize>)],
        inv2: &[(usize, Vec<usize>)],
        map: &mut [usize],
        taken: &mut [bool],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        for w in 0..g2.n() {
            if taken[w] || inv1[v] != inv2[w] {
                continue;
            }
            let consistent = order[..idx]
                .iter()
                .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            taken[w] = true;
            if go(idx + 1, order, g1, g2, inv1, inv2, map, taken) {
                return true;
            }
            taken[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    go(0, &order, g1, g2, &inv1, &inv2, &mut map, &mut taken).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Minimal bit string over every permutation, without any pruning.
    fn brute_force_min_string(g: &Graph) -> String {
        all_permutations(g.n())
            .into_iter()
            .map(|perm| {
                let h = g.permute(&perm);
                let mut s = String::new();
                for j in 1..h.n() {
                    for i in 0..j {
                        s.push(if h.has_edge(i, j) { '1' } else { '0' });
                    }
                }
                s
            })
            .min()
            .unwrap()
    }

    #[test]
    fn relabelled_cycle_has_same_key() {
        let c4 = Graph::cycle(4);
        let a = canonical_form(&c4.permute(&[1, 0, 2, 3])).unwrap();
        let b = canonical_form(&c4.permute(&[3, 2, 0, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, canonical_form(&c4).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        assert_ne!(
            canonical_form(&Graph::path(4)).unwrap(),
            canonical_form(&Graph::star(4)).unwrap()
        );
        assert!(!is_isomorphic(&Graph::star(4), &Graph::path(4)));
    }

    #[test]
    fn connected_graphs_on_four_vertices_have_six_keys() {
        // Oracle: group all labelled connected graphs on 4 vertices by the
        // unpruned minimal string over all 24 permutations.
        let pairs: Vec<(usize, usize)> = (1..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut oracle = std::collections::BTreeSet::new();
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&t| mask >> t & 1 == 1)
                .map(|t| pairs[t])
                .collect();
            let g = Graph::new(4, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            oracle.insert(brute_force_min_string(&g));
            keys.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(oracle.len(), 6);
        assert_eq!(keys.len(), 6);
    }

    #[test]
    fn key_round_trips_to_isomorphic_graph() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let key = canonical_form(&g).unwrap();
        let rep = key.to_graph();
        assert!(find_isomorphism(&g, &rep).is_some());
        assert_eq!(canonical_form(&rep).unwrap(), key);
        assert_eq!(key.bit_string().len(), 15);
    }

    #[test]
    fn cap_is_enforced() {
        let err = canonical_form(&Graph::path(11)).unwrap_err();
        assert!(matches!(
            err,
            Error::TooLargeForCanonical { n: 11, cap: 10 }
        ));
        assert!(canonical_form_with_cap(&Graph::path(11), 12).is_ok());
    }

    #[test]
    fn large_graphs_fall_back_to_search() {
        let a = Graph::cycle(12);
        let perm: Vec<usize> = (0..12).map(|v| (v * 5) % 12).collect();
        assert!(is_isomorphic(&a, &a.permute(&perm)));
        assert!(!is_isomorphic(
            &a,
            &Graph::cycle(6).disjoint_union(&Graph::cycle(6))
        ));
    }

    #[test]
    fn labeling_realises_key() {
        let g = Graph::new(5, &[(0, 4), (1, 4), (2, 4), (2, 3)]).unwrap();
        let (key, order) = canonical_labeling(&g, DEFAULT_CANONICAL_CAP).unwrap();
        let mut position = vec![0; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            position[v] = pos;
        }
        assert_eq!(g.permute(&position), key.to_graph());
    }
}
