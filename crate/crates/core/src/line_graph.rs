//! Line graphs.

use crate::error::{Error, Result};
use crate::graph::{DegreeStats, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphResult {
    pub line_graph: Graph,
    /// `vertex_map[i]` is the edge of the source graph represented by vertex `i`.
    pub vertex_map: Vec<(usize, usize)>,
    pub stats: DegreeStats,
}

fn require_non_trivial(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::TrivialComponent {
            component: Vec::new(),
            edges: 0,
        });
    }
    match g.trivial_component() {
        Some((component, edges)) => Err(Error::TrivialComponent { component, edges }),
        None => Ok(()),
    }
}

/// Builds `L(G)`. Vertex `i` of the result is the `i`-th edge of `g` in sorted
/// order; two vertices are adjacent when their edges share an endpoint.
///
/// Every component of `g` must have at least two edges.
pub fn line_graph(g: &Graph) -> Result<LineGraphResult> {
    require_non_trivial(g)?;
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbor edge exists"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let line_graph = Graph::new(g.m(), &edges)?;
    let stats = line_graph.degree_stats();
    Ok(LineGraphResult {
        line_graph,
        vertex_map: g.edges().to_vec(),
        stats,
    })
}

/// Number of edges of `L(G)`, counted on the constructed line graph.
pub fn line_edge_count(g: &Graph) -> Result<usize> {
    line_graph(g).map(|r| r.line_graph.m())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn cycle_is_its_own_line_graph() {
        let l = line_graph(&Graph::cycle(5)).unwrap();
        assert!(is_isomorphic(&l.line_graph, &Graph::cycle(5)));
    }

    #[test]
    fn path_shrinks() {
        let l = line_graph(&Graph::path(5)).unwrap();
        assert!(is_isomorphic(&l.line_graph, &Graph::path(4)));
    }

    #[test]
    fn star_becomes_triangle() {
        let l = line_graph(&Graph::star(4)).unwrap();
        assert_eq!(l.line_graph, Graph::complete(3));
        assert_eq!(l.vertex_map, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn edge_counts() {
        assert_eq!(line_edge_count(&Graph::cycle(4)).unwrap(), 4);
        assert_eq!(line_edge_count(&Graph::star(4)).unwrap(), 3);
        assert_eq!(line_edge_count(&Graph::path(3)).unwrap(), 1);
    }

    #[test]
    fn trivial_component_is_named() {
        let g = Graph::cycle(3).disjoint_union(&Graph::path(2));
        match line_graph(&g) {
            Err(Error::TrivialComponent { component, edges }) => {
                assert_eq!(component, vec![3, 4]);
                assert_eq!(edges, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(line_graph(&Graph::path(2)).is_err());
        assert!(line_graph(&Graph::empty(0)).is_err());
    }

    #[test]
    fn vertex_degrees_follow_endpoints() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let l = line_graph(&g).unwrap();
        for (i, &(u, v)) in l.vertex_map.iter().enumerate() {
            assert_eq!(l.line_graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
        assert_eq!(l.stats.n, g.m());
    }
}
