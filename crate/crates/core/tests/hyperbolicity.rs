use lgindex::harness::all_graph_keys;
use lgindex::hyperbolicity::{hyperbolicity_upper_bound, HyperbolicityOptions};
use lgindex::{hyperbolicity_constant, hyperbolicity_constant_with, Graph, Rational};

fn quarter(n: i64) -> Rational {
    Rational::new(n.into(), 4.into())
}

#[test]
fn coarse_and_fine_lattices_agree_up_to_six_vertices() {
    let coarse = HyperbolicityOptions {
        granularity: 4,
        ..HyperbolicityOptions::default()
    };
    let mut graphs = 0;
    for n in 1..=6 {
        for key in all_graph_keys(n).unwrap() {
            let g = key.to_graph();
            let fine = hyperbolicity_constant(&g).unwrap().delta;
            assert_eq!(hyperbolicity_constant_with(&g, coarse).unwrap().delta, fine, "{key}");
            assert!(fine <= hyperbolicity_upper_bound(&g));
            graphs += 1;
        }
    }
    assert_eq!(graphs, 1 + 2 + 4 + 11 + 34 + 156);
}

#[test]
fn only_trees_have_zero_delta_among_connected_graphs() {
    for key in all_graph_keys(7).unwrap() {
        let g = key.to_graph();
        if !g.is_connected() {
            continue;
        }
        let zero = hyperbolicity_constant(&g).unwrap().delta == quarter(0);
        assert_eq!(zero, g.is_tree(), "{key}");
    }
}

#[test]
fn small_named_graphs() {
    let cases = [
        (Graph::cycle(3), 3),
        (Graph::cycle(4), 4),
        (Graph::cycle(5), 5),
        (Graph::cycle(6), 6),
        (Graph::complete(4), 4),
        (Graph::complete(5), 4),
        (Graph::complete_bipartite(2, 3), 4),
        (Graph::path(4), 0),
        (Graph::star(4), 0),
    ];
    for (g, q) in cases {
        assert_eq!(hyperbolicity_constant(&g).unwrap().delta, quarter(q), "{g:?}");
    }
    let diamond = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(hyperbolicity_constant(&diamond).unwrap().delta, quarter(4));
    let paw = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    assert_eq!(hyperbolicity_constant(&paw).unwrap().delta, quarter(3));
}
