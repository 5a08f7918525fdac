use facecycle::complex::{Cycle, EdgeSet, Graph};
use facecycle::cyclespace::{
    bipartite_via_2faces, cycle_space_dimension, is_bipartite, is_even, odd_facial_cycle,
    random_even_subgraph, split_into_cycles, xor, Bipartiteness, EvenSubgraph, FacialBasis,
};
use facecycle::{families, Polytope};
use proptest::prelude::*;

fn poly(points: Vec<facecycle::Point>) -> Polytope {
    Polytope::from_points(points).unwrap()
}

/// Cycle-space dimension counted independently: edges minus spanning-forest edges,
/// with components found by union-find.
fn forest_chords(g: &Graph) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut tree = 0;
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            tree += 1;
        }
    }
    g.edge_count() - tree
}

#[test]
fn facial_basis_ranks() {
    let cases = [
        (poly(families::cube(3)), 6, 5),
        (poly(families::simplex(3)), 4, 3),
        (poly(families::cube(4)), 24, 17),
        (poly(families::simplex(5)), 20, 10),
    ];
    for (p, rows, rank) in cases {
        let b = FacialBasis::new(&p).unwrap();
        assert_eq!(b.rows().len(), rows);
        assert_eq!(b.rank(), rank);
        assert_eq!(cycle_space_dimension(p.graph()), rank);
        assert_eq!(forest_chords(p.graph()), rank);
    }
}

#[test]
fn all_facial_cycles_cancel_in_dimension_three() {
    for points in [
        families::simplex(3),
        families::cube(3),
        families::cross_polytope(3),
        families::prism(6),
        families::random_sphere(3, 11, 4).unwrap(),
    ] {
        let p = poly(points);
        let mut acc = EdgeSet::empty(p.graph());
        for c in p.facial_cycles() {
            acc.xor_assign(c.edge_set()).unwrap();
        }
        assert!(acc.is_empty());
    }
}

#[test]
fn octahedron_opposite_triangles_split_apart() {
    let p = poly(families::cross_polytope(3));
    let tris = p.two_faces();
    let (a, b) = (0..tris.len())
        .flat_map(|a| (a + 1..tris.len()).map(move |b| (a, b)))
        .find(|&(a, b)| tris[a].iter().all(|v| !tris[b].contains(v)))
        .unwrap();
    let union = xor(p.facial_cycles()[a].edge_set(), p.facial_cycles()[b].edge_set()).unwrap();
    let cycles = split_into_cycles(p.graph(), &EvenSubgraph::new(p.graph(), union).unwrap()).unwrap();
    let mut got: Vec<&[usize]> = cycles.iter().map(Cycle::vertices).collect();
    got.sort();
    let mut want = vec![p.facial_cycles()[a].vertices(), p.facial_cycles()[b].vertices()];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn adjacent_squares_make_a_hexagon() {
    let p = poly(families::cube(3));
    let c = p.facial_cycles();
    let six = xor(c[0].edge_set(), c[1].edge_set()).unwrap();
    assert!(is_even(p.graph(), &six));
    if c[0].edge_set().intersection(c[1].edge_set()).unwrap().count() == 1 {
        assert_eq!(Cycle::from_edge_set(p.graph(), &six).unwrap().len(), 6);
    }
    let b = FacialBasis::new(&p).unwrap();
    let d = b.oracle_decompose(&EvenSubgraph::new(p.graph(), six.clone()).unwrap()).unwrap().unwrap();
    assert_eq!(d.reconstruct(&p).unwrap(), six);
}

#[test]
fn bipartiteness_matches_face_parity() {
    let cases = [
        (poly(families::cube(3)), true),
        (poly(families::cube(4)), true),
        (poly(families::prism(6)), true),
        (poly(families::prism(5)), false),
        (poly(families::simplex(3)), false),
        (poly(families::cross_polytope(3)), false),
        (poly(families::cross_polytope(4)), false),
    ];
    for (p, expected) in cases {
        let verdict = is_bipartite(p.graph());
        assert_eq!(verdict.is_bipartite(), expected);
        assert_eq!(bipartite_via_2faces(&p), expected);
        match verdict {
            Bipartiteness::Bipartite(colour) => {
                for &(u, v) in p.graph().edges() {
                    assert_ne!(colour[u], colour[v]);
                }
                assert!(odd_facial_cycle(&p).is_none());
            }
            Bipartiteness::OddCycle(c) => {
                assert_eq!(c.len() % 2, 1);
                let id = odd_facial_cycle(&p).unwrap();
                assert_eq!(p.facial_cycles()[id].len() % 2, 1);
            }
        }
    }
}

#[test]
fn oracle_covers_random_even_subgraphs() {
    for points in [families::cyclic(8, 4), families::cross_polytope(4), families::simplex(6)] {
        let p = poly(points);
        let b = FacialBasis::new(&p).unwrap();
        for s in 0..20 {
            let t = random_even_subgraph(p.graph(), None, s);
            let d = b.oracle_decompose(&t).unwrap().expect("even subgraphs are in the span");
            assert_eq!(d.reconstruct(&p).unwrap(), *t.edge_set());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn even_subgraphs_are_closed_under_xor(a in any::<u64>(), b in any::<u64>()) {
        let p = poly(families::cube(3));
        let x = random_even_subgraph(p.graph(), None, a);
        let y = random_even_subgraph(p.graph(), None, b);
        let z = xor(x.edge_set(), y.edge_set()).unwrap();
        prop_assert!(is_even(p.graph(), &z));
        let parts = split_into_cycles(p.graph(), &EvenSubgraph::new(p.graph(), z.clone()).unwrap()).unwrap();
        let mut union = EdgeSet::empty(p.graph());
        for c in &parts {
            prop_assert_eq!(union.intersection(c.edge_set()).unwrap().count(), 0);
            union.xor_assign(c.edge_set()).unwrap();
        }
        prop_assert_eq!(union, z);
    }
}
