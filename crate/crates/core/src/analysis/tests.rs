use proptest::prelude::*;

use super::*;
use crate::epg::EpgBundle;
use crate::group::{FiniteGroup, Limits};
use crate::lattice::CyclicLattice;

fn lim() -> Limits {
    Limits::default()
}

fn s3() -> FiniteGroup {
    FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &lim()).unwrap()
}

fn elementary_2(rank: usize) -> FiniteGroup {
    let z2 = FiniteGroup::cyclic(2, &lim()).unwrap();
    let parts = vec![&z2; rank];
    FiniteGroup::direct_product(&parts, &lim()).unwrap()
}

#[test]
fn components() {
    let z6 = FiniteGroup::cyclic(6, &lim()).unwrap();
    assert_eq!(connected_components(EpgBundle::new(&z6).epg()).len(), 1);

    let g = s3();
    let b = EpgBundle::new(&g);
    let comps = connected_components(b.deleted());
    assert_eq!(comps.len(), 4);
    let pair: Vec<usize> = comps.iter().find(|c| c.len() == 2).unwrap().iter().map(|&v| b.deleted_map()[v]).collect();
    assert!(pair.iter().all(|&x| g.orders()[x] == 3));

    let q8 = FiniteGroup::dicyclic(2, &lim()).unwrap();
    assert_eq!(connected_components(EpgBundle::new(&q8).deleted()).len(), 1);

    assert!(connected_components(&SimpleGraph::new(0)).is_empty());
    assert!(is_connected(&SimpleGraph::new(0)));
}

#[test]
fn completeness() {
    let z7 = FiniteGroup::cyclic(7, &lim()).unwrap();
    assert!(is_complete(EpgBundle::new(&z7).epg()));
    let g = s3();
    assert!(!is_complete(EpgBundle::new(&g).epg()));
    assert!(is_complete(&SimpleGraph::new(1)));
}

#[test]
fn cycles_trees_stars() {
    let v8 = elementary_2(3);
    let b = EpgBundle::new(&v8);
    assert!(is_tree(b.epg()) && is_star(b.epg()) && is_bipartite(b.epg()));

    let z3 = FiniteGroup::cyclic(3, &lim()).unwrap();
    let k3 = EpgBundle::new(&z3);
    assert!(has_cycle(k3.epg()));
    assert!(!is_bipartite(k3.epg()));
    let odd = two_coloring(k3.epg()).unwrap_err();
    assert_eq!(odd.len(), 3);

    let g = s3();
    let b = EpgBundle::new(&g);
    assert!(is_forest(b.deleted()));
    assert!(!is_tree(b.deleted()));

    let empty = SimpleGraph::new(0);
    assert!(is_forest(&empty) && !is_tree(&empty) && !is_star(&empty));
    let single = SimpleGraph::new(1);
    assert!(is_star(&single) && is_tree(&single));
    assert!(is_star(&SimpleGraph::complete(2)));
    // a path on four vertices is a tree but not a star
    let p4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
    assert!(is_tree(&p4) && !is_star(&p4));
}

#[test]
fn eulerian() {
    let z9 = FiniteGroup::cyclic(9, &lim()).unwrap();
    assert!(is_eulerian(EpgBundle::new(&z9).epg()));
    let z2 = FiniteGroup::cyclic(2, &lim()).unwrap();
    assert!(!is_eulerian(EpgBundle::new(&z2).epg()));
    let g = s3();
    let b = EpgBundle::new(&g);
    assert!(!is_eulerian(b.epg()));
    assert_eq!(b.epg().degree(0), 5);
    assert!(is_eulerian(&SimpleGraph::new(0)));
    assert!(is_eulerian(&SimpleGraph::new(1)));
    // even degrees but disconnected
    let two_triangles = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
    assert!(!is_eulerian(&two_triangles));
}

/// pi_e by brute-force powering, independent of the lattice.
fn brute_spectrum(g: &FiniteGroup) -> Vec<u64> {
    let mut out: Vec<u64> = (0..g.order())
        .map(|x| {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = g.mul(y, x);
                k += 1;
            }
            k
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn planarity_examples() {
    let z4 = FiniteGroup::cyclic(4, &lim()).unwrap();
    assert!(is_planar(EpgBundle::new(&z4).epg()));
    let z5 = FiniteGroup::cyclic(5, &lim()).unwrap();
    assert!(!is_planar(EpgBundle::new(&z5).epg()));

    let s4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], &lim()).unwrap();
    assert_eq!(brute_spectrum(&s4), vec![1, 2, 3, 4]);
    assert!(is_planar(EpgBundle::new(&s4).epg()));

    // D10 passes the edge-count bound, so the LR test decides: it contains K5.
    let d10 = FiniteGroup::dihedral(5, &lim()).unwrap();
    let b = EpgBundle::new(&d10);
    assert!(b.epg().edge_count() <= 3 * 10 - 6);
    assert!(!is_planar(b.epg()));
}

#[test]
fn cone_vertex_examples() {
    let q8 = FiniteGroup::dicyclic(2, &lim()).unwrap();
    let cones = cone_vertices(EpgBundle::new(&q8).epg());
    assert_eq!(cones.len(), 1);
    assert_eq!(q8.orders()[cones[0]], 2);

    let z2 = FiniteGroup::cyclic(2, &lim()).unwrap();
    let z3 = FiniteGroup::cyclic(3, &lim()).unwrap();
    let g = FiniteGroup::direct_product(&[&z2, &z2, &z3], &lim()).unwrap();
    let cones = cone_vertices(EpgBundle::new(&g).epg());
    // (0, 0, 1) sits at index 1
    assert!(cones.contains(&1));
    assert!(cones.iter().all(|&v| g.orders()[v] == 3));

    let a5 = FiniteGroup::from_permutations(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]], &lim()).unwrap();
    assert!(cone_vertices(EpgBundle::new(&a5).epg()).is_empty());

    let z1 = FiniteGroup::cyclic(1, &lim()).unwrap();
    assert!(cone_vertices(EpgBundle::new(&z1).epg()).is_empty());
}

#[test]
fn degree_examples() {
    for n in 1..10 {
        let z = FiniteGroup::cyclic(n, &lim()).unwrap();
        assert!(degree_sequence(EpgBundle::new(&z).epg()).iter().all(|&d| d == n - 1));
    }
    assert_eq!(degree_sequence(EpgBundle::new(&elementary_2(2)).epg()), vec![3, 1, 1, 1]);
    for g in [FiniteGroup::cyclic(15, &lim()).unwrap(), FiniteGroup::metacyclic(7, 3, 2, &lim()).unwrap()] {
        assert!(degree_sequence(EpgBundle::new(&g).epg()).iter().all(|d| d % 2 == 0));
    }
}

#[test]
fn degree_decomposition_matches_bit_count() {
    use crate::arith::totient;
    for g in [s3(), FiniteGroup::dicyclic(3, &lim()).unwrap(), FiniteGroup::dihedral(6, &lim()).unwrap()] {
        let l = CyclicLattice::build(&g);
        let b = EpgBundle::new(&g);
        for a in 1..g.order() {
            let own = l.class_of(a);
            let joined: u64 = (0..l.len())
                .filter(|&c| c != own && c != l.class_of(0))
                .filter(|&c| b.epg().has_edge(a, l.generators(c)[0]))
                .map(|c| totient(l.subgroup(c).len() as u64))
                .sum();
            let predicted = totient(g.orders()[a]) - 1 + joined + 1;
            assert_eq!(predicted as usize, b.epg().degree(a));
        }
    }
}

#[test]
fn report_fields() {
    let g = s3();
    let b = EpgBundle::new(&g);
    let r = PropertyReport::analyze(b.deleted(), false);
    assert!(!r.connected);
    assert_eq!(r.components.len(), 4);
    assert!(r.forest && !r.tree && r.bipartite);
    assert!(r.cone_vertices.is_empty());
    assert!(r.odd_degree_vertex.is_some());
    let json = serde_json::to_value(&r).unwrap();
    for p in Property::ALL {
        assert!(json.get(p.name()).is_some(), "{p}");
    }
    let sel = PropertyReport::analyze(b.epg(), true).select(&[Property::Eulerian]);
    assert_eq!(serde_json::to_string(&sel).unwrap(), r#"{"eulerian":false}"#);
    assert!("hamiltonian".parse::<Property>().is_err());
    assert_eq!("cone_vertices".parse::<Property>().unwrap(), Property::ConeVertices);

    let z3 = FiniteGroup::cyclic(3, &lim()).unwrap();
    let r = PropertyReport::analyze(EpgBundle::new(&z3).epg(), true);
    assert_eq!(r.odd_cycle.as_ref().map(Vec::len), Some(3));
    assert_eq!(r.cone_vertices, vec![1, 2]);
}

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (0usize..14).prop_flat_map(|n| {
        let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn cycle_iff_edges_exceed_forest_bound(g in arb_graph()) {
        let comps = connected_components(&g).len();
        prop_assert_eq!(has_cycle(&g), g.edge_count() + comps > g.vertex_count());
        if let Some(c) = find_cycle(&g) {
            prop_assert!(c.len() >= 3);
            for i in 0..c.len() {
                prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn two_coloring_is_proper_or_odd_cycle(g in arb_graph()) {
        match two_coloring(&g) {
            Ok(color) => {
                for (u, v) in g.edges() {
                    prop_assert_ne!(color[u], color[v]);
                }
            }
            Err(cycle) => {
                prop_assert_eq!(cycle.len() % 2, 1);
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                prop_assert_eq!(sorted.len(), cycle.len());
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn components_partition_vertices(g in arb_graph()) {
        let comps = connected_components(&g);
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.vertex_count()).collect::<Vec<_>>());
        for (u, v) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(&u) && c.contains(&v)));
        }
    }

    #[test]
    fn planar_graphs_stay_planar_under_edge_deletion(g in arb_graph()) {
        if is_planar(&g) {
            if let Some((u, v)) = g.edges().next() {
                let h = SimpleGraph::from_edges(g.vertex_count(), g.edges().filter(|&e| e != (u, v)));
                prop_assert!(is_planar(&h));
            }
        }
    }
}
