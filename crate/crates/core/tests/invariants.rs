//! Structural properties of enhanced power graphs, sampled over the roster.

use std::sync::OnceLock;

use epg_core::analysis::{cone_vertices, is_bipartite, is_complete, is_forest};
use epg_core::arith::totient;
use epg_core::verify::{roster_generate, RosterFamily};
use epg_core::{EpgBundle, FiniteGroup, GroupSpec, Limits};
use proptest::prelude::*;

fn roster() -> &'static [GroupSpec] {
    static ROSTER: OnceLock<Vec<GroupSpec>> = OnceLock::new();
    ROSTER.get_or_init(|| roster_generate(48, &RosterFamily::ALL).unwrap())
}

fn group(i: usize) -> FiniteGroup {
    FiniteGroup::from_spec(&roster()[i % roster().len()], &Limits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gen_classes_share_closed_neighborhoods(i in any::<usize>()) {
        let g = group(i);
        let b = EpgBundle::new(&g);
        let l = b.lattice();
        let total: u64 = (0..l.len()).map(|c| totient(l.subgroup(c).len() as u64)).sum();
        prop_assert_eq!(total, g.order() as u64);
        for x in 0..g.order() {
            let rep = l.generators(l.class_of(x))[0];
            prop_assert_eq!(b.epg().closed_neighborhood(x), b.epg().closed_neighborhood(rep));
            prop_assert_eq!(l.gen_class(x).len() as u64, totient(g.orders()[x]));
        }
    }

    #[test]
    fn powers_inherit_adjacency(i in any::<usize>(), x in any::<usize>(), y in any::<usize>()) {
        // x ~ y forces x^k ~ y for every k, since <x^k> lies in <x>
        let g = group(i);
        let b = EpgBundle::new(&g);
        let (x, y) = (x % g.order(), y % g.order());
        if x != y && b.epg().has_edge(x, y) {
            for k in 1..g.orders()[x] {
                let xk = g.pow(x, k);
                prop_assert!(xk == y || b.epg().has_edge(xk, y));
            }
        }
    }

    #[test]
    fn deleted_graph_is_the_induced_subgraph(i in any::<usize>()) {
        let g = group(i);
        let b = EpgBundle::new(&g);
        prop_assert_eq!(b.deleted().vertex_count(), g.order() - 1);
        prop_assert_eq!(b.deleted().edge_count() + g.order() - 1, b.epg().edge_count());
        for (u, v) in b.deleted().edges() {
            prop_assert!(b.epg().has_edge(b.deleted_map()[u], b.deleted_map()[v]));
        }
    }

    #[test]
    fn derived_verdicts_are_consistent(i in any::<usize>()) {
        let g = group(i);
        let b = EpgBundle::new(&g);
        // identity is universal
        prop_assert_eq!(b.epg().degree(0), g.order() - 1);
        // a cone vertex's cyclic subgroup meets every maximal cyclic subgroup
        for c in cone_vertices(b.epg()) {
            for m in b.lattice().maximal_subgroups() {
                prop_assert!(b.lattice().subgroup(m).contains(&c));
            }
        }
        prop_assert_eq!(is_complete(b.epg()), b.lattice().maximal_subgroups().count() == 1);
        prop_assert_eq!(is_bipartite(b.deleted()), is_forest(b.deleted()));
    }
}
