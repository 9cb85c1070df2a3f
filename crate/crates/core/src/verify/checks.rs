//! Filters and evaluations for each theorem check.

use serde_json::{json, Value};

use super::Evaluation;
use crate::analysis::{
    cone_vertices, connected_components, has_cycle, is_bipartite, is_complete, is_eulerian, is_forest, is_planar,
    is_star, is_tree,
};
use crate::arith::{gcd, prime_power_base};
use crate::epg::EpgBundle;
use crate::group::FiniteGroup;
use crate::spec::{Family, GroupSpec};

pub(super) fn any_group(_: &GroupSpec, _: &FiniteGroup) -> bool {
    true
}

pub(super) fn abelian(_: &GroupSpec, g: &FiniteGroup) -> bool {
    g.is_abelian()
}

pub(super) fn p_group(_: &GroupSpec, g: &FiniteGroup) -> bool {
    g.is_p_group()
}

pub(super) fn nonabelian_p_group(_: &GroupSpec, g: &FiniteGroup) -> bool {
    g.is_p_group() && !g.is_abelian()
}

/// Simple and non-abelian. Prime cyclic groups are simple too, but their
/// graphs are complete and every non-identity vertex is a cone.
pub(super) fn nonabelian_simple(_: &GroupSpec, g: &FiniteGroup) -> bool {
    g.order() > 1 && !g.is_abelian() && g.is_simple().unwrap_or(false)
}

pub(super) fn center_two_primes(_: &GroupSpec, g: &FiniteGroup) -> bool {
    g.center_prime_divisors().len() >= 2
}

/// `|pi(G)| >= 2` and `Z(G)` a nontrivial p-group.
pub(super) fn center_p_group(_: &GroupSpec, g: &FiniteGroup) -> bool {
    g.prime_divisors().len() >= 2 && prime_power_base(g.center().len() as u64).is_some()
}

/// `G x Z_n` with `n >= 2` coprime to `|G|`, written as a two-part product
/// whose last part is cyclic.
pub(super) fn coprime_cyclic_extension(spec: &GroupSpec, g: &FiniteGroup) -> bool {
    match &spec.family {
        Family::DirectProduct(parts) if parts.len() == 2 => match parts[1] {
            Family::Cyclic(n) if n >= 2 => gcd((g.order() / n) as u64, n as u64) == 1,
            _ => false,
        },
        _ => false,
    }
}

fn iff(graph: bool, group: bool, witness: Value) -> Evaluation {
    Evaluation { graph_side: graph.into(), group_side: group.into(), holds: graph == group, witness }
}

/// Graph side must hold whenever the group side does.
fn implies(graph: bool, group: bool, witness: Value) -> Evaluation {
    Evaluation { graph_side: graph.into(), group_side: group.into(), holds: graph || !group, witness }
}

fn element_orders_of(g: &FiniteGroup, xs: &[usize]) -> Value {
    xs.iter().map(|&x| json!({"element": x, "order": g.orders()[x]})).collect()
}

/// Generators of distinct cyclic subgroups of equal order are never adjacent.
pub(super) fn gen_classes_apart(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let l = b.lattice();
    let mut pairs = 0usize;
    for c in 0..l.len() {
        for d in c + 1..l.len() {
            if l.subgroup(c).len() != l.subgroup(d).len() {
                continue;
            }
            pairs += 1;
            for &x in l.generators(c) {
                for &y in l.generators(d) {
                    if b.epg().has_edge(x, y) {
                        let witness = json!({"edge": [x, y], "order": b.group().orders()[x]});
                        return Evaluation { graph_side: false.into(), group_side: true.into(), holds: false, witness };
                    }
                }
            }
        }
    }
    Evaluation { graph_side: true.into(), group_side: true.into(), holds: true, witness: json!({"class_pairs": pairs}) }
}

pub(super) fn cycle_iff_order_three(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let g = b.group();
    let big = (0..g.order()).find(|&x| g.orders()[x] >= 3);
    iff(has_cycle(b.epg()), big.is_some(), json!(big.map(|x| element_orders_of(g, &[x]))))
}

pub(super) fn bipartite_tree_star(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let g = b.epg();
    let (bip, tree, star) = (is_bipartite(g), is_tree(g), is_star(g));
    let group = b.group().is_elementary_abelian_2();
    Evaluation {
        graph_side: json!({"bipartite": bip, "tree": tree, "star": star}),
        group_side: group.into(),
        holds: bip == group && tree == group && star == group,
        witness: json!(b.group().orders().iter().position(|&o| o > 2)),
    }
}

pub(super) fn complete_iff_cyclic(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let g = b.group();
    let generator = (0..g.order()).find(|&x| g.orders()[x] as usize == g.order());
    iff(is_complete(b.epg()), g.is_cyclic(), json!(generator))
}

/// The element `(e, 1)` of `G x Z_n` is index 1 and must be a cone vertex.
pub(super) fn coprime_extension_cone(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let cones = cone_vertices(b.epg());
    implies(cones.contains(&1), true, json!({"element": 1, "cone_vertices": cones}))
}

pub(super) fn abelian_cone_iff_cyclic_sylow(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let cones = cone_vertices(b.epg());
    let shape = b.group().abelian_shape().expect("filter admits abelian groups only");
    iff(!cones.is_empty(), shape.has_cyclic_sylow(), json!({"shape": shape.prime_powers(), "cone_vertices": cones}))
}

pub(super) fn p_group_cone_iff_quaternion(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let cones = cone_vertices(b.epg());
    iff(!cones.is_empty(), b.group().is_generalized_quaternion(), json!({"cone_vertices": cones}))
}

pub(super) fn simple_has_no_cone(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let cones = cone_vertices(b.epg());
    implies(cones.is_empty(), true, json!({"cone_vertices": cones}))
}

pub(super) fn planar_iff_small_orders(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let spectrum = b.lattice().pi_e();
    let small = spectrum.iter().all(|&o| o <= 4);
    iff(is_planar(b.epg()), small, json!({"pi_e": spectrum}))
}

/// Also asserts that every degree is even when the order is odd.
pub(super) fn eulerian_iff_odd(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let odd = b.group().order() % 2 == 1;
    let eulerian = is_eulerian(b.epg());
    let odd_degree = (0..b.epg().vertex_count()).find(|&v| b.epg().degree(v) % 2 == 1);
    let parity_ok = !odd || odd_degree.is_none();
    Evaluation {
        graph_side: eulerian.into(),
        group_side: odd.into(),
        holds: eulerian == odd && parity_ok,
        witness: json!({"odd_degree_vertex": odd_degree}),
    }
}

pub(super) fn connected_iff_unique_minimal(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let comps = connected_components(b.deleted());
    let unique = b.group().has_unique_minimal_subgroup().expect("filter admits nontrivial groups only");
    iff(comps.len() <= 1, unique, json!({"components": comps.len()}))
}

pub(super) fn deleted_connected(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let comps = connected_components(b.deleted());
    implies(comps.len() <= 1, true, json!({"components": comps.len()}))
}

/// With `Z(G)` a nontrivial p-group: the deleted graph is connected iff every
/// non-central element of order `p` is adjacent to an element whose order is
/// not a power of `p`.
pub(super) fn connected_iff_escape(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let g = b.group();
    let p = prime_power_base(g.center().len() as u64).expect("filter admits p-group centers only");
    let p_element = |y: usize| g.orders()[y] == 1 || prime_power_base(g.orders()[y]) == Some(p);
    let stuck = (1..g.order()).find(|&x| {
        g.orders()[x] == p && g.center().binary_search(&x).is_err() && !b.epg().neighbors(x).any(|y| !p_element(y))
    });
    let connected = connected_components(b.deleted()).len() <= 1;
    iff(connected, stuck.is_none(), json!({"p": p, "isolated_order_p_element": stuck}))
}

/// Also asserts that the deleted graph is bipartite exactly when it is a
/// forest.
pub(super) fn forest_iff_orders_below_four(_: &GroupSpec, b: &EpgBundle<'_>) -> Evaluation {
    let g = b.group();
    let forest = is_forest(b.deleted());
    let bipartite = is_bipartite(b.deleted());
    let big = (0..g.order()).find(|&x| g.orders()[x] >= 4);
    Evaluation {
        graph_side: forest.into(),
        group_side: big.is_none().into(),
        holds: forest == big.is_none() && bipartite == forest,
        witness: json!({"element_of_order_at_least_4": big, "bipartite": bipartite}),
    }
}
