//! The enhanced power graph: `x ~ y` iff `x` and `y` lie in a common cyclic
//! subgroup.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexLabel};
use crate::group::FiniteGroup;
use crate::lattice::CyclicLattice;

/// A group together with its cyclic lattice, its enhanced power graph, and
/// the deleted graph (identity removed).
#[derive(Debug, Clone)]
pub struct EpgBundle<'g> {
    group: &'g FiniteGroup,
    lattice: CyclicLattice,
    epg: SimpleGraph,
    deleted: SimpleGraph,
    /// `deleted_map[v]` is the element at vertex `v` of the deleted graph.
    deleted_map: Vec<usize>,
}

impl<'g> EpgBundle<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        let lattice = CyclicLattice::build(group);
        let epg = build_epg(group, &lattice);
        let (deleted, deleted_map) = epg.without_vertex(0);
        EpgBundle { group, lattice, epg, deleted, deleted_map }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn lattice(&self) -> &CyclicLattice {
        &self.lattice
    }

    pub fn epg(&self) -> &SimpleGraph {
        &self.epg
    }

    pub fn deleted(&self) -> &SimpleGraph {
        &self.deleted
    }

    pub fn deleted_map(&self) -> &[usize] {
        &self.deleted_map
    }

    /// Vertex of the deleted graph holding element `x`, if `x` is not the
    /// identity.
    pub fn deleted_vertex(&self, x: usize) -> Option<usize> {
        x.checked_sub(1)
    }
}

fn labels(group: &FiniteGroup) -> Vec<VertexLabel> {
    group.orders().iter().enumerate().map(|(element, &order)| VertexLabel { element, order }).collect()
}

/// Union of cliques over the cyclic subgroups in `lattice`. Every cyclic
/// subgroup sits inside a maximal one, so the maximal subgroups suffice.
pub fn build_epg(group: &FiniteGroup, lattice: &CyclicLattice) -> SimpleGraph {
    let mut g = SimpleGraph::new(group.order()).with_labels(labels(group));
    for c in lattice.maximal_subgroups() {
        g.add_clique(lattice.subgroup(c));
    }
    g
}

/// Identity-deleted copy of a bundle's graph.
pub fn build_deleted(bundle: &EpgBundle<'_>) -> SimpleGraph {
    bundle.epg().without_vertex(0).0
}

/// Brute-force adjacency: some `z` has both `x` and `y` among its powers.
pub fn adjacent_oracle(group: &FiniteGroup, x: usize, y: usize) -> Result<bool> {
    group.check_index(x)?;
    group.check_index(y)?;
    if x == y {
        return Err(Error::Domain("adjacency oracle needs two distinct elements".into()));
    }
    Ok((0..group.order()).any(|z| {
        let powers = group.cyclic_subgroup(z);
        powers.contains(&x) && powers.contains(&y)
    }))
}
