//! Graph properties referenced by the enhanced-power-graph theorems.
//!
//! Conventions on degenerate inputs: the empty graph is connected, a
//! forest, bipartite, complete and Eulerian, but not a tree or a star. A
//! single vertex is all of those, including a tree and a star.

mod planarity;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub use planarity::{is_planar, lr_planar};

/// Components as sorted vertex lists, ordered by their smallest vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    connected_components(g).len() <= 1
}

pub fn is_complete(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// A cycle as a vertex sequence, found as a DFS back edge.
pub fn find_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 new, 1 on stack, 2 done
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(root, g.neighbors(root).collect())];
        state[root] = 1;
        while let Some((u, pending)) = stack.last_mut() {
            let u = *u;
            match pending.pop() {
                Some(v) if v == parent[u] => {}
                Some(v) if state[v] == 1 => {
                    let mut cycle = vec![v];
                    let mut x = u;
                    while x != v {
                        cycle.push(x);
                        x = parent[x];
                    }
                    return Some(cycle);
                }
                Some(v) if state[v] == 0 => {
                    state[v] = 1;
                    parent[v] = u;
                    stack.push((v, g.neighbors(v).collect()));
                }
                Some(_) => {}
                None => {
                    state[u] = 2;
                    stack.pop();
                }
            }
        }
    }
    None
}

pub fn has_cycle(g: &SimpleGraph) -> bool {
    find_cycle(g).is_some()
}

pub fn is_forest(g: &SimpleGraph) -> bool {
    !has_cycle(g)
}

pub fn is_tree(g: &SimpleGraph) -> bool {
    g.vertex_count() >= 1 && is_forest(g) && is_connected(g)
}

/// A tree with a vertex adjacent to every other; `K_1` and `K_2` count.
pub fn is_star(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    is_tree(g) && (0..n).any(|u| g.degree(u) == n - 1)
}

/// A proper 2-colouring, or an odd cycle when none exists.
pub fn two_coloring(g: &SimpleGraph) -> std::result::Result<Vec<bool>, Vec<usize>> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are coloured");
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Err(odd_cycle(u, v, &parent, &depth)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

/// Closes the BFS-tree paths from `u` and `v` (same colour, adjacent) at
/// their lowest common ancestor.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    two_coloring(g).is_ok()
}

pub fn odd_degree_vertex(g: &SimpleGraph) -> Option<usize> {
    (0..g.vertex_count()).find(|&u| g.degree(u) % 2 == 1)
}

/// Connected with every degree even.
pub fn is_eulerian(g: &SimpleGraph) -> bool {
    is_connected(g) && odd_degree_vertex(g).is_none()
}

/// Non-identity vertices adjacent to every other vertex, where vertex 0 is
/// the identity.
pub fn cone_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    (1..n).filter(|&u| g.degree(u) == n - 1).collect()
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n).filter(|&u| g.degree(u) + 1 == n).collect()
}

pub fn degree_sequence(g: &SimpleGraph) -> Vec<usize> {
    g.degrees()
}

/// The property names a report exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Connected,
    Components,
    Complete,
    Cycle,
    Forest,
    Tree,
    Star,
    Bipartite,
    Eulerian,
    Planar,
    ConeVertices,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Connected,
        Property::Components,
        Property::Complete,
        Property::Cycle,
        Property::Forest,
        Property::Tree,
        Property::Star,
        Property::Bipartite,
        Property::Eulerian,
        Property::Planar,
        Property::ConeVertices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Connected => "connected",
            Property::Components => "components",
            Property::Complete => "complete",
            Property::Cycle => "cycle",
            Property::Forest => "forest",
            Property::Tree => "tree",
            Property::Star => "star",
            Property::Bipartite => "bipartite",
            Property::Eulerian => "eulerian",
            Property::Planar => "planar",
            Property::ConeVertices => "cone_vertices",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown property {s:?}")))
    }
}

/// Verdicts for one graph. Vertex-valued fields hold element indices (via
/// the graph's labels) so they read the same for a graph and its deleted
/// counterpart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub connected: bool,
    /// One representative (smallest element) per component.
    pub components: Vec<usize>,
    pub complete: bool,
    pub cycle: bool,
    pub forest: bool,
    pub tree: bool,
    pub star: bool,
    pub bipartite: bool,
    pub eulerian: bool,
    pub planar: bool,
    pub cone_vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_degree_vertex: Option<usize>,
}

impl PropertyReport {
    /// `has_identity` marks vertex 0 as the identity, which is then excluded
    /// from the cone vertices. Without it every universal vertex counts.
    pub fn analyze(g: &SimpleGraph, has_identity: bool) -> Self {
        let components = connected_components(g);
        let cycle = has_cycle(g);
        let connected = components.len() <= 1;
        let n = g.vertex_count();
        let tree = n >= 1 && !cycle && connected;
        let odd = two_coloring(g).err();
        let odd_degree = odd_degree_vertex(g);
        let cones = if has_identity { cone_vertices(g) } else { universal_vertices(g) };
        let element = |v: usize| g.element_of(v);
        PropertyReport {
            connected,
            components: components.iter().map(|c| element(c[0])).collect(),
            complete: is_complete(g),
            cycle,
            forest: !cycle,
            tree,
            star: tree && (0..n).any(|u| g.degree(u) + 1 == n),
            bipartite: odd.is_none(),
            eulerian: connected && odd_degree.is_none(),
            planar: is_planar(g),
            cone_vertices: cones.into_iter().map(element).collect(),
            odd_cycle: odd.map(|c| c.into_iter().map(element).collect()),
            odd_degree_vertex: odd_degree.map(element),
        }
    }

    pub fn value(&self, p: Property) -> Value {
        match p {
            Property::Connected => self.connected.into(),
            Property::Components => self.components.clone().into(),
            Property::Complete => self.complete.into(),
            Property::Cycle => self.cycle.into(),
            Property::Forest => self.forest.into(),
            Property::Tree => self.tree.into(),
            Property::Star => self.star.into(),
            Property::Bipartite => self.bipartite.into(),
            Property::Eulerian => self.eulerian.into(),
            Property::Planar => self.planar.into(),
            Property::ConeVertices => self.cone_vertices.clone().into(),
        }
    }

    /// A flat JSON object restricted to `props`, in the order given.
    pub fn select(&self, props: &[Property]) -> Map<String, Value> {
        props.iter().map(|&p| (p.name().to_string(), self.value(p))).collect()
    }
}

#[cfg(test)]
mod tests;
