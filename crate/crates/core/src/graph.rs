//! Undirected simple graphs on `0..n` backed by a bit matrix.

use std::fmt::Write as _;

use serde::Serialize;

/// Annotation carried by a vertex of an enhanced power graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexLabel {
    pub element: usize,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Option<Vec<VertexLabel>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        SimpleGraph { n, words, bits: vec![0; n * words], labels: None }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    /// Element index behind vertex `v`, or `v` itself for unlabeled graphs.
    pub fn element_of(&self, v: usize) -> usize {
        self.labels.as_ref().map_or(v, |l| l[v].element)
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.bits[u * self.words..(u + 1) * self.words]
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if u == v {
            return;
        }
        self.row_mut(u)[v / 64] |= 1 << (v % 64);
        self.row_mut(v)[u / 64] |= 1 << (u % 64);
    }

    /// Joins every pair of distinct vertices in `members`.
    pub fn add_clique(&mut self, members: &[usize]) {
        let mut mask = vec![0u64; self.words];
        for &v in members {
            mask[v / 64] |= 1 << (v % 64);
        }
        for &u in members {
            for (w, m) in self.row_mut(u).iter_mut().zip(&mask) {
                *w |= m;
            }
            self.row_mut(u)[u / 64] &= !(1 << (u % 64));
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Closed neighborhood of `u` as a bit row.
    pub fn closed_neighborhood(&self, u: usize) -> Vec<u64> {
        let mut row = self.row(u).to_vec();
        row[u / 64] |= 1 << (u % 64);
        row
    }

    /// Copy with vertex `v` removed. Returns the graph and, for each new
    /// vertex, its index in `self`.
    pub fn without_vertex(&self, v: usize) -> (SimpleGraph, Vec<usize>) {
        assert!(v < self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = SimpleGraph::new(keep.len());
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&u| labels[u]).collect());
        }
        (g, keep)
    }

    /// Graphviz DOT. Labeled vertices render as `g<element> (o=<order>)`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", escape(name));
        for v in 0..self.n {
            let label = match &self.labels {
                Some(l) => format!("g{} (o={})", l[v].element, l[v].order),
                None => format!("v{v}"),
            };
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// One `u v` line per edge, `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_queries() {
        let mut g = SimpleGraph::new(130);
        g.add_edge(0, 129);
        g.add_edge(64, 3);
        g.add_edge(5, 5);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(3, 64));
        assert!(!g.has_edge(5, 5));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 129), (3, 64)]);
    }

    #[test]
    fn exports() {
        let g = SimpleGraph::complete(3).with_labels(vec![
            VertexLabel { element: 0, order: 1 },
            VertexLabel { element: 1, order: 3 },
            VertexLabel { element: 2, order: 3 },
        ]);
        assert_eq!(g.to_edge_list(), "0 1\n0 2\n1 2\n");
        let dot = g.to_dot("Z3");
        assert!(dot.starts_with("graph \"Z3\" {\n"));
        assert!(dot.contains("1 [label=\"g1 (o=3)\"];"));
        assert!(dot.contains("  1 -- 2;\n"));
        let (h, map) = g.without_vertex(0);
        assert_eq!(map, vec![1, 2]);
        assert_eq!(h.to_edge_list(), "0 1\n");
        assert_eq!(h.element_of(1), 2);
    }

    proptest! {
        #[test]
        fn symmetric_and_consistent(n in 1usize..90, raw in proptest::collection::vec((0usize..90, 0usize..90), 0..300)) {
            let edges: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
            let mut g = SimpleGraph::from_edges(n, edges.iter().copied());
            let mut clique: Vec<usize> = edges.iter().map(|e| e.0).collect();
            clique.sort_unstable();
            clique.dedup();
            g.add_clique(&clique);
            for u in 0..n {
                prop_assert!(!g.has_edge(u, u));
                prop_assert_eq!(g.degree(u), g.neighbors(u).count());
                for v in 0..n {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
            for (i, &a) in clique.iter().enumerate() {
                for &b in &clique[i + 1..] {
                    prop_assert!(g.has_edge(a, b));
                }
            }
            prop_assert_eq!(g.edge_count() * 2, g.degrees().iter().sum::<usize>());
            prop_assert_eq!(g.edges().count(), g.edge_count());
            let (h, keep) = g.without_vertex(0);
            for (i, &a) in keep.iter().enumerate() {
                for (j, &b) in keep.iter().enumerate() {
                    prop_assert_eq!(h.has_edge(i, j), g.has_edge(a, b));
                }
            }
        }
    }
}
