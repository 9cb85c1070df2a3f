//! Left-right planarity test (Brandes' formulation of de Fraysseix and
//! Rosenstiehl's criterion), decision only: no embedding is produced.
//!
//! A DFS orients the graph and computes lowpoints and nesting depths; a
//! second DFS, visiting out-edges by nesting depth, maintains a stack of
//! conflict pairs of return-edge intervals. The graph is planar iff every
//! constraint can be satisfied by some left/right assignment of the
//! intervals.

use std::collections::HashMap;

use crate::graph::SimpleGraph;

type EdgeId = usize;
const NO_HEIGHT: usize = usize::MAX;

/// Planarity with the `m > 3n - 6` fast reject in front of the LR test.
pub fn is_planar(g: &SimpleGraph) -> bool {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    lr_planar(g)
}

/// The LR test alone, without the edge-count shortcut.
pub fn lr_planar(g: &SimpleGraph) -> bool {
    LrState::new(g).run()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn single(e: EdgeId) -> Self {
        Interval { low: Some(e), high: Some(e) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    /// Identity of the pair; survives pop-and-repush.
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    graph: &'a SimpleGraph,
    height: Vec<usize>,
    parent_edge: Vec<Option<EdgeId>>,
    roots: Vec<usize>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    refs: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
}

impl<'a> LrState<'a> {
    fn new(graph: &'a SimpleGraph) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        LrState {
            graph,
            height: vec![NO_HEIGHT; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            edges: Vec::with_capacity(m),
            edge_index: HashMap::with_capacity(m),
            out_edges: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting_depth: Vec::with_capacity(m),
            refs: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
            next_pair_id: 0,
        }
    }

    fn run(mut self) -> bool {
        let n = self.graph.vertex_count();
        for v in 0..n {
            if self.height[v] == NO_HEIGHT {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        let m = self.edges.len();
        self.refs = vec![None; m];
        self.lowpt_edge = vec![None; m];
        self.stack_bottom = vec![None; m];
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        let roots = std::mem::take(&mut self.roots);
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let neighbors: Vec<usize> = self.graph.neighbors(v).collect();
        for w in neighbors {
            if self.edge_index.contains_key(&(v, w)) || self.edge_index.contains_key(&(w, v)) {
                continue;
            }
            let vw = self.edges.len();
            self.edges.push((v, w));
            self.edge_index.insert((v, w), vw);
            self.out_edges[v].push(vw);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting_depth.push(0);

            if self.height[w] == NO_HEIGHT {
                self.parent_edge[w] = Some(vw);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }

            self.nesting_depth[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                // chordal
                self.nesting_depth[vw] += 1;
            }

            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|p| p.id)
    }

    fn push_pair(&mut self, left: Interval, right: Interval) {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        match interval.high {
            Some(h) if !interval.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("conflict pairs on the stack are never empty"),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.out_edges[v].clone();
        for &ei in &out {
            let w = self.edges[ei].1;
            self.stack_bottom[ei] = self.top_id();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.push_pair(Interval::default(), Interval::single(ei));
            }

            if self.lowpt[ei] < self.height[v] {
                let e = e.expect("an edge with a return edge below v has a parent edge");
                if ei == out[0] {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair { id: 0, left: Interval::default(), right: Interval::default() };

        // merge return edges of ei into p.right
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.refs[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q_low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }

        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.refs[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.refs[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }

        if !(p.left.is_empty() && p.right.is_empty()) {
            self.push_pair(p.left, p.right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.edges[e].0;
        let target = |s: &Self, edge: EdgeId| s.edges[edge].1;

        // drop conflict pairs whose return edges all end at u
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }

        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.left.high {
                if target(self, h) != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.refs[low] = p.right.low;
                    p.left.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.right.high {
                if target(self, h) != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.refs[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }

        // the reference of e is a highest return edge
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }
}
