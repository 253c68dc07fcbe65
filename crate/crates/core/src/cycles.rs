//! Enumeration of simple cycles in small graphs.

use crate::gauss::GaussianUnit;
use crate::graph::MixedGraph;

/// A simple cycle of the underlying graph, as the vertex sequence of one
/// fixed traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCycle {
    /// Starts at the smallest vertex; second vertex is smaller than the last,
    /// so each cycle appears exactly once.
    pub vertices: Vec<usize>,
    /// Bitmask of the vertex set.
    pub mask: u64,
    /// Value of the fixed traversal in the host graph.
    pub value: GaussianUnit,
}

impl SimpleCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn is_real(&self) -> bool {
        self.value.is_real()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.mask & (1 << v) != 0
    }

    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        let k = self.vertices.len();
        (0..k).any(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % k];
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }
}

/// All simple cycles of the underlying graph of `g`, each listed once.
pub fn simple_cycles(g: &MixedGraph) -> Vec<SimpleCycle> {
    let n = g.order();
    assert!(n <= 64, "cycle enumeration uses 64-bit vertex masks");
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for root in 0..n {
        path.push(root);
        on_path[root] = true;
        extend(g, root, &mut path, &mut on_path, &mut out);
        on_path[root] = false;
        path.pop();
    }
    out
}

fn extend(
    g: &MixedGraph,
    root: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<SimpleCycle>,
) {
    let last = *path.last().expect("path non-empty");
    for v in g.neighbors(last) {
        if v == root {
            if path.len() >= 3 && path[1] < last {
                let mask = path.iter().fold(0u64, |m, &x| m | (1 << x));
                let value = g.cycle_value(path).expect("cycle edges exist");
                out.push(SimpleCycle {
                    vertices: path.clone(),
                    mask,
                    value,
                });
            }
        } else if v > root && !on_path[v] {
            path.push(v);
            on_path[v] = true;
            extend(g, root, path, on_path, out);
            on_path[v] = false;
            path.pop();
        }
    }
}

/// Cycles passing through a given vertex.
pub fn cycles_through_vertex(g: &MixedGraph, u: usize) -> Vec<SimpleCycle> {
    simple_cycles(g)
        .into_iter()
        .filter(|c| c.contains_vertex(u))
        .collect()
}

/// Cycles traversing the connection between u and v.
pub fn cycles_through_pair(g: &MixedGraph, u: usize, v: usize) -> Vec<SimpleCycle> {
    simple_cycles(g)
        .into_iter()
        .filter(|c| c.contains_pair(u, v))
        .collect()
}
