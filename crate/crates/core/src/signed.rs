//! Signed graphs: an undirected graph with a sign on every edge.

use crate::error::GraphError;
use crate::graph::MixedGraph;
use std::collections::BTreeMap;

/// An undirected graph together with a total sign function on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    underlying: MixedGraph,
    /// Keyed by (u, v) with u < v; `true` means +1.
    signs: BTreeMap<(usize, usize), bool>,
}

impl SignedGraph {
    /// Builds from an arc-free mixed graph and a set of negative edges.
    pub fn new(underlying: MixedGraph, negative: &[(usize, usize)]) -> Result<Self, GraphError> {
        if underlying.arc_list().next().is_some() {
            return Err(GraphError::BadParameter(
                "signed graph underlying must have no arcs".into(),
            ));
        }
        let mut signs: BTreeMap<(usize, usize), bool> = underlying
            .undirected_edges()
            .map(|e| (e, true))
            .collect();
        for &(u, v) in negative {
            let key = (u.min(v), u.max(v));
            match signs.get_mut(&key) {
                Some(s) => *s = false,
                None => return Err(GraphError::NotAnEdge { u, v }),
            }
        }
        Ok(SignedGraph { underlying, signs })
    }

    /// All-positive signing of a graph's underlying edges.
    pub fn all_positive(g: &MixedGraph) -> Self {
        SignedGraph::new(g.underlying(), &[]).expect("underlying has no arcs")
    }

    /// The cycle C_n with exactly one negative edge, between vertices 0 and 1.
    pub fn negative_cycle(n: usize) -> Result<Self, GraphError> {
        let g = crate::graph::cycle(n, 0)?;
        SignedGraph::new(g, &[(0, 1)])
    }

    pub fn order(&self) -> usize {
        self.underlying.order()
    }

    pub fn size(&self) -> usize {
        self.signs.len()
    }

    pub fn underlying(&self) -> &MixedGraph {
        &self.underlying
    }

    /// Edges with their signs, u < v, `true` for +1.
    pub fn signed_edges(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.signs.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<bool> {
        self.signs.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn negative_edges(&self) -> Vec<(usize, usize)> {
        self.signs
            .iter()
            .filter(|(_, &s)| !s)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Sign of a cycle: the product of its edge signs.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Option<bool> {
        let mut sign = true;
        for k in 0..cycle.len() {
            let u = cycle[k];
            let v = cycle[(k + 1) % cycle.len()];
            sign ^= !self.sign(u, v)?;
        }
        Some(sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn negative_cycle_shape() {
        let s = SignedGraph::negative_cycle(4).unwrap();
        assert_eq!(s.negative_edges(), vec![(0, 1)]);
        assert_eq!(s.cycle_sign(&[0, 1, 2, 3]), Some(false));
    }

    #[test]
    fn rejects_arcs_and_missing_edges() {
        let mixed = cycle(4, 1).unwrap();
        assert!(SignedGraph::new(mixed, &[]).is_err());
        let plain = cycle(4, 0).unwrap();
        assert!(SignedGraph::new(plain, &[(0, 2)]).is_err());
    }
}
