//! Canonical forms and isomorphism testing for underlying graphs, plus the
//! combined isomorphism + switching equivalence decision for mixed graphs.

use crate::graph::MixedGraph;
use crate::switching::switching_equivalent;
use std::collections::BTreeMap;

/// Canonical relabeling of a connected underlying graph: a permutation
/// old -> new such that the relabeled edge list is minimal over all
/// labelings. Small graphs go through brute force; larger ones through
/// partition refinement with individualization.
type BestLabeling = Option<(Vec<(usize, usize)>, Vec<usize>)>;

fn canonical_component_perm(g: &MixedGraph) -> Vec<usize> {
    let n = g.order();
    if n <= 7 {
        return brute_force_perm(g);
    }
    refine_perm(g)
}

fn edges_under(g: &MixedGraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = g
        .edge_pairs()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

fn brute_force_perm(g: &MixedGraph) -> Vec<usize> {
    // Pack the relabeled upper-triangle adjacency into a u64 and minimize.
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edge_pairs();
    let bit = |a: usize, b: usize| -> u64 {
        let (x, y) = (a.min(b), a.max(b));
        1u64 << (x * n + y)
    };
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        for &(u, v) in &edges {
            code |= bit(p[u], p[v]);
        }
        if best.as_ref().map(|(b, _)| code < *b).unwrap_or(true) {
            best = Some((code, p.to_vec()));
        }
    });
    best.expect("at least one permutation").1
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Individualization-refinement canonical labeling for connected graphs.
fn refine_perm(g: &MixedGraph) -> Vec<usize> {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.adjacent(u, v)).collect())
        .collect();
    let initial = refine(&adj, vec![(0..n).collect()]);
    let mut best: BestLabeling = None;
    search_labelings(g, &adj, initial, &mut best);
    best.expect("search yields a labeling").1
}

/// Equitable refinement: split cells by neighbor counts into other cells
/// until stable. Cell order is preserved, with split parts ordered by count.
fn refine(adj: &[Vec<bool>], mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        'outer: for target in 0..partition.len() {
            if partition[target].len() <= 1 {
                continue;
            }
            for splitter in 0..partition.len() {
                let counts: Vec<usize> = partition[target]
                    .iter()
                    .map(|&v| {
                        partition[splitter]
                            .iter()
                            .filter(|&&u| adj[v][u])
                            .count()
                    })
                    .collect();
                if counts.windows(2).any(|w| w[0] != w[1]) {
                    let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                    for (&v, &c) in partition[target].iter().zip(&counts) {
                        grouped.entry(c).or_default().push(v);
                    }
                    let parts: Vec<Vec<usize>> = grouped.into_values().collect();
                    partition.splice(target..=target, parts);
                    changed = true;
                    break 'outer;
                }
            }
        }
        if !changed {
            return partition;
        }
    }
}

fn search_labelings(
    g: &MixedGraph,
    adj: &[Vec<bool>],
    partition: Vec<Vec<usize>>,
    best: &mut BestLabeling,
) {
    if let Some(cell_idx) = partition.iter().position(|c| c.len() > 1) {
        let cell = partition[cell_idx].clone();
        for &v in &cell {
            let mut next = partition.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            next.splice(cell_idx..=cell_idx, [vec![v], rest]);
            let refined = refine(adj, next);
            search_labelings(g, adj, refined, best);
        }
        return;
    }
    // Discrete partition: position in the cell order is the new label.
    let n = g.order();
    let mut perm = vec![0usize; n];
    for (label, cell) in partition.iter().enumerate() {
        perm[cell[0]] = label;
    }
    let code = edges_under(g, &perm);
    if best.as_ref().map(|(b, _)| code < *b).unwrap_or(true) {
        *best = Some((code, perm));
    }
}

/// Canonical form of an arbitrary underlying graph: each component is
/// canonicalized, then components are laid out in sorted code order.
pub fn canonical_underlying(g: &MixedGraph) -> MixedGraph {
    let under = g.underlying();
    let mut parts: Vec<MixedGraph> = under
        .components()
        .into_iter()
        .map(|comp| {
            let sub = under.induced(&comp);
            let perm = canonical_component_perm(&sub);
            sub.relabel(&perm)
        })
        .collect();
    parts.sort_by_key(|p| (p.order(), p.size(), p.edge_pairs()));
    let mut out = MixedGraph::empty(0);
    for p in &parts {
        out = out.disjoint_union(p);
    }
    out
}

/// Stable text code identifying the underlying isomorphism class.
pub fn canonical_code(g: &MixedGraph) -> String {
    let canon = canonical_underlying(g);
    let mut s = format!("{}:", canon.order());
    for (u, v) in canon.edge_pairs() {
        s.push_str(&format!("{u}-{v},"));
    }
    s
}

pub fn underlying_isomorphic(g1: &MixedGraph, g2: &MixedGraph) -> bool {
    g1.order() == g2.order() && canonical_code(g1) == canonical_code(g2)
}

/// Visits isomorphisms from the underlying graph of g1 onto that of g2.
/// Stops early when the visitor returns true; returns whether any did.
pub fn any_underlying_isomorphism<F>(g1: &MixedGraph, g2: &MixedGraph, mut accept: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let n = g1.order();
    if n != g2.order() || g1.size() != g2.size() {
        return false;
    }
    let a1: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g1.adjacent(u, v)).collect())
        .collect();
    let a2: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g2.adjacent(u, v)).collect())
        .collect();
    let deg1: Vec<usize> = (0..n).map(|u| g1.degree(u)).collect();
    let deg2: Vec<usize> = (0..n).map(|u| g2.degree(u)).collect();
    // Assign g1 vertices in descending-degree order for early pruning.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(deg1[u]));
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn backtrack<F: FnMut(&[usize]) -> bool>(
        depth: usize,
        order: &[usize],
        a1: &[Vec<bool>],
        a2: &[Vec<bool>],
        deg1: &[usize],
        deg2: &[usize],
        mapping: &mut [usize],
        used: &mut [bool],
        accept: &mut F,
    ) -> bool {
        if depth == order.len() {
            return accept(mapping);
        }
        let u = order[depth];
        for t in 0..a2.len() {
            if used[t] || deg1[u] != deg2[t] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                let img = mapping[w];
                a1[u][w] == a2[t][img]
            });
            if !consistent {
                continue;
            }
            mapping[u] = t;
            used[t] = true;
            if backtrack(depth + 1, order, a1, a2, deg1, deg2, mapping, used, accept) {
                return true;
            }
            mapping[u] = usize::MAX;
            used[t] = false;
        }
        false
    }

    backtrack(
        0, &order, &a1, &a2, &deg1, &deg2, &mut mapping, &mut used, &mut accept,
    )
}

/// All automorphisms of the underlying graph.
pub fn underlying_automorphisms(g: &MixedGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    any_underlying_isomorphism(g, g, |perm| {
        out.push(perm.to_vec());
        false // keep enumerating
    });
    out
}

/// Multiset of (length, value class) over all simple cycles: invariant under
/// both relabeling and switching, so unequal fingerprints certify
/// inequivalence.
pub fn cycle_class_fingerprint(g: &MixedGraph) -> Vec<(usize, u8)> {
    let mut out: Vec<(usize, u8)> = crate::cycles::simple_cycles(g)
        .iter()
        .map(|c| {
            let class = match c.value {
                crate::gauss::GaussianUnit::One => 0u8,
                crate::gauss::GaussianUnit::MinusOne => 2,
                _ => 1,
            };
            (c.len(), class)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Full decision: is g2 obtainable from g1 by a relabeling followed by a
/// switching?
pub fn iso_switch_equivalent(g1: &MixedGraph, g2: &MixedGraph) -> bool {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return false;
    }
    if !underlying_isomorphic(g1, g2) {
        return false;
    }
    if cycle_class_fingerprint(g1) != cycle_class_fingerprint(g2) {
        return false;
    }
    // Forests on isomorphic underlying graphs are always equivalent.
    if g1.structure().corank == 0 {
        return true;
    }
    any_underlying_isomorphism(g1, g2, |mapping| {
        let relabeled = g1.relabel(mapping);
        matches!(switching_equivalent(&relabeled, g2), Ok(Some(_)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, g_t, path, star, MixedGraph};

    #[test]
    fn canonical_code_invariance() {
        let g = g_t(3).unwrap();
        let perm = vec![3, 5, 1, 0, 6, 2, 4];
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        assert_ne!(canonical_code(&path(4)), canonical_code(&star(3)));
        // Arcs are invisible to the underlying code.
        assert_eq!(
            canonical_code(&cycle(6, 1).unwrap()),
            canonical_code(&cycle(6, 0).unwrap())
        );
    }

    #[test]
    fn refinement_path_matches_brute_force_on_relabelings() {
        // Same graph, two labelings, via the n >= 8 route.
        let g = g_t(5).unwrap(); // 9 vertices
        let perm = vec![8, 2, 7, 0, 5, 3, 6, 1, 4];
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        let c10 = cycle(10, 0).unwrap();
        let rotated = c10.relabel(&[4, 5, 6, 7, 8, 9, 0, 1, 2, 3]);
        assert_eq!(canonical_code(&c10), canonical_code(&rotated));
    }

    #[test]
    fn isomorphism_search_agrees_with_codes() {
        let a = path(2).disjoint_union(&cycle(4, 0).unwrap());
        let b = cycle(4, 0).unwrap().disjoint_union(&path(2));
        assert!(underlying_isomorphic(&a, &b));
        assert!(any_underlying_isomorphism(&a, &b, |_| true));
        assert!(!any_underlying_isomorphism(&a, &path(6), |_| true));
    }

    #[test]
    fn iso_switch_merges_conjugate_cycles() {
        // Forward and reversed one-arc cycles are related by a reflection.
        let fwd = cycle(5, 1).unwrap();
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.remove(0);
        let rev = MixedGraph::build(5, &edges, &[(1, 0)]).unwrap();
        assert!(iso_switch_equivalent(&fwd, &rev));
        // Different value classes never merge.
        assert!(!iso_switch_equivalent(
            &cycle(5, 1).unwrap(),
            &cycle(5, 2).unwrap()
        ));
        assert!(!iso_switch_equivalent(
            &cycle(4, 0).unwrap(),
            &cycle(4, 2).unwrap()
        ));
        // Any two mixed trees on the same shape are equivalent.
        let t1 = MixedGraph::build(4, &[(0, 1)], &[(1, 2), (3, 1)]).unwrap();
        let t2 = star(3).relabel(&[1, 0, 2, 3]);
        assert!(iso_switch_equivalent(&t1, &t2));
    }

    #[test]
    fn fingerprints_distinguish_value_classes() {
        assert_ne!(
            cycle_class_fingerprint(&cycle(6, 0).unwrap()),
            cycle_class_fingerprint(&cycle(6, 2).unwrap())
        );
        assert_eq!(
            cycle_class_fingerprint(&cycle(6, 1).unwrap()),
            cycle_class_fingerprint(&cycle(6, 1).unwrap().relabel(&[5, 4, 3, 2, 1, 0]))
        );
    }
}
