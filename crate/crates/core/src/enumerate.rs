//! Enumeration of mixed graphs up to switching: underlying isomorphism
//! classes by brute force or vertex augmentation, then one mixed
//! representative per realizable cycle-value class.

use crate::canon::{canonical_code, canonical_underlying};
use crate::error::SearchError;
use crate::graph::MixedGraph;
use std::collections::{BTreeMap, HashSet, VecDeque};

/// Bounds for a free enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConstraints {
    /// Exact order of the generated graphs.
    pub order: usize,
    /// Exact size (edge count); `None` means any.
    pub size: Option<usize>,
    pub max_degree: Option<usize>,
    pub connected: bool,
    /// Per-component corank cap; the free search refuses larger inputs.
    pub corank_cap: usize,
    /// Hard ceiling on the order for free searches.
    pub max_free_order: usize,
}

impl SearchConstraints {
    pub fn exact(order: usize, size: usize) -> Self {
        SearchConstraints {
            order,
            size: Some(size),
            max_degree: None,
            connected: false,
            corank_cap: 4,
            max_free_order: 12,
        }
    }

    pub fn connected_only(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }
}

/// Connected underlying graphs with exactly n vertices and m edges, one
/// canonical representative per isomorphism class, sorted by code.
pub fn connected_underlying(n: usize, m: usize, max_degree: Option<usize>) -> Vec<MixedGraph> {
    if n == 0 || m + 1 < n {
        return Vec::new();
    }
    if n == 1 {
        return if m == 0 {
            vec![MixedGraph::empty(1)]
        } else {
            Vec::new()
        };
    }
    let max_m = n * (n - 1) / 2;
    if m > max_m {
        return Vec::new();
    }
    let graphs = if n <= 6 {
        connected_brute(n, m, max_degree)
    } else {
        connected_augment(n, m, max_degree)
    };
    let mut keyed: Vec<(String, MixedGraph)> = graphs
        .into_iter()
        .map(|g| (canonical_code(&g), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

fn connected_brute(n: usize, m: usize, max_degree: Option<usize>) -> Vec<MixedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    // All m-subsets of the possible edges.
    let mut chosen: Vec<usize> = Vec::new();
    subsets(pairs.len(), m, &mut chosen, &mut |idxs| {
        let edges: Vec<(usize, usize)> = idxs.iter().map(|&i| pairs[i]).collect();
        let g = MixedGraph::build(n, &edges, &[]).expect("valid simple graph");
        if !g.is_connected() {
            return;
        }
        if let Some(d) = max_degree {
            if (0..n).any(|u| g.degree(u) > d) {
                return;
            }
        }
        let canon = canonical_underlying(&g);
        if seen.insert(canonical_code(&canon)) {
            out.push(canon);
        }
    });
    out
}

fn subsets<F: FnMut(&[usize])>(total: usize, k: usize, chosen: &mut Vec<usize>, visit: &mut F) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let start = chosen.last().map(|&x| x + 1).unwrap_or(0);
    let remaining = k - chosen.len();
    for i in start..=total.saturating_sub(remaining) {
        chosen.push(i);
        subsets(total, k, chosen, visit);
        chosen.pop();
    }
}

/// Grows connected graphs one vertex at a time. Every connected graph has a
/// non-cut vertex, so deleting one reaches a connected graph one vertex
/// smaller; augmentation therefore reaches every class.
fn connected_augment(n: usize, m: usize, max_degree: Option<usize>) -> Vec<MixedGraph> {
    let corank = m + 1 - n;
    let mut level: BTreeMap<String, MixedGraph> = BTreeMap::new();
    level.insert(canonical_code(&MixedGraph::empty(1)), MixedGraph::empty(1));
    for k in 1..n {
        let mut next: BTreeMap<String, MixedGraph> = BTreeMap::new();
        for g in level.values() {
            // The new vertex attaches to a nonempty subset; its size minus
            // one spends corank budget.
            let budget_now = g.size() + 1 - k; // corank used so far
            let max_attach = (corank - budget_now + 1).min(k);
            // Edge-count feasibility: remaining vertices each add >= 1 edge.
            for attach_size in 1..=max_attach {
                let new_edges = g.size() + attach_size;
                let remaining_vertices = n - k - 1;
                if new_edges + remaining_vertices > m {
                    continue;
                }
                let verts: Vec<usize> = (0..k).collect();
                let mut subset = Vec::new();
                subsets_of(&verts, attach_size, &mut subset, &mut |s| {
                    let mut edges: Vec<(usize, usize)> = g.undirected_edges().collect();
                    edges.extend(s.iter().map(|&u| (u, k)));
                    let cand = MixedGraph::build(k + 1, &edges, &[]).expect("valid");
                    if let Some(d) = max_degree {
                        if (0..=k).any(|u| cand.degree(u) > d) {
                            return;
                        }
                    }
                    let canon = canonical_underlying(&cand);
                    next.entry(canonical_code(&canon)).or_insert(canon);
                });
            }
        }
        level = next;
    }
    level
        .into_values()
        .filter(|g| g.size() == m)
        .collect()
}

fn subsets_of<F: FnMut(&[usize])>(
    items: &[usize],
    k: usize,
    chosen: &mut Vec<usize>,
    visit: &mut F,
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let start = chosen
        .last()
        .map(|&x| items.iter().position(|&y| y == x).unwrap() + 1)
        .unwrap_or(0);
    let remaining = k - chosen.len();
    for i in start..=items.len().saturating_sub(remaining) {
        chosen.push(items[i]);
        subsets_of(items, k, chosen, visit);
        chosen.pop();
    }
}

/// All underlying graphs (any number of components) with the exact order and
/// size, one canonical representative per isomorphism class. Components are
/// laid out in sorted canonical order.
pub fn all_underlying(c: &SearchConstraints) -> Result<Vec<MixedGraph>, SearchError> {
    if c.order > c.max_free_order {
        return Err(SearchError::Guard(format!(
            "free enumeration capped at order {}, requested {}",
            c.max_free_order, c.order
        )));
    }
    let sizes: Vec<usize> = match c.size {
        Some(m) => vec![m],
        None => (0..=c.order * (c.order - 1) / 2).collect(),
    };
    let mut out = Vec::new();
    for m in sizes {
        if c.connected {
            out.extend(connected_underlying(c.order, m, c.max_degree));
        } else {
            // Partition the order and size over a multiset of connected
            // components, in non-increasing component key order.
            let mut catalog: BTreeMap<(usize, usize), Vec<MixedGraph>> = BTreeMap::new();
            for ni in 1..=c.order {
                for mi in ni.saturating_sub(1)..=(ni * ni.saturating_sub(1) / 2).min(m) {
                    if mi + 1 > ni + c.corank_cap {
                        continue;
                    }
                    catalog.insert((ni, mi), connected_underlying(ni, mi, c.max_degree));
                }
            }
            let mut parts: Vec<MixedGraph> = Vec::new();
            compose_components(c.order, m, None, &catalog, &mut parts, &mut out);
        }
    }
    let mut keyed: Vec<(String, MixedGraph)> = out
        .into_iter()
        .map(|g| (canonical_code(&g), g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

type ComponentKey = (usize, usize, usize); // (order, size, index in its list)

fn compose_components(
    order_left: usize,
    size_left: usize,
    last_key: Option<ComponentKey>,
    catalog: &BTreeMap<(usize, usize), Vec<MixedGraph>>,
    parts: &mut Vec<MixedGraph>,
    out: &mut Vec<MixedGraph>,
) {
    if order_left == 0 {
        if size_left == 0 {
            let mut g = MixedGraph::empty(0);
            for p in parts.iter() {
                g = g.disjoint_union(p);
            }
            out.push(g);
        }
        return;
    }
    for (&(ni, mi), graphs) in catalog.range(..) {
        if ni > order_left || mi > size_left {
            continue;
        }
        for (idx, g) in graphs.iter().enumerate() {
            let key = (ni, mi, idx);
            // Non-decreasing keys give each multiset exactly once.
            if let Some(prev) = last_key {
                if key < prev {
                    continue;
                }
            }
            parts.push(g.clone());
            compose_components(order_left - ni, size_left - mi, Some(key), catalog, parts, out);
            parts.pop();
        }
    }
}

/// Spanning-forest data of an all-undirected graph.
struct ForestData {
    /// Tree edges as sorted pairs.
    tree_edges: Vec<(usize, usize)>,
    /// Non-tree edges as sorted pairs, in deterministic order.
    chords: Vec<(usize, usize)>,
    /// For each chord, the tree path from its second endpoint back to the
    /// first, as a vertex list v, ..., u.
    chord_paths: Vec<Vec<usize>>,
}

fn spanning_forest(g: &MixedGraph) -> ForestData {
    let n = g.order();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut in_tree: HashSet<(usize, usize)> = HashSet::new();
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    depth[v] = depth[u] + 1;
                    in_tree.insert((u.min(v), u.max(v)));
                    queue.push_back(v);
                }
            }
        }
    }
    let tree_edges: Vec<(usize, usize)> = in_tree.iter().copied().collect();
    let chords: Vec<(usize, usize)> = g
        .edge_pairs()
        .into_iter()
        .filter(|e| !in_tree.contains(e))
        .collect();
    let chord_paths = chords
        .iter()
        .map(|&(u, v)| {
            // Walk both endpoints up to their meeting point.
            let (mut a, mut b) = (v, u);
            let mut left = vec![a];
            let mut right = vec![b];
            while depth[a] > depth[b] {
                a = parent[a].unwrap();
                left.push(a);
            }
            while depth[b] > depth[a] {
                b = parent[b].unwrap();
                right.push(b);
            }
            while a != b {
                a = parent[a].unwrap();
                left.push(a);
                b = parent[b].unwrap();
                right.push(b);
            }
            right.pop();
            left.extend(right.into_iter().rev());
            left // v ... u through the tree
        })
        .collect();
    ForestData {
        tree_edges,
        chords,
        chord_paths,
    }
}

/// One mixed representative per realizable switching class on a fixed
/// underlying graph, optionally deduplicated under relabeling.
///
/// Classes are indexed by the fundamental-cycle value of each chord
/// (traversing the chord first, then the tree path back). Not every target
/// vector is realizable by a mixed graph; unrealizable ones are skipped.
pub fn orientation_classes(underlying: &MixedGraph, dedup_by_iso: bool) -> Vec<MixedGraph> {
    let base = underlying.underlying();
    let forest = spanning_forest(&base);
    let s = forest.chords.len();
    let mut reps: Vec<MixedGraph> = Vec::new();
    let mut targets = vec![0u8; s];
    loop {
        if let Some(g) = realize_class(&base, &forest, &targets) {
            reps.push(g);
        }
        // Next exponent vector in lexicographic order.
        let mut i = 0;
        loop {
            if i == s {
                break;
            }
            targets[i] += 1;
            if targets[i] < 4 {
                break;
            }
            targets[i] = 0;
            i += 1;
        }
        if i == s {
            break;
        }
    }
    if !dedup_by_iso {
        return reps;
    }
    // All representatives share the labeled underlying graph, so relabelings
    // between them are exactly its automorphisms. Group by the cycle-class
    // fingerprint first; only same-fingerprint pairs need the orbit check.
    let autos = crate::canon::underlying_automorphisms(&base);
    let cycles = crate::cycles::simple_cycles(&base);
    let fingerprint = |g: &MixedGraph| -> Vec<(usize, u8)> {
        let mut fp: Vec<(usize, u8)> = cycles
            .iter()
            .map(|c| {
                let class = match g.cycle_value(&c.vertices).expect("cycle edges") {
                    crate::gauss::GaussianUnit::One => 0u8,
                    crate::gauss::GaussianUnit::MinusOne => 2,
                    _ => 1,
                };
                (c.len(), class)
            })
            .collect();
        fp.sort_unstable();
        fp
    };
    let mut kept: Vec<(MixedGraph, Vec<(usize, u8)>)> = Vec::new();
    'next: for g in reps {
        let fp = fingerprint(&g);
        for (h, fh) in &kept {
            if *fh != fp {
                continue;
            }
            let equivalent = autos.iter().any(|perm| {
                matches!(
                    crate::switching::switching_equivalent(&g.relabel(perm), h),
                    Ok(Some(_))
                )
            });
            if equivalent {
                continue 'next;
            }
        }
        kept.push((g, fp));
    }
    kept.into_iter().map(|(g, _)| g).collect()
}

/// Finds a mixed graph whose chord cycle values are i^targets, if any.
fn realize_class(
    base: &MixedGraph,
    forest: &ForestData,
    targets: &[u8],
) -> Option<MixedGraph> {
    // Fast path: all targets representable directly on the chords.
    if targets.iter().all(|&t| t != 2) {
        let mut arcs = Vec::new();
        for (j, &(u, v)) in forest.chords.iter().enumerate() {
            match targets[j] {
                0 => {}
                1 => arcs.push((u, v)),
                3 => arcs.push((v, u)),
                _ => unreachable!(),
            }
        }
        return Some(
            crate::graph::apply_orientation(base, &arcs).expect("chords are edges"),
        );
    }
    // Some chord needs cycle value -1: search orientations of the tree edges
    // lying on those fundamental cycles, all other tree edges undirected,
    // chord values forced. Widen to every tree edge if that fails.
    let mut involved: Vec<(usize, usize)> = Vec::new();
    for (j, path) in forest.chord_paths.iter().enumerate() {
        if targets[j] == 2 {
            for w in path.windows(2) {
                let e = (w[0].min(w[1]), w[0].max(w[1]));
                if !involved.contains(&e) {
                    involved.push(e);
                }
            }
        }
    }
    involved.sort_unstable();
    if let Some(g) = realize_with_tree_edges(base, forest, targets, &involved) {
        return Some(g);
    }
    let all: Vec<(usize, usize)> = forest.tree_edges.to_vec();
    let mut all_sorted = all;
    all_sorted.sort_unstable();
    if all_sorted.len() > involved.len() {
        realize_with_tree_edges(base, forest, targets, &all_sorted)
    } else {
        None
    }
}

fn realize_with_tree_edges(
    base: &MixedGraph,
    forest: &ForestData,
    targets: &[u8],
    free_edges: &[(usize, usize)],
) -> Option<MixedGraph> {
    // Assignment per free tree edge: 0 undirected, 1 arc u->v, 3 arc v->u.
    let states = [0u8, 1, 3];
    let mut assign = vec![0u8; free_edges.len()];

    fn entry_exponent(
        free_edges: &[(usize, usize)],
        assign: &[u8],
        from: usize,
        to: usize,
    ) -> u8 {
        let key = (from.min(to), from.max(to));
        match free_edges.iter().position(|&e| e == key) {
            None => 0,
            Some(idx) => {
                let exp = assign[idx];
                if (from, to) == key {
                    exp
                } else {
                    (4 - exp) % 4
                }
            }
        }
    }

    fn try_assign(
        base: &MixedGraph,
        forest: &ForestData,
        targets: &[u8],
        free_edges: &[(usize, usize)],
        assign: &mut Vec<u8>,
        depth: usize,
        states: &[u8; 3],
    ) -> Option<MixedGraph> {
        if depth == free_edges.len() {
            // Chord values are forced; check representability.
            let mut arcs: Vec<(usize, usize)> = Vec::new();
            for (idx, &(u, v)) in free_edges.iter().enumerate() {
                match assign[idx] {
                    0 => {}
                    1 => arcs.push((u, v)),
                    3 => arcs.push((v, u)),
                    _ => unreachable!(),
                }
            }
            for (j, &(u, v)) in forest.chords.iter().enumerate() {
                // Tree path product exponent from v back to u.
                let mut path_exp = 0u8;
                for w in forest.chord_paths[j].windows(2) {
                    path_exp = (path_exp + entry_exponent(free_edges, assign, w[0], w[1])) % 4;
                }
                let chord_exp = (4 + targets[j] as i8 - path_exp as i8) as u8 % 4;
                match chord_exp {
                    0 => {}
                    1 => arcs.push((u, v)),
                    3 => arcs.push((v, u)),
                    _ => return None, // chord would need value -1
                }
            }
            return Some(
                crate::graph::apply_orientation(base, &arcs).expect("edges of the graph"),
            );
        }
        for &st in states {
            assign[depth] = st;
            if let Some(g) = try_assign(base, forest, targets, free_edges, assign, depth + 1, states)
            {
                return Some(g);
            }
        }
        assign[depth] = 0;
        None
    }

    try_assign(base, forest, targets, free_edges, &mut assign, 0, &states)
}

/// One representative per switching class per underlying isomorphism class.
/// Conjugate orientation classes related by a relabeling are merged.
pub fn enumerate_up_to_switching(c: &SearchConstraints) -> Result<Vec<MixedGraph>, SearchError> {
    let mut out = Vec::new();
    for underlying in all_underlying(c)? {
        out.extend(orientation_classes(&underlying, true));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, theta};
    use crate::switching::switching_equivalent;

    #[test]
    fn connected_counts_small() {
        // Known counts of connected graphs up to isomorphism.
        assert_eq!(connected_underlying(3, 2, None).len(), 1); // P3
        assert_eq!(connected_underlying(3, 3, None).len(), 1); // triangle
        assert_eq!(connected_underlying(4, 3, None).len(), 2); // P4, star
        assert_eq!(connected_underlying(4, 4, None).len(), 2); // C4, paw
        assert_eq!(connected_underlying(5, 4, None).len(), 3); // trees on 5
        assert_eq!(connected_underlying(6, 5, None).len(), 6); // trees on 6
        assert_eq!(connected_underlying(7, 6, None).len(), 11); // trees on 7
        assert_eq!(connected_underlying(8, 7, None).len(), 23); // trees on 8
        assert_eq!(connected_underlying(9, 8, None).len(), 47);
        assert_eq!(connected_underlying(10, 9, None).len(), 106);
    }

    #[test]
    fn unicyclic_counts() {
        // Connected unicyclic graph counts by order: 1, 2, 5, 13, 33.
        for (n, expected) in [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33)] {
            assert_eq!(connected_underlying(n, n, None).len(), expected, "n={n}");
        }
    }

    #[test]
    fn degree_cap_filters() {
        // 5-vertex trees with max degree <= 2: only the path.
        assert_eq!(connected_underlying(5, 4, Some(2)).len(), 1);
        // With a vertex of degree 4 allowed: path, spider, star.
        assert_eq!(connected_underlying(5, 4, Some(4)).len(), 3);
    }

    #[test]
    fn disconnected_composition() {
        // Order 4, size 2: 2K2, P3+K1, 2K1+K2... exactly P3 u K1 and K2 u K2.
        let c = SearchConstraints::exact(4, 2);
        let all = all_underlying(&c).unwrap();
        assert_eq!(all.len(), 2);
        // Order 5, size 4: trees(5) = 3, (4,4)+(1,0) gives C4 and the paw,
        // (3,3)+(2,1) gives triangle + K2.
        let c = SearchConstraints::exact(5, 4);
        let all = all_underlying(&c).unwrap();
        assert_eq!(all.len(), 3 + 2 + 1);
    }

    #[test]
    fn orientation_classes_of_cycles() {
        // A labeled cycle has four classes; conjugates merge under iso.
        let c6 = cycle(6, 0).unwrap();
        assert_eq!(orientation_classes(&c6, false).len(), 4);
        let merged = orientation_classes(&c6, true);
        assert_eq!(merged.len(), 3);
        // The merged representatives realize the three named kinds.
        for (rep, kind) in merged.iter().zip([0u8, 1, 2]) {
            let target = cycle(6, kind).unwrap();
            assert!(
                crate::canon::iso_switch_equivalent(rep, &target),
                "kind {kind}"
            );
        }
    }

    #[test]
    fn forests_have_one_class() {
        for g in [path(5), crate::graph::star(4)] {
            assert_eq!(orientation_classes(&g, false).len(), 1);
        }
    }

    #[test]
    fn realized_classes_have_prescribed_values() {
        // On a theta graph every chord target vector without -1 entries is
        // realizable; -1 entries force arcs onto tree edges.
        let t = theta(3, 3, 4, &[]).unwrap();
        let classes = orientation_classes(&t, false);
        // 16 target vectors; all should be realizable here.
        assert_eq!(classes.len(), 16);
        // All pairwise inequivalent at fixed labels.
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                assert_eq!(
                    switching_equivalent(&classes[i], &classes[j]).unwrap(),
                    None,
                    "classes {i} and {j} must differ"
                );
            }
        }
    }

    #[test]
    fn order_three_connected_classes() {
        let c = SearchConstraints {
            order: 3,
            size: None,
            max_degree: None,
            connected: true,
            corank_cap: 4,
            max_free_order: 12,
        };
        let classes = enumerate_up_to_switching(&c).unwrap();
        // P3 plus the three cycle kinds.
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn unicyclic_order_four_classes() {
        let c = SearchConstraints::exact(4, 4).connected_only();
        let classes = enumerate_up_to_switching(&c).unwrap();
        // Two underlying shapes (C4 and the triangle with a pendant), three
        // cycle kinds each.
        assert_eq!(classes.len(), 6);
    }
}
