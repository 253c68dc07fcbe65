//! Switching functions, the four local rewrite moves, canonical forms of
//! mixed cycles / forests / unicyclic graphs, and switching-equivalence
//! testing at fixed vertex labels.

use crate::error::SwitchingError;
use crate::gauss::GaussianUnit;
use crate::graph::MixedGraph;
use crate::matrix::HermitianMatrix;
use crate::signed::SignedGraph;
use serde_json::Value;
use std::collections::VecDeque;

/// A map from vertices to nonzero Gaussian units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction {
    values: Vec<GaussianUnit>,
}

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction {
            values: vec![GaussianUnit::One; n],
        }
    }

    pub fn new(values: Vec<GaussianUnit>) -> Result<Self, SwitchingError> {
        if values.iter().any(|v| v.is_zero()) {
            return Err(SwitchingError::IncompleteSwitching);
        }
        Ok(SwitchingFunction { values })
    }

    /// Constant 1 except at one vertex.
    pub fn at_vertex(n: usize, v: usize, value: GaussianUnit) -> Self {
        let mut values = vec![GaussianUnit::One; n];
        values[v] = value;
        SwitchingFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> GaussianUnit {
        self.values[v]
    }

    pub fn values(&self) -> &[GaussianUnit] {
        &self.values
    }

    pub fn inverse(&self) -> SwitchingFunction {
        SwitchingFunction {
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Pointwise product: applying `self` after `earlier`.
    pub fn compose(&self, earlier: &SwitchingFunction) -> SwitchingFunction {
        assert_eq!(self.len(), earlier.len());
        SwitchingFunction {
            values: self
                .values
                .iter()
                .zip(&earlier.values)
                .map(|(&a, &b)| a * b)
                .collect(),
        }
    }

    /// JSON map vertex -> one of "1", "-1", "i", "-i".
    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .values
            .iter()
            .enumerate()
            .map(|(v, u)| (v.to_string(), Value::String(u.label().to_string())))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(v: &Value, n: usize) -> Result<Self, SwitchingError> {
        let obj = v.as_object().ok_or(SwitchingError::IncompleteSwitching)?;
        let mut values = vec![GaussianUnit::Zero; n];
        for (key, val) in obj {
            let idx: usize = key.parse().map_err(|_| SwitchingError::IncompleteSwitching)?;
            let unit = val
                .as_str()
                .and_then(GaussianUnit::parse)
                .ok_or(SwitchingError::IncompleteSwitching)?;
            if idx < n {
                values[idx] = unit;
            }
        }
        SwitchingFunction::new(values)
    }
}

/// Conjugates the Hermitian matrix of `g` by diag(theta). Always defined.
pub fn switch_matrix(g: &MixedGraph, theta: &SwitchingFunction) -> HermitianMatrix {
    HermitianMatrix::from_graph(g).conjugate_by(theta.values())
}

/// Switches a mixed graph and re-encodes the result as a mixed graph.
///
/// The conjugated matrix always has unit entries, but an entry can land on
/// -1 (for instance theta = (1, -1) across an undirected edge), which no
/// mixed graph realizes; that case is reported as an error. The cycle-value
/// and spectrum invariants hold at the matrix level regardless.
pub fn apply_switching(
    g: &MixedGraph,
    theta: &SwitchingFunction,
) -> Result<MixedGraph, SwitchingError> {
    switch_matrix(g, theta)
        .to_mixed_graph()
        .map_err(|(u, v)| SwitchingError::NotMixedRepresentable { u, v })
}

/// The four local rewrite moves, each a single-vertex switching:
///
/// * 1: arcs (u,v),(v,w) through v reverse to (v,u),(w,v)     [theta(v) = -1]
/// * 2: arcs (u,v),(w,v) into v become undirected             [theta(v) = i]
/// * 3: arcs (v,u),(v,w) out of v become undirected           [theta(v) = -i]
/// * 4: arc (u,v) plus edge vw become edge uv plus arc (v,w)  [theta(v) = i]
pub fn sw_move(g: &MixedGraph, which: u8, center: usize) -> Result<MixedGraph, SwitchingError> {
    let v = center;
    let in_arcs = g.arc_list().filter(|&(_, b)| b == v).count();
    let out_arcs = g.arc_list().filter(|&(a, _)| a == v).count();
    let undirected_at = g
        .undirected_edges()
        .filter(|&(a, b)| a == v || b == v)
        .count();
    let (ok, unit) = match which {
        1 => (in_arcs >= 1 && out_arcs >= 1, GaussianUnit::MinusOne),
        2 => (in_arcs >= 2, GaussianUnit::I),
        3 => (out_arcs >= 2, GaussianUnit::MinusI),
        4 => (in_arcs >= 1 && undirected_at >= 1, GaussianUnit::I),
        other => {
            return Err(SwitchingError::PatternMismatch {
                mv: other,
                center: v,
            })
        }
    };
    if !ok {
        return Err(SwitchingError::PatternMismatch { mv: which, center: v });
    }
    apply_switching(g, &SwitchingFunction::at_vertex(g.order(), v, unit))
}

/// Cycle-class tags: value 1, value +-i, value -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleType {
    Type0,
    Type1,
    Type2,
}

impl CycleType {
    pub fn from_value(v: GaussianUnit) -> Option<CycleType> {
        match v {
            GaussianUnit::One => Some(CycleType::Type0),
            GaussianUnit::I | GaussianUnit::MinusI => Some(CycleType::Type1),
            GaussianUnit::MinusOne => Some(CycleType::Type2),
            GaussianUnit::Zero => None,
        }
    }

    pub fn tag(self) -> u8 {
        match self {
            CycleType::Type0 => 0,
            CycleType::Type1 => 1,
            CycleType::Type2 => 2,
        }
    }
}

/// Finds a switching that removes every arc of a mixed forest.
///
/// Each tree is rooted at its smallest vertex and unit factors propagate
/// down the tree edges.
pub fn normalize_forest(g: &MixedGraph) -> Result<SwitchingFunction, SwitchingError> {
    if g.structure().corank != 0 {
        return Err(SwitchingError::NotAForest);
    }
    Ok(normalize_spanning_forest(g).0)
}

/// Switching that makes every BFS-spanning-forest edge undirected; returns
/// the function and the list of non-forest connections (as unordered pairs).
fn normalize_spanning_forest(g: &MixedGraph) -> (SwitchingFunction, Vec<(usize, usize)>) {
    let n = g.order();
    let mut theta = vec![GaussianUnit::Zero; n];
    let mut tree_edge = vec![false; n * n];
    for root in 0..n {
        if !theta[root].is_zero() {
            continue;
        }
        theta[root] = GaussianUnit::One;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if theta[v].is_zero() {
                    // theta(v) = theta(u) * h(u, v) forces the switched
                    // entry to 1.
                    theta[v] = theta[u] * g.entry(u, v);
                    tree_edge[u * n + v] = true;
                    tree_edge[v * n + u] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let chords = g
        .edge_pairs()
        .into_iter()
        .filter(|&(u, v)| !tree_edge[u * n + v])
        .collect();
    (
        SwitchingFunction::new(theta).expect("all vertices reached"),
        chords,
    )
}

/// The vertex sequence of the unique cycle of a connected unicyclic graph,
/// starting at its smallest vertex and moving first toward that vertex's
/// smaller cycle-neighbor.
pub fn unique_cycle(g: &MixedGraph) -> Result<Vec<usize>, SwitchingError> {
    let s = g.structure();
    if s.components.len() != 1 || s.corank != 1 {
        return Err(SwitchingError::NotUnicyclic);
    }
    // Prune leaves until only the cycle remains.
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| degree[u] <= 1).collect();
    while let Some(u) = queue.pop_front() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for v in g.neighbors(u) {
            if alive[v] {
                degree[v] -= 1;
                if degree[v] <= 1 {
                    queue.push_back(v);
                }
            }
        }
    }
    let members: Vec<usize> = (0..n).filter(|&u| alive[u]).collect();
    let start = members[0];
    let around: Vec<usize> = g
        .neighbors(start)
        .into_iter()
        .filter(|&v| alive[v])
        .collect();
    let mut seq = vec![start, *around.iter().min().expect("cycle has neighbors")];
    while seq.len() < members.len() {
        let last = seq[seq.len() - 1];
        let prev = seq[seq.len() - 2];
        let next = g
            .neighbors(last)
            .into_iter()
            .find(|&v| alive[v] && v != prev)
            .expect("cycle continues");
        seq.push(next);
    }
    Ok(seq)
}

/// Canonicalizes a mixed cycle: returns the value-class tag and a switching
/// taking the graph to the canonical arc pattern along the cycle order
/// (no arcs / one arc on the first edge / two same-direction arcs on the
/// first two edges). A value -i cycle canonicalizes to the reversed single
/// arc; at fixed labels the two orientations are genuinely inequivalent.
pub fn canonicalize_cycle(
    g: &MixedGraph,
) -> Result<(CycleType, SwitchingFunction), SwitchingError> {
    let s = g.structure();
    if !(s.components.len() == 1 && s.corank == 1 && s.max_degree == 2) {
        return Err(SwitchingError::NotACycle);
    }
    canonicalize_with_cycle(g)
}

/// Canonicalizes a connected unicyclic mixed graph: the unique cycle gets
/// the canonical arc pattern of its value class and every tree edge becomes
/// undirected.
pub fn canonicalize_unicyclic(
    g: &MixedGraph,
) -> Result<(CycleType, SwitchingFunction), SwitchingError> {
    let s = g.structure();
    if s.components.len() != 1 || s.corank != 1 {
        return Err(SwitchingError::NotUnicyclic);
    }
    canonicalize_with_cycle(g)
}

fn canonicalize_with_cycle(
    g: &MixedGraph,
) -> Result<(CycleType, SwitchingFunction), SwitchingError> {
    let n = g.order();
    let seq = unique_cycle(g)?;
    let len = seq.len();
    let value = g.cycle_value(&seq).expect("cycle traversal is a walk");
    let ty = CycleType::from_value(value).expect("cycle values are units");
    // Target entries h(seq[k], seq[k+1]) along the traversal.
    let target = |k: usize| -> GaussianUnit {
        match ty {
            CycleType::Type0 => GaussianUnit::One,
            CycleType::Type1 => {
                if k == 0 {
                    value // i stays i, -i stays -i
                } else {
                    GaussianUnit::One
                }
            }
            CycleType::Type2 => {
                if k <= 1 {
                    GaussianUnit::I
                } else {
                    GaussianUnit::One
                }
            }
        }
    };
    let mut theta = vec![GaussianUnit::Zero; n];
    theta[seq[0]] = GaussianUnit::One;
    for k in 0..len - 1 {
        let (a, b) = (seq[k], seq[k + 1]);
        theta[b] = theta[a] * g.entry(a, b) * target(k).conj();
    }
    // Closing edge must already be consistent; the total cycle value is a
    // switching invariant so this can only fail on a bug.
    let (a, b) = (seq[len - 1], seq[0]);
    debug_assert_eq!(
        theta[a] * g.entry(a, b) * theta[b].conj(),
        target(len - 1),
        "cycle closure"
    );
    // Propagate outward over tree edges, forcing them undirected.
    let mut queue: VecDeque<usize> = seq.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if theta[v].is_zero() {
                theta[v] = theta[u] * g.entry(u, v);
                queue.push_back(v);
            }
        }
    }
    Ok((ty, SwitchingFunction::new(theta)?))
}

/// Switches a canonical two-arc unicyclic graph (or cycle) to the signed
/// graph on the same underlying graph with exactly one negative edge on its
/// cycle.
pub fn to_signed(g: &MixedGraph) -> Result<SignedGraph, SwitchingError> {
    let seq = unique_cycle(g)?;
    let len = seq.len();
    // Locate the two-arc pattern: exactly two arcs, consecutive on the
    // cycle with a shared middle vertex, everything else undirected.
    let arcs: Vec<(usize, usize)> = g.arc_list().collect();
    if arcs.len() != 2 {
        return Err(SwitchingError::NotTypeTwo);
    }
    let (a1, a2) = (arcs[0], arcs[1]);
    let middle = if a1.1 == a2.0 {
        a1.1
    } else if a2.1 == a1.0 {
        a2.1
    } else {
        return Err(SwitchingError::NotTypeTwo);
    };
    if !seq.contains(&middle) {
        return Err(SwitchingError::NotTypeTwo);
    }
    let on_cycle =
        |v: usize| -> bool { seq.contains(&v) };
    for &(t, h) in &arcs {
        if !on_cycle(t) || !on_cycle(h) {
            return Err(SwitchingError::NotTypeTwo);
        }
    }
    let _ = len;
    // theta = i on the middle vertex and on every tree vertex hanging from
    // it, 1 elsewhere: cycle edges land on {1, -1}, tree edges stay 1.
    let n = g.order();
    let mut theta = vec![GaussianUnit::One; n];
    theta[middle] = GaussianUnit::I;
    let mut queue = VecDeque::from([middle]);
    let mut seen = vec![false; n];
    seen[middle] = true;
    for &c in &seq {
        seen[c] = true;
    }
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                theta[v] = GaussianUnit::I;
                queue.push_back(v);
            }
        }
    }
    let switched = switch_matrix(g, &SwitchingFunction::new(theta)?);
    let mut negative = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match switched.entry(u, v) {
                GaussianUnit::MinusOne => negative.push((u, v)),
                GaussianUnit::One | GaussianUnit::Zero => {}
                _ => return Err(SwitchingError::NotTypeTwo),
            }
        }
    }
    if negative.len() != 1 {
        return Err(SwitchingError::NotTypeTwo);
    }
    SignedGraph::new(g.underlying(), &negative).map_err(|_| SwitchingError::NotTypeTwo)
}

/// Decides switching equivalence of two mixed graphs on the same labeled
/// underlying graph, returning a witness when equivalent.
///
/// A shared spanning forest is normalized in both graphs; what remains is
/// one fixed unit per chord (the fundamental cycle value), and the graphs
/// are equivalent exactly when those units agree. Conjugate values i and -i
/// are distinct here: merging them requires a relabeling, which is the
/// search layer's job.
pub fn switching_equivalent(
    g1: &MixedGraph,
    g2: &MixedGraph,
) -> Result<Option<SwitchingFunction>, SwitchingError> {
    if g1.underlying() != g2.underlying() {
        return Err(SwitchingError::UnderlyingMismatch);
    }
    let (theta1, chords) = normalize_spanning_forest(g1);
    let (theta2, _) = normalize_spanning_forest(g2);
    let m1 = switch_matrix(g1, &theta1);
    let m2 = switch_matrix(g2, &theta2);
    for &(u, v) in &chords {
        if m1.entry(u, v) != m2.entry(u, v) {
            return Ok(None);
        }
    }
    // theta2^{-1} . theta1 carries g1 onto g2.
    let witness = theta2.inverse().compose(&theta1);
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_poly_exact;
    use crate::charpoly::char_poly_signed;
    use crate::graph::{cycle, g_t, path, star};
    use GaussianUnit::{MinusI, MinusOne, One, I};

    #[test]
    fn identity_switch_is_identity() {
        let g = cycle(6, 1).unwrap();
        let id = SwitchingFunction::identity(6);
        assert_eq!(apply_switching(&g, &id).unwrap(), g);
    }

    #[test]
    fn single_arc_becomes_edge() {
        let g = MixedGraph::build(2, &[], &[(0, 1)]).unwrap();
        let theta = SwitchingFunction::at_vertex(2, 1, I);
        assert_eq!(apply_switching(&g, &theta).unwrap(), path(2));
    }

    #[test]
    fn invalid_switch_reports_entry() {
        let theta = SwitchingFunction::at_vertex(2, 1, MinusOne);
        let err = apply_switching(&path(2), &theta);
        assert_eq!(
            err,
            Err(SwitchingError::NotMixedRepresentable { u: 0, v: 1 })
        );
    }

    #[test]
    fn moves_match_their_local_rewrites() {
        // Move 2: two arcs into the center become undirected.
        let g = MixedGraph::build(3, &[], &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(sw_move(&g, 2, 1).unwrap(), path(3));
        // Move 1: two arcs through the center reverse.
        let g = MixedGraph::build(3, &[], &[(0, 1), (1, 2)]).unwrap();
        let flipped = MixedGraph::build(3, &[], &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(sw_move(&g, 1, 1).unwrap(), flipped);
        // Move 3: two arcs out of the center become undirected.
        let g = MixedGraph::build(3, &[], &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(sw_move(&g, 3, 1).unwrap(), path(3));
        // Move 4: in-arc plus edge shifts the arc along.
        let g = MixedGraph::build(3, &[(1, 2)], &[(0, 1)]).unwrap();
        let shifted = MixedGraph::build(3, &[(0, 1)], &[(1, 2)]).unwrap();
        assert_eq!(sw_move(&g, 4, 1).unwrap(), shifted);
        // Absent pattern errors.
        assert!(matches!(
            sw_move(&path(3), 4, 1),
            Err(SwitchingError::PatternMismatch { .. })
        ));
    }

    #[test]
    fn forest_normalization_clears_arcs() {
        let p = MixedGraph::build(3, &[], &[(0, 1), (1, 2)]).unwrap();
        let theta = normalize_forest(&p).unwrap();
        let switched = apply_switching(&p, &theta).unwrap();
        assert_eq!(switched.arc_list().count(), 0);
        assert_eq!(switched, path(3));

        // Star with all arcs pointing inward.
        let s = MixedGraph::build(4, &[], &[(1, 0), (2, 0), (3, 0)]).unwrap();
        let theta = normalize_forest(&s).unwrap();
        assert_eq!(apply_switching(&s, &theta).unwrap(), star(3));

        // Already-undirected tree: identity works.
        let theta = normalize_forest(&path(4)).unwrap();
        assert_eq!(apply_switching(&path(4), &theta).unwrap(), path(4));

        assert!(matches!(
            normalize_forest(&cycle(3, 0).unwrap()),
            Err(SwitchingError::NotAForest)
        ));
    }

    #[test]
    fn cycle_canonicalization_matches_value_class() {
        // Undirected cycle: already canonical.
        let c6 = cycle(6, 0).unwrap();
        let (ty, theta) = canonicalize_cycle(&c6).unwrap();
        assert_eq!(ty, CycleType::Type0);
        assert_eq!(theta, SwitchingFunction::identity(6));

        // Three consecutive same-direction arcs: value -i, class Type1.
        let g = MixedGraph::build(5, &[(3, 4), (0, 4)], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.cycle_value(&[0, 1, 2, 3, 4]).unwrap(), MinusI);
        let (ty, theta) = canonicalize_cycle(&g).unwrap();
        assert_eq!(ty, CycleType::Type1);
        let canon = apply_switching(&g, &theta).unwrap();
        // One arc on the first cycle edge, reversed since the value is -i.
        assert_eq!(canon.arc_list().collect::<Vec<_>>(), vec![(1, 0)]);

        // Canonical two-arc cycle stays put.
        let c24 = cycle(4, 2).unwrap();
        let (ty, theta) = canonicalize_cycle(&c24).unwrap();
        assert_eq!(ty, CycleType::Type2);
        assert_eq!(apply_switching(&c24, &theta).unwrap(), c24);

        // A value-i cycle reaches exactly the named canonical form.
        let g = MixedGraph::build(5, &[(1, 2), (2, 3), (3, 4), (0, 4)], &[(0, 1)]).unwrap();
        let rotated = g.relabel(&[2, 3, 4, 0, 1]);
        let (ty, theta) = canonicalize_cycle(&rotated).unwrap();
        assert_eq!(ty, CycleType::Type1);
        let canon = apply_switching(&rotated, &theta).unwrap();
        assert_eq!(canon.arc_list().count(), 1);
        assert_eq!(canon.underlying(), rotated.underlying());

        assert!(canonicalize_cycle(&path(4)).is_err());
    }

    #[test]
    fn unicyclic_canonicalization() {
        // Pendant path with arcs: all tree edges end up undirected.
        let g = MixedGraph::build(
            6,
            &[(0, 1), (1, 2), (2, 3), (0, 3)],
            &[(3, 4), (5, 4)],
        )
        .unwrap();
        let (ty, theta) = canonicalize_unicyclic(&g).unwrap();
        assert_eq!(ty, CycleType::Type0);
        let canon = apply_switching(&g, &theta).unwrap();
        assert_eq!(canon.arc_list().count(), 0);

        // Triangle value class survives a pendant edge.
        let g = MixedGraph::build(4, &[(1, 2), (2, 0)], &[(0, 1), (2, 3)]).unwrap();
        let (ty, theta) = canonicalize_unicyclic(&g).unwrap();
        assert_eq!(ty, CycleType::Type1);
        let canon = apply_switching(&g, &theta).unwrap();
        assert_eq!(canon.arc_list().count(), 1);
        assert_eq!(char_poly_exact(&canon), char_poly_exact(&g));

        assert!(canonicalize_unicyclic(&path(3)).is_err());
    }

    #[test]
    fn to_signed_produces_one_negative_edge() {
        let c24 = cycle(4, 2).unwrap();
        let signed = to_signed(&c24).unwrap();
        assert_eq!(signed.negative_edges().len(), 1);
        assert_eq!(signed.underlying(), &cycle(4, 0).unwrap());
        assert_eq!(
            char_poly_signed(&signed).unwrap(),
            char_poly_exact(&c24)
        );

        // Two-arc six-cycle agrees with its signed form exactly.
        let c26 = cycle(6, 2).unwrap();
        assert_eq!(
            char_poly_signed(&to_signed(&c26).unwrap()).unwrap(),
            char_poly_exact(&c26)
        );

        // The pendant-path family switches to a signed graph too.
        let g3 = g_t(3).unwrap();
        let signed = to_signed(&g3).unwrap();
        assert_eq!(signed.negative_edges().len(), 1);
        assert_eq!(char_poly_signed(&signed).unwrap(), char_poly_exact(&g3));

        assert!(to_signed(&cycle(4, 1).unwrap()).is_err());
    }

    #[test]
    fn equivalence_by_chord_values() {
        // Same value class, arc at different positions: equivalent.
        let a = cycle(7, 1).unwrap();
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        let arc = edges.remove(3);
        let b = MixedGraph::build(7, &edges, &[arc]).unwrap();
        let witness = switching_equivalent(&a, &b).unwrap();
        assert!(witness.is_some());
        assert_eq!(apply_switching(&a, &witness.unwrap()).unwrap(), b);

        // Different classes: not equivalent.
        assert_eq!(
            switching_equivalent(&cycle(4, 0).unwrap(), &cycle(4, 2).unwrap()).unwrap(),
            None
        );

        // Conjugate one-arc cycles are inequivalent at fixed labels.
        let fwd = cycle(5, 1).unwrap();
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.remove(0);
        let rev = MixedGraph::build(5, &edges, &[(1, 0)]).unwrap();
        assert_eq!(switching_equivalent(&fwd, &rev).unwrap(), None);

        // Underlying mismatch is an error.
        assert!(switching_equivalent(&path(3), &cycle(3, 0).unwrap()).is_err());
    }

    #[test]
    fn cycle_values_survive_switching_up_to_conjugation() {
        let g = MixedGraph::build(
            6,
            &[(0, 1), (2, 3), (0, 3)],
            &[(1, 2), (3, 4), (5, 4), (0, 5)],
        )
        .unwrap();
        let cycles = crate::cycles::simple_cycles(&g);
        assert!(!cycles.is_empty());
        for theta in [
            SwitchingFunction::at_vertex(6, 3, I),
            SwitchingFunction::new(vec![I, One, MinusI, One, I, MinusOne]).unwrap(),
        ] {
            if let Ok(switched) = apply_switching(&g, &theta) {
                for c in &cycles {
                    let before = g.cycle_value(&c.vertices).unwrap();
                    let after = switched.cycle_value(&c.vertices).unwrap();
                    // Exact value is preserved for a fixed traversal.
                    assert_eq!(before, after);
                }
            }
        }
    }

    #[test]
    fn switch_round_trip_is_equivalent() {
        let g = cycle(5, 2).unwrap();
        for theta in [
            SwitchingFunction::at_vertex(5, 2, I),
            SwitchingFunction::at_vertex(5, 0, MinusI),
            SwitchingFunction::new(vec![One, I, One, MinusI, I]).unwrap(),
        ] {
            if let Ok(switched) = apply_switching(&g, &theta) {
                let w = switching_equivalent(&g, &switched).unwrap();
                assert!(w.is_some());
            }
        }
    }

    use crate::graph::MixedGraph;
}
