//! Seeded random generators for test corpora and verification suites.

use crate::gauss::GaussianUnit;
use crate::graph::MixedGraph;
use crate::switching::SwitchingFunction;
use rand::rngs::StdRng;
use rand::Rng;

/// Random mixed graph: a random spanning tree per component plus a few
/// chords, each connection oriented or left undirected at random. The
/// corank stays within the default guards.
pub fn random_mixed_graph(rng: &mut StdRng, n: usize, max_extra: usize) -> MixedGraph {
    assert!(n >= 1);
    let mut undirected: Vec<(usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut used: Vec<(usize, usize)> = Vec::new();
    let push = |rng: &mut StdRng, u: usize, v: usize, und: &mut Vec<(usize, usize)>, arc: &mut Vec<(usize, usize)>| {
        match rng.random_range(0..3) {
            0 => und.push((u.min(v), u.max(v))),
            1 => arc.push((u, v)),
            _ => arc.push((v, u)),
        }
    };
    // Random recursive tree, skipping some attachments to allow forests.
    for v in 1..n {
        if rng.random_range(0..8) == 0 {
            continue; // v starts a new component
        }
        let u = rng.random_range(0..v);
        used.push((u, v));
        push(rng, u, v, &mut undirected, &mut arcs);
    }
    let extra = rng.random_range(0..=max_extra);
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 40 {
        attempts += 1;
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if used.contains(&key) {
            continue;
        }
        used.push(key);
        push(rng, u, v, &mut undirected, &mut arcs);
        added += 1;
    }
    MixedGraph::build(n, &undirected, &arcs).expect("random construction is simple")
}

/// Random connected mixed graph with a prescribed corank.
pub fn random_connected_mixed_graph(rng: &mut StdRng, n: usize, corank: usize) -> MixedGraph {
    // A connected simple graph on n vertices cannot exceed this corank.
    let corank = corank.min(n * (n - 1) / 2 - (n - 1));
    loop {
        let mut undirected: Vec<(usize, usize)> = Vec::new();
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        let mut used: Vec<(usize, usize)> = Vec::new();
        for v in 1..n {
            let u = rng.random_range(0..v);
            used.push((u, v));
            match rng.random_range(0..3) {
                0 => undirected.push((u, v)),
                1 => arcs.push((u, v)),
                _ => arcs.push((v, u)),
            }
        }
        let mut added = 0;
        let mut attempts = 0;
        while added < corank && attempts < 100 {
            attempts += 1;
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            let key = (u.min(v), u.max(v));
            if u == v || used.contains(&key) {
                continue;
            }
            used.push(key);
            match rng.random_range(0..3) {
                0 => undirected.push(key),
                1 => arcs.push((u, v)),
                _ => arcs.push((v, u)),
            }
            added += 1;
        }
        if added == corank {
            return MixedGraph::build(n, &undirected, &arcs).expect("simple by construction");
        }
    }
}

/// Uniformly random switching function.
pub fn random_switching(rng: &mut StdRng, n: usize) -> SwitchingFunction {
    let values = (0..n)
        .map(|_| GaussianUnit::UNITS[rng.random_range(0..4)])
        .collect();
    SwitchingFunction::new(values).expect("units are nonzero")
}

/// Random mixed cycle on n vertices in canonical ring labeling.
pub fn random_mixed_cycle(rng: &mut StdRng, n: usize) -> MixedGraph {
    let mut undirected = Vec::new();
    let mut arcs = Vec::new();
    for i in 0..n {
        let (u, v) = (i, (i + 1) % n);
        match rng.random_range(0..3) {
            0 => undirected.push((u.min(v), u.max(v))),
            1 => arcs.push((u, v)),
            _ => arcs.push((v, u)),
        }
    }
    MixedGraph::build(n, &undirected, &arcs).expect("cycle is simple")
}
