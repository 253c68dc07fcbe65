//! Spec-level invariants beyond the acceptance criteria: independent
//! oracles for the enumeration, value-class trichotomy, parity facts,
//! numeric/exact agreement, and desk-scale determination checks.

use hermispec::canon::underlying_automorphisms;
use hermispec::charpoly::char_poly_exact;
use hermispec::charpoly::char_poly_signed;
use hermispec::enumerate::{
    all_underlying, connected_underlying, enumerate_up_to_switching, orientation_classes,
    SearchConstraints,
};
use hermispec::gauss::GaussianUnit;
use hermispec::graph::{self, MixedGraph};
use hermispec::poly::{cycle_type1_poly, cycle_type2_poly};
use hermispec::registry::Registry;
use hermispec::search::{build_registry, find_mates, theta_mate_poly};
use hermispec::signed::SignedGraph;
use hermispec::spectra::{graph_eigenvalues, is_out, DEFAULT_TOL};
use hermispec::switching::{canonicalize_cycle, switching_equivalent, CycleType};
use hermispec::testing::{random_connected_mixed_graph, random_mixed_cycle, random_switching};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Counts switching classes of mixed graphs on a fixed labeled underlying
/// graph, up to graph automorphisms, by explicit orbit computation over all
/// 4^m unit gain assignments (vertex switchings as generators, then
/// automorphisms). Completely independent of the enumeration code path.
fn orbit_oracle(underlying: &MixedGraph) -> usize {
    let base = underlying.underlying();
    let n = base.order();
    let edges: Vec<(usize, usize)> = base.edge_pairs();
    let m = edges.len();
    assert!(m <= 8, "oracle is exponential in the edge count");
    let states = 4usize.pow(m as u32);
    let mut parent: Vec<usize> = (0..states).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    let digit = |state: usize, e: usize| (state >> (2 * e)) & 3;
    let with_digit = |state: usize, e: usize, d: usize| {
        (state & !(3 << (2 * e))) | (d << (2 * e))
    };
    // Generator 1: switch one vertex by i.
    for state in 0..states {
        for v in 0..n {
            let mut next = state;
            for (e, &(a, b)) in edges.iter().enumerate() {
                let d = digit(state, e);
                let nd = if a == v {
                    (d + 1) % 4
                } else if b == v {
                    (d + 3) % 4
                } else {
                    d
                };
                next = with_digit(next, e, nd);
            }
            union(&mut parent, state, next);
        }
    }
    // Generator 2: underlying automorphisms.
    let autos = underlying_automorphisms(&base);
    for state in 0..states {
        for perm in &autos {
            let mut next = 0usize;
            for (e, &(a, b)) in edges.iter().enumerate() {
                let (ia, ib) = (perm[a], perm[b]);
                let target = edges
                    .iter()
                    .position(|&(x, y)| (x, y) == (ia.min(ib), ia.max(ib)))
                    .expect("automorphism permutes edges");
                let mut d = digit(state, e);
                if ia > ib {
                    d = (4 - d) % 4; // stored orientation flips
                }
                next = with_digit(next, target, d);
            }
            union(&mut parent, state, next);
        }
    }
    // Count orbits containing at least one mixed state (no -1 edge values).
    let mut mixed_roots: std::collections::BTreeSet<usize> = Default::default();
    for state in 0..states {
        if (0..m).all(|e| digit(state, e) != 2) {
            let root = find(&mut parent, state);
            mixed_roots.insert(root);
        }
    }
    mixed_roots.len()
}

#[test]
fn enumeration_matches_orbit_oracle_per_underlying() {
    let cases = [
        graph::cycle(3, 0).unwrap(),
        graph::cycle(4, 0).unwrap(),
        graph::cycle(5, 0).unwrap(),
        graph::cycle(6, 0).unwrap(),
        graph::complete(4),
        graph::theta(2, 3, 3, &[]).unwrap(),
        graph::theta(3, 3, 3, &[]).unwrap(),
        graph::path(5),
        graph::star(3).disjoint_union(&graph::cycle(3, 0).unwrap()),
    ];
    for g in cases {
        let fast = orientation_classes(&g, true).len();
        let oracle = orbit_oracle(&g);
        assert_eq!(fast, oracle, "class count on {:?}", g.to_json());
    }
}

#[test]
fn enumeration_matches_orbit_oracle_order_up_to_six() {
    // Every underlying isomorphism class with m = n - 1 and m = n edges.
    for n in 2..=6usize {
        for m in [n - 1, n] {
            let c = SearchConstraints::exact(n, m);
            let mut fast_total = 0;
            let mut oracle_total = 0;
            for u in all_underlying(&c).unwrap() {
                fast_total += orientation_classes(&u, true).len();
                oracle_total += orbit_oracle(&u);
            }
            let via_stream = enumerate_up_to_switching(&c).unwrap().len();
            assert_eq!(fast_total, oracle_total, "(n,m)=({n},{m})");
            assert_eq!(via_stream, oracle_total, "(n,m)=({n},{m}) streamed");
        }
    }
}

#[test]
fn cycle_trichotomy_matches_value_class() {
    let mut rng = StdRng::seed_from_u64(0xC1C1E);
    for _ in 0..1000 {
        let n = rng.random_range(3..=12);
        let g = random_mixed_cycle(&mut rng, n);
        let value = g
            .cycle_value(&(0..n).collect::<Vec<_>>())
            .expect("ring labels");
        let expected = CycleType::from_value(value).unwrap();
        let (ty, theta) = canonicalize_cycle(&g).unwrap();
        assert_eq!(ty, expected);
        // The canonical form is reachable and has the canonical arc count.
        let canon = hermispec::switching::apply_switching(&g, &theta).unwrap();
        let arcs = canon.arc_list().count();
        assert_eq!(arcs as u8, expected.tag().min(2), "arc count per type");
    }
}

#[test]
fn switching_equivalence_is_an_equivalence_relation() {
    let mut rng = StdRng::seed_from_u64(0xE9);
    for _ in 0..60 {
        let n = rng.random_range(3..=8);
        let g1 = random_connected_mixed_graph(&mut rng, n, 1);
        // Reflexive.
        assert!(switching_equivalent(&g1, &g1).unwrap().is_some());
        // Symmetric and transitive over valid random switches.
        let t1 = random_switching(&mut rng, n);
        let t2 = random_switching(&mut rng, n);
        let s1 = hermispec::switching::apply_switching(&g1, &t1);
        let s2 = hermispec::switching::apply_switching(&g1, &t2);
        if let (Ok(a), Ok(b)) = (s1, s2) {
            assert!(switching_equivalent(&a, &g1).unwrap().is_some());
            assert!(switching_equivalent(&a, &b).unwrap().is_some());
        }
    }
}

#[test]
fn constant_term_parity_facts() {
    use num_bigint::BigInt;
    for n in 3..=12usize {
        let c1 = cycle_type1_poly(n);
        let constant = c1.constant_term().clone();
        if n % 2 == 1 {
            assert!(constant.is_zero(), "odd one-arc cycle constant");
        } else {
            assert!(
                constant == BigInt::from(2) || constant == BigInt::from(-2),
                "even one-arc cycle constant, n={n}: {constant}"
            );
        }
        let signed = SignedGraph::negative_cycle(2 * n).unwrap();
        let sp = hermispec::charpoly::char_poly_signed_guarded(
            &signed,
            hermispec::charpoly::Guards::unlimited(),
        )
        .unwrap();
        let expected = if n % 2 == 1 {
            BigInt::zero()
        } else {
            BigInt::from(4)
        };
        assert_eq!(*sp.constant_term(), expected, "signed 2n-cycle constant");
    }
}

#[test]
fn second_coefficient_counts_edges() {
    let mut rng = StdRng::seed_from_u64(0xC2);
    for _ in 0..100 {
        let n = rng.random_range(2..=9);
        let g = hermispec::testing::random_mixed_graph(&mut rng, n, 2);
        let phi = char_poly_exact(&g);
        let c2 = phi.coeff(n - 2);
        assert_eq!(c2, -num_bigint::BigInt::from(g.size() as i64));
    }
}

#[test]
fn floating_eigenvalues_sit_on_exact_roots() {
    let mut rng = StdRng::seed_from_u64(0xF10A7);
    for _ in 0..60 {
        let n = rng.random_range(2..=10);
        let g = hermispec::testing::random_mixed_graph(&mut rng, n, 3);
        let phi = char_poly_exact(&g);
        let spec = graph_eigenvalues(&g, DEFAULT_TOL).unwrap();
        let dphi = phi.derivative();
        for &lambda in spec.values() {
            let value = phi.eval_f64(lambda).abs();
            let slope = dphi.eval_f64(lambda).abs().max(1.0);
            assert!(
                value <= 1e-7 * slope.max(1.0),
                "phi({lambda}) = {value} too large relative to {slope}"
            );
        }
    }
}

#[test]
fn proper_connected_subgraph_has_smaller_top_eigenvalue() {
    let mut rng = StdRng::seed_from_u64(0xD0);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.random_range(3..=9);
        let corank = rng.random_range(0..=2);
        let g = random_connected_mixed_graph(&mut rng, n, corank);
        // Remove one non-cut vertex to get a proper connected subgraph.
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| g.delete_vertex(v).is_connected())
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let v = candidates[rng.random_range(0..candidates.len())];
        let sub = g.delete_vertex(v);
        if sub.order() == 0 || sub.size() == 0 {
            continue;
        }
        let top_g = graph_eigenvalues(&g.underlying(), DEFAULT_TOL)
            .unwrap()
            .lambda_1();
        let top_s = graph_eigenvalues(&sub.underlying(), DEFAULT_TOL)
            .unwrap()
            .lambda_1();
        assert!(
            top_s < top_g - 1e-9,
            "lambda_1 must strictly drop: {top_s} vs {top_g}"
        );
        checked += 1;
    }
}

#[test]
fn out_decision_agrees_with_floating_check() {
    let mut rng = StdRng::seed_from_u64(0x007);
    for _ in 0..150 {
        let n = rng.random_range(2..=9);
        let g = hermispec::testing::random_mixed_graph(&mut rng, n, 3);
        let exact = is_out(&g);
        let spec = graph_eigenvalues(&g, DEFAULT_TOL).unwrap();
        let floating = spec.lambda_1() >= 2.0 - 1e-9 || spec.min() <= -2.0 + 1e-9;
        assert_eq!(exact, floating, "graph {:?}", g.to_json());
    }
}

#[test]
fn d_tree_is_the_unique_matching_tree() {
    for n in 4..=10usize {
        let target = char_poly_exact(&graph::d_tree(n).unwrap());
        let trees = connected_underlying(n, n - 1, None);
        let matching: Vec<&MixedGraph> = trees
            .iter()
            .filter(|t| char_poly_exact(t) == target)
            .collect();
        assert_eq!(matching.len(), 1, "order {n}");
        assert!(hermispec::canon::underlying_isomorphic(
            matching[0],
            &graph::d_tree(n).unwrap()
        ));
    }
}

#[test]
fn signed_theta_mate_exists() {
    // A one-negative-edge signing of the same theta graph matches the
    // reconstructed mate's spectrum, for each r.
    for r in 2..=6usize {
        let target = theta_mate_poly(r);
        let underlying = graph::theta(3, 3, r, &[]).unwrap();
        let found = underlying.edge_pairs().into_iter().any(|e| {
            let signed = SignedGraph::new(underlying.clone(), &[e]).unwrap();
            char_poly_signed(&signed).unwrap() == target
        });
        assert!(found, "no signed mate at r={r}");
    }
}

#[test]
fn verdicts_stable_against_independent_scan() {
    // Cross-validate the composing searcher with a direct scan over the
    // enumerated graphs of each order/size space.
    let c = SearchConstraints::exact(0, 0);
    for target in [
        graph::path(5),
        graph::cycle(4, 2).unwrap(),
        graph::cycle(5, 0).unwrap(),
        graph::cycle(5, 1).unwrap(),
    ] {
        let report = find_mates(&target, &c).unwrap();
        let space = SearchConstraints::exact(target.order(), target.size());
        let target_poly = char_poly_exact(&target);
        let direct: Vec<MixedGraph> = enumerate_up_to_switching(&space)
            .unwrap()
            .into_iter()
            .filter(|g| {
                char_poly_exact(g) == target_poly
                    && !hermispec::canon::iso_switch_equivalent(g, &target)
            })
            .collect();
        assert_eq!(report.mates.len(), direct.len(), "target {:?}", target.to_json());
    }
}

#[test]
fn odd_cycles_have_no_mates_at_desk_scale() {
    let c = SearchConstraints::exact(0, 0);
    for n in 1..=5usize {
        let order = 2 * n + 1;
        if order < 3 {
            continue;
        }
        let plain = find_mates(&graph::cycle(order, 0).unwrap(), &c).unwrap();
        assert!(
            plain.mates.is_empty(),
            "C_{order} should be determined, found {}",
            plain.mates.len()
        );
        let two_arc = find_mates(&graph::cycle(order, 2).unwrap(), &c).unwrap();
        assert!(
            two_arc.mates.is_empty(),
            "C2_{order} should be determined, found {}",
            two_arc.mates.len()
        );
    }
}

#[test]
fn even_cycle_decompositions_close_desk_scale() {
    // phi(C_2n) = phi(C_n) phi(C2_n) re-checked through actual graphs.
    for n in 3..=8usize {
        let big = char_poly_exact(&graph::cycle(2 * n, 0).unwrap());
        let parts = char_poly_exact(&graph::cycle(n, 0).unwrap())
            .mul(&char_poly_exact(&graph::cycle(n, 2).unwrap()));
        assert_eq!(big, parts);
        let big2 = char_poly_exact(&graph::cycle(2 * n, 2).unwrap());
        assert_eq!(big2, cycle_type2_poly(2 * n));
        assert_eq!(
            big2,
            cycle_type1_poly(n).mul(&cycle_type1_poly(n))
        );
    }
}

#[test]
fn registry_rebuild_reproduces_frozen_data() {
    let rebuilt = build_registry().expect("registry reconstruction");
    let frozen = Registry::frozen();
    assert_eq!(rebuilt, frozen, "reconstruction must be deterministic");
}

#[test]
fn walk_reversal_conjugates_everywhere() {
    let mut rng = StdRng::seed_from_u64(0xAB);
    for _ in 0..200 {
        let n = rng.random_range(3..=10);
        let g = random_connected_mixed_graph(&mut rng, n, 1);
        // Random walk of a few steps.
        let mut walk = vec![rng.random_range(0..n)];
        for _ in 0..6 {
            let u = *walk.last().unwrap();
            let nb = g.neighbors(u);
            walk.push(nb[rng.random_range(0..nb.len())]);
        }
        let forward = g
            .walk_value(&hermispec::graph::WalkSpec::new(walk.clone()))
            .unwrap();
        walk.reverse();
        let backward = g
            .walk_value(&hermispec::graph::WalkSpec::new(walk))
            .unwrap();
        assert_eq!(forward.conj(), backward);
    }
}

#[test]
fn normalize_forest_composition_is_identity_check() {
    let mut rng = StdRng::seed_from_u64(0xF0);
    for _ in 0..100 {
        let n = rng.random_range(2..=10);
        let g = random_connected_mixed_graph(&mut rng, n, 0);
        let theta = hermispec::switching::normalize_forest(&g).unwrap();
        let switched = hermispec::switching::apply_switching(&g, &theta).unwrap();
        assert_eq!(switched.arc_list().count(), 0);
        assert_eq!(switched, g.underlying());
        // Inverting the switch returns the original graph.
        let back =
            hermispec::switching::apply_switching(&switched, &theta.inverse()).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn gaussian_unit_closure_under_entry_products() {
    for a in GaussianUnit::UNITS {
        for b in GaussianUnit::UNITS {
            let c = a * b;
            assert!(!c.is_zero());
            assert_eq!(c.conj(), a.conj() * b.conj());
        }
    }
}
