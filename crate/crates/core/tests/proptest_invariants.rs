//! Randomized structural invariants driven by proptest.

use hermispec::charpoly::{char_poly_elementary_guarded, char_poly_exact, Guards};
use hermispec::gauss::GaussianUnit;
use hermispec::graph::MixedGraph;
use hermispec::matrix::HermitianMatrix;
use hermispec::switching::SwitchingFunction;
use proptest::prelude::*;

/// Arbitrary mixed graph on up to eight vertices with bounded corank.
fn mixed_graph_strategy() -> impl Strategy<Value = MixedGraph> {
    (2usize..=8)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let states = proptest::collection::vec(0u8..4, pairs.len());
            (Just(n), Just(pairs), states)
        })
        .prop_map(|(n, pairs, states)| {
            let mut undirected = Vec::new();
            let mut arcs = Vec::new();
            let mut m = 0usize;
            for (&(u, v), &s) in pairs.iter().zip(&states) {
                // Cap the edge count to keep the corank within guards.
                if s != 0 && m < n + 3 {
                    m += 1;
                    match s {
                        1 => undirected.push((u, v)),
                        2 => arcs.push((u, v)),
                        _ => arcs.push((v, u)),
                    }
                }
            }
            MixedGraph::build(n, &undirected, &arcs).expect("simple by construction")
        })
}

fn switching_strategy(n: usize) -> impl Strategy<Value = SwitchingFunction> {
    proptest::collection::vec(0u8..4, n).prop_map(|exps| {
        SwitchingFunction::new(
            exps.into_iter()
                .map(GaussianUnit::from_exponent)
                .collect::<Vec<_>>(),
        )
        .expect("units are nonzero")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermitian_with_zero_diagonal(g in mixed_graph_strategy()) {
        let h = HermitianMatrix::from_graph(&g);
        prop_assert!(h.is_hermitian());
    }

    #[test]
    fn elementary_route_agrees_with_determinant(g in mixed_graph_strategy()) {
        let exact = char_poly_exact(&g);
        let assembled = char_poly_elementary_guarded(&g, Guards::unlimited()).unwrap();
        prop_assert_eq!(exact, assembled);
    }

    #[test]
    fn conjugation_never_moves_the_polynomial(
        (g, theta) in mixed_graph_strategy()
            .prop_flat_map(|g| {
                let n = g.order();
                (Just(g), switching_strategy(n))
            })
    ) {
        let h = HermitianMatrix::from_graph(&g);
        let conj = h.conjugate_by(theta.values());
        prop_assert!(conj.is_hermitian());
        prop_assert_eq!(h.char_poly(), conj.char_poly());
    }

    #[test]
    fn graph_json_round_trip(g in mixed_graph_strategy()) {
        let parsed = MixedGraph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in mixed_graph_strategy()) {
        let all: Vec<usize> = (0..g.order()).collect();
        prop_assert_eq!(g.induced(&all), g);
    }

    #[test]
    fn root_count_never_exceeds_order(g in mixed_graph_strategy()) {
        let phi = char_poly_exact(&g);
        let inside = phi.count_roots_in_i64(-2, 2);
        prop_assert!(inside <= g.order());
        // All eigenvalues live in [-max_degree, max_degree] and surely
        // inside (-n-1, n+1).
        let n = g.order() as i64;
        prop_assert_eq!(phi.count_roots_in_i64(-n - 1, n + 1), g.order());
    }
}
