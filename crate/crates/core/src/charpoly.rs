//! Characteristic polynomials of mixed and signed graphs by three
//! independent routes, vertex/edge deletion recursions and matching counts.

use crate::cycles::{cycles_through_pair, cycles_through_vertex, simple_cycles, SimpleCycle};
use crate::error::CharPolyError;
use crate::gauss::GaussianUnit;
use crate::graph::MixedGraph;
use crate::matrix::HermitianMatrix;
use crate::poly::IntPolynomial;
use crate::signed::SignedGraph;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Size guards for the exponential-time routes.
///
/// The elementary-subgraph assembly and the cycle sums in the deletion
/// recursions enumerate all simple cycles, so they refuse large or
/// cycle-rich inputs unless the caller raises the limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub max_order: usize,
    pub max_corank: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_order: 20,
            max_corank: 4,
        }
    }
}

impl Guards {
    pub fn unlimited() -> Self {
        Guards {
            max_order: usize::MAX,
            max_corank: usize::MAX,
        }
    }

    fn check(&self, g: &MixedGraph) -> Result<(), CharPolyError> {
        let s = g.structure();
        if s.order > self.max_order {
            return Err(CharPolyError::OrderGuard {
                order: s.order,
                max_order: self.max_order,
            });
        }
        if s.corank > self.max_corank {
            return Err(CharPolyError::CorankGuard {
                corank: s.corank,
                max_corank: self.max_corank,
            });
        }
        Ok(())
    }
}

/// Exact characteristic polynomial of a mixed graph, by determinant
/// evaluation and interpolation. Polynomial time; no guard.
pub fn char_poly_exact(g: &MixedGraph) -> IntPolynomial {
    HermitianMatrix::from_graph(g).char_poly()
}

/// Assembles the characteristic polynomial from real elementary subgraphs:
/// each subgraph whose components are single connections or real-valued
/// cycles contributes (-1)^(components + negative cycles) * 2^(cycles) to
/// the coefficient at its order.
pub fn char_poly_elementary(g: &MixedGraph) -> Result<IntPolynomial, CharPolyError> {
    char_poly_elementary_guarded(g, Guards::default())
}

pub fn char_poly_elementary_guarded(
    g: &MixedGraph,
    guards: Guards,
) -> Result<IntPolynomial, CharPolyError> {
    guards.check(g)?;
    let cycles = simple_cycles(g);
    Ok(assemble_from_subgraphs(g, &cycles, |c| {
        match c.value {
            GaussianUnit::One => Some(false),
            GaussianUnit::MinusOne => Some(true),
            _ => None, // non-real cycles never enter
        }
    }))
}

/// Signed-graph characteristic polynomial from elementary subgraphs; every
/// cycle enters, weighted by its sign.
pub fn char_poly_signed(s: &SignedGraph) -> Result<IntPolynomial, CharPolyError> {
    char_poly_signed_guarded(s, Guards::default())
}

pub fn char_poly_signed_guarded(
    s: &SignedGraph,
    guards: Guards,
) -> Result<IntPolynomial, CharPolyError> {
    guards.check(s.underlying())?;
    let cycles = simple_cycles(s.underlying());
    Ok(assemble_from_subgraphs(s.underlying(), &cycles, |c| {
        let sign = s
            .cycle_sign(&c.vertices)
            .expect("cycle edges exist in the signed graph");
        Some(!sign)
    }))
}

/// Exact determinant route for signed graphs, for cross-checking.
pub fn char_poly_signed_exact(s: &SignedGraph) -> IntPolynomial {
    HermitianMatrix::from_signed(s).char_poly()
}

/// Shared elementary-subgraph recursion. `cycle_weight` returns None when a
/// cycle cannot appear and otherwise whether it counts as negative.
fn assemble_from_subgraphs<F>(
    g: &MixedGraph,
    cycles: &[SimpleCycle],
    cycle_weight: F,
) -> IntPolynomial
where
    F: Fn(&SimpleCycle) -> Option<bool>,
{
    let n = g.order();
    // Cycles usable in subgraphs, grouped by their minimum vertex.
    let mut by_min: Vec<Vec<(u64, usize, bool)>> = vec![Vec::new(); n.max(1)];
    for c in cycles {
        if let Some(negative) = cycle_weight(c) {
            by_min[c.min_vertex()].push((c.mask, c.len(), negative));
        }
    }
    let neighbors: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u)).collect();
    // coefficient bucket: contribution[k] accumulates c_k
    let mut contrib = vec![BigInt::zero(); n + 1];
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    struct Ctx<'a> {
        neighbors: &'a [Vec<usize>],
        by_min: &'a [Vec<(u64, usize, bool)>],
        contrib: &'a mut [BigInt],
        n: usize,
    }

    // State: available vertex mask, order used, components, cycles, negatives.
    fn recurse(ctx: &mut Ctx, avail: u64, k: usize, comps: u32, cyc: u32, neg: u32) {
        // Lowest available vertex decides its own fate; when none is left
        // the assignment is complete.
        let v = avail.trailing_zeros() as usize;
        if v >= ctx.n {
            let sign = if (comps + neg).is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            ctx.contrib[k] += sign << cyc;
            return;
        }
        let without_v = avail & !(1 << v);
        // v not in the subgraph
        recurse(ctx, without_v, k, comps, cyc, neg);
        // v matched to a still-available neighbor
        for &u in &ctx.neighbors[v] {
            if without_v & (1 << u) != 0 {
                recurse(ctx, without_v & !(1 << u), k + 2, comps + 1, cyc, neg);
            }
        }
        // v is the minimum vertex of a cycle fully inside the available set
        for &(mask, len, negative) in &ctx.by_min[v] {
            if mask & avail == mask {
                recurse(
                    ctx,
                    avail & !mask,
                    k + len,
                    comps + 1,
                    cyc + 1,
                    neg + u32::from(negative),
                );
            }
        }
    }

    if n > 0 {
        let mut ctx = Ctx {
            neighbors: &neighbors,
            by_min: &by_min,
            contrib: &mut contrib,
            n,
        };
        recurse(&mut ctx, full, 0, 0, 0, 0);
    } else {
        contrib[0] = BigInt::one();
    }

    // phi = x^n + c_1 x^(n-1) + ... + c_n, constant term first.
    let coeffs: Vec<BigInt> = (0..=n).map(|i| contrib[n - i].clone()).collect();
    let poly = IntPolynomial::new(coeffs);
    debug_assert!(poly.is_monic());
    poly
}

/// Vertex deletion recursion: phi(X) = x phi(X-u) - sum over neighbors v of
/// phi(X-u-v) - 2 sum over real cycles Z through u of h(Z) phi(X-V(Z)).
pub fn schwenk_vertex(g: &MixedGraph, u: usize) -> Result<IntPolynomial, CharPolyError> {
    schwenk_vertex_guarded(g, u, Guards::default())
}

pub fn schwenk_vertex_guarded(
    g: &MixedGraph,
    u: usize,
    guards: Guards,
) -> Result<IntPolynomial, CharPolyError> {
    guards.check(g)?;
    let mut poly = IntPolynomial::x().mul(&char_poly_exact(&g.delete_vertex(u)));
    for v in g.neighbors(u) {
        poly = poly.sub(&char_poly_exact(&g.delete_vertices(&[u, v])));
    }
    for z in cycles_through_vertex(g, u) {
        let weight = match z.value {
            GaussianUnit::One => 2,
            GaussianUnit::MinusOne => -2,
            _ => continue,
        };
        let rest = char_poly_exact(&g.delete_vertices(&z.vertices));
        poly = poly.sub(&rest.scale_i64(weight));
    }
    Ok(poly)
}

/// Edge deletion recursion: phi(X) = phi(X-e) - phi(X-u-v) - 2 sum over real
/// cycles Z containing e of h(Z) phi(X-V(Z)).
pub fn schwenk_edge(g: &MixedGraph, u: usize, v: usize) -> Result<IntPolynomial, CharPolyError> {
    schwenk_edge_guarded(g, u, v, Guards::default())
}

pub fn schwenk_edge_guarded(
    g: &MixedGraph,
    u: usize,
    v: usize,
    guards: Guards,
) -> Result<IntPolynomial, CharPolyError> {
    guards.check(g)?;
    assert!(g.adjacent(u, v), "schwenk_edge needs an edge of the graph");
    let mut poly = char_poly_exact(&g.delete_edge(u, v));
    poly = poly.sub(&char_poly_exact(&g.delete_vertices(&[u, v])));
    for z in cycles_through_pair(g, u, v) {
        let weight = match z.value {
            GaussianUnit::One => 2,
            GaussianUnit::MinusOne => -2,
            _ => continue,
        };
        let rest = char_poly_exact(&g.delete_vertices(&z.vertices));
        poly = poly.sub(&rest.scale_i64(weight));
    }
    Ok(poly)
}

/// Number of k-matchings, exact. Memoized recursion over the vertex set.
pub fn count_k_matchings(g: &MixedGraph, k: usize) -> BigInt {
    let n = g.order();
    assert!(n <= 64, "matching counts use 64-bit masks");
    if k == 0 {
        return BigInt::one();
    }
    if 2 * k > n {
        return BigInt::zero();
    }
    let neighbors: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u)).collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<(u64, usize), BigInt> = HashMap::new();

    fn count(
        neighbors: &[Vec<usize>],
        memo: &mut HashMap<(u64, usize), BigInt>,
        avail: u64,
        k: usize,
        n: usize,
    ) -> BigInt {
        if k == 0 {
            return BigInt::one();
        }
        let v = avail.trailing_zeros() as usize;
        if v >= n {
            return BigInt::zero();
        }
        if let Some(hit) = memo.get(&(avail, k)) {
            return hit.clone();
        }
        let without_v = avail & !(1 << v);
        let mut total = count(neighbors, memo, without_v, k, n);
        for &u in &neighbors[v] {
            if without_v & (1 << u) != 0 {
                total += count(neighbors, memo, without_v & !(1 << u), k - 1, n);
            }
        }
        memo.insert((avail, k), total.clone());
        total
    }

    count(&neighbors, &mut memo, full, k, n)
}

/// All matching counts m_0..m_(n/2) at once.
pub fn matching_counts(g: &MixedGraph) -> Vec<BigInt> {
    (0..=g.order() / 2).map(|k| count_k_matchings(g, k)).collect()
}
